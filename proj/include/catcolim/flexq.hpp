#ifndef CATCOLIM_FLEXQ_HPP_
#define CATCOLIM_FLEXQ_HPP_

#include "catcolim/colim2.hpp"

namespace catcolim {

// The standard resolution of a weight by free weights, with the bookkeeping
// needed to name its elements.
struct BarResolution {
  WeightP w;
  Delta2Weight x;
  FreeWeight l0, l1, l2;
};

BarResolution bar_resolution(const WeightP& w);

// F applied to a family map between the generating families of two free
// weights.
TwoNat apply_free(const FreeWeight& src, const FreeWeight& dst,
                  const std::vector<Functor>& family_map);

struct QResult {
  WeightP w;
  WeightP qw;
  TwoNat q;      // qw -> w, strictly natural
  PseudoNat p;   // w ⇝ qw, a section of q
  std::string provenance;
  BarResolution bar;
  CodescentResult codescent;

  struct CrossCheck {
    bool checked = false;
    bool pointwise_iso = false;
    std::string detail;
  };
  CrossCheck cross_check;
};

// the classifier via the codescent object of the resolution; the explicit
// candidate is cross-checked whenever the index is locally discrete
std::variant<QResult, Undecided> q_construction(const WeightP& w, int bound = kDefaultBound);

// closed-form candidate for locally discrete indices: objects at k are the
// pairs (f: j -> k, x in W(j)), with q evaluating the action
struct ExplicitQ {
  WeightP qw;
  TwoNat q;
  PseudoNat p;
  // per k: object decode (j, cell, x)
  std::vector<std::vector<std::array<int, 3>>> obj_decode;
  std::vector<std::map<std::array<int, 3>, int>> obj_encode;
};
ExplicitQ explicit_q_candidate(const WeightP& w);

// factor a pseudonatural transformation out of w through the classifier
TwoNat classify_pseudonatural(const QResult& qr, const PseudoNat& t);

struct ClassifierReport {
  bool ok = true;
  int pseudonaturals = 0;
  std::vector<std::string> failures;
};
// exhaustive: every pseudonatural w ⇝ x factors uniquely through p
ClassifierReport verify_classifier(const QResult& qr, const WeightP& x);

struct FlexibilityVerdict {
  bool flexible = false;
  std::optional<TwoNat> section;
  unsigned long long search_space_size = 0;
  std::shared_ptr<QResult> q;
};

std::variant<FlexibilityVerdict, Undecided> is_flexible(const WeightP& w,
                                                        int bound = kDefaultBound);

// pseudocolimits computed as classifier-weighted colimits
struct PseudocolimitResult {
  ColimResult colim;      // qw ⋆ d
  std::shared_ptr<QResult> q;
};
PseudocolimitResult pseudocolimit(const WeightP& w, const WeightP& d, int bound = kDefaultBound);

enum class BicolimOutcome { equivalence, fails, undecided };

struct BicolimVerdict {
  BicolimOutcome outcome = BicolimOutcome::undecided;
  std::string detail;
  FunctorVerdict comparison;  // set when both sides materialize
};

// the comparison  QW ⋆ D -> W ⋆ D  is an equivalence exactly when W-colimits
// are homotopically meaningful; failure is also detected on presented
// colimits through the word problem
BicolimVerdict bicolimit_check_counit(const QResult& qr, const WeightP& d,
                                      int bound = kDefaultBound);

// a pointwise equivalence of diagrams induces an equivalence on colimits
BicolimVerdict bicolimit_check_invariance(const WeightP& w, const TwoNat& f,
                                          int bound = kDefaultBound);

}  // namespace catcolim

#endif  // CATCOLIM_FLEXQ_HPP_
