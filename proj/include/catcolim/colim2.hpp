#ifndef CATCOLIM_COLIM2_HPP_
#define CATCOLIM_COLIM2_HPP_

#include "catcolim/shapes.hpp"
#include "catcolim/weights.hpp"

namespace catcolim {

// ---- presented weights (locally discrete indices) ----

struct GenAction {
  std::vector<int> vmap;
  std::vector<Path> emap;
};

struct PresWeight {
  Index index;
  std::vector<PresCat> at;
  std::map<std::tuple<int, int, int>, GenAction> action;  // per non-identity 1-cell
};

struct MaterializedWeight {
  WeightP w;
  std::vector<Materialization> mats;
};

std::variant<MaterializedWeight, Undecided> materialize_weight(const PresWeight& pw,
                                                               int bound = kDefaultBound);

void require_locally_discrete(const Index& j, const char* what);

PresWeight present_weight(const WeightP& w);

// A colimit carried as a presentation plus a materialization attempt.
struct ColimWeight {
  PresWeight pres;
  std::optional<MaterializedWeight> mat;
  std::optional<Undecided> undecided;

  bool materialized() const { return mat.has_value(); }
  const WeightP& weight() const;
};

// evaluate a functor out of a materialized presented category from images of
// its vertices and edges
Functor functor_from_generators(const Materialization& m, const Cat& target,
                                const std::vector<int>& vimg, const std::vector<int>& eimg);

using Delta2Weight = Delta2Data<WeightP, TwoNat>;
void check_delta2_weight(const Delta2Weight& x);

// ---- coproducts ----

struct CoproductResult {
  WeightP w;
  std::vector<TwoNat> injections;
  // per index object: result object/arrow -> (summand, local index)
  std::vector<std::vector<std::pair<int, int>>> obj_decode, arr_decode;
  std::string uniqueness;

  TwoNat factorize_1(const WeightP& target, const std::vector<TwoNat>& legs) const;
  Modification factorize_2(const TwoNat& g, const TwoNat& h,
                           const std::vector<Modification>& cells) const;
  int obj_encode(int j, int summand, int local) const;
  int arr_encode(int j, int summand, int local) const;
  std::vector<std::vector<std::map<std::pair<int, int>, int>>> enc_;  // [0]=obj, [1]=arr per j
};
CoproductResult coproduct_weights(const std::vector<WeightP>& summands, const Index& index);

// ---- coinserter ----

struct CoinserterResult {
  ColimWeight built;
  TwoNat cocone;                     // B -> W
  std::vector<NatTransf> generic;    // per j: cocone∘u ⇒ cocone∘v
  WeightP dom_a, dom_b;
  TwoNat u, v;
  std::vector<std::vector<int>> ins_edge;  // per j, per object of A(j)
  std::string uniqueness;

  TwoNat factorize_1(const TwoNat& leg, const std::vector<NatTransf>& cell) const;
  Modification factorize_2(const TwoNat& med1, const TwoNat& med2,
                           const Modification& rho) const;
};
CoinserterResult coinserter(const TwoNat& u, const TwoNat& v, int bound = kDefaultBound);

// ---- coequifier ----

struct CoequifierResult {
  ColimWeight built;
  TwoNat cocone;  // B -> W
  Modification phi, psi;
  std::string uniqueness;

  TwoNat factorize_1(const TwoNat& leg) const;
  Modification factorize_2(const TwoNat& med1, const TwoNat& med2,
                           const Modification& rho) const;
};
CoequifierResult coequifier(const Modification& phi, const Modification& psi,
                            int bound = kDefaultBound);

// ---- coinverter ----

struct CoinverterResult {
  ColimWeight built;
  TwoNat cocone;                         // B -> W
  std::vector<std::vector<int>> inverse_witness;  // per j, per object of A(j)
  std::vector<std::vector<int>> inv_edge;         // per j, per object of A(j); -1 on identities
  Modification alpha;
  std::string uniqueness;

  TwoNat factorize_1(const TwoNat& leg) const;  // leg must invert alpha
  Modification factorize_2(const TwoNat& med1, const TwoNat& med2,
                           const Modification& rho) const;
};
CoinverterResult coinverter(const Modification& alpha, int bound = kDefaultBound);

// 2-dimensional aspect: precomposition with the cocone is fully faithful on
// the strict hom-categories into a test weight
struct FullyFaithfulReport {
  bool ok = true;
  std::string detail;
};
FullyFaithfulReport coinverter_two_dimensional(const CoinverterResult& r, const WeightP& test);

bool is_reflexive(const Modification& alpha);
bool is_liberal(const TwoNat& t);

// ---- codescent objects ----

struct LaxCocone {
  WeightP vertex;
  TwoNat leg;                    // a0 -> vertex
  std::vector<NatTransf> cell;   // per j: leg∘d ⇒ leg∘c
};
void check_lax_cocone(const Delta2Weight& x, const LaxCocone& c, bool invertible);

struct CodescentResult {
  ColimWeight built;
  LaxCocone cocone;
  Delta2Weight diagram;
  bool inverted = false;  // the generic cell was localized
  std::vector<std::vector<int>> ins_edge;  // per j, per object of a1(j)
  std::vector<std::vector<int>> inv_edge;  // set when inverted
  std::string uniqueness;

  TwoNat factorize_1(const LaxCocone& test) const;
  Modification factorize_2(const LaxCocone& c1, const LaxCocone& c2, const TwoNat& m1,
                           const TwoNat& m2, const Modification& rho) const;
};
CodescentResult reflexive_lax_codescent(const Delta2Weight& x, int bound = kDefaultBound);
CodescentResult reflexive_codescent(const Delta2Weight& x, int bound = kDefaultBound);

// ---- coproducts as filtered colimits of finite subcoproducts ----

struct FilteredCoproductResult {
  Cat subset_poset;                       // nonempty subsets ordered by inclusion
  std::vector<std::vector<int>> subsets;  // per poset object, member summands
  std::vector<CoproductResult> stages;    // subcoproduct per subset
  WeightP colimit;
  CoproductResult direct;
  TwoNat comparison;  // colimit -> direct coproduct
  bool comparison_is_iso = false;
};
FilteredCoproductResult coproduct_as_filtered(const std::vector<WeightP>& family,
                                              const Index& index, int bound = kDefaultBound);

// the poset of nonempty subsets of {0..n-1}, ordered by inclusion
Cat subset_poset_cat(int n);

// ---- universal-property verification over a corpus ----

enum class ColimKind { coproduct, coinserter, coequifier, coinverter, lax_codescent, codescent };

struct UniversalReport {
  bool ok = true;
  int cases = 0;
  std::vector<std::string> failures;
};

UniversalReport verify_universal(const CoproductResult& r, const std::vector<WeightP>& corpus);
UniversalReport verify_universal(const CoinserterResult& r, const std::vector<WeightP>& corpus);
UniversalReport verify_universal(const CoequifierResult& r, const std::vector<WeightP>& corpus);
UniversalReport verify_universal(const CoinverterResult& r, const std::vector<WeightP>& corpus);
UniversalReport verify_universal(const CodescentResult& r, const std::vector<WeightP>& corpus);

// splitting of idempotent transformations, pointwise
struct WeightSplitResult {
  WeightP image;
  TwoNat retraction;
  TwoNat section;
};
WeightSplitResult split_idempotent_weight(const TwoNat& e);

}  // namespace catcolim

#endif  // CATCOLIM_COLIM2_HPP_
