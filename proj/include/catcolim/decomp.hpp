#ifndef CATCOLIM_DECOMP_HPP_
#define CATCOLIM_DECOMP_HPP_

#include "catcolim/flexq.hpp"

namespace catcolim {

// transformation data detached from its endpoints, as stored in certificates
struct RawFunctor {
  std::vector<int> obj, arr;
};
struct RawTwoNat {
  std::vector<RawFunctor> comp;
};
RawTwoNat strip(const TwoNat& t);
// reattach and validate 2-naturality
TwoNat attach(const RawTwoNat& r, const WeightP& dom, const WeightP& cod);

enum class NodeKind {
  leaf_coproduct_of_representables,
  coproduct,
  filtered_subcoproducts,
  reflexive_lax_codescent,
  reflexive_codescent,
  idempotent_splitting,
};

std::string node_kind_name(NodeKind k);
NodeKind node_kind_from_name(const std::string& s);

struct DecompNode {
  NodeKind kind = NodeKind::leaf_coproduct_of_representables;
  std::vector<std::shared_ptr<DecompNode>> children;

  // leaves and filtered nodes: (index object, multiplicity) summand list
  std::vector<std::pair<int, int>> summands;
  // codescent nodes: the faces d,c,i,p,m,q,l,r between the children [a0,a1,a2]
  std::vector<RawTwoNat> faces;
  // splitting nodes: the idempotent on the single child
  RawTwoNat idem;

  WeightP stored;       // the weight this node evaluated to when built
  RawTwoNat to_stored;  // isomorphism from the recomputed value onto stored

  std::string sift_note;  // sifted-certificate | absolute | filtered
  std::string flex_note;
  std::string spot_note;
};
using NodeP = std::shared_ptr<DecompNode>;

struct DecompTree {
  NodeP root;
  WeightP target;
  RawTwoNat root_iso;  // stored root -> target
  unsigned seed = 1;
  int arity_bound = 2;
  int bound = kDefaultBound;
};

int tree_depth_above_leaves(const NodeP& node);

// ---- siftedness certification ----

struct SiftedCertificate {
  bool ok = false;
  bool has_preserved_terminal = false;
  int terminal_object = -1;
  struct Comparison {
    int j = -1, k = -1;
    bool iso = false;
  };
  std::vector<Comparison> battery;
  bool empty_product_checked = false;
  bool empty_product_ok = true;
  std::optional<std::pair<int, int>> counterexample;
  std::string scope_note;
};

SiftedCertificate sifted_certify(const WeightP& w, int bound = kDefaultBound);

// ---- decomposition ----

DecompTree decompose_flexible(const WeightP& w, const FlexibilityVerdict& verdict,
                              int bound = kDefaultBound);

DecompTree refine_to_finite_coproducts(const DecompTree& tree, int arity_bound = 2);

struct EvalOutcome {
  bool ok = true;
  WeightP root_value;
  std::optional<TwoNat> iso_root_to_stored;
  std::vector<std::string> failures;
};
EvalOutcome evaluate_tree(const DecompTree& tree);

struct VerifyOptions {
  bool spot_checks = true;
  bool check_flexibility = true;
  unsigned seed = 1;
  int bound = kDefaultBound;
};

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> clauses;  // one line per verified clause
  std::vector<std::string> failures;
  int depth = 0;
};

VerifyReport verify_certificate(const DecompTree& tree, const WeightP& w,
                                const VerifyOptions& opt = {});

// a pointwise-discrete diagram over the opposite simplex index built from the
// chains of a category (shares hom-categories with the given opposite index)
WeightP nerve_diagram(const Index& delta2op, const Cat& a);

// seeded generator of small categories: free categories on acyclic quivers,
// optionally quotiented by a parallel-path relation
struct Rng {
  unsigned long long state;
  explicit Rng(unsigned long long seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  unsigned next(unsigned bound);  // uniform in [0, bound)
};
Cat random_category(Rng& rng, int max_objects = 5, int max_arrows = 12);

}  // namespace catcolim

#endif  // CATCOLIM_DECOMP_HPP_
