#ifndef CATCOLIM_WEIGHTS_HPP_
#define CATCOLIM_WEIGHTS_HPP_

#include <tuple>

#include "catcolim/present.hpp"

namespace catcolim {

// A finite strict 2-category: hom-categories with strictly associative and
// unital composition.  A locally discrete instance has every hom discrete.
class Index2Cat {
 public:
  std::vector<std::string> objects;

  int object_count() const { return static_cast<int>(objects.size()); }
  int object_index(const std::string& id) const;

  const Cat& hom(int j, int k) const { return hom_[j * object_count() + k]; }
  int identity_cell(int j) const { return id_cell_[j]; }

  // object-level composition g∘f for f in hom(j,k), g in hom(k,l)
  int compose_cell(int j, int k, int l, int f, int g) const;
  // horizontal composition of 2-cells a: f=>f' in hom(j,k), b: g=>g' in hom(k,l)
  int compose_2cell(int j, int k, int l, int a, int b) const;

  bool locally_discrete() const;

  // all non-identity 1-cells as (j, k, cell)
  std::vector<std::array<int, 3>> one_cells(bool include_identities = false) const;

  static std::shared_ptr<const Index2Cat> make(
      std::vector<std::string> objects, std::vector<Cat> hom_matrix,
      std::vector<int> identity_cells,
      std::map<std::tuple<int, int, int, int, int>, int> cell_comp,
      std::map<std::tuple<int, int, int, int, int>, int> twocell_comp);

 private:
  std::vector<Cat> hom_;
  std::vector<int> id_cell_;
  // (j,k,l,f,g) -> g∘f at object / arrow level
  std::map<std::tuple<int, int, int, int, int>, int> cell_comp_;
  std::map<std::tuple<int, int, int, int, int>, int> twocell_comp_;
  void check() const;
};

using Index = std::shared_ptr<const Index2Cat>;

Index opposite(const Index& j);
// structural equality of finite categories and of index 2-categories
bool equal_cats(const FinCat& a, const FinCat& b);
bool equal_index(const Index2Cat& a, const Index2Cat& b);
// 1-cells are the arrows of `base`, only identity 2-cells
Index locally_discrete_index(const Cat& base);
Index discrete_index(const std::vector<std::string>& obs);
Index terminal_index();

// A 2-functor from an index 2-category into finite categories.
struct Weight {
  Index index;
  std::vector<Cat> at;
  // per 1-cell (j,k,cell): its action functor at(j) -> at(k)
  std::map<std::tuple<int, int, int>, Functor> action;
  // per non-identity 2-cell (j,k,homarrow): a transformation act(f) => act(g)
  std::map<std::tuple<int, int, int>, NatTransf> action2;

  const Functor& act(int j, int k, int cell) const;
  NatTransf act2(int j, int k, int homarrow) const;
};

using WeightP = std::shared_ptr<const Weight>;

WeightP make_weight(Weight w);                // validates 2-functoriality
WeightP representable(const Index& j, int obj);
WeightP constant_weight(const Index& j, const Cat& value);
WeightP terminal_weight(const Index& j);
WeightP initial_weight(const Index& j);

struct TwoNat {
  WeightP dom, cod;
  std::vector<Functor> comp;  // per index object
};

struct CheckReport {
  bool ok = true;
  std::vector<std::string> violations;
};

TwoNat identity_two_nat(const WeightP& w);
TwoNat compose(const TwoNat& g, const TwoNat& f);
bool equal(const TwoNat& a, const TwoNat& b);
CheckReport check_two_natural(const TwoNat& t);
void require_two_natural(const TwoNat& t);

struct PseudoNat {
  WeightP dom, cod;
  std::vector<Functor> comp;
  // per non-identity 1-cell (j,k,cell): invertible  cod.act(f)∘t_j => t_k∘dom.act(f)
  std::map<std::tuple<int, int, int>, NatTransf> coh;

  NatTransf coherence(int j, int k, int cell) const;  // identity cells synthesized
};

CheckReport check_pseudonatural(const PseudoNat& t);
PseudoNat as_pseudo(const TwoNat& t);
bool equal(const PseudoNat& a, const PseudoNat& b);
// g∘t for 2-natural g after pseudonatural t
PseudoNat compose_two_after_pseudo(const TwoNat& g, const PseudoNat& t);
// composite of two pseudonatural transformations
PseudoNat compose_pseudo(const PseudoNat& g, const PseudoNat& t);
// a pseudonatural section of a pointwise surjective equivalence
PseudoNat pseudo_section(const TwoNat& f);

struct Modification {
  TwoNat dom, cod;
  std::vector<NatTransf> comp;  // per index object
};

CheckReport check_modification(const Modification& m);

// pointwise product with diagonal action
struct WeightProductResult {
  WeightP w;
  TwoNat proj1, proj2;
};
WeightProductResult product_weights(const WeightP& a, const WeightP& b);
TwoNat pair_into_product(const WeightProductResult& p, const TwoNat& f, const TwoNat& g);

bool pointwise_isomorphism(const TwoNat& t);
FunctorClass pointwise_class(const TwoNat& t);  // weakest component verdict

// ---- the free / restrict adjunction along ob J -> J ----

// restriction to the discrete sub-2-category on the objects
WeightP restrict_weight(const WeightP& w);

struct FreeWeight {
  WeightP w;        // on the full index
  WeightP family;   // the input, over the discrete index
  Index index;
  // decode tables: at each k, object o of w->at[k] is (j, cell in hom(j,k), object of family(j))
  std::vector<std::vector<std::array<int, 3>>> obj_decode;
  std::vector<std::vector<std::array<int, 3>>> arr_decode;  // (j, hom arrow, family arrow)
  int obj_encode(int k, int j, int cell, int y) const;
  int arr_encode(int k, int j, int homarrow, int m) const;

  std::vector<std::vector<std::map<std::pair<int, int>, int>>> obj_enc_, arr_enc_;
};

FreeWeight free_on_family(const Index& j, const WeightP& family);
// counit FUW -> W
TwoNat counit_free(const FreeWeight& fuw, const WeightP& w);
// unit of the adjunction at a family: per-object functors Y(j) -> (UFY)(j)
std::vector<Functor> unit_family(const FreeWeight& fy);

// ---- weighted colimits ----

// A diagram over J is a weight over opposite(J).
struct ColimResult {
  PresCat pres;
  std::optional<Materialization> mat;
  std::optional<Undecided> undecided;
  Cat cat;  // set when materialized

  // per index object j: the product W(j) x D(j) and the curried cocone leg
  std::vector<ProductResult> legs_dom;
  std::vector<Functor> cocone;  // W(j) x D(j) -> cat

  // summand bookkeeping: the glued coproduct category and its pieces
  Cat total;
  std::vector<Functor> inject;        // legs_dom[j].cat -> total
  CatCoequalizer glue;
  std::vector<std::pair<int, int>> obj_decode;  // total object -> (summand, local)
  std::vector<std::pair<int, int>> arr_decode;

  // mediating functor for a test cocone; verifies cocone compatibility and
  // mediator uniqueness on generators
  Functor factorize(const std::vector<Functor>& legs, const Cat& target) const;
};

ColimResult weighted_colimit(const WeightP& w, const WeightP& d, int bound = kDefaultBound);

// induced map W ⋆ D -> V ⋆ D from t: W -> V (both colimits materialized)
Functor colimit_map_weight(const ColimResult& wd, const ColimResult& vd, const TwoNat& t);
// induced map W ⋆ D -> W ⋆ E from f: D -> E
Functor colimit_map_diagram(const ColimResult& wd, const ColimResult& we, const TwoNat& f);

// ---- exhaustive enumeration (small instances) ----

std::vector<Functor> enumerate_functors(const Cat& a, const Cat& b);
std::vector<TwoNat> enumerate_two_naturals(const WeightP& w, const WeightP& v);
std::vector<PseudoNat> enumerate_pseudonaturals(const WeightP& w, const WeightP& v,
                                                size_t cap = 2000000);
std::vector<NatTransf> enumerate_transfs(const Functor& f, const Functor& g);
std::vector<Modification> enumerate_modifications(const TwoNat& s, const TwoNat& t);

// hom-category of the strict functor 2-category between two weights
struct HomCat {
  Cat cat;
  std::vector<TwoNat> objs;
  std::vector<Modification> arrs;
};
HomCat hom_category(const WeightP& a, const WeightP& b);

}  // namespace catcolim

#endif  // CATCOLIM_WEIGHTS_HPP_
