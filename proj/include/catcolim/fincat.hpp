#ifndef CATCOLIM_FINCAT_HPP_
#define CATCOLIM_FINCAT_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace catcolim {

struct invalid_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Arrow {
  std::string id;
  int src = -1;
  int tgt = -1;
};

// A finite category given by an explicit composition table.  Objects and
// arrows are identified by opaque strings; every comparison goes through
// identifiers, never through structural guessing.  Instances are immutable
// after validation and shared by pointer.
class FinCat {
 public:
  FinCat() = default;

  int object_count() const { return static_cast<int>(objects_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }

  const std::string& object(int i) const { return objects_[i]; }
  const Arrow& arrow(int i) const { return arrows_[i]; }

  int object_index(const std::string& id) const;
  int arrow_index(const std::string& id) const;

  int identity(int obj) const { return identity_[obj]; }
  bool is_identity(int arr) const { return identity_[arrows_[arr].src] == arr && arrows_[arr].src == arrows_[arr].tgt; }

  bool composable(int g, int f) const { return arrows_[f].tgt == arrows_[g].src; }

  // g∘f, or -1 when not composable.
  int compose(int g, int f) const;

  // All (g, f) with g∘f defined, lexicographic in (g, f) identifiers.
  std::vector<std::pair<int, int>> composable_pairs() const;

  std::vector<int> arrows_between(int src, int tgt) const;

  // Inverse of an arrow if it has one.
  std::optional<int> inverse(int arr) const;
  bool is_iso_arrow(int arr) const { return inverse(arr).has_value(); }

  // Partition of objects into isomorphism classes (representative-indexed).
  std::vector<int> iso_class_of_objects() const;

  // Used by validate_category and the shape builders.
  static FinCat make_unchecked(std::vector<std::string> objects,
                               std::vector<Arrow> arrows,
                               std::vector<int> identity,
                               std::unordered_map<std::int64_t, int> comp);

  std::int64_t comp_key(int g, int f) const {
    return static_cast<std::int64_t>(g) * arrow_count() + f;
  }

 private:
  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<int> identity_;  // per object, index of its identity arrow
  std::unordered_map<std::int64_t, int> comp_;
  std::unordered_map<std::string, int> obj_index_;
  std::unordered_map<std::string, int> arr_index_;
};

using Cat = std::shared_ptr<const FinCat>;

// Raw material for validate_category.
struct RawCategory {
  std::vector<std::string> objects;
  // (id, src, tgt)
  std::vector<std::array<std::string, 3>> arrows;
  // object id -> identity arrow id
  std::vector<std::pair<std::string, std::string>> identities;
  // (g, f, g∘f)
  std::vector<std::array<std::string, 3>> composites;
};

// Checks identity laws, totality of composition on composable pairs and
// associativity; throws invalid_input naming the first violated law and the
// offending arrows.
Cat validate_category(const RawCategory& raw);

// Re-runs the law checks on an already built category.
void recheck_laws(const FinCat& c);

struct Functor {
  Cat dom;
  Cat cod;
  std::vector<int> obj_map;  // per dom object, cod object index
  std::vector<int> arr_map;  // per dom arrow, cod arrow index

  int on_obj(int o) const { return obj_map[o]; }
  int on_arr(int a) const { return arr_map[a]; }
};

Functor identity_functor(const Cat& c);
Functor compose(const Functor& g, const Functor& f);
bool equal(const Functor& f, const Functor& g);

// Checks endpoint, identity and composition preservation; throws on failure.
void check_functor(const Functor& f);
bool is_functor(const Functor& f, std::string* why = nullptr);

bool is_identity_on_objects(const Functor& f);
bool is_bijective_on_objects(const Functor& f);

struct NatTransf {
  Functor dom;
  Functor cod;                // parallel
  std::vector<int> comp;      // per dom-category object: arrow index in cod category

  int at(int obj) const { return comp[obj]; }
};

NatTransf identity_transf(const Functor& f);
bool equal(const NatTransf& a, const NatTransf& b);
void check_natural(const NatTransf& t);
bool is_natural(const NatTransf& t, std::string* why = nullptr);
// vertical composite b∘a
NatTransf vcompose(const NatTransf& b, const NatTransf& a);
// whiskering: (h∘t) for h after both legs of t, and (t∘e) for e before
NatTransf whisker_left(const Functor& h, const NatTransf& t);
NatTransf whisker_right(const NatTransf& t, const Functor& e);
bool is_invertible(const NatTransf& t);
NatTransf invert(const NatTransf& t);

// Truncated simplicial data with two levels of faces and all degeneracies.
// a1 plays arrows, a0 objects, a2 composable pairs; d/c are source/target
// style faces, m the composition face, p/q its outer faces, i the identity
// degeneracy and l/r the two level-2 degeneracies.
template <class Ob, class Map>
struct Delta2Data {
  Ob a0, a1, a2;
  Map d, c, i;     // d, c: a1 -> a0; i: a0 -> a1
  Map p, m, q;     // a2 -> a1
  Map l, r;        // a1 -> a2
};

using Delta2Cat = Delta2Data<Cat, Functor>;

// The identities that make Delta2Data a truncated simplicial object:
//   d∘i = c∘i = id,  d∘m = d∘p,  c∘m = c∘q,  d∘q = c∘p,
//   m∘l = m∘r = id,  q∘l = id,  p∘l = i∘d,  p∘r = id,  q∘r = i∘c,
//   l∘i = r∘i.
template <class Ob, class Map, class ComposeFn, class EqualFn, class IdFn>
void check_delta2(const Delta2Data<Ob, Map>& x, ComposeFn comp, EqualFn eq, IdFn ident,
                  const std::string& what) {
  auto require = [&](bool ok, const char* law) {
    if (!ok) throw invalid_input(what + ": simplicial identity violated: " + law);
  };
  require(eq(comp(x.d, x.i), ident(x.a0)), "d∘i = id");
  require(eq(comp(x.c, x.i), ident(x.a0)), "c∘i = id");
  require(eq(comp(x.d, x.m), comp(x.d, x.p)), "d∘m = d∘p");
  require(eq(comp(x.c, x.m), comp(x.c, x.q)), "c∘m = c∘q");
  require(eq(comp(x.d, x.q), comp(x.c, x.p)), "d∘q = c∘p");
  require(eq(comp(x.m, x.l), ident(x.a1)), "m∘l = id");
  require(eq(comp(x.m, x.r), ident(x.a1)), "m∘r = id");
  require(eq(comp(x.q, x.l), ident(x.a1)), "q∘l = id");
  require(eq(comp(x.p, x.l), comp(x.i, x.d)), "p∘l = i∘d");
  require(eq(comp(x.p, x.r), ident(x.a1)), "p∘r = id");
  require(eq(comp(x.q, x.r), comp(x.i, x.c)), "q∘r = i∘c");
  require(eq(comp(x.l, x.i), comp(x.r, x.i)), "l∘i = r∘i");
}

void check_delta2_cat(const Delta2Cat& x);

// ---- elementary constructions ----

Cat discrete(const std::vector<std::string>& labels);
Cat discrete(int n);  // labels "0".."n-1"

struct ProductResult {
  Cat cat;
  Functor proj1;
  Functor proj2;
};
ProductResult product(const Cat& a, const Cat& b);
// The mediating functor <f, g> into a product built by product().
Functor pair_into_product(const ProductResult& p, const Functor& f, const Functor& g);

struct ArrowCatResult {
  Cat cat;        // objects: arrows of a; arrows: commuting squares
  Functor p, q;   // source / target projections
  NatTransf lambda;  // generic arrow p ⇒ q
  // the unique t with p∘t = dom(eta), q∘t = cod(eta), lambda∘t = eta
  Functor classify(const NatTransf& eta) const;
};
ArrowCatResult arrow_category(const Cat& a);

struct SplitResult {
  Cat image;
  Functor retraction;  // r: dom -> image
  Functor section;     // s: image -> dom,  s∘r = e, r∘s = id
};
SplitResult split_idempotent(const Functor& e);

enum class FunctorClass { iso, surjective_equivalence, equivalence, none };

struct FunctorVerdict {
  FunctorClass cls = FunctorClass::none;
  bool full = false;
  bool faithful = false;
  bool surjective_on_objects = false;
  bool essentially_surjective = false;
  std::optional<Functor> inverse;             // when iso
  // per cod object: a dom object whose image is isomorphic to it (when eso)
  std::vector<int> eso_witness;
  std::string detail;
};

FunctorVerdict is_isomorphism(const Functor& f);
FunctorVerdict is_equivalence(const Functor& f);

Delta2Cat truncated_nerve(const Cat& a);

// Disjoint union; ids get "s<k>." prefixes per summand.
struct CoproductCatResult {
  Cat cat;
  std::vector<Functor> injections;
};
CoproductCatResult coproduct_cats(const std::vector<Cat>& summands);

}  // namespace catcolim

#endif  // CATCOLIM_FINCAT_HPP_
