#ifndef CATCOLIM_SHAPES_HPP_
#define CATCOLIM_SHAPES_HPP_

#include "catcolim/weights.hpp"

namespace catcolim {
namespace shapes {

// objects x, y and one arrow a: x -> y
Cat walking_arrow();
// x and y with mutually inverse e, inv(e)
Cat walking_iso();
// one object z with an idempotent e
Cat walking_idempotent();
// x, y with parallel s, t: x -> y
Cat parallel_pair();
// linear order on n objects "0" < ... < "n-1"
Cat chain(int n);
// exactly one arrow between any ordered pair of objects
Cat indiscrete(const std::vector<std::string>& labels);
Cat indiscrete(int n);
// objects a, b, c with f: a -> c and g: b -> c
Cat cospan();

// the three-object truncation of the simplex category, locally discrete;
// 1-cells are the monotone maps, named by their value rows (e.g. "m01")
Index delta2_index();
Index walking_arrow_index();
Index parallel_pair_index();
Index cospan_index();

// the weight sending [i] to the (i+1)-chain (lax-codescent shape)
WeightP lax_codescent_weight(const Index& delta2);
// the weight sending [i] to the indiscrete category on i+1 objects
WeightP codescent_weight(const Index& delta2);

// a finite category as a weight over the one-object index
WeightP as_weight(const Index& terminal, const Cat& c);
TwoNat as_two_nat(const WeightP& a, const WeightP& b, const Functor& f);

// lift a simplicial category diagram to weights over the one-object index
Delta2Data<WeightP, TwoNat> lift_delta2(const Index& terminal, const Delta2Cat& x);

// monotone maps [a] -> [b] on {0..a} -> {0..b}, lexicographically ordered
std::vector<std::vector<int>> monotone_maps(int a, int b);
// value row of a simplex-index 1-cell, recovered from its name
std::vector<int> monotone_of_cell(const std::string& name);

}  // namespace shapes
}  // namespace catcolim

#endif  // CATCOLIM_SHAPES_HPP_
