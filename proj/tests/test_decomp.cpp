#include "doctest.h"

#include <functional>

#include "catcolim/decomp.hpp"

using namespace catcolim;

namespace {

FlexibilityVerdict flex_of(const WeightP& w) {
  auto v = is_flexible(w);
  REQUIRE(std::holds_alternative<FlexibilityVerdict>(v));
  return std::get<FlexibilityVerdict>(v);
}

}  // namespace

TEST_CASE("sifted certification") {
  Index d2 = shapes::delta2_index();
  SUBCASE("the lax codescent weight is sifted on the battery") {
    SiftedCertificate c = sifted_certify(shapes::lax_codescent_weight(d2));
    CHECK(c.ok);
    CHECK(c.has_preserved_terminal);
    CHECK(c.battery.size() == 9);
  }
  SUBCASE("the codescent weight is sifted on the battery") {
    SiftedCertificate c = sifted_certify(shapes::codescent_weight(d2));
    CHECK(c.ok);
    CHECK(c.has_preserved_terminal);
  }
  SUBCASE("the conical binary-coproduct weight is not sifted") {
    Index disc2 = discrete_index({"a", "b"});
    SiftedCertificate c = sifted_certify(terminal_weight(disc2));
    CHECK_FALSE(c.ok);
    CHECK(c.counterexample.has_value());
  }
}

TEST_CASE("decomposition round trip over the walking arrow index") {
  Index ia = shapes::walking_arrow_index();
  std::vector<WeightP> fixtures;
  fixtures.push_back(representable(ia, 0));
  fixtures.push_back(representable(ia, 1));
  fixtures.push_back(coproduct_weights({representable(ia, 0), representable(ia, 1)}, ia).w);
  for (const auto& w : fixtures) {
    FlexibilityVerdict v = flex_of(w);
    REQUIRE(v.flexible);
    DecompTree tree = decompose_flexible(w, v);
    CHECK(tree_depth_above_leaves(tree.root) == 3);
    EvalOutcome ev = evaluate_tree(tree);
    REQUIRE(ev.ok);
    TwoNat stored_to_w = attach(tree.root_iso, tree.root->stored, w);
    CHECK(pointwise_isomorphism(stored_to_w));
    CHECK(pointwise_isomorphism(compose(stored_to_w, *ev.iso_root_to_stored)));
  }
}

TEST_CASE("decomposition over the terminal index is degenerate") {
  Index one = terminal_index();
  WeightP w = constant_weight(one, shapes::walking_arrow());
  FlexibilityVerdict v = flex_of(w);
  REQUIRE(v.flexible);
  // the classifier collapses and the splitting idempotent is an isomorphism
  CHECK(is_isomorphism(v.q->q.comp[0]).cls == FunctorClass::iso);
  DecompTree tree = decompose_flexible(w, v);
  EvalOutcome ev = evaluate_tree(tree);
  REQUIRE(ev.ok);
  CHECK(pointwise_isomorphism(compose(attach(tree.root_iso, tree.root->stored, w),
                                      *ev.iso_root_to_stored)));
}

TEST_CASE("leaves carry the nerve-level multiplicities") {
  Index ia = shapes::walking_arrow_index();
  WeightP w = representable(ia, 0);
  FlexibilityVerdict v = flex_of(w);
  DecompTree tree = decompose_flexible(w, v);
  // stage-2 node: the classifier as a codescent of resolution levels
  REQUIRE(tree.root->children.size() == 1);
  const NodeP& qw = tree.root->children[0];
  REQUIRE(qw->children.size() == 3);
  // the level-0 leaf multiplicities are the sizes of the restricted weight
  const NodeP& level0 = qw->children[0];
  REQUIRE(level0->children.size() == 3);
  const NodeP& leaf = level0->children[0];
  // W = hom(x,-): one element at x, one at y
  std::vector<std::pair<int, int>> expect{{0, 1}, {1, 1}};
  CHECK(leaf->summands == expect);
}

TEST_CASE("refinement to finite subcoproducts") {
  Index ia = shapes::walking_arrow_index();
  WeightP w = coproduct_weights({representable(ia, 0), representable(ia, 1)}, ia).w;
  FlexibilityVerdict v = flex_of(w);
  DecompTree tree = decompose_flexible(w, v);
  DecompTree refined = refine_to_finite_coproducts(tree, 2);
  SUBCASE("small leaves stay; larger ones become filtered nodes") {
    bool found_filtered = false;
    std::function<void(const NodeP&)> walk = [&](const NodeP& n) {
      if (n->kind == NodeKind::filtered_subcoproducts) {
        found_filtered = true;
        int total = 0;
        for (auto [j, m] : n->summands) total += m;
        CHECK(static_cast<int>(n->children.size()) == (1 << total) - 1);
      }
      for (const auto& c : n->children) walk(c);
    };
    walk(refined.root);
    CHECK(found_filtered);
  }
  SUBCASE("evaluation is unchanged up to isomorphism and depth stays within four") {
    EvalOutcome ev = evaluate_tree(refined);
    REQUIRE(ev.ok);
    TwoNat stored_to_w = attach(refined.root_iso, refined.root->stored, w);
    CHECK(pointwise_isomorphism(compose(stored_to_w, *ev.iso_root_to_stored)));
    CHECK(tree_depth_above_leaves(refined.root) <= 4);
    CHECK(tree_depth_above_leaves(refined.root) == 4);
  }
  SUBCASE("a tree whose leaves are small is unchanged") {
    DecompTree same = refine_to_finite_coproducts(tree, 12);
    CHECK(tree_depth_above_leaves(same.root) == tree_depth_above_leaves(tree.root));
  }
}

TEST_CASE("verification accepts the honest certificate and rejects mutations") {
  Index ia = shapes::walking_arrow_index();
  WeightP w = representable(ia, 0);
  FlexibilityVerdict v = flex_of(w);
  DecompTree tree = decompose_flexible(w, v);
  VerifyOptions opt;
  opt.spot_checks = false;  // exercised separately: they are cross-kind and slow
  SUBCASE("the honest certificate verifies") {
    VerifyReport rep = verify_certificate(tree, w, opt);
    CHECK(rep.ok);
    CHECK(rep.depth == 3);
  }
  SUBCASE("evaluating against a different weight fails the root clause") {
    WeightP other = representable(ia, 1);
    VerifyReport rep = verify_certificate(tree, other, opt);
    CHECK_FALSE(rep.ok);
  }
  SUBCASE("perturbing a leaf multiplicity fails evaluation") {
    DecompTree broken = refine_to_finite_coproducts(tree, 12);  // deep copy
    broken.root->children[0]->children[0]->children[0]->summands.push_back({1, 1});
    VerifyReport rep = verify_certificate(broken, w, opt);
    CHECK_FALSE(rep.ok);
  }
}

TEST_CASE("nerve diagrams over the opposite simplex index") {
  Index d2 = shapes::delta2_index();
  Index op = opposite(d2);
  Cat a = shapes::walking_arrow();
  WeightP d = nerve_diagram(op, a);
  CHECK(d->at[0]->object_count() == 2);
  CHECK(d->at[1]->object_count() == 3);
  CHECK(d->at[2]->object_count() == 4);
  // evaluating the lax codescent weight against the nerve returns the category
  WeightP wl = shapes::lax_codescent_weight(d2);
  ColimResult c = weighted_colimit(wl, d);
  REQUIRE(c.mat.has_value());
  CHECK(c.cat->object_count() == 2);
  CHECK(c.cat->arrow_count() == 3);
}

TEST_CASE("random categories are valid and bounded") {
  Rng rng(2026);
  for (int i = 0; i < 25; ++i) {
    Cat c = random_category(rng, 5, 12);
    CHECK(c->object_count() <= 5);
    CHECK(c->arrow_count() <= 12);
    recheck_laws(*c);
  }
}
