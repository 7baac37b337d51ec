#include "doctest.h"

#include "catcolim/colim2.hpp"

using namespace catcolim;

namespace {

Index term() {
  static Index t = terminal_index();
  return t;
}

// the canonical comparison from a lax codescent object of a nerve back to
// the category, sending each inserted cell to the arrow it names
Functor nerve_comparison(const CodescentResult& r, const Cat& a) {
  const auto& m = r.built.mat->mats[0];
  std::vector<int> vimg(m.cat->object_count());
  for (int v = 0; v < m.cat->object_count(); ++v) vimg[v] = v;
  std::vector<int> eimg(r.built.pres.at[0].quiver.edges.size(), -1);
  for (int x = 0; x < a->arrow_count(); ++x) eimg[r.ins_edge[0][x]] = x;
  if (!r.inv_edge.empty())
    for (int x = 0; x < a->arrow_count(); ++x) {
      auto inv = a->inverse(x);
      if (inv) eimg[r.inv_edge[0][x]] = *inv;
    }
  return functor_from_generators(m, a, vimg, eimg);
}

}  // namespace

TEST_CASE("coproducts of weights") {
  Index d2 = shapes::delta2_index();
  WeightP r0 = representable(d2, 0);
  SUBCASE("empty family is the initial weight") {
    CoproductResult c = coproduct_weights({}, d2);
    for (int j = 0; j < 3; ++j) CHECK(c.w->at[j]->object_count() == 0);
  }
  SUBCASE("singleton family is the summand up to isomorphism") {
    CoproductResult c = coproduct_weights({r0}, d2);
    CHECK(pointwise_isomorphism(c.injections[0]));
  }
  SUBCASE("doubling a representable doubles the pointwise sizes") {
    CoproductResult c = coproduct_weights({r0, r0}, d2);
    for (int j = 0; j < 3; ++j)
      CHECK(c.w->at[j]->object_count() == 2 * r0->at[j]->object_count());
  }
  SUBCASE("universal property on a small corpus") {
    CoproductResult c = coproduct_weights({r0, r0}, d2);
    auto rep = verify_universal(c, {terminal_weight(d2), r0});
    CHECK(rep.ok);
    CHECK(rep.cases > 0);
  }
}

TEST_CASE("coinserter") {
  Index one = term();
  SUBCASE("empty inserting domain returns the target") {
    WeightP a = initial_weight(one);
    WeightP b = shapes::as_weight(one, shapes::walking_arrow());
    TwoNat u{a, b, {Functor{a->at[0], b->at[0], {}, {}}}};
    CoinserterResult r = coinserter(u, u);
    REQUIRE(r.built.materialized());
    CHECK(r.built.weight()->at[0]->arrow_count() == 3);
  }
  SUBCASE("a free endo-cell is detected as infinite") {
    WeightP a = shapes::as_weight(one, discrete(1));
    TwoNat u = identity_two_nat(a);
    CoinserterResult r = coinserter(u, u);
    CHECK_FALSE(r.built.materialized());
    CHECK(r.built.undecided.has_value());
  }
  SUBCASE("inserting an arrow between two points gives the walking arrow") {
    WeightP a = shapes::as_weight(one, discrete(1));
    WeightP b = shapes::as_weight(one, discrete(2));
    Functor pick0{a->at[0], b->at[0], {0}, {0}};
    Functor pick1{a->at[0], b->at[0], {1}, {1}};
    TwoNat u{a, b, {pick0}};
    TwoNat v{a, b, {pick1}};
    CoinserterResult r = coinserter(u, v);
    REQUIRE(r.built.materialized());
    CHECK(r.built.weight()->at[0]->object_count() == 2);
    CHECK(r.built.weight()->at[0]->arrow_count() == 3);
    auto rep = verify_universal(r, {shapes::as_weight(one, shapes::walking_arrow()),
                                    shapes::as_weight(one, shapes::walking_iso())});
    CHECK(rep.ok);
    CHECK(rep.cases > 0);
  }
}

TEST_CASE("coequifier") {
  Index one = term();
  // two cells from the point into the walking arrow: the generic arrow and
  // the identity at its source are not parallel, so equate the two parallel
  // cells coming from a double arrow instead
  WeightP a = shapes::as_weight(one, discrete(1));
  Cat pp = shapes::parallel_pair();
  WeightP b = shapes::as_weight(one, pp);
  Functor px{a->at[0], pp, {0}, {pp->identity(0)}};
  Functor py{a->at[0], pp, {1}, {pp->identity(1)}};
  TwoNat u{a, b, {px}};
  TwoNat v{a, b, {py}};
  Modification phi{u, v, {NatTransf{px, py, {pp->arrow_index("s")}}}};
  Modification psi{u, v, {NatTransf{px, py, {pp->arrow_index("t")}}}};
  SUBCASE("equal cells quotient by nothing") {
    CoequifierResult r = coequifier(phi, phi);
    REQUIRE(r.built.materialized());
    CHECK(r.built.weight()->at[0]->arrow_count() == 4);
  }
  SUBCASE("equating the two legs of a parallel pair") {
    CoequifierResult r = coequifier(phi, psi);
    REQUIRE(r.built.materialized());
    CHECK(r.built.weight()->at[0]->object_count() == 2);
    CHECK(r.built.weight()->at[0]->arrow_count() == 3);
    auto rep = verify_universal(r, {shapes::as_weight(one, shapes::walking_arrow())});
    CHECK(rep.ok);
  }
}

TEST_CASE("coinverter") {
  Index one = term();
  WeightP a = shapes::as_weight(one, discrete(1));
  Cat two = shapes::walking_arrow();
  WeightP b = shapes::as_weight(one, two);
  Functor px{a->at[0], two, {0}, {two->identity(0)}};
  Functor py{a->at[0], two, {1}, {two->identity(1)}};
  TwoNat u{a, b, {px}};
  TwoNat v{a, b, {py}};
  Modification alpha{u, v, {NatTransf{px, py, {two->arrow_index("a")}}}};

  SUBCASE("identity cells invert to the same weight") {
    Modification idcell{u, u, {identity_transf(px)}};
    CoinverterResult r = coinverter(idcell);
    REQUIRE(r.built.materialized());
    CHECK(r.built.weight()->at[0]->arrow_count() == 3);
  }
  SUBCASE("inverting the generic arrow yields the walking isomorphism") {
    CoinverterResult r = coinverter(alpha);
    REQUIRE(r.built.materialized());
    CHECK(r.built.weight()->at[0]->object_count() == 2);
    CHECK(r.built.weight()->at[0]->arrow_count() == 4);
    auto rep = verify_universal(r, {shapes::as_weight(one, shapes::walking_iso()),
                                    shapes::as_weight(one, discrete(2))});
    CHECK(rep.ok);
    CHECK(rep.cases > 0);
  }
  SUBCASE("inverting an already invertible cell changes nothing up to isomorphism") {
    Cat iso = shapes::walking_iso();
    WeightP bi = shapes::as_weight(one, iso);
    Functor qx{a->at[0], iso, {0}, {iso->identity(0)}};
    Functor qy{a->at[0], iso, {1}, {iso->identity(1)}};
    Modification beta{TwoNat{a, bi, {qx}}, TwoNat{a, bi, {qy}},
                      {NatTransf{qx, qy, {iso->arrow_index("e")}}}};
    CoinverterResult r = coinverter(beta);
    REQUIRE(r.built.materialized());
    CHECK(r.built.weight()->at[0]->object_count() == 2);
    CHECK(r.built.weight()->at[0]->arrow_count() == 4);
  }
}

TEST_CASE("liberal reduction: precomposing with a bijective-on-objects map") {
  // inverting a cell and its whiskering along a bijective-on-objects map
  // produce the same localization
  Index one = term();
  Cat two = shapes::walking_arrow();
  WeightP b = shapes::as_weight(one, two);
  Cat pts = discrete(std::vector<std::string>{"p", "q"});
  WeightP a2 = shapes::as_weight(one, pts);
  Cat single = discrete(1);
  WeightP a1 = shapes::as_weight(one, single);
  Functor px{single, two, {0}, {two->identity(0)}};
  Functor py{single, two, {1}, {two->identity(1)}};
  Modification alpha{TwoNat{a1, b, {px}}, TwoNat{a1, b, {py}},
                     {NatTransf{px, py, {two->arrow_index("a")}}}};
  // e: a2 -> a1 collapses two points onto the one: bijective on objects fails;
  // instead whisker along the identity-like doubling is not liberal, so use a
  // genuine bijective-on-objects map: the identity
  TwoNat e = identity_two_nat(a1);
  CHECK(is_liberal(e));
  Modification whiskered{compose(alpha.dom, e), compose(alpha.cod, e), alpha.comp};
  CoinverterResult r1 = coinverter(alpha);
  CoinverterResult r2 = coinverter(whiskered);
  REQUIRE(r1.built.materialized());
  REQUIRE(r2.built.materialized());
  CHECK(r1.built.weight()->at[0]->arrow_count() == r2.built.weight()->at[0]->arrow_count());
}

TEST_CASE("reflexive lax codescent of a truncated nerve recovers the category") {
  Index one = term();
  std::vector<Cat> cases = {shapes::walking_arrow(), shapes::chain(3), shapes::walking_idempotent(),
                            product(shapes::walking_arrow(), shapes::walking_arrow()).cat};
  for (const Cat& a : cases) {
    auto lifted = shapes::lift_delta2(one, truncated_nerve(a));
    CodescentResult r = reflexive_lax_codescent(lifted);
    REQUIRE(r.built.materialized());
    Functor cmp = nerve_comparison(r, a);
    CHECK(is_isomorphism(cmp).cls == FunctorClass::iso);
    // the universal leg is the identity on objects
    CHECK(is_identity_on_objects(compose(cmp, r.cocone.leg.comp[0])));
    // the cell at an arrow maps to that arrow
    for (int x = 0; x < a->arrow_count(); ++x)
      CHECK(cmp.arr_map[r.cocone.cell[0].comp[x]] == x);
  }
}

TEST_CASE("degenerate codescent of a constant diagram") {
  Index one = term();
  Cat a = shapes::chain(2);
  WeightP w = shapes::as_weight(one, a);
  Delta2Weight x;
  x.a0 = x.a1 = x.a2 = w;
  TwoNat id = identity_two_nat(w);
  x.d = x.c = x.i = x.p = x.m = x.q = x.l = x.r = id;
  CodescentResult lax = reflexive_lax_codescent(x);
  REQUIRE(lax.built.materialized());
  CHECK(lax.built.weight()->at[0]->arrow_count() == a->arrow_count());
  CodescentResult inv = reflexive_codescent(x);
  REQUIRE(inv.built.materialized());
  CHECK(inv.built.weight()->at[0]->arrow_count() == a->arrow_count());
}

TEST_CASE("reflexive codescent localizes the nerve reconstruction") {
  Index one = term();
  Cat a = shapes::walking_arrow();
  auto lifted = shapes::lift_delta2(one, truncated_nerve(a));
  CodescentResult r = reflexive_codescent(lifted);
  REQUIRE(r.built.materialized());
  // localizing the walking arrow at its generic arrow: the walking isomorphism
  CHECK(r.built.weight()->at[0]->object_count() == 2);
  CHECK(r.built.weight()->at[0]->arrow_count() == 4);
  for (const auto& cellcomp : r.cocone.cell[0].comp)
    CHECK(r.built.weight()->at[0]->is_iso_arrow(cellcomp));
  auto rep = verify_universal(r, {shapes::as_weight(one, shapes::walking_iso())});
  CHECK(rep.ok);
}

TEST_CASE("codescent universal property over the nerve of the walking arrow") {
  Index one = term();
  Cat a = shapes::walking_arrow();
  auto lifted = shapes::lift_delta2(one, truncated_nerve(a));
  CodescentResult r = reflexive_lax_codescent(lifted);
  auto rep = verify_universal(r, {shapes::as_weight(one, shapes::walking_arrow()),
                                  shapes::as_weight(one, discrete(2))});
  CHECK(rep.ok);
  CHECK(rep.cases > 0);
}

TEST_CASE("codescent commutes with binary products on nerves") {
  Index one = term();
  std::vector<std::pair<Cat, Cat>> pairs = {
      {shapes::walking_arrow(), shapes::walking_arrow()},
      {shapes::chain(3), shapes::walking_arrow()},
      {discrete(2), shapes::chain(2)}};
  for (auto& [a, b] : pairs) {
    Cat ab = product(a, b).cat;
    auto ra = reflexive_lax_codescent(shapes::lift_delta2(one, truncated_nerve(a)));
    auto rb = reflexive_lax_codescent(shapes::lift_delta2(one, truncated_nerve(b)));
    auto rab = reflexive_lax_codescent(shapes::lift_delta2(one, truncated_nerve(ab)));
    REQUIRE(rab.built.materialized());
    Cat lhs = rab.built.weight()->at[0];
    Cat rhs = product(ra.built.weight()->at[0], rb.built.weight()->at[0]).cat;
    CHECK(lhs->object_count() == rhs->object_count());
    CHECK(lhs->arrow_count() == rhs->arrow_count());
  }
}

TEST_CASE("reflexivity and splitting") {
  Index one = term();
  Cat a = shapes::walking_arrow();
  auto arr = arrow_category(a);
  WeightP wa = shapes::as_weight(one, a);
  WeightP wsq = shapes::as_weight(one, arr.cat);
  TwoNat p = shapes::as_two_nat(wsq, wa, arr.p);
  TwoNat q = shapes::as_two_nat(wsq, wa, arr.q);
  Modification lambda{p, q, {arr.lambda}};
  CHECK(check_modification(lambda).ok);
  SUBCASE("the generic arrow cell is reflexive, split by the identities") {
    CHECK(is_reflexive(lambda));
  }
  SUBCASE("a non-split cell is not reflexive") {
    WeightP a1 = shapes::as_weight(one, discrete(1));
    Cat two = shapes::walking_arrow();
    WeightP b = shapes::as_weight(one, two);
    Functor px{a1->at[0], two, {0}, {two->identity(0)}};
    Functor py{a1->at[0], two, {1}, {two->identity(1)}};
    Modification alpha{TwoNat{a1, b, {px}}, TwoNat{a1, b, {py}},
                       {NatTransf{px, py, {two->arrow_index("a")}}}};
    CHECK_FALSE(is_reflexive(alpha));
  }
  SUBCASE("splitting an idempotent weight endomorphism") {
    Index d2idx = shapes::delta2_index();
    WeightP r0 = representable(d2idx, 0);
    CoproductResult c = coproduct_weights({r0, r0}, d2idx);
    // collapse the second copy onto the first
    TwoNat e{c.w, c.w, {}};
    for (int j = 0; j < 3; ++j) {
      Functor f{c.w->at[j], c.w->at[j], {}, {}};
      f.obj_map.resize(c.w->at[j]->object_count());
      f.arr_map.resize(c.w->at[j]->arrow_count());
      for (int o = 0; o < c.w->at[j]->object_count(); ++o) {
        auto [s, local] = c.obj_decode[j][o];
        (void)s;
        f.obj_map[o] = c.obj_encode(j, 0, local);
      }
      for (int x = 0; x < c.w->at[j]->arrow_count(); ++x) {
        auto [s, local] = c.arr_decode[j][x];
        (void)s;
        f.arr_map[x] = c.arr_encode(j, 0, local);
      }
      e.comp.push_back(f);
    }
    require_two_natural(e);
    WeightSplitResult s = split_idempotent_weight(e);
    CHECK(equal(compose(s.section, s.retraction), e));
    CHECK(equal(compose(s.retraction, s.section), identity_two_nat(s.image)));
    for (int j = 0; j < 3; ++j)
      CHECK(s.image->at[j]->object_count() == r0->at[j]->object_count());
    // absoluteness: evaluation at an index object commutes with the splitting
    for (int j = 0; j < 3; ++j) {
      SplitResult pointwise = split_idempotent(e.comp[j]);
      CHECK(pointwise.image->object_count() == s.image->at[j]->object_count());
    }
  }
}

TEST_CASE("coproducts as filtered colimits of subcoproducts") {
  Index d2 = shapes::delta2_index();
  WeightP r0 = representable(d2, 0);
  WeightP r1 = representable(d2, 1);
  SUBCASE("empty family") {
    FilteredCoproductResult r = coproduct_as_filtered({}, d2);
    CHECK(r.comparison_is_iso);
    for (int j = 0; j < 3; ++j) CHECK(r.colimit->at[j]->object_count() == 0);
  }
  SUBCASE("singleton family") {
    FilteredCoproductResult r = coproduct_as_filtered({r0}, d2);
    CHECK(r.subset_poset->object_count() == 1);
    CHECK(r.comparison_is_iso);
  }
  SUBCASE("three summands over the seven nonempty subsets") {
    FilteredCoproductResult r = coproduct_as_filtered({r0, r0, r1}, d2);
    CHECK(r.subset_poset->object_count() == 7);
    CHECK(r.comparison_is_iso);
  }
}
