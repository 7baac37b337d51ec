#include "doctest.h"

#include "catcolim/fincat.hpp"
#include "catcolim/shapes.hpp"

using namespace catcolim;

TEST_CASE("validate_category accepts the walking arrow") {
  Cat two = shapes::walking_arrow();
  CHECK(two->object_count() == 2);
  CHECK(two->arrow_count() == 3);
  recheck_laws(*two);
}

TEST_CASE("validate_category reports a closure violation") {
  RawCategory raw;
  raw.objects = {"z"};
  raw.arrows = {{"1_z", "z", "z"}, {"a", "z", "z"}};
  raw.identities = {{"z", "1_z"}};
  // a∘a left undefined
  CHECK_THROWS_WITH_AS(validate_category(raw),
                       doctest::Contains("closure"), invalid_input);
}

TEST_CASE("validate_category names a broken associativity triple") {
  // three parallel endomaps with one perturbed composite
  RawCategory raw;
  raw.objects = {"z"};
  raw.arrows = {{"1_z", "z", "z"}, {"a", "z", "z"}, {"b", "z", "z"}, {"c", "z", "z"}};
  raw.identities = {{"z", "1_z"}};
  auto put = [&](const char* g, const char* f, const char* gf) {
    raw.composites.push_back({g, f, gf});
  };
  // the three-element monoid {1,a,b,c} with xy = c for x,y non-identity ...
  put("a", "a", "c");
  put("a", "b", "c");
  put("a", "c", "c");
  put("b", "a", "c");
  put("b", "b", "c");
  put("b", "c", "c");
  put("c", "a", "c");
  put("c", "b", "c");
  put("c", "c", "c");
  CHECK_NOTHROW(validate_category(raw));
  // ... perturbed in one entry stops being associative
  raw.composites[2] = {"a", "c", "a"};  // a∘c = a while a∘(a∘a) must be a∘c
  CHECK_THROWS_WITH_AS(validate_category(raw), doctest::Contains("associativity"),
                       invalid_input);
}

TEST_CASE("products") {
  Cat two = shapes::walking_arrow();
  Cat one = discrete(1);

  SUBCASE("unit law up to isomorphism") {
    auto p = product(two, one);
    CHECK(is_isomorphism(p.proj1).cls == FunctorClass::iso);
  }
  SUBCASE("the square category") {
    auto p = product(two, two);
    CHECK(p.cat->object_count() == 4);
    CHECK(p.cat->arrow_count() == 9);
    recheck_laws(*p.cat);
  }
  SUBCASE("discrete factors") {
    auto p = product(discrete(2), discrete(3));
    CHECK(p.cat->object_count() == 6);
    CHECK(p.cat->arrow_count() == 6);
  }
  SUBCASE("pairing satisfies the universal property") {
    auto p = product(two, two);
    Functor f = identity_functor(two);
    Functor h = pair_into_product(p, f, f);
    check_functor(h);
    CHECK(equal(compose(p.proj1, h), f));
    CHECK(equal(compose(p.proj2, h), f));
  }
  SUBCASE("associativity up to constructed isomorphism") {
    Cat three = shapes::chain(3);
    auto ab = product(two, three);
    auto ab_c = product(ab.cat, one);
    auto bc = product(three, one);
    auto a_bc = product(two, bc.cat);
    Functor inner = pair_into_product(bc, compose(ab.proj2, ab_c.proj1),
                                      ab_c.proj2);
    Functor cmp = pair_into_product(a_bc, compose(ab.proj1, ab_c.proj1), inner);
    CHECK(is_isomorphism(cmp).cls == FunctorClass::iso);
  }
}

TEST_CASE("arrow category") {
  SUBCASE("of the terminal category") {
    auto r = arrow_category(discrete(1));
    CHECK(r.cat->object_count() == 1);
    CHECK(r.cat->arrow_count() == 1);
  }
  SUBCASE("of the walking arrow") {
    Cat two = shapes::walking_arrow();
    auto r = arrow_category(two);
    CHECK(r.cat->object_count() == 3);
    // oracle: arrows of the arrow category are the functors from the square
    // poset into the 2-chain, i.e. its six down-sets
    int squares = 0;
    for (int u = 0; u < two->arrow_count(); ++u)
      for (int v = 0; v < two->arrow_count(); ++v)
        for (int h = 0; h < two->arrow_count(); ++h)
          for (int k = 0; k < two->arrow_count(); ++k) {
            if (two->arrow(h).src != two->arrow(u).src) continue;
            if (two->arrow(h).tgt != two->arrow(v).src) continue;
            if (two->arrow(k).src != two->arrow(u).tgt) continue;
            if (two->arrow(k).tgt != two->arrow(v).tgt) continue;
            if (two->compose(v, h) == two->compose(k, u)) ++squares;
          }
    CHECK(squares == 6);
    CHECK(r.cat->arrow_count() == squares);
    recheck_laws(*r.cat);
    check_natural(r.lambda);
  }
  SUBCASE("classify returns the identities functor on the identity transformation") {
    Cat a = shapes::walking_arrow();
    auto r = arrow_category(a);
    Functor id = identity_functor(a);
    Functor t = r.classify(identity_transf(id));
    check_functor(t);
    // sends each object to its identity arrow
    for (int o = 0; o < a->object_count(); ++o)
      CHECK(r.cat->object(t.obj_map[o]) == a->arrow(a->identity(o)).id);
  }
  SUBCASE("classification is inverse to whiskering the generic arrow") {
    Cat a = shapes::walking_iso();
    auto r = arrow_category(a);
    // every functor into the arrow category is recovered from its transformation
    for (const Functor& t : enumerate_functors(a, r.cat)) {
      NatTransf eta = whisker_right(r.lambda, t);
      Functor back = r.classify(eta);
      CHECK(equal(back, t));
    }
  }
}

TEST_CASE("split idempotent") {
  Cat d3 = discrete(3);
  SUBCASE("identity splits as the identity") {
    auto s = split_idempotent(identity_functor(d3));
    CHECK(s.image->object_count() == 3);
    CHECK(equal(compose(s.section, s.retraction), identity_functor(d3)));
  }
  SUBCASE("collapse of two objects") {
    Functor e{d3, d3, {0, 0, 2}, {0, 0, 2}};
    auto s = split_idempotent(e);
    CHECK(s.image->object_count() == 2);
    CHECK(equal(compose(s.section, s.retraction), e));
    CHECK(equal(compose(s.retraction, s.section), identity_functor(s.image)));
  }
  SUBCASE("rejects non-idempotents") {
    Functor swap{d3, d3, {1, 0, 2}, {1, 0, 2}};
    CHECK_THROWS_AS(split_idempotent(swap), invalid_input);
  }
}

TEST_CASE("isomorphism and equivalence verdicts") {
  Cat iso = shapes::walking_iso();
  Cat two = shapes::walking_arrow();
  SUBCASE("identity is an isomorphism") {
    CHECK(is_isomorphism(identity_functor(two)).cls == FunctorClass::iso);
  }
  SUBCASE("point into the walking isomorphism") {
    Cat one = discrete(1);
    Functor inc{one, iso, {0}, {iso->identity(0)}};
    auto v = is_equivalence(inc);
    CHECK(v.cls == FunctorClass::equivalence);
    CHECK_FALSE(v.surjective_on_objects);
  }
  SUBCASE("collapse of the walking arrow is no kind of equivalence") {
    Cat one = discrete(1);
    Functor bang{two, one, {0, 0}, {0, 0, 0}};
    auto v = is_equivalence(bang);
    CHECK(v.cls == FunctorClass::none);
    // hom-wise: every hom-set of the walking arrow is small enough for
    // faithfulness, while the empty hom(y,x) breaks fullness
    CHECK(v.faithful);
    CHECK_FALSE(v.full);
  }
  SUBCASE("agreement with a brute-force pseudo-inverse search") {
    auto brute = [](const Functor& f) {
      for (const Functor& g : enumerate_functors(f.cod, f.dom)) {
        if (enumerate_transfs(compose(g, f), identity_functor(f.dom)).empty()) continue;
        bool gf = false, fg = false;
        for (const auto& t : enumerate_transfs(compose(g, f), identity_functor(f.dom)))
          gf = gf || is_invertible(t);
        for (const auto& t : enumerate_transfs(compose(f, g), identity_functor(f.cod)))
          fg = fg || is_invertible(t);
        if (gf && fg) return true;
      }
      return false;
    };
    std::vector<Functor> cases;
    Cat one = discrete(1);
    cases.push_back(identity_functor(two));
    cases.push_back(Functor{one, iso, {0}, {iso->identity(0)}});
    cases.push_back(Functor{two, one, {0, 0}, {0, 0, 0}});
    cases.push_back(Functor{one, two, {1}, {two->identity(1)}});
    for (const Functor& f : cases) {
      bool ours = is_equivalence(f).cls != FunctorClass::none;
      CHECK(ours == brute(f));
    }
  }
}

TEST_CASE("truncated nerve") {
  SUBCASE("of the terminal category") {
    auto x = truncated_nerve(discrete(1));
    CHECK(x.a0->object_count() == 1);
    CHECK(x.a1->object_count() == 1);
    CHECK(x.a2->object_count() == 1);
  }
  SUBCASE("of the walking arrow") {
    auto x = truncated_nerve(shapes::walking_arrow());
    CHECK(x.a0->object_count() == 2);
    CHECK(x.a1->object_count() == 3);
    CHECK(x.a2->object_count() == 4);
  }
  SUBCASE("of a discrete category") {
    auto x = truncated_nerve(discrete(4));
    CHECK(x.a0->object_count() == 4);
    CHECK(x.a1->object_count() == 4);
    CHECK(x.a2->object_count() == 4);
  }
}

TEST_CASE("discrete") {
  CHECK(discrete(0)->object_count() == 0);
  CHECK(discrete(1)->arrow_count() == 1);
  Cat d = discrete(std::vector<std::string>{"x", "y"});
  CHECK(d->arrow_count() == 2);
  for (int a = 0; a < d->arrow_count(); ++a) CHECK(d->is_identity(a));
}
