#include "catcolim/fincat.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace catcolim {

int FinCat::object_index(const std::string& id) const {
  auto it = obj_index_.find(id);
  return it == obj_index_.end() ? -1 : it->second;
}

int FinCat::arrow_index(const std::string& id) const {
  auto it = arr_index_.find(id);
  return it == arr_index_.end() ? -1 : it->second;
}

int FinCat::compose(int g, int f) const {
  auto it = comp_.find(comp_key(g, f));
  return it == comp_.end() ? -1 : it->second;
}

std::vector<std::pair<int, int>> FinCat::composable_pairs() const {
  std::vector<std::pair<int, int>> out;
  std::vector<int> order(arrows_.size());
  for (size_t i = 0; i < arrows_.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return arrows_[a].id < arrows_[b].id; });
  for (int g : order)
    for (int f : order)
      if (composable(g, f)) out.emplace_back(g, f);
  return out;
}

std::vector<int> FinCat::arrows_between(int src, int tgt) const {
  std::vector<int> out;
  for (int a = 0; a < arrow_count(); ++a)
    if (arrows_[a].src == src && arrows_[a].tgt == tgt) out.push_back(a);
  return out;
}

std::optional<int> FinCat::inverse(int arr) const {
  const Arrow& a = arrows_[arr];
  for (int b : arrows_between(a.tgt, a.src))
    if (compose(b, arr) == identity_[a.src] && compose(arr, b) == identity_[a.tgt])
      return b;
  return std::nullopt;
}

std::vector<int> FinCat::iso_class_of_objects() const {
  std::vector<int> rep(object_count());
  for (int i = 0; i < object_count(); ++i) rep[i] = i;
  auto find = [&](int x) {
    while (rep[x] != x) x = rep[x] = rep[rep[x]];
    return x;
  };
  for (int a = 0; a < arrow_count(); ++a) {
    if (!is_iso_arrow(a)) continue;
    int x = find(arrows_[a].src), y = find(arrows_[a].tgt);
    if (x != y) rep[std::max(x, y)] = std::min(x, y);
  }
  for (int i = 0; i < object_count(); ++i) rep[i] = find(i);
  return rep;
}

FinCat FinCat::make_unchecked(std::vector<std::string> objects, std::vector<Arrow> arrows,
                              std::vector<int> identity,
                              std::unordered_map<std::int64_t, int> comp) {
  FinCat c;
  c.objects_ = std::move(objects);
  c.arrows_ = std::move(arrows);
  c.identity_ = std::move(identity);
  c.comp_ = std::move(comp);
  for (size_t i = 0; i < c.objects_.size(); ++i) {
    if (c.obj_index_.count(c.objects_[i]))
      throw invalid_input("duplicate object id: " + c.objects_[i]);
    c.obj_index_[c.objects_[i]] = static_cast<int>(i);
  }
  for (size_t i = 0; i < c.arrows_.size(); ++i) {
    if (c.arr_index_.count(c.arrows_[i].id))
      throw invalid_input("duplicate arrow id: " + c.arrows_[i].id);
    c.arr_index_[c.arrows_[i].id] = static_cast<int>(i);
  }
  return c;
}

void recheck_laws(const FinCat& c) {
  for (int o = 0; o < c.object_count(); ++o) {
    int e = c.identity(o);
    if (e < 0 || e >= c.arrow_count() || c.arrow(e).src != o || c.arrow(e).tgt != o)
      throw invalid_input("identity: object " + c.object(o) + " lacks an identity endo-arrow");
  }
  for (int g = 0; g < c.arrow_count(); ++g) {
    for (int f = 0; f < c.arrow_count(); ++f) {
      int gf = c.compose(g, f);
      if (c.composable(g, f)) {
        if (gf < 0)
          throw invalid_input("closure: composite undefined for composable pair (" +
                              c.arrow(g).id + ", " + c.arrow(f).id + ")");
        if (c.arrow(gf).src != c.arrow(f).src || c.arrow(gf).tgt != c.arrow(g).tgt)
          throw invalid_input("closure: composite of (" + c.arrow(g).id + ", " +
                              c.arrow(f).id + ") has wrong endpoints");
      } else if (gf >= 0) {
        throw invalid_input("closure: composite defined for non-composable pair (" +
                            c.arrow(g).id + ", " + c.arrow(f).id + ")");
      }
    }
  }
  for (int f = 0; f < c.arrow_count(); ++f) {
    if (c.compose(f, c.identity(c.arrow(f).src)) != f)
      throw invalid_input("identity law: " + c.arrow(f).id + "∘id != " + c.arrow(f).id);
    if (c.compose(c.identity(c.arrow(f).tgt), f) != f)
      throw invalid_input("identity law: id∘" + c.arrow(f).id + " != " + c.arrow(f).id);
  }
  for (int h = 0; h < c.arrow_count(); ++h)
    for (int g = 0; g < c.arrow_count(); ++g) {
      if (!c.composable(h, g)) continue;
      int hg = c.compose(h, g);
      for (int f = 0; f < c.arrow_count(); ++f) {
        if (!c.composable(g, f)) continue;
        int gf = c.compose(g, f);
        if (c.compose(h, gf) != c.compose(hg, f))
          throw invalid_input("associativity: triple (" + c.arrow(h).id + ", " +
                              c.arrow(g).id + ", " + c.arrow(f).id + ")");
      }
    }
}

Cat validate_category(const RawCategory& raw) {
  std::vector<Arrow> arrows;
  std::unordered_map<std::string, int> oi, ai;
  for (size_t i = 0; i < raw.objects.size(); ++i) {
    if (oi.count(raw.objects[i])) throw invalid_input("duplicate object id: " + raw.objects[i]);
    oi[raw.objects[i]] = static_cast<int>(i);
  }
  for (const auto& [id, s, t] : raw.arrows) {
    if (ai.count(id)) throw invalid_input("duplicate arrow id: " + id);
    if (!oi.count(s)) throw invalid_input("arrow " + id + ": unknown source " + s);
    if (!oi.count(t)) throw invalid_input("arrow " + id + ": unknown target " + t);
    ai[id] = static_cast<int>(arrows.size());
    arrows.push_back({id, oi.at(s), oi.at(t)});
  }
  std::vector<int> identity(raw.objects.size(), -1);
  for (const auto& [obj, arr] : raw.identities) {
    if (!oi.count(obj)) throw invalid_input("identity for unknown object " + obj);
    if (!ai.count(arr)) throw invalid_input("identity names unknown arrow " + arr);
    identity[oi.at(obj)] = ai.at(arr);
  }
  for (size_t o = 0; o < raw.objects.size(); ++o)
    if (identity[o] < 0) throw invalid_input("identity: no identity given for object " + raw.objects[o]);
  std::unordered_map<std::int64_t, int> comp;
  const std::int64_t n = static_cast<std::int64_t>(arrows.size());
  for (const auto& [g, f, gf] : raw.composites) {
    if (!ai.count(g) || !ai.count(f) || !ai.count(gf))
      throw invalid_input("composite entry names unknown arrow (" + g + ", " + f + ", " + gf + ")");
    comp[static_cast<std::int64_t>(ai.at(g)) * n + ai.at(f)] = ai.at(gf);
  }
  // identity composites may be omitted in the raw table
  for (int f = 0; f < static_cast<int>(arrows.size()); ++f) {
    std::int64_t kl = static_cast<std::int64_t>(identity[arrows[f].tgt]) * n + f;
    std::int64_t kr = static_cast<std::int64_t>(f) * n + identity[arrows[f].src];
    comp.emplace(kl, f);
    comp.emplace(kr, f);
  }
  FinCat c = FinCat::make_unchecked(raw.objects, std::move(arrows), std::move(identity),
                                    std::move(comp));
  recheck_laws(c);
  return std::make_shared<FinCat>(std::move(c));
}

// ---- functors ----

Functor identity_functor(const Cat& c) {
  Functor f{c, c, {}, {}};
  f.obj_map.resize(c->object_count());
  f.arr_map.resize(c->arrow_count());
  for (int i = 0; i < c->object_count(); ++i) f.obj_map[i] = i;
  for (int i = 0; i < c->arrow_count(); ++i) f.arr_map[i] = i;
  return f;
}

Functor compose(const Functor& g, const Functor& f) {
  if (f.cod.get() != g.dom.get())
    throw invalid_input("functor composition: middle categories differ");
  Functor h{f.dom, g.cod, {}, {}};
  h.obj_map.resize(f.obj_map.size());
  h.arr_map.resize(f.arr_map.size());
  for (size_t i = 0; i < f.obj_map.size(); ++i) h.obj_map[i] = g.obj_map[f.obj_map[i]];
  for (size_t i = 0; i < f.arr_map.size(); ++i) h.arr_map[i] = g.arr_map[f.arr_map[i]];
  return h;
}

bool equal(const Functor& f, const Functor& g) {
  return f.dom.get() == g.dom.get() && f.cod.get() == g.cod.get() &&
         f.obj_map == g.obj_map && f.arr_map == g.arr_map;
}

bool is_functor(const Functor& f, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const FinCat& A = *f.dom;
  const FinCat& B = *f.cod;
  if (static_cast<int>(f.obj_map.size()) != A.object_count() ||
      static_cast<int>(f.arr_map.size()) != A.arrow_count())
    return fail("map tables have wrong size");
  for (int a = 0; a < A.arrow_count(); ++a) {
    const Arrow& ar = A.arrow(a);
    int im = f.arr_map[a];
    if (im < 0 || im >= B.arrow_count()) return fail("arrow image out of range: " + ar.id);
    if (B.arrow(im).src != f.obj_map[ar.src] || B.arrow(im).tgt != f.obj_map[ar.tgt])
      return fail("endpoints not preserved at " + ar.id);
  }
  for (int o = 0; o < A.object_count(); ++o)
    if (f.arr_map[A.identity(o)] != B.identity(f.obj_map[o]))
      return fail("identity not preserved at " + A.object(o));
  for (int g = 0; g < A.arrow_count(); ++g)
    for (int fa = 0; fa < A.arrow_count(); ++fa) {
      if (!A.composable(g, fa)) continue;
      if (f.arr_map[A.compose(g, fa)] != B.compose(f.arr_map[g], f.arr_map[fa]))
        return fail("composition not preserved at (" + A.arrow(g).id + ", " + A.arrow(fa).id + ")");
    }
  return true;
}

void check_functor(const Functor& f) {
  std::string why;
  if (!is_functor(f, &why)) throw invalid_input("not a functor: " + why);
}

bool is_identity_on_objects(const Functor& f) {
  if (f.dom->object_count() != f.cod->object_count()) return false;
  for (int o = 0; o < f.dom->object_count(); ++o)
    if (f.cod->object(f.obj_map[o]) != f.dom->object(o)) return false;
  return true;
}

bool is_bijective_on_objects(const Functor& f) {
  if (f.dom->object_count() != f.cod->object_count()) return false;
  std::vector<bool> hit(f.cod->object_count(), false);
  for (int o = 0; o < f.dom->object_count(); ++o) {
    if (hit[f.obj_map[o]]) return false;
    hit[f.obj_map[o]] = true;
  }
  return true;
}

// ---- natural transformations ----

NatTransf identity_transf(const Functor& f) {
  NatTransf t{f, f, {}};
  t.comp.resize(f.dom->object_count());
  for (int o = 0; o < f.dom->object_count(); ++o)
    t.comp[o] = f.cod->identity(f.obj_map[o]);
  return t;
}

bool equal(const NatTransf& a, const NatTransf& b) {
  return equal(a.dom, b.dom) && equal(a.cod, b.cod) && a.comp == b.comp;
}

bool is_natural(const NatTransf& t, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (t.dom.dom.get() != t.cod.dom.get() || t.dom.cod.get() != t.cod.cod.get())
    return fail("legs are not parallel");
  const FinCat& A = *t.dom.dom;
  const FinCat& B = *t.dom.cod;
  if (static_cast<int>(t.comp.size()) != A.object_count()) return fail("component table has wrong size");
  for (int o = 0; o < A.object_count(); ++o) {
    int c = t.comp[o];
    if (c < 0 || c >= B.arrow_count()) return fail("component out of range at " + A.object(o));
    if (B.arrow(c).src != t.dom.obj_map[o] || B.arrow(c).tgt != t.cod.obj_map[o])
      return fail("component has wrong endpoints at " + A.object(o));
  }
  for (int m = 0; m < A.arrow_count(); ++m) {
    const Arrow& ar = A.arrow(m);
    if (B.compose(t.comp[ar.tgt], t.dom.arr_map[m]) !=
        B.compose(t.cod.arr_map[m], t.comp[ar.src]))
      return fail("naturality square fails at " + ar.id);
  }
  return true;
}

void check_natural(const NatTransf& t) {
  std::string why;
  if (!is_natural(t, &why)) throw invalid_input("not natural: " + why);
}

NatTransf vcompose(const NatTransf& b, const NatTransf& a) {
  if (!equal(a.cod, b.dom)) throw invalid_input("vertical composition: legs do not meet");
  NatTransf t{a.dom, b.cod, {}};
  t.comp.resize(a.comp.size());
  for (size_t o = 0; o < a.comp.size(); ++o)
    t.comp[o] = a.dom.cod->compose(b.comp[o], a.comp[o]);
  return t;
}

NatTransf whisker_left(const Functor& h, const NatTransf& t) {
  if (t.dom.cod.get() != h.dom.get()) throw invalid_input("whisker_left: boundary mismatch");
  NatTransf out{compose(h, t.dom), compose(h, t.cod), {}};
  out.comp.resize(t.comp.size());
  for (size_t o = 0; o < t.comp.size(); ++o) out.comp[o] = h.arr_map[t.comp[o]];
  return out;
}

NatTransf whisker_right(const NatTransf& t, const Functor& e) {
  if (e.cod.get() != t.dom.dom.get()) throw invalid_input("whisker_right: boundary mismatch");
  NatTransf out{compose(t.dom, e), compose(t.cod, e), {}};
  out.comp.resize(e.dom->object_count());
  for (int o = 0; o < e.dom->object_count(); ++o) out.comp[o] = t.comp[e.obj_map[o]];
  return out;
}

bool is_invertible(const NatTransf& t) {
  for (int c : t.comp)
    if (!t.dom.cod->is_iso_arrow(c)) return false;
  return true;
}

NatTransf invert(const NatTransf& t) {
  NatTransf out{t.cod, t.dom, {}};
  out.comp.resize(t.comp.size());
  for (size_t o = 0; o < t.comp.size(); ++o) {
    auto inv = t.dom.cod->inverse(t.comp[o]);
    if (!inv) throw invalid_input("invert: component is not invertible");
    out.comp[o] = *inv;
  }
  return out;
}

void check_delta2_cat(const Delta2Cat& x) {
  check_delta2<Cat, Functor>(
      x, [](const Functor& g, const Functor& f) { return compose(g, f); },
      [](const Functor& a, const Functor& b) { return equal(a, b); },
      [](const Cat& c) { return identity_functor(c); }, "category diagram");
  check_functor(x.d);
  check_functor(x.c);
  check_functor(x.i);
  check_functor(x.p);
  check_functor(x.m);
  check_functor(x.q);
  check_functor(x.l);
  check_functor(x.r);
}

// ---- constructions ----

Cat discrete(const std::vector<std::string>& labels) {
  std::vector<Arrow> arrows;
  std::vector<int> identity(labels.size());
  std::unordered_map<std::int64_t, int> comp;
  for (size_t i = 0; i < labels.size(); ++i) {
    identity[i] = static_cast<int>(i);
    arrows.push_back({"1_" + labels[i], static_cast<int>(i), static_cast<int>(i)});
  }
  const std::int64_t n = static_cast<std::int64_t>(arrows.size());
  for (std::int64_t i = 0; i < n; ++i) comp[i * n + i] = static_cast<int>(i);
  return std::make_shared<FinCat>(
      FinCat::make_unchecked(labels, std::move(arrows), std::move(identity), std::move(comp)));
}

Cat discrete(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return discrete(labels);
}

static std::string pair_id(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

ProductResult product(const Cat& a, const Cat& b) {
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::vector<int> identity;
  auto oid = [&](int oa, int ob) { return oa * b->object_count() + ob; };
  auto aid = [&](int fa, int fb) { return fa * b->arrow_count() + fb; };
  for (int oa = 0; oa < a->object_count(); ++oa)
    for (int ob = 0; ob < b->object_count(); ++ob)
      objects.push_back(pair_id(a->object(oa), b->object(ob)));
  for (int fa = 0; fa < a->arrow_count(); ++fa)
    for (int fb = 0; fb < b->arrow_count(); ++fb)
      arrows.push_back({pair_id(a->arrow(fa).id, b->arrow(fb).id),
                        oid(a->arrow(fa).src, b->arrow(fb).src),
                        oid(a->arrow(fa).tgt, b->arrow(fb).tgt)});
  identity.resize(objects.size());
  for (int oa = 0; oa < a->object_count(); ++oa)
    for (int ob = 0; ob < b->object_count(); ++ob)
      identity[oid(oa, ob)] = aid(a->identity(oa), b->identity(ob));
  std::unordered_map<std::int64_t, int> comp;
  const std::int64_t n = static_cast<std::int64_t>(arrows.size());
  for (int ga = 0; ga < a->arrow_count(); ++ga)
    for (int fa = 0; fa < a->arrow_count(); ++fa) {
      if (!a->composable(ga, fa)) continue;
      for (int gb = 0; gb < b->arrow_count(); ++gb)
        for (int fb = 0; fb < b->arrow_count(); ++fb) {
          if (!b->composable(gb, fb)) continue;
          comp[static_cast<std::int64_t>(aid(ga, gb)) * n + aid(fa, fb)] =
              aid(a->compose(ga, fa), b->compose(gb, fb));
        }
    }
  Cat prod = std::make_shared<FinCat>(
      FinCat::make_unchecked(std::move(objects), std::move(arrows), std::move(identity),
                             std::move(comp)));
  Functor p1{prod, a, {}, {}}, p2{prod, b, {}, {}};
  p1.obj_map.resize(prod->object_count());
  p2.obj_map.resize(prod->object_count());
  p1.arr_map.resize(prod->arrow_count());
  p2.arr_map.resize(prod->arrow_count());
  for (int oa = 0; oa < a->object_count(); ++oa)
    for (int ob = 0; ob < b->object_count(); ++ob) {
      p1.obj_map[oid(oa, ob)] = oa;
      p2.obj_map[oid(oa, ob)] = ob;
    }
  for (int fa = 0; fa < a->arrow_count(); ++fa)
    for (int fb = 0; fb < b->arrow_count(); ++fb) {
      p1.arr_map[aid(fa, fb)] = fa;
      p2.arr_map[aid(fa, fb)] = fb;
    }
  return {prod, p1, p2};
}

Functor pair_into_product(const ProductResult& p, const Functor& f, const Functor& g) {
  if (f.dom.get() != g.dom.get()) throw invalid_input("pairing: domains differ");
  if (f.cod.get() != p.proj1.cod.get() || g.cod.get() != p.proj2.cod.get())
    throw invalid_input("pairing: codomains do not match the product factors");
  const FinCat& X = *f.dom;
  Functor h{f.dom, p.cat, {}, {}};
  h.obj_map.resize(X.object_count());
  h.arr_map.resize(X.arrow_count());
  const int nb = p.proj2.cod->object_count();
  const int ab = p.proj2.cod->arrow_count();
  for (int o = 0; o < X.object_count(); ++o) h.obj_map[o] = f.obj_map[o] * nb + g.obj_map[o];
  for (int m = 0; m < X.arrow_count(); ++m) h.arr_map[m] = f.arr_map[m] * ab + g.arr_map[m];
  return h;
}

ArrowCatResult arrow_category(const Cat& a) {
  // objects are the arrows of a; arrows are commuting squares (h, k)
  std::vector<std::string> objects;
  for (int u = 0; u < a->arrow_count(); ++u) objects.push_back(a->arrow(u).id);
  std::vector<Arrow> arrows;
  std::vector<std::pair<int, int>> legs;  // (h, k) per square
  std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, int> square_index;
  std::vector<std::vector<int>> out_of(a->object_count());
  for (int m = 0; m < a->arrow_count(); ++m) out_of[a->arrow(m).src].push_back(m);
  for (int u = 0; u < a->arrow_count(); ++u)
    for (int h : out_of[a->arrow(u).src])
      for (int k : out_of[a->arrow(u).tgt]) {
        int diag = a->compose(k, u);
        for (int v : out_of[a->arrow(h).tgt]) {
          if (a->arrow(v).tgt != a->arrow(k).tgt) continue;
          if (a->compose(v, h) != diag) continue;
          square_index[{{u, v}, {h, k}}] = static_cast<int>(arrows.size());
          arrows.push_back({"[" + a->arrow(h).id + "," + a->arrow(k).id + "]:" + a->arrow(u).id +
                                ">" + a->arrow(v).id,
                            u, v});
          legs.emplace_back(h, k);
        }
      }
  std::vector<int> identity(objects.size());
  for (int u = 0; u < a->arrow_count(); ++u)
    identity[u] = square_index.at(
        {{u, u}, {a->identity(a->arrow(u).src), a->identity(a->arrow(u).tgt)}});
  std::unordered_map<std::int64_t, int> comp;
  const std::int64_t n = static_cast<std::int64_t>(arrows.size());
  for (std::int64_t s2 = 0; s2 < n; ++s2)
    for (std::int64_t s1 = 0; s1 < n; ++s1) {
      if (arrows[s1].tgt != arrows[s2].src) continue;
      int h = a->compose(legs[s2].first, legs[s1].first);
      int k = a->compose(legs[s2].second, legs[s1].second);
      comp[s2 * n + s1] = square_index.at({{arrows[s1].src, arrows[s2].tgt}, {h, k}});
    }
  Cat sq = std::make_shared<FinCat>(FinCat::make_unchecked(
      std::move(objects), std::move(arrows), std::move(identity), std::move(comp)));
  Functor p{sq, a, {}, {}}, q{sq, a, {}, {}};
  p.obj_map.resize(sq->object_count());
  q.obj_map.resize(sq->object_count());
  p.arr_map.resize(sq->arrow_count());
  q.arr_map.resize(sq->arrow_count());
  for (int u = 0; u < sq->object_count(); ++u) {
    p.obj_map[u] = a->arrow(u).src;
    q.obj_map[u] = a->arrow(u).tgt;
  }
  for (int s = 0; s < sq->arrow_count(); ++s) {
    p.arr_map[s] = legs[s].first;
    q.arr_map[s] = legs[s].second;
  }
  NatTransf lambda{p, q, {}};
  lambda.comp.resize(sq->object_count());
  for (int u = 0; u < sq->object_count(); ++u) lambda.comp[u] = u;
  ArrowCatResult out;
  out.cat = sq;
  out.p = p;
  out.q = q;
  out.lambda = lambda;
  return out;
}

Functor ArrowCatResult::classify(const NatTransf& eta) const {
  std::string why;
  if (!is_natural(eta, &why)) throw invalid_input("classify: input is not natural: " + why);
  if (eta.dom.cod.get() != p.cod.get())
    throw invalid_input("classify: transformation does not land in the base category");
  const FinCat& X = *eta.dom.dom;
  const FinCat& A = *p.cod;
  const FinCat& Sq = *cat;
  Functor t{eta.dom.dom, cat, {}, {}};
  t.obj_map.resize(X.object_count());
  t.arr_map.resize(X.arrow_count());
  for (int x = 0; x < X.object_count(); ++x) t.obj_map[x] = eta.comp[x];
  for (int m = 0; m < X.arrow_count(); ++m) {
    int u = eta.comp[X.arrow(m).src];
    int v = eta.comp[X.arrow(m).tgt];
    int h = eta.dom.arr_map[m];
    int k = eta.cod.arr_map[m];
    int found = -1;
    for (int s = 0; s < Sq.arrow_count(); ++s) {
      if (Sq.arrow(s).src != u || Sq.arrow(s).tgt != v) continue;
      if (p.arr_map[s] == h && q.arr_map[s] == k) {
        found = s;
        break;
      }
    }
    if (found < 0) throw invalid_input("classify: no square for arrow " + X.arrow(m).id);
    t.arr_map[m] = found;
  }
  (void)A;
  return t;
}

SplitResult split_idempotent(const Functor& e) {
  if (e.dom.get() != e.cod.get()) throw invalid_input("split: functor is not an endofunctor");
  if (!equal(compose(e, e), e)) throw invalid_input("split: functor is not idempotent");
  const FinCat& A = *e.dom;
  std::vector<int> img_obj, img_arr;
  std::vector<int> obj_to_img(A.object_count(), -1), arr_to_img(A.arrow_count(), -1);
  for (int o = 0; o < A.object_count(); ++o)
    if (e.obj_map[o] == o) {
      obj_to_img[o] = static_cast<int>(img_obj.size());
      img_obj.push_back(o);
    }
  for (int a = 0; a < A.arrow_count(); ++a)
    if (e.arr_map[a] == a) {
      arr_to_img[a] = static_cast<int>(img_arr.size());
      img_arr.push_back(a);
    }
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  for (int o : img_obj) objects.push_back(A.object(o));
  for (int a : img_arr)
    arrows.push_back({A.arrow(a).id, obj_to_img[A.arrow(a).src], obj_to_img[A.arrow(a).tgt]});
  std::vector<int> identity(objects.size());
  for (size_t i = 0; i < img_obj.size(); ++i) identity[i] = arr_to_img[A.identity(img_obj[i])];
  std::unordered_map<std::int64_t, int> comp;
  const std::int64_t n = static_cast<std::int64_t>(arrows.size());
  for (size_t gi = 0; gi < img_arr.size(); ++gi)
    for (size_t fi = 0; fi < img_arr.size(); ++fi) {
      if (!A.composable(img_arr[gi], img_arr[fi])) continue;
      comp[static_cast<std::int64_t>(gi) * n + fi] = arr_to_img[A.compose(img_arr[gi], img_arr[fi])];
    }
  Cat b = std::make_shared<FinCat>(FinCat::make_unchecked(
      std::move(objects), std::move(arrows), std::move(identity), std::move(comp)));
  Functor r{e.dom, b, {}, {}}, s{b, e.dom, {}, {}};
  r.obj_map.resize(A.object_count());
  r.arr_map.resize(A.arrow_count());
  for (int o = 0; o < A.object_count(); ++o) r.obj_map[o] = obj_to_img[e.obj_map[o]];
  for (int a = 0; a < A.arrow_count(); ++a) r.arr_map[a] = arr_to_img[e.arr_map[a]];
  s.obj_map.assign(img_obj.begin(), img_obj.end());
  s.arr_map.assign(img_arr.begin(), img_arr.end());
  return {b, r, s};
}

FunctorVerdict is_isomorphism(const Functor& f) {
  FunctorVerdict v = is_equivalence(f);
  if (v.cls != FunctorClass::none) {
    // upgrade when bijective on both levels
    std::vector<bool> ohit(f.cod->object_count(), false), ahit(f.cod->arrow_count(), false);
    bool obj_bij = f.dom->object_count() == f.cod->object_count();
    bool arr_bij = f.dom->arrow_count() == f.cod->arrow_count();
    for (int o = 0; o < f.dom->object_count() && obj_bij; ++o) {
      if (ohit[f.obj_map[o]]) obj_bij = false;
      ohit[f.obj_map[o]] = true;
    }
    for (int a = 0; a < f.dom->arrow_count() && arr_bij; ++a) {
      if (ahit[f.arr_map[a]]) arr_bij = false;
      ahit[f.arr_map[a]] = true;
    }
    if (obj_bij && arr_bij) {
      Functor inv{f.cod, f.dom, {}, {}};
      inv.obj_map.resize(f.cod->object_count());
      inv.arr_map.resize(f.cod->arrow_count());
      for (int o = 0; o < f.dom->object_count(); ++o) inv.obj_map[f.obj_map[o]] = o;
      for (int a = 0; a < f.dom->arrow_count(); ++a) inv.arr_map[f.arr_map[a]] = a;
      v.cls = FunctorClass::iso;
      v.inverse = inv;
    }
  }
  return v;
}

FunctorVerdict is_equivalence(const Functor& f) {
  FunctorVerdict v;
  const FinCat& A = *f.dom;
  const FinCat& B = *f.cod;
  v.faithful = true;
  v.full = true;
  for (int x = 0; x < A.object_count() && (v.full || v.faithful); ++x)
    for (int y = 0; y < A.object_count(); ++y) {
      auto dom_homs = A.arrows_between(x, y);
      auto cod_homs = B.arrows_between(f.obj_map[x], f.obj_map[y]);
      std::map<int, int> hits;
      for (int m : dom_homs) hits[f.arr_map[m]]++;
      for (auto& [im, n] : hits)
        if (n > 1) {
          v.faithful = false;
          v.detail = "not faithful between " + A.object(x) + " and " + A.object(y);
        }
      for (int im : cod_homs)
        if (!hits.count(im)) {
          v.full = false;
          v.detail = "not full between " + A.object(x) + " and " + A.object(y);
        }
    }
  std::vector<bool> ohit(B.object_count(), false);
  for (int o = 0; o < A.object_count(); ++o) ohit[f.obj_map[o]] = true;
  v.surjective_on_objects = true;
  for (bool h : ohit) v.surjective_on_objects = v.surjective_on_objects && h;
  auto classes = B.iso_class_of_objects();
  std::vector<int> witness(B.object_count(), -1);
  for (int o = 0; o < A.object_count(); ++o) {
    int rep = classes[f.obj_map[o]];
    if (witness[rep] < 0) witness[rep] = o;
  }
  v.essentially_surjective = true;
  v.eso_witness.assign(B.object_count(), -1);
  for (int b = 0; b < B.object_count(); ++b) {
    v.eso_witness[b] = witness[classes[b]];
    if (v.eso_witness[b] < 0) v.essentially_surjective = false;
  }
  if (v.full && v.faithful && v.surjective_on_objects)
    v.cls = FunctorClass::surjective_equivalence;
  else if (v.full && v.faithful && v.essentially_surjective)
    v.cls = FunctorClass::equivalence;
  else
    v.cls = FunctorClass::none;
  return v;
}

Delta2Cat truncated_nerve(const Cat& a) {
  std::vector<std::string> objs, arrs, pairs;
  for (int o = 0; o < a->object_count(); ++o) objs.push_back(a->object(o));
  for (int m = 0; m < a->arrow_count(); ++m) arrs.push_back(a->arrow(m).id);
  auto cp = a->composable_pairs();
  for (auto& [g, f] : cp) pairs.push_back(pair_id(a->arrow(g).id, a->arrow(f).id));
  Delta2Cat x;
  x.a0 = discrete(objs);
  x.a1 = discrete(arrs);
  x.a2 = discrete(pairs);
  auto disc_map = [&](const Cat& dom, const Cat& cod, const std::vector<int>& omap) {
    Functor f{dom, cod, omap, {}};
    f.arr_map.resize(dom->arrow_count());
    for (int o = 0; o < dom->object_count(); ++o) f.arr_map[dom->identity(o)] = cod->identity(omap[o]);
    return f;
  };
  std::vector<int> dmap(arrs.size()), cmap(arrs.size()), imap(objs.size());
  for (int m = 0; m < a->arrow_count(); ++m) {
    dmap[m] = a->arrow(m).src;
    cmap[m] = a->arrow(m).tgt;
  }
  for (int o = 0; o < a->object_count(); ++o) imap[o] = a->identity(o);
  std::vector<int> pmap(cp.size()), mmap(cp.size()), qmap(cp.size()), lmap(arrs.size()),
      rmap(arrs.size());
  std::map<std::pair<int, int>, int> pindex;
  for (size_t k = 0; k < cp.size(); ++k) pindex[cp[k]] = static_cast<int>(k);
  for (size_t k = 0; k < cp.size(); ++k) {
    auto [g, f] = cp[k];
    pmap[k] = f;
    qmap[k] = g;
    mmap[k] = a->compose(g, f);
  }
  for (int m = 0; m < a->arrow_count(); ++m) {
    lmap[m] = pindex.at({m, a->identity(a->arrow(m).src)});
    rmap[m] = pindex.at({a->identity(a->arrow(m).tgt), m});
  }
  x.d = disc_map(x.a1, x.a0, dmap);
  x.c = disc_map(x.a1, x.a0, cmap);
  x.i = disc_map(x.a0, x.a1, imap);
  x.p = disc_map(x.a2, x.a1, pmap);
  x.m = disc_map(x.a2, x.a1, mmap);
  x.q = disc_map(x.a2, x.a1, qmap);
  x.l = disc_map(x.a1, x.a2, lmap);
  x.r = disc_map(x.a1, x.a2, rmap);
  check_delta2_cat(x);
  return x;
}

CoproductCatResult coproduct_cats(const std::vector<Cat>& summands) {
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::vector<int> identity;
  std::vector<int> obj_base, arr_base;
  for (size_t k = 0; k < summands.size(); ++k) {
    const FinCat& c = *summands[k];
    std::string pre = "s" + std::to_string(k) + ".";
    obj_base.push_back(static_cast<int>(objects.size()));
    arr_base.push_back(static_cast<int>(arrows.size()));
    for (int o = 0; o < c.object_count(); ++o) objects.push_back(pre + c.object(o));
    for (int a = 0; a < c.arrow_count(); ++a)
      arrows.push_back({pre + c.arrow(a).id, obj_base[k] + c.arrow(a).src,
                        obj_base[k] + c.arrow(a).tgt});
    for (int o = 0; o < c.object_count(); ++o) identity.push_back(arr_base[k] + c.identity(o));
  }
  std::unordered_map<std::int64_t, int> comp;
  const std::int64_t n = static_cast<std::int64_t>(arrows.size());
  for (size_t k = 0; k < summands.size(); ++k) {
    const FinCat& c = *summands[k];
    for (int g = 0; g < c.arrow_count(); ++g)
      for (int f = 0; f < c.arrow_count(); ++f)
        if (c.composable(g, f))
          comp[static_cast<std::int64_t>(arr_base[k] + g) * n + (arr_base[k] + f)] =
              arr_base[k] + c.compose(g, f);
  }
  Cat total = std::make_shared<FinCat>(FinCat::make_unchecked(
      std::move(objects), std::move(arrows), std::move(identity), std::move(comp)));
  CoproductCatResult out;
  out.cat = total;
  for (size_t k = 0; k < summands.size(); ++k) {
    Functor inj{summands[k], total, {}, {}};
    inj.obj_map.resize(summands[k]->object_count());
    inj.arr_map.resize(summands[k]->arrow_count());
    for (int o = 0; o < summands[k]->object_count(); ++o) inj.obj_map[o] = obj_base[k] + o;
    for (int a = 0; a < summands[k]->arrow_count(); ++a) inj.arr_map[a] = arr_base[k] + a;
    out.injections.push_back(inj);
  }
  return out;
}

}  // namespace catcolim
