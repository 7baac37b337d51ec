#include "catcolim/weights.hpp"

#include <algorithm>
#include <set>

namespace catcolim {

// ---- index 2-categories ----

int Index2Cat::object_index(const std::string& id) const {
  for (size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == id) return static_cast<int>(i);
  return -1;
}

int Index2Cat::compose_cell(int j, int k, int l, int f, int g) const {
  auto it = cell_comp_.find({j, k, l, f, g});
  if (it == cell_comp_.end())
    throw invalid_input("index: missing composite of 1-cells at (" + objects[j] + "," +
                        objects[k] + "," + objects[l] + ")");
  return it->second;
}

int Index2Cat::compose_2cell(int j, int k, int l, int a, int b) const {
  const Cat& jk = hom(j, k);
  const Cat& kl = hom(k, l);
  if (jk->is_identity(a) && kl->is_identity(b)) {
    int f = jk->arrow(a).src;
    int g = kl->arrow(b).src;
    return hom(j, l)->identity(compose_cell(j, k, l, f, g));
  }
  auto it = twocell_comp_.find({j, k, l, a, b});
  if (it == twocell_comp_.end())
    throw invalid_input("index: missing horizontal composite of 2-cells");
  return it->second;
}

bool Index2Cat::locally_discrete() const {
  int n = object_count();
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      if (hom(j, k)->arrow_count() != hom(j, k)->object_count()) return false;
  return true;
}

std::vector<std::array<int, 3>> Index2Cat::one_cells(bool include_identities) const {
  std::vector<std::array<int, 3>> out;
  int n = object_count();
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int f = 0; f < hom(j, k)->object_count(); ++f) {
        if (!include_identities && j == k && f == identity_cell(j)) continue;
        out.push_back({j, k, f});
      }
  return out;
}

void Index2Cat::check() const {
  int n = object_count();
  if (static_cast<int>(hom_.size()) != n * n) throw invalid_input("index: hom matrix size");
  for (const auto& h : hom_)
    if (!h) throw invalid_input("index: missing hom category");
  for (int j = 0; j < n; ++j) {
    int e = id_cell_[j];
    if (e < 0 || e >= hom(j, j)->object_count())
      throw invalid_input("index: identity 1-cell out of range at " + objects[j]);
  }
  // totality and laws of object-level composition
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l)
        for (int f = 0; f < hom(j, k)->object_count(); ++f)
          for (int g = 0; g < hom(k, l)->object_count(); ++g) {
            int gf = compose_cell(j, k, l, f, g);
            if (gf < 0 || gf >= hom(j, l)->object_count())
              throw invalid_input("index: composite 1-cell out of range");
          }
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int f = 0; f < hom(j, k)->object_count(); ++f) {
        if (compose_cell(j, j, k, identity_cell(j), f) != f)
          throw invalid_input("index: unit law f∘1 at " + objects[j]);
        if (compose_cell(j, k, k, f, identity_cell(k)) != f)
          throw invalid_input("index: unit law 1∘f at " + objects[k]);
      }
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m)
          for (int f = 0; f < hom(j, k)->object_count(); ++f)
            for (int g = 0; g < hom(k, l)->object_count(); ++g)
              for (int h = 0; h < hom(l, m)->object_count(); ++h)
                if (compose_cell(j, l, m, compose_cell(j, k, l, f, g), h) !=
                    compose_cell(j, k, m, f, compose_cell(k, l, m, g, h)))
                  throw invalid_input("index: associativity of 1-cell composition");
  // horizontal composition of 2-cells is a functor where it is nontrivial
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        const Cat& jk = hom(j, k);
        const Cat& kl = hom(k, l);
        const Cat& jl = hom(j, l);
        for (int a = 0; a < jk->arrow_count(); ++a)
          for (int b = 0; b < kl->arrow_count(); ++b) {
            if (jk->is_identity(a) && kl->is_identity(b)) continue;
            int ab = compose_2cell(j, k, l, a, b);
            if (jl->arrow(ab).src != compose_cell(j, k, l, jk->arrow(a).src, kl->arrow(b).src) ||
                jl->arrow(ab).tgt != compose_cell(j, k, l, jk->arrow(a).tgt, kl->arrow(b).tgt))
              throw invalid_input("index: 2-cell composite has wrong boundary");
          }
        for (int a2 = 0; a2 < jk->arrow_count(); ++a2)
          for (int a1 = 0; a1 < jk->arrow_count(); ++a1) {
            if (!jk->composable(a2, a1)) continue;
            for (int b2 = 0; b2 < kl->arrow_count(); ++b2)
              for (int b1 = 0; b1 < kl->arrow_count(); ++b1) {
                if (!kl->composable(b2, b1)) continue;
                int lhs = compose_2cell(j, k, l, jk->compose(a2, a1), kl->compose(b2, b1));
                int rhs = jl->compose(compose_2cell(j, k, l, a2, b2),
                                      compose_2cell(j, k, l, a1, b1));
                if (lhs != rhs) throw invalid_input("index: interchange law fails");
              }
          }
      }
}

std::shared_ptr<const Index2Cat> Index2Cat::make(
    std::vector<std::string> objects, std::vector<Cat> hom_matrix, std::vector<int> identity_cells,
    std::map<std::tuple<int, int, int, int, int>, int> cell_comp,
    std::map<std::tuple<int, int, int, int, int>, int> twocell_comp) {
  auto idx = std::make_shared<Index2Cat>();
  idx->objects = std::move(objects);
  idx->hom_ = std::move(hom_matrix);
  idx->id_cell_ = std::move(identity_cells);
  idx->cell_comp_ = std::move(cell_comp);
  idx->twocell_comp_ = std::move(twocell_comp);
  idx->check();
  return idx;
}

bool equal_cats(const FinCat& a, const FinCat& b) {
  if (a.object_count() != b.object_count() || a.arrow_count() != b.arrow_count()) return false;
  for (int o = 0; o < a.object_count(); ++o)
    if (a.object(o) != b.object(o) || a.identity(o) != b.identity(o)) return false;
  for (int m = 0; m < a.arrow_count(); ++m) {
    if (a.arrow(m).id != b.arrow(m).id || a.arrow(m).src != b.arrow(m).src ||
        a.arrow(m).tgt != b.arrow(m).tgt)
      return false;
  }
  for (int g = 0; g < a.arrow_count(); ++g)
    for (int f = 0; f < a.arrow_count(); ++f)
      if (a.compose(g, f) != b.compose(g, f)) return false;
  return true;
}

bool equal_index(const Index2Cat& a, const Index2Cat& b) {
  if (&a == &b) return true;
  if (a.objects != b.objects) return false;
  int n = a.object_count();
  for (int j = 0; j < n; ++j)
    if (a.identity_cell(j) != b.identity_cell(j)) return false;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      if (!equal_cats(*a.hom(j, k), *b.hom(j, k))) return false;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l)
        for (int f = 0; f < a.hom(j, k)->object_count(); ++f)
          for (int g = 0; g < a.hom(k, l)->object_count(); ++g)
            if (a.compose_cell(j, k, l, f, g) != b.compose_cell(j, k, l, f, g)) return false;
  return true;
}

Index opposite(const Index& j) {
  int n = j->object_count();
  std::vector<Cat> hom;
  hom.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) hom[a * n + b] = j->hom(b, a);
  std::vector<int> ids(n);
  for (int a = 0; a < n; ++a) ids[a] = j->identity_cell(a);
  std::map<std::tuple<int, int, int, int, int>, int> comp, comp2;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        // f in hom_op(a,b) = hom(b,a), g in hom_op(b,c) = hom(c,b)
        for (int f = 0; f < j->hom(b, a)->object_count(); ++f)
          for (int g = 0; g < j->hom(c, b)->object_count(); ++g)
            comp[{a, b, c, f, g}] = j->compose_cell(c, b, a, g, f);
        for (int x = 0; x < j->hom(b, a)->arrow_count(); ++x)
          for (int y = 0; y < j->hom(c, b)->arrow_count(); ++y) {
            if (j->hom(b, a)->is_identity(x) && j->hom(c, b)->is_identity(y)) continue;
            comp2[{a, b, c, x, y}] = j->compose_2cell(c, b, a, y, x);
          }
      }
  return Index2Cat::make(j->objects, std::move(hom), std::move(ids), std::move(comp),
                         std::move(comp2));
}

Index locally_discrete_index(const Cat& base) {
  int n = base->object_count();
  std::vector<Cat> hom(n * n);
  std::vector<std::vector<std::vector<int>>> cells(n, std::vector<std::vector<int>>(n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      std::vector<std::string> labels;
      for (int a = 0; a < base->arrow_count(); ++a)
        if (base->arrow(a).src == j && base->arrow(a).tgt == k) {
          cells[j][k].push_back(a);
          labels.push_back(base->arrow(a).id);
        }
      hom[j * n + k] = discrete(labels);
    }
  std::vector<int> ids(n);
  for (int j = 0; j < n; ++j) {
    auto& cj = cells[j][j];
    ids[j] = static_cast<int>(std::find(cj.begin(), cj.end(), base->identity(j)) - cj.begin());
  }
  std::map<std::tuple<int, int, int, int, int>, int> comp;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l)
        for (size_t f = 0; f < cells[j][k].size(); ++f)
          for (size_t g = 0; g < cells[k][l].size(); ++g) {
            int gf = base->compose(cells[k][l][g], cells[j][k][f]);
            auto& cl = cells[j][l];
            comp[{j, k, l, static_cast<int>(f), static_cast<int>(g)}] =
                static_cast<int>(std::find(cl.begin(), cl.end(), gf) - cl.begin());
          }
  std::vector<std::string> names;
  for (int j = 0; j < n; ++j) names.push_back(base->object(j));
  return Index2Cat::make(std::move(names), std::move(hom), std::move(ids), std::move(comp), {});
}

Index discrete_index(const std::vector<std::string>& obs) {
  return locally_discrete_index(discrete(obs));
}

Index terminal_index() { return discrete_index({"pt"}); }

// ---- weights ----

const Functor& Weight::act(int j, int k, int cell) const {
  auto it = action.find({j, k, cell});
  if (it == action.end()) throw invalid_input("weight: missing action for a 1-cell");
  return it->second;
}

NatTransf Weight::act2(int j, int k, int homarrow) const {
  const Cat& h = index->hom(j, k);
  if (h->is_identity(homarrow)) return identity_transf(act(j, k, h->arrow(homarrow).src));
  auto it = action2.find({j, k, homarrow});
  if (it == action2.end()) throw invalid_input("weight: missing action for a 2-cell");
  return it->second;
}

WeightP make_weight(Weight w) {
  const Index2Cat& J = *w.index;
  int n = J.object_count();
  if (static_cast<int>(w.at.size()) != n) throw invalid_input("weight: wrong number of components");
  for (int j = 0; j < n; ++j)
    if (!w.at[j]) throw invalid_input("weight: missing component category");
  for (int j = 0; j < n; ++j) {
    auto key = std::make_tuple(j, j, J.identity_cell(j));
    auto it = w.action.find(key);
    if (it == w.action.end())
      w.action.emplace(key, identity_functor(w.at[j]));
    else if (!equal(it->second, identity_functor(w.at[j])))
      throw invalid_input("weight: identity 1-cell does not act as the identity");
  }
  for (auto cell : J.one_cells(true)) {
    auto [j, k, f] = cell;
    const Functor& F = w.act(j, k, f);
    if (F.dom.get() != w.at[j].get() || F.cod.get() != w.at[k].get())
      throw invalid_input("weight: action endpoints are wrong");
    check_functor(F);
  }
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l)
        for (int f = 0; f < J.hom(j, k)->object_count(); ++f)
          for (int g = 0; g < J.hom(k, l)->object_count(); ++g) {
            int gf = J.compose_cell(j, k, l, f, g);
            if (!equal(w.act(j, l, gf), compose(w.act(k, l, g), w.act(j, k, f))))
              throw invalid_input("weight: action does not respect 1-cell composition");
          }
  // 2-cell action: boundaries, naturality, vertical and horizontal functoriality
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const Cat& h = J.hom(j, k);
      for (int a = 0; a < h->arrow_count(); ++a) {
        if (h->is_identity(a)) continue;
        NatTransf t = w.act2(j, k, a);
        if (!equal(t.dom, w.act(j, k, h->arrow(a).src)) ||
            !equal(t.cod, w.act(j, k, h->arrow(a).tgt)))
          throw invalid_input("weight: 2-cell action has wrong boundary");
        check_natural(t);
      }
      for (int a2 = 0; a2 < h->arrow_count(); ++a2)
        for (int a1 = 0; a1 < h->arrow_count(); ++a1) {
          if (!h->composable(a2, a1)) continue;
          if (h->is_identity(a2) && h->is_identity(a1)) continue;
          if (!equal(w.act2(j, k, h->compose(a2, a1)),
                     vcompose(w.act2(j, k, a2), w.act2(j, k, a1))))
            throw invalid_input("weight: 2-cell action does not respect vertical composition");
        }
    }
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        const Cat& jk = J.hom(j, k);
        const Cat& kl = J.hom(k, l);
        for (int a = 0; a < jk->arrow_count(); ++a)
          for (int b = 0; b < kl->arrow_count(); ++b) {
            if (jk->is_identity(a) && kl->is_identity(b)) continue;
            NatTransf lhs = w.act2(j, l, J.compose_2cell(j, k, l, a, b));
            NatTransf rhs = vcompose(
                whisker_right(w.act2(k, l, b), w.act(j, k, jk->arrow(a).tgt)),
                whisker_left(w.act(k, l, kl->arrow(b).src), w.act2(j, k, a)));
            if (lhs.comp != rhs.comp)
              throw invalid_input("weight: 2-cell action does not respect horizontal composition");
          }
      }
  return std::make_shared<Weight>(std::move(w));
}

WeightP representable(const Index& J, int obj) {
  if (obj < 0 || obj >= J->object_count()) throw invalid_input("representable: unknown object");
  Weight w;
  w.index = J;
  int n = J->object_count();
  w.at.resize(n);
  for (int k = 0; k < n; ++k) w.at[k] = J->hom(obj, k);
  for (auto cell : J->one_cells(true)) {
    auto [k, l, g] = cell;
    const Cat& src = J->hom(obj, k);
    const Cat& dst = J->hom(obj, l);
    Functor F{src, dst, {}, {}};
    F.obj_map.resize(src->object_count());
    F.arr_map.resize(src->arrow_count());
    for (int f = 0; f < src->object_count(); ++f)
      F.obj_map[f] = J->compose_cell(obj, k, l, f, g);
    int idg = J->hom(k, l)->identity(g);
    for (int a = 0; a < src->arrow_count(); ++a)
      F.arr_map[a] = J->compose_2cell(obj, k, l, a, idg);
    w.action[{k, l, g}] = F;
  }
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      const Cat& kl = J->hom(k, l);
      for (int b = 0; b < kl->arrow_count(); ++b) {
        if (kl->is_identity(b)) continue;
        const Cat& src = J->hom(obj, k);
        NatTransf t{w.act(k, l, kl->arrow(b).src), w.act(k, l, kl->arrow(b).tgt), {}};
        t.comp.resize(src->object_count());
        for (int f = 0; f < src->object_count(); ++f)
          t.comp[f] = J->compose_2cell(obj, k, l, src->identity(f), b);
        w.action2[{k, l, b}] = t;
      }
    }
  return make_weight(std::move(w));
}

WeightP constant_weight(const Index& J, const Cat& value) {
  Weight w;
  w.index = J;
  w.at.assign(J->object_count(), value);
  for (auto cell : J->one_cells(true)) {
    auto [j, k, f] = cell;
    w.action[{j, k, f}] = identity_functor(value);
  }
  for (int j = 0; j < J->object_count(); ++j)
    for (int k = 0; k < J->object_count(); ++k) {
      const Cat& h = J->hom(j, k);
      for (int a = 0; a < h->arrow_count(); ++a)
        if (!h->is_identity(a))
          w.action2[{j, k, a}] = identity_transf(identity_functor(value));
    }
  return make_weight(std::move(w));
}

WeightP terminal_weight(const Index& J) { return constant_weight(J, discrete(std::vector<std::string>{"*"})); }
WeightP initial_weight(const Index& J) { return constant_weight(J, discrete(0)); }

// ---- transformations ----

TwoNat identity_two_nat(const WeightP& w) {
  TwoNat t{w, w, {}};
  for (const auto& c : w->at) t.comp.push_back(identity_functor(c));
  return t;
}

TwoNat compose(const TwoNat& g, const TwoNat& f) {
  if (f.cod.get() != g.dom.get()) throw invalid_input("transformation composition: boundary mismatch");
  TwoNat t{f.dom, g.cod, {}};
  for (size_t j = 0; j < f.comp.size(); ++j) t.comp.push_back(compose(g.comp[j], f.comp[j]));
  return t;
}

bool equal(const TwoNat& a, const TwoNat& b) {
  if (a.comp.size() != b.comp.size()) return false;
  for (size_t j = 0; j < a.comp.size(); ++j)
    if (!equal(a.comp[j], b.comp[j])) return false;
  return true;
}

CheckReport check_two_natural(const TwoNat& t) {
  CheckReport rep;
  const Index2Cat& J = *t.dom->index;
  if (t.cod->index.get() != &J && !equal_index(J, *t.cod->index)) {
    rep.ok = false;
    rep.violations.push_back("indices differ");
    return rep;
  }
  for (int j = 0; j < J.object_count(); ++j) {
    std::string why;
    if (t.comp[j].dom.get() != t.dom->at[j].get() || t.comp[j].cod.get() != t.cod->at[j].get()) {
      rep.ok = false;
      rep.violations.push_back("component at " + J.objects[j] + " has wrong boundary");
      continue;
    }
    if (!is_functor(t.comp[j], &why)) {
      rep.ok = false;
      rep.violations.push_back("component at " + J.objects[j] + ": " + why);
    }
  }
  if (!rep.ok) return rep;
  for (auto cell : J.one_cells(false)) {
    auto [j, k, f] = cell;
    if (!equal(compose(t.cod->act(j, k, f), t.comp[j]), compose(t.comp[k], t.dom->act(j, k, f)))) {
      rep.ok = false;
      rep.violations.push_back("naturality square fails at 1-cell " +
                               J.hom(j, k)->object(f) + ": " + J.objects[j] + "->" + J.objects[k]);
    }
  }
  for (int j = 0; j < J.object_count(); ++j)
    for (int k = 0; k < J.object_count(); ++k) {
      const Cat& h = J.hom(j, k);
      for (int a = 0; a < h->arrow_count(); ++a) {
        if (h->is_identity(a)) continue;
        NatTransf lhs = whisker_right(t.cod->act2(j, k, a), t.comp[j]);
        NatTransf rhs = whisker_left(t.comp[k], t.dom->act2(j, k, a));
        if (lhs.comp != rhs.comp) {
          rep.ok = false;
          rep.violations.push_back("2-cell naturality fails at " + h->arrow(a).id);
        }
      }
    }
  return rep;
}

void require_two_natural(const TwoNat& t) {
  auto rep = check_two_natural(t);
  if (!rep.ok) throw invalid_input("not 2-natural: " + rep.violations.front());
}

NatTransf PseudoNat::coherence(int j, int k, int cell) const {
  if (j == k && cell == dom->index->identity_cell(j))
    return identity_transf(comp[j]);
  auto it = coh.find({j, k, cell});
  if (it == coh.end()) throw invalid_input("pseudonatural: missing coherence cell");
  return it->second;
}

CheckReport check_pseudonatural(const PseudoNat& t) {
  CheckReport rep;
  const Index2Cat& J = *t.dom->index;
  for (int j = 0; j < J.object_count(); ++j) {
    std::string why;
    if (!is_functor(t.comp[j], &why)) {
      rep.ok = false;
      rep.violations.push_back("component at " + J.objects[j] + ": " + why);
      return rep;
    }
  }
  for (auto cell : J.one_cells(false)) {
    auto [j, k, f] = cell;
    NatTransf c = t.coherence(j, k, f);
    std::string why;
    if (!equal(c.dom, compose(t.cod->act(j, k, f), t.comp[j])) ||
        !equal(c.cod, compose(t.comp[k], t.dom->act(j, k, f)))) {
      rep.ok = false;
      rep.violations.push_back("coherence boundary wrong at 1-cell " + J.hom(j, k)->object(f));
      continue;
    }
    if (!is_natural(c, &why)) {
      rep.ok = false;
      rep.violations.push_back("coherence not natural at " + J.hom(j, k)->object(f) + ": " + why);
    }
    if (!is_invertible(c)) {
      rep.ok = false;
      rep.violations.push_back("coherence not invertible at " + J.hom(j, k)->object(f));
    }
  }
  if (!rep.ok) return rep;
  // composition coherence
  for (int j = 0; j < J.object_count(); ++j)
    for (int k = 0; k < J.object_count(); ++k)
      for (int l = 0; l < J.object_count(); ++l)
        for (int f = 0; f < J.hom(j, k)->object_count(); ++f)
          for (int g = 0; g < J.hom(k, l)->object_count(); ++g) {
            int gf = J.compose_cell(j, k, l, f, g);
            NatTransf want = vcompose(whisker_right(t.coherence(k, l, g), t.dom->act(j, k, f)),
                                      whisker_left(t.cod->act(k, l, g), t.coherence(j, k, f)));
            if (t.coherence(j, l, gf).comp != want.comp) {
              rep.ok = false;
              rep.violations.push_back("composition coherence fails over (" + J.objects[j] + "," +
                                       J.objects[k] + "," + J.objects[l] + ")");
            }
          }
  // local naturality in 2-cells
  for (int j = 0; j < J.object_count(); ++j)
    for (int k = 0; k < J.object_count(); ++k) {
      const Cat& h = J.hom(j, k);
      for (int a = 0; a < h->arrow_count(); ++a) {
        if (h->is_identity(a)) continue;
        int f = h->arrow(a).src, fp = h->arrow(a).tgt;
        NatTransf lhs = vcompose(whisker_left(t.comp[k], t.dom->act2(j, k, a)), t.coherence(j, k, f));
        NatTransf rhs = vcompose(t.coherence(j, k, fp), whisker_right(t.cod->act2(j, k, a), t.comp[j]));
        if (lhs.comp != rhs.comp) {
          rep.ok = false;
          rep.violations.push_back("local naturality fails at 2-cell " + h->arrow(a).id);
        }
      }
    }
  return rep;
}

PseudoNat as_pseudo(const TwoNat& t) {
  PseudoNat p{t.dom, t.cod, t.comp, {}};
  const Index2Cat& J = *t.dom->index;
  for (auto cell : J.one_cells(false)) {
    auto [j, k, f] = cell;
    p.coh[{j, k, f}] = identity_transf(compose(t.cod->act(j, k, f), t.comp[j]));
  }
  return p;
}

bool equal(const PseudoNat& a, const PseudoNat& b) {
  if (a.comp.size() != b.comp.size()) return false;
  for (size_t j = 0; j < a.comp.size(); ++j)
    if (!equal(a.comp[j], b.comp[j])) return false;
  const Index2Cat& J = *a.dom->index;
  for (auto cell : J.one_cells(false)) {
    auto [j, k, f] = cell;
    if (a.coherence(j, k, f).comp != b.coherence(j, k, f).comp) return false;
  }
  return true;
}

PseudoNat compose_two_after_pseudo(const TwoNat& g, const PseudoNat& t) {
  if (t.cod.get() != g.dom.get()) throw invalid_input("composition: boundary mismatch");
  PseudoNat out{t.dom, g.cod, {}, {}};
  for (size_t j = 0; j < t.comp.size(); ++j) out.comp.push_back(compose(g.comp[j], t.comp[j]));
  const Index2Cat& J = *t.dom->index;
  for (auto cell : J.one_cells(false)) {
    auto [j, k, f] = cell;
    out.coh[{j, k, f}] = whisker_left(g.comp[k], t.coherence(j, k, f));
  }
  return out;
}

PseudoNat compose_pseudo(const PseudoNat& g, const PseudoNat& t) {
  if (t.cod.get() != g.dom.get()) throw invalid_input("pseudo composition: boundary mismatch");
  PseudoNat out{t.dom, g.cod, {}, {}};
  for (size_t j = 0; j < t.comp.size(); ++j) out.comp.push_back(compose(g.comp[j], t.comp[j]));
  const Index2Cat& J = *t.dom->index;
  for (auto cell : J.one_cells(false)) {
    auto [j, k, f] = cell;
    out.coh[{j, k, f}] = vcompose(whisker_left(g.comp[k], t.coherence(j, k, f)),
                                  whisker_right(g.coherence(j, k, f), t.comp[j]));
  }
  return out;
}

PseudoNat pseudo_section(const TwoNat& f) {
  const WeightP& x = f.dom;
  const WeightP& y = f.cod;
  const Index2Cat& J = *x->index;
  int n = J.object_count();
  PseudoNat s{y, x, {}, {}};
  for (int j = 0; j < n; ++j) {
    auto v = is_equivalence(f.comp[j]);
    if (v.cls != FunctorClass::surjective_equivalence && v.cls != FunctorClass::iso)
      throw invalid_input("pseudo_section: a component is not a surjective equivalence");
    Functor g{y->at[j], x->at[j], {}, {}};
    g.obj_map.assign(y->at[j]->object_count(), -1);
    g.arr_map.assign(y->at[j]->arrow_count(), -1);
    for (int o = 0; o < x->at[j]->object_count(); ++o)
      if (g.obj_map[f.comp[j].obj_map[o]] < 0) g.obj_map[f.comp[j].obj_map[o]] = o;
    for (int m = 0; m < y->at[j]->arrow_count(); ++m) {
      const Arrow& ar = y->at[j]->arrow(m);
      for (int cand : x->at[j]->arrows_between(g.obj_map[ar.src], g.obj_map[ar.tgt]))
        if (f.comp[j].arr_map[cand] == m) {
          g.arr_map[m] = cand;
          break;
        }
      if (g.arr_map[m] < 0) throw invalid_input("pseudo_section: fullness witness missing");
    }
    check_functor(g);
    s.comp.push_back(g);
  }
  for (auto cell : J.one_cells(false)) {
    auto [j, k, f1] = cell;
    NatTransf coh{compose(x->act(j, k, f1), s.comp[j]), compose(s.comp[k], y->act(j, k, f1)), {}};
    coh.comp.resize(y->at[j]->object_count());
    for (int o = 0; o < y->at[j]->object_count(); ++o) {
      int from = x->act(j, k, f1).obj_map[s.comp[j].obj_map[o]];
      int to = s.comp[k].obj_map[y->act(j, k, f1).obj_map[o]];
      int want = y->at[k]->identity(y->act(j, k, f1).obj_map[o]);
      int found = -1;
      for (int cand : x->at[k]->arrows_between(from, to))
        if (f.comp[k].arr_map[cand] == want) {
          found = cand;
          break;
        }
      if (found < 0) throw invalid_input("pseudo_section: no filler over the identity");
      coh.comp[o] = found;
    }
    s.coh[{j, k, f1}] = coh;
  }
  auto rep = check_pseudonatural(s);
  if (!rep.ok) throw invalid_input("pseudo_section: not pseudonatural: " + rep.violations[0]);
  return s;
}

CheckReport check_modification(const Modification& m) {
  CheckReport rep;
  const Index2Cat& J = *m.dom.dom->index;
  for (int j = 0; j < J.object_count(); ++j) {
    const NatTransf& mu = m.comp[j];
    std::string why;
    if (!equal(mu.dom, m.dom.comp[j]) || !equal(mu.cod, m.cod.comp[j])) {
      rep.ok = false;
      rep.violations.push_back("component boundary wrong at " + J.objects[j]);
      continue;
    }
    if (!is_natural(mu, &why)) {
      rep.ok = false;
      rep.violations.push_back("component not natural at " + J.objects[j] + ": " + why);
    }
  }
  if (!rep.ok) return rep;
  for (auto cell : J.one_cells(false)) {
    auto [j, k, f] = cell;
    NatTransf lhs = whisker_left(m.dom.cod->act(j, k, f), m.comp[j]);
    NatTransf rhs = whisker_right(m.comp[k], m.dom.dom->act(j, k, f));
    if (lhs.comp != rhs.comp) {
      rep.ok = false;
      rep.violations.push_back("modification law fails at 1-cell " + J.hom(j, k)->object(f));
    }
  }
  return rep;
}

// ---- products of weights ----

WeightProductResult product_weights(const WeightP& a, const WeightP& b) {
  if (a->index.get() != b->index.get()) throw invalid_input("product of weights: indices differ");
  const Index2Cat& J = *a->index;
  int n = J.object_count();
  std::vector<ProductResult> prods(n);
  Weight w;
  w.index = a->index;
  w.at.resize(n);
  for (int j = 0; j < n; ++j) {
    prods[j] = product(a->at[j], b->at[j]);
    w.at[j] = prods[j].cat;
  }
  for (auto cell : J.one_cells(true)) {
    auto [j, k, f] = cell;
    Functor F = pair_into_product(prods[k], compose(a->act(j, k, f), prods[j].proj1),
                                  compose(b->act(j, k, f), prods[j].proj2));
    w.action[{j, k, f}] = F;
  }
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const Cat& h = J.hom(j, k);
      for (int ar = 0; ar < h->arrow_count(); ++ar) {
        if (h->is_identity(ar)) continue;
        NatTransf ta = a->act2(j, k, ar);
        NatTransf tb = b->act2(j, k, ar);
        NatTransf t{w.act(j, k, h->arrow(ar).src), w.act(j, k, h->arrow(ar).tgt), {}};
        int nb = b->at[k]->arrow_count();
        t.comp.resize(prods[j].cat->object_count());
        int bobj = b->at[j]->object_count();
        for (int o = 0; o < prods[j].cat->object_count(); ++o) {
          int oa = o / bobj, ob = o % bobj;
          t.comp[o] = ta.comp[oa] * nb + tb.comp[ob];
        }
        w.action2[{j, k, ar}] = t;
      }
    }
  WeightProductResult out;
  WeightP wp = make_weight(std::move(w));
  out.w = wp;
  TwoNat p1{wp, a, {}}, p2{wp, b, {}};
  for (int j = 0; j < n; ++j) {
    Functor f1 = prods[j].proj1, f2 = prods[j].proj2;
    f1.dom = wp->at[j];
    f2.dom = wp->at[j];
    p1.comp.push_back(f1);
    p2.comp.push_back(f2);
  }
  out.proj1 = p1;
  out.proj2 = p2;
  return out;
}

TwoNat pair_into_product(const WeightProductResult& p, const TwoNat& f, const TwoNat& g) {
  if (f.dom.get() != g.dom.get()) throw invalid_input("pairing: domains differ");
  TwoNat out{f.dom, p.w, {}};
  const Index2Cat& J = *f.dom->index;
  for (int j = 0; j < J.object_count(); ++j) {
    ProductResult pr{p.w->at[j], p.proj1.comp[j], p.proj2.comp[j]};
    out.comp.push_back(pair_into_product(pr, f.comp[j], g.comp[j]));
  }
  return out;
}

bool pointwise_isomorphism(const TwoNat& t) {
  for (const auto& f : t.comp)
    if (is_isomorphism(f).cls != FunctorClass::iso) return false;
  return true;
}

FunctorClass pointwise_class(const TwoNat& t) {
  FunctorClass worst = FunctorClass::iso;
  auto rank = [](FunctorClass c) {
    switch (c) {
      case FunctorClass::iso: return 3;
      case FunctorClass::surjective_equivalence: return 2;
      case FunctorClass::equivalence: return 1;
      default: return 0;
    }
  };
  for (const auto& f : t.comp) {
    FunctorClass c = is_isomorphism(f).cls;
    if (rank(c) < rank(worst)) worst = c;
  }
  return worst;
}

}  // namespace catcolim
