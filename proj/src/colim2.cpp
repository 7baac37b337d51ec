#include "catcolim/colim2.hpp"

#include <algorithm>
#include <set>

namespace catcolim {

const WeightP& ColimWeight::weight() const {
  if (!mat)
    throw invalid_input("colimit is not materialized" +
                        (undecided ? ": " + undecided->detail : std::string()));
  return mat->w;
}

void require_locally_discrete(const Index& j, const char* what) {
  if (!j->locally_discrete())
    throw invalid_input(std::string(what) + ": presented constructions need a locally discrete index");
}

PresWeight present_weight(const WeightP& w) {
  require_locally_discrete(w->index, "present_weight");
  PresWeight out;
  out.index = w->index;
  int n = w->index->object_count();
  out.at.resize(n);
  std::vector<Presented> pr(n);
  for (int j = 0; j < n; ++j) {
    pr[j] = present_category(w->at[j]);
    out.at[j] = pr[j].pres;
  }
  for (auto cell : w->index->one_cells(false)) {
    auto [j, k, f] = cell;
    const Functor& F = w->act(j, k, f);
    GenAction g;
    g.vmap = F.obj_map;
    g.emap.resize(out.at[j].quiver.edges.size());
    for (int m = 0; m < w->at[j]->arrow_count(); ++m) {
      if (w->at[j]->is_identity(m)) continue;
      g.emap[pr[j].arrow_path[m].edges[0]] = pr[k].arrow_path[F.arr_map[m]];
    }
    out.action[{j, k, f}] = g;
  }
  return out;
}

static Path map_path(const Quiver& target_quiver, const GenAction& g, const Path& p) {
  Path out{g.vmap[p.src], {}};
  for (int e : p.edges) {
    const Path& im = g.emap[e];
    out.edges.insert(out.edges.end(), im.edges.begin(), im.edges.end());
  }
  (void)target_quiver;
  return out;
}

std::variant<MaterializedWeight, Undecided> materialize_weight(const PresWeight& pw, int bound) {
  MaterializedWeight out;
  int n = pw.index->object_count();
  for (int j = 0; j < n; ++j) {
    auto m = materialize(pw.at[j], bound);
    if (std::holds_alternative<Undecided>(m)) {
      Undecided u = std::get<Undecided>(m);
      u.detail = "component " + pw.index->objects[j] + ": " + u.detail;
      return u;
    }
    out.mats.push_back(std::move(std::get<Materialization>(m)));
  }
  Weight w;
  w.index = pw.index;
  for (int j = 0; j < n; ++j) w.at.push_back(out.mats[j].cat);
  for (auto cell : pw.index->one_cells(false)) {
    auto [j, k, f] = cell;
    const GenAction& g = pw.action.at({j, k, f});
    Functor F{w.at[j], w.at[k], {}, {}};
    F.obj_map = g.vmap;
    F.arr_map.resize(w.at[j]->arrow_count());
    for (int a = 0; a < w.at[j]->arrow_count(); ++a)
      F.arr_map[a] = out.mats[k].arrow_of_path(map_path(pw.at[k].quiver, g, out.mats[j].arrow_form[a]));
    w.action[{j, k, f}] = F;
  }
  out.w = make_weight(std::move(w));
  return out;
}

Functor functor_from_generators(const Materialization& m, const Cat& target,
                                const std::vector<int>& vimg, const std::vector<int>& eimg) {
  Functor f{m.cat, target, {}, {}};
  f.obj_map = vimg;
  f.arr_map.resize(m.cat->arrow_count());
  for (int a = 0; a < m.cat->arrow_count(); ++a) {
    const Path& p = m.arrow_form[a];
    int acc = target->identity(vimg[p.src]);
    for (int e : p.edges) {
      if (eimg[e] < 0) throw invalid_input("functor_from_generators: missing edge image");
      acc = target->compose(eimg[e], acc);
      if (acc < 0) throw invalid_input("functor_from_generators: images do not compose");
    }
    f.arr_map[a] = acc;
  }
  check_functor(f);
  return f;
}

void check_delta2_weight(const Delta2Weight& x) {
  check_delta2<WeightP, TwoNat>(
      x, [](const TwoNat& g, const TwoNat& f) { return compose(g, f); },
      [](const TwoNat& a, const TwoNat& b) { return equal(a, b); },
      [](const WeightP& w) { return identity_two_nat(w); }, "weight diagram");
  for (const TwoNat* t : {&x.d, &x.c, &x.i, &x.p, &x.m, &x.q, &x.l, &x.r}) require_two_natural(*t);
}

// ---- coproducts ----

CoproductResult coproduct_weights(const std::vector<WeightP>& summands, const Index& index) {
  for (const auto& s : summands)
    if (s->index.get() != index.get())
      throw invalid_input("coproduct: summand index differs from the given index");
  int n = index->object_count();
  CoproductResult out;
  out.obj_decode.resize(n);
  out.arr_decode.resize(n);
  out.enc_.assign(2, std::vector<std::map<std::pair<int, int>, int>>(n));
  Weight w;
  w.index = index;
  w.at.resize(n);
  std::vector<CoproductCatResult> cps(n);
  for (int j = 0; j < n; ++j) {
    std::vector<Cat> cats;
    for (const auto& s : summands) cats.push_back(s->at[j]);
    cps[j] = coproduct_cats(cats);
    w.at[j] = cps[j].cat;
    for (size_t s = 0; s < summands.size(); ++s) {
      for (int o = 0; o < summands[s]->at[j]->object_count(); ++o) {
        int g = cps[j].injections[s].obj_map[o];
        out.obj_decode[j].resize(std::max<size_t>(out.obj_decode[j].size(), g + 1));
        out.obj_decode[j][g] = {static_cast<int>(s), o};
        out.enc_[0][j][{static_cast<int>(s), o}] = g;
      }
      for (int a = 0; a < summands[s]->at[j]->arrow_count(); ++a) {
        int g = cps[j].injections[s].arr_map[a];
        out.arr_decode[j].resize(std::max<size_t>(out.arr_decode[j].size(), g + 1));
        out.arr_decode[j][g] = {static_cast<int>(s), a};
        out.enc_[1][j][{static_cast<int>(s), a}] = g;
      }
    }
  }
  for (auto cell : index->one_cells(true)) {
    auto [j, k, f] = cell;
    Functor F{w.at[j], w.at[k], {}, {}};
    F.obj_map.resize(w.at[j]->object_count());
    F.arr_map.resize(w.at[j]->arrow_count());
    for (int o = 0; o < w.at[j]->object_count(); ++o) {
      auto [s, local] = out.obj_decode[j][o];
      F.obj_map[o] = out.enc_[0][k].at({s, summands[s]->act(j, k, f).obj_map[local]});
    }
    for (int a = 0; a < w.at[j]->arrow_count(); ++a) {
      auto [s, local] = out.arr_decode[j][a];
      F.arr_map[a] = out.enc_[1][k].at({s, summands[s]->act(j, k, f).arr_map[local]});
    }
    w.action[{j, k, f}] = F;
  }
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const Cat& h = index->hom(j, k);
      for (int ar = 0; ar < h->arrow_count(); ++ar) {
        if (h->is_identity(ar)) continue;
        NatTransf t{w.act(j, k, h->arrow(ar).src), w.act(j, k, h->arrow(ar).tgt), {}};
        t.comp.resize(w.at[j]->object_count());
        for (int o = 0; o < w.at[j]->object_count(); ++o) {
          auto [s, local] = out.obj_decode[j][o];
          t.comp[o] = out.enc_[1][k].at({s, summands[s]->act2(j, k, ar).comp[local]});
        }
        w.action2[{j, k, ar}] = t;
      }
    }
  out.w = make_weight(std::move(w));
  for (size_t s = 0; s < summands.size(); ++s) {
    TwoNat inj{summands[s], out.w, {}};
    for (int j = 0; j < n; ++j) {
      Functor f = cps[j].injections[s];
      f.cod = out.w->at[j];
      inj.comp.push_back(f);
    }
    require_two_natural(inj);
    out.injections.push_back(inj);
  }
  out.uniqueness = "mediators are determined by case analysis on the summands";
  return out;
}

int CoproductResult::obj_encode(int j, int summand, int local) const {
  return enc_[0][j].at({summand, local});
}
int CoproductResult::arr_encode(int j, int summand, int local) const {
  return enc_[1][j].at({summand, local});
}

TwoNat CoproductResult::factorize_1(const WeightP& target, const std::vector<TwoNat>& legs) const {
  if (legs.size() != injections.size())
    throw invalid_input("coproduct factorize: wrong number of legs");
  int n = w->index->object_count();
  TwoNat med{w, target, {}};
  for (int j = 0; j < n; ++j) {
    Functor f{w->at[j], target->at[j], {}, {}};
    f.obj_map.resize(w->at[j]->object_count());
    f.arr_map.resize(w->at[j]->arrow_count());
    for (int o = 0; o < w->at[j]->object_count(); ++o) {
      auto [s, local] = obj_decode[j][o];
      f.obj_map[o] = legs[s].comp[j].obj_map[local];
    }
    for (int a = 0; a < w->at[j]->arrow_count(); ++a) {
      auto [s, local] = arr_decode[j][a];
      f.arr_map[a] = legs[s].comp[j].arr_map[local];
    }
    med.comp.push_back(f);
  }
  require_two_natural(med);
  for (size_t s = 0; s < injections.size(); ++s)
    if (!equal(compose(med, injections[s]), legs[s]))
      throw invalid_input("coproduct factorize: mediator does not restrict to a leg");
  return med;
}

Modification CoproductResult::factorize_2(const TwoNat& g, const TwoNat& h,
                                          const std::vector<Modification>& cells) const {
  if (cells.size() != injections.size())
    throw invalid_input("coproduct factorize_2: wrong number of cells");
  Modification out{g, h, {}};
  int n = w->index->object_count();
  for (int j = 0; j < n; ++j) {
    NatTransf t{g.comp[j], h.comp[j], {}};
    t.comp.resize(w->at[j]->object_count());
    for (int o = 0; o < w->at[j]->object_count(); ++o) {
      auto [s, local] = obj_decode[j][o];
      t.comp[o] = cells[s].comp[j].comp[local];
    }
    out.comp.push_back(t);
  }
  auto rep = check_modification(out);
  if (!rep.ok) throw invalid_input("coproduct factorize_2: cells do not paste: " + rep.violations[0]);
  return out;
}

// ---- coinserter ----

static void require_parallel(const TwoNat& u, const TwoNat& v, const char* what) {
  if (u.dom.get() != v.dom.get() || u.cod.get() != v.cod.get())
    throw invalid_input(std::string(what) + ": the transformations are not parallel");
}

CoinserterResult coinserter(const TwoNat& u, const TwoNat& v, int bound) {
  require_parallel(u, v, "coinserter");
  require_two_natural(u);
  require_two_natural(v);
  require_locally_discrete(u.dom->index, "coinserter");
  const WeightP& A = u.dom;
  const WeightP& B = u.cod;
  int n = A->index->object_count();

  CoinserterResult out;
  out.dom_a = A;
  out.dom_b = B;
  out.u = u;
  out.v = v;
  out.ins_edge.resize(n);
  PresWeight pw;
  pw.index = A->index;
  pw.at.resize(n);
  std::vector<Presented> pr(n);
  for (int j = 0; j < n; ++j) {
    pr[j] = present_category(B->at[j]);
    pw.at[j] = pr[j].pres;
    out.ins_edge[j].resize(A->at[j]->object_count());
    for (int x = 0; x < A->at[j]->object_count(); ++x) {
      out.ins_edge[j][x] = static_cast<int>(pw.at[j].quiver.edges.size());
      pw.at[j].quiver.edges.push_back({"ins(" + A->at[j]->object(x) + ")",
                                       u.comp[j].obj_map[x], v.comp[j].obj_map[x]});
    }
    for (int m = 0; m < A->at[j]->arrow_count(); ++m) {
      if (A->at[j]->is_identity(m)) continue;
      const Arrow& ar = A->at[j]->arrow(m);
      Path lhs = concat(pw.at[j].quiver, pr[j].arrow_path[u.comp[j].arr_map[m]],
                        Path{u.comp[j].obj_map[ar.tgt], {out.ins_edge[j][ar.tgt]}});
      Path rhs = concat(pw.at[j].quiver, Path{u.comp[j].obj_map[ar.src], {out.ins_edge[j][ar.src]}},
                        pr[j].arrow_path[v.comp[j].arr_map[m]]);
      pw.at[j].relations.emplace_back(lhs, rhs);
    }
  }
  for (auto cell : A->index->one_cells(false)) {
    auto [j, k, f] = cell;
    GenAction g;
    g.vmap = B->act(j, k, f).obj_map;
    g.emap.resize(pw.at[j].quiver.edges.size());
    for (int m = 0; m < B->at[j]->arrow_count(); ++m) {
      if (B->at[j]->is_identity(m)) continue;
      g.emap[pr[j].arrow_path[m].edges[0]] = pr[k].arrow_path[B->act(j, k, f).arr_map[m]];
    }
    for (int x = 0; x < A->at[j]->object_count(); ++x)
      g.emap[out.ins_edge[j][x]] =
          Path{u.comp[k].obj_map[A->act(j, k, f).obj_map[x]],
               {out.ins_edge[k][A->act(j, k, f).obj_map[x]]}};
    pw.action[{j, k, f}] = g;
  }
  out.built.pres = pw;
  auto m = materialize_weight(pw, bound);
  if (std::holds_alternative<Undecided>(m)) {
    out.built.undecided = std::get<Undecided>(m);
    return out;
  }
  out.built.mat = std::move(std::get<MaterializedWeight>(m));
  const MaterializedWeight& mw = *out.built.mat;
  TwoNat h{B, mw.w, {}};
  for (int j = 0; j < n; ++j) {
    Functor f{B->at[j], mw.w->at[j], {}, {}};
    f.obj_map.resize(B->at[j]->object_count());
    for (int o = 0; o < B->at[j]->object_count(); ++o) f.obj_map[o] = o;
    f.arr_map.resize(B->at[j]->arrow_count());
    for (int a = 0; a < B->at[j]->arrow_count(); ++a)
      f.arr_map[a] = mw.mats[j].arrow_of_path(pr[j].arrow_path[a]);
    check_functor(f);
    h.comp.push_back(f);
  }
  require_two_natural(h);
  out.cocone = h;
  for (int j = 0; j < n; ++j) {
    NatTransf eta{compose(h.comp[j], u.comp[j]), compose(h.comp[j], v.comp[j]), {}};
    eta.comp.resize(A->at[j]->object_count());
    for (int x = 0; x < A->at[j]->object_count(); ++x)
      eta.comp[x] = mw.mats[j].arrow_of_path(
          Path{u.comp[j].obj_map[x], {out.ins_edge[j][x]}});
    check_natural(eta);
    out.generic.push_back(eta);
  }
  out.uniqueness = "mediators are determined on the classifying generators";
  return out;
}

TwoNat CoinserterResult::factorize_1(const TwoNat& leg, const std::vector<NatTransf>& cell) const {
  const MaterializedWeight& mw = *built.mat;
  if (leg.dom.get() != dom_b.get()) throw invalid_input("coinserter factorize: leg domain mismatch");
  require_two_natural(leg);
  Modification as_mod{compose(leg, u), compose(leg, v), cell};
  auto rep = check_modification(as_mod);
  if (!rep.ok) throw invalid_input("coinserter factorize: cell is not a modification: " + rep.violations[0]);
  int n = dom_a->index->object_count();
  TwoNat med{mw.w, leg.cod, {}};
  std::vector<Presented> pr(n);
  for (int j = 0; j < n; ++j) {
    std::vector<int> eimg(built.pres.at[j].quiver.edges.size(), -1);
    Presented p = present_category(dom_b->at[j]);
    for (int m = 0; m < dom_b->at[j]->arrow_count(); ++m) {
      if (dom_b->at[j]->is_identity(m)) continue;
      eimg[p.arrow_path[m].edges[0]] = leg.comp[j].arr_map[m];
    }
    for (int x = 0; x < dom_a->at[j]->object_count(); ++x)
      eimg[ins_edge[j][x]] = cell[j].comp[x];
    med.comp.push_back(functor_from_generators(mw.mats[j], leg.cod->at[j], leg.comp[j].obj_map, eimg));
  }
  require_two_natural(med);
  if (!equal(compose(med, cocone), leg))
    throw invalid_input("coinserter factorize: mediator does not restrict to the leg");
  return med;
}

Modification CoinserterResult::factorize_2(const TwoNat& med1, const TwoNat& med2,
                                           const Modification& rho) const {
  int n = dom_a->index->object_count();
  Modification out{med1, med2, {}};
  for (int j = 0; j < n; ++j)
    out.comp.push_back(NatTransf{med1.comp[j], med2.comp[j], rho.comp[j].comp});
  auto rep = check_modification(out);
  if (!rep.ok)
    throw invalid_input("coinserter factorize_2: the cell does not descend: " + rep.violations[0]);
  return out;
}

// ---- coequifier ----

CoequifierResult coequifier(const Modification& phi, const Modification& psi, int bound) {
  auto r1 = check_modification(phi);
  auto r2 = check_modification(psi);
  if (!r1.ok || !r2.ok) throw invalid_input("coequifier: the cells are not modifications");
  if (!equal(phi.dom, psi.dom) || !equal(phi.cod, psi.cod))
    throw invalid_input("coequifier: the cells are not parallel");
  const WeightP& A = phi.dom.dom;
  const WeightP& B = phi.dom.cod;
  require_locally_discrete(A->index, "coequifier");
  int n = A->index->object_count();

  CoequifierResult out;
  out.phi = phi;
  out.psi = psi;
  PresWeight pw = present_weight(B);
  std::vector<Presented> pr(n);
  for (int j = 0; j < n; ++j) pr[j] = present_category(B->at[j]);
  for (int j = 0; j < n; ++j)
    for (int x = 0; x < A->at[j]->object_count(); ++x) {
      const Path& a = pr[j].arrow_path[phi.comp[j].comp[x]];
      const Path& b = pr[j].arrow_path[psi.comp[j].comp[x]];
      if (!(a == b)) pw.at[j].relations.emplace_back(a, b);
    }
  out.built.pres = pw;
  auto m = materialize_weight(pw, bound);
  if (std::holds_alternative<Undecided>(m)) {
    out.built.undecided = std::get<Undecided>(m);
    return out;
  }
  out.built.mat = std::move(std::get<MaterializedWeight>(m));
  const MaterializedWeight& mw = *out.built.mat;
  TwoNat h{B, mw.w, {}};
  for (int j = 0; j < n; ++j) {
    Functor f{B->at[j], mw.w->at[j], {}, {}};
    f.obj_map.resize(B->at[j]->object_count());
    for (int o = 0; o < B->at[j]->object_count(); ++o) f.obj_map[o] = o;
    f.arr_map.resize(B->at[j]->arrow_count());
    for (int a = 0; a < B->at[j]->arrow_count(); ++a)
      f.arr_map[a] = mw.mats[j].arrow_of_path(pr[j].arrow_path[a]);
    check_functor(f);
    h.comp.push_back(f);
  }
  require_two_natural(h);
  out.cocone = h;
  out.uniqueness = "mediators are determined on the quotient generators";
  return out;
}

TwoNat CoequifierResult::factorize_1(const TwoNat& leg) const {
  const WeightP& B = phi.dom.cod;
  const WeightP& A = phi.dom.dom;
  if (leg.dom.get() != B.get()) throw invalid_input("coequifier factorize: leg domain mismatch");
  require_two_natural(leg);
  int n = A->index->object_count();
  for (int j = 0; j < n; ++j)
    for (int x = 0; x < A->at[j]->object_count(); ++x)
      if (leg.comp[j].arr_map[phi.comp[j].comp[x]] != leg.comp[j].arr_map[psi.comp[j].comp[x]])
        throw invalid_input("coequifier factorize: the leg does not equate the cells");
  const MaterializedWeight& mw = *built.mat;
  TwoNat med{mw.w, leg.cod, {}};
  for (int j = 0; j < n; ++j) {
    Presented p = present_category(B->at[j]);
    std::vector<int> eimg(built.pres.at[j].quiver.edges.size(), -1);
    for (int m = 0; m < B->at[j]->arrow_count(); ++m) {
      if (B->at[j]->is_identity(m)) continue;
      eimg[p.arrow_path[m].edges[0]] = leg.comp[j].arr_map[m];
    }
    med.comp.push_back(functor_from_generators(mw.mats[j], leg.cod->at[j], leg.comp[j].obj_map, eimg));
  }
  require_two_natural(med);
  if (!equal(compose(med, cocone), leg))
    throw invalid_input("coequifier factorize: mediator does not restrict to the leg");
  return med;
}

Modification CoequifierResult::factorize_2(const TwoNat& med1, const TwoNat& med2,
                                           const Modification& rho) const {
  Modification out{med1, med2, {}};
  int n = phi.dom.dom->index->object_count();
  for (int j = 0; j < n; ++j) {
    NatTransf t{med1.comp[j], med2.comp[j], rho.comp[j].comp};
    out.comp.push_back(t);
  }
  auto rep = check_modification(out);
  if (!rep.ok)
    throw invalid_input("coequifier factorize_2: the cell does not descend: " + rep.violations[0]);
  return out;
}

// ---- coinverter ----

CoinverterResult coinverter(const Modification& alpha, int bound) {
  auto r = check_modification(alpha);
  if (!r.ok) throw invalid_input("coinverter: the cell is not a modification: " + r.violations[0]);
  const WeightP& A = alpha.dom.dom;
  const WeightP& B = alpha.dom.cod;
  require_locally_discrete(A->index, "coinverter");
  int n = A->index->object_count();

  CoinverterResult out;
  out.alpha = alpha;
  PresWeight pw;
  pw.index = A->index;
  pw.at.resize(n);
  std::vector<Presented> pr(n);
  // per j, per A-object: the inverse edge (or -1 when the component is an identity)
  std::vector<std::vector<int>> invedge(n);
  for (int j = 0; j < n; ++j) {
    pr[j] = present_category(B->at[j]);
    std::vector<int> edges;
    for (int x = 0; x < A->at[j]->object_count(); ++x) {
      int comp = alpha.comp[j].comp[x];
      if (!B->at[j]->is_identity(comp)) edges.push_back(pr[j].arrow_path[comp].edges[0]);
    }
    Localized loc = localize(pr[j].pres, edges);
    pw.at[j] = loc.pres;
    invedge[j].assign(A->at[j]->object_count(), -1);
    for (int x = 0; x < A->at[j]->object_count(); ++x) {
      int comp = alpha.comp[j].comp[x];
      if (!B->at[j]->is_identity(comp))
        invedge[j][x] = loc.inverse_edge.at(pr[j].arrow_path[comp].edges[0]);
    }
  }
  for (auto cell : A->index->one_cells(false)) {
    auto [j, k, f] = cell;
    GenAction g;
    g.vmap = B->act(j, k, f).obj_map;
    g.emap.resize(pw.at[j].quiver.edges.size());
    for (int m = 0; m < B->at[j]->arrow_count(); ++m) {
      if (B->at[j]->is_identity(m)) continue;
      g.emap[pr[j].arrow_path[m].edges[0]] = pr[k].arrow_path[B->act(j, k, f).arr_map[m]];
    }
    for (int x = 0; x < A->at[j]->object_count(); ++x) {
      if (invedge[j][x] < 0) continue;
      int fx = A->act(j, k, f).obj_map[x];
      int tgt_vertex = B->act(j, k, f).obj_map[B->at[j]->arrow(alpha.comp[j].comp[x]).tgt];
      if (invedge[k][fx] >= 0)
        g.emap[invedge[j][x]] = Path{tgt_vertex, {invedge[k][fx]}};
      else
        g.emap[invedge[j][x]] = Path{tgt_vertex, {}};
    }
    pw.action[{j, k, f}] = g;
  }
  out.built.pres = pw;
  out.inv_edge = invedge;
  auto m = materialize_weight(pw, bound);
  if (std::holds_alternative<Undecided>(m)) {
    out.built.undecided = std::get<Undecided>(m);
    return out;
  }
  out.built.mat = std::move(std::get<MaterializedWeight>(m));
  const MaterializedWeight& mw = *out.built.mat;
  TwoNat h{B, mw.w, {}};
  for (int j = 0; j < n; ++j) {
    Functor f{B->at[j], mw.w->at[j], {}, {}};
    f.obj_map.resize(B->at[j]->object_count());
    for (int o = 0; o < B->at[j]->object_count(); ++o) f.obj_map[o] = o;
    f.arr_map.resize(B->at[j]->arrow_count());
    for (int a = 0; a < B->at[j]->arrow_count(); ++a)
      f.arr_map[a] = mw.mats[j].arrow_of_path(pr[j].arrow_path[a]);
    check_functor(f);
    h.comp.push_back(f);
  }
  require_two_natural(h);
  out.cocone = h;
  out.inverse_witness.resize(n);
  for (int j = 0; j < n; ++j) {
    out.inverse_witness[j].resize(A->at[j]->object_count());
    for (int x = 0; x < A->at[j]->object_count(); ++x) {
      int comp = alpha.comp[j].comp[x];
      int img = h.comp[j].arr_map[comp];
      auto inv = mw.w->at[j]->inverse(img);
      if (!inv) throw invalid_input("coinverter: a localized component is not invertible");
      out.inverse_witness[j][x] = *inv;
    }
  }
  out.uniqueness = "mediators are determined on generators and forced inverses";
  return out;
}

TwoNat CoinverterResult::factorize_1(const TwoNat& leg) const {
  const WeightP& B = alpha.dom.cod;
  const WeightP& A = alpha.dom.dom;
  if (leg.dom.get() != B.get()) throw invalid_input("coinverter factorize: leg domain mismatch");
  require_two_natural(leg);
  int n = A->index->object_count();
  const MaterializedWeight& mw = *built.mat;
  TwoNat med{mw.w, leg.cod, {}};
  for (int j = 0; j < n; ++j) {
    Presented p = present_category(B->at[j]);
    std::vector<int> eimg(built.pres.at[j].quiver.edges.size(), -1);
    for (int m = 0; m < B->at[j]->arrow_count(); ++m) {
      if (B->at[j]->is_identity(m)) continue;
      eimg[p.arrow_path[m].edges[0]] = leg.comp[j].arr_map[m];
    }
    for (int x = 0; x < A->at[j]->object_count(); ++x) {
      int comp = alpha.comp[j].comp[x];
      if (B->at[j]->is_identity(comp)) continue;
      auto inv = leg.cod->at[j]->inverse(leg.comp[j].arr_map[comp]);
      if (!inv) throw invalid_input("coinverter factorize: the leg does not invert the cell");
      eimg[inv_edge[j][x]] = *inv;
    }
    med.comp.push_back(functor_from_generators(mw.mats[j], leg.cod->at[j], leg.comp[j].obj_map, eimg));
  }
  require_two_natural(med);
  if (!equal(compose(med, cocone), leg))
    throw invalid_input("coinverter factorize: mediator does not restrict to the leg");
  return med;
}

Modification CoinverterResult::factorize_2(const TwoNat& med1, const TwoNat& med2,
                                           const Modification& rho) const {
  Modification out{med1, med2, {}};
  int n = alpha.dom.dom->index->object_count();
  for (int j = 0; j < n; ++j)
    out.comp.push_back(NatTransf{med1.comp[j], med2.comp[j], rho.comp[j].comp});
  auto rep = check_modification(out);
  if (!rep.ok)
    throw invalid_input("coinverter factorize_2: the cell does not descend: " + rep.violations[0]);
  return out;
}

FullyFaithfulReport coinverter_two_dimensional(const CoinverterResult& r, const WeightP& test) {
  FullyFaithfulReport rep;
  if (!r.built.mat) throw invalid_input("two-dimensional check needs a materialized coinverter");
  HomCat from = hom_category(r.built.mat->w, test);
  HomCat to = hom_category(r.alpha.dom.cod, test);
  // precomposition with the cocone
  Functor pre{from.cat, to.cat, {}, {}};
  pre.obj_map.resize(from.cat->object_count());
  pre.arr_map.resize(from.cat->arrow_count());
  auto find_obj = [&](const TwoNat& t) {
    for (size_t i = 0; i < to.objs.size(); ++i)
      if (equal(to.objs[i], t)) return static_cast<int>(i);
    return -1;
  };
  for (int o = 0; o < from.cat->object_count(); ++o) {
    int img = find_obj(compose(from.objs[o], r.cocone));
    if (img < 0) {
      rep.ok = false;
      rep.detail = "a precomposite is missing from the base hom-category";
      return rep;
    }
    pre.obj_map[o] = img;
  }
  for (int a = 0; a < from.cat->arrow_count(); ++a) {
    const Modification& m = from.arrs[a];
    // whisker by the cocone
    std::vector<int> key{pre.obj_map[from.cat->arrow(a).src], pre.obj_map[from.cat->arrow(a).tgt]};
    int found = -1;
    for (int b = 0; b < to.cat->arrow_count(); ++b) {
      if (to.cat->arrow(b).src != key[0] || to.cat->arrow(b).tgt != key[1]) continue;
      bool same = true;
      for (size_t j = 0; j < m.comp.size() && same; ++j)
        for (int x = 0; x < r.alpha.dom.cod->at[j]->object_count() && same; ++x)
          same = to.arrs[b].comp[j].comp[x] ==
                 m.comp[j].comp[r.cocone.comp[j].obj_map[x]];
      if (same) {
        found = b;
        break;
      }
    }
    if (found < 0) {
      rep.ok = false;
      rep.detail = "a whiskered cell is missing from the base hom-category";
      return rep;
    }
    pre.arr_map[a] = found;
  }
  check_functor(pre);
  auto v = is_equivalence(pre);
  rep.ok = v.full && v.faithful;
  if (!rep.ok) rep.detail = v.detail;
  return rep;
}

bool is_reflexive(const Modification& alpha) {
  const WeightP& A = alpha.dom.dom;
  const WeightP& B = alpha.dom.cod;
  for (const TwoNat& k : enumerate_two_naturals(B, A)) {
    if (!equal(compose(alpha.dom, k), identity_two_nat(B))) continue;
    if (!equal(compose(alpha.cod, k), identity_two_nat(B))) continue;
    bool collapses = true;
    int n = A->index->object_count();
    for (int j = 0; j < n && collapses; ++j)
      for (int x = 0; x < B->at[j]->object_count() && collapses; ++x)
        collapses = B->at[j]->is_identity(alpha.comp[j].comp[k.comp[j].obj_map[x]]);
    if (collapses) return true;
  }
  return false;
}

bool is_liberal(const TwoNat& t) {
  for (const auto& f : t.comp)
    if (!is_bijective_on_objects(f)) return false;
  return true;
}

// ---- splitting of idempotents ----

WeightSplitResult split_idempotent_weight(const TwoNat& e) {
  if (e.dom.get() != e.cod.get()) throw invalid_input("split: not an endotransformation");
  if (!equal(compose(e, e), e)) throw invalid_input("split: not idempotent");
  require_two_natural(e);
  const WeightP& W = e.dom;
  int n = W->index->object_count();
  std::vector<SplitResult> splits;
  Weight img;
  img.index = W->index;
  for (int j = 0; j < n; ++j) {
    splits.push_back(split_idempotent(e.comp[j]));
    img.at.push_back(splits[j].image);
  }
  for (auto cell : W->index->one_cells(false)) {
    auto [j, k, f] = cell;
    img.action[{j, k, f}] = compose(splits[k].retraction, compose(W->act(j, k, f), splits[j].section));
  }
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const Cat& h = W->index->hom(j, k);
      for (int a = 0; a < h->arrow_count(); ++a) {
        if (h->is_identity(a)) continue;
        NatTransf t = whisker_right(whisker_left(splits[k].retraction, W->act2(j, k, a)),
                                    splits[j].section);
        img.action2[{j, k, a}] = NatTransf{img.action.at({j, k, h->arrow(a).src}),
                                           img.action.at({j, k, h->arrow(a).tgt}), t.comp};
      }
    }
  WeightSplitResult out;
  out.image = make_weight(std::move(img));
  TwoNat rr{W, out.image, {}}, ss{out.image, W, {}};
  for (int j = 0; j < n; ++j) {
    Functor r = splits[j].retraction;
    r.cod = out.image->at[j];
    Functor s = splits[j].section;
    s.dom = out.image->at[j];
    rr.comp.push_back(r);
    ss.comp.push_back(s);
  }
  require_two_natural(rr);
  require_two_natural(ss);
  out.retraction = rr;
  out.section = ss;
  return out;
}

}  // namespace catcolim
