#include "catcolim/flexq.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace catcolim {

TwoNat apply_free(const FreeWeight& src, const FreeWeight& dst,
                  const std::vector<Functor>& family_map) {
  const Index2Cat& J = *src.index;
  int n = J.object_count();
  TwoNat out{src.w, dst.w, {}};
  for (int k = 0; k < n; ++k) {
    Functor F{src.w->at[k], dst.w->at[k], {}, {}};
    F.obj_map.resize(src.w->at[k]->object_count());
    F.arr_map.resize(src.w->at[k]->arrow_count());
    for (int o = 0; o < src.w->at[k]->object_count(); ++o) {
      auto [j, cell, y] = src.obj_decode[k][o];
      F.obj_map[o] = dst.obj_enc_[k][j].at({cell, family_map[j].obj_map[y]});
    }
    for (int a = 0; a < src.w->at[k]->arrow_count(); ++a) {
      auto [j, ha, m] = src.arr_decode[k][a];
      F.arr_map[a] = dst.arr_enc_[k][j].at({ha, family_map[j].arr_map[m]});
    }
    out.comp.push_back(F);
  }
  require_two_natural(out);
  return out;
}

BarResolution bar_resolution(const WeightP& w) {
  BarResolution out;
  out.w = w;
  const Index& J = w->index;
  out.l0 = free_on_family(J, restrict_weight(w));
  out.l1 = free_on_family(J, restrict_weight(out.l0.w));
  out.l2 = free_on_family(J, restrict_weight(out.l1.w));
  out.x.a0 = out.l0.w;
  out.x.a1 = out.l1.w;
  out.x.a2 = out.l2.w;
  TwoNat eps0 = counit_free(out.l0, w);
  out.x.d = counit_free(out.l1, out.l0.w);
  out.x.c = apply_free(out.l1, out.l0, eps0.comp);
  out.x.i = apply_free(out.l0, out.l1, unit_family(out.l0));
  out.x.p = counit_free(out.l2, out.l1.w);
  out.x.m = apply_free(out.l2, out.l1, out.x.d.comp);
  out.x.q = apply_free(out.l2, out.l1, out.x.c.comp);
  out.x.l = apply_free(out.l1, out.l2, out.x.i.comp);
  out.x.r = apply_free(out.l1, out.l2, unit_family(out.l1));
  check_delta2_weight(out.x);
  return out;
}

std::variant<QResult, Undecided> q_construction(const WeightP& w, int bound) {
  QResult out;
  out.w = w;
  out.bar = bar_resolution(w);
  out.codescent = reflexive_codescent(out.bar.x, bound);
  if (!out.codescent.built.materialized()) return *out.codescent.built.undecided;
  out.qw = out.codescent.built.weight();
  out.provenance = "bar-construction";
  const Index2Cat& J = *w->index;
  int n = J.object_count();

  // the algebra cocone on w itself: its cell components are identities
  TwoNat eps0 = counit_free(out.bar.l0, w);
  LaxCocone algebra;
  algebra.vertex = w;
  algebra.leg = eps0;
  for (int j = 0; j < n; ++j) {
    NatTransf cell{compose(eps0.comp[j], out.bar.x.d.comp[j]),
                   compose(eps0.comp[j], out.bar.x.c.comp[j]),
                   {}};
    cell.comp.resize(out.bar.x.a1->at[j]->object_count());
    for (int v = 0; v < out.bar.x.a1->at[j]->object_count(); ++v) {
      int dv = out.bar.x.d.comp[j].obj_map[v];
      cell.comp[v] = w->at[j]->identity(eps0.comp[j].obj_map[dv]);
    }
    check_natural(cell);
    algebra.cell.push_back(cell);
  }
  out.q = out.codescent.factorize_1(algebra);

  // the universal section assembled from the unit
  PseudoNat p{w, out.qw, {}, {}};
  for (int j = 0; j < n; ++j) {
    int idc = J.identity_cell(j);
    int ida = J.hom(j, j)->identity(idc);
    Functor F{w->at[j], out.qw->at[j], {}, {}};
    F.obj_map.resize(w->at[j]->object_count());
    F.arr_map.resize(w->at[j]->arrow_count());
    for (int x = 0; x < w->at[j]->object_count(); ++x)
      F.obj_map[x] = out.bar.l0.obj_enc_[j][j].at({idc, x});
    for (int m = 0; m < w->at[j]->arrow_count(); ++m)
      F.arr_map[m] = out.codescent.cocone.leg.comp[j].arr_map[out.bar.l0.arr_enc_[j][j].at({ida, m})];
    check_functor(F);
    p.comp.push_back(F);
  }
  for (auto cell : J.one_cells(false)) {
    auto [j, k, f] = cell;
    NatTransf coh{compose(out.qw->act(j, k, f), p.comp[j]),
                  compose(p.comp[k], w->act(j, k, f)), {}};
    coh.comp.resize(w->at[j]->object_count());
    int idk = J.identity_cell(k);
    for (int x = 0; x < w->at[j]->object_count(); ++x) {
      int e_inner = out.bar.l0.obj_enc_[k][j].at({f, x});
      int e = out.bar.l1.obj_enc_[k][k].at({idk, e_inner});
      coh.comp[x] = out.codescent.cocone.cell[k].comp[e];
    }
    p.coh[{j, k, f}] = coh;
  }
  auto rep = check_pseudonatural(p);
  if (!rep.ok) throw invalid_input("classifier section is not pseudonatural: " + rep.violations[0]);
  out.p = p;

  // the section property and the counit shape
  PseudoNat qp = compose_two_after_pseudo(out.q, out.p);
  if (!equal(qp, as_pseudo(identity_two_nat(w))))
    throw invalid_input("classifier: the section does not split the counit");
  for (int j = 0; j < n; ++j) {
    auto v = is_equivalence(out.q.comp[j]);
    if (v.cls != FunctorClass::surjective_equivalence && v.cls != FunctorClass::iso)
      throw invalid_input("classifier: a counit component is not a surjective equivalence");
  }

  if (J.locally_discrete()) {
    ExplicitQ ex = explicit_q_candidate(w);
    out.cross_check.checked = true;
    out.cross_check.pointwise_iso = true;
    // canonical comparison: vertices match by construction, inserted cells
    // go to the arrows over identities
    for (int k = 0; k < n && out.cross_check.pointwise_iso; ++k) {
      const Materialization& mk = out.codescent.built.mat->mats[k];
      std::vector<int> vimg(mk.cat->object_count());
      for (int v = 0; v < mk.cat->object_count(); ++v) {
        auto [j, cell, x] = out.bar.l0.obj_decode[k][v];
        vimg[v] = ex.obj_encode[k].at({j, cell, x});
      }
      std::vector<int> eimg(out.codescent.built.pres.at[k].quiver.edges.size(), -1);
      // level-0 arrows map to the arrows over their underlying action image
      Presented pr0 = present_category(out.bar.l0.w->at[k]);
      for (int a = 0; a < out.bar.l0.w->at[k]->arrow_count(); ++a) {
        if (out.bar.l0.w->at[k]->is_identity(a)) continue;
        auto [j, ha, m] = out.bar.l0.arr_decode[k][a];
        int cellobj = J.hom(j, k)->arrow(ha).src;
        int base = w->act(j, k, cellobj).arr_map[m];
        int from = vimg[out.bar.l0.w->at[k]->arrow(a).src];
        int to = vimg[out.bar.l0.w->at[k]->arrow(a).tgt];
        int found = -1;
        for (int b : ex.qw->at[k]->arrows_between(from, to))
          if (ex.q.comp[k].arr_map[b] == base) {
            found = b;
            break;
          }
        if (found < 0) {
          out.cross_check.pointwise_iso = false;
          out.cross_check.detail = "no candidate arrow for a level-0 generator";
          break;
        }
        eimg[pr0.arrow_path[a].edges[0]] = found;
      }
      if (!out.cross_check.pointwise_iso) break;
      for (int e1 = 0; e1 < out.bar.x.a1->at[k]->object_count(); ++e1) {
        int dv = out.bar.x.d.comp[k].obj_map[e1];
        int cv = out.bar.x.c.comp[k].obj_map[e1];
        // the unique arrow over the identity of the common value
        int value_obj = out.q.comp[k].obj_map[dv];
        int want = w->at[k]->identity(value_obj);
        int found = -1;
        for (int a : ex.qw->at[k]->arrows_between(vimg[dv], vimg[cv]))
          if (ex.q.comp[k].arr_map[a] == want) {
            found = a;
            break;
          }
        if (found < 0) {
          out.cross_check.pointwise_iso = false;
          out.cross_check.detail = "no candidate arrow for an inserted cell";
          break;
        }
        eimg[out.codescent.ins_edge[k][e1]] = found;
        auto inv = ex.qw->at[k]->inverse(found);
        if (!inv) {
          out.cross_check.pointwise_iso = false;
          out.cross_check.detail = "candidate cell is not invertible";
          break;
        }
        eimg[out.codescent.inv_edge[k][e1]] = *inv;
      }
      if (!out.cross_check.pointwise_iso) break;
      try {
        Functor cmp = functor_from_generators(mk, ex.qw->at[k], vimg, eimg);
        if (is_isomorphism(cmp).cls != FunctorClass::iso) {
          out.cross_check.pointwise_iso = false;
          out.cross_check.detail = "comparison is not an isomorphism at " + J.objects[k];
        }
      } catch (const invalid_input& e) {
        out.cross_check.pointwise_iso = false;
        out.cross_check.detail = e.what();
      }
    }
  }
  return out;
}

ExplicitQ explicit_q_candidate(const WeightP& w) {
  const Index2Cat& J = *w->index;
  require_locally_discrete(w->index, "explicit classifier candidate");
  int n = J.object_count();
  ExplicitQ out;
  out.obj_decode.resize(n);
  out.obj_encode.resize(n);
  Weight qw;
  qw.index = w->index;
  qw.at.resize(n);
  std::vector<std::vector<int>> arrow_decode(n);  // per k, per arrow: base arrow
  for (int k = 0; k < n; ++k) {
    std::vector<std::string> objects;
    for (int j = 0; j < n; ++j) {
      const Cat& h = J.hom(j, k);
      for (int f = 0; f < h->object_count(); ++f)
        for (int x = 0; x < w->at[j]->object_count(); ++x) {
          out.obj_encode[k][{j, f, x}] = static_cast<int>(objects.size());
          out.obj_decode[k].push_back({j, f, x});
          objects.push_back("(" + J.objects[j] + "." + h->object(f) + "|" + w->at[j]->object(x) +
                            ")");
        }
    }
    std::vector<Arrow> arrows;
    std::vector<int> identity(objects.size(), -1);
    const Cat& base = w->at[k];
    auto value_of = [&](int o) {
      auto [j, f, x] = out.obj_decode[k][o];
      return w->act(j, k, f).obj_map[x];
    };
    for (size_t u = 0; u < objects.size(); ++u)
      for (size_t v = 0; v < objects.size(); ++v)
        for (int a : base->arrows_between(value_of(static_cast<int>(u)),
                                          value_of(static_cast<int>(v)))) {
          if (base->is_identity(a) && u == v)
            identity[u] = static_cast<int>(arrows.size());
          arrow_decode[k].push_back(a);
          arrows.push_back({objects[u] + ">" + objects[v] + ":" + base->arrow(a).id,
                            static_cast<int>(u), static_cast<int>(v)});
        }
    std::unordered_map<std::int64_t, int> comp;
    const std::int64_t na = static_cast<std::int64_t>(arrows.size());
    std::map<std::tuple<int, int, int>, int> find_arrow;
    for (std::int64_t a = 0; a < na; ++a)
      find_arrow[std::make_tuple(arrows[a].src, arrows[a].tgt, arrow_decode[k][a])] = static_cast<int>(a);
    for (std::int64_t g = 0; g < na; ++g)
      for (std::int64_t f = 0; f < na; ++f) {
        if (arrows[f].tgt != arrows[g].src) continue;
        int base_comp = base->compose(arrow_decode[k][g], arrow_decode[k][f]);
        comp[g * na + f] = find_arrow.at(std::make_tuple(arrows[f].src, arrows[g].tgt, base_comp));
      }
    qw.at[k] = std::make_shared<FinCat>(FinCat::make_unchecked(std::move(objects),
                                                               std::move(arrows),
                                                               std::move(identity),
                                                               std::move(comp)));
  }
  for (auto cell : J.one_cells(true)) {
    auto [k, l, g] = cell;
    Functor F{qw.at[k], qw.at[l], {}, {}};
    F.obj_map.resize(qw.at[k]->object_count());
    F.arr_map.resize(qw.at[k]->arrow_count());
    for (int o = 0; o < qw.at[k]->object_count(); ++o) {
      auto [j, f, x] = out.obj_decode[k][o];
      F.obj_map[o] = out.obj_encode[l].at({j, J.compose_cell(j, k, l, f, g), x});
    }
    for (int a = 0; a < qw.at[k]->arrow_count(); ++a) {
      int u = qw.at[k]->arrow(a).src, v = qw.at[k]->arrow(a).tgt;
      int base_img = w->act(k, l, g).arr_map[arrow_decode[k][a]];
      int uu = F.obj_map[u], vv = F.obj_map[v];
      int found = -1;
      for (int b : qw.at[l]->arrows_between(uu, vv))
        if (arrow_decode[l][b] == base_img) {
          found = b;
          break;
        }
      F.arr_map[a] = found;
    }
    qw.action[{k, l, g}] = F;
  }
  WeightP qwp = make_weight(std::move(qw));
  out.qw = qwp;
  TwoNat q{qwp, w, {}};
  for (int k = 0; k < n; ++k) {
    Functor F{qwp->at[k], w->at[k], {}, {}};
    F.obj_map.resize(qwp->at[k]->object_count());
    F.arr_map.resize(qwp->at[k]->arrow_count());
    for (int o = 0; o < qwp->at[k]->object_count(); ++o) {
      auto [j, f, x] = out.obj_decode[k][o];
      F.obj_map[o] = w->act(j, k, f).obj_map[x];
    }
    for (int a = 0; a < qwp->at[k]->arrow_count(); ++a) F.arr_map[a] = arrow_decode[k][a];
    check_functor(F);
    q.comp.push_back(F);
  }
  require_two_natural(q);
  out.q = q;
  PseudoNat p{w, qwp, {}, {}};
  for (int k = 0; k < n; ++k) {
    int idc = J.identity_cell(k);
    Functor F{w->at[k], qwp->at[k], {}, {}};
    F.obj_map.resize(w->at[k]->object_count());
    F.arr_map.resize(w->at[k]->arrow_count());
    for (int x = 0; x < w->at[k]->object_count(); ++x)
      F.obj_map[x] = out.obj_encode[k].at({k, idc, x});
    for (int m = 0; m < w->at[k]->arrow_count(); ++m) {
      int u = F.obj_map[w->at[k]->arrow(m).src], v = F.obj_map[w->at[k]->arrow(m).tgt];
      int found = -1;
      for (int b : qwp->at[k]->arrows_between(u, v))
        if (arrow_decode[k][b] == m) {
          found = b;
          break;
        }
      F.arr_map[m] = found;
    }
    check_functor(F);
    p.comp.push_back(F);
  }
  for (auto cell : J.one_cells(false)) {
    auto [j, k, f] = cell;
    NatTransf coh{compose(qwp->act(j, k, f), p.comp[j]), compose(p.comp[k], w->act(j, k, f)), {}};
    coh.comp.resize(w->at[j]->object_count());
    for (int x = 0; x < w->at[j]->object_count(); ++x) {
      int from = out.obj_encode[k].at({j, f, x});
      int to = out.obj_encode[k].at({k, J.identity_cell(k), w->act(j, k, f).obj_map[x]});
      int want = w->at[k]->identity(w->act(j, k, f).obj_map[x]);
      int found = -1;
      for (int b : qwp->at[k]->arrows_between(from, to))
        if (arrow_decode[k][b] == want) {
          found = b;
          break;
        }
      coh.comp[x] = found;
    }
    p.coh[{j, k, f}] = coh;
  }
  auto rep = check_pseudonatural(p);
  if (!rep.ok)
    throw invalid_input("explicit candidate: section is not pseudonatural: " + rep.violations[0]);
  out.p = p;
  return out;
}

TwoNat classify_pseudonatural(const QResult& qr, const PseudoNat& t) {
  auto rep = check_pseudonatural(t);
  if (!rep.ok) throw invalid_input("classify: input is not pseudonatural: " + rep.violations[0]);
  if (t.dom.get() != qr.w.get()) throw invalid_input("classify: domain mismatch");
  const WeightP& x = t.cod;
  const Index2Cat& J = *qr.w->index;
  int n = J.object_count();
  TwoNat med{qr.qw, x, {}};
  for (int k = 0; k < n; ++k) {
    const Materialization& mk = qr.codescent.built.mat->mats[k];
    std::vector<int> vimg(mk.cat->object_count());
    for (int v = 0; v < mk.cat->object_count(); ++v) {
      auto [j, cell, y] = qr.bar.l0.obj_decode[k][v];
      vimg[v] = x->act(j, k, cell).obj_map[t.comp[j].obj_map[y]];
    }
    std::vector<int> eimg(qr.codescent.built.pres.at[k].quiver.edges.size(), -1);
    // level-0 arrows: pairs of a 1-cell and an arrow of the family
    Presented pr0 = present_category(qr.bar.l0.w->at[k]);
    for (int a = 0; a < qr.bar.l0.w->at[k]->arrow_count(); ++a) {
      if (qr.bar.l0.w->at[k]->is_identity(a)) continue;
      auto [j, ha, m] = qr.bar.l0.arr_decode[k][a];
      int cellobj = J.hom(j, k)->arrow(ha).src;
      eimg[pr0.arrow_path[a].edges[0]] = x->act(j, k, cellobj).arr_map[t.comp[j].arr_map[m]];
    }
    // inserted cells: coherence of t, pushed forward along the outer 1-cell
    for (int e1 = 0; e1 < qr.bar.x.a1->at[k]->object_count(); ++e1) {
      auto [j1, g, einner] = qr.bar.l1.obj_decode[k][e1];
      auto [j0, fcell, y] = qr.bar.l0.obj_decode[j1][einner];
      // the cell names the arrow  (g∘f)·y  ->  g·(f·y)  over t's coherence
      int coh_arrow = t.coherence(j0, j1, fcell).comp[y];
      int img = x->act(j1, k, g).arr_map[coh_arrow];
      eimg[qr.codescent.ins_edge[k][e1]] = img;
      auto inv = x->at[k]->inverse(img);
      if (!inv) throw invalid_input("classify: a coherence image is not invertible");
      eimg[qr.codescent.inv_edge[k][e1]] = *inv;
    }
    med.comp.push_back(functor_from_generators(mk, x->at[k], vimg, eimg));
  }
  require_two_natural(med);
  PseudoNat through = compose_two_after_pseudo(med, qr.p);
  if (!equal(through, t))
    throw invalid_input("classify: the factorization does not recover the input");
  return med;
}

ClassifierReport verify_classifier(const QResult& qr, const WeightP& x) {
  ClassifierReport rep;
  auto pseudos = enumerate_pseudonaturals(qr.w, x);
  rep.pseudonaturals = static_cast<int>(pseudos.size());
  auto stricts = enumerate_two_naturals(qr.qw, x);
  for (const auto& t : pseudos) {
    int count = 0;
    for (const auto& u : stricts)
      if (equal(compose_two_after_pseudo(u, qr.p), t)) ++count;
    bool constructive = true;
    try {
      TwoNat med = classify_pseudonatural(qr, t);
      (void)med;
    } catch (const invalid_input& e) {
      constructive = false;
      rep.failures.push_back(std::string("constructive factorization failed: ") + e.what());
    }
    if (count != 1 || !constructive) {
      rep.ok = false;
      if (count != 1)
        rep.failures.push_back("a pseudonatural admits " + std::to_string(count) +
                               " strict factorizations");
    }
  }
  return rep;
}

// ---- flexibility ----

namespace {

struct SectionSearch {
  const WeightP& w;
  const QResult& qr;
  std::vector<std::vector<int>> obj_assign;  // per j, per object of w(j); -1 unset
  unsigned long long space = 1;
  bool found = false;
  TwoNat witness;

  explicit SectionSearch(const WeightP& ww, const QResult& q) : w(ww), qr(q) {
    int n = w->index->object_count();
    obj_assign.resize(n);
    for (int j = 0; j < n; ++j) obj_assign[j].assign(w->at[j]->object_count(), -1);
  }

  std::vector<int> fiber(int j, int x) const {
    std::vector<int> out;
    for (int o = 0; o < qr.qw->at[j]->object_count(); ++o)
      if (qr.q.comp[j].obj_map[o] == x) out.push_back(o);
    return out;
  }

  bool propagate(std::vector<std::pair<int, int>> frontier) {
    const Index2Cat& J = *w->index;
    while (!frontier.empty()) {
      auto [j, x] = frontier.back();
      frontier.pop_back();
      for (auto cell : J.one_cells(false)) {
        auto [a, b, f] = cell;
        if (a != j) continue;
        int fx = w->act(a, b, f).obj_map[x];
        int forced = qr.qw->act(a, b, f).obj_map[obj_assign[j][x]];
        if (obj_assign[b][fx] < 0) {
          obj_assign[b][fx] = forced;
          frontier.push_back({b, fx});
        } else if (obj_assign[b][fx] != forced) {
          return false;
        }
      }
    }
    return true;
  }

  bool complete_objects(int n) {
    for (int j = 0; j < n; ++j)
      for (int x = 0; x < w->at[j]->object_count(); ++x)
        if (obj_assign[j][x] < 0) {
          auto fib = fiber(j, x);
          space = space > (1ull << 60) ? space : space * std::max<size_t>(fib.size(), 1);
          for (int cand : fib) {
            auto saved = obj_assign;
            obj_assign[j][x] = cand;
            if (propagate({{j, x}}) && complete_objects(n)) return true;
            obj_assign = saved;
          }
          return false;
        }
    return finish(n);
  }

  bool finish(int n) {
    // arrow components: for pointwise-discrete weights they are forced
    TwoNat s{w, qr.qw, {}};
    for (int j = 0; j < n; ++j) {
      Functor f{w->at[j], qr.qw->at[j], {}, {}};
      f.obj_map = obj_assign[j];
      f.arr_map.assign(w->at[j]->arrow_count(), -1);
      for (int o = 0; o < w->at[j]->object_count(); ++o)
        f.arr_map[w->at[j]->identity(o)] = qr.qw->at[j]->identity(obj_assign[j][o]);
      s.comp.push_back(f);
    }
    // assign the non-identity arrows per component by exhaustive search over
    // the fibers, then check everything
    std::vector<std::pair<int, int>> pending;
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < w->at[j]->arrow_count(); ++m)
        if (!w->at[j]->is_identity(m)) pending.push_back({j, m});
    std::function<bool(size_t)> assign = [&](size_t i) -> bool {
      if (i == pending.size()) {
        for (int j = 0; j < n; ++j) {
          std::string why;
          if (!is_functor(s.comp[j], &why)) return false;
        }
        if (!check_two_natural(s).ok) return false;
        if (!equal(compose(qr.q, s), identity_two_nat(w))) return false;
        witness = s;
        return true;
      }
      auto [j, m] = pending[i];
      const Arrow& ar = w->at[j]->arrow(m);
      for (int cand : qr.qw->at[j]->arrows_between(obj_assign[j][ar.src], obj_assign[j][ar.tgt])) {
        if (qr.q.comp[j].arr_map[cand] != m) continue;
        s.comp[j].arr_map[m] = cand;
        if (assign(i + 1)) return true;
      }
      s.comp[j].arr_map[m] = -1;
      return false;
    };
    if (assign(0)) {
      found = true;
      return true;
    }
    return false;
  }
};

}  // namespace

std::variant<FlexibilityVerdict, Undecided> is_flexible(const WeightP& w, int bound) {
  auto q = q_construction(w, bound);
  if (std::holds_alternative<Undecided>(q)) return std::get<Undecided>(q);
  FlexibilityVerdict out;
  out.q = std::make_shared<QResult>(std::move(std::get<QResult>(q)));
  SectionSearch search(w, *out.q);
  int n = w->index->object_count();
  bool ok = search.complete_objects(n);
  out.search_space_size = search.space;
  if (ok && search.found) {
    out.flexible = true;
    out.section = search.witness;
  }
  return out;
}

PseudocolimitResult pseudocolimit(const WeightP& w, const WeightP& d, int bound) {
  auto q = q_construction(w, bound);
  if (std::holds_alternative<Undecided>(q))
    throw invalid_input("pseudocolimit: classifier undecided: " + std::get<Undecided>(q).detail);
  PseudocolimitResult out;
  out.q = std::make_shared<QResult>(std::move(std::get<QResult>(q)));
  out.colim = weighted_colimit(out.q->qw, d, bound);
  return out;
}

// bounded search for two parallel normal forms with equal images: detects a
// faithfulness failure of the comparison on a presented colimit
static bool presented_faithfulness_gap(const ColimResult& presented, const ColimResult& target,
                                       const TwoNat& t, int bound, std::string* detail) {
  auto comp = complete_presentation(presented.pres, bound);
  if (std::holds_alternative<Undecided>(comp)) return false;
  RewriteSystem rs = std::move(std::get<RewriteSystem>(comp));
  const Quiver& q = rs.quiver;
  // images of the presentation generators in the materialized target
  int n = static_cast<int>(presented.legs_dom.size());
  std::vector<int> vimg(q.vertices.size(), -1);
  std::vector<int> eimg(q.edges.size(), -1);
  for (int o = 0; o < presented.total->object_count(); ++o) {
    auto [j, local] = presented.obj_decode[o];
    ProductResult vr = target.legs_dom[j];
    Functor into = pair_into_product(vr, compose(t.comp[j], presented.legs_dom[j].proj1),
                                     presented.legs_dom[j].proj2);
    vimg[presented.glue.obj_class[o]] = target.cocone[j].obj_map[into.obj_map[local]];
  }
  for (int a = 0; a < presented.total->arrow_count(); ++a) {
    if (presented.total->is_identity(a)) continue;
    auto [j, local] = presented.arr_decode[a];
    ProductResult vr = target.legs_dom[j];
    Functor into = pair_into_product(vr, compose(t.comp[j], presented.legs_dom[j].proj1),
                                     presented.legs_dom[j].proj2);
    const Path& p = presented.glue.arrow_path[a];
    if (p.edges.empty()) continue;
    eimg[p.edges[0]] = target.cocone[j].arr_map[into.arr_map[local]];
  }
  auto eval = [&](const Path& p) {
    int acc = target.cat->identity(vimg[p.src]);
    for (int e : p.edges) {
      if (eimg[e] < 0) return -1;
      acc = target.cat->compose(eimg[e], acc);
      if (acc < 0) return -1;
    }
    return acc;
  };
  // enumerate normal forms up to a small length
  std::vector<Path> forms;
  for (size_t v = 0; v < q.vertices.size(); ++v) forms.push_back({static_cast<int>(v), {}});
  size_t begin = 0;
  const int kLen = 4;
  const size_t kCap = 4000;
  std::vector<std::vector<int>> out_edges(q.vertices.size());
  for (size_t e = 0; e < q.edges.size(); ++e) out_edges[q.edges[e].src].push_back(static_cast<int>(e));
  for (int len = 1; len <= kLen && forms.size() < kCap; ++len) {
    size_t end = forms.size();
    for (size_t i = begin; i < end && forms.size() < kCap; ++i)
      for (int e : out_edges[path_target(q, forms[i])]) {
        Path cand = forms[i];
        cand.edges.push_back(e);
        if (rs.normal_form(cand) == cand) forms.push_back(cand);
      }
    begin = end;
  }
  for (size_t i = 0; i < forms.size(); ++i)
    for (size_t j = i + 1; j < forms.size(); ++j) {
      const Path& a = forms[i];
      const Path& b = forms[j];
      if (a.src != b.src || path_target(q, a) != path_target(q, b)) continue;
      int ia = eval(a), ib = eval(b);
      if (ia < 0 || ib < 0) continue;
      if (ia == ib) {
        if (detail)
          *detail = "parallel arrows " + render_path(q, a) + " and " + render_path(q, b) +
                    " are distinct in the classifier colimit but agree in the strict colimit";
        return true;
      }
    }
  return false;
}

BicolimVerdict bicolimit_check_counit(const QResult& qr, const WeightP& d, int bound) {
  BicolimVerdict out;
  ColimResult wd = weighted_colimit(qr.w, d, bound);
  ColimResult qd = weighted_colimit(qr.qw, d, bound);
  if (wd.mat && qd.mat) {
    Functor cmp = colimit_map_weight(qd, wd, qr.q);
    out.comparison = is_equivalence(cmp);
    out.outcome = out.comparison.cls == FunctorClass::none ? BicolimOutcome::fails
                                                           : BicolimOutcome::equivalence;
    if (out.outcome == BicolimOutcome::fails) out.detail = out.comparison.detail;
    return out;
  }
  if (wd.mat && !qd.mat) {
    std::string detail;
    if (presented_faithfulness_gap(qd, wd, qr.q, bound, &detail)) {
      out.outcome = BicolimOutcome::fails;
      out.detail = detail;
      return out;
    }
    out.outcome = BicolimOutcome::undecided;
    out.detail = "classifier-weighted colimit did not materialize: " + qd.undecided->detail;
    return out;
  }
  out.outcome = BicolimOutcome::undecided;
  out.detail = "strict colimit did not materialize";
  return out;
}

BicolimVerdict bicolimit_check_invariance(const WeightP& w, const TwoNat& f, int bound) {
  BicolimVerdict out;
  for (const auto& comp : f.comp) {
    auto v = is_equivalence(comp);
    if (v.cls == FunctorClass::none)
      throw invalid_input("invariance check: the diagram map is not a pointwise equivalence");
  }
  ColimResult wd = weighted_colimit(w, f.dom, bound);
  ColimResult we = weighted_colimit(w, f.cod, bound);
  if (!wd.mat || !we.mat) {
    out.outcome = BicolimOutcome::undecided;
    out.detail = "a colimit did not materialize";
    return out;
  }
  Functor cmp = colimit_map_diagram(wd, we, f);
  out.comparison = is_equivalence(cmp);
  out.outcome = out.comparison.cls == FunctorClass::none ? BicolimOutcome::fails
                                                         : BicolimOutcome::equivalence;
  if (out.outcome == BicolimOutcome::fails) out.detail = out.comparison.detail;
  return out;
}

}  // namespace catcolim
