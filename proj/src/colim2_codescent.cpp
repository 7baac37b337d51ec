#include <algorithm>
#include <set>

#include "catcolim/colim2.hpp"

namespace catcolim {

void check_lax_cocone(const Delta2Weight& x, const LaxCocone& c, bool invertible) {
  if (c.leg.dom.get() != x.a0.get()) throw invalid_input("cocone: leg does not start at level 0");
  require_two_natural(c.leg);
  const Index2Cat& J = *x.a0->index;
  int n = J.object_count();
  if (static_cast<int>(c.cell.size()) != n) throw invalid_input("cocone: wrong number of cells");
  Modification as_mod{compose(c.leg, x.d), compose(c.leg, x.c), c.cell};
  auto rep = check_modification(as_mod);
  if (!rep.ok) throw invalid_input("cocone: cell is not a modification: " + rep.violations[0]);
  for (int j = 0; j < n; ++j) {
    const Cat& t = c.vertex->at[j];
    for (int y = 0; y < x.a2->at[j]->object_count(); ++y) {
      int py = x.p.comp[j].obj_map[y];
      int qy = x.q.comp[j].obj_map[y];
      int my = x.m.comp[j].obj_map[y];
      if (t->compose(c.cell[j].comp[qy], c.cell[j].comp[py]) != c.cell[j].comp[my])
        throw invalid_input("cocone: pasting equation fails at a composable pair");
    }
    for (int a = 0; a < x.a0->at[j]->object_count(); ++a)
      if (!t->is_identity(c.cell[j].comp[x.i.comp[j].obj_map[a]]))
        throw invalid_input("cocone: degeneracy equation fails at an object");
    if (invertible)
      for (int v = 0; v < x.a1->at[j]->object_count(); ++v)
        if (!t->is_iso_arrow(c.cell[j].comp[v]))
          throw invalid_input("cocone: cell component is not invertible");
  }
}

namespace {

struct LaxPres {
  PresWeight pw;
  std::vector<std::vector<int>> ins_edge;
  std::vector<Presented> pr;  // presentations of the level-0 categories
};

// presentation of the lax codescent object: the coinserter of (d, c) with the
// two cocone equations imposed as coequifiers
LaxPres lax_codescent_presentation(const Delta2Weight& x) {
  check_delta2_weight(x);
  require_locally_discrete(x.a0->index, "codescent");
  const WeightP& A1 = x.a1;
  const WeightP& A0 = x.a0;
  const Index2Cat& J = *A0->index;
  int n = J.object_count();
  LaxPres out;
  out.pw.index = A0->index;
  out.pw.at.resize(n);
  out.ins_edge.resize(n);
  out.pr.resize(n);
  for (int j = 0; j < n; ++j) {
    out.pr[j] = present_category(A0->at[j]);
    PresCat& pc = out.pw.at[j];
    pc = out.pr[j].pres;
    out.ins_edge[j].resize(A1->at[j]->object_count());
    for (int v = 0; v < A1->at[j]->object_count(); ++v) {
      out.ins_edge[j][v] = static_cast<int>(pc.quiver.edges.size());
      pc.quiver.edges.push_back({"ins(" + A1->at[j]->object(v) + ")",
                                 x.d.comp[j].obj_map[v], x.c.comp[j].obj_map[v]});
    }
    // the inserted cell is natural against the arrows of level 1
    for (int m = 0; m < A1->at[j]->arrow_count(); ++m) {
      if (A1->at[j]->is_identity(m)) continue;
      const Arrow& ar = A1->at[j]->arrow(m);
      Path lhs = concat(pc.quiver, out.pr[j].arrow_path[x.d.comp[j].arr_map[m]],
                        Path{x.d.comp[j].obj_map[ar.tgt], {out.ins_edge[j][ar.tgt]}});
      Path rhs = concat(pc.quiver, Path{x.d.comp[j].obj_map[ar.src], {out.ins_edge[j][ar.src]}},
                        out.pr[j].arrow_path[x.c.comp[j].arr_map[m]]);
      pc.relations.emplace_back(lhs, rhs);
    }
    // first equation: the cell at a composite is the pasting of its parts
    for (int y = 0; y < x.a2->at[j]->object_count(); ++y) {
      int py = x.p.comp[j].obj_map[y];
      int qy = x.q.comp[j].obj_map[y];
      int my = x.m.comp[j].obj_map[y];
      Path lhs{x.d.comp[j].obj_map[py], {out.ins_edge[j][py], out.ins_edge[j][qy]}};
      Path rhs{x.d.comp[j].obj_map[my], {out.ins_edge[j][my]}};
      pc.relations.emplace_back(lhs, rhs);
    }
    // second equation: the cell collapses on degenerate elements
    for (int a = 0; a < A0->at[j]->object_count(); ++a) {
      int ia = x.i.comp[j].obj_map[a];
      pc.relations.emplace_back(Path{a, {out.ins_edge[j][ia]}}, Path{a, {}});
    }
  }
  for (auto cell : J.one_cells(false)) {
    auto [j, k, f] = cell;
    GenAction g;
    g.vmap = A0->act(j, k, f).obj_map;
    g.emap.resize(out.pw.at[j].quiver.edges.size());
    for (int m = 0; m < A0->at[j]->arrow_count(); ++m) {
      if (A0->at[j]->is_identity(m)) continue;
      g.emap[out.pr[j].arrow_path[m].edges[0]] = out.pr[k].arrow_path[A0->act(j, k, f).arr_map[m]];
    }
    for (int v = 0; v < A1->at[j]->object_count(); ++v) {
      int fv = A1->act(j, k, f).obj_map[v];
      g.emap[out.ins_edge[j][v]] = Path{x.d.comp[k].obj_map[fv], {out.ins_edge[k][fv]}};
    }
    out.pw.action[{j, k, f}] = g;
  }
  return out;
}

CodescentResult build_codescent(const Delta2Weight& x, bool invert, int bound) {
  LaxPres lp = lax_codescent_presentation(x);
  const Index2Cat& J = *x.a0->index;
  int n = J.object_count();
  CodescentResult out;
  out.diagram = x;
  out.inverted = invert;
  out.ins_edge = lp.ins_edge;
  if (invert) {
    out.inv_edge.resize(n);
    for (int j = 0; j < n; ++j) {
      Localized loc = localize(lp.pw.at[j], lp.ins_edge[j]);
      lp.pw.at[j] = loc.pres;
      out.inv_edge[j].resize(lp.ins_edge[j].size());
      for (size_t v = 0; v < lp.ins_edge[j].size(); ++v)
        out.inv_edge[j][v] = loc.inverse_edge.at(lp.ins_edge[j][v]);
    }
    for (auto cell : J.one_cells(false)) {
      auto [j, k, f] = cell;
      GenAction& g = lp.pw.action.at({j, k, f});
      g.emap.resize(lp.pw.at[j].quiver.edges.size());
      for (size_t v = 0; v < lp.ins_edge[j].size(); ++v) {
        int fv = x.a1->act(j, k, f).obj_map[static_cast<int>(v)];
        g.emap[out.inv_edge[j][v]] = Path{x.c.comp[k].obj_map[fv], {out.inv_edge[k][fv]}};
      }
    }
  }
  out.built.pres = lp.pw;
  auto m = materialize_weight(lp.pw, bound);
  if (std::holds_alternative<Undecided>(m)) {
    out.built.undecided = std::get<Undecided>(m);
    return out;
  }
  out.built.mat = std::move(std::get<MaterializedWeight>(m));
  const MaterializedWeight& mw = *out.built.mat;
  TwoNat leg{x.a0, mw.w, {}};
  for (int j = 0; j < n; ++j) {
    Functor f{x.a0->at[j], mw.w->at[j], {}, {}};
    f.obj_map.resize(x.a0->at[j]->object_count());
    for (int o = 0; o < x.a0->at[j]->object_count(); ++o) f.obj_map[o] = o;
    f.arr_map.resize(x.a0->at[j]->arrow_count());
    for (int a = 0; a < x.a0->at[j]->arrow_count(); ++a)
      f.arr_map[a] = mw.mats[j].arrow_of_path(lp.pr[j].arrow_path[a]);
    check_functor(f);
    leg.comp.push_back(f);
  }
  require_two_natural(leg);
  out.cocone.vertex = mw.w;
  out.cocone.leg = leg;
  for (int j = 0; j < n; ++j) {
    NatTransf eta{compose(leg.comp[j], x.d.comp[j]), compose(leg.comp[j], x.c.comp[j]), {}};
    eta.comp.resize(x.a1->at[j]->object_count());
    for (int v = 0; v < x.a1->at[j]->object_count(); ++v)
      eta.comp[v] = mw.mats[j].arrow_of_path(
          Path{x.d.comp[j].obj_map[v], {lp.ins_edge[j][v]}});
    check_natural(eta);
    out.cocone.cell.push_back(eta);
  }
  check_lax_cocone(x, out.cocone, invert);
  out.uniqueness = "mediators are determined on level-0 generators and inserted cells";
  return out;
}

}  // namespace

CodescentResult reflexive_lax_codescent(const Delta2Weight& x, int bound) {
  return build_codescent(x, false, bound);
}

CodescentResult reflexive_codescent(const Delta2Weight& x, int bound) {
  return build_codescent(x, true, bound);
}

TwoNat CodescentResult::factorize_1(const LaxCocone& test) const {
  if (!built.mat) throw invalid_input("codescent factorize: colimit is not materialized");
  check_lax_cocone(diagram, test, inverted);
  const MaterializedWeight& mw = *built.mat;
  const Index2Cat& J = *diagram.a0->index;
  int n = J.object_count();
  TwoNat med{mw.w, test.vertex, {}};
  for (int j = 0; j < n; ++j) {
    Presented p = present_category(diagram.a0->at[j]);
    std::vector<int> eimg(built.pres.at[j].quiver.edges.size(), -1);
    for (int m = 0; m < diagram.a0->at[j]->arrow_count(); ++m) {
      if (diagram.a0->at[j]->is_identity(m)) continue;
      eimg[p.arrow_path[m].edges[0]] = test.leg.comp[j].arr_map[m];
    }
    for (int v = 0; v < diagram.a1->at[j]->object_count(); ++v) {
      eimg[ins_edge[j][v]] = test.cell[j].comp[v];
      if (inverted) {
        auto inv = test.vertex->at[j]->inverse(test.cell[j].comp[v]);
        if (!inv) throw invalid_input("codescent factorize: test cell is not invertible");
        eimg[inv_edge[j][v]] = *inv;
      }
    }
    med.comp.push_back(
        functor_from_generators(mw.mats[j], test.vertex->at[j], test.leg.comp[j].obj_map, eimg));
  }
  require_two_natural(med);
  if (!equal(compose(med, cocone.leg), test.leg))
    throw invalid_input("codescent factorize: mediator does not restrict to the leg");
  for (int j = 0; j < n; ++j)
    for (int v = 0; v < diagram.a1->at[j]->object_count(); ++v)
      if (med.comp[j].arr_map[cocone.cell[j].comp[v]] != test.cell[j].comp[v])
        throw invalid_input("codescent factorize: mediator does not carry the cell");
  return med;
}

Modification CodescentResult::factorize_2(const LaxCocone& c1, const LaxCocone& c2,
                                          const TwoNat& m1, const TwoNat& m2,
                                          const Modification& rho) const {
  const Index2Cat& J = *diagram.a0->index;
  int n = J.object_count();
  // compatibility square of the given cell
  for (int j = 0; j < n; ++j) {
    NatTransf lhs = vcompose(c2.cell[j], whisker_right(rho.comp[j], diagram.d.comp[j]));
    NatTransf rhs = vcompose(whisker_right(rho.comp[j], diagram.c.comp[j]), c1.cell[j]);
    if (lhs.comp != rhs.comp)
      throw invalid_input("codescent factorize_2: the square with the cells does not commute");
  }
  Modification out{m1, m2, {}};
  for (int j = 0; j < n; ++j)
    out.comp.push_back(NatTransf{m1.comp[j], m2.comp[j], rho.comp[j].comp});
  auto rep = check_modification(out);
  if (!rep.ok)
    throw invalid_input("codescent factorize_2: the cell does not descend: " + rep.violations[0]);
  for (int j = 0; j < n; ++j) {
    NatTransf back = whisker_right(out.comp[j], cocone.leg.comp[j]);
    if (back.comp != rho.comp[j].comp)
      throw invalid_input("codescent factorize_2: the cell does not restrict to the given one");
  }
  return out;
}

// ---- coproducts as filtered colimits of finite subcoproducts ----

Cat subset_poset_cat(int n) {
  std::vector<int> masks;
  for (int m = 1; m < (1 << n); ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](int a, int b) {
    int ca = __builtin_popcount(a), cb = __builtin_popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  RawCategory raw;
  auto subset_name = [&](int mask) {
    std::string s = "T";
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) s += std::to_string(i) + "_";
    if (!s.empty() && s.back() == '_') s.pop_back();
    return s;
  };
  for (int mask : masks) raw.objects.push_back(subset_name(mask));
  for (int mask : masks) {
    raw.arrows.push_back({"1_" + subset_name(mask), subset_name(mask), subset_name(mask)});
    raw.identities.push_back({subset_name(mask), "1_" + subset_name(mask)});
  }
  auto le_name = [&](int a, int b) { return "le:" + subset_name(a) + ">" + subset_name(b); };
  for (int a : masks)
    for (int b : masks)
      if (a != b && (a & b) == a) raw.arrows.push_back({le_name(a, b), subset_name(a), subset_name(b)});
  for (int a : masks)
    for (int b : masks)
      for (int c : masks) {
        if (!((a & b) == a && (b & c) == b)) continue;
        std::string ab = a == b ? "1_" + subset_name(a) : le_name(a, b);
        std::string bc = b == c ? "1_" + subset_name(b) : le_name(b, c);
        std::string ac = a == c ? "1_" + subset_name(a) : le_name(a, c);
        if (a != b || b != c) raw.composites.push_back({bc, ab, ac});
      }
  return validate_category(raw);
}

FilteredCoproductResult coproduct_as_filtered(const std::vector<WeightP>& family,
                                              const Index& index, int bound) {
  int n = static_cast<int>(family.size());
  FilteredCoproductResult out;
  out.subset_poset = subset_poset_cat(n);
  std::vector<int> masks;
  for (int m = 1; m < (1 << n); ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](int a, int b) {
    int ca = __builtin_popcount(a), cb = __builtin_popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  for (int mask : masks) {
    std::vector<int> members;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) members.push_back(i);
    out.subsets.push_back(members);
  }
  for (const auto& members : out.subsets) {
    std::vector<WeightP> sub;
    for (int i : members) sub.push_back(family[i]);
    out.stages.push_back(coproduct_weights(sub, index));
  }
  out.direct = coproduct_weights(family, index);

  Index ip = locally_discrete_index(out.subset_poset);
  Index k = opposite(ip);
  WeightP wt = terminal_weight(k);
  int nj = index->object_count();
  int np = static_cast<int>(masks.size());

  // pointwise conical colimits over the subset poset
  std::vector<ColimResult> conical;
  std::vector<WeightP> diagrams;
  for (int j = 0; j < nj; ++j) {
    Weight dj;
    dj.index = ip;
    for (int t = 0; t < np; ++t) dj.at.push_back(out.stages[t].w->at[j]);
    for (auto cell : ip->one_cells(false)) {
      auto [a, b, f] = cell;
      // unique inclusion of subset a into subset b
      Functor F{dj.at[a], dj.at[b], {}, {}};
      F.obj_map.resize(dj.at[a]->object_count());
      F.arr_map.resize(dj.at[a]->arrow_count());
      for (int o = 0; o < dj.at[a]->object_count(); ++o) {
        auto [s, local] = out.stages[a].obj_decode[j][o];
        int global = out.subsets[a][s];
        int spos = static_cast<int>(std::find(out.subsets[b].begin(), out.subsets[b].end(),
                                              global) -
                                    out.subsets[b].begin());
        F.obj_map[o] = out.stages[b].obj_encode(j, spos, local);
      }
      for (int ar = 0; ar < dj.at[a]->arrow_count(); ++ar) {
        auto [s, local] = out.stages[a].arr_decode[j][ar];
        int global = out.subsets[a][s];
        int spos = static_cast<int>(std::find(out.subsets[b].begin(), out.subsets[b].end(),
                                              global) -
                                    out.subsets[b].begin());
        F.arr_map[ar] = out.stages[b].arr_encode(j, spos, local);
      }
      dj.action[{a, b, f}] = F;
    }
    diagrams.push_back(make_weight(std::move(dj)));
    conical.push_back(weighted_colimit(wt, diagrams.back(), bound));
    if (!conical.back().mat)
      throw invalid_input("filtered coproduct: a pointwise conical colimit failed to materialize");
  }

  Weight colim;
  colim.index = index;
  for (int j = 0; j < nj; ++j) colim.at.push_back(conical[j].cat);
  for (auto cell : index->one_cells(false)) {
    auto [j, kk, f] = cell;
    std::vector<Functor> legs;
    for (int t = 0; t < np; ++t) {
      Functor act{diagrams[j]->at[t], diagrams[kk]->at[t], {}, {}};
      act.obj_map.resize(diagrams[j]->at[t]->object_count());
      act.arr_map.resize(diagrams[j]->at[t]->arrow_count());
      for (int o = 0; o < diagrams[j]->at[t]->object_count(); ++o) {
        auto [s, local] = out.stages[t].obj_decode[j][o];
        int orig = out.subsets[t][s];
        act.obj_map[o] = out.stages[t].obj_encode(kk, s, family[orig]->act(j, kk, f).obj_map[local]);
      }
      for (int ar = 0; ar < diagrams[j]->at[t]->arrow_count(); ++ar) {
        auto [s, local] = out.stages[t].arr_decode[j][ar];
        int orig = out.subsets[t][s];
        act.arr_map[ar] = out.stages[t].arr_encode(kk, s, family[orig]->act(j, kk, f).arr_map[local]);
      }
      legs.push_back(compose(conical[kk].cocone[t],
                             pair_into_product(conical[kk].legs_dom[t],
                                               conical[j].legs_dom[t].proj1,
                                               compose(act, conical[j].legs_dom[t].proj2))));
    }
    colim.action[{j, kk, f}] = conical[j].factorize(legs, conical[kk].cat);
  }
  out.colimit = make_weight(std::move(colim));

  TwoNat cmp{out.colimit, out.direct.w, {}};
  for (int j = 0; j < nj; ++j) {
    std::vector<Functor> legs;
    for (int t = 0; t < np; ++t) {
      Functor incl{diagrams[j]->at[t], out.direct.w->at[j], {}, {}};
      incl.obj_map.resize(diagrams[j]->at[t]->object_count());
      incl.arr_map.resize(diagrams[j]->at[t]->arrow_count());
      for (int o = 0; o < diagrams[j]->at[t]->object_count(); ++o) {
        auto [s, local] = out.stages[t].obj_decode[j][o];
        incl.obj_map[o] = out.direct.obj_encode(j, out.subsets[t][s], local);
      }
      for (int ar = 0; ar < diagrams[j]->at[t]->arrow_count(); ++ar) {
        auto [s, local] = out.stages[t].arr_decode[j][ar];
        incl.arr_map[ar] = out.direct.arr_encode(j, out.subsets[t][s], local);
      }
      legs.push_back(compose(incl, conical[j].legs_dom[t].proj2));
    }
    cmp.comp.push_back(conical[j].factorize(legs, out.direct.w->at[j]));
  }
  require_two_natural(cmp);
  out.comparison = cmp;
  out.comparison_is_iso = pointwise_isomorphism(cmp);
  return out;
}

// ---- universal-property verification ----

namespace {

constexpr size_t kMaxCases = 4000;

template <class F>
void combos(const std::vector<std::vector<NatTransf>>& per, F&& visit) {
  std::vector<size_t> pick(per.size(), 0);
  for (const auto& v : per)
    if (v.empty()) return;
  while (true) {
    std::vector<NatTransf> choice;
    for (size_t j = 0; j < per.size(); ++j) choice.push_back(per[j][pick[j]]);
    visit(choice);
    int pos = static_cast<int>(per.size()) - 1;
    while (pos >= 0) {
      if (++pick[pos] < per[pos].size()) break;
      pick[pos] = 0;
      --pos;
    }
    if (pos < 0 || per.empty()) break;
  }
}

}  // namespace

UniversalReport verify_universal(const CoproductResult& r, const std::vector<WeightP>& corpus) {
  UniversalReport rep;
  for (const auto& t : corpus) {
    std::vector<std::vector<TwoNat>> per;
    for (const auto& inj : r.injections) per.push_back(enumerate_two_naturals(inj.dom, t));
    std::vector<size_t> pick(per.size(), 0);
    bool any_empty = false;
    for (const auto& v : per) any_empty = any_empty || v.empty();
    if (any_empty) continue;
    while (true) {
      std::vector<TwoNat> legs;
      for (size_t s = 0; s < per.size(); ++s) legs.push_back(per[s][pick[s]]);
      ++rep.cases;
      try {
        TwoNat med = r.factorize_1(t, legs);
        int agreeing = 0;
        for (const auto& cand : enumerate_two_naturals(r.w, t)) {
          bool match = true;
          for (size_t s = 0; s < legs.size() && match; ++s)
            match = equal(compose(cand, r.injections[s]), legs[s]);
          if (match) ++agreeing;
        }
        if (agreeing != 1) {
          rep.ok = false;
          rep.failures.push_back("coproduct: " + std::to_string(agreeing) + " mediators for a cocone");
        }
        (void)med;
      } catch (const invalid_input& e) {
        rep.ok = false;
        rep.failures.push_back(std::string("coproduct: ") + e.what());
      }
      if (rep.cases >= static_cast<int>(kMaxCases)) return rep;
      int pos = static_cast<int>(per.size()) - 1;
      while (pos >= 0) {
        if (++pick[pos] < per[pos].size()) break;
        pick[pos] = 0;
        --pos;
      }
      if (pos < 0 || per.empty()) break;
    }
    if (per.empty()) {
      // the empty coproduct has exactly the empty cocone
      ++rep.cases;
      TwoNat med = r.factorize_1(t, {});
      if (enumerate_two_naturals(r.w, t).size() != 1) {
        rep.ok = false;
        rep.failures.push_back("coproduct: initial weight admits several maps");
      }
      (void)med;
    }
  }
  return rep;
}

UniversalReport verify_universal(const CoinserterResult& r, const std::vector<WeightP>& corpus) {
  UniversalReport rep;
  if (!r.built.mat) throw invalid_input("verify: coinserter not materialized");
  int n = r.dom_a->index->object_count();
  for (const auto& t : corpus) {
    for (const auto& leg : enumerate_two_naturals(r.dom_b, t)) {
      std::vector<std::vector<NatTransf>> per(n);
      for (int j = 0; j < n; ++j)
        per[j] = enumerate_transfs(compose(leg.comp[j], r.u.comp[j]),
                                   compose(leg.comp[j], r.v.comp[j]));
      combos(per, [&](const std::vector<NatTransf>& cell) {
        Modification as_mod{compose(leg, r.u), compose(leg, r.v), cell};
        if (!check_modification(as_mod).ok) return;
        ++rep.cases;
        if (rep.cases > static_cast<int>(kMaxCases)) return;
        try {
          TwoNat med = r.factorize_1(leg, cell);
          int agreeing = 0;
          for (const auto& cand : enumerate_two_naturals(r.built.mat->w, t)) {
            if (!equal(compose(cand, r.cocone), leg)) continue;
            bool match = true;
            for (int j = 0; j < n && match; ++j)
              for (int x = 0; x < r.dom_a->at[j]->object_count() && match; ++x)
                match = cand.comp[j].arr_map[r.generic[j].comp[x]] == cell[j].comp[x];
            if (match) ++agreeing;
          }
          if (agreeing != 1) {
            rep.ok = false;
            rep.failures.push_back("coinserter: " + std::to_string(agreeing) +
                                   " mediators for a cocone");
          }
          (void)med;
        } catch (const invalid_input& e) {
          rep.ok = false;
          rep.failures.push_back(std::string("coinserter: ") + e.what());
        }
      });
    }
  }
  return rep;
}

UniversalReport verify_universal(const CoequifierResult& r, const std::vector<WeightP>& corpus) {
  UniversalReport rep;
  if (!r.built.mat) throw invalid_input("verify: coequifier not materialized");
  const WeightP& b = r.phi.dom.cod;
  const WeightP& a = r.phi.dom.dom;
  int n = a->index->object_count();
  for (const auto& t : corpus) {
    for (const auto& leg : enumerate_two_naturals(b, t)) {
      bool equalizes = true;
      for (int j = 0; j < n && equalizes; ++j)
        for (int x = 0; x < a->at[j]->object_count() && equalizes; ++x)
          equalizes = leg.comp[j].arr_map[r.phi.comp[j].comp[x]] ==
                      leg.comp[j].arr_map[r.psi.comp[j].comp[x]];
      if (!equalizes) continue;
      ++rep.cases;
      try {
        TwoNat med = r.factorize_1(leg);
        int agreeing = 0;
        for (const auto& cand : enumerate_two_naturals(r.built.mat->w, t))
          if (equal(compose(cand, r.cocone), leg)) ++agreeing;
        if (agreeing != 1) {
          rep.ok = false;
          rep.failures.push_back("coequifier: " + std::to_string(agreeing) +
                                 " mediators for a cocone");
        }
        (void)med;
      } catch (const invalid_input& e) {
        rep.ok = false;
        rep.failures.push_back(std::string("coequifier: ") + e.what());
      }
      if (rep.cases >= static_cast<int>(kMaxCases)) return rep;
    }
  }
  return rep;
}

UniversalReport verify_universal(const CoinverterResult& r, const std::vector<WeightP>& corpus) {
  UniversalReport rep;
  if (!r.built.mat) throw invalid_input("verify: coinverter not materialized");
  const WeightP& b = r.alpha.dom.cod;
  const WeightP& a = r.alpha.dom.dom;
  int n = a->index->object_count();
  for (const auto& t : corpus) {
    for (const auto& leg : enumerate_two_naturals(b, t)) {
      bool inverts = true;
      for (int j = 0; j < n && inverts; ++j)
        for (int x = 0; x < a->at[j]->object_count() && inverts; ++x)
          inverts = t->at[j]->is_iso_arrow(leg.comp[j].arr_map[r.alpha.comp[j].comp[x]]);
      if (!inverts) continue;
      ++rep.cases;
      try {
        TwoNat med = r.factorize_1(leg);
        int agreeing = 0;
        for (const auto& cand : enumerate_two_naturals(r.built.mat->w, t))
          if (equal(compose(cand, r.cocone), leg)) ++agreeing;
        if (agreeing != 1) {
          rep.ok = false;
          rep.failures.push_back("coinverter: " + std::to_string(agreeing) +
                                 " mediators for a cocone");
        }
        (void)med;
      } catch (const invalid_input& e) {
        rep.ok = false;
        rep.failures.push_back(std::string("coinverter: ") + e.what());
      }
      if (rep.cases >= static_cast<int>(kMaxCases)) return rep;
    }
    auto ff = coinverter_two_dimensional(r, t);
    if (!ff.ok) {
      rep.ok = false;
      rep.failures.push_back("coinverter: precomposition is not fully faithful: " + ff.detail);
    }
  }
  return rep;
}

UniversalReport verify_universal(const CodescentResult& r, const std::vector<WeightP>& corpus) {
  UniversalReport rep;
  if (!r.built.mat) throw invalid_input("verify: codescent object not materialized");
  const Delta2Weight& x = r.diagram;
  int n = x.a0->index->object_count();
  for (const auto& t : corpus) {
    for (const auto& leg : enumerate_two_naturals(x.a0, t)) {
      std::vector<std::vector<NatTransf>> per(n);
      for (int j = 0; j < n; ++j)
        per[j] = enumerate_transfs(compose(leg.comp[j], x.d.comp[j]),
                                   compose(leg.comp[j], x.c.comp[j]));
      combos(per, [&](const std::vector<NatTransf>& cell) {
        LaxCocone test{t, leg, cell};
        try {
          check_lax_cocone(x, test, r.inverted);
        } catch (const invalid_input&) {
          return;  // not a cocone: skip
        }
        ++rep.cases;
        if (rep.cases > static_cast<int>(kMaxCases)) return;
        try {
          TwoNat med = r.factorize_1(test);
          int agreeing = 0;
          for (const auto& cand : enumerate_two_naturals(r.built.mat->w, t)) {
            if (!equal(compose(cand, r.cocone.leg), leg)) continue;
            bool match = true;
            for (int j = 0; j < n && match; ++j)
              for (int v = 0; v < x.a1->at[j]->object_count() && match; ++v)
                match = cand.comp[j].arr_map[r.cocone.cell[j].comp[v]] == cell[j].comp[v];
            if (match) ++agreeing;
          }
          if (agreeing != 1) {
            rep.ok = false;
            rep.failures.push_back("codescent: " + std::to_string(agreeing) +
                                   " mediators for a cocone");
          }
          (void)med;
        } catch (const invalid_input& e) {
          rep.ok = false;
          rep.failures.push_back(std::string("codescent: ") + e.what());
        }
      });
    }
  }
  return rep;
}

}  // namespace catcolim
