#include <algorithm>
#include <functional>
#include <set>

#include "catcolim/weights.hpp"

namespace catcolim {

// ---- free / restrict adjunction ----

WeightP restrict_weight(const WeightP& w) {
  Index d = discrete_index(w->index->objects);
  Weight out;
  out.index = d;
  out.at = w->at;
  return make_weight(std::move(out));
}

int FreeWeight::obj_encode(int k, int j, int cell, int y) const {
  return obj_enc_[k][j].at({cell, y});
}

int FreeWeight::arr_encode(int k, int j, int homarrow, int m) const {
  return arr_enc_[k][j].at({homarrow, m});
}

FreeWeight free_on_family(const Index& J, const WeightP& family) {
  int n = J->object_count();
  FreeWeight fw;
  fw.index = J;
  fw.family = family;
  fw.obj_decode.resize(n);
  fw.arr_decode.resize(n);
  fw.obj_enc_.assign(n, std::vector<std::map<std::pair<int, int>, int>>(n));
  fw.arr_enc_.assign(n, std::vector<std::map<std::pair<int, int>, int>>(n));
  Weight w;
  w.index = J;
  w.at.resize(n);
  std::vector<std::vector<ProductResult>> prods(n, std::vector<ProductResult>(n));
  for (int k = 0; k < n; ++k) {
    std::vector<Cat> summands;
    for (int j = 0; j < n; ++j) {
      prods[j][k] = product(J->hom(j, k), family->at[j]);
      summands.push_back(prods[j][k].cat);
    }
    CoproductCatResult cp = coproduct_cats(summands);
    w.at[k] = cp.cat;
    for (int j = 0; j < n; ++j) {
      const FinCat& pc = *prods[j][k].cat;
      int ny = family->at[j]->object_count();
      int ay = family->at[j]->arrow_count();
      for (int o = 0; o < pc.object_count(); ++o) {
        int cell = o / std::max(ny, 1);
        int y = ny == 0 ? 0 : o % ny;
        int gobj = cp.injections[j].obj_map[o];
        fw.obj_decode[k].resize(std::max<size_t>(fw.obj_decode[k].size(), gobj + 1));
        fw.obj_decode[k][gobj] = {j, cell, y};
        fw.obj_enc_[k][j][{cell, y}] = gobj;
      }
      for (int a = 0; a < pc.arrow_count(); ++a) {
        int ha = a / std::max(ay, 1);
        int m = ay == 0 ? 0 : a % ay;
        int garr = cp.injections[j].arr_map[a];
        fw.arr_decode[k].resize(std::max<size_t>(fw.arr_decode[k].size(), garr + 1));
        fw.arr_decode[k][garr] = {j, ha, m};
        fw.arr_enc_[k][j][{ha, m}] = garr;
      }
    }
  }
  for (auto cellkl : J->one_cells(true)) {
    auto [k, l, g] = cellkl;
    Functor F{w.at[k], w.at[l], {}, {}};
    F.obj_map.resize(w.at[k]->object_count());
    F.arr_map.resize(w.at[k]->arrow_count());
    for (int o = 0; o < w.at[k]->object_count(); ++o) {
      auto [j, cell, y] = fw.obj_decode[k][o];
      F.obj_map[o] = fw.obj_enc_[l][j].at({J->compose_cell(j, k, l, cell, g), y});
    }
    int idg = J->hom(k, l)->identity(g);
    for (int a = 0; a < w.at[k]->arrow_count(); ++a) {
      auto [j, ha, m] = fw.arr_decode[k][a];
      F.arr_map[a] = fw.arr_enc_[l][j].at({J->compose_2cell(j, k, l, ha, idg), m});
    }
    w.action[{k, l, g}] = F;
  }
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      const Cat& h = J->hom(k, l);
      for (int b = 0; b < h->arrow_count(); ++b) {
        if (h->is_identity(b)) continue;
        NatTransf t{w.act(k, l, h->arrow(b).src), w.act(k, l, h->arrow(b).tgt), {}};
        t.comp.resize(w.at[k]->object_count());
        for (int o = 0; o < w.at[k]->object_count(); ++o) {
          auto [j, cell, y] = fw.obj_decode[k][o];
          int hid = J->hom(j, k)->identity(cell);
          t.comp[o] = fw.arr_enc_[l][j].at(
              {J->compose_2cell(j, k, l, hid, b), family->at[j]->identity(y)});
        }
        w.action2[{k, l, b}] = t;
      }
    }
  fw.w = make_weight(std::move(w));
  return fw;
}

TwoNat counit_free(const FreeWeight& fuw, const WeightP& w) {
  const Index2Cat& J = *fuw.index;
  int n = J.object_count();
  for (int j = 0; j < n; ++j)
    if (fuw.family->at[j].get() != w->at[j].get())
      throw invalid_input("counit: the family is not the restriction of the target weight");
  TwoNat eps{fuw.w, w, {}};
  for (int k = 0; k < n; ++k) {
    Functor F{fuw.w->at[k], w->at[k], {}, {}};
    F.obj_map.resize(fuw.w->at[k]->object_count());
    F.arr_map.resize(fuw.w->at[k]->arrow_count());
    for (int o = 0; o < fuw.w->at[k]->object_count(); ++o) {
      auto [j, cell, y] = fuw.obj_decode[k][o];
      F.obj_map[o] = w->act(j, k, cell).obj_map[y];
    }
    for (int a = 0; a < fuw.w->at[k]->arrow_count(); ++a) {
      auto [j, ha, m] = fuw.arr_decode[k][a];
      const Cat& h = J.hom(j, k);
      int fcell = h->arrow(ha).src;
      int tgt_of_m = w->at[j]->arrow(m).tgt;
      int base = w->act(j, k, fcell).arr_map[m];
      NatTransf a2 = w->act2(j, k, ha);
      F.arr_map[a] = w->at[k]->compose(a2.comp[tgt_of_m], base);
    }
    eps.comp.push_back(F);
  }
  require_two_natural(eps);
  return eps;
}

std::vector<Functor> unit_family(const FreeWeight& fy) {
  const Index2Cat& J = *fy.index;
  int n = J.object_count();
  std::vector<Functor> unit;
  for (int j = 0; j < n; ++j) {
    Functor F{fy.family->at[j], fy.w->at[j], {}, {}};
    F.obj_map.resize(fy.family->at[j]->object_count());
    F.arr_map.resize(fy.family->at[j]->arrow_count());
    int idc = J.identity_cell(j);
    int ida = J.hom(j, j)->identity(idc);
    for (int y = 0; y < fy.family->at[j]->object_count(); ++y)
      F.obj_map[y] = fy.obj_enc_[j][j].at({idc, y});
    for (int m = 0; m < fy.family->at[j]->arrow_count(); ++m)
      F.arr_map[m] = fy.arr_enc_[j][j].at({ida, m});
    check_functor(F);
    unit.push_back(F);
  }
  return unit;
}

// ---- weighted colimits ----

ColimResult weighted_colimit(const WeightP& w, const WeightP& d, int bound) {
  const Index2Cat& J = *w->index;
  const Index2Cat& Jop = *d->index;
  int n = J.object_count();
  if (Jop.object_count() != n) throw invalid_input("colimit: weight and diagram indices differ");
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      if (Jop.hom(j, k).get() != J.hom(k, j).get())
        throw invalid_input("colimit: diagram index is not the opposite of the weight index");

  ColimResult out;
  out.legs_dom.resize(n);
  std::vector<Cat> summands;
  for (int j = 0; j < n; ++j) {
    out.legs_dom[j] = product(w->at[j], d->at[j]);
    summands.push_back(out.legs_dom[j].cat);
  }
  CoproductCatResult cp = coproduct_cats(summands);
  out.total = cp.cat;
  out.inject = cp.injections;
  out.obj_decode.resize(out.total->object_count());
  out.arr_decode.resize(out.total->arrow_count());
  for (int j = 0; j < n; ++j) {
    for (int o = 0; o < summands[j]->object_count(); ++o)
      out.obj_decode[cp.injections[j].obj_map[o]] = {j, o};
    for (int a = 0; a < summands[j]->arrow_count(); ++a)
      out.arr_decode[cp.injections[j].arr_map[a]] = {j, a};
  }

  std::vector<std::pair<Functor, Functor>> pairs;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const Cat& h = J.hom(j, k);
      if (h->object_count() == 0) continue;
      ProductResult wh = product(w->at[j], h);
      ProductResult whd = product(wh.cat, d->at[k]);
      // left leg: act on the weight side, land in the k summand
      Functor F{whd.cat, out.total, {}, {}};
      // right leg: act on the diagram side, land in the j summand
      Functor G{whd.cat, out.total, {}, {}};
      F.obj_map.resize(whd.cat->object_count());
      G.obj_map.resize(whd.cat->object_count());
      F.arr_map.resize(whd.cat->arrow_count());
      G.arr_map.resize(whd.cat->arrow_count());
      int nh = h->object_count(), nd = d->at[k]->object_count();
      int ah = h->arrow_count(), ad = d->at[k]->arrow_count();
      int nwj = w->at[j]->object_count() > 0 ? w->at[j]->object_count() : 1;
      (void)nwj;
      for (int o = 0; o < whd.cat->object_count(); ++o) {
        int od = o % std::max(nd, 1);
        int rest = nd == 0 ? 0 : o / nd;
        int oh = rest % std::max(nh, 1);
        int ow = nh == 0 ? 0 : rest / nh;
        int wk = w->act(j, k, oh).obj_map[ow];
        F.obj_map[o] = cp.injections[k].obj_map[wk * nd + od];
        int dj = d->act(k, j, oh).obj_map[od];
        G.obj_map[o] =
            cp.injections[j].obj_map[ow * d->at[j]->object_count() + dj];
      }
      for (int a = 0; a < whd.cat->arrow_count(); ++a) {
        int adx = a % std::max(ad, 1);
        int rest = ad == 0 ? 0 : a / ad;
        int ahx = rest % std::max(ah, 1);
        int aw = ah == 0 ? 0 : rest / ah;
        // weight side: the square filler of the 2-cell action over the arrow
        const Arrow& harr = h->arrow(ahx);
        int wtgt = w->at[j]->arrow(aw).tgt;
        int wimg = w->at[k]->compose(w->act2(j, k, ahx).comp[wtgt],
                                     w->act(j, k, harr.src).arr_map[aw]);
        F.arr_map[a] = cp.injections[k].arr_map[wimg * ad + adx];
        int dtgt = d->at[k]->arrow(adx).tgt;
        int dimg = d->at[j]->compose(d->act2(k, j, ahx).comp[dtgt],
                                     d->act(k, j, harr.src).arr_map[adx]);
        G.arr_map[a] = cp.injections[j].arr_map[aw * d->at[j]->arrow_count() + dimg];
      }
      pairs.emplace_back(F, G);
    }

  out.glue = coequalize_functors(out.total, pairs);
  auto matv = materialize(out.glue.pres, bound);
  if (std::holds_alternative<Undecided>(matv)) {
    out.undecided = std::get<Undecided>(matv);
    out.pres = out.glue.pres;
    return out;
  }
  out.mat = std::move(std::get<Materialization>(matv));
  out.pres = out.glue.pres;
  out.cat = out.mat->cat;
  for (int j = 0; j < n; ++j) {
    Functor leg{out.legs_dom[j].cat, out.cat, {}, {}};
    leg.obj_map.resize(out.legs_dom[j].cat->object_count());
    leg.arr_map.resize(out.legs_dom[j].cat->arrow_count());
    for (int o = 0; o < out.legs_dom[j].cat->object_count(); ++o)
      leg.obj_map[o] = out.glue.obj_class[out.inject[j].obj_map[o]];
    for (int a = 0; a < out.legs_dom[j].cat->arrow_count(); ++a)
      leg.arr_map[a] = out.mat->arrow_of_path(out.glue.arrow_path[out.inject[j].arr_map[a]]);
    check_functor(leg);
    out.cocone.push_back(leg);
  }
  return out;
}

Functor ColimResult::factorize(const std::vector<Functor>& legs, const Cat& target) const {
  if (!mat) throw invalid_input("factorize: colimit is not materialized");
  int n = static_cast<int>(legs_dom.size());
  if (static_cast<int>(legs.size()) != n) throw invalid_input("factorize: wrong number of legs");
  for (int j = 0; j < n; ++j) {
    if (legs[j].dom.get() != legs_dom[j].cat.get() || legs[j].cod.get() != target.get())
      throw invalid_input("factorize: leg boundary mismatch");
  }
  // objects: forced on every class member, and members must agree
  const FinCat& C = *cat;
  std::vector<int> obj_img(C.object_count(), -1);
  for (int o = 0; o < total->object_count(); ++o) {
    auto [j, local] = obj_decode[o];
    int v = glue.obj_class[o];
    int img = legs[j].obj_map[local];
    if (obj_img[v] >= 0 && obj_img[v] != img)
      throw invalid_input("factorize: legs do not agree on a glued object");
    obj_img[v] = img;
  }
  // edges of the presentation carry the arrow images
  std::vector<int> edge_img(pres.quiver.edges.size(), -1);
  for (int a = 0; a < total->arrow_count(); ++a) {
    if (total->is_identity(a)) continue;
    auto [j, local] = arr_decode[a];
    const Path& pth = glue.arrow_path[a];
    int img = legs[j].arr_map[local];
    if (pth.edges.empty()) {
      if (!target->is_identity(img))
        throw invalid_input("factorize: an identified arrow must map to an identity");
      continue;
    }
    int e = pth.edges[0];
    if (edge_img[e] >= 0 && edge_img[e] != img)
      throw invalid_input("factorize: legs do not agree on a glued arrow");
    edge_img[e] = img;
  }
  Functor med{cat, target, {}, {}};
  med.obj_map = obj_img;
  med.arr_map.resize(C.arrow_count());
  for (int a = 0; a < C.arrow_count(); ++a) {
    const Path& f = mat->arrow_form[a];
    int acc = target->identity(obj_img[f.src]);
    for (int e : f.edges) {
      if (edge_img[e] < 0) throw invalid_input("factorize: an edge image is undetermined");
      acc = target->compose(edge_img[e], acc);
      if (acc < 0) throw invalid_input("factorize: images do not compose in the target");
    }
    med.arr_map[a] = acc;
  }
  std::string why;
  if (!is_functor(med, &why))
    throw invalid_input("factorize: the test legs are not a cocone (mediator fails: " + why + ")");
  for (int j = 0; j < n; ++j)
    if (!equal(compose(med, cocone[j]), legs[j]))
      throw invalid_input("factorize: mediator does not restrict to the given legs");
  return med;
}

Functor colimit_map_weight(const ColimResult& wd, const ColimResult& vd, const TwoNat& t) {
  int n = static_cast<int>(wd.legs_dom.size());
  std::vector<Functor> legs;
  for (int j = 0; j < n; ++j) {
    ProductResult vr = vd.legs_dom[j];
    Functor into = pair_into_product(vr, compose(t.comp[j], wd.legs_dom[j].proj1),
                                     wd.legs_dom[j].proj2);
    legs.push_back(compose(vd.cocone[j], into));
  }
  return wd.factorize(legs, vd.cat);
}

Functor colimit_map_diagram(const ColimResult& wd, const ColimResult& we, const TwoNat& f) {
  int n = static_cast<int>(wd.legs_dom.size());
  std::vector<Functor> legs;
  for (int j = 0; j < n; ++j) {
    ProductResult er = we.legs_dom[j];
    Functor into = pair_into_product(er, wd.legs_dom[j].proj1,
                                     compose(f.comp[j], wd.legs_dom[j].proj2));
    legs.push_back(compose(we.cocone[j], into));
  }
  return wd.factorize(legs, we.cat);
}

// ---- enumeration ----

std::vector<Functor> enumerate_functors(const Cat& a, const Cat& b) {
  std::vector<Functor> out;
  int na = a->object_count();
  if (na == 0) {
    out.push_back(Functor{a, b, {}, {}});
    return out;
  }
  if (b->object_count() == 0) return out;
  std::vector<int> nonid;
  for (int m = 0; m < a->arrow_count(); ++m)
    if (!a->is_identity(m)) nonid.push_back(m);
  std::vector<int> omap(na, 0);
  std::vector<int> amap(a->arrow_count(), -1);
  std::function<void(size_t)> assign = [&](size_t i) {
    if (i == nonid.size()) {
      Functor f{a, b, omap, amap};
      if (is_functor(f)) out.push_back(f);
      return;
    }
    const Arrow& ar = a->arrow(nonid[i]);
    for (int c : b->arrows_between(omap[ar.src], omap[ar.tgt])) {
      amap[nonid[i]] = c;
      assign(i + 1);
    }
    amap[nonid[i]] = -1;
  };
  while (true) {
    for (int o = 0; o < na; ++o) amap[a->identity(o)] = b->identity(omap[o]);
    assign(0);
    int pos = na - 1;
    while (pos >= 0) {
      if (++omap[pos] < b->object_count()) break;
      omap[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

std::vector<NatTransf> enumerate_transfs(const Functor& f, const Functor& g) {
  std::vector<NatTransf> out;
  const FinCat& A = *f.dom;
  const FinCat& B = *f.cod;
  int na = A.object_count();
  std::vector<std::vector<int>> cands(na);
  for (int o = 0; o < na; ++o) {
    cands[o] = B.arrows_between(f.obj_map[o], g.obj_map[o]);
    if (cands[o].empty()) return out;
  }
  std::vector<size_t> pick(na, 0);
  while (true) {
    NatTransf t{f, g, {}};
    t.comp.resize(na);
    for (int o = 0; o < na; ++o) t.comp[o] = cands[o][pick[o]];
    if (is_natural(t)) out.push_back(t);
    int pos = na - 1;
    while (pos >= 0) {
      if (++pick[pos] < cands[pos].size()) break;
      pick[pos] = 0;
      --pos;
    }
    if (pos < 0 || na == 0) break;
  }
  return out;
}

std::vector<TwoNat> enumerate_two_naturals(const WeightP& w, const WeightP& v) {
  const Index2Cat& J = *w->index;
  int n = J.object_count();
  std::vector<std::vector<Functor>> per(n);
  for (int j = 0; j < n; ++j) {
    per[j] = enumerate_functors(w->at[j], v->at[j]);
    if (per[j].empty()) return {};
  }
  auto cells = J.one_cells(false);
  std::vector<TwoNat> out;
  std::vector<size_t> pick(n, 0);
  std::function<void(int)> rec = [&](int depth) {
    if (depth == n) {
      TwoNat t{w, v, {}};
      for (int j = 0; j < n; ++j) t.comp.push_back(per[j][pick[j]]);
      if (check_two_natural(t).ok) out.push_back(t);
      return;
    }
    for (pick[depth] = 0; pick[depth] < per[depth].size(); ++pick[depth]) {
      bool ok = true;
      for (auto cell : cells) {
        auto [j, k, f] = cell;
        if (std::max(j, k) != depth || std::min(j, k) > depth) continue;
        if (!equal(compose(v->act(j, k, f), per[j][pick[j]]),
                   compose(per[k][pick[k]], w->act(j, k, f)))) {
          ok = false;
          break;
        }
      }
      if (ok) rec(depth + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<PseudoNat> enumerate_pseudonaturals(const WeightP& w, const WeightP& v, size_t cap) {
  const Index2Cat& J = *w->index;
  int n = J.object_count();
  std::vector<std::vector<Functor>> per(n);
  for (int j = 0; j < n; ++j) {
    per[j] = enumerate_functors(w->at[j], v->at[j]);
    if (per[j].empty()) return {};
  }
  auto cells = J.one_cells(false);
  std::vector<PseudoNat> out;
  std::vector<size_t> pick(n, 0);
  size_t seen = 0;
  while (true) {
    std::vector<Functor> comp;
    for (int j = 0; j < n; ++j) comp.push_back(per[j][pick[j]]);
    // per 1-cell candidates for invertible coherence fillers
    std::vector<std::vector<NatTransf>> fill(cells.size());
    bool feasible = true;
    for (size_t c = 0; c < cells.size() && feasible; ++c) {
      auto [j, k, f] = cells[c];
      auto all = enumerate_transfs(compose(v->act(j, k, f), comp[j]),
                                   compose(comp[k], w->act(j, k, f)));
      for (auto& t : all)
        if (is_invertible(t)) fill[c].push_back(t);
      feasible = !fill[c].empty();
    }
    if (feasible) {
      std::vector<size_t> fpick(cells.size(), 0);
      while (true) {
        if (++seen > cap) throw invalid_input("pseudonatural enumeration exceeded its cap");
        PseudoNat t{w, v, comp, {}};
        for (size_t c = 0; c < cells.size(); ++c) {
          auto [j, k, f] = cells[c];
          t.coh[{j, k, f}] = fill[c][fpick[c]];
        }
        if (check_pseudonatural(t).ok) out.push_back(t);
        int pos = static_cast<int>(cells.size()) - 1;
        while (pos >= 0) {
          if (++fpick[pos] < fill[pos].size()) break;
          fpick[pos] = 0;
          --pos;
        }
        if (pos < 0 || cells.empty()) break;
      }
    }
    int pos = n - 1;
    while (pos >= 0) {
      if (++pick[pos] < per[pos].size()) break;
      pick[pos] = 0;
      --pos;
    }
    if (pos < 0 || n == 0) break;
  }
  return out;
}

std::vector<Modification> enumerate_modifications(const TwoNat& s, const TwoNat& t) {
  const Index2Cat& J = *s.dom->index;
  int n = J.object_count();
  std::vector<std::vector<NatTransf>> per(n);
  for (int j = 0; j < n; ++j) {
    per[j] = enumerate_transfs(s.comp[j], t.comp[j]);
    if (per[j].empty()) return {};
  }
  std::vector<Modification> out;
  std::vector<size_t> pick(n, 0);
  while (true) {
    Modification m{s, t, {}};
    for (int j = 0; j < n; ++j) m.comp.push_back(per[j][pick[j]]);
    if (check_modification(m).ok) out.push_back(m);
    int pos = n - 1;
    while (pos >= 0) {
      if (++pick[pos] < per[pos].size()) break;
      pick[pos] = 0;
      --pos;
    }
    if (pos < 0 || n == 0) break;
  }
  return out;
}

HomCat hom_category(const WeightP& a, const WeightP& b) {
  HomCat out;
  out.objs = enumerate_two_naturals(a, b);
  std::vector<std::string> onames;
  for (size_t i = 0; i < out.objs.size(); ++i) onames.push_back("t" + std::to_string(i));
  std::vector<Arrow> arrows;
  std::vector<int> identity(out.objs.size(), -1);
  std::map<std::vector<int>, int> mod_index;  // flattened (src, tgt, comps...)
  auto flat = [&](int s, int t, const Modification& m) {
    std::vector<int> key{s, t};
    for (const auto& nt : m.comp) key.insert(key.end(), nt.comp.begin(), nt.comp.end());
    return key;
  };
  for (size_t s = 0; s < out.objs.size(); ++s)
    for (size_t t = 0; t < out.objs.size(); ++t) {
      auto mods = enumerate_modifications(out.objs[s], out.objs[t]);
      for (auto& m : mods) {
        int id = static_cast<int>(arrows.size());
        mod_index[flat(static_cast<int>(s), static_cast<int>(t), m)] = id;
        arrows.push_back({"m" + std::to_string(id), static_cast<int>(s), static_cast<int>(t)});
        out.arrs.push_back(m);
        if (s == t) {
          bool is_id = true;
          for (size_t j = 0; j < m.comp.size() && is_id; ++j)
            is_id = m.comp[j].comp == identity_transf(out.objs[s].comp[j]).comp;
          if (is_id) identity[s] = id;
        }
      }
    }
  std::unordered_map<std::int64_t, int> comp;
  const std::int64_t na = static_cast<std::int64_t>(arrows.size());
  for (std::int64_t g = 0; g < na; ++g)
    for (std::int64_t f = 0; f < na; ++f) {
      if (arrows[f].tgt != arrows[g].src) continue;
      Modification m{out.arrs[f].dom, out.arrs[g].cod, {}};
      for (size_t j = 0; j < out.arrs[f].comp.size(); ++j)
        m.comp.push_back(vcompose(out.arrs[g].comp[j], out.arrs[f].comp[j]));
      comp[g * na + f] = mod_index.at(flat(arrows[f].src, arrows[g].tgt, m));
    }
  out.cat = std::make_shared<FinCat>(FinCat::make_unchecked(std::move(onames), std::move(arrows),
                                                            std::move(identity), std::move(comp)));
  recheck_laws(*out.cat);
  return out;
}

}  // namespace catcolim
