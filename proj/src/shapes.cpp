#include "catcolim/shapes.hpp"

#include <algorithm>

namespace catcolim {
namespace shapes {

Cat walking_arrow() {
  RawCategory raw;
  raw.objects = {"x", "y"};
  raw.arrows = {{"1_x", "x", "x"}, {"1_y", "y", "y"}, {"a", "x", "y"}};
  raw.identities = {{"x", "1_x"}, {"y", "1_y"}};
  return validate_category(raw);
}

Cat walking_iso() {
  RawCategory raw;
  raw.objects = {"x", "y"};
  raw.arrows = {{"1_x", "x", "x"}, {"1_y", "y", "y"}, {"e", "x", "y"}, {"einv", "y", "x"}};
  raw.identities = {{"x", "1_x"}, {"y", "1_y"}};
  raw.composites = {{"einv", "e", "1_x"}, {"e", "einv", "1_y"}};
  return validate_category(raw);
}

Cat walking_idempotent() {
  RawCategory raw;
  raw.objects = {"z"};
  raw.arrows = {{"1_z", "z", "z"}, {"e", "z", "z"}};
  raw.identities = {{"z", "1_z"}};
  raw.composites = {{"e", "e", "e"}};
  return validate_category(raw);
}

Cat parallel_pair() {
  RawCategory raw;
  raw.objects = {"x", "y"};
  raw.arrows = {{"1_x", "x", "x"}, {"1_y", "y", "y"}, {"s", "x", "y"}, {"t", "x", "y"}};
  raw.identities = {{"x", "1_x"}, {"y", "1_y"}};
  return validate_category(raw);
}

Cat chain(int n) {
  RawCategory raw;
  for (int i = 0; i < n; ++i) raw.objects.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i) {
    raw.arrows.push_back({"1_" + std::to_string(i), std::to_string(i), std::to_string(i)});
    raw.identities.push_back({std::to_string(i), "1_" + std::to_string(i)});
  }
  auto leq = [](int i, int j) { return "c" + std::to_string(i) + "_" + std::to_string(j); };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) raw.arrows.push_back({leq(i, j), std::to_string(i), std::to_string(j)});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) raw.composites.push_back({leq(j, k), leq(i, j), leq(i, k)});
  return validate_category(raw);
}

Cat indiscrete(const std::vector<std::string>& labels) {
  RawCategory raw;
  raw.objects = labels;
  int n = static_cast<int>(labels.size());
  auto eid = [&](int i, int j) {
    return i == j ? "1_" + labels[i] : "e" + labels[i] + "_" + labels[j];
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) raw.arrows.push_back({eid(i, j), labels[i], labels[j]});
  for (int i = 0; i < n; ++i) raw.identities.push_back({labels[i], eid(i, i)});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) raw.composites.push_back({eid(j, k), eid(i, j), eid(i, k)});
  return validate_category(raw);
}

Cat indiscrete(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return indiscrete(labels);
}

Cat cospan() {
  RawCategory raw;
  raw.objects = {"a", "b", "c"};
  raw.arrows = {{"1_a", "a", "a"}, {"1_b", "b", "b"}, {"1_c", "c", "c"},
                {"f", "a", "c"},   {"g", "b", "c"}};
  raw.identities = {{"a", "1_a"}, {"b", "1_b"}, {"c", "1_c"}};
  return validate_category(raw);
}

std::vector<std::vector<int>> monotone_maps(int a, int b) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(a + 1, 0);
  while (true) {
    bool mono = true;
    for (int i = 0; i + 1 <= a && mono; ++i) mono = cur[i] <= cur[i + 1];
    if (mono) out.push_back(cur);
    int pos = a;
    while (pos >= 0) {
      if (++cur[pos] <= b) break;
      cur[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

static std::string monotone_name(const std::vector<int>& f) {
  std::string s = "m";
  for (int v : f) s += std::to_string(v);
  return s;
}

Index delta2_index() {
  // a finite category whose objects are [0],[1],[2] and whose arrows are
  // all monotone maps, then taken locally discrete
  RawCategory raw;
  raw.objects = {"d0", "d1", "d2"};
  std::vector<std::vector<std::vector<std::vector<int>>>> maps(3,
      std::vector<std::vector<std::vector<int>>>(3));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) maps[a][b] = monotone_maps(a, b);
  auto mid = [&](int a, int b, const std::vector<int>& f) {
    return "d" + std::to_string(a) + std::to_string(b) + "_" + monotone_name(f);
  };
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (const auto& f : maps[a][b])
        raw.arrows.push_back({mid(a, b, f), "d" + std::to_string(a), "d" + std::to_string(b)});
  for (int a = 0; a < 3; ++a) {
    std::vector<int> idm(a + 1);
    for (int i = 0; i <= a; ++i) idm[i] = i;
    raw.identities.push_back({"d" + std::to_string(a), mid(a, a, idm)});
  }
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (const auto& f : maps[a][b])
          for (const auto& g : maps[b][c]) {
            std::vector<int> gf(a + 1);
            for (int i = 0; i <= a; ++i) gf[i] = g[f[i]];
            raw.composites.push_back({mid(b, c, g), mid(a, b, f), mid(a, c, gf)});
          }
  return locally_discrete_index(validate_category(raw));
}

Index walking_arrow_index() { return locally_discrete_index(walking_arrow()); }
Index parallel_pair_index() { return locally_discrete_index(parallel_pair()); }
Index cospan_index() { return locally_discrete_index(cospan()); }

// value list of a 1-cell of the delta2 index, recovered from its name
std::vector<int> monotone_of_cell(const std::string& name) {
  // names look like d<a><b>_m<values>
  auto pos = name.find("_m");
  std::vector<int> out;
  for (size_t i = pos + 2; i < name.size(); ++i) out.push_back(name[i] - '0');
  return out;
}

static WeightP simplex_weight(const Index& delta2, bool invertible) {
  Weight w;
  w.index = delta2;
  w.at.resize(3);
  for (int i = 0; i < 3; ++i) w.at[i] = invertible ? indiscrete(i + 1) : chain(i + 1);
  for (auto cell : delta2->one_cells(true)) {
    auto [a, b, f] = cell;
    std::vector<int> m = monotone_of_cell(delta2->hom(a, b)->object(f));
    const Cat& src = w.at[a];
    const Cat& dst = w.at[b];
    Functor F{src, dst, {}, {}};
    F.obj_map.resize(src->object_count());
    F.arr_map.resize(src->arrow_count());
    for (int o = 0; o < src->object_count(); ++o) F.obj_map[o] = m[o];
    for (int ar = 0; ar < src->arrow_count(); ++ar) {
      int i = src->arrow(ar).src, j = src->arrow(ar).tgt;
      auto homs = dst->arrows_between(m[i], m[j]);
      F.arr_map[ar] = homs.at(0);
    }
    check_functor(F);
    w.action[{a, b, f}] = F;
  }
  return make_weight(std::move(w));
}

WeightP lax_codescent_weight(const Index& delta2) { return simplex_weight(delta2, false); }
WeightP codescent_weight(const Index& delta2) { return simplex_weight(delta2, true); }

WeightP as_weight(const Index& terminal, const Cat& c) {
  if (terminal->object_count() != 1) throw invalid_input("as_weight: index is not terminal");
  return constant_weight(terminal, c);
}

TwoNat as_two_nat(const WeightP& a, const WeightP& b, const Functor& f) {
  TwoNat t{a, b, {f}};
  require_two_natural(t);
  return t;
}

Delta2Data<WeightP, TwoNat> lift_delta2(const Index& terminal, const Delta2Cat& x) {
  Delta2Data<WeightP, TwoNat> out;
  out.a0 = as_weight(terminal, x.a0);
  out.a1 = as_weight(terminal, x.a1);
  out.a2 = as_weight(terminal, x.a2);
  out.d = as_two_nat(out.a1, out.a0, x.d);
  out.c = as_two_nat(out.a1, out.a0, x.c);
  out.i = as_two_nat(out.a0, out.a1, x.i);
  out.p = as_two_nat(out.a2, out.a1, x.p);
  out.m = as_two_nat(out.a2, out.a1, x.m);
  out.q = as_two_nat(out.a2, out.a1, x.q);
  out.l = as_two_nat(out.a1, out.a2, x.l);
  out.r = as_two_nat(out.a1, out.a2, x.r);
  return out;
}

}  // namespace shapes
}  // namespace catcolim
