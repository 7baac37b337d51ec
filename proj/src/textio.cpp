#include "catcolim/textio.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace catcolim {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::istringstream ls(raw);
    Line line;
    line.number = number;
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw parse_error("line " + std::to_string(line) + ": " + msg);
}

struct Cursor {
  const std::vector<Line>& lines;
  size_t at = 0;
  bool done() const { return at >= lines.size(); }
  const Line& get() { return lines[at++]; }
};

struct NameSpace {
  std::map<std::string, int> first_line;
  void declare(const std::string& name, int line) {
    auto it = first_line.find(name);
    if (it != first_line.end())
      fail(line, "duplicate name '" + name + "' (first declared at line " +
                     std::to_string(it->second) + ")");
    first_line[name] = line;
  }
};

int need_object(const Cat& c, const std::string& id, int line) {
  int o = c->object_index(id);
  if (o < 0) fail(line, "unknown object '" + id + "'");
  return o;
}

int need_arrow(const Cat& c, const std::string& id, int line) {
  int a = c->arrow_index(id);
  if (a < 0) fail(line, "unknown arrow '" + id + "'");
  return a;
}

Cat parse_category_block(Cursor& cur) {
  RawCategory raw;
  std::set<std::string> declared_arrows;
  std::map<std::string, std::string> identity_of;
  while (!cur.done()) {
    const Line& l = cur.get();
    const auto& t = l.tokens;
    if (t[0] == "end") {
      for (const auto& o : raw.objects) {
        if (identity_of.count(o)) continue;
        std::string id = "1_" + o;
        if (!declared_arrows.count(id)) raw.arrows.push_back({id, o, o});
        identity_of[o] = id;
      }
      for (const auto& [o, a] : identity_of) raw.identities.push_back({o, a});
      return validate_category(raw);
    }
    if (t[0] == "objects") {
      for (size_t i = 1; i < t.size(); ++i) raw.objects.push_back(t[i]);
    } else if (t[0] == "arrow" && t.size() == 6 && t[2] == ":" && t[4] == "->") {
      raw.arrows.push_back({t[1], t[3], t[5]});
      declared_arrows.insert(t[1]);
    } else if (t[0] == "identity" && t.size() == 4 && t[2] == "=") {
      identity_of[t[1]] = t[3];
    } else if (t[0] == "compose" && t.size() == 5 && t[3] == "=") {
      raw.composites.push_back({t[1], t[2], t[4]});
    } else {
      fail(l.number, "unexpected line in category block");
    }
  }
  throw parse_error("unterminated category block");
}

PresCat parse_presentation_block(Cursor& cur) {
  PresCat p;
  std::vector<std::pair<std::array<std::string, 2>, int>> inverts;
  std::vector<std::pair<std::pair<std::vector<std::string>, std::vector<std::string>>, int>> rels;
  while (!cur.done()) {
    const Line& l = cur.get();
    const auto& t = l.tokens;
    if (t[0] == "end") {
      auto parse_path = [&](const std::vector<std::string>& toks, int line) {
        Path path;
        if (toks.size() == 2 && toks[0] == "id") {
          path.src = p.quiver.vertex_index(toks[1]);
          if (path.src < 0) fail(line, "unknown vertex '" + toks[1] + "'");
          return path;
        }
        for (const auto& e : toks) {
          int ei = p.quiver.edge_index(e);
          if (ei < 0) fail(line, "unknown edge '" + e + "'");
          if (path.edges.empty()) path.src = p.quiver.edges[ei].src;
          path.edges.push_back(ei);
        }
        if (!path_well_typed(p.quiver, path)) fail(line, "ill-typed path");
        return path;
      };
      for (const auto& [sides, line] : rels)
        p.relations.emplace_back(parse_path(sides.first, line), parse_path(sides.second, line));
      for (const auto& [pair, line] : inverts) {
        int e = p.quiver.edge_index(pair[0]);
        int f = p.quiver.edge_index(pair[1]);
        if (e < 0 || f < 0) fail(line, "invert names an unknown edge");
        p.inverses[e] = f;
        p.inverses[f] = e;
      }
      p.validate();
      return p;
    }
    if (t[0] == "vertices") {
      for (size_t i = 1; i < t.size(); ++i) p.quiver.vertices.push_back(t[i]);
    } else if (t[0] == "edge" && t.size() == 6 && t[2] == ":" && t[4] == "->") {
      p.quiver.edges.push_back({t[1], p.quiver.vertex_index(t[3]), p.quiver.vertex_index(t[5])});
      if (p.quiver.edges.back().src < 0 || p.quiver.edges.back().tgt < 0)
        fail(l.number, "edge endpoints must be declared vertices");
    } else if (t[0] == "relation") {
      auto eq = std::find(t.begin(), t.end(), "=");
      if (eq == t.end()) fail(l.number, "relation needs '='");
      rels.push_back({{std::vector<std::string>(t.begin() + 1, eq),
                       std::vector<std::string>(eq + 1, t.end())},
                      l.number});
    } else if (t[0] == "invert" && t.size() == 4 && t[2] == "=") {
      inverts.push_back({{t[1], t[3]}, l.number});
    } else {
      fail(l.number, "unexpected line in presentation block");
    }
  }
  throw parse_error("unterminated presentation block");
}

Index parse_index_block(Cursor& cur) {
  std::vector<std::string> objects;
  struct HomData {
    std::vector<std::string> onecells;
    std::vector<std::array<std::string, 3>> twocells;
    std::vector<std::array<std::string, 3>> vcomp;
  };
  std::map<std::pair<std::string, std::string>, HomData> homs;
  std::map<std::string, std::string> identities;
  std::vector<std::pair<std::vector<std::string>, int>> composes, composes2;
  while (!cur.done()) {
    const Line& l = cur.get();
    const auto& t = l.tokens;
    if (t[0] == "end") {
      int n = static_cast<int>(objects.size());
      auto oi = [&](const std::string& s, int line) {
        auto it = std::find(objects.begin(), objects.end(), s);
        if (it == objects.end()) fail(line, "unknown index object '" + s + "'");
        return static_cast<int>(it - objects.begin());
      };
      std::vector<Cat> hom(n * n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          HomData& h = homs[{objects[a], objects[b]}];
          RawCategory raw;
          raw.objects = h.onecells;
          for (const auto& [id, s, tg] : h.twocells) raw.arrows.push_back({id, s, tg});
          for (const auto& c : h.onecells) {
            raw.arrows.push_back({"1_" + c, c, c});
            raw.identities.push_back({c, "1_" + c});
          }
          for (const auto& [g, f, gf] : h.vcomp) raw.composites.push_back({g, f, gf});
          hom[a * n + b] = validate_category(raw);
        }
      std::vector<int> idc(n, -1);
      for (const auto& [obj, cell] : identities) {
        int a = oi(obj, 0);
        idc[a] = hom[a * n + a]->object_index(cell);
        if (idc[a] < 0) throw parse_error("identity 1-cell '" + cell + "' is not in its hom");
      }
      for (int a = 0; a < n; ++a)
        if (idc[a] < 0) throw parse_error("missing identity 1-cell for " + objects[a]);
      std::map<std::tuple<int, int, int, int, int>, int> comp, comp2;
      for (const auto& [toks, line] : composes) {
        int a = oi(toks[0], line), b = oi(toks[1], line), c = oi(toks[2], line);
        int f = hom[a * n + b]->object_index(toks[3]);
        int g = hom[b * n + c]->object_index(toks[4]);
        int h2 = hom[a * n + c]->object_index(toks[5]);
        if (f < 0 || g < 0 || h2 < 0) fail(line, "compose names unknown 1-cells");
        comp[{a, b, c, f, g}] = h2;
      }
      for (const auto& [toks, line] : composes2) {
        int a = oi(toks[0], line), b = oi(toks[1], line), c = oi(toks[2], line);
        int x = hom[a * n + b]->arrow_index(toks[3]);
        int y = hom[b * n + c]->arrow_index(toks[4]);
        int z = hom[a * n + c]->arrow_index(toks[5]);
        if (x < 0 || y < 0 || z < 0) fail(line, "compose2 names unknown 2-cells");
        comp2[{a, b, c, x, y}] = z;
      }
      return Index2Cat::make(objects, std::move(hom), std::move(idc), std::move(comp),
                             std::move(comp2));
    }
    if (t[0] == "objects") {
      for (size_t i = 1; i < t.size(); ++i) objects.push_back(t[i]);
    } else if (t[0] == "hom" && t.size() == 3) {
      HomData& h = homs[{t[1], t[2]}];
      while (!cur.done()) {
        const Line& hl = cur.get();
        const auto& ht = hl.tokens;
        if (ht[0] == "end") break;
        if (ht[0] == "onecell") {
          for (size_t i = 1; i < ht.size(); ++i) h.onecells.push_back(ht[i]);
        } else if (ht[0] == "twocell" && ht.size() == 6 && ht[2] == ":" && ht[4] == "=>") {
          h.twocells.push_back({ht[1], ht[3], ht[5]});
        } else if (ht[0] == "vcompose" && ht.size() == 5 && ht[3] == "=") {
          h.vcomp.push_back({ht[1], ht[2], ht[4]});
        } else {
          fail(hl.number, "unexpected line in hom block");
        }
      }
    } else if (t[0] == "identity" && t.size() == 4 && t[2] == "=") {
      identities[t[1]] = t[3];
    } else if (t[0] == "compose" && t.size() == 9 && t[4] == ":" && t[7] == "=") {
      composes.push_back({{t[1], t[2], t[3], t[5], t[6], t[8]}, l.number});
    } else if (t[0] == "compose2" && t.size() == 9 && t[4] == ":" && t[7] == "=") {
      composes2.push_back({{t[1], t[2], t[3], t[5], t[6], t[8]}, l.number});
    } else {
      fail(l.number, "unexpected line in index2 block");
    }
  }
  throw parse_error("unterminated index2 block");
}

struct MapBlock {
  std::vector<std::pair<std::array<std::string, 2>, int>> obj, arr;
};

MapBlock parse_map_block(Cursor& cur) {
  MapBlock out;
  while (!cur.done()) {
    const Line& l = cur.get();
    const auto& t = l.tokens;
    if (t[0] == "end") return out;
    if (t[0] == "obj" && t.size() == 4 && t[2] == "=")
      out.obj.push_back({{t[1], t[3]}, l.number});
    else if (t[0] == "arr" && t.size() == 4 && t[2] == "=")
      out.arr.push_back({{t[1], t[3]}, l.number});
    else
      fail(l.number, "expected obj/arr assignment");
  }
  throw parse_error("unterminated map block");
}

Functor functor_of_block(const MapBlock& mb, const Cat& dom, const Cat& cod, int header_line) {
  Functor f{dom, cod, {}, {}};
  f.obj_map.assign(dom->object_count(), -1);
  f.arr_map.assign(dom->arrow_count(), -1);
  for (const auto& [pair, line] : mb.obj)
    f.obj_map[need_object(dom, pair[0], line)] = need_object(cod, pair[1], line);
  for (int o = 0; o < dom->object_count(); ++o) {
    if (f.obj_map[o] < 0) fail(header_line, "no image given for object '" + dom->object(o) + "'");
    f.arr_map[dom->identity(o)] = cod->identity(f.obj_map[o]);
  }
  for (const auto& [pair, line] : mb.arr)
    f.arr_map[need_arrow(dom, pair[0], line)] = need_arrow(cod, pair[1], line);
  for (int a = 0; a < dom->arrow_count(); ++a)
    if (f.arr_map[a] < 0) fail(header_line, "no image given for arrow '" + dom->arrow(a).id + "'");
  check_functor(f);
  return f;
}

// raw integer tables: `at <obj>` then `obj <row...>` / `arr <row...>`
RawTwoNat parse_raw_block(Cursor& cur, const Index& idx) {
  RawTwoNat out;
  out.comp.resize(idx->object_count());
  while (!cur.done()) {
    const Line& l = cur.get();
    const auto& t = l.tokens;
    if (t[0] == "end") return out;
    if (t[0] == "at" && t.size() == 2) {
      int j = idx->object_index(t[1]);
      if (j < 0) fail(l.number, "unknown index object '" + t[1] + "'");
      while (!cur.done()) {
        const Line& rl = cur.get();
        const auto& rt = rl.tokens;
        if (rt[0] == "end") break;
        std::vector<int> row;
        for (size_t i = 1; i < rt.size(); ++i) row.push_back(std::stoi(rt[i]));
        if (rt[0] == "obj")
          out.comp[j].obj = row;
        else if (rt[0] == "arr")
          out.comp[j].arr = row;
        else
          fail(rl.number, "expected obj/arr rows");
      }
    } else {
      fail(l.number, "expected at-block in raw tables");
    }
  }
  throw parse_error("unterminated raw table block");
}

}  // namespace

const Cat* Document::category(const std::string& name) const {
  for (const auto& [n, c] : categories)
    if (n == name) return &c;
  return nullptr;
}
const Index* Document::index(const std::string& name) const {
  for (const auto& [n, c] : indexes)
    if (n == name) return &c;
  return nullptr;
}
const WeightP* Document::weight(const std::string& name) const {
  for (const auto& [n, c] : weights)
    if (n == name) return &c;
  return nullptr;
}
const TwoNat* Document::transform(const std::string& name) const {
  for (const auto& [n, c] : transforms)
    if (n == name) return &c;
  return nullptr;
}
const PseudoNat* Document::pseudo(const std::string& name) const {
  for (const auto& [n, c] : pseudos)
    if (n == name) return &c;
  return nullptr;
}
const Modification* Document::modification(const std::string& name) const {
  for (const auto& [n, c] : modifications)
    if (n == name) return &c;
  return nullptr;
}
const Delta2Weight* Document::simplicial(const std::string& name) const {
  for (const auto& [n, c] : simplicials)
    if (n == name) return &c;
  return nullptr;
}
const DecompTree* Document::tree(const std::string& name) const {
  for (const auto& [n, c] : trees)
    if (n == name) return &c;
  return nullptr;
}

Index Document::opposite_of(const std::string& name) const {
  auto it = op_cache_.find(name);
  if (it != op_cache_.end()) return it->second;
  const Index* idx = index(name);
  if (!idx) throw parse_error("unknown index '" + name + "'");
  Index op = opposite(*idx);
  op_cache_[name] = op;
  return op;
}

Document parse_document(const std::string& text) {
  Document doc;
  auto lines = tokenize(text);
  Cursor cur{lines};
  NameSpace names;

  auto need_weight = [&](const std::string& name, int line) -> WeightP {
    const WeightP* w = doc.weight(name);
    if (!w) fail(line, "unknown weight '" + name + "'");
    return *w;
  };
  auto need_transform = [&](const std::string& name, int line) -> TwoNat {
    const TwoNat* t = doc.transform(name);
    if (!t) fail(line, "unknown transform '" + name + "'");
    return *t;
  };

  while (!cur.done()) {
    const Line& head = cur.get();
    const auto& t = head.tokens;
    if (t[0] == "category" && t.size() == 2) {
      names.declare(t[1], head.number);
      doc.categories.emplace_back(t[1], parse_category_block(cur));
    } else if (t[0] == "presentation" && t.size() == 2) {
      names.declare(t[1], head.number);
      doc.presentations.emplace_back(t[1], parse_presentation_block(cur));
    } else if (t[0] == "index2" && t.size() == 4 && t[2] == "from") {
      names.declare(t[1], head.number);
      const Cat* base = doc.category(t[3]);
      if (!base) fail(head.number, "unknown category '" + t[3] + "'");
      doc.indexes.emplace_back(t[1], locally_discrete_index(*base));
    } else if (t[0] == "index2" && t.size() == 2) {
      names.declare(t[1], head.number);
      doc.indexes.emplace_back(t[1], parse_index_block(cur));
    } else if ((t[0] == "weight" || t[0] == "diagram") && t.size() >= 4 && t[2] == "over") {
      names.declare(t[1], head.number);
      bool is_diagram = t[0] == "diagram";
      const Index* base = doc.index(t[3]);
      if (!base) fail(head.number, "unknown index '" + t[3] + "'");
      Index idx = is_diagram ? doc.opposite_of(t[3]) : *base;
      doc.weight_index_name[t[1]] = t[3];
      if (is_diagram) doc.diagram_names.insert(t[1]);
      if (t.size() >= 6 && t[4] == "=") {
        WeightP w;
        if (t[5] == "rep" && t.size() == 7) {
          int obj = idx->object_index(t[6]);
          if (obj < 0) fail(head.number, "unknown index object '" + t[6] + "'");
          w = representable(idx, obj);
        } else if (t[5] == "terminal") {
          w = terminal_weight(idx);
        } else if (t[5] == "initial") {
          w = initial_weight(idx);
        } else if (t[5] == "constant" && t.size() == 7) {
          const Cat* c = doc.category(t[6]);
          if (!c) fail(head.number, "unknown category '" + t[6] + "'");
          w = constant_weight(idx, *c);
        } else {
          fail(head.number, "unknown weight shorthand");
        }
        doc.weights.emplace_back(t[1], w);
        continue;
      }
      Weight w;
      w.index = idx;
      w.at.assign(idx->object_count(), nullptr);
      std::map<std::tuple<int, int, int>, MapBlock> acts;
      std::map<std::tuple<int, int, int>, int> act_lines;
      while (!cur.done()) {
        const Line& l = cur.get();
        const auto& lt = l.tokens;
        if (lt[0] == "end") break;
        if (lt[0] == "at" && lt.size() == 4 && lt[2] == "=") {
          int j = idx->object_index(lt[1]);
          if (j < 0) fail(l.number, "unknown index object '" + lt[1] + "'");
          const Cat* c = doc.category(lt[3]);
          if (!c) fail(l.number, "unknown category '" + lt[3] + "'");
          w.at[j] = *c;
        } else if (lt[0] == "act" && lt.size() == 6 && lt[2] == ":" && lt[4] == "->") {
          int j = idx->object_index(lt[3]);
          int k = idx->object_index(lt[5]);
          if (j < 0 || k < 0) fail(l.number, "unknown index object in act");
          int cell = idx->hom(j, k)->object_index(lt[1]);
          if (cell < 0) fail(l.number, "unknown 1-cell '" + lt[1] + "'");
          acts[{j, k, cell}] = parse_map_block(cur);
          act_lines[{j, k, cell}] = l.number;
        } else {
          fail(l.number, "unexpected line in weight block");
        }
      }
      for (int j = 0; j < idx->object_count(); ++j)
        if (!w.at[j]) fail(head.number, "missing component at '" + idx->objects[j] + "'");
      for (auto& [key, mb] : acts) {
        auto [j, k, cell] = key;
        w.action[key] = functor_of_block(mb, w.at[j], w.at[k], act_lines[key]);
      }
      doc.weights.emplace_back(t[1], make_weight(std::move(w)));
    } else if (t[0] == "transform" && t.size() == 6 && t[2] == ":" && t[4] == "->") {
      names.declare(t[1], head.number);
      WeightP dom = need_weight(t[3], head.number);
      WeightP cod = need_weight(t[5], head.number);
      TwoNat tn{dom, cod, {}};
      tn.comp.resize(dom->index->object_count());
      std::vector<bool> seen(dom->index->object_count(), false);
      while (!cur.done()) {
        const Line& l = cur.get();
        const auto& lt = l.tokens;
        if (lt[0] == "end") break;
        if (lt[0] == "at" && lt.size() == 2) {
          int j = dom->index->object_index(lt[1]);
          if (j < 0) fail(l.number, "unknown index object '" + lt[1] + "'");
          tn.comp[j] = functor_of_block(parse_map_block(cur), dom->at[j], cod->at[j], l.number);
          seen[j] = true;
        } else {
          fail(l.number, "unexpected line in transform block");
        }
      }
      for (int j = 0; j < dom->index->object_count(); ++j)
        if (!seen[j]) fail(head.number, "missing component at '" + dom->index->objects[j] + "'");
      require_two_natural(tn);
      doc.transforms.emplace_back(t[1], tn);
    } else if (t[0] == "pseudo" && t.size() == 6 && t[2] == ":" && t[4] == "->") {
      names.declare(t[1], head.number);
      WeightP dom = need_weight(t[3], head.number);
      WeightP cod = need_weight(t[5], head.number);
      PseudoNat pn{dom, cod, {}, {}};
      pn.comp.resize(dom->index->object_count());
      while (!cur.done()) {
        const Line& l = cur.get();
        const auto& lt = l.tokens;
        if (lt[0] == "end") break;
        if (lt[0] == "at" && lt.size() == 2) {
          int j = dom->index->object_index(lt[1]);
          if (j < 0) fail(l.number, "unknown index object");
          pn.comp[j] = functor_of_block(parse_map_block(cur), dom->at[j], cod->at[j], l.number);
        } else if (lt[0] == "coh" && lt.size() == 6 && lt[2] == ":" && lt[4] == "->") {
          int j = dom->index->object_index(lt[3]);
          int k = dom->index->object_index(lt[5]);
          if (j < 0 || k < 0) fail(l.number, "unknown index object in coh");
          int cell = dom->index->hom(j, k)->object_index(lt[1]);
          if (cell < 0) fail(l.number, "unknown 1-cell in coh");
          MapBlock mb = parse_map_block(cur);
          NatTransf nt{compose(cod->act(j, k, cell), pn.comp[j]),
                       compose(pn.comp[k], dom->act(j, k, cell)),
                       {}};
          nt.comp.assign(dom->at[j]->object_count(), -1);
          for (const auto& [pair, line] : mb.obj)
            nt.comp[need_object(dom->at[j], pair[0], line)] = need_arrow(cod->at[k], pair[1], line);
          check_natural(nt);
          pn.coh[{j, k, cell}] = nt;
        } else {
          fail(l.number, "unexpected line in pseudo block");
        }
      }
      auto rep = check_pseudonatural(pn);
      if (!rep.ok) fail(head.number, "not pseudonatural: " + rep.violations[0]);
      doc.pseudos.emplace_back(t[1], pn);
    } else if (t[0] == "modification" && t.size() == 6 && t[2] == ":" && t[4] == "=>") {
      names.declare(t[1], head.number);
      TwoNat dom = need_transform(t[3], head.number);
      TwoNat cod = need_transform(t[5], head.number);
      Modification m{dom, cod, {}};
      m.comp.resize(dom.dom->index->object_count());
      std::vector<bool> seen(dom.dom->index->object_count(), false);
      while (!cur.done()) {
        const Line& l = cur.get();
        const auto& lt = l.tokens;
        if (lt[0] == "end") break;
        if (lt[0] == "at" && lt.size() == 2) {
          int j = dom.dom->index->object_index(lt[1]);
          if (j < 0) fail(l.number, "unknown index object");
          MapBlock mb = parse_map_block(cur);
          NatTransf nt{dom.comp[j], cod.comp[j], {}};
          nt.comp.assign(dom.dom->at[j]->object_count(), -1);
          for (const auto& [pair, line] : mb.obj)
            nt.comp[need_object(dom.dom->at[j], pair[0], line)] =
                need_arrow(dom.cod->at[j], pair[1], line);
          check_natural(nt);
          m.comp[j] = nt;
          seen[j] = true;
        } else {
          fail(l.number, "unexpected line in modification block");
        }
      }
      for (int j = 0; j < dom.dom->index->object_count(); ++j)
        if (!seen[j]) fail(head.number, "missing component at '" + dom.dom->index->objects[j] + "'");
      auto rep = check_modification(m);
      if (!rep.ok) fail(head.number, "not a modification: " + rep.violations[0]);
      doc.modifications.emplace_back(t[1], m);
    } else if (t[0] == "simplicial" && t.size() == 4 && t[2] == "over") {
      names.declare(t[1], head.number);
      Delta2Weight x;
      std::map<std::string, TwoNat> faces;
      std::vector<std::string> levels;
      while (!cur.done()) {
        const Line& l = cur.get();
        const auto& lt = l.tokens;
        if (lt[0] == "end") break;
        if (lt[0] == "levels" && lt.size() == 4) {
          levels = {lt[1], lt[2], lt[3]};
        } else if ((lt[0] == "face" || lt[0] == "degeneracy") && lt.size() == 4 && lt[2] == "=") {
          faces[lt[1]] = need_transform(lt[3], l.number);
        } else {
          fail(l.number, "unexpected line in simplicial block");
        }
      }
      if (levels.size() != 3) fail(head.number, "simplicial block needs three levels");
      x.a0 = need_weight(levels[0], head.number);
      x.a1 = need_weight(levels[1], head.number);
      x.a2 = need_weight(levels[2], head.number);
      auto get = [&](const char* key) {
        auto it = faces.find(key);
        if (it == faces.end())
          throw parse_error("simplicial block is missing the map '" + std::string(key) + "'");
        return it->second;
      };
      x.d = get("d");
      x.c = get("c");
      x.i = get("i");
      x.p = get("p");
      x.m = get("m");
      x.q = get("q");
      x.l = get("l");
      x.r = get("r");
      check_delta2_weight(x);
      doc.simplicials.emplace_back(t[1], x);
    } else if (t[0] == "tree" && t.size() == 4 && t[2] == "for") {
      names.declare(t[1], head.number);
      DecompTree tree;
      tree.target = need_weight(t[3], head.number);
      std::map<std::string, NodeP> by_name;
      std::vector<std::pair<std::string, std::vector<std::string>>> children_of;
      std::vector<std::string> order;
      while (!cur.done()) {
        const Line& l = cur.get();
        const auto& lt = l.tokens;
        if (lt[0] == "end") break;
        if (lt[0] == "seed" && lt.size() == 2) {
          tree.seed = static_cast<unsigned>(std::stoul(lt[1]));
        } else if (lt[0] == "arity-bound" && lt.size() == 2) {
          tree.arity_bound = std::stoi(lt[1]);
        } else if (lt[0] == "bound" && lt.size() == 2) {
          tree.bound = std::stoi(lt[1]);
        } else if (lt[0] == "rootiso" && lt.size() == 3 && lt[1] == "=") {
          tree.root_iso = strip(need_transform(lt[2], l.number));
        } else if (lt[0] == "node" && lt.size() >= 5 && lt[3] == "stored") {
          NodeP n = std::make_shared<DecompNode>();
          n->kind = node_kind_from_name(lt[2]);
          n->stored = need_weight(lt[4], l.number);
          size_t i = 5;
          std::string mode;
          std::vector<std::string> kids;
          while (i < lt.size()) {
            if (lt[i] == "children" || lt[i] == "summands") {
              mode = lt[i];
            } else if (mode == "children") {
              kids.push_back(lt[i]);
            } else if (mode == "summands") {
              auto star = lt[i].find('*');
              if (star == std::string::npos) fail(l.number, "summand needs obj*mult");
              int obj = tree.target->index->object_index(lt[i].substr(0, star));
              if (obj < 0) fail(l.number, "unknown index object in summands");
              n->summands.push_back({obj, std::stoi(lt[i].substr(star + 1))});
            } else {
              fail(l.number, "unexpected token in node line");
            }
            ++i;
          }
          by_name[lt[1]] = n;
          children_of.push_back({lt[1], kids});
          order.push_back(lt[1]);
        } else if (lt[0] == "idem" && lt.size() == 4 && lt[2] == "=") {
          by_name.at(lt[1])->idem = strip(need_transform(lt[3], l.number));
        } else if (lt[0] == "faces" && lt.size() == 11 && lt[2] == "=") {
          for (int i = 0; i < 8; ++i)
            by_name.at(lt[1])->faces.push_back(strip(need_transform(lt[3 + i], l.number)));
        } else if (lt[0] == "tostored" && lt.size() == 2) {
          by_name.at(lt[1])->to_stored = parse_raw_block(cur, tree.target->index);
        } else {
          fail(l.number, "unexpected line in tree block");
        }
      }
      for (auto& [name, kids] : children_of)
        for (const auto& k : kids) {
          if (!by_name.count(k)) throw parse_error("tree child '" + k + "' is not declared");
          by_name.at(name)->children.push_back(by_name.at(k));
        }
      if (order.empty()) fail(head.number, "tree has no nodes");
      tree.root = by_name.at(order.front());
      doc.trees.emplace_back(t[1], tree);
    } else {
      fail(head.number, "unknown declaration '" + t[0] + "'");
    }
  }
  return doc;
}

// ---- emission ----

namespace {

struct Emitter {
  const Document& doc;
  std::ostringstream cats, pres, idxs, weights_out, transforms_out, mods, simps, trees_out;
  std::map<const FinCat*, std::string> cat_names;
  std::map<const Weight*, std::string> weight_names;
  std::set<std::string> used;

  explicit Emitter(const Document& d) : doc(d) {
    for (const auto& [name, c] : doc.categories) {
      cat_names.emplace(c.get(), name);
      used.insert(name);
    }
    for (const auto& [name, w] : doc.weights) {
      weight_names.emplace(w.get(), name);
      used.insert(name);
    }
  }

  std::string fresh(std::string base) {
    std::string name = base;
    int k = 2;
    while (used.count(name)) name = base + "_" + std::to_string(k++);
    used.insert(name);
    return name;
  }

  void category_block(const std::string& name, const Cat& c) {
    cats << "category " << name << "\n  objects";
    for (int o = 0; o < c->object_count(); ++o) cats << " " << c->object(o);
    cats << "\n";
    for (int a = 0; a < c->arrow_count(); ++a)
      cats << "  arrow " << c->arrow(a).id << " : " << c->object(c->arrow(a).src) << " -> "
           << c->object(c->arrow(a).tgt) << "\n";
    for (int o = 0; o < c->object_count(); ++o)
      cats << "  identity " << c->object(o) << " = " << c->arrow(c->identity(o)).id << "\n";
    for (int g = 0; g < c->arrow_count(); ++g)
      for (int f = 0; f < c->arrow_count(); ++f) {
        if (!c->composable(g, f) || c->is_identity(g) || c->is_identity(f)) continue;
        cats << "  compose " << c->arrow(g).id << " " << c->arrow(f).id << " = "
             << c->arrow(c->compose(g, f)).id << "\n";
      }
    cats << "end\n";
  }

  // ensure a category is declared, synthesizing a name when needed
  std::string cat_name(const Cat& c, const std::string& hint) {
    auto it = cat_names.find(c.get());
    if (it != cat_names.end()) return it->second;
    std::string name = fresh(hint);
    cat_names.emplace(c.get(), name);
    category_block(name, c);
    return name;
  }

  void functor_block(std::ostringstream& out, const std::string& indent, const Functor& f) {
    for (int o = 0; o < f.dom->object_count(); ++o)
      out << indent << "obj " << f.dom->object(o) << " = " << f.cod->object(f.obj_map[o]) << "\n";
    for (int a = 0; a < f.dom->arrow_count(); ++a) {
      if (f.dom->is_identity(a)) continue;
      out << indent << "arr " << f.dom->arrow(a).id << " = " << f.cod->arrow(f.arr_map[a]).id
          << "\n";
    }
  }

  std::string weight_block(const WeightP& w, const std::string& hint,
                           const std::string& index_name, bool is_diagram) {
    auto it = weight_names.find(w.get());
    if (it != weight_names.end()) return it->second;
    std::string name = fresh(hint);
    weight_names.emplace(w.get(), name);
    const Index2Cat& J = *w->index;
    std::vector<std::string> comp_names;
    for (int j = 0; j < J.object_count(); ++j)
      comp_names.push_back(cat_name(w->at[j], name + "_at_" + J.objects[j]));
    weights_out << (is_diagram ? "diagram " : "weight ") << name << " over " << index_name << "\n";
    for (int j = 0; j < J.object_count(); ++j)
      weights_out << "  at " << J.objects[j] << " = " << comp_names[j] << "\n";
    for (auto cell : J.one_cells(false)) {
      auto [j, k, f] = cell;
      weights_out << "  act " << J.hom(j, k)->object(f) << " : " << J.objects[j] << " -> "
                  << J.objects[k] << "\n";
      functor_block(weights_out, "    ", w->act(j, k, f));
      weights_out << "  end\n";
    }
    weights_out << "end\n";
    return name;
  }

  std::string transform_block(const TwoNat& t, const std::string& name_hint,
                              const std::string& dom_name, const std::string& cod_name) {
    // reuse a declared transform with the same data
    for (const auto& [n2, t2] : doc.transforms)
      if (equal(t2, t)) return n2;
    std::string name = fresh(name_hint);
    transforms_out << "transform " << name << " : " << dom_name << " -> " << cod_name << "\n";
    const Index2Cat& J = *t.dom->index;
    for (int j = 0; j < J.object_count(); ++j) {
      transforms_out << "  at " << J.objects[j] << "\n";
      functor_block(transforms_out, "    ", t.comp[j]);
      transforms_out << "  end\n";
    }
    transforms_out << "end\n";
    return name;
  }

  void raw_block(const std::string& indent, const RawTwoNat& r, const Index& idx) {
    for (int j = 0; j < idx->object_count(); ++j) {
      trees_out << indent << "at " << idx->objects[j] << "\n";
      trees_out << indent << "  obj";
      for (int v : r.comp[j].obj) trees_out << " " << v;
      trees_out << "\n" << indent << "  arr";
      for (int v : r.comp[j].arr) trees_out << " " << v;
      trees_out << "\n" << indent << "end\n";
    }
  }
};

}  // namespace

std::string emit_document(const Document& doc) {
  Emitter em(doc);
  for (const auto& [name, c] : doc.categories) em.category_block(name, c);
  for (const auto& [name, p] : doc.presentations) {
    em.pres << "presentation " << name << "\n  vertices";
    for (const auto& v : p.quiver.vertices) em.pres << " " << v;
    em.pres << "\n";
    for (const auto& e : p.quiver.edges)
      em.pres << "  edge " << e.id << " : " << p.quiver.vertices[e.src] << " -> "
              << p.quiver.vertices[e.tgt] << "\n";
    auto path_str = [&](const Path& w) {
      if (w.edges.empty()) return "id " + p.quiver.vertices[w.src];
      std::string s;
      for (int e : w.edges) {
        if (!s.empty()) s += " ";
        s += p.quiver.edges[e].id;
      }
      return s;
    };
    for (const auto& [a, b] : p.relations)
      em.pres << "  relation " << path_str(a) << " = " << path_str(b) << "\n";
    std::set<int> seen;
    for (const auto& [e, f] : p.inverses)
      if (!seen.count(e) && !seen.count(f)) {
        em.pres << "  invert " << p.quiver.edges[e].id << " = " << p.quiver.edges[f].id << "\n";
        seen.insert(e);
        seen.insert(f);
      }
    em.pres << "end\n";
  }
  for (const auto& [name, idx] : doc.indexes) {
    em.idxs << "index2 " << name << "\n  objects";
    for (const auto& o : idx->objects) em.idxs << " " << o;
    em.idxs << "\n";
    int n = idx->object_count();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const Cat& h = idx->hom(a, b);
        if (h->object_count() == 0) continue;
        em.idxs << "  hom " << idx->objects[a] << " " << idx->objects[b] << "\n    onecell";
        for (int c = 0; c < h->object_count(); ++c) em.idxs << " " << h->object(c);
        em.idxs << "\n";
        for (int x = 0; x < h->arrow_count(); ++x) {
          if (h->is_identity(x)) continue;
          em.idxs << "    twocell " << h->arrow(x).id << " : " << h->object(h->arrow(x).src)
                  << " => " << h->object(h->arrow(x).tgt) << "\n";
        }
        for (int g = 0; g < h->arrow_count(); ++g)
          for (int f = 0; f < h->arrow_count(); ++f) {
            if (!h->composable(g, f) || h->is_identity(g) || h->is_identity(f)) continue;
            em.idxs << "    vcompose " << h->arrow(g).id << " " << h->arrow(f).id << " = "
                    << h->arrow(h->compose(g, f)).id << "\n";
          }
        em.idxs << "  end\n";
      }
    for (int a = 0; a < n; ++a)
      em.idxs << "  identity " << idx->objects[a] << " = "
              << idx->hom(a, a)->object(idx->identity_cell(a)) << "\n";
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          const Cat& ab = idx->hom(a, b);
          const Cat& bc = idx->hom(b, c);
          for (int f = 0; f < ab->object_count(); ++f)
            for (int g = 0; g < bc->object_count(); ++g)
              em.idxs << "  compose " << idx->objects[a] << " " << idx->objects[b] << " "
                      << idx->objects[c] << " : " << ab->object(f) << " " << bc->object(g)
                      << " = " << idx->hom(a, c)->object(idx->compose_cell(a, b, c, f, g))
                      << "\n";
          for (int x = 0; x < ab->arrow_count(); ++x)
            for (int y = 0; y < bc->arrow_count(); ++y) {
              if (ab->is_identity(x) && bc->is_identity(y)) continue;
              em.idxs << "  compose2 " << idx->objects[a] << " " << idx->objects[b] << " "
                      << idx->objects[c] << " : " << ab->arrow(x).id << " " << bc->arrow(y).id
                      << " = " << idx->hom(a, c)->arrow(idx->compose_2cell(a, b, c, x, y)).id
                      << "\n";
            }
        }
    em.idxs << "end\n";
  }
  for (const auto& [name, w] : doc.weights) {
    // re-emit under the declared name
    em.weight_names.erase(w.get());
    em.used.erase(name);
    em.weight_block(w, name, doc.weight_index_name.count(name) ? doc.weight_index_name.at(name)
                                                               : std::string("?"),
                    doc.diagram_names.count(name) > 0);
  }
  auto weight_name_of = [&](const WeightP& w) -> std::string {
    auto it = em.weight_names.find(w.get());
    if (it == em.weight_names.end())
      throw invalid_input("emit: a transformation endpoint is not a declared weight");
    return it->second;
  };
  for (const auto& [name, t] : doc.transforms) {
    em.used.erase(name);
    em.transform_block(t, name, weight_name_of(t.dom), weight_name_of(t.cod));
  }
  for (const auto& [name, m] : doc.modifications) {
    auto tname = [&](const TwoNat& t) -> std::string {
      for (const auto& [n2, t2] : doc.transforms)
        if (equal(t2, t)) return n2;
      throw invalid_input("emit: modification endpoints are not declared transforms");
    };
    em.mods << "modification " << name << " : " << tname(m.dom) << " => " << tname(m.cod) << "\n";
    const Index2Cat& J = *m.dom.dom->index;
    for (int j = 0; j < J.object_count(); ++j) {
      em.mods << "  at " << J.objects[j] << "\n";
      for (int x = 0; x < m.dom.dom->at[j]->object_count(); ++x)
        em.mods << "    obj " << m.dom.dom->at[j]->object(x) << " = "
                << m.dom.cod->at[j]->arrow(m.comp[j].comp[x]).id << "\n";
      em.mods << "  end\n";
    }
    em.mods << "end\n";
  }
  for (const auto& [name, x] : doc.simplicials) {
    auto tname = [&](const TwoNat& t) -> std::string {
      for (const auto& [n2, t2] : doc.transforms)
        if (equal(t2, t)) return n2;
      throw invalid_input("emit: simplicial face is not a declared transform");
    };
    em.simps << "simplicial " << name << " over "
             << (doc.weight_index_name.count(weight_name_of(x.a0))
                     ? doc.weight_index_name.at(weight_name_of(x.a0))
                     : "?")
             << "\n  levels " << weight_name_of(x.a0) << " " << weight_name_of(x.a1) << " "
             << weight_name_of(x.a2) << "\n";
    em.simps << "  face d = " << tname(x.d) << "\n  face c = " << tname(x.c)
             << "\n  degeneracy i = " << tname(x.i) << "\n  face p = " << tname(x.p)
             << "\n  face m = " << tname(x.m) << "\n  face q = " << tname(x.q)
             << "\n  degeneracy l = " << tname(x.l) << "\n  degeneracy r = " << tname(x.r)
             << "\n";
    em.simps << "end\n";
  }
  for (const auto& [name, tree] : doc.trees) {
    std::string index_name = "?";
    {
      auto it = em.weight_names.find(tree.target.get());
      if (it != em.weight_names.end() && doc.weight_index_name.count(it->second))
        index_name = doc.weight_index_name.at(it->second);
    }
    std::vector<NodeP> nodes;
    std::function<void(const NodeP&)> collect = [&](const NodeP& n) {
      nodes.push_back(n);
      for (const auto& c : n->children) collect(c);
    };
    collect(tree.root);
    std::map<const DecompNode*, std::string> node_name;
    for (size_t i = 0; i < nodes.size(); ++i)
      node_name[nodes[i].get()] = "n" + std::to_string(i);
    for (const auto& n : nodes)
      em.weight_block(n->stored, name + "_" + node_name[n.get()] + "_w", index_name, false);
    std::map<const DecompNode*, std::vector<std::string>> face_names;
    std::map<const DecompNode*, std::string> idem_names;
    for (const auto& n : nodes) {
      if (!n->faces.empty()) {
        for (size_t i = 0; i < n->faces.size(); ++i) {
          int dom_child = (i <= 1) ? 1 : (i == 2 ? 0 : (i <= 5 ? 2 : 1));
          int cod_child = (i <= 1) ? 0 : (i == 2 ? 1 : (i <= 5 ? 1 : 2));
          TwoNat t = attach(n->faces[i], n->children[dom_child]->stored,
                            n->children[cod_child]->stored);
          face_names[n.get()].push_back(em.transform_block(
              t, name + "_" + node_name[n.get()] + "_f" + std::to_string(i),
              em.weight_names.at(n->children[dom_child]->stored.get()),
              em.weight_names.at(n->children[cod_child]->stored.get())));
        }
      }
      if (!n->idem.comp.empty()) {
        TwoNat t = attach(n->idem, n->children[0]->stored, n->children[0]->stored);
        idem_names[n.get()] = em.transform_block(
            t, name + "_" + node_name[n.get()] + "_idem",
            em.weight_names.at(n->children[0]->stored.get()),
            em.weight_names.at(n->children[0]->stored.get()));
      }
    }
    std::string rootiso_name;
    {
      TwoNat t = attach(tree.root_iso, tree.root->stored, tree.target);
      rootiso_name = em.transform_block(t, name + "_rootiso",
                                        em.weight_names.at(tree.root->stored.get()),
                                        weight_name_of(tree.target));
    }
    em.trees_out << "tree " << name << " for " << weight_name_of(tree.target) << "\n";
    em.trees_out << "  seed " << tree.seed << "\n  arity-bound " << tree.arity_bound
                 << "\n  bound " << tree.bound << "\n";
    em.trees_out << "  rootiso = " << rootiso_name << "\n";
    for (const auto& n : nodes) {
      em.trees_out << "  node " << node_name[n.get()] << " " << node_kind_name(n->kind)
                   << " stored " << em.weight_names.at(n->stored.get());
      if (!n->children.empty()) {
        em.trees_out << " children";
        for (const auto& c : n->children) em.trees_out << " " << node_name[c.get()];
      }
      if (!n->summands.empty()) {
        em.trees_out << " summands";
        for (auto [j, mult] : n->summands)
          em.trees_out << " " << tree.target->index->objects[j] << "*" << mult;
      }
      em.trees_out << "\n";
      if (!n->faces.empty()) {
        em.trees_out << "  faces " << node_name[n.get()] << " =";
        for (const auto& f : face_names[n.get()]) em.trees_out << " " << f;
        em.trees_out << "\n";
      }
      if (!n->idem.comp.empty())
        em.trees_out << "  idem " << node_name[n.get()] << " = " << idem_names[n.get()] << "\n";
      if (!n->to_stored.comp.empty()) {
        em.trees_out << "  tostored " << node_name[n.get()] << "\n";
        em.raw_block("    ", n->to_stored, tree.target->index);
        em.trees_out << "  end\n";
      }
    }
    em.trees_out << "end\n";
  }
  return em.cats.str() + em.pres.str() + em.idxs.str() + em.weights_out.str() +
         em.transforms_out.str() + em.mods.str() + em.simps.str() + em.trees_out.str();
}

void add_tree(Document& doc, const std::string& name, const DecompTree& tree,
              const std::string& /*target_name*/, const std::string& /*index_name*/) {
  doc.trees.emplace_back(name, tree);
}

std::string dot_of_category(const Cat& c) {
  std::ostringstream out;
  out << "digraph category {\n";
  for (int o = 0; o < c->object_count(); ++o) out << "  \"" << c->object(o) << "\";\n";
  for (int a = 0; a < c->arrow_count(); ++a) {
    if (c->is_identity(a)) continue;
    out << "  \"" << c->object(c->arrow(a).src) << "\" -> \"" << c->object(c->arrow(a).tgt)
        << "\" [label=\"" << c->arrow(a).id << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string dot_of_tree(const DecompTree& tree) {
  std::ostringstream out;
  out << "digraph decomposition {\n  node [shape=box];\n";
  int counter = 0;
  std::function<int(const NodeP&)> walk = [&](const NodeP& n) -> int {
    int id = counter++;
    std::string label = node_kind_name(n->kind);
    if (!n->summands.empty()) {
      label += "\\n";
      for (auto [j, mult] : n->summands)
        label += tree.target->index->objects[j] + "*" + std::to_string(mult) + " ";
    }
    if (!n->sift_note.empty()) label += "\\n[" + n->sift_note + "]";
    out << "  n" << id << " [label=\"" << label << "\"];\n";
    for (const auto& c : n->children) {
      int cid = walk(c);
      out << "  n" << id << " -> n" << cid << ";\n";
    }
    return id;
  };
  walk(tree.root);
  out << "}\n";
  return out.str();
}

}  // namespace catcolim
