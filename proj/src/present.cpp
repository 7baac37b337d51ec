#include "catcolim/present.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace catcolim {

int Quiver::vertex_index(const std::string& id) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == id) return static_cast<int>(i);
  return -1;
}

int Quiver::edge_index(const std::string& id) const {
  for (size_t i = 0; i < edges.size(); ++i)
    if (edges[i].id == id) return static_cast<int>(i);
  return -1;
}

void Quiver::validate() const {
  std::set<std::string> seen;
  for (const auto& v : vertices)
    if (!seen.insert(v).second) throw invalid_input("duplicate vertex: " + v);
  seen.clear();
  for (const auto& e : edges) {
    if (!seen.insert(e.id).second) throw invalid_input("duplicate edge: " + e.id);
    if (e.src < 0 || e.src >= static_cast<int>(vertices.size()) || e.tgt < 0 ||
        e.tgt >= static_cast<int>(vertices.size()))
      throw invalid_input("edge " + e.id + " has endpoints outside the quiver");
  }
}

int path_target(const Quiver& q, const Path& p) {
  return p.edges.empty() ? p.src : q.edges[p.edges.back()].tgt;
}

bool path_well_typed(const Quiver& q, const Path& p) {
  if (p.src < 0 || p.src >= static_cast<int>(q.vertices.size())) return false;
  int at = p.src;
  for (int e : p.edges) {
    if (e < 0 || e >= static_cast<int>(q.edges.size())) return false;
    if (q.edges[e].src != at) return false;
    at = q.edges[e].tgt;
  }
  return true;
}

Path concat(const Quiver& q, const Path& first, const Path& then) {
  if (path_target(q, first) != then.src) throw invalid_input("concat: paths do not meet");
  Path out{first.src, first.edges};
  out.edges.insert(out.edges.end(), then.edges.begin(), then.edges.end());
  return out;
}

std::string render_path(const Quiver& q, const Path& p) {
  if (p.edges.empty()) return "id@" + q.vertices[p.src];
  std::string out;
  for (auto it = p.edges.rbegin(); it != p.edges.rend(); ++it) {
    if (!out.empty()) out += "*";
    out += q.edges[*it].id;
  }
  return out;
}

void PresCat::validate() const {
  quiver.validate();
  for (const auto& [a, b] : relations) {
    if (!path_well_typed(quiver, a) || !path_well_typed(quiver, b))
      throw invalid_input("relation side is not a path of the quiver");
    if (a.src != b.src || path_target(quiver, a) != path_target(quiver, b))
      throw invalid_input("relation pair is not parallel: " + render_path(quiver, a) + " = " +
                          render_path(quiver, b));
  }
  for (const auto& [e, inv] : inverses) {
    const auto& ee = quiver.edges.at(e);
    const auto& ii = quiver.edges.at(inv);
    if (ee.src != ii.tgt || ee.tgt != ii.src)
      throw invalid_input("inverse edge " + ii.id + " does not oppose " + ee.id);
    bool left = false, right = false;
    for (const auto& [a, b] : relations) {
      auto is_pair = [&](const Path& u, const Path& v, int first, int second) {
        return u.edges.size() == 2 && u.edges[0] == first && u.edges[1] == second &&
               v.edges.empty();
      };
      left = left || is_pair(a, b, e, inv) || is_pair(b, a, e, inv);
      right = right || is_pair(a, b, inv, e) || is_pair(b, a, inv, e);
    }
    if (!left || !right)
      throw invalid_input("inversion relations missing for edge " + ee.id);
  }
}

// ---- completion ----

namespace {

struct WordOrder {
  const std::vector<int>& rank;
  // true when u is strictly greater than v in length-lex order
  bool greater(const std::vector<int>& u, const std::vector<int>& v) const {
    if (u.size() != v.size()) return u.size() > v.size();
    for (size_t i = 0; i < u.size(); ++i)
      if (rank[u[i]] != rank[v[i]]) return rank[u[i]] > rank[v[i]];
    return false;
  }
};

constexpr size_t kMaxRules = 200000;

struct Completion {
  const Quiver& q;
  WordOrder order;
  int bound;
  std::vector<RewriteRule> rules;
  std::vector<bool> dead;
  std::vector<std::vector<int>> by_first;
  std::vector<std::vector<int>> lhs_by_symbol;  // rules whose lhs mentions the edge
  std::vector<std::vector<int>> rhs_by_symbol;  // rules whose rhs mentions the edge
  std::deque<std::pair<std::vector<int>, std::vector<int>>> eqs;  // pending, share source
  std::deque<int> eq_src;
  size_t processed = 0;

  size_t maxlhs = 1;

  Completion(const Quiver& qq, const std::vector<int>& rank, int b)
      : q(qq),
        order{rank},
        bound(b),
        by_first(qq.edges.size()),
        lhs_by_symbol(qq.edges.size()),
        rhs_by_symbol(qq.edges.size()) {}

  void index_symbols(int idx) {
    std::set<int> seen;
    for (int s : rules[idx].lhs)
      if (seen.insert(s).second) lhs_by_symbol[s].push_back(idx);
    seen.clear();
    for (int s : rules[idx].rhs)
      if (seen.insert(s).second) rhs_by_symbol[s].push_back(idx);
  }

  static bool contains(const std::vector<int>& hay, const std::vector<int>& needle) {
    if (needle.size() > hay.size()) return false;
    for (size_t i = 0; i + needle.size() <= hay.size(); ++i)
      if (std::equal(needle.begin(), needle.end(), hay.begin() + i)) return true;
    return false;
  }

  std::vector<int> normalize(std::vector<int> w) const {
    size_t i = 0;
    while (i < w.size()) {
      bool fired = false;
      for (int ri : by_first[w[i]]) {
        if (dead[ri]) continue;
        const auto& lhs = rules[ri].lhs;
        if (lhs.size() > w.size() - i) continue;
        if (!std::equal(lhs.begin(), lhs.end(), w.begin() + i)) continue;
        std::vector<int> nw;
        nw.reserve(w.size() - lhs.size() + rules[ri].rhs.size());
        nw.insert(nw.end(), w.begin(), w.begin() + i);
        nw.insert(nw.end(), rules[ri].rhs.begin(), rules[ri].rhs.end());
        nw.insert(nw.end(), w.begin() + i + lhs.size(), w.end());
        w = std::move(nw);
        i = i >= maxlhs ? i - (maxlhs - 1) : 0;  // back up past any new redex
        fired = true;
        break;
      }
      if (!fired) ++i;
    }
    return w;
  }

  void push_eq(std::vector<int> u, std::vector<int> v, int src) {
    eqs.emplace_back(std::move(u), std::move(v));
    eq_src.push_back(src);
  }

  // critical pairs of rules a and b (a may equal b)
  void overlaps(int a, int b) {
    const auto& l1 = rules[a].lhs;
    const auto& r1 = rules[a].rhs;
    const auto& l2 = rules[b].lhs;
    const auto& r2 = rules[b].rhs;
    // l2 occurs inside l1
    if (l2.size() <= l1.size()) {
      for (size_t i = 0; i + l2.size() <= l1.size(); ++i) {
        if (a == b && i == 0) continue;
        if (!std::equal(l2.begin(), l2.end(), l1.begin() + i)) continue;
        std::vector<int> v(l1.begin(), l1.begin() + i);
        v.insert(v.end(), r2.begin(), r2.end());
        v.insert(v.end(), l1.begin() + i + l2.size(), l1.end());
        push_eq(r1, std::move(v), rules[a].src);
      }
    }
    // proper suffix of l1 = proper prefix of l2
    for (size_t k = 1; k < l1.size() && k < l2.size(); ++k) {
      if (!std::equal(l2.begin(), l2.begin() + k, l1.end() - k)) continue;
      std::vector<int> u(r1);
      u.insert(u.end(), l2.begin() + k, l2.end());
      std::vector<int> v(l1.begin(), l1.end() - k);
      v.insert(v.end(), r2.begin(), r2.end());
      push_eq(std::move(u), std::move(v), rules[a].src);
    }
  }
};

}  // namespace

Path RewriteSystem::normal_form(Path p) const {
  if (!path_well_typed(quiver, p)) throw invalid_input("normal_form: ill-typed path");
  size_t i = 0;
  auto& w = p.edges;
  while (i < w.size()) {
    bool fired = false;
    for (int ri : by_first_[w[i]]) {
      const auto& lhs = rules[ri].lhs;
      if (lhs.size() > w.size() - i) continue;
      if (!std::equal(lhs.begin(), lhs.end(), w.begin() + i)) continue;
      std::vector<int> nw;
      nw.reserve(w.size() - lhs.size() + rules[ri].rhs.size());
      nw.insert(nw.end(), w.begin(), w.begin() + i);
      nw.insert(nw.end(), rules[ri].rhs.begin(), rules[ri].rhs.end());
      nw.insert(nw.end(), w.begin() + i + lhs.size(), w.end());
      w = std::move(nw);
      i = i >= maxlhs_ ? i - (maxlhs_ - 1) : 0;
      fired = true;
      break;
    }
    if (!fired) ++i;
  }
  return p;
}

void RewriteSystem::reindex() {
  by_first_.assign(quiver.edges.size(), {});
  maxlhs_ = 1;
  for (size_t r = 0; r < rules.size(); ++r) {
    by_first_[rules[r].lhs[0]].push_back(static_cast<int>(r));
    maxlhs_ = std::max(maxlhs_, rules[r].lhs.size());
  }
}

std::variant<RewriteSystem, Undecided> complete_presentation(const PresCat& p, int bound,
                                                             size_t max_equations) {
  p.validate();
  size_t maxrel = 0;
  for (const auto& [a, b] : p.relations) maxrel = std::max({maxrel, a.edges.size(), b.edges.size()});
  if (bound < static_cast<int>(maxrel))
    throw invalid_input("completion bound smaller than the longest relation side");

  std::vector<int> rank(p.quiver.edges.size());
  {
    std::vector<int> order(p.quiver.edges.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return p.quiver.edges[a].id < p.quiver.edges[b].id;
    });
    for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  }

  Completion kb(p.quiver, rank, bound);
  for (const auto& [a, b] : p.relations) kb.push_eq(a.edges, b.edges, a.src);

  while (!kb.eqs.empty()) {
    if (++kb.processed > max_equations)
      return Undecided{bound, "resource cap: too many equations processed"};
    auto [u, v] = std::move(kb.eqs.front());
    int src = kb.eq_src.front();
    kb.eqs.pop_front();
    kb.eq_src.pop_front();
    u = kb.normalize(std::move(u));
    v = kb.normalize(std::move(v));
    if (u == v) continue;
    if (!kb.order.greater(u, v)) std::swap(u, v);
    if (static_cast<int>(u.size()) > bound) {
      Path pu{src, u}, pv{src, v};
      return Undecided{bound, "unresolved critical pair exceeds bound: " +
                                  render_path(p.quiver, pu) + " = " + render_path(p.quiver, pv)};
    }
    if (kb.rules.size() >= kMaxRules) return Undecided{bound, "resource cap: too many rules"};
    int idx = static_cast<int>(kb.rules.size());
    kb.maxlhs = std::max(kb.maxlhs, u.size());
    kb.rules.push_back({u, v, src});
    kb.dead.push_back(false);
    kb.by_first[u[0]].push_back(idx);
    kb.index_symbols(idx);
    // interreduce older rules against the new one; candidate rules must
    // mention the first symbol of the new left-hand side
    for (int j : kb.lhs_by_symbol[u[0]]) {
      if (kb.dead[j] || j == idx) continue;
      if (Completion::contains(kb.rules[j].lhs, u)) {
        kb.dead[j] = true;
        kb.push_eq(kb.rules[j].lhs, kb.rules[j].rhs, kb.rules[j].src);
      }
    }
    for (int j : kb.rhs_by_symbol[u[0]]) {
      if (kb.dead[j] || j == idx) continue;
      if (Completion::contains(kb.rules[j].rhs, u)) {
        kb.rules[j].rhs = kb.normalize(kb.rules[j].rhs);
        kb.index_symbols(j);
      }
    }
    // overlaps with rules sharing a symbol with the new one
    {
      std::set<int> cands;
      for (int s : u)
        for (int j : kb.by_first[s])
          if (!kb.dead[j]) cands.insert(j);
      for (int j : kb.lhs_by_symbol[u[0]])
        if (!kb.dead[j]) cands.insert(j);
      cands.insert(idx);
      for (int j : cands) {
        kb.overlaps(idx, j);
        if (j != idx) kb.overlaps(j, idx);
      }
    }
  }

  RewriteSystem rs;
  rs.quiver = p.quiver;
  rs.bound = bound;
  rs.complete = true;
  for (size_t i = 0; i < kb.rules.size(); ++i)
    if (!kb.dead[i]) {
      RewriteRule r = kb.rules[i];
      r.rhs = kb.normalize(r.rhs);
      rs.rules.push_back(std::move(r));
    }
  rs.reindex();
  return rs;
}

// ---- materialization ----

int Materialization::arrow_of_path(const Path& p) const {
  Path nf = rs.normal_form(p);
  std::vector<int> key;
  key.push_back(nf.src);
  key.insert(key.end(), nf.edges.begin(), nf.edges.end());
  auto it = form_index.find(key);
  if (it == form_index.end()) throw invalid_input("path normal form not in the enumerated set");
  return it->second;
}

std::variant<Materialization, Undecided> materialize(const PresCat& p, int bound) {
  auto comp = complete_presentation(p, bound);
  if (std::holds_alternative<Undecided>(comp)) return std::get<Undecided>(comp);
  RewriteSystem rs = std::move(std::get<RewriteSystem>(comp));
  const Quiver& q = rs.quiver;

  // Normal forms are closed under taking prefixes, so a level-by-level
  // extension enumerates all of them; a nonempty level past the bound means
  // the category is not known finite at this bound.
  std::vector<Path> forms;
  std::vector<std::vector<int>> out_edges(q.vertices.size());
  for (size_t e = 0; e < q.edges.size(); ++e) out_edges[q.edges[e].src].push_back(static_cast<int>(e));
  std::vector<std::vector<int>> rules_by_last(q.edges.size());
  for (size_t r = 0; r < rs.rules.size(); ++r)
    rules_by_last[rs.rules[r].lhs.back()].push_back(static_cast<int>(r));
  size_t level_begin = 0;
  for (size_t v = 0; v < q.vertices.size(); ++v) forms.push_back({static_cast<int>(v), {}});
  for (int len = 1; len <= bound + 1; ++len) {
    size_t level_end = forms.size();
    for (size_t i = level_begin; i < level_end; ++i) {
      Path base = forms[i];
      for (int e : out_edges[path_target(q, base)]) {
        Path cand{base.src, base.edges};
        cand.edges.push_back(e);
        // any new redex must be a suffix ending at the appended edge
        bool normal = true;
        for (int ri : rules_by_last[e]) {
          const auto& lhs = rs.rules[ri].lhs;
          if (lhs.size() > cand.edges.size()) continue;
          if (std::equal(lhs.begin(), lhs.end(), cand.edges.end() - lhs.size())) {
            normal = false;
            break;
          }
        }
        if (normal) forms.push_back(std::move(cand));
      }
    }
    if (forms.size() == level_end) break;  // no longer normal forms: finite
    if (len == bound + 1)
      return Undecided{bound, "normal forms of length beyond the bound exist"};
    level_begin = level_end;
  }

  Materialization m;
  m.rs = rs;
  std::vector<std::string> objects = q.vertices;
  std::vector<Arrow> arrows;
  std::vector<int> identity(objects.size(), -1);
  for (size_t i = 0; i < forms.size(); ++i) {
    const Path& f = forms[i];
    std::string id = f.edges.empty() ? "1_" + q.vertices[f.src] : render_path(q, f);
    arrows.push_back({id, f.src, path_target(q, f)});
    if (f.edges.empty()) identity[f.src] = static_cast<int>(i);
    std::vector<int> key;
    key.push_back(f.src);
    key.insert(key.end(), f.edges.begin(), f.edges.end());
    m.form_index[key] = static_cast<int>(i);
  }
  std::unordered_map<std::int64_t, int> comp_table;
  const std::int64_t n = static_cast<std::int64_t>(arrows.size());
  for (size_t g = 0; g < forms.size(); ++g)
    for (size_t f = 0; f < forms.size(); ++f) {
      if (path_target(q, forms[f]) != forms[g].src) continue;
      Path w{forms[f].src, forms[f].edges};
      w.edges.insert(w.edges.end(), forms[g].edges.begin(), forms[g].edges.end());
      Path nf = rs.normal_form(w);
      std::vector<int> key;
      key.push_back(nf.src);
      key.insert(key.end(), nf.edges.begin(), nf.edges.end());
      auto it = m.form_index.find(key);
      if (it == m.form_index.end())
        return Undecided{bound, "composite of normal forms escapes the enumerated set"};
      comp_table[static_cast<std::int64_t>(g) * n + f] = it->second;
    }
  m.cat = std::make_shared<FinCat>(FinCat::make_unchecked(std::move(objects), std::move(arrows),
                                                          std::move(identity),
                                                          std::move(comp_table)));
  m.vertex_obj.resize(q.vertices.size());
  for (size_t v = 0; v < q.vertices.size(); ++v) m.vertex_obj[v] = static_cast<int>(v);
  m.arrow_form = std::move(forms);
  return m;
}

// ---- presentations of finite categories ----

Presented present_category(const Cat& a) {
  Presented out;
  Quiver& q = out.pres.quiver;
  q.vertices.resize(a->object_count());
  for (int o = 0; o < a->object_count(); ++o) q.vertices[o] = a->object(o);
  std::vector<int> edge_of_arrow(a->arrow_count(), -1);
  for (int m = 0; m < a->arrow_count(); ++m) {
    if (a->is_identity(m)) continue;
    edge_of_arrow[m] = static_cast<int>(q.edges.size());
    q.edges.push_back({a->arrow(m).id, a->arrow(m).src, a->arrow(m).tgt});
  }
  out.arrow_path.resize(a->arrow_count());
  for (int m = 0; m < a->arrow_count(); ++m) {
    if (a->is_identity(m))
      out.arrow_path[m] = Path{a->arrow(m).src, {}};
    else
      out.arrow_path[m] = Path{a->arrow(m).src, {edge_of_arrow[m]}};
  }
  for (int g = 0; g < a->arrow_count(); ++g) {
    if (a->is_identity(g)) continue;
    for (int f = 0; f < a->arrow_count(); ++f) {
      if (a->is_identity(f) || !a->composable(g, f)) continue;
      Path lhs{a->arrow(f).src, {edge_of_arrow[f], edge_of_arrow[g]}};
      out.pres.relations.emplace_back(lhs, out.arrow_path[a->compose(g, f)]);
    }
  }
  return out;
}

Presented quotient(const Cat& a, const std::vector<std::pair<int, int>>& arrow_pairs) {
  for (auto [u, v] : arrow_pairs)
    if (a->arrow(u).src != a->arrow(v).src || a->arrow(u).tgt != a->arrow(v).tgt)
      throw invalid_input("quotient: pair (" + a->arrow(u).id + ", " + a->arrow(v).id +
                          ") is not parallel");
  Presented out = present_category(a);
  for (auto [u, v] : arrow_pairs)
    out.pres.relations.emplace_back(out.arrow_path[u], out.arrow_path[v]);
  return out;
}

PresCat quotient(const PresCat& p, const std::vector<std::pair<Path, Path>>& pairs) {
  PresCat out = p;
  for (const auto& [a, b] : pairs) {
    if (!path_well_typed(p.quiver, a) || !path_well_typed(p.quiver, b) || a.src != b.src ||
        path_target(p.quiver, a) != path_target(p.quiver, b))
      throw invalid_input("quotient: relation pair is not parallel");
    out.relations.emplace_back(a, b);
  }
  return out;
}

static void add_inverse(PresCat& pres, int edge_or_arrow, const Path& forward,
                        std::map<int, int>& inverse_edge) {
  Quiver& q = pres.quiver;
  int src = forward.src;
  int tgt = path_target(q, forward);
  int inv = static_cast<int>(q.edges.size());
  std::string base = forward.edges.size() == 1 ? q.edges[forward.edges[0]].id
                                               : render_path(q, forward);
  q.edges.push_back({"inv(" + base + ")", tgt, src});
  Path pinv{tgt, {inv}};
  pres.relations.emplace_back(concat(q, forward, pinv), Path{src, {}});
  pres.relations.emplace_back(concat(q, pinv, forward), Path{tgt, {}});
  if (forward.edges.size() == 1) {
    pres.inverses[forward.edges[0]] = inv;
    pres.inverses[inv] = forward.edges[0];
  }
  inverse_edge[edge_or_arrow] = inv;
}

Localized localize(const Cat& a, const std::vector<int>& arrows) {
  Presented pr = present_category(a);
  Localized out;
  out.pres = std::move(pr.pres);
  out.arrow_path = std::move(pr.arrow_path);
  std::set<int> seen;
  for (int m : arrows) {
    if (m < 0 || m >= a->arrow_count()) throw invalid_input("localize: arrow index out of range");
    if (!seen.insert(m).second) continue;
    add_inverse(out.pres, m, out.arrow_path[m], out.inverse_edge);
  }
  return out;
}

Localized localize(const PresCat& p, const std::vector<int>& edges) {
  Localized out;
  out.pres = p;
  std::set<int> seen;
  for (int e : edges) {
    if (e < 0 || e >= static_cast<int>(p.quiver.edges.size()))
      throw invalid_input("localize: edge index out of range");
    if (!seen.insert(e).second) continue;
    Path fwd{p.quiver.edges[e].src, {e}};
    add_inverse(out.pres, e, fwd, out.inverse_edge);
  }
  return out;
}

// ---- coequalizers of functors ----

CatCoequalizer coequalize_functors(const Cat& b,
                                   const std::vector<std::pair<Functor, Functor>>& pairs) {
  std::vector<int> rep(b->object_count());
  for (int i = 0; i < b->object_count(); ++i) rep[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (rep[x] != x) x = rep[x] = rep[rep[x]];
    return x;
  };
  for (const auto& [F, G] : pairs) {
    if (F.cod.get() != b.get() || G.cod.get() != b.get() || F.dom.get() != G.dom.get())
      throw invalid_input("coequalize: functor pair does not glue the given category");
    for (int a = 0; a < F.dom->object_count(); ++a) {
      int x = find(F.obj_map[a]), y = find(G.obj_map[a]);
      if (x != y) rep[std::max(x, y)] = std::min(x, y);
    }
  }
  CatCoequalizer out;
  out.base = b;
  out.obj_class.resize(b->object_count());
  // vertex per class, named after the least object id it contains
  std::map<int, int> class_vertex;
  std::vector<std::string> vnames;
  for (int o = 0; o < b->object_count(); ++o) {
    int r = find(o);
    if (!class_vertex.count(r)) {
      class_vertex[r] = static_cast<int>(vnames.size());
      std::string least = b->object(o);
      for (int o2 = o; o2 < b->object_count(); ++o2)
        if (find(o2) == r) least = std::min(least, b->object(o2));
      vnames.push_back(least);
    }
  }
  for (int o = 0; o < b->object_count(); ++o) out.obj_class[o] = class_vertex.at(find(o));
  Quiver& q = out.pres.quiver;
  q.vertices = vnames;
  std::vector<int> edge_of_arrow(b->arrow_count(), -1);
  out.arrow_path.resize(b->arrow_count());
  for (int m = 0; m < b->arrow_count(); ++m) {
    if (b->is_identity(m)) {
      out.arrow_path[m] = Path{out.obj_class[b->arrow(m).src], {}};
      continue;
    }
    edge_of_arrow[m] = static_cast<int>(q.edges.size());
    q.edges.push_back({b->arrow(m).id, out.obj_class[b->arrow(m).src], out.obj_class[b->arrow(m).tgt]});
    out.arrow_path[m] = Path{out.obj_class[b->arrow(m).src], {edge_of_arrow[m]}};
  }
  for (int g = 0; g < b->arrow_count(); ++g) {
    if (b->is_identity(g)) continue;
    for (int f = 0; f < b->arrow_count(); ++f) {
      if (b->is_identity(f) || !b->composable(g, f)) continue;
      Path lhs = concat(q, out.arrow_path[f], out.arrow_path[g]);
      out.pres.relations.emplace_back(lhs, out.arrow_path[b->compose(g, f)]);
    }
  }
  for (const auto& [F, G] : pairs)
    for (int m = 0; m < F.dom->arrow_count(); ++m) {
      if (F.dom->is_identity(m)) continue;
      const Path& u = out.arrow_path[F.arr_map[m]];
      const Path& v = out.arrow_path[G.arr_map[m]];
      if (!(u == v)) out.pres.relations.emplace_back(u, v);
    }
  return out;
}

}  // namespace catcolim
