#ifndef CATCOLIM_PRESENT_HPP_
#define CATCOLIM_PRESENT_HPP_

#include <map>
#include <variant>

#include "catcolim/fincat.hpp"

namespace catcolim {

struct QuiverEdge {
  std::string id;
  int src = -1;
  int tgt = -1;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<QuiverEdge> edges;

  int vertex_index(const std::string& id) const;
  int edge_index(const std::string& id) const;
  void validate() const;
};

// A path holds its edges in application order: edges[0] is applied first.
// An empty path is the identity at src.
struct Path {
  int src = -1;
  std::vector<int> edges;

  bool operator==(const Path& o) const { return src == o.src && edges == o.edges; }
};

int path_target(const Quiver& q, const Path& p);
bool path_well_typed(const Quiver& q, const Path& p);
Path concat(const Quiver& q, const Path& first, const Path& then);
std::string render_path(const Quiver& q, const Path& p);

// A finitely presented category: a quiver, parallel path relations and a
// record of formally inverted edges.
struct PresCat {
  Quiver quiver;
  std::vector<std::pair<Path, Path>> relations;
  std::map<int, int> inverses;  // edge -> its formal inverse edge

  void validate() const;
};

struct Undecided {
  int bound = 0;
  std::string detail;
};

struct RewriteRule {
  std::vector<int> lhs;  // nonempty
  std::vector<int> rhs;
  int src = -1;          // source vertex of both sides
};

// An oriented, interreduced rewriting system for path equality.  Rules
// strictly decrease the length-lexicographic order (edge-identifier order
// breaks ties), so rewriting terminates and never increases length.
struct RewriteSystem {
  Quiver quiver;
  std::vector<RewriteRule> rules;
  bool complete = false;
  int bound = 0;

  Path normal_form(Path p) const;

 private:
  friend std::variant<RewriteSystem, Undecided> complete_presentation(const PresCat&, int, size_t);
  std::vector<std::vector<int>> by_first_;  // rule indices by first edge of lhs
  size_t maxlhs_ = 1;
  void reindex();
};

// Knuth-Bendix completion of the relation set, capped by `bound` on the
// length of any rule side and by `max_equations` on the total work.
// Undecided reports the first unresolved critical pair (it is a value, not
// an error).
std::variant<RewriteSystem, Undecided> complete_presentation(const PresCat& p, int bound,
                                                             size_t max_equations = 4000000);

inline constexpr int kDefaultBound = 12;

// A presented category materialized as a finite category: arrows are the
// normal forms, composition is normal-form concatenation.
struct Materialization {
  Cat cat;
  RewriteSystem rs;
  std::vector<int> vertex_obj;         // vertex -> object (identity reindex)
  std::vector<Path> arrow_form;        // arrow -> its normal form
  int arrow_of_path(const Path& p) const;

  std::map<std::vector<int>, int> form_index;  // keyed by (src, edges...) flattened
};

std::variant<Materialization, Undecided> materialize(const PresCat& p, int bound = kDefaultBound);

// Canonical presentation of a finite category: edges are the non-identity
// arrows, relations the composition table.
struct Presented {
  PresCat pres;
  std::vector<Path> arrow_path;  // per arrow of the source category
};
Presented present_category(const Cat& a);

// Quotients: the recorded arrow_path is the quotient map on generators.
Presented quotient(const Cat& a, const std::vector<std::pair<int, int>>& arrow_pairs);
PresCat quotient(const PresCat& p, const std::vector<std::pair<Path, Path>>& pairs);

// Localizations: fresh formal inverses for the listed arrows/edges.
struct Localized {
  PresCat pres;
  std::vector<Path> arrow_path;        // original arrows as paths
  std::map<int, int> inverse_edge;     // original arrow/edge -> inverse edge
};
Localized localize(const Cat& a, const std::vector<int>& arrows);
Localized localize(const PresCat& p, const std::vector<int>& edges);

// Coequalizer of a family of parallel functor pairs in Cat, presented over
// the glued object classes.
struct CatCoequalizer {
  PresCat pres;
  Cat base;                       // the common codomain of the glued pairs
  std::vector<int> obj_class;     // base object -> vertex
  std::vector<Path> arrow_path;   // base arrow -> path in pres
};
CatCoequalizer coequalize_functors(const Cat& b,
                                   const std::vector<std::pair<Functor, Functor>>& pairs);

}  // namespace catcolim

#endif  // CATCOLIM_PRESENT_HPP_
