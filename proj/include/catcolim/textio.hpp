#ifndef CATCOLIM_TEXTIO_HPP_
#define CATCOLIM_TEXTIO_HPP_

#include <set>

#include "catcolim/decomp.hpp"

namespace catcolim {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A parsed document: named declarations, validated through their home
// modules on construction.
struct Document {
  std::vector<std::pair<std::string, Cat>> categories;
  std::vector<std::pair<std::string, PresCat>> presentations;
  std::vector<std::pair<std::string, Index>> indexes;
  std::vector<std::pair<std::string, WeightP>> weights;
  std::vector<std::pair<std::string, TwoNat>> transforms;
  std::vector<std::pair<std::string, PseudoNat>> pseudos;
  std::vector<std::pair<std::string, Modification>> modifications;
  std::vector<std::pair<std::string, Delta2Weight>> simplicials;
  std::vector<std::pair<std::string, DecompTree>> trees;
  // weights declared with `diagram` live over the opposite of the named index
  std::set<std::string> diagram_names;
  // per weight name, the name of the index it was declared over
  std::map<std::string, std::string> weight_index_name;

  const Cat* category(const std::string& name) const;
  const Index* index(const std::string& name) const;
  const WeightP* weight(const std::string& name) const;
  const TwoNat* transform(const std::string& name) const;
  const PseudoNat* pseudo(const std::string& name) const;
  const Modification* modification(const std::string& name) const;
  const Delta2Weight* simplicial(const std::string& name) const;
  const DecompTree* tree(const std::string& name) const;

  // the cached opposite of a declared index
  Index opposite_of(const std::string& name) const;

 private:
  mutable std::map<std::string, Index> op_cache_;
};

Document parse_document(const std::string& text);
std::string emit_document(const Document& doc);

// append a decomposition certificate (tree, stored weights, faces and the
// target weight) to a document
void add_tree(Document& doc, const std::string& name, const DecompTree& tree,
              const std::string& target_name, const std::string& index_name);

std::string dot_of_category(const Cat& c);
std::string dot_of_tree(const DecompTree& tree);

}  // namespace catcolim

#endif  // CATCOLIM_TEXTIO_HPP_
