#include "doctest.h"

#include <fstream>
#include <sstream>

#include "catcolim/textio.hpp"

using namespace catcolim;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fixture(const std::string& name) {
  return std::string(CATCOLIM_FIXTURES_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("empty document") {
  Document doc = parse_document("");
  CHECK(doc.categories.empty());
  CHECK(emit_document(doc).empty());
}

TEST_CASE("fixture files parse and validate") {
  for (const char* f : {"delta2.cat", "parpair.cat", "twoarrow.cat", "nerve.cat"}) {
    Document doc = parse_document(slurp(fixture(f)));
    CHECK((doc.indexes.size() + doc.categories.size()) > 0);
  }
}

TEST_CASE("the simplex fixture matches the enumeration of monotone maps") {
  Document doc = parse_document(slurp(fixture("delta2.cat")));
  const Index* d2 = doc.index("Delta2");
  REQUIRE(d2 != nullptr);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      CHECK((*d2)->hom(a, b)->object_count() ==
            static_cast<int>(shapes::monotone_maps(a, b).size()));
}

TEST_CASE("round trip: emit after parse is stable") {
  for (const char* f : {"delta2.cat", "parpair.cat", "twoarrow.cat", "nerve.cat"}) {
    std::string once = emit_document(parse_document(slurp(fixture(f))));
    std::string twice = emit_document(parse_document(once));
    CHECK(once == twice);
  }
}

TEST_CASE("duplicate names are reported with both sites") {
  std::string text = "category A\n  objects x\nend\ncategory A\n  objects y\nend\n";
  CHECK_THROWS_WITH_AS(parse_document(text), doctest::Contains("duplicate name"), parse_error);
  CHECK_THROWS_WITH_AS(parse_document(text), doctest::Contains("first declared at line"),
                       parse_error);
}

TEST_CASE("errors carry line positions") {
  std::string text = "category A\n  objects x\n  arrow f : x -> z\nend\n";
  CHECK_THROWS_AS(parse_document(text), invalid_input);
  std::string unresolved = "weight W over J = rep x\n";
  CHECK_THROWS_WITH_AS(parse_document(unresolved), doctest::Contains("line 1"), parse_error);
}

TEST_CASE("presentations round trip through the word problem") {
  std::string text =
      "presentation IDEM\n"
      "  vertices z\n"
      "  edge e : z -> z\n"
      "  relation e e = e\n"
      "end\n";
  Document doc = parse_document(text);
  REQUIRE(doc.presentations.size() == 1);
  auto m = materialize(doc.presentations[0].second, 6);
  REQUIRE(std::holds_alternative<Materialization>(m));
  CHECK(std::get<Materialization>(m).cat->arrow_count() == 2);
  std::string out = emit_document(doc);
  CHECK(out.find("relation e e = e") != std::string::npos);
}

TEST_CASE("certificates round trip through text") {
  Document doc = parse_document(slurp(fixture("twoarrow.cat")));
  WeightP w = *doc.weight("repx");
  auto v = is_flexible(w);
  REQUIRE(std::holds_alternative<FlexibilityVerdict>(v));
  DecompTree tree = decompose_flexible(w, std::get<FlexibilityVerdict>(v));
  Document cert;
  cert.indexes.emplace_back("I", w->index);
  cert.weights.emplace_back("repx", w);
  cert.weight_index_name["repx"] = "I";
  add_tree(cert, "repx_decomposition", tree, "repx", "I");
  std::string text = emit_document(cert);
  Document back = parse_document(text);
  REQUIRE(back.trees.size() == 1);
  VerifyOptions opt;
  opt.spot_checks = false;
  opt.check_flexibility = false;
  VerifyReport rep = verify_certificate(back.trees[0].second, w, opt);
  CHECK(rep.ok);
  // and the re-emission is stable
  CHECK(emit_document(back) == text);
}

TEST_CASE("dot output") {
  Document doc = parse_document(slurp(fixture("twoarrow.cat")));
  std::string dot = dot_of_category(*doc.category("Two"));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("\"x\" -> \"y\"") != std::string::npos);
}
