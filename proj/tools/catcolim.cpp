// Command line front end: parse the text format, dispatch computations and
// emit reports, certificates and DOT graphs.
//
// Exit status: 0 success/verified, 1 counterexample/refuted, 2 undecided,
// 3 input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "catcolim/textio.hpp"

using namespace catcolim;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitInput = 3;

int default_bound() {
  if (const char* env = std::getenv("CATCOLIM_BOUND")) {
    int b = std::atoi(env);
    if (b > 0) return b;
  }
  return kDefaultBound;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Output {
  bool machine = false;
  void line(const std::string& report, const std::string& machine_line) {
    std::cout << (machine ? machine_line : report) << "\n";
  }
};

WeightP need_weight(const Document& doc, const std::string& name) {
  const WeightP* w = doc.weight(name);
  if (!w) throw invalid_input("unknown weight '" + name + "'");
  return *w;
}

std::string cat_summary(const Cat& c) {
  return std::to_string(c->object_count()) + " objects, " + std::to_string(c->arrow_count()) +
         " arrows";
}

int run_check(const std::string& file, const std::vector<std::string>& names,
              const std::string& dot_name, Output& out) {
  Document doc = parse_document(slurp(file));
  if (!dot_name.empty()) {
    const Cat* c = doc.category(dot_name);
    if (!c) throw invalid_input("--dot names an unknown category");
    std::cout << dot_of_category(*c);
    return kExitOk;
  }
  size_t total = doc.categories.size() + doc.presentations.size() + doc.indexes.size() +
                 doc.weights.size() + doc.transforms.size() + doc.pseudos.size() +
                 doc.modifications.size() + doc.simplicials.size() + doc.trees.size();
  for (const auto& name : names) {
    bool found = doc.category(name) || doc.index(name) || doc.weight(name) ||
                 doc.transform(name) || doc.pseudo(name) || doc.modification(name) ||
                 doc.simplicial(name) || doc.tree(name);
    for (const auto& [n, p] : doc.presentations) found = found || n == name;
    if (!found) throw invalid_input("name '" + name + "' is not declared");
  }
  out.line("ok: " + std::to_string(total) + " declarations validated",
           "check status=ok declarations=" + std::to_string(total));
  return kExitOk;
}

int colimit_report(const ColimWeight& built, Output& out, const std::string& kind) {
  if (built.materialized()) {
    std::string sizes;
    for (const auto& c : built.mat->w->at) {
      if (!sizes.empty()) sizes += " ";
      sizes += std::to_string(c->object_count()) + "/" + std::to_string(c->arrow_count());
    }
    out.line(kind + ": materialized, pointwise sizes (objects/arrows): " + sizes,
             "colimit kind=" + kind + " status=ok sizes=" + sizes);
    return kExitOk;
  }
  out.line(kind + ": undecided at bound " + std::to_string(built.undecided->bound) + ": " +
               built.undecided->detail,
           "colimit kind=" + kind + " status=undecided bound=" +
               std::to_string(built.undecided->bound));
  return kExitUndecided;
}

int run_colimit(const std::string& kind, const std::string& file,
                const std::vector<std::string>& args, int bound, Output& out) {
  Document doc = parse_document(slurp(file));
  auto need_mod = [&](const std::string& name) -> Modification {
    const Modification* m = doc.modification(name);
    if (!m) throw invalid_input("unknown modification '" + name + "'");
    return *m;
  };
  auto need_trans = [&](const std::string& name) -> TwoNat {
    const TwoNat* t = doc.transform(name);
    if (!t) throw invalid_input("unknown transform '" + name + "'");
    return *t;
  };
  if (kind == "weighted") {
    if (args.size() != 2) throw invalid_input("colimit weighted needs <weight> <diagram>");
    ColimResult c = weighted_colimit(need_weight(doc, args[0]), need_weight(doc, args[1]), bound);
    if (c.mat) {
      out.line("weighted colimit: " + cat_summary(c.cat),
               "colimit kind=weighted status=ok objects=" + std::to_string(c.cat->object_count()) +
                   " arrows=" + std::to_string(c.cat->arrow_count()));
      return kExitOk;
    }
    out.line("weighted colimit: undecided: " + c.undecided->detail,
             "colimit kind=weighted status=undecided");
    return kExitUndecided;
  }
  if (kind == "coproduct" || kind == "filtered") {
    std::vector<WeightP> fam;
    for (const auto& a : args) fam.push_back(need_weight(doc, a));
    if (fam.empty()) throw invalid_input("colimit " + kind + " needs at least one weight name");
    const Index& idx = fam[0]->index;
    if (kind == "coproduct") {
      CoproductResult c = coproduct_weights(fam, idx);
      std::string sizes;
      for (const auto& cc : c.w->at)
        sizes += (sizes.empty() ? "" : " ") + std::to_string(cc->object_count());
      out.line("coproduct: pointwise object counts " + sizes,
               "colimit kind=coproduct status=ok sizes=" + sizes);
      return kExitOk;
    }
    FilteredCoproductResult r = coproduct_as_filtered(fam, idx, bound);
    out.line("filtered refinement over " + std::to_string(r.subset_poset->object_count()) +
                 " subsets; comparison is " + (r.comparison_is_iso ? "an isomorphism" : "NOT an isomorphism"),
             "colimit kind=filtered status=" + std::string(r.comparison_is_iso ? "ok" : "refuted") +
                 " subsets=" + std::to_string(r.subset_poset->object_count()));
    return r.comparison_is_iso ? kExitOk : kExitRefuted;
  }
  if (kind == "coinserter") {
    if (args.size() != 2) throw invalid_input("colimit coinserter needs <transform> <transform>");
    CoinserterResult r = coinserter(need_trans(args[0]), need_trans(args[1]), bound);
    return colimit_report(r.built, out, "coinserter");
  }
  if (kind == "coequifier") {
    if (args.size() != 2) throw invalid_input("colimit coequifier needs two modifications");
    CoequifierResult r = coequifier(need_mod(args[0]), need_mod(args[1]), bound);
    return colimit_report(r.built, out, "coequifier");
  }
  if (kind == "coinverter") {
    if (args.size() != 1) throw invalid_input("colimit coinverter needs one modification");
    CoinverterResult r = coinverter(need_mod(args[0]), bound);
    return colimit_report(r.built, out, "coinverter");
  }
  if (kind == "lax-codescent" || kind == "codescent") {
    if (args.size() != 1) throw invalid_input("colimit " + kind + " needs a simplicial name");
    const Delta2Weight* x = doc.simplicial(args[0]);
    if (!x) throw invalid_input("unknown simplicial '" + args[0] + "'");
    CodescentResult r = kind == "codescent" ? reflexive_codescent(*x, bound)
                                            : reflexive_lax_codescent(*x, bound);
    return colimit_report(r.built, out, kind);
  }
  if (kind == "split") {
    if (args.size() != 1) throw invalid_input("colimit split needs an idempotent transform");
    WeightSplitResult r = split_idempotent_weight(need_trans(args[0]));
    std::string sizes;
    for (const auto& c : r.image->at)
      sizes += (sizes.empty() ? "" : " ") + std::to_string(c->object_count());
    out.line("splitting: image pointwise object counts " + sizes,
             "colimit kind=split status=ok sizes=" + sizes);
    return kExitOk;
  }
  throw invalid_input("unknown colimit kind '" + kind + "'");
}

int run_q(const std::string& file, const std::string& wname, int bound, Output& out) {
  Document doc = parse_document(slurp(file));
  auto q = q_construction(need_weight(doc, wname), bound);
  if (std::holds_alternative<Undecided>(q)) {
    out.line("classifier: undecided: " + std::get<Undecided>(q).detail,
             "q status=undecided");
    return kExitUndecided;
  }
  const QResult& qr = std::get<QResult>(q);
  std::string sizes;
  for (const auto& c : qr.qw->at)
    sizes += (sizes.empty() ? "" : " ") +
             (std::to_string(c->object_count()) + "/" + std::to_string(c->arrow_count()));
  std::string cross = qr.cross_check.checked
                          ? (qr.cross_check.pointwise_iso ? "agrees" : "DISAGREES")
                          : "skipped";
  out.line("classifier computed; pointwise sizes " + sizes + "; explicit candidate " + cross,
           "q status=ok sizes=" + sizes + " crosscheck=" + cross);
  return qr.cross_check.checked && !qr.cross_check.pointwise_iso ? kExitRefuted : kExitOk;
}

int run_flexible(const std::string& file, const std::string& wname, int bound, Output& out) {
  Document doc = parse_document(slurp(file));
  auto v = is_flexible(need_weight(doc, wname), bound);
  if (std::holds_alternative<Undecided>(v)) {
    out.line("flexible: undecided: " + std::get<Undecided>(v).detail, "flexible status=undecided");
    return kExitUndecided;
  }
  const FlexibilityVerdict& fv = std::get<FlexibilityVerdict>(v);
  if (fv.flexible) {
    std::string witness;
    const TwoNat& s = *fv.section;
    for (size_t j = 0; j < s.comp.size(); ++j) {
      witness += " at " + s.dom->index->objects[j] + ":";
      for (int o = 0; o < s.dom->at[j]->object_count(); ++o)
        witness += " " + s.dom->at[j]->object(o) + "->" +
                   s.cod->at[j]->object(s.comp[j].obj_map[o]);
    }
    out.line("flexible: yes; section" + witness,
             "flexible status=yes search_space=" + std::to_string(fv.search_space_size));
    return kExitOk;
  }
  out.line("flexible: no; section search exhausted (space " +
               std::to_string(fv.search_space_size) + ")",
           "flexible status=no search_space=" + std::to_string(fv.search_space_size));
  return kExitRefuted;
}

int run_sifted(const std::string& file, const std::string& wname, int bound, Output& out) {
  Document doc = parse_document(slurp(file));
  SiftedCertificate cert = sifted_certify(need_weight(doc, wname), bound);
  if (cert.ok) {
    out.line("sifted: certificate over " + std::to_string(cert.battery.size()) +
                 " representable pairs" +
                 (cert.has_preserved_terminal ? " (terminal object preserved)" : ""),
             "sifted status=yes battery=" + std::to_string(cert.battery.size()));
    return kExitOk;
  }
  std::string where = cert.counterexample
                          ? (cert.counterexample->first < 0
                                 ? std::string("the empty product")
                                 : "pair (" + std::to_string(cert.counterexample->first) + "," +
                                       std::to_string(cert.counterexample->second) + ")")
                          : "unknown";
  out.line("sifted: counterexample at " + where, "sifted status=no counterexample=" + where);
  return kExitRefuted;
}

int run_decompose(const std::string& file, const std::string& wname, int bound, int arity_bound,
                  unsigned seed, bool refine, bool dot, const std::string& out_path, Output& out) {
  Document doc = parse_document(slurp(file));
  WeightP w = need_weight(doc, wname);
  auto v = is_flexible(w, bound);
  if (std::holds_alternative<Undecided>(v)) {
    out.line("decompose: undecided: " + std::get<Undecided>(v).detail,
             "decompose status=undecided");
    return kExitUndecided;
  }
  FlexibilityVerdict fv = std::get<FlexibilityVerdict>(v);
  if (!fv.flexible) {
    out.line("decompose: the weight is not flexible; no decomposition exists",
             "decompose status=refuted");
    return kExitRefuted;
  }
  DecompTree tree = decompose_flexible(w, fv, bound);
  tree.seed = seed;
  if (refine) tree = refine_to_finite_coproducts(tree, arity_bound);
  if (dot) {
    std::cout << dot_of_tree(tree);
    return kExitOk;
  }
  Document cert;
  const std::string idx_name = doc.weight_index_name.count(wname)
                                   ? doc.weight_index_name.at(wname)
                                   : std::string("J");
  cert.indexes.emplace_back(idx_name, w->index);
  cert.weights.emplace_back(wname, w);
  cert.weight_index_name[wname] = idx_name;
  add_tree(cert, wname + "_decomposition", tree, wname, idx_name);
  std::string text = emit_document(cert);
  if (!out_path.empty()) {
    std::ofstream o(out_path);
    o << text;
    out.line("certificate written to " + out_path, "decompose status=ok out=" + out_path);
  } else {
    std::cout << text;
  }
  return kExitOk;
}

int run_verify(const std::string& file, const std::string& wname, const std::string& cert_path,
               bool spot_checks, bool flexibility, unsigned seed, int bound, Output& out) {
  Document doc = parse_document(slurp(file));
  WeightP w = need_weight(doc, wname);
  Document cert = parse_document(slurp(cert_path));
  if (cert.trees.empty()) throw invalid_input("certificate contains no tree");
  const DecompTree& tree = cert.trees.front().second;
  VerifyOptions opt;
  opt.spot_checks = spot_checks;
  opt.check_flexibility = flexibility;
  opt.seed = seed;
  opt.bound = bound;
  VerifyReport rep = verify_certificate(tree, w, opt);
  for (const auto& c : rep.clauses)
    out.line(c, "verify clause=\"" + c + "\"");
  out.line(rep.ok ? "verified" : "REFUTED",
           std::string("verify status=") + (rep.ok ? "ok" : "refuted") +
               " depth=" + std::to_string(rep.depth));
  return rep.ok ? kExitOk : kExitRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-categorical colimits over finite data: colimits, classifiers, "
               "flexibility, siftedness and decomposition certificates"};
  app.require_subcommand(1);
  int bound = default_bound();
  std::string format = "report";
  app.add_option("--bound", bound, "word-problem bound");
  app.add_option("--format", format, "report|machine")->check(CLI::IsMember({"report", "machine"}));

  std::string file, name, dot_name, cert_path, out_path, kind;
  std::vector<std::string> names;
  int arity_bound = 2;
  unsigned seed = 1;
  bool refine = false, dot = false, no_spot = false, no_flex = false;

  auto* check = app.add_subcommand("check", "validate the declarations of a file");
  check->add_option("file", file)->required();
  check->add_option("names", names);
  check->add_option("--dot", dot_name, "emit DOT for a category");

  auto* colimit = app.add_subcommand("colimit", "compute a colimit");
  colimit->add_option("kind", kind)->required();
  colimit->add_option("file", file)->required();
  colimit->add_option("args", names);

  auto* q = app.add_subcommand("q", "compute the pseudomorphism classifier");
  q->add_option("file", file)->required();
  q->add_option("weight", name)->required();

  auto* flex = app.add_subcommand("flexible", "decide flexibility of a weight");
  flex->add_option("file", file)->required();
  flex->add_option("weight", name)->required();

  auto* sifted = app.add_subcommand("sifted", "certify siftedness on the representable battery");
  sifted->add_option("file", file)->required();
  sifted->add_option("weight", name)->required();

  auto* decomp = app.add_subcommand("decompose", "decompose a flexible weight");
  decomp->add_option("file", file)->required();
  decomp->add_option("weight", name)->required();
  decomp->add_option("--arity-bound", arity_bound, "coproduct arity triggering refinement");
  decomp->add_option("--seed", seed, "spot-check seed recorded in the certificate");
  decomp->add_flag("--refine", refine, "refine large coproducts through filtered colimits");
  decomp->add_flag("--dot", dot, "emit the tree as DOT instead of a certificate");
  decomp->add_option("--out", out_path, "write the certificate to a file");

  auto* verify = app.add_subcommand("verify", "verify a decomposition certificate");
  verify->add_option("file", file)->required();
  verify->add_option("weight", name)->required();
  verify->add_option("--cert", cert_path)->required();
  verify->add_flag("--no-spot-checks", no_spot);
  verify->add_flag("--no-flexibility", no_flex);
  verify->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);

  Output out;
  out.machine = format == "machine";
  try {
    if (check->parsed()) return run_check(file, names, dot_name, out);
    if (colimit->parsed()) return run_colimit(kind, file, names, bound, out);
    if (q->parsed()) return run_q(file, name, bound, out);
    if (flex->parsed()) return run_flexible(file, name, bound, out);
    if (sifted->parsed()) return run_sifted(file, name, bound, out);
    if (decomp->parsed())
      return run_decompose(file, name, bound, arity_bound, seed, refine, dot, out_path, out);
    if (verify->parsed())
      return run_verify(file, name, cert_path, !no_spot, !no_flex, seed, bound, out);
  } catch (const parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const invalid_input& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
