#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "catcolim/textio.hpp"

namespace py = pybind11;
using namespace catcolim;

namespace {

WeightP find_weight(const Document& doc, const std::string& name) {
  const WeightP* w = doc.weight(name);
  if (!w) throw invalid_input("unknown weight '" + name + "'");
  return *w;
}

py::list pointwise_sizes(const WeightP& w) {
  py::list out;
  for (const auto& c : w->at) out.append(py::make_tuple(c->object_count(), c->arrow_count()));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "2-categorical colimits over finite data: weighted colimits, "
            "pseudomorphism classifiers, flexibility and decomposition certificates";

  py::register_exception<invalid_input>(m, "InvalidInput");
  py::register_exception<parse_error>(m, "ParseError");

  py::class_<Document>(m, "Document")
      .def(py::init([](const std::string& text) { return parse_document(text); }),
           py::arg("text"))
      .def("emit", [](const Document& d) { return emit_document(d); })
      .def("names", [](const Document& d) {
        py::list out;
        for (const auto& [n, v] : d.categories) out.append(py::make_tuple(n, "category"));
        for (const auto& [n, v] : d.presentations) out.append(py::make_tuple(n, "presentation"));
        for (const auto& [n, v] : d.indexes) out.append(py::make_tuple(n, "index2"));
        for (const auto& [n, v] : d.weights)
          out.append(py::make_tuple(n, d.diagram_names.count(n) ? "diagram" : "weight"));
        for (const auto& [n, v] : d.transforms) out.append(py::make_tuple(n, "transform"));
        for (const auto& [n, v] : d.simplicials) out.append(py::make_tuple(n, "simplicial"));
        for (const auto& [n, v] : d.trees) out.append(py::make_tuple(n, "tree"));
        return out;
      })
      .def("category_size", [](const Document& d, const std::string& name) {
        const Cat* c = d.category(name);
        if (!c) throw invalid_input("unknown category '" + name + "'");
        return py::make_tuple((*c)->object_count(), (*c)->arrow_count());
      })
      .def("weight_sizes", [](const Document& d, const std::string& name) {
        return pointwise_sizes(find_weight(d, name));
      });

  m.def("parse", &parse_document, py::arg("text"));

  m.def(
      "weighted_colimit_sizes",
      [](const Document& doc, const std::string& w, const std::string& d, int bound) {
        ColimResult c = weighted_colimit(find_weight(doc, w), find_weight(doc, d), bound);
        py::dict out;
        out["materialized"] = c.mat.has_value();
        if (c.mat) {
          out["objects"] = c.cat->object_count();
          out["arrows"] = c.cat->arrow_count();
        } else {
          out["detail"] = c.undecided->detail;
        }
        return out;
      },
      py::arg("doc"), py::arg("weight"), py::arg("diagram"), py::arg("bound") = kDefaultBound);

  m.def(
      "classifier",
      [](const Document& doc, const std::string& w, int bound) {
        auto q = q_construction(find_weight(doc, w), bound);
        py::dict out;
        if (std::holds_alternative<Undecided>(q)) {
          out["status"] = "undecided";
          out["detail"] = std::get<Undecided>(q).detail;
          return out;
        }
        const QResult& qr = std::get<QResult>(q);
        out["status"] = "ok";
        out["sizes"] = pointwise_sizes(qr.qw);
        out["counit_pointwise_surjective_equivalence"] = true;
        out["cross_check"] =
            qr.cross_check.checked ? (qr.cross_check.pointwise_iso ? "agrees" : "disagrees")
                                   : "skipped";
        return out;
      },
      py::arg("doc"), py::arg("weight"), py::arg("bound") = kDefaultBound);

  m.def(
      "flexible",
      [](const Document& doc, const std::string& w, int bound) {
        auto v = is_flexible(find_weight(doc, w), bound);
        py::dict out;
        if (std::holds_alternative<Undecided>(v)) {
          out["status"] = "undecided";
          out["detail"] = std::get<Undecided>(v).detail;
          return out;
        }
        const FlexibilityVerdict& fv = std::get<FlexibilityVerdict>(v);
        out["status"] = fv.flexible ? "flexible" : "not-flexible";
        out["search_space"] = fv.search_space_size;
        return out;
      },
      py::arg("doc"), py::arg("weight"), py::arg("bound") = kDefaultBound);

  m.def(
      "sifted",
      [](const Document& doc, const std::string& w, int bound) {
        SiftedCertificate cert = sifted_certify(find_weight(doc, w), bound);
        py::dict out;
        out["status"] = cert.ok ? "certified" : "counterexample";
        out["battery"] = static_cast<int>(cert.battery.size());
        out["terminal_preserved"] = cert.has_preserved_terminal;
        if (cert.counterexample)
          out["counterexample"] = py::make_tuple(cert.counterexample->first,
                                                 cert.counterexample->second);
        return out;
      },
      py::arg("doc"), py::arg("weight"), py::arg("bound") = kDefaultBound);

  m.def(
      "decompose",
      [](const Document& doc, const std::string& wname, bool refine, int arity_bound,
         unsigned seed, int bound) {
        WeightP w = find_weight(doc, wname);
        auto v = is_flexible(w, bound);
        if (std::holds_alternative<Undecided>(v))
          throw invalid_input("flexibility undecided: " + std::get<Undecided>(v).detail);
        FlexibilityVerdict fv = std::get<FlexibilityVerdict>(v);
        if (!fv.flexible) throw invalid_input("the weight is not flexible");
        DecompTree tree = decompose_flexible(w, fv, bound);
        tree.seed = seed;
        if (refine) tree = refine_to_finite_coproducts(tree, arity_bound);
        Document cert;
        std::string idx_name = doc.weight_index_name.count(wname)
                                   ? doc.weight_index_name.at(wname)
                                   : std::string("J");
        cert.indexes.emplace_back(idx_name, w->index);
        cert.weights.emplace_back(wname, w);
        cert.weight_index_name[wname] = idx_name;
        add_tree(cert, wname + "_decomposition", tree, wname, idx_name);
        return emit_document(cert);
      },
      py::arg("doc"), py::arg("weight"), py::arg("refine") = false, py::arg("arity_bound") = 2,
      py::arg("seed") = 1, py::arg("bound") = kDefaultBound);

  m.def(
      "verify",
      [](const Document& doc, const std::string& wname, const std::string& cert_text,
         bool spot_checks, bool check_flexibility, unsigned seed, int bound) {
        Document cert = parse_document(cert_text);
        if (cert.trees.empty()) throw invalid_input("certificate contains no tree");
        VerifyOptions opt;
        opt.spot_checks = spot_checks;
        opt.check_flexibility = check_flexibility;
        opt.seed = seed;
        opt.bound = bound;
        VerifyReport rep = verify_certificate(cert.trees.front().second,
                                              find_weight(doc, wname), opt);
        py::dict out;
        out["ok"] = rep.ok;
        out["depth"] = rep.depth;
        out["clauses"] = rep.clauses;
        return out;
      },
      py::arg("doc"), py::arg("weight"), py::arg("certificate"), py::arg("spot_checks") = false,
      py::arg("check_flexibility") = true, py::arg("seed") = 1, py::arg("bound") = kDefaultBound);

  m.def(
      "nerve_reconstruction_holds",
      [](const Document& doc, const std::string& cname) {
        const Cat* c = doc.category(cname);
        if (!c) throw invalid_input("unknown category '" + cname + "'");
        Index one = terminal_index();
        auto lifted = shapes::lift_delta2(one, truncated_nerve(*c));
        CodescentResult r = reflexive_lax_codescent(lifted);
        if (!r.built.materialized()) return false;
        const auto& mat = r.built.mat->mats[0];
        std::vector<int> vimg(mat.cat->object_count());
        for (int v = 0; v < mat.cat->object_count(); ++v) vimg[v] = v;
        std::vector<int> eimg(r.built.pres.at[0].quiver.edges.size(), -1);
        for (int x = 0; x < (*c)->arrow_count(); ++x) eimg[r.ins_edge[0][x]] = x;
        Functor cmp = functor_from_generators(mat, *c, vimg, eimg);
        return is_isomorphism(cmp).cls == FunctorClass::iso;
      },
      py::arg("doc"), py::arg("category"));

  m.attr("DEFAULT_BOUND") = kDefaultBound;
}
