#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "braces/catalog.hpp"
#include "braces/classify.hpp"
#include "braces/extension.hpp"
#include "braces/io.hpp"
#include "braces/selftest.hpp"
#include "braces/ybe.hpp"

namespace py = pybind11;
using namespace braces;

namespace {

py::object report_to_py(const VerifyReport& r) {
  if (r.ok()) return py::none();
  py::dict d;
  d["axiom"] = r.violation->axiom;
  d["witness"] = r.violation->witness;
  return std::move(d);
}

std::vector<std::vector<int>> table_rows(const Brace& B) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(B.order()));
  for (int a = 0; a < B.order(); ++a)
    for (int b = 0; b < B.order(); ++b) rows[static_cast<std::size_t>(a)].push_back(B.mul(a, b));
  return rows;
}

std::vector<int> flatten(const AbelianGroup& A, const std::vector<std::vector<int>>& rows) {
  std::vector<int> flat;
  if (static_cast<int>(rows.size()) != A.order()) throw BraceError("table must have one row per element");
  for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
  return flat;
}

py::dict entry_to_py(const CatalogEntry& e) {
  py::dict d;
  d["id"] = e.id;
  d["p"] = e.p;
  d["moduli"] = e.moduli;
  d["shape"] = e.additive().shape_name();
  d["socle_order"] = e.socle_order;
  d["family"] = e.family;
  py::dict params;
  for (const auto& [k, v] : e.params) params[py::str(k)] = v;
  d["params"] = params;
  d["mult_group"] = e.claimed_mult_group.to_string();
  d["printed_mult_group"] = e.printed_mult_group.to_string();
  d["quotient_type"] = e.quotient_type;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Left braces of order p, p^2, p^3";

  py::register_exception<BraceError>(m, "BraceError", PyExc_ValueError);
  py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
  py::register_exception<CatalogError>(m, "CatalogError", PyExc_KeyError);
  py::register_exception<DocumentError>(m, "DocumentError", PyExc_ValueError);
  py::register_exception<EnumerationError>(m, "EnumerationError", PyExc_RuntimeError);

  py::class_<AbelianGroup>(m, "AbelianGroup")
      .def(py::init<int, std::vector<std::int64_t>>(), py::arg("p"), py::arg("moduli"))
      .def_static("parse", &AbelianGroup::parse, py::arg("p"), py::arg("shape"))
      .def_property_readonly("p", &AbelianGroup::p)
      .def_property_readonly("moduli", &AbelianGroup::moduli)
      .def_property_readonly("order", &AbelianGroup::order)
      .def_property_readonly("shape", &AbelianGroup::shape_name)
      .def("coords", &AbelianGroup::coords)
      .def("index", &AbelianGroup::index)
      .def("add", &AbelianGroup::add)
      .def("automorphism_count", [](const AbelianGroup& A) { return automorphism_count(A); })
      .def("__eq__", &AbelianGroup::operator==)
      .def("__repr__", [](const AbelianGroup& A) { return "AbelianGroup(" + A.shape_name() + ")"; });

  py::class_<Brace>(m, "Brace")
      .def(py::init([](const AbelianGroup& A, const std::vector<std::vector<int>>& rows, const std::string& name) {
             return Brace(A, flatten(A, rows), name);
           }),
           py::arg("additive"), py::arg("table"), py::arg("name") = "")
      .def_static("trivial", &Brace::trivial)
      .def_property_readonly("additive", &Brace::additive)
      .def_property_readonly("order", &Brace::order)
      .def_property_readonly("name", &Brace::name)
      .def_property_readonly("table", &table_rows)
      .def("mul", &Brace::mul)
      .def("inv", &Brace::inv)
      .def("lam", &Brace::lambda, "lambda_a as an index permutation")
      .def("power", [](const Brace& B, int x, std::uint64_t n) { return power_index(B, x, n); })
      .def("socle", [](const Brace& B) { return socle(B).elements; })
      .def("socle_order", [](const Brace& B) { return socle(B).order; })
      .def("mult_group", [](const Brace& B) { return mult_group_name(B).to_string(); })
      .def("quotient_by_socle", &quotient_by_socle)
      .def("right_brace_violation", &right_brace_violation)
      .def("__eq__", &Brace::operator==)
      .def("__repr__", [](const Brace& B) {
        return "Brace(" + B.additive().shape_name() + (B.name().empty() ? "" : ", " + B.name()) + ")";
      });

  m.def("verify_brace",
        [](const AbelianGroup& A, const std::vector<std::vector<int>>& rows) { return report_to_py(verify_brace(A, flatten(A, rows))); },
        py::arg("additive"), py::arg("table"), "None if the table is a left brace, else {'axiom', 'witness'}");

  m.def("epsilon", &epsilon);
  m.def("catalog", [](int p, bool small) {
    py::list out;
    if (small)
      for (const auto& e : small_catalog_entries(p)) out.append(entry_to_py(e));
    for (const auto& e : catalog_entries(p)) out.append(entry_to_py(e));
    return out;
  }, py::arg("p"), py::arg("small") = false);
  m.def("entry", [](const std::string& id) {
    const CatalogEntry e = find_entry(id);
    Brace B = build_entry(e);
    B.set_name(e.id);
    return B;
  }, py::arg("id"));
  m.def("entry_info", [](const std::string& id) { return entry_to_py(find_entry(id)); }, py::arg("id"));

  m.def("are_isomorphic", [](const Brace& a, const Brace& b) -> py::object {
    const auto w = are_isomorphic(a, b);
    if (!w) return py::none();
    return py::cast(w->perm);
  }, "None, or an isomorphism as an index permutation");
  m.def("classify_catalog", [](int p) { return classify_catalog(p).classes; }, py::arg("p"));
  m.def("enumerate_braces", [](const AbelianGroup& A, bool up_to_iso, bool trivial_socle, std::uint64_t max_nodes,
                               const std::string& checkpoint, int jobs) {
    EnumerateOptions o;
    o.up_to_iso = up_to_iso;
    o.trivial_socle_only = trivial_socle;
    o.max_nodes = max_nodes;
    o.checkpoint_path = checkpoint;
    o.jobs = jobs;
    EnumerationResult r;
    {
      py::gil_scoped_release release;
      r = enumerate_braces(A, o);
    }
    py::dict d;
    d["complete"] = r.status == EnumStatus::Complete;
    d["braces"] = r.braces;
    d["solutions"] = r.solutions;
    d["nodes"] = r.nodes;
    return d;
  }, py::arg("additive"), py::arg("up_to_iso") = true, py::arg("trivial_socle") = false, py::arg("max_nodes") = 0,
     py::arg("checkpoint") = "", py::arg("jobs") = 1);

  m.def("extension_from_brace_rebuild", [](const Brace& G) {
    const ExtensionData d = extension_from_brace(G);
    return build_extension(d);
  }, "rebuilds G from (G/Soc, lambda, natural map)");

  m.def("ybe_solution", [](const Brace& B) { return solution_quadruples(solution_from_brace(B)); },
        "(a, b, s1, s2) quadruples of the associated solution");
  m.def("verify_yang_baxter", [](int n, const std::vector<std::pair<int, int>>& table) {
    return report_to_py(verify_yang_baxter(SolutionMap(n, table)));
  }, py::arg("n"), py::arg("table"));

  m.def("to_json", [](const Brace& B) {
    return serialize_document(document_from_brace(B, B.name().empty() ? std::nullopt : std::optional(B.name())));
  });
  m.def("from_json", [](const std::string& text, bool strict) {
    const LoadResult r = load_document(parse_document(text), strict);
    if (!r.report.ok()) throw BraceError(r.report.violation->to_string());
    return *r.brace;
  }, py::arg("text"), py::arg("strict") = true);

  m.def("selftest", [](std::vector<int> primes, bool deep, std::vector<int> only) {
    SelftestOptions o;
    o.primes = std::move(primes);
    o.deep = deep;
    o.only = std::move(only);
    std::vector<CriterionResult> res;
    {
      py::gil_scoped_release release;
      res = run_selftest(o);
    }
    py::list out;
    for (const auto& r : res) out.append(py::make_tuple(r.id, r.pass, r.detail));
    return out;
  }, py::arg("primes") = std::vector<int>{2, 3, 5}, py::arg("deep") = false, py::arg("only") = std::vector<int>{});
}
