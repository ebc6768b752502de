#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "kradical/classifier.hpp"
#include "kradical/errors.hpp"
#include "kradical/families.hpp"
#include "kradical/parse.hpp"
#include "kradical/report.hpp"

namespace py = pybind11;

namespace {

using namespace kradical;

KCertificate run(const std::string& expr, long prec, unsigned seed) {
  return decide_k(parse_poly(expr, prec).poly, prec, seed);
}

mpq_class rational(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw DomainError("not a rational number: " + s);
  q.canonicalize();
  return q;
}

}  // namespace

PYBIND11_MODULE(_kradical, m) {
  m.doc() =
      "minimal k such that the inverse of a complex polynomial is "
      "representable in k-radicals";

  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<DomainError>(m, "DomainError");
  py::register_exception<PrecisionError>(m, "PrecisionError");
  py::register_exception<UnrecognizedGroupError>(m, "UnrecognizedGroupError");

  m.def(
      "analyze_json",
      [](const std::string& expr, int k, long precision, unsigned seed) {
        return report_json(expr, run(expr, precision, seed), k);
      },
      py::arg("expr"), py::arg("k") = 0,
      py::arg("precision") = kPrecisionDefault, py::arg("seed") = 0,
      "Full pipeline; returns the JSON report text.");

  m.def(
      "minimal_k",
      [](const std::string& expr, long precision) {
        return run(expr, precision, 0).overall_k;
      },
      py::arg("expr"), py::arg("precision") = kPrecisionDefault,
      "Smallest k such that the inverse is representable in k-radicals.");

  m.def(
      "factor_degrees",
      [](const std::string& expr, long precision) {
        std::vector<int> out;
        for (const FactorReport& fr : run(expr, precision, 0).factors)
          out.push_back(fr.degree);
        return out;
      },
      py::arg("expr"), py::arg("precision") = kPrecisionDefault,
      "Degrees of the indecomposable composition factors, outermost first.");

  m.def("fixture_ids", &fixture_ids, "Ids of the pinned fixtures.");

  m.def(
      "verify_fixture",
      [](const std::string& id, long precision) {
        VerifyResult r = verify_fixture(fixture(id), precision);
        return py::make_tuple(r.pass, r.divergent);
      },
      py::arg("id"), py::arg("precision") = kPrecisionDefault,
      "Run the pipeline on a pinned fixture; (pass, first divergent field).");

  m.def(
      "verify_deg15",
      [](int a_sign, const std::string& t, long precision) {
        VerifyResult r =
            verify_fixture(fixture_deg15(a_sign, rational(t)), precision);
        return py::make_tuple(r.pass, r.divergent);
      },
      py::arg("a_sign"), py::arg("t"),
      py::arg("precision") = kPrecisionDefault,
      "Verify the degree-15 family member for one root of a^2-a+4 at t.");

  m.def(
      "replay_elimination",
      [](const std::string& family) {
        EliminationReport rep = replay_elimination(family);
        return py::make_tuple(rep.ok, rep.lines);
      },
      py::arg("family"),
      "Replay the exact elimination identities; (ok, check lines).");

  m.def(
      "group_info",
      [](const std::string& name) -> py::object {
        std::optional<GroupInfo> gi = group_info(name);
        if (!gi) return py::none();
        py::dict d;
        d["name"] = gi->name;
        d["degree"] = gi->degree;
        d["order"] = gi->order.get_str();
        d["minimal_k"] = gi->minimal_k;
        d["note"] = gi->note;
        return d;
      },
      py::arg("name"),
      "Classification row for a recognized group name, or None.");
}
