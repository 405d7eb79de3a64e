#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ckq/report.hpp"

namespace py = pybind11;
using namespace ckq;

namespace {

std::string describe(const std::string& spec, const std::string& format) {
  auto g = spec_from_json(spec);
  return format == "text" ? describe_text(g) : describe_json(g);
}

std::string verify(const std::string& spec, std::uint64_t seed, int points) {
  auto g = spec_from_json(spec);
  VerifyOptions o;
  o.seed = seed;
  o.points = points;
  return verify_json(g, o, verify_spec(g, o));
}

std::string contract(const std::string& spec, std::uint64_t seed, int points, bool eliminate) {
  auto g = spec_from_json(spec);
  if (g.nilpotent() == 0) throw InvalidSpec("contract: the spec has no nilpotent parameter");
  ContractOptions o;
  o.seed = seed;
  o.points = points;
  o.eliminate = eliminate;
  return contract_json(contract_report(g, o));
}

std::string classify(int n, bool shadow, bool relaxed, std::optional<std::vector<int>> subset,
                     std::optional<std::vector<int>> nilpotent, bool conjugacy, const std::string& format) {
  CatalogOptions o;
  o.key.shadow = shadow;
  o.key.relaxed = relaxed;
  o.check_conjugacy = conjugacy;
  if (subset) o.subset = index_set(*subset);
  if (nilpotent) o.exact = index_set(*nilpotent);
  auto cs = enumerate_catalog(n, o);
  return format == "text" ? catalog_text(n, cs, o) : catalog_json(n, cs, o);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quantum Cayley-Klein orthogonal groups; every function returns JSON (or text) as a string.";
  m.def("describe", &describe, py::arg("spec"), py::arg("format") = "json");
  m.def("verify", &verify, py::arg("spec"), py::arg("seed") = 1, py::arg("points") = 3);
  m.def("contract", &contract, py::arg("spec"), py::arg("seed") = 1, py::arg("points") = 3,
        py::arg("eliminate") = true);
  m.def("classify", &classify, py::arg("n"), py::arg("shadow") = false, py::arg("relaxed") = false,
        py::arg("subset") = py::none(), py::arg("nilpotent") = py::none(), py::arg("conjugacy") = true,
        py::arg("format") = "json");
}
