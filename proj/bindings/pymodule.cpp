#include <susyw/jsonio.hpp>
#include <susyw/verify.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace susyw;

namespace {

Family resolve(const std::string& name) {
  auto f = family_from_name(name);
  if (!f) throw std::invalid_argument("unknown family: " + name);
  return *f;
}

std::string gens_json(const std::string& family, int n, const std::string& k,
                      std::optional<int> floor, bool minimal_only) {
  AlgebraSpec spec(resolve(family), n);
  Engine eng(spec, rat_parse(k));
  GeneratorSet gs = generators(eng, floor);
  Report rep = verify_all(eng, gs);
  return emit_generators(eng, gs, minimal_only, &rep).dump();
}

std::string verify_json_impl(const std::string& family, int n, const std::string& k,
                             std::optional<int> floor) {
  AlgebraSpec spec(resolve(family), n);
  Engine eng(spec, rat_parse(k));
  GeneratorSet gs = generators(eng, floor);
  return emit_report(eng, "verify", verify_all(eng, gs)).dump();
}

std::string axioms_json_impl(const std::string& family, int n, const std::string& k) {
  AlgebraSpec spec(resolve(family), n);
  Engine eng(spec, rat_parse(k));
  return emit_report(eng, "check-axioms", check_axioms(eng)).dump();
}

std::string identities_json_impl(const std::string& family, int n, const std::string& k,
                                 std::optional<int> floor) {
  AlgebraSpec spec(resolve(family), n);
  Engine eng(spec, rat_parse(k));
  return emit_report(eng, "identities", identities(eng, floor.value_or(default_floor(spec))))
      .dump();
}

std::string weights_json_impl(const std::string& family, int n, const std::string& k,
                              std::optional<int> floor) {
  AlgebraSpec spec(resolve(family), n);
  Engine eng(spec, rat_parse(k));
  GeneratorSet gs = generators(eng, floor);
  return emit_report(eng, "weights", verify_weights(eng, gs)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact generators of supersymmetric classical W-algebras";

  std::vector<std::string> fams;
  for (Family f : {Family::GlNp1, Family::GlNm1, Family::SlNp1, Family::SlNm1, Family::OspOddP,
                   Family::OspOddM, Family::OspEven0, Family::OspEvenP2})
    fams.push_back(family_name(f));
  m.attr("FAMILIES") = fams;
  m.attr("__version__") = "0.1.0";

  m.def("generators_json", &gens_json, py::arg("family"), py::arg("n"), py::arg("k") = "1",
        py::arg("floor") = std::nullopt, py::arg("minimal_only") = true,
        "construct and verify the generators, returning the JSON document");
  m.def("verify_json", &verify_json_impl, py::arg("family"), py::arg("n"), py::arg("k") = "1",
        py::arg("floor") = std::nullopt);
  m.def("check_axioms_json", &axioms_json_impl, py::arg("family"), py::arg("n"),
        py::arg("k") = "1");
  m.def("identities_json", &identities_json_impl, py::arg("family"), py::arg("n"),
        py::arg("k") = "1", py::arg("floor") = std::nullopt);
  m.def("weights_json", &weights_json_impl, py::arg("family"), py::arg("n"), py::arg("k") = "1",
        py::arg("floor") = std::nullopt);
}
