#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symx/sexpr.hpp"
#include "symx/suites.hpp"

namespace py = pybind11;
using namespace symx;

namespace {

TruncatedPoset poset_of(std::uint64_t coords, std::uint32_t slots) {
  TruncatedPoset t;
  for (std::uint64_t i = 0; i < coords; ++i)
    t.domain.push_back(OrderPoint::nat(i));
  t.slots = slots;
  return t;
}

}  // namespace

PYBIND11_MODULE(_symx, m) {
  m.doc() = "name calculus, truncated forcing, and symmetry suites";

  // translators run newest-first, so the specific kind must come last
  py::register_exception<Error>(m, "SymxError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "SexprParseError", PyExc_ValueError);

  m.def("apply", [](const std::string& aut, const std::string& name) {
    return name_to_string(
        apply_name(parse_automorphism_str(aut), parse_name_str(name)));
  }, py::arg("automorphism"), py::arg("name"),
     "Apply an automorphism s-expression to a name s-expression.");

  m.def("support", [](const std::string& name) {
    std::vector<std::string> out;
    for (const auto& p : support_points(parse_name_str(name)))
      out.push_back(point_to_string(p));
    return out;
  }, py::arg("name"), "Structural support points of a name.");

  m.def("compile", [](const std::string& name, std::uint64_t index_size,
                      std::uint32_t slots) {
    ForcingEngine eng(poset_of(index_size, slots));
    return name_to_string(eng.compile(parse_name_str(name)));
  }, py::arg("name"), py::arg("index_size") = 2, py::arg("slots") = 2,
     "Compile a name to its raw form over a truncated poset.");

  m.def("forces", [](const std::string& cond, const std::string& formula,
                     std::uint64_t index_size, std::uint32_t slots) {
    ForcingEngine eng(poset_of(index_size, slots));
    return eng.forces(parse_condition_str(cond), parse_formula_str(formula));
  }, py::arg("condition"), py::arg("formula"), py::arg("index_size") = 2,
     py::arg("slots") = 2, "Recursive forcing relation on a truncated poset.");

  m.def("apply_condition", [](const std::string& aut, const std::string& cond) {
    return condition_to_string(
        apply_condition(parse_automorphism_str(aut), parse_condition_str(cond)));
  }, py::arg("automorphism"), py::arg("condition"));

  m.def("product_based", [](const std::string& f, const std::string& g,
                            std::uint64_t n, std::uint64_t m) {
    return basedfn_to_string(
        product_based(parse_basedfn_str(f), parse_basedfn_str(g), n, m));
  }, py::arg("f"), py::arg("g"), py::arg("n"), py::arg("m"),
     "Multiplicative pairing of based functions.");

  m.def("run_suite", [](const std::string& suite, std::uint64_t index_size,
                        std::uint32_t slots, std::uint64_t depth,
                        std::uint64_t cases, std::uint64_t seed,
                        std::uint64_t budget) {
    RunConfig cfg;
    cfg.suite = suite;
    cfg.index_size = index_size;
    cfg.slots = slots;
    cfg.depth = depth;
    cfg.cases = cases;
    cfg.seed = seed;
    cfg.budget = budget;
    auto r = run_suite(cfg);
    py::dict d;
    d["suite"] = r.suite;
    d["pass"] = r.pass;
    d["checked"] = r.checked;
    d["seed"] = r.seed;
    d["millis"] = r.millis;
    d["counterexamples"] = r.counterexamples;
    return d;
  }, py::arg("suite"), py::arg("index_size") = 2, py::arg("slots") = 2,
     py::arg("depth") = 2, py::arg("cases") = 1000, py::arg("seed") = 0,
     py::arg("budget") = 1000000, "Run one acceptance suite.");

  m.attr("suite_names") = kSuiteNames;
}
