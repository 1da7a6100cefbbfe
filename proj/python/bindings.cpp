#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "singulact/cli.hpp"
#include "singulact/errors.hpp"
#include "singulact/invariants.hpp"
#include "singulact/parse.hpp"
#include "singulact/report_json.hpp"
#include "singulact/scan.hpp"

namespace py = pybind11;
using namespace singulact;

namespace {

template <class R>
R with_names(R r, const std::string& input) {
  r.input = input;
  return r;
}

std::string lct_json(const std::string& ideal, const std::string& vars, bool certificate) {
  auto v = parse::VarTable::from_list(vars);
  auto a = parse::parse_monomial_ideal(ideal, v);
  auto r = certificate ? lct_monomial_dual(a, newton::Caps::from_env()) : lct_monomial(a);
  return emit_json(with_names(r, parse::format_ideal(a, v)));
}

std::string poly_json(const std::string& kind, const std::string& poly, const std::string& vars, bool include_f) {
  auto v = parse::VarTable::from_list(vars);
  auto f = parse::parse_polynomial(poly, v);
  InvariantReport r = kind == "beta" ? beta(f, include_f) : kind == "alpha" ? alpha(f) : milnor(f);
  return emit_json(with_names(r, parse::format_polynomial(f, v)));
}

std::string mult_json(const std::string& ideal, const std::string& vars) {
  auto v = parse::VarTable::from_list(vars);
  auto a = parse::parse_monomial_ideal(ideal, v);
  return emit_json(with_names(multiplicity_report(a, newton::Caps::from_env()), parse::format_ideal(a, v)));
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = cli::run(args, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

std::string scan_json(const std::string& family, std::size_t n, unsigned max_exp, const std::string& check,
                      unsigned threads) {
  scan::Limits limits{std::nullopt, threads};
  py::gil_scoped_release release;
  auto rep = family == "diagonal" ? scan::scan_diagonal(n, max_exp, check, limits)
                                  : scan::scan_monomial_pairs(n, max_exp, check, limits);
  return emit_json(rep);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact hypersurface-singularity invariants";

  auto base = py::register_exception<Error>(m, "SingulactError");
  auto input = py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", input.ptr());
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", input.ptr());
  auto unsupported = py::register_exception<UnsupportedClass>(m, "UnsupportedClass", base.ptr());
  py::register_exception<CapsExceeded>(m, "CapsExceeded", unsupported.ptr());
  py::register_exception<InvariantViolation>(m, "InvariantViolation", base.ptr());

  m.def("lct_json", &lct_json, py::arg("ideal"), py::arg("vars"), py::arg("certificate") = false);
  m.def("poly_json", &poly_json, py::arg("kind"), py::arg("poly"), py::arg("vars"), py::arg("include_f") = false);
  m.def("mult_json", &mult_json, py::arg("ideal"), py::arg("vars"));
  m.def("scan_json", &scan_json, py::arg("family"), py::arg("n"), py::arg("max_exp"), py::arg("check"),
        py::arg("threads") = 1);
  m.def("run", &run_cli, py::arg("args"), "Run the command line with argv (without program name).");
}
