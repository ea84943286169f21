#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ciore/cli.hpp"
#include "ciore/error.hpp"
#include "ciore/json_io.hpp"
#include "ciore/parser.hpp"

namespace py = pybind11;
using namespace ciore;

namespace {

// Results cross the boundary as JSON text; the Python side parses it.
std::string prove(const std::string& sequent, std::size_t atom_cap) {
  Sequent s = parse_sequent(sequent);
  return verdict_to_json(s, decide(s, atom_cap)).dump();
}

std::string prove_fo(const std::string& sequent, std::size_t max_nodes, std::size_t max_depth) {
  Sequent s = parse_sequent(sequent);
  return fo_verdict_to_json(s, decide_fo(s, Budget{max_nodes, max_depth})).dump();
}

bool valid(const std::string& sequent, std::size_t atom_cap) { return matrix_valid(parse_sequent(sequent), atom_cap); }

std::string countermodel(const std::string& sequent, std::size_t atom_cap) {
  auto cm = find_countermodel(parse_sequent(sequent), atom_cap);
  return cm ? valuation_to_json(*cm).dump() : "null";
}

py::tuple check(const std::string& proof_json, const std::string& calculus, bool allow_cut) {
  Proof p = proof_from_json(Json::parse(proof_json));
  CheckResult r = check_proof(p, calculus_from_name(calculus), allow_cut);
  return py::make_tuple(r.ok, r.message, r.path);
}

py::tuple run_cli(const std::vector<std::string>& args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  m.def("normalize", [](const std::string& s) { return to_string(parse_sequent(s)); }, py::arg("sequent"));
  m.def("prove", &prove, py::arg("sequent"), py::arg("atom_cap") = kDefaultAtomCap);
  m.def("prove_fo", &prove_fo, py::arg("sequent"), py::arg("max_nodes") = Budget{}.max_nodes,
        py::arg("max_depth") = Budget{}.max_depth);
  m.def("valid", &valid, py::arg("sequent"), py::arg("atom_cap") = kDefaultAtomCap);
  m.def("countermodel", &countermodel, py::arg("sequent"), py::arg("atom_cap") = kDefaultAtomCap);
  m.def("check_proof", &check, py::arg("proof_json"), py::arg("calculus") = "gqciore",
        py::arg("allow_cut") = false);
  m.def("run_cli", &run_cli, py::arg("args"), py::arg("input") = "");
}
