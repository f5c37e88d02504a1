#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "usm/cli.hpp"
#include "usm/cobordism.hpp"
#include "usm/error.hpp"
#include "usm/hopf.hpp"
#include "usm/multiplier.hpp"

namespace py = pybind11;
using namespace usm;

namespace {

std::size_t h2_dim(const std::string& name) { return h2(catalog(name).group).dim(); }

std::string bogomolov_json(const std::string& name) {
  return to_json(multiplier_report(name, h2(catalog(name).group))).dump();
}

std::vector<std::size_t> hopf_dims(const std::string& name, std::size_t coset_limit) {
  std::vector<std::size_t> out;
  for (const auto& p : catalog(name).presentations) out.push_back(hopf_multiplier(p, coset_limit).dim);
  return out;
}

std::string extendable_json(const std::string& name, const std::string& surface) {
  auto g = catalog(name).group;
  auto basis = h2(g);
  auto report = bogomolov_by_functionals(name, basis);
  return to_json(is_extendable(SurfaceAction::parse(g, surface), basis, report)).dump();
}

py::tuple run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Unoriented Schur and Bogomolov multipliers of finite groups";
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);
  m.def("catalog_names", &catalog_names);
  m.def("group_order", [](const std::string& name) { return catalog(name).group->order(); });
  m.def("h2_dim", &h2_dim, "dim H2(G;F2) = dim M(G;Z2)");
  m.def("bogomolov_json", &bogomolov_json);
  m.def("hopf_dims", &hopf_dims, py::arg("name"), py::arg("coset_limit") = std::size_t{1} << 20);
  m.def("extendable_json", &extendable_json);
  m.def("run", &run, "Runs the command-line front end; returns (exit_code, stdout, stderr).");
}
