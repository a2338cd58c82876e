// pybind11 bindings for the diraccert core library.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <fstream>
#include <optional>
#include <sstream>

#include "diraccert/bs_numeric.hpp"
#include "diraccert/enclosure.hpp"
#include "diraccert/grid_io.hpp"
#include "diraccert/potential.hpp"
#include "diraccert/selfcheck.hpp"
#include "diraccert/version.hpp"

namespace py = pybind11;
using namespace diraccert;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

Matrix4 to_matrix4(const ComplexArray& a) {
  if (a.ndim() != 2 || a.shape(0) != 4 || a.shape(1) != 4)
    throw std::invalid_argument("expected a 4x4 complex array");
  Matrix4 m;
  auto r = a.unchecked<2>();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = r(i, j);
  return m;
}

py::array_t<Complex> from_matrix4(const Matrix4& m) {
  py::array_t<Complex> a({4, 4});
  auto w = a.mutable_unchecked<2>();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) w(i, j) = m(i, j);
  return a;
}

PotentialModel make_potential(const std::string& name, py::kwargs kwargs) {
  auto get = [&kwargs](const char* key, double fallback) {
    return kwargs.contains(key) ? kwargs[key].cast<double>() : fallback;
  };
  if (name == "gaussian") return PotentialModel::gaussian(get("v0", 1.0), get("width", 1.0));
  if (name == "cutoff_coulomb")
    return PotentialModel::cutoff_coulomb(get("Z", 1.0), get("R", 1.0));
  if (name == "bump") return PotentialModel::bump(get("v0", 1.0), get("R", 1.0));
  throw std::invalid_argument("unknown potential '" + name +
                              "' (gaussian, cutoff_coulomb, bump)");
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "certified eigenvalue-free regions for 3D non-self-adjoint Dirac operators";
  mod.attr("__version__") = kVersion;

  // dirac_algebra
  mod.def(
      "dirac_basis",
      [](const std::string& tag) {
        const DiracBasis& b = dirac_basis(tag);
        py::list out;
        for (const Matrix4& a : b.alpha) out.append(from_matrix4(a));
        return out;
      },
      py::arg("representation") = "standard",
      "the four anticommuting Hermitian matrices [a1, a2, a3, a4]");
  mod.def("hs_norm", [](const ComplexArray& a) { return hs_norm(to_matrix4(a)); },
          py::arg("matrix"));
  mod.def("operator_norm",
          [](const ComplexArray& a) { return operator_norm(to_matrix4(a)); },
          py::arg("matrix"));

  // resolvent_kernel
  mod.def(
      "kappa", [](Complex z, double m) { return kappa({z, m}); }, py::arg("z"),
      py::arg("m") = 0.0, "principal branch of sqrt(m^2 - z^2)");
  mod.def(
      "is_resolvent_point",
      [](Complex z, double m) { return is_resolvent_point({z, m}); }, py::arg("z"),
      py::arg("m") = 0.0);
  mod.def(
      "kernel",
      [](Complex z, double m, const Vec3& x, const Vec3& xp, const std::string& rep) {
        return from_matrix4(kernel({z, m}, x, xp, dirac_basis(rep)).matrix);
      },
      py::arg("z"), py::arg("m"), py::arg("x"), py::arg("xp"),
      py::arg("representation") = "standard", "free resolvent kernel value at (x, x')");
  mod.def(
      "hs_closed_form", [](Complex z, double m, double r) { return hs_closed_form({z, m}, r); },
      py::arg("z"), py::arg("m"), py::arg("r"));
  mod.def(
      "hs_bound", [](Complex z, double m, double r) { return hs_bound({z, m}, r); },
      py::arg("z"), py::arg("m"), py::arg("r"));

  // enclosure
  mod.def("constant_C", &constant_C);
  mod.def("constant_Cprime", &constant_Cprime);
  mod.def("f_function", &f_function, py::arg("lam"), py::arg("m"));

  py::class_<EnclosureReport>(mod, "EnclosureReport")
      .def_readonly("lam", &EnclosureReport::lambda)
      .def_readonly("m", &EnclosureReport::m)
      .def_readonly("f_value", &EnclosureReport::f_value)
      .def_readonly("thm1_lhs", &EnclosureReport::thm1_lhs)
      .def_readonly("thm2_lhs", &EnclosureReport::thm2_lhs)
      .def_readonly("thm1_certified", &EnclosureReport::thm1_certified)
      .def_readonly("thm2_certified", &EnclosureReport::thm2_certified)
      .def_readonly("certified", &EnclosureReport::certified)
      .def("reason", &EnclosureReport::reason)
      .def("__repr__", [](const EnclosureReport& r) {
        std::ostringstream os;
        os << "<EnclosureReport lambda=(" << r.lambda.real() << "," << r.lambda.imag()
           << ") certified=" << (r.certified ? "True" : "False") << ">";
        return os.str();
      });
  mod.def("certify", &certify, py::arg("lam"), py::arg("m"), py::arg("norm3"),
          py::arg("norm32") = std::nullopt);

  py::class_<GridSpec>(mod, "GridSpec")
      .def(py::init([](double re_min, double re_max, int n_re, double im_min,
                       double im_max, int n_im) {
             return GridSpec{re_min, re_max, n_re, im_min, im_max, n_im};
           }),
           py::arg("re_min"), py::arg("re_max"), py::arg("n_re"), py::arg("im_min"),
           py::arg("im_max"), py::arg("n_im"))
      .def_readonly("n_re", &GridSpec::n_re)
      .def_readonly("n_im", &GridSpec::n_im);

  py::class_<RegionGrid>(mod, "RegionGrid")
      .def_readonly("m", &RegionGrid::m)
      .def_readonly("norm3", &RegionGrid::norm3)
      .def_readonly("norm32", &RegionGrid::norm32)
      .def_readonly("cells", &RegionGrid::cells)
      .def("cell", &RegionGrid::cell, py::arg("i_re"), py::arg("j_im"),
           py::return_value_policy::reference_internal)
      .def("f_values", [](const RegionGrid& g) {
        py::array_t<double> a({g.spec.n_im, g.spec.n_re});
        auto w = a.mutable_unchecked<2>();
        for (int j = 0; j < g.spec.n_im; ++j)
          for (int i = 0; i < g.spec.n_re; ++i) w(j, i) = g.cell(i, j).f_value;
        return a;
      });
  mod.def("raster", &raster, py::arg("spec"), py::arg("m"), py::arg("norm3"),
          py::arg("norm32") = std::nullopt);
  mod.def(
      "write_grid",
      [](const std::string& path, const RegionGrid& grid) {
        std::ofstream os(path);
        if (!os) throw std::runtime_error("cannot open '" + path + "'");
        write_grid(os, grid);
      },
      py::arg("path"), py::arg("grid"));

  // potential
  py::class_<QuadratureResult>(mod, "QuadratureResult")
      .def_readonly("value", &QuadratureResult::value)
      .def_readonly("estimated_relative_error", &QuadratureResult::estimated_relative_error)
      .def_readonly("converged", &QuadratureResult::converged);
  py::class_<PotentialModel>(mod, "PotentialModel")
      .def_readonly("declared_norm3", &PotentialModel::declared_norm3)
      .def_readonly("declared_norm32", &PotentialModel::declared_norm32)
      .def("pointwise_norm", &PotentialModel::pointwise_norm, py::arg("x"));
  mod.def("potential", &make_potential, py::arg("name"),
          "built-in potential by name: gaussian(v0, width), cutoff_coulomb(Z, R), "
          "bump(v0, R)");
  mod.def("declared_potential", &PotentialModel::declared, py::arg("norm3"),
          py::arg("norm32") = std::nullopt);
  mod.def("lp_norm", &lp_norm, py::arg("potential"), py::arg("p"),
          py::arg("tol") = 1e-6);
  mod.def("check_proposition_sufficient", &check_proposition_sufficient,
          py::arg("v1_norm3"));
  mod.def("check_kato_pointwise", &check_kato_pointwise, py::arg("potential"),
          py::arg("a"), py::arg("b"), py::arg("samples"), py::arg("seed") = 2024);

  // bs_numeric
  py::class_<BSNormEstimate>(mod, "BSNormEstimate")
      .def_readonly("value", &BSNormEstimate::value)
      .def_readonly("node_count", &BSNormEstimate::node_count)
      .def_readonly("estimator_iterations", &BSNormEstimate::estimator_iterations)
      .def_readonly("seed", &BSNormEstimate::seed)
      .def_readonly("converged", &BSNormEstimate::converged);
  mod.def(
      "bs_estimate",
      [](Complex z, double m, const PotentialModel& V, int nodes, std::uint64_t seed) {
        MonteCarloScheme scheme;
        scheme.node_count = nodes;
        scheme.seed = seed;
        const BSDiscretization disc = build_bs({z, m}, V, scheme);
        return bs_norm_estimate(disc);
      },
      py::arg("z"), py::arg("m"), py::arg("potential"), py::arg("nodes") = 512,
      py::arg("seed") = 1,
      "Monte-Carlo Nystrom estimate of the Birman-Schwinger norm at z");
  mod.def(
      "lemma1_bound", [](Complex z, double m, double norm3) { return lemma1_bound({z, m}, norm3); },
      py::arg("z"), py::arg("m"), py::arg("norm3"));
  mod.def(
      "lemma2_bound",
      [](Complex z, double m, double norm3, double norm32) {
        return lemma2_bound({z, m}, norm3, norm32);
      },
      py::arg("z"), py::arg("m"), py::arg("norm3"), py::arg("norm32"));

  // selfcheck
  mod.def(
      "selfcheck",
      [](std::uint64_t seed) {
        SelfCheckOptions opts;
        opts.seed = seed;
        py::list out;
        for (const SuiteResult& s : run_selfcheck(opts)) {
          py::dict d;
          d["name"] = s.name;
          d["checks"] = s.checks;
          d["failures"] = s.failures;
          out.append(d);
        }
        return out;
      },
      py::arg("seed") = 12345);
}
