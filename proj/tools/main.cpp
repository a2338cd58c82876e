// diraccert command line tool.
//
// Subcommands:
//   certify   per-point eigenvalue-exclusion verdict (exit 0 certified,
//             3 not certified, 2 on input error)
//   raster    grid of f values and verdicts, written as a plain-text file
//   bsnorm    Birman-Schwinger norm estimate with its analytic bounds
//   check     built-in validation suites

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "diraccert/bs_numeric.hpp"
#include "diraccert/enclosure.hpp"
#include "diraccert/grid_io.hpp"
#include "diraccert/potential.hpp"
#include "diraccert/selfcheck.hpp"
#include "diraccert/version.hpp"

namespace {

using namespace diraccert;

constexpr int kExitOk = 0;
constexpr int kExitError = 2;
constexpr int kExitNotCertified = 3;

struct ParsedPotential {
  PotentialModel model = PotentialModel::declared(0.0);
  std::string description;
};

// "--potential NAME:k=v,k=v"; e.g. gaussian:v0=0.1,width=1
ParsedPotential parse_potential(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  std::map<std::string, double> params;
  if (colon != std::string::npos) {
    std::istringstream rest(spec.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos)
        throw CLI::ValidationError("--potential", "expected k=v in '" + item + "'");
      params[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    }
  }
  auto get = [&params](const std::string& key, double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };
  ParsedPotential out;
  if (name == "gaussian") {
    const double v0 = get("v0", 1.0), width = get("width", 1.0);
    out.model = PotentialModel::gaussian(v0, width);
    out.description = "gaussian(v0=" + std::to_string(v0) + ", width=" + std::to_string(width) + ")";
  } else if (name == "cutoff_coulomb") {
    const double Z = get("Z", 1.0), R = get("R", 1.0);
    out.model = PotentialModel::cutoff_coulomb(Z, R);
    out.description = "cutoff_coulomb(Z=" + std::to_string(Z) + ", R=" + std::to_string(R) + ")";
  } else if (name == "bump") {
    const double v0 = get("v0", 1.0), R = get("R", 1.0);
    out.model = PotentialModel::bump(v0, R);
    out.description = "bump(v0=" + std::to_string(v0) + ", R=" + std::to_string(R) + ")";
  } else {
    throw CLI::ValidationError("--potential", "unknown potential '" + name + "'");
  }
  return out;
}

struct NormInputs {
  double norm3 = 0.0;
  bool norm3_declared = false;
  QuadratureResult norm3_quad;
  std::optional<double> norm32;
  bool norm32_declared = false;
  QuadratureResult norm32_quad;
};

// Declared norms win over quadrature; quadrature requires a potential.
NormInputs resolve_norms(const std::optional<double>& norm3_flag,
                         const std::optional<double>& norm32_flag,
                         const std::optional<ParsedPotential>& pot, double tol,
                         bool want_norm32) {
  NormInputs out;
  if (norm3_flag) {
    out.norm3 = *norm3_flag;
    out.norm3_declared = true;
  } else if (pot) {
    out.norm3_quad = lp_norm(pot->model, 3.0, tol);
    out.norm3 = out.norm3_quad.value;
  } else {
    throw CLI::RequiredError("--norm3 or --potential");
  }
  if (norm32_flag) {
    out.norm32 = *norm32_flag;
    out.norm32_declared = true;
  } else if (pot && want_norm32) {
    out.norm32_quad = lp_norm(pot->model, 1.5, tol);
    out.norm32 = out.norm32_quad.value;
  }
  return out;
}

std::string provenance(bool declared, const QuadratureResult& quad) {
  if (declared) return "declared";
  std::ostringstream os;
  os << "computed, rel err " << quad.estimated_relative_error
     << (quad.converged ? "" : " (NOT CONVERGED)");
  return os.str();
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

int cmd_certify(double re, double im, double m, const NormInputs& norms) {
  const EnclosureReport rep = certify(Complex{re, im}, m, norms.norm3, norms.norm32);
  std::cout << "lambda: " << fmt(re) << " + " << fmt(im) << "i\n";
  std::cout << "m: " << fmt(m) << "\n";
  std::cout << "norm3: " << fmt(norms.norm3) << " ("
            << provenance(norms.norm3_declared, norms.norm3_quad) << ")\n";
  if (norms.norm32)
    std::cout << "norm32: " << fmt(*norms.norm32) << " ("
              << provenance(norms.norm32_declared, norms.norm32_quad) << ")\n";
  else
    std::cout << "norm32: none\n";
  std::cout << "f: " << fmt(rep.f_value) << "\n";
  std::cout << "thm1_lhs: " << fmt(rep.thm1_lhs)
            << (rep.thm1_certified ? "  -> certified" : "  -> not certified") << "\n";
  if (rep.thm2_lhs)
    std::cout << "thm2_lhs: " << fmt(*rep.thm2_lhs)
              << (*rep.thm2_certified ? "  -> certified" : "  -> not certified")
              << "\n";
  else
    std::cout << "thm2_lhs: n/a (no L^{3/2} norm)\n";
  std::cout << "certified: " << (rep.certified ? "yes" : "no") << "\n";
  if (!rep.certified) std::cout << "reason: " << rep.reason() << "\n";
  return rep.certified ? kExitOk : kExitNotCertified;
}

int cmd_raster(const std::vector<double>& grid6, double m, const NormInputs& norms,
               const std::string& out_path, const std::string& echo) {
  GridSpec spec;
  spec.re_min = grid6[0];
  spec.re_max = grid6[1];
  spec.n_re = static_cast<int>(grid6[2]);
  spec.im_min = grid6[3];
  spec.im_max = grid6[4];
  spec.n_im = static_cast<int>(grid6[5]);
  const RegionGrid grid = raster(spec, m, norms.norm3, norms.norm32);

  std::ofstream os(out_path);
  if (!os) {
    std::cerr << "error: cannot open output path '" << out_path << "'\n";
    return kExitError;
  }
  write_grid(os, grid, echo);
  os.flush();
  if (!os) {
    std::cerr << "error: failed writing '" << out_path << "'\n";
    return kExitError;
  }
  std::cout << "wrote " << grid.cells.size() << " rows to " << out_path << "\n";
  return kExitOk;
}

int cmd_bsnorm(double re, double im, double m, const ParsedPotential& pot,
               int nodes, std::uint64_t seed, double tol) {
  const SpectralPoint z{Complex{re, im}, m};
  if (!is_resolvent_point(z)) {
    std::cerr << "error: z = " << re << " + " << im
              << "i lies on the essential spectrum (-inf,-m] u [+m,+inf); the "
                 "discretized estimate is defined off it only\n";
    return kExitError;
  }
  MonteCarloScheme scheme;
  scheme.node_count = nodes;
  scheme.seed = seed;
  const BSDiscretization disc = build_bs(z, pot.model, scheme);
  const BSNormEstimate est = bs_norm_estimate(disc, 500, seed);

  const QuadratureResult q3 = lp_norm(pot.model, 3.0, tol);
  const QuadratureResult q32 = lp_norm(pot.model, 1.5, tol);
  const double b1 = lemma1_bound(z, q3.value);
  const double b2 = lemma2_bound(z, q3.value, q32.value);

  std::cout << "potential: " << pot.description << "\n";
  std::cout << "z: " << fmt(re) << " + " << fmt(im) << "i, m: " << fmt(m) << "\n";
  std::cout << "nodes: " << est.node_count << ", seed: " << est.seed
            << ", iterations: " << est.estimator_iterations
            << (est.converged ? "" : " (iteration cap reached)") << "\n";
  std::cout << "estimate: " << fmt(est.value) << "\n";
  std::cout << "lemma1_bound: " << fmt(b1) << "  dominates: "
            << (est.value <= b1 ? "yes" : "NO") << "\n";
  std::cout << "lemma2_bound: " << fmt(b2) << "  dominates: "
            << (est.value <= b2 ? "yes" : "NO") << "\n";
  return kExitOk;
}

int cmd_check(std::uint64_t seed, bool corrupt) {
  SelfCheckOptions opts;
  opts.seed = seed;
  opts.corrupt_representation = corrupt;
  const bool ok = report_selfcheck(std::cout, run_selfcheck(opts));
  return ok ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified eigenvalue-free regions for 3D Dirac operators"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  // shared option storage
  std::vector<double> lambda_parts;
  std::vector<double> grid6;
  double m = 0.0, tol = 1e-6;
  std::optional<double> norm3_flag, norm32_flag;
  std::string potential_spec, out_path = "grid.txt";
  std::uint64_t seed = 1;
  int nodes = 512;
  bool corrupt = false;

  auto add_lambda = [&](CLI::App* cmd) {
    cmd->add_option("--lambda", lambda_parts, "spectral point RE,IM")
        ->delimiter(',')
        ->expected(2)
        ->required();
  };
  auto add_norm_opts = [&](CLI::App* cmd) {
    cmd->add_option("--norm3", norm3_flag, "declared L^3 norm of |V|");
    cmd->add_option("--norm32", norm32_flag, "declared L^{3/2} norm of |V|");
    cmd->add_option("--potential", potential_spec,
                    "potential NAME:k=v,... (gaussian, cutoff_coulomb, bump)");
    cmd->add_option("--tol", tol, "quadrature tolerance")->check(CLI::Range(1e-10, 0.1));
  };

  CLI::App* certify_cmd = app.add_subcommand("certify", "certify one spectral point");
  add_lambda(certify_cmd);
  certify_cmd->add_option("--m", m, "mass")->check(CLI::NonNegativeNumber);
  add_norm_opts(certify_cmd);

  CLI::App* raster_cmd = app.add_subcommand("raster", "rasterize a complex region");
  raster_cmd->add_option("--grid", grid6, "REMIN,REMAX,NRE,IMMIN,IMMAX,NIM")
      ->delimiter(',')
      ->expected(6)
      ->required();
  raster_cmd->add_option("--m", m, "mass")->check(CLI::NonNegativeNumber);
  add_norm_opts(raster_cmd);
  raster_cmd->add_option("--out", out_path, "output path");

  CLI::App* bsnorm_cmd =
      app.add_subcommand("bsnorm", "Birman-Schwinger norm estimate");
  add_lambda(bsnorm_cmd);
  bsnorm_cmd->add_option("--m", m, "mass")->check(CLI::NonNegativeNumber);
  bsnorm_cmd->add_option("--potential", potential_spec, "scalar potential")->required();
  bsnorm_cmd->add_option("--nodes", nodes, "Monte-Carlo node count")
      ->check(CLI::Range(1, 2048));
  bsnorm_cmd->add_option("--seed", seed, "node seed");
  bsnorm_cmd->add_option("--tol", tol, "quadrature tolerance");

  CLI::App* check_cmd = app.add_subcommand("check", "run built-in validation suites");
  check_cmd->add_option("--seed", seed, "suite seed");
  check_cmd->add_flag("--corrupt-representation", corrupt)->group("");  // test hook

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    std::optional<ParsedPotential> pot;
    if (!potential_spec.empty()) pot = parse_potential(potential_spec);

    if (certify_cmd->parsed()) {
      const NormInputs norms =
          resolve_norms(norm3_flag, norm32_flag, pot, tol, /*want_norm32=*/true);
      return cmd_certify(lambda_parts[0], lambda_parts[1], m, norms);
    }
    if (raster_cmd->parsed()) {
      const NormInputs norms =
          resolve_norms(norm3_flag, norm32_flag, pot, tol, /*want_norm32=*/true);
      std::ostringstream echo;
      echo << "raster --m " << m << " --grid " << grid6[0] << "," << grid6[1] << ","
           << static_cast<int>(grid6[2]) << "," << grid6[3] << "," << grid6[4] << ","
           << static_cast<int>(grid6[5]);
      return cmd_raster(grid6, m, norms, out_path, echo.str());
    }
    if (bsnorm_cmd->parsed())
      return cmd_bsnorm(lambda_parts[0], lambda_parts[1], m, *pot, nodes, seed, tol);
    if (check_cmd->parsed()) return cmd_check(seed, corrupt);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
