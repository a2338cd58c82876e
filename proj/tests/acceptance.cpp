// Acceptance suite: nine criteria, one pass/fail line each.  Exit status is
// the number of failed criteria.

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "diraccert/bs_numeric.hpp"
#include "diraccert/enclosure.hpp"
#include "diraccert/grid_io.hpp"
#include "diraccert/potential.hpp"
#include "diraccert/resolvent.hpp"
#include "oracles.hpp"

using namespace diraccert;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Checker {
  int checks = 0;
  int failures = 0;
  std::ostringstream detail;

  void expect(bool ok, const char* what) {
    ++checks;
    if (!ok) {
      ++failures;
      if (failures <= 5) detail << "\n    failed: " << what;
    }
  }
};

SpectralPoint random_resolvent_point(oracles::Rng& rng) {
  for (;;) {
    const double m = rng.uniform(0.0, 1.0) < 0.25 ? 0.0 : rng.uniform(0.0, 5.0);
    const SpectralPoint p{{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)}, m};
    if (is_resolvent_point(p)) return p;
  }
}

// -------------------------------------------------------------------------
// criterion 1: exact anticommutation and trace identities, both reps, < 1 s
bool criterion_dirac_algebra(Checker& c) {
  for (Representation rep : {Representation::standard, Representation::weyl}) {
    const DiracBasis& b = dirac_basis(rep);
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        Matrix4 res = b.alpha[mu] * b.alpha[nu] + b.alpha[nu] * b.alpha[mu];
        if (mu == nu) res -= Matrix4::identity() * Complex{2.0, 0.0};
        c.expect(hs_norm(res) <= 1e-14, "anticommutation residual");
      }
    for (int mu = 0; mu < 4; ++mu)
      c.expect(std::abs(b.alpha[mu].trace()) <= 1e-14, "tr(alpha_mu) = 0");
    for (int k = 0; k < 3; ++k)
      c.expect(std::abs((b.alpha4() * b.alpha_vec(k)).trace()) <= 1e-14,
               "tr(alpha_4 alpha_k) = 0");
  }
  return c.failures == 0;
}

// -------------------------------------------------------------------------
// criterion 2: |kernel|_HS^2 vs closed form, 1e3 random resolvent points
// per representation, relative 1e-12, < 10 s
bool criterion_hs_oracle(Checker& c) {
  for (Representation rep : {Representation::standard, Representation::weyl}) {
    oracles::Rng rng(1001 + static_cast<int>(rep));
    const DiracBasis& basis = dirac_basis(rep);
    int done = 0;
    while (done < 1000) {
      const SpectralPoint p = random_resolvent_point(rng);
      const Vec3 x = rng.vec3();
      const Vec3 xp = rng.vec3();
      const double r = std::sqrt((x[0] - xp[0]) * (x[0] - xp[0]) +
                                 (x[1] - xp[1]) * (x[1] - xp[1]) +
                                 (x[2] - xp[2]) * (x[2] - xp[2]));
      if (r < 1e-6) continue;
      ++done;
      const double via_kernel = hs_norm(kernel(p, x, xp, basis).matrix);
      const double closed = hs_closed_form(p, r);
      c.expect(std::abs(via_kernel * via_kernel - closed) <= 1e-12 * closed,
               "hs_norm(kernel)^2 == hs_closed_form");
    }
  }
  return c.failures == 0;
}

// -------------------------------------------------------------------------
// criterion 3: hs_bound >= hs_closed_form over 1e5 random (z, m, r)
// including real z with |z| >= m, zero violations, < 10 s
bool criterion_dominance(Checker& c) {
  oracles::Rng rng(2024);
  for (int t = 0; t < 100000; ++t) {
    const double m = rng.uniform(0.0, 1.0) < 0.25 ? 0.0 : rng.uniform(0.0, 8.0);
    Complex z{rng.uniform(-15.0, 15.0), rng.uniform(-15.0, 15.0)};
    if (t % 5 == 0) z = Complex{z.real(), 0.0};
    const double r = std::exp(rng.uniform(std::log(1e-3), std::log(1e3)));
    const SpectralPoint p{z, m};
    c.expect(hs_closed_form(p, r) <= hs_bound(p, r), "hs_bound dominance");
  }
  return c.failures == 0;
}

// -------------------------------------------------------------------------
// criterion 4: constants against the prose approximations and the embedded
// extended-precision literals
bool criterion_constants(Checker& c) {
  const double pi = 3.14159265358979323846;
  const double em1 = std::exp(-1.0), em2 = std::exp(-2.0);

  c.expect(std::abs(constant_C() - 1.5) < 0.02, "C ~ 1.5 within 0.02");
  c.expect(std::abs(constant_C() - 1.488000723994071817) <= 1e-12,
           "C matches 1.48800...");
  c.expect(std::abs(constant_Cprime() - 1.1) < 0.02, "C' ~ 1.1 within 0.02");
  c.expect(std::abs(constant_Cprime() - 1.107551215027911468) <= 1e-12,
           "C' matches 1.10755...");

  auto close = [](double a, double b) { return std::abs(a - b) <= 1e-12 * b; };
  c.expect(close(std::sqrt(1.0 + em1 + 2.0 * em2) / (2.0 * pi), kC1), "c1 recompute");
  c.expect(close(std::sqrt(2.0) / (2.0 * pi), kC2), "c2 recompute");
  c.expect(close(std::cbrt(2.0 * pi * pi), kFormBoundThreshold),
           "(2 pi^2)^{1/3} recompute");
  c.expect(close(std::cbrt(pi / 2.0) * std::sqrt(1.0 + em1 + em2), kLemmaL3Coeff),
           "lemma L3 coefficient recompute");
  c.expect(close(std::cbrt(pi / 2.0) * std::sqrt(1.0 + em1 + 2.0 * em2),
                 constant_C()),
           "C recompute");
  c.expect(close(std::pow(2.0, 17.0 / 6.0) / (3.0 * std::pow(pi, 2.0 / 3.0)),
                 constant_Cprime()),
           "C' recompute");
  return c.failures == 0;
}

// -------------------------------------------------------------------------
// criterion 5: f identities -- massless form on 1e4 random points,
// conjugation symmetry, finiteness exactly off the rays
bool criterion_f_identities(Checker& c) {
  oracles::Rng rng(3003);
  int done = 0;
  while (done < 10000) {
    const Complex lam{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
    if (lam.imag() == 0.0) continue;
    ++done;
    const double expected = std::abs(lam) / std::abs(lam.imag());
    c.expect(std::abs(f_function(lam, 0.0) - expected) <= 1e-12 * expected,
             "f(lambda, 0) = |lambda| / |Im lambda|");
    const double m = rng.uniform(0.0, 5.0);
    c.expect(f_function(std::conj(lam), m) == f_function(lam, m),
             "f(conj lambda, m) = f(lambda, m)");
  }
  // structured sweep over the real axis and off-axis points
  for (double m : {0.5, 1.0, 5.0}) {
    for (double re = -2.0 * m; re <= 2.0 * m; re += m / 8.0) {
      const double f = f_function({re, 0.0}, m);
      const bool on_rays = std::abs(re) >= m;
      c.expect(std::isinf(f) == on_rays, "f finite exactly off the rays (real axis)");
    }
    for (double im : {1e-6, 0.1, 2.0})
      for (double re : {-3.0 * m, -m, 0.0, 0.7 * m, m, 4.0 * m})
        c.expect(std::isfinite(f_function({re, im}, m)), "f finite off the real axis");
  }
  for (double re : {-4.0, -0.3, 0.2, 7.0})
    c.expect(std::isinf(f_function({re, 0.0}, 0.0)), "massless rays cover R \\ {0}");
  return c.failures == 0;
}

// -------------------------------------------------------------------------
// criterion 6: qualitative reproduction of the f raster at m = 5
bool criterion_raster(Checker& c) {
  const RegionGrid grid = raster({-10.0, 10.0, 201, -10.0, 10.0, 201}, 5.0, 0.3);
  const std::string path = "/tmp/diraccert_acceptance_grid_" +
                           std::to_string(::getpid()) + ".txt";
  {
    std::ofstream os(path);
    write_grid(os, grid, "acceptance raster");
  }
  std::ifstream is(path);
  c.expect(is.good(), "grid file written");
  int data_rows = 0;
  std::string line;
  while (std::getline(is, line))
    if (!line.empty() && line[0] != '#') ++data_rows;
  c.expect(data_rows == 40401, "40401 data rows");

  std::ifstream is2(path);
  const RegionGrid back = parse_grid(is2);
  for (int j = 0; j < 201; ++j)
    for (int i = 0; i < 201; ++i) {
      const EnclosureReport& cell = back.cell(i, j);
      if (cell.lambda.real() == 0.0)
        c.expect(cell.f_value == 1.0, "f = 1 on the imaginary axis");
      if (cell.lambda.imag() == 0.0 && std::abs(cell.lambda.real()) >= 5.0)
        c.expect(std::isinf(cell.f_value), "f = inf on the rays");
    }

  // strict growth toward the rays along vertical lines with |Re| > 5
  for (double re : {5.1, 6.0, 8.0, -7.0}) {
    const double f1 = f_function({re, 1.0}, 5.0);
    const double f01 = f_function({re, 0.1}, 5.0);
    const double f001 = f_function({re, 0.01}, 5.0);
    c.expect(f1 < f01 && f01 < f001, "f increases toward the real rays");
  }
  std::remove(path.c_str());
  return c.failures == 0;
}

// -------------------------------------------------------------------------
// criterion 7: quadrature reproduces the gaussian closed forms at 1e-5 and
// flags the cutoff-Coulomb L^3 divergence
bool criterion_quadrature(Checker& c) {
  for (double v0 : {1.0, 0.25}) {
    const PotentialModel g = PotentialModel::gaussian(v0);
    const QuadratureResult n3 = lp_norm(g, 3.0, 1e-6);
    c.expect(n3.converged, "gaussian L3 quadrature converged");
    c.expect(std::abs(n3.value - v0 * 1.023326707946488488) <=
                 1e-5 * v0 * 1.023326707946488488,
             "gaussian L3 closed form");
    const QuadratureResult n32 = lp_norm(g, 1.5, 1e-6);
    c.expect(n32.converged, "gaussian L3/2 quadrature converged");
    c.expect(std::abs(n32.value - v0 * 2.094395102393195492) <=
                 1e-5 * v0 * 2.094395102393195492,
             "gaussian L3/2 closed form");
  }
  const QuadratureResult div = lp_norm(PotentialModel::cutoff_coulomb(1.0, 1.0), 3.0, 1e-6);
  c.expect(std::isinf(div.value) && !div.converged, "cutoff Coulomb L3 divergence report");
  return c.failures == 0;
}

// -------------------------------------------------------------------------
// criterion 8: Nystrom estimates sit below both analytic bounds for 20
// random gaussian cases at N = 512 nodes, < 5 min
bool criterion_bs_bounds(Checker& c) {
  oracles::Rng rng(4004);
  const double masses[3] = {0.0, 1.0, 5.0};
  for (int t = 0; t < 20; ++t) {
    const double v0 = rng.uniform(0.01, 0.5);
    const double m = masses[t % 3];
    const double im = (rng.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0) * rng.uniform(0.2, 4.0);
    const SpectralPoint z{{rng.uniform(-5.0, 5.0), im}, m};

    const PotentialModel V = PotentialModel::gaussian(v0);
    const double n3 = lp_norm(V, 3.0, 1e-6).value;
    const double n32 = lp_norm(V, 1.5, 1e-6).value;

    const BSDiscretization disc =
        build_bs(z, V, MonteCarloScheme{512, 500 + static_cast<std::uint64_t>(t)});
    const BSNormEstimate est = bs_norm_estimate(disc);

    c.expect(est.value <= lemma1_bound(z, n3), "estimate <= lemma1_bound");
    c.expect(est.value <= lemma2_bound(z, n3, n32), "estimate <= lemma2_bound");
    if (certify_thm1(z.z, z.m, n3).certified)
      c.expect(est.value < 1.0, "certified point has discretized norm < 1");
  }
  return c.failures == 0;
}

// -------------------------------------------------------------------------
// criterion 9: verdicts are strict lhs < 1 comparisons, thm2 is
// m-independent, and the combined region is the union
bool criterion_certification_logic(Checker& c) {
  const std::vector<double> res = {-7.0, -1.2, 0.0, 0.4, 1.0, 3.5};
  const std::vector<double> ims = {0.0, 0.01, 2.0};
  const std::vector<double> n3s = {0.0, 0.3, 1.0 / kThm1Constant, 0.8, 2.0};
  const std::vector<double> n32s = {0.0, 0.2, 1.5};
  const std::vector<double> ms = {0.0, 1.0, 5.0};

  for (double re : res)
    for (double im : ims)
      for (double n3 : n3s)
        for (double m : ms) {
          const Complex lam{re, im};
          const EnclosureReport bare = certify(lam, m, n3);
          c.expect(bare.thm1_certified == (bare.thm1_lhs < 1.0),
                   "thm1 verdict is a strict comparison");
          c.expect(!bare.thm2_lhs.has_value(), "no thm2 without norm32");
          c.expect(bare.certified == bare.thm1_certified, "union without thm2");

          for (double n32 : n32s) {
            const EnclosureReport rep = certify(lam, m, n3, n32);
            c.expect(rep.thm1_certified == (rep.thm1_lhs < 1.0),
                     "thm1 verdict is a strict comparison");
            c.expect(*rep.thm2_certified == (*rep.thm2_lhs < 1.0),
                     "thm2 verdict is a strict comparison");
            c.expect(rep.certified == (rep.thm1_certified || *rep.thm2_certified),
                     "combined region is the union");

            // thm2 must not depend on the mass
            const EnclosureReport other = certify(lam, m == 0.0 ? 5.0 : 0.0, n3, n32);
            c.expect(*other.thm2_lhs == *rep.thm2_lhs &&
                         *other.thm2_certified == *rep.thm2_certified,
                     "thm2 is m-independent");
          }
        }
  return c.failures == 0;
}

struct Criterion {
  int id;
  const char* name;
  std::function<bool(Checker&)> run;
  double time_limit_s;  // 0 = no limit
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Dirac algebra exactness", criterion_dirac_algebra, 1.0},
      {2, "kernel HS norm vs closed form (1e3 points, both reps)",
       criterion_hs_oracle, 10.0},
      {3, "pointwise bound dominance (1e5 points)", criterion_dominance, 10.0},
      {4, "constants vs embedded literals", criterion_constants, 0.0},
      {5, "f identities and finiteness", criterion_f_identities, 0.0},
      {6, "raster of f at m = 5 (201 x 201)", criterion_raster, 0.0},
      {7, "quadrature closed forms and divergence report", criterion_quadrature, 0.0},
      {8, "Birman-Schwinger bound validation (20 cases, N = 512)",
       criterion_bs_bounds, 300.0},
      {9, "certification truth table", criterion_certification_logic, 0.0},
  };

  int failed = 0;
  for (const Criterion& cr : criteria) {
    Checker checker;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
      ok = cr.run(checker);
    } catch (const std::exception& e) {
      ok = false;
      error = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (cr.time_limit_s > 0.0 && elapsed > cr.time_limit_s) {
      ok = false;
      checker.detail << "\n    over time limit (" << cr.time_limit_s << " s)";
    }
    std::printf("%s  criterion %d: %s  (%d checks, %d failures, %.2f s)%s%s\n",
                ok ? "PASS" : "FAIL", cr.id, cr.name, checker.checks,
                checker.failures, elapsed, checker.detail.str().c_str(),
                error.empty() ? "" : ("  exception: " + error).c_str());
    if (!ok) ++failed;
  }
  if (failed == 0)
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
  else
    std::printf("acceptance: %d criteria FAILED\n", failed);
  return failed;
}
