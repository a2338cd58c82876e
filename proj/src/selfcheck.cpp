#include "diraccert/selfcheck.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "diraccert/bs_numeric.hpp"
#include "diraccert/enclosure.hpp"
#include "diraccert/potential.hpp"
#include "diraccert/resolvent.hpp"

namespace diraccert {

namespace {

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double uniform(double a, double b) {
    return a + (b - a) * ((gen() >> 11) * 0x1.0p-53);
  }
};

bool exactly_zero(const Matrix4& m) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (m(i, j) != Complex{}) return false;
  return true;
}

void check_anticommutation(SuiteResult& suite, const DiracBasis& basis,
                           bool corrupt) {
  std::array<Matrix4, 4> alpha = basis.alpha;
  if (corrupt) alpha[0](0, 0) += 1e-3;

  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      Matrix4 residual = alpha[mu] * alpha[nu] + alpha[nu] * alpha[mu];
      if (mu == nu) residual -= Matrix4::identity() * Complex{2.0, 0.0};
      ++suite.checks;
      if (!exactly_zero(residual)) ++suite.failures;
    }
  for (int mu = 0; mu < 4; ++mu) {
    ++suite.checks;
    if (alpha[mu].trace() != Complex{}) ++suite.failures;
  }
  for (int k = 0; k < 3; ++k) {
    ++suite.checks;
    if ((alpha[3] * alpha[k]).trace() != Complex{}) ++suite.failures;
  }
}

SuiteResult suite_anticommutation(const SelfCheckOptions& opts) {
  SuiteResult suite;
  suite.name = "anticommutation";
  check_anticommutation(suite, dirac_basis(Representation::standard),
                        opts.corrupt_representation);
  check_anticommutation(suite, dirac_basis(Representation::weyl), false);
  if (opts.corrupt_representation)
    suite.notes.push_back("representation corruption hook active");
  return suite;
}

SpectralPoint random_resolvent_point(Rng& rng) {
  for (;;) {
    const double m = rng.uniform(0.0, 1.0) < 0.25 ? 0.0 : rng.uniform(0.0, 5.0);
    const SpectralPoint p{Complex{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)}, m};
    if (is_resolvent_point(p)) return p;
  }
}

SuiteResult suite_hs_oracle(const SelfCheckOptions& opts) {
  SuiteResult suite;
  suite.name = "hs_oracle";
  for (Representation rep : {Representation::standard, Representation::weyl}) {
    Rng rng(opts.seed + (rep == Representation::weyl ? 1 : 0));
    const DiracBasis& basis = dirac_basis(rep);
    for (int t = 0; t < 500; ++t) {
      const SpectralPoint p = random_resolvent_point(rng);
      Vec3 x{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
      Vec3 xp{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
      const double r = std::sqrt((x[0] - xp[0]) * (x[0] - xp[0]) +
                                 (x[1] - xp[1]) * (x[1] - xp[1]) +
                                 (x[2] - xp[2]) * (x[2] - xp[2]));
      if (r < 1e-6) {
        --t;
        continue;
      }
      const double via_kernel = hs_norm(kernel(p, x, xp, basis).matrix);
      const double closed = hs_closed_form(p, r);
      ++suite.checks;
      if (!(std::abs(via_kernel * via_kernel - closed) <= 1e-12 * closed))
        ++suite.failures;
    }
  }
  return suite;
}

SuiteResult suite_dominance(const SelfCheckOptions& opts) {
  SuiteResult suite;
  suite.name = "dominance";
  Rng rng(opts.seed + 17);
  for (int t = 0; t < 100000; ++t) {
    const double m = rng.uniform(0.0, 1.0) < 0.25 ? 0.0 : rng.uniform(0.0, 8.0);
    Complex z{rng.uniform(-15.0, 15.0), rng.uniform(-15.0, 15.0)};
    if (rng.uniform(0.0, 1.0) < 0.2) z = Complex{z.real(), 0.0};  // include the rays
    const double r = std::exp(rng.uniform(std::log(1e-3), std::log(1e3)));
    const SpectralPoint p{z, m};
    ++suite.checks;
    if (!(hs_closed_form(p, r) <= hs_bound(p, r))) ++suite.failures;
  }
  return suite;
}

SuiteResult suite_constants() {
  SuiteResult suite;
  suite.name = "constants";
  const double pi = std::numbers::pi;
  const double em1 = std::exp(-1.0), em2 = std::exp(-2.0);
  const struct {
    const char* name;
    double embedded;
    double runtime;
  } items[] = {
      {"c1", kC1, std::sqrt(1.0 + em1 + 2.0 * em2) / (2.0 * pi)},
      {"c2", kC2, std::sqrt(2.0) / (2.0 * pi)},
      {"c2_damped", kC2Damped, std::sqrt(2.0) / (2.0 * pi) * em1},
      {"C", kThm1Constant, std::cbrt(pi / 2.0) * std::sqrt(1.0 + em1 + 2.0 * em2)},
      {"C_via_c1", kThm1Constant, std::cbrt(pi / 2.0) * 2.0 * pi * kC1},
      {"Cprime", kThm2Constant,
       std::pow(2.0, 17.0 / 6.0) / (3.0 * std::pow(pi, 2.0 / 3.0))},
      {"lemma_l3", kLemmaL3Coeff, std::cbrt(pi / 2.0) * std::sqrt(1.0 + em1 + em2)},
      {"form_bound", kFormBoundThreshold, std::cbrt(2.0 * pi * pi)},
  };
  for (const auto& item : items) {
    ++suite.checks;
    if (!(std::abs(item.runtime - item.embedded) <= 1e-12 * item.embedded))
      ++suite.failures;
    std::ostringstream note;
    note.precision(12);
    note << item.name << " = " << item.embedded;
    suite.notes.push_back(note.str());
  }
  return suite;
}

SuiteResult suite_symmetry(const SelfCheckOptions& opts) {
  SuiteResult suite;
  suite.name = "symmetry";
  Rng rng(opts.seed + 31);
  for (int t = 0; t < 10000; ++t) {
    const double m = rng.uniform(0.0, 1.0) < 0.25 ? 0.0 : rng.uniform(0.0, 5.0);
    const Complex lam{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
    const double f = f_function(lam, m);
    ++suite.checks;
    if (f_function(std::conj(lam), m) != f) ++suite.failures;
    ++suite.checks;
    if (f_function(-lam, m) != f) ++suite.failures;
    if (lam.imag() != 0.0) {
      const double massless = std::abs(lam) / std::abs(lam.imag());
      const double f0 = f_function(lam, 0.0);
      ++suite.checks;
      if (!(std::abs(f0 - massless) <= 1e-12 * massless)) ++suite.failures;
    }
  }
  return suite;
}

}  // namespace

std::vector<SuiteResult> run_selfcheck(const SelfCheckOptions& opts) {
  return {suite_anticommutation(opts), suite_hs_oracle(opts), suite_dominance(opts),
          suite_constants(), suite_symmetry(opts)};
}

bool report_selfcheck(std::ostream& os, const std::vector<SuiteResult>& results) {
  bool all_passed = true;
  for (const SuiteResult& suite : results) {
    os << "suite " << suite.name << ": " << suite.checks << " checks, "
       << suite.failures << " failures\n";
    for (const std::string& note : suite.notes) os << "  " << note << "\n";
    all_passed = all_passed && suite.passed();
  }
  os << (all_passed ? "all suites passed" : "SELF-CHECK FAILED") << "\n";
  return all_passed;
}

}  // namespace diraccert
