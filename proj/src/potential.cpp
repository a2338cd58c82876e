#include "diraccert/potential.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "diraccert/quadrature.hpp"

namespace diraccert {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoOverPi = 2.0 / std::numbers::pi;

double radius(const Vec3& x) {
  return std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
}
}  // namespace

PotentialModel PotentialModel::scalar_radial(std::function<double(double)> profile,
                                             bool singular_at_origin) {
  PotentialModel p;
  p.kind_ = Kind::scalar_radial;
  p.radial_ = std::move(profile);
  p.singular_at_origin_ = singular_at_origin;
  return p;
}

PotentialModel PotentialModel::scalar_general(std::function<double(const Vec3&)> value) {
  PotentialModel p;
  p.kind_ = Kind::scalar_general;
  p.scalar_ = std::move(value);
  return p;
}

PotentialModel PotentialModel::matrix_general(std::function<Matrix4(const Vec3&)> value) {
  PotentialModel p;
  p.kind_ = Kind::matrix_general;
  p.matrix_ = std::move(value);
  return p;
}

PotentialModel PotentialModel::gaussian(double v0, double width) {
  if (!(width > 0.0)) throw std::invalid_argument("gaussian: width must be positive");
  return scalar_radial([v0, width](double r) {
    const double q = r / width;
    return v0 * std::exp(-q * q);
  });
}

PotentialModel PotentialModel::cutoff_coulomb(double Z, double R) {
  if (!(R > 0.0)) throw std::invalid_argument("cutoff_coulomb: R must be positive");
  return scalar_radial(
      [Z, R](double r) { return (r > 0.0 && r <= R) ? Z / r : 0.0; },
      /*singular_at_origin=*/true);
}

PotentialModel PotentialModel::bump(double v0, double R) {
  if (!(R > 0.0)) throw std::invalid_argument("bump: R must be positive");
  return scalar_radial([v0, R](double r) { return r <= R ? v0 : 0.0; });
}

PotentialModel PotentialModel::declared(double norm3, std::optional<double> norm32) {
  if (norm3 < 0.0 || (norm32 && *norm32 < 0.0))
    throw std::invalid_argument("declared norms must be nonnegative");
  PotentialModel p;
  p.kind_ = Kind::declared_only;
  p.declared_norm3 = norm3;
  p.declared_norm32 = norm32;
  return p;
}

double PotentialModel::pointwise_norm(const Vec3& x) const {
  switch (kind_) {
    case Kind::scalar_radial: {
      const double r = radius(x);
      if (r == 0.0 && singular_at_origin_)
        throw std::domain_error("potential is singular at the origin");
      return std::abs(radial_(r));
    }
    case Kind::scalar_general:
      return std::abs(scalar_(x));
    case Kind::matrix_general:
      return operator_norm(matrix_(x));
    case Kind::declared_only:
      break;
  }
  throw std::logic_error("pointwise_norm: potential has no function");
}

double PotentialModel::scalar_value(const Vec3& x) const {
  if (kind_ == Kind::scalar_radial) {
    const double r = radius(x);
    if (r == 0.0 && singular_at_origin_)
      throw std::domain_error("potential is singular at the origin");
    return radial_(r);
  }
  if (kind_ == Kind::scalar_general) return scalar_(x);
  throw std::logic_error("scalar_value: not a scalar potential");
}

Matrix4 PotentialModel::matrix_value(const Vec3& x) const {
  if (kind_ == Kind::matrix_general) return matrix_(x);
  if (scalar()) return Matrix4::identity() * Complex{scalar_value(x), 0.0};
  throw std::logic_error("matrix_value: potential has no function");
}

namespace {

struct ShellScan {
  double total = 0.0;
  double abs_error = 0.0;
  bool converged = true;
  bool divergent = false;
};

// Accumulates shell integrals produced by `next_shell` until the last one
// is negligible, a divergence pattern appears, or the budget runs out.
// `grow_ratio_flag`: ratio threshold treated as "not decaying" (0.9 toward
// a singularity, where a log divergence gives constant shells; 0.98 for
// the outer tail, where any non-decaying shell train means divergence).
template <typename NextShell>
void scan_shells(ShellScan& s, NextShell next_shell, int max_shells,
                 double stop_rel, double grow_ratio_flag) {
  double prev_shell = -1.0;
  int non_decaying = 0;
  int negligible = 0;
  double last_ratio = 0.0;
  for (int k = 0; k < max_shells; ++k) {
    const quad::Estimate shell = next_shell(k);
    if (!shell.converged) s.converged = false;
    s.total += shell.value;
    s.abs_error += shell.abs_error;

    const double scale = std::max(s.total, 1e-300);
    if (shell.value <= stop_rel * scale) {
      // Require two consecutive negligible shells so a one-octave gap in
      // the support does not end the scan prematurely.
      if (++negligible >= 2) {
        if (last_ratio > 0.0 && last_ratio < 0.95)
          s.abs_error += shell.value * last_ratio / (1.0 - last_ratio);
        return;
      }
    } else {
      negligible = 0;
    }

    if (prev_shell > 1e-14 * scale && shell.value > 0.0) {
      last_ratio = shell.value / prev_shell;
      non_decaying = last_ratio >= grow_ratio_flag ? non_decaying + 1 : 0;
      if (non_decaying >= 3) {
        s.divergent = true;
        return;
      }
    }
    prev_shell = shell.value;
  }
  s.converged = false;  // budget exhausted
  if (non_decaying >= 1 && last_ratio >= 1.0) s.divergent = true;
}

QuadratureResult divergence_report() {
  return {kInf, kInf, false};
}

QuadratureResult lp_norm_radial(const PotentialModel& V, double p, double tol) {
  auto integrand = [&V, p](double r) {
    const double a = std::abs(V.pointwise_norm({r, 0.0, 0.0}));
    return 4.0 * std::numbers::pi * r * r * std::pow(a, p);
  };
  const double stop_rel = tol / 10.0;
  const double shell_tol = tol / 4.0;

  ShellScan scan;
  const double r0 = 1.0;
  auto piece = [&](double a, double b) {
    return quad::integrate(integrand, a, b, shell_tol, 0.0, 48);
  };

  // Core octave [r0/2, r0].
  {
    const quad::Estimate core = piece(0.5 * r0, r0);
    scan.total += core.value;
    scan.abs_error += core.abs_error;
    if (!core.converged) scan.converged = false;
  }
  // Dyadic refinement toward the origin: shells [r0 2^{-k-1}, r0 2^{-k}].
  scan_shells(
      scan,
      [&](int k) {
        const double hi = r0 * std::ldexp(1.0, -(k + 1));
        return piece(0.5 * hi, hi);
      },
      60, stop_rel, 0.9);
  if (scan.divergent) return divergence_report();

  // Doubling tail: shells [r0 2^k, r0 2^{k+1}].
  scan_shells(
      scan,
      [&](int k) {
        const double lo = r0 * std::ldexp(1.0, k);
        return piece(lo, 2.0 * lo);
      },
      50, stop_rel, 0.98);
  if (scan.divergent) return divergence_report();

  QuadratureResult res;
  if (scan.total <= 0.0) return {0.0, 0.0, true};
  res.value = std::pow(scan.total, 1.0 / p);
  res.estimated_relative_error = scan.abs_error / scan.total / p;
  res.converged = scan.converged && res.estimated_relative_error <= tol;
  return res;
}

// The region between the cubes [-h, h]^3 and [-2h, 2h]^3 as six boxes.
quad::Estimate integrate_cube_shell(
    const std::function<double(double, double, double)>& f, double h,
    double tol_rel, double tol_abs) {
  struct Box {
    std::array<double, 3> lo, hi;
  };
  const double H = 2.0 * h;
  const Box boxes[6] = {
      {{-H, -H, -H}, {H, H, -h}},  // bottom slab
      {{-H, -H, h}, {H, H, H}},    // top slab
      {{-H, -H, -h}, {-h, H, h}},  // four side slabs around the middle
      {{h, -H, -h}, {H, H, h}},
      {{-h, -H, -h}, {h, -h, h}},
      {{-h, h, -h}, {h, H, h}},
  };
  quad::Estimate total;
  for (const Box& b : boxes) {
    const quad::Estimate e =
        quad::integrate_box(f, b.lo, b.hi, tol_rel, tol_abs / 6.0);
    total.value += e.value;
    total.abs_error += e.abs_error;
    total.converged = total.converged && e.converged;
  }
  return total;
}

QuadratureResult lp_norm_cube(const PotentialModel& V, double p, double tol) {
  auto integrand = [&V, p](double x, double y, double z) {
    return std::pow(V.pointwise_norm({x, y, z}), p);
  };
  // Core cube [-1, 1]^3, then doubling shells until two in a row are
  // negligible.  Each shell carries an absolute budget tied to the running
  // total, so far-out shells of a decaying potential cost almost nothing.
  double total = 0.0;
  double abs_err = 0.0;
  bool converged = true;
  {
    const quad::Estimate core =
        quad::integrate_box(integrand, {-1.0, -1.0, -1.0}, {1.0, 1.0, 1.0}, tol / 4.0);
    total = core.value;
    abs_err = core.abs_error;
    converged = core.converged;
  }
  double prev_shell = -1.0;
  double last_ratio = 0.0;
  double last_shell = 0.0;
  int growing = 0;
  int negligible = 0;
  for (int k = 0; k <= 24; ++k) {
    const double h = std::ldexp(1.0, k);
    const double scale = std::max(total, 1e-300);
    const quad::Estimate shell =
        integrate_cube_shell(integrand, h, tol / 4.0, tol / 20.0 * scale);
    if (!shell.converged) converged = false;
    total += shell.value;
    abs_err += shell.abs_error;
    last_shell = shell.value;

    if (shell.value <= tol / 10.0 * std::max(total, 1e-300)) {
      ++negligible;
    } else {
      negligible = 0;
    }
    if (negligible >= 2) {
      if (total <= 0.0) return {0.0, 0.0, true};
      QuadratureResult res;
      res.value = std::pow(total, 1.0 / p);
      res.estimated_relative_error = (abs_err + last_shell) / total / p;
      res.converged = converged && res.estimated_relative_error <= tol;
      return res;
    }
    if (prev_shell > 0.0 && shell.value > 0.0) {
      last_ratio = shell.value / prev_shell;
      growing = shell.value >= 1.5 * prev_shell ? growing + 1 : 0;
      if (growing >= 3) return divergence_report();
    }
    prev_shell = shell.value;
  }
  // Budget exhausted.  Non-decaying shells mean divergence; slowly
  // decaying ones mean an unconverged but finite estimate.
  if (last_ratio >= 1.0) return divergence_report();
  return {std::pow(std::max(total, 0.0), 1.0 / p), kInf, false};
}

}  // namespace

QuadratureResult lp_norm(const PotentialModel& V, double p, double tol) {
  if (!(p == 3.0 || p == 1.5))
    throw std::invalid_argument("lp_norm: p must be 3 or 3/2");
  if (!(tol > 0.0 && tol <= 0.1))
    throw std::invalid_argument("lp_norm: tol must lie in (0, 0.1]");
  if (!V.has_function())
    throw std::logic_error("lp_norm: potential has no function (declared norms only)");
  if (V.kind() == PotentialModel::Kind::scalar_radial)
    return lp_norm_radial(V, p, tol);
  return lp_norm_cube(V, p, tol);
}

NormValue resolve_norm(const PotentialModel& V, double p, double tol) {
  NormValue nv;
  const std::optional<double>& declared =
      p == 3.0 ? V.declared_norm3 : V.declared_norm32;
  if (declared.has_value()) {
    nv.value = *declared;
    nv.declared = true;
    nv.quadrature = {*declared, 0.0, true};
    return nv;
  }
  nv.quadrature = lp_norm(V, p, tol);
  nv.value = nv.quadrature.value;
  return nv;
}

bool check_proposition_sufficient(double v1_norm3) {
  if (v1_norm3 < 0.0) throw std::invalid_argument("norm must be nonnegative");
  return v1_norm3 < kFormBoundThreshold;
}

bool check_kato_pointwise(const PotentialModel& V, double a, double b,
                          int samples, std::uint64_t seed) {
  if (!(a > 0.0 && a < 1.0))
    throw std::invalid_argument("check_kato_pointwise: a must lie in (0,1)");
  if (samples <= 0)
    throw std::invalid_argument("check_kato_pointwise: samples must be positive");

  std::mt19937_64 rng(seed);
  auto uniform = [&rng]() {
    return (rng() >> 11) * 0x1.0p-53;  // in [0, 1)
  };
  auto normal_pair = [&](double& n1, double& n2) {
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * uniform();
    n1 = r * std::cos(t);
    n2 = r * std::sin(t);
  };

  for (int s = 0; s < samples; ++s) {
    double u = uniform();
    while (u == 0.0) u = uniform();
    const double r = std::tan(0.5 * std::numbers::pi * u);  // half-Cauchy radius
    double g0, g1, g2, g3;
    normal_pair(g0, g1);
    normal_pair(g2, g3);
    const double gn = std::sqrt(g0 * g0 + g1 * g1 + g2 * g2);
    if (gn == 0.0 || r == 0.0 || !std::isfinite(r)) {
      --s;  // degenerate draw, retry
      continue;
    }
    const Vec3 x{r * g0 / gn, r * g1 / gn, r * g2 / gn};
    if (V.pointwise_norm(x) > a * kTwoOverPi / r + b) return false;
  }
  return true;
}

}  // namespace diraccert
