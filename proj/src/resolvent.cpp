#include "diraccert/resolvent.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace diraccert {

namespace {
constexpr double kFourPi = 4.0 * std::numbers::pi;
}

bool is_resolvent_point(const SpectralPoint& p) {
  if (p.m < 0.0) throw std::invalid_argument("mass must be nonnegative");
  return !(p.z.imag() == 0.0 && std::abs(p.z.real()) >= p.m);
}

Complex kappa(const SpectralPoint& p) {
  if (p.m < 0.0) throw std::invalid_argument("mass must be nonnegative");
  Complex w = (p.m - p.z) * (p.m + p.z);
  // Pin m^2 - z^2 to the +i side of the cut when it lands on the real
  // axis, so real z with |z| > m gives Re kappa = 0, Im kappa > 0.
  if (w.imag() == 0.0) w = Complex{w.real(), 0.0};
  return std::sqrt(w);
}

KernelEval kernel(const SpectralPoint& p, const Vec3& x, const Vec3& xp,
                  const DiracBasis& basis) {
  const Vec3 d{x[0] - xp[0], x[1] - xp[1], x[2] - xp[2]};
  const double r2 = d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
  if (r2 == 0.0) throw std::domain_error("kernel: coincident points");
  const double r = std::sqrt(r2);

  const Complex k = kappa(p);
  const Complex prefactor = std::exp(-k * r) / (kFourPi * r);

  // i alpha.d (1/r^2 + kappa/r) + m alpha_4 + z I
  const Complex radial = Complex{0.0, 1.0} * (1.0 / r2 + k / r);
  Matrix4 m;
  for (int c = 0; c < 3; ++c) {
    if (d[c] == 0.0) continue;
    m += basis.alpha_vec(c) * (radial * d[c]);
  }
  m += basis.alpha4() * Complex{p.m, 0.0};
  m += Matrix4::identity() * p.z;
  m *= prefactor;

  return KernelEval{m, d, k};
}

double hs_closed_form(const SpectralPoint& p, double r) {
  if (!(r > 0.0)) throw std::domain_error("hs_closed_form: r must be positive");
  const double rk = kappa(p).real();
  const double rz = p.z.real();
  const double poly = 1.0 + 2.0 * rk * r + 2.0 * (rk * rk + rz * rz) * r * r;
  return 4.0 * std::exp(-2.0 * rk * r) / (kFourPi * kFourPi * r * r * r * r) * poly;
}

double hs_bound(const SpectralPoint& p, double r) {
  if (!(r > 0.0)) throw std::domain_error("hs_bound: r must be positive");
  const double rk = kappa(p).real();
  const double rz = p.z.real();
  return kC1 * kC1 / (r * r * r * r) +
         kC2 * kC2 * rz * rz * std::exp(-2.0 * rk * r) / (r * r);
}

}  // namespace diraccert
