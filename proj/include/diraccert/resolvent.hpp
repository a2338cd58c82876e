#pragma once

#include "diraccert/dirac_basis.hpp"
#include "diraccert/matrix4.hpp"

namespace diraccert {

// A point z of the complex energy plane together with the mass m >= 0.
// The free operator H_0 = -i alpha.grad + m alpha_4 has spectrum
// (-inf,-m] u [+m,+inf); z is a resolvent point iff it avoids those rays.
struct SpectralPoint {
  Complex z;
  double m = 0.0;
};

bool is_resolvent_point(const SpectralPoint& p);

// Principal branch of sqrt(m^2 - z^2).  Re >= 0 always, and Re > 0 exactly
// at resolvent points.  When m^2 - z^2 falls on the negative real axis the
// result is normalised to the +i side of the cut.
Complex kappa(const SpectralPoint& p);

struct KernelEval {
  Matrix4 matrix;      // kernel value, units 1/length^2
  Vec3 displacement;   // x - x'
  Complex kappa;       // sqrt(m^2 - z^2), principal branch
};

// Free resolvent integral kernel at (x, x'):
//
//   e^{-kappa r} / (4 pi r) * [ i alpha.d / r^2 + kappa i alpha.d / r
//                               + m alpha_4 + z I ],   d = x - x', r = |d|.
//
// Throws std::domain_error for coincident points (kernel singularity).
// The formula is evaluated for any z; on the rays (-inf,-m] u [+m,+inf)
// it yields the boundary extension with Re kappa = 0 (callers that need a
// genuine resolvent point must check is_resolvent_point themselves).
KernelEval kernel(const SpectralPoint& p, const Vec3& x, const Vec3& xp,
                  const DiracBasis& basis = dirac_basis());

// Squared Hilbert-Schmidt norm of the kernel, in closed form:
//
//   4 e^{-2 Re(kappa) r} / ((4 pi)^2 r^4)
//     * (1 + 2 Re(kappa) r + 2 [Re(kappa)^2 + Re(z)^2] r^2).
//
// Defined for every z (extends continuously to the rays via Re kappa = 0).
// Throws std::domain_error for r <= 0.
double hs_closed_form(const SpectralPoint& p, double r);

// Pointwise upper bound for hs_closed_form:
//
//   c1^2 / r^4 + c2^2 Re(z)^2 e^{-2 Re(kappa) r} / r^2 .
//
// Throws std::domain_error for r <= 0.
double hs_bound(const SpectralPoint& p, double r);

// Bound coefficients, evaluated offline to 40 significant digits
// (tests recompute them at runtime precision and compare at 1e-12):
//   kC1       = sqrt(1 + e^-1 + 2 e^-2) / (2 pi)
//   kC2       = sqrt(2) / (2 pi)
//   kC2Damped = sqrt(2 e^-2) / (2 pi) = kC2 / e, the tail coefficient left
//               after flattening e^{-2 Re(kappa) r} / r^2 against 1 / r^4.
inline constexpr double kC1 = 0.2037276529043856480203825651560093443969;
inline constexpr double kC2 = 0.2250790790392765173887997977516851456661;
inline constexpr double kC2Damped = 0.08280196581635194211449440729367507798;

}  // namespace diraccert
