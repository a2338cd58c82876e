#pragma once

#include <array>
#include <functional>
#include <vector>

namespace diraccert::quad {

// Gauss-Legendre nodes/weights on [-1, 1], computed by Newton iteration on
// the Legendre recurrence.  Cached per n; thread-safe.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

struct Estimate {
  double value = 0.0;
  double abs_error = 0.0;
  bool converged = true;
};

// Adaptive quadrature on [a, b] with a G7/G15 error estimate.  Subdivides
// until the local estimate meets tol_rel * |integral| + tol_abs, up to
// max_depth bisection levels.
Estimate integrate(const std::function<double(double)>& f, double a, double b,
                   double tol_rel, double tol_abs = 0.0, int max_depth = 40);

// Adaptive integral over an axis-aligned box (three nested 1D passes).
// tol_abs lets callers integrate regions expected to be negligible cheaply.
Estimate integrate_box(const std::function<double(double, double, double)>& f,
                       const std::array<double, 3>& lo,
                       const std::array<double, 3>& hi, double tol_rel,
                       double tol_abs = 0.0, int max_depth = 24);

}  // namespace diraccert::quad
