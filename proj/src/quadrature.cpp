#include "diraccert/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace diraccert::quad {

namespace {

GaussRule compute_gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev-like initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

struct PanelEval {
  double value;  // G15
  double error;  // |G15 - G7|
};

PanelEval eval_panel(const std::function<double(double)>& f, double a, double b) {
  const GaussRule& g7 = gauss_legendre(7);
  const GaussRule& g15 = gauss_legendre(15);
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double s7 = 0.0, s15 = 0.0;
  // Shared panel geometry but disjoint nodes; cache nothing, f is cheap.
  for (int i = 0; i < 15; ++i) s15 += g15.weights[i] * f(c + h * g15.nodes[i]);
  for (int i = 0; i < 7; ++i) s7 += g7.weights[i] * f(c + h * g7.nodes[i]);
  return {h * s15, std::abs(h * (s15 - s7))};
}

void refine(const std::function<double(double)>& f, double a, double b,
            const PanelEval& pe, double budget, int depth, double& sum,
            double& err_sum, bool& converged) {
  if (pe.error <= budget || depth <= 0) {
    sum += pe.value;
    err_sum += pe.error;
    if (pe.error > budget) converged = false;
    return;
  }
  const double mid = 0.5 * (a + b);
  refine(f, a, mid, eval_panel(f, a, mid), 0.5 * budget, depth - 1, sum, err_sum,
         converged);
  refine(f, mid, b, eval_panel(f, mid, b), 0.5 * budget, depth - 1, sum, err_sum,
         converged);
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

Estimate integrate(const std::function<double(double)>& f, double a, double b,
                   double tol_rel, double tol_abs, int max_depth) {
  Estimate est;
  if (a == b) return est;
  const PanelEval whole = eval_panel(f, a, b);
  const double budget =
      std::max(tol_rel * std::abs(whole.value), tol_abs) + 1e-305;
  double sum = 0.0, err = 0.0;
  bool converged = true;
  refine(f, a, b, whole, budget, max_depth, sum, err, converged);
  est.value = sum;
  est.abs_error = err;
  est.converged = converged;
  return est;
}

Estimate integrate_box(const std::function<double(double, double, double)>& f,
                       const std::array<double, 3>& lo,
                       const std::array<double, 3>& hi, double tol_rel,
                       double tol_abs, int max_depth) {
  // Nested 1D passes; inner passes run at a tightened tolerance so the
  // composed relative error stays near tol_rel.
  const double tol_inner = tol_rel / 3.0;
  const double area_yz = (hi[1] - lo[1]) * (hi[2] - lo[2]);
  const double abs_x = area_yz > 0.0 ? tol_abs / (3.0 * area_yz) : 0.0;
  const double abs_y = hi[2] > lo[2] ? tol_abs / (3.0 * (hi[2] - lo[2])) : 0.0;
  bool all_converged = true;
  double inner_err = 0.0;

  auto gz = [&](double z) {
    auto gy = [&](double y) {
      auto gx = [&](double x) { return f(x, y, z); };
      const Estimate ex = integrate(gx, lo[0], hi[0], tol_inner, abs_x, max_depth);
      if (!ex.converged) all_converged = false;
      inner_err = std::max(inner_err, ex.abs_error);
      return ex.value;
    };
    const Estimate ey = integrate(gy, lo[1], hi[1], tol_inner, abs_y, max_depth);
    if (!ey.converged) all_converged = false;
    inner_err = std::max(inner_err, ey.abs_error);
    return ey.value;
  };
  Estimate out = integrate(gz, lo[2], hi[2], tol_inner, tol_abs / 3.0, max_depth);
  out.converged = out.converged && all_converged;
  out.abs_error += inner_err * area_yz;
  return out;
}

}  // namespace diraccert::quad
