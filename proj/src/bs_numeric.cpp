#include "diraccert/bs_numeric.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "diraccert/enclosure.hpp"
#include "diraccert/quadrature.hpp"

namespace diraccert {

namespace {

double halton(int index, int base) {
  double f = 1.0, r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * (index % base);
    index /= base;
  }
  return r;
}

// Acklam's rational approximation of the inverse normal CDF (~1e-9
// absolute); pure arithmetic, so node sets are identical across platforms.
double inv_normal_cdf(double p) {
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double plow = 0.02425;
  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - plow) return -inv_normal_cdf(1.0 - p);
  const double q = p - 0.5, r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

std::vector<Complex> random_unit_vector(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&rng]() { return (rng() >> 11) * 0x1.0p-53; };
  std::vector<Complex> v(dim);
  double norm2 = 0.0;
  for (int i = 0; i < dim; ++i) {
    // Box-Muller; hand-rolled so results are identical across platforms.
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * uniform();
    v[i] = Complex{r * std::cos(t), r * std::sin(t)};
    norm2 += std::norm(v[i]);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& c : v) c *= inv;
  return v;
}

}  // namespace

BSDiscretization build_bs(const SpectralPoint& z, const PotentialModel& V,
                          const BSScheme& scheme, const DiracBasis& basis) {
  if (!V.has_function())
    throw std::invalid_argument("build_bs: potential has no function");
  if (!V.scalar())
    throw std::invalid_argument(
        "build_bs: matrix-valued potentials are unsupported (the matrix square "
        "root of W is not implemented); use a scalar potential");
  if (!is_resolvent_point(z))
    throw std::domain_error(
        "build_bs: z lies on the essential spectrum; the discretization is "
        "defined off (-inf,-m] u [+m,+inf) only");

  BSDiscretization disc;
  disc.z = z;
  double exclusion = 0.0;

  if (const auto* tg = std::get_if<TensorGaussScheme>(&scheme)) {
    const int n = tg->nodes_per_axis;
    if (n < 1 || 4 * n * n * n > 8192)
      throw std::invalid_argument("build_bs: tensor scheme exceeds the 4N <= 8192 cap");
    const quad::GaussRule& rule = quad::gauss_legendre(n);
    const double h = tg->half_width;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          disc.nodes.push_back({h * rule.nodes[a], h * rule.nodes[b], h * rule.nodes[c]});
          disc.weights.push_back(h * h * h * rule.weights[a] * rule.weights[b] *
                                 rule.weights[c]);
        }
  } else {
    const auto& mc = std::get<MonteCarloScheme>(scheme);
    if (mc.node_count < 1 || 4 * mc.node_count > 8192)
      throw std::invalid_argument("build_bs: node count exceeds the 4N <= 8192 cap");
    if (!(mc.length_scale > 0.0))
      throw std::invalid_argument("build_bs: length_scale must be positive");
    disc.seed = mc.seed;
    exclusion = 0.4 * mc.length_scale;

    std::mt19937_64 rng(mc.seed);
    auto uniform = [&rng]() { return (rng() >> 11) * 0x1.0p-53; };
    const double shift[3] = {uniform(), uniform(), uniform()};
    const int bases[3] = {2, 3, 5};
    const double s = mc.length_scale;
    const double density0 = std::pow(2.0 * std::numbers::pi * s * s, -1.5);
    for (int i = 0; i < mc.node_count; ++i) {
      Vec3 x;
      for (int k = 0; k < 3; ++k) {
        double u = std::fmod(halton(i + 1, bases[k]) + shift[k], 1.0);
        u = std::min(std::max(u, 1e-12), 1.0 - 1e-12);
        x[k] = s * inv_normal_cdf(u);
      }
      const double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
      const double density = density0 * std::exp(-r2 / (2.0 * s * s));
      disc.nodes.push_back(x);
      disc.weights.push_back(1.0 / (mc.node_count * density));
    }
  }

  const int n_nodes = disc.node_count();
  // Left factor sqrt(w_i) |v|^{1/2}, right factor sign(v) |v|^{1/2} sqrt(w_j).
  std::vector<double> left(n_nodes), right(n_nodes);
  for (int i = 0; i < n_nodes; ++i) {
    const double v = V.scalar_value(disc.nodes[i]);
    const double half = std::sqrt(std::abs(v));
    const double sw = std::sqrt(disc.weights[i]);
    left[i] = sw * half;
    right[i] = (v < 0.0 ? -1.0 : 1.0) * half * sw;
    if (v == 0.0) right[i] = 0.0;
  }

  const int dim = disc.dim();
  disc.matrix.assign(static_cast<size_t>(dim) * dim, Complex{});
  for (int i = 0; i < n_nodes; ++i) {
    if (left[i] == 0.0) continue;
    for (int j = 0; j < n_nodes; ++j) {
      if (j == i || right[j] == 0.0) continue;
      const double dx = disc.nodes[i][0] - disc.nodes[j][0];
      const double dy = disc.nodes[i][1] - disc.nodes[j][1];
      const double dz = disc.nodes[i][2] - disc.nodes[j][2];
      if (dx * dx + dy * dy + dz * dz <= exclusion * exclusion) continue;
      const Matrix4 k = kernel(z, disc.nodes[i], disc.nodes[j], basis).matrix;
      const double factor = left[i] * right[j];
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          disc.matrix[static_cast<size_t>(4 * i + a) * dim + (4 * j + b)] =
              factor * k(a, b);
    }
  }
  return disc;
}

BSNormEstimate bs_norm_estimate(const BSDiscretization& disc, int max_iterations,
                                std::uint64_t seed) {
  BSNormEstimate est;
  est.node_count = disc.node_count();
  est.seed = seed;

  const int dim = disc.dim();
  if (dim == 0) {
    est.converged = true;
    return est;
  }
  const Complex* m = disc.matrix.data();

  std::vector<Complex> v = random_unit_vector(dim, seed);
  std::vector<Complex> y(dim), u(dim);

  double sigma = 0.0;
  for (int it = 0; it < max_iterations; ++it) {
    est.estimator_iterations = it + 1;
    // y = M v
    for (int i = 0; i < dim; ++i) {
      Complex acc{};
      const Complex* row = m + static_cast<size_t>(i) * dim;
      for (int j = 0; j < dim; ++j) acc += row[j] * v[j];
      y[i] = acc;
    }
    double s2 = 0.0;
    for (int i = 0; i < dim; ++i) s2 += std::norm(y[i]);
    const double s = std::sqrt(s2);  // = ||M v|| = current sigma estimate
    if (s == 0.0) {
      est.value = 0.0;
      est.converged = true;
      return est;
    }
    // u = M* y = (M*M) v
    std::fill(u.begin(), u.end(), Complex{});
    for (int i = 0; i < dim; ++i) {
      const Complex* row = m + static_cast<size_t>(i) * dim;
      const Complex yi = y[i];
      for (int j = 0; j < dim; ++j) u[j] += std::conj(row[j]) * yi;
    }
    // Residual criterion: || (M*M) v - s^2 v || <= 1e-8 s^2 bounds the
    // eigenvalue error directly (a plain successive-difference test can
    // stop early when the two leading singular values are close).
    double res2 = 0.0;
    double un2 = 0.0;
    for (int j = 0; j < dim; ++j) {
      res2 += std::norm(u[j] - s2 * v[j]);
      un2 += std::norm(u[j]);
    }
    const double un = std::sqrt(un2);
    for (int j = 0; j < dim; ++j) v[j] = u[j] / un;

    if (std::sqrt(res2) <= 1e-8 * s2) {
      est.value = s;
      est.converged = true;
      return est;
    }
    sigma = s;
  }
  est.value = sigma;
  est.converged = false;  // iteration cap reached
  return est;
}

double lemma1_bound(const SpectralPoint& z, double norm3) {
  if (norm3 < 0.0) throw std::invalid_argument("norm3 must be nonnegative");
  if (norm3 == 0.0) return 0.0;
  const double f = f_function(z.z, z.m);
  if (std::isinf(f)) return std::numeric_limits<double>::infinity();
  return kLemmaL3Coeff * f * norm3;
}

double lemma2_bound(const SpectralPoint& z, double norm3, double norm32) {
  if (norm3 < 0.0 || norm32 < 0.0)
    throw std::invalid_argument("norms must be nonnegative");
  return kLemmaL3Coeff * norm3 + kThm2Constant * std::abs(z.z.real()) * norm32;
}

}  // namespace diraccert
