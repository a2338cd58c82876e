#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "diraccert/potential.hpp"
#include "diraccert/resolvent.hpp"

namespace diraccert {

// Quadrature schemes for the Nystrom discretization.
struct TensorGaussScheme {
  int nodes_per_axis = 8;   // total node count is nodes_per_axis^3
  double half_width = 8.0;  // cube [-h, h]^3
};
// Importance-sampled randomized-QMC nodes: a Cranley-Patterson shifted
// Halton sequence mapped through the inverse normal CDF, so the nodes are
// low-discrepancy under an isotropic normal density of standard deviation
// length_scale, with weights w_i = 1 / (N p(x_i)).  Suits potentials that
// decay at least like a gaussian of width ~ length_scale * sqrt(2); slower
// decay calls for a larger length_scale.
struct MonteCarloScheme {
  int node_count = 512;
  std::uint64_t seed = 1;
  double length_scale = 1.2;
};
using BSScheme = std::variant<TensorGaussScheme, MonteCarloScheme>;

// Dense Nystrom discretization of the Birman-Schwinger operator
//   W^{1/2} (H_0 - z)^{-1} U W^{1/2},   V = U W,
// for scalar potentials v (so W = |v| I and U = sign(v) I).  Block (i, j),
// i != j, of the (4N)x(4N) matrix is
//   sqrt(w_i) |v(x_i)|^{1/2} K_z(x_i, x_j) sign(v(x_j)) |v(x_j)|^{1/2} sqrt(w_j);
// diagonal blocks are zero, and for the Monte-Carlo scheme so are blocks of
// node pairs closer than 0.4 * length_scale (the |x-x'|^{-2} singularity is
// integrable, so excluding a shrinking near-field biases the estimate low
// -- acceptable for a module that only validates upper bounds, and it keeps
// the estimate from being dominated by whichever random pair lands nearest
// the kernel singularity).
struct BSDiscretization {
  std::vector<Vec3> nodes;
  std::vector<double> weights;
  SpectralPoint z;
  std::vector<Complex> matrix;  // row-major, dim() x dim()
  std::uint64_t seed = 0;       // 0 for deterministic schemes

  int node_count() const { return static_cast<int>(nodes.size()); }
  int dim() const { return 4 * node_count(); }
};

// Throws std::invalid_argument for non-scalar or norms-only potentials and
// for node counts with 4N > 8192; std::domain_error when z lies on the
// essential spectrum.
BSDiscretization build_bs(const SpectralPoint& z, const PotentialModel& V,
                          const BSScheme& scheme,
                          const DiracBasis& basis = dirac_basis());

struct BSNormEstimate {
  double value = 0.0;
  int node_count = 0;
  int estimator_iterations = 0;
  std::uint64_t seed = 0;
  bool converged = false;
};

// Largest singular value of the discretized matrix via power iteration on
// M*M with a seeded start vector; converges at 1e-8 relative or stops at
// the iteration cap with converged = false.
BSNormEstimate bs_norm_estimate(const BSDiscretization& disc,
                                int max_iterations = 500,
                                std::uint64_t seed = 7);

// Analytic norm bounds the estimate is validated against.  Coefficient of
// the L^3 term, offline to 40 digits:
//   (pi/2)^{1/3} sqrt(1 + e^-1 + e^-2)
// (note the single e^-2 here versus the 2 e^-2 inside kThm1Constant, so
// lemma1_bound <= kThm1Constant * f * norm3 always).
inline constexpr double kLemmaL3Coeff = 1.425226218081344313577843964221166392084;

// kLemmaL3Coeff * sqrt(1 + Re(z)^2 / Re(kappa)^2) * norm3;
// +inf when Re kappa = 0 with Re z != 0.
double lemma1_bound(const SpectralPoint& z, double norm3);

// kLemmaL3Coeff * norm3 + kThm2Constant * |Re z| * norm32; m-independent.
double lemma2_bound(const SpectralPoint& z, double norm3, double norm32);

}  // namespace diraccert
