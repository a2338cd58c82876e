#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "diraccert/matrix4.hpp"

namespace diraccert {

struct QuadratureResult {
  double value = 0.0;
  double estimated_relative_error = 0.0;
  bool converged = false;
};

// Matrix-valued potential V on R^3.  Three structural kinds plus a
// norms-only mode for potentials whose Lebesgue norms were obtained
// elsewhere.  |V(x)| denotes the operator norm of the matrix value; for
// the scalar kinds V(x) = v(x) I and |V(x)| = |v(x)|.
class PotentialModel {
 public:
  enum class Kind { scalar_radial, scalar_general, matrix_general, declared_only };

  static PotentialModel scalar_radial(std::function<double(double)> profile,
                                      bool singular_at_origin = false);
  static PotentialModel scalar_general(std::function<double(const Vec3&)> value);
  static PotentialModel matrix_general(std::function<Matrix4(const Vec3&)> value);

  // Built-in constructors, addressable from the CLI by name.
  static PotentialModel gaussian(double v0, double width = 1.0);       // v0 e^{-(r/width)^2}
  static PotentialModel cutoff_coulomb(double Z, double R);            // Z/r on r <= R, else 0
  static PotentialModel bump(double v0, double R);                     // v0 on r <= R, else 0
  static PotentialModel declared(double norm3,
                                 std::optional<double> norm32 = std::nullopt);

  Kind kind() const { return kind_; }
  bool has_function() const { return kind_ != Kind::declared_only; }
  bool scalar() const {
    return kind_ == Kind::scalar_radial || kind_ == Kind::scalar_general;
  }

  // |V(x)|.  Throws std::domain_error at a declared singularity (x = 0).
  double pointwise_norm(const Vec3& x) const;

  // Signed scalar value v(x); scalar kinds only (std::logic_error otherwise).
  double scalar_value(const Vec3& x) const;

  // Matrix value V(x) for any function-backed kind.
  Matrix4 matrix_value(const Vec3& x) const;

  std::optional<double> declared_norm3;
  std::optional<double> declared_norm32;

 private:
  PotentialModel() = default;
  Kind kind_ = Kind::declared_only;
  std::function<double(double)> radial_;
  std::function<double(const Vec3&)> scalar_;
  std::function<Matrix4(const Vec3&)> matrix_;
  bool singular_at_origin_ = false;
};

// (integral |V|^p)^{1/p} over R^3 by adaptive quadrature, p in {3, 3/2}.
// Radial kinds integrate 4 pi r^2 |v(r)|^p with dyadic refinement toward
// r = 0 and a doubling tail; general kinds integrate over a growing cube
// until the last shell is negligible.  A non-integrable divergence is
// reported as {value = +inf, converged = false}.  tol must lie in (0, 0.1].
QuadratureResult lp_norm(const PotentialModel& V, double p, double tol = 1e-6);

// Provenance-aware norm lookup: declared norms take precedence over
// quadrature.
struct NormValue {
  double value = 0.0;
  bool declared = false;
  QuadratureResult quadrature;  // meaningful only when !declared
};
NormValue resolve_norm(const PotentialModel& V, double p, double tol = 1e-6);

// Threshold of the L^3 smallness condition for form-boundedness,
// (2 pi^2)^{1/3}, offline to 40 digits.
inline constexpr double kFormBoundThreshold = 2.702567690063490188626873097310246477095;

// True iff v1_norm3 < (2 pi^2)^{1/3}, strictly.
bool check_proposition_sufficient(double v1_norm3);

// Monte-Carlo spot check of the pointwise bound
//   |V(x)| <= a (2/pi) / |x| + b ,  a in (0,1),
// over `samples` points with radii drawn from a half-Cauchy distribution
// (r = tan(pi u / 2), u uniform in (0,1)) and uniform directions.  Returns
// true iff no violation was found; a falsification check, not a proof.
bool check_kato_pointwise(const PotentialModel& V, double a, double b,
                          int samples, std::uint64_t seed = 2024);

}  // namespace diraccert
