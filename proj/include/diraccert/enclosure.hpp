#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diraccert/resolvent.hpp"

namespace diraccert {

// Constants of the two exclusion criteria, evaluated offline to 40
// significant digits:
//   kThm1Constant = (pi/2)^{1/3} sqrt(1 + e^-1 + 2 e^-2)   (~1.488)
//   kThm2Constant = 2^{17/6} / (3 pi^{2/3})                (~1.108)
inline constexpr double kThm1Constant = 1.488000723994071817134378237597777985957;
inline constexpr double kThm2Constant = 1.107551215027911468001026663473800802443;

double constant_C();       // kThm1Constant
double constant_Cprime();  // kThm2Constant

// Spectral weight f(lambda, m) = sqrt(1 + Re(lambda)^2 / Re(kappa)^2).
// Returns +inf exactly when Re kappa = 0 with Re lambda != 0, i.e. for
// real lambda with |lambda| >= m.  Returns 1 whenever Re lambda = 0; this
// covers the 0/0 corner lambda = 0, m = 0 by continuity along the
// imaginary axis.  Massless case: f(lambda, 0) = |lambda| / |Im lambda|.
double f_function(Complex lambda, double m);

struct Thm1Result {
  double f_value = 0.0;  // may be +inf
  double lhs = 0.0;      // C * f * norm3; +inf when f is infinite
  bool certified = false;
};

struct Thm2Result {
  double lhs = 0.0;  // C * norm3 + C' * |Re lambda| * norm32
  bool certified = false;
};

// Criterion T1:  C f(lambda,m) ||V||_L3 < 1  (strict).
Thm1Result certify_thm1(Complex lambda, double m, double norm3);

// Criterion T2:  C ||V||_L3 + C' |Re lambda| ||V||_L3/2 < 1  (strict).
// Independent of m; valid also on the essential spectrum.
Thm2Result certify_thm2(Complex lambda, double norm3, double norm32);

// Per-point certification record.  thm2 fields are absent if no L^{3/2}
// norm was supplied.  `certified` is the disjunction of the verdicts.
struct EnclosureReport {
  Complex lambda;
  double m = 0.0;
  double f_value = 0.0;
  double thm1_lhs = 0.0;
  std::optional<double> thm2_lhs;
  bool thm1_certified = false;
  std::optional<bool> thm2_certified;
  bool certified = false;

  // Empty when certified, otherwise a short explanation.
  std::string reason() const;
};

EnclosureReport certify(Complex lambda, double m, double norm3,
                        std::optional<double> norm32 = std::nullopt);

struct GridSpec {
  double re_min = 0.0, re_max = 0.0;
  int n_re = 0;
  double im_min = 0.0, im_max = 0.0;
  int n_im = 0;
};

// Rectangular lattice of spectral points with per-point reports.
// cells are row-major with the imaginary part as the outer (slow) index:
// cell(i, j) corresponds to lambda = re_i + i * im_j.
struct RegionGrid {
  GridSpec spec;
  double m = 0.0;
  double norm3 = 0.0;
  std::optional<double> norm32;
  std::vector<EnclosureReport> cells;

  const EnclosureReport& cell(int i_re, int j_im) const {
    return cells[static_cast<size_t>(j_im) * spec.n_re + i_re];
  }
};

// Fills every cell deterministically; cells are independent of one
// another and of evaluation order.  Throws std::invalid_argument for
// counts < 2 or empty ranges.
RegionGrid raster(const GridSpec& spec, double m, double norm3,
                  std::optional<double> norm32 = std::nullopt);

}  // namespace diraccert
