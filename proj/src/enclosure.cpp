#include "diraccert/enclosure.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace diraccert {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double constant_C() { return kThm1Constant; }
double constant_Cprime() { return kThm2Constant; }

double f_function(Complex lambda, double m) {
  const double re = lambda.real();
  if (re == 0.0) return 1.0;
  const double rk = kappa({lambda, m}).real();
  if (rk == 0.0) return kInf;
  const double q = re / rk;
  return std::sqrt(1.0 + q * q);
}

Thm1Result certify_thm1(Complex lambda, double m, double norm3) {
  if (norm3 < 0.0) throw std::invalid_argument("norm3 must be nonnegative");
  Thm1Result r;
  r.f_value = f_function(lambda, m);
  // inf * 0 would be NaN; an infinite weight can never certify.
  r.lhs = std::isinf(r.f_value) ? kInf : kThm1Constant * r.f_value * norm3;
  r.certified = r.lhs < 1.0;
  return r;
}

Thm2Result certify_thm2(Complex lambda, double norm3, double norm32) {
  if (norm3 < 0.0 || norm32 < 0.0)
    throw std::invalid_argument("norms must be nonnegative");
  Thm2Result r;
  r.lhs = kThm1Constant * norm3 + kThm2Constant * std::abs(lambda.real()) * norm32;
  r.certified = r.lhs < 1.0;
  return r;
}

std::string EnclosureReport::reason() const {
  if (certified) return {};
  if (std::isinf(f_value) && !thm2_lhs.has_value())
    return "f infinite on essential spectrum";
  if (std::isinf(f_value))
    return "f infinite on essential spectrum; thm2 lhs >= 1";
  if (thm2_lhs.has_value()) return "thm1 and thm2 lhs both >= 1";
  return "thm1 lhs >= 1 and no L^{3/2} norm for thm2";
}

EnclosureReport certify(Complex lambda, double m, double norm3,
                        std::optional<double> norm32) {
  EnclosureReport rep;
  rep.lambda = lambda;
  rep.m = m;
  const Thm1Result t1 = certify_thm1(lambda, m, norm3);
  rep.f_value = t1.f_value;
  rep.thm1_lhs = t1.lhs;
  rep.thm1_certified = t1.certified;
  if (norm32.has_value()) {
    const Thm2Result t2 = certify_thm2(lambda, norm3, *norm32);
    rep.thm2_lhs = t2.lhs;
    rep.thm2_certified = t2.certified;
  }
  rep.certified = rep.thm1_certified || rep.thm2_certified.value_or(false);
  return rep;
}

RegionGrid raster(const GridSpec& spec, double m, double norm3,
                  std::optional<double> norm32) {
  if (spec.n_re < 2 || spec.n_im < 2)
    throw std::invalid_argument("raster: grid counts must be >= 2");
  if (!(spec.re_max > spec.re_min) || !(spec.im_max > spec.im_min))
    throw std::invalid_argument("raster: grid ranges must be nonempty");

  RegionGrid grid;
  grid.spec = spec;
  grid.m = m;
  grid.norm3 = norm3;
  grid.norm32 = norm32;
  grid.cells.reserve(static_cast<size_t>(spec.n_re) * spec.n_im);

  const double dre = (spec.re_max - spec.re_min) / (spec.n_re - 1);
  const double dim = (spec.im_max - spec.im_min) / (spec.n_im - 1);
  for (int j = 0; j < spec.n_im; ++j) {
    const double im = spec.im_min + j * dim;
    for (int i = 0; i < spec.n_re; ++i) {
      const double re = spec.re_min + i * dre;
      grid.cells.push_back(certify(Complex{re, im}, m, norm3, norm32));
    }
  }
  return grid;
}

}  // namespace diraccert
