#include "diraccert/matrix4.hpp"

#include <cmath>

namespace diraccert {

Matrix4 Matrix4::identity() {
  Matrix4 m;
  for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
  return m;
}

Matrix4 Matrix4::adjoint() const {
  Matrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

Complex Matrix4::trace() const {
  return e_[0] + e_[5] + e_[10] + e_[15];
}

Matrix4& Matrix4::operator+=(const Matrix4& rhs) {
  for (int i = 0; i < 16; ++i) e_[i] += rhs.e_[i];
  return *this;
}

Matrix4& Matrix4::operator-=(const Matrix4& rhs) {
  for (int i = 0; i < 16; ++i) e_[i] -= rhs.e_[i];
  return *this;
}

Matrix4& Matrix4::operator*=(Complex s) {
  for (int i = 0; i < 16; ++i) e_[i] *= s;
  return *this;
}

Matrix4 operator*(const Matrix4& a, const Matrix4& b) {
  Matrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (int j = 0; j < 4; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

double hs_norm(const Matrix4& m) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

namespace {

double max_entry_modulus(const Matrix4& m) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s = std::max(s, std::abs(m(i, j)));
  return s;
}

// Rayleigh quotient v*Av / v*v of a Hermitian A (real up to rounding).
double rayleigh(const Matrix4& a, const std::array<Complex, 4>& v) {
  std::array<Complex, 4> av{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) av[i] += a(i, j) * v[j];
  Complex num = 0.0;
  double den = 0.0;
  for (int i = 0; i < 4; ++i) {
    num += std::conj(v[i]) * av[i];
    den += std::norm(v[i]);
  }
  return num.real() / den;
}

std::array<Complex, 4> dominant_column(const Matrix4& m) {
  int best = 0;
  double best_norm = -1.0;
  for (int j = 0; j < 4; ++j) {
    double n = 0.0;
    for (int i = 0; i < 4; ++i) n += std::norm(m(i, j));
    if (n > best_norm) {
      best_norm = n;
      best = j;
    }
  }
  return {m(0, best), m(1, best), m(2, best), m(3, best)};
}

}  // namespace

double operator_norm(const Matrix4& m) {
  // Pre-scale so M*M cannot under/overflow.
  const double scale = max_entry_modulus(m);
  if (scale == 0.0 || !std::isfinite(scale)) return scale;
  Matrix4 ms = m * Complex{1.0 / scale, 0.0};

  const Matrix4 a = ms.adjoint() * ms;  // Hermitian PSD, largest eigenvalue in [hs/4, hs]

  // Power method realised by repeated squaring of A (gap-independent:
  // the effective power doubles each step), renormalised in HS norm.
  // Rayleigh quotient of the dominant column gives the eigenvalue.
  Matrix4 b = a * Complex{1.0 / hs_norm(a), 0.0};
  double rho = rayleigh(a, dominant_column(b));
  for (int it = 0; it < 64; ++it) {
    b = b * b;
    const double n = hs_norm(b);
    if (n == 0.0) break;
    b *= Complex{1.0 / n, 0.0};
    const double next = rayleigh(a, dominant_column(b));
    const bool done = std::abs(next - rho) <= 1e-14 * std::abs(next);
    rho = next;
    if (done) break;
  }
  return scale * std::sqrt(std::max(rho, 0.0));
}

}  // namespace diraccert
