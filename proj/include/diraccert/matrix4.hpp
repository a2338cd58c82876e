#pragma once

#include <array>
#include <complex>

namespace diraccert {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;

// Dense 4x4 complex matrix, value semantics.  Small enough that everything
// is done by explicit loops; no general linear algebra dependency.
class Matrix4 {
 public:
  Matrix4() : e_{} {}

  static Matrix4 identity();
  static Matrix4 zero() { return Matrix4{}; }

  Complex& operator()(int row, int col) { return e_[4 * row + col]; }
  const Complex& operator()(int row, int col) const { return e_[4 * row + col]; }

  Matrix4 adjoint() const;
  Complex trace() const;

  Matrix4& operator+=(const Matrix4& rhs);
  Matrix4& operator-=(const Matrix4& rhs);
  Matrix4& operator*=(Complex s);

  friend Matrix4 operator+(Matrix4 a, const Matrix4& b) { return a += b; }
  friend Matrix4 operator-(Matrix4 a, const Matrix4& b) { return a -= b; }
  friend Matrix4 operator*(Matrix4 a, Complex s) { return a *= s; }
  friend Matrix4 operator*(Complex s, Matrix4 a) { return a *= s; }
  friend Matrix4 operator*(const Matrix4& a, const Matrix4& b);

 private:
  std::array<Complex, 16> e_;
};

// Frobenius norm sqrt(tr(M*M)).
double hs_norm(const Matrix4& m);

// Largest singular value.  Deterministic (no random initialization): power
// method on M*M realised by repeated matrix squaring, with a Rayleigh
// quotient stopping criterion at 1e-14 relative.  Relative accuracy 1e-12.
double operator_norm(const Matrix4& m);

}  // namespace diraccert
