#include <doctest.h>

#include <cmath>

#include "diraccert/dirac_basis.hpp"
#include "diraccert/matrix4.hpp"
#include "oracles.hpp"

using namespace diraccert;

TEST_CASE("hs_norm basics") {
  CHECK(hs_norm(Matrix4::identity()) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(hs_norm(Matrix4::zero()) == 0.0);

  // alpha_1 is Hermitian with alpha_1^2 = I: four unit-modulus entries.
  const DiracBasis& basis = dirac_basis(Representation::standard);
  CHECK(hs_norm(basis.alpha_vec(0)) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("operator_norm on scaled identities and basis matrices") {
  const Complex c{3.0, -4.0};
  CHECK(operator_norm(Matrix4::identity() * c) ==
        doctest::Approx(5.0).epsilon(1e-13));
  CHECK(operator_norm(Matrix4::zero()) == 0.0);

  for (Representation rep : {Representation::standard, Representation::weyl})
    for (const Matrix4& a : dirac_basis(rep).alpha)
      CHECK(operator_norm(a) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("operator_norm matches the characteristic-polynomial oracle") {
  oracles::Rng rng(42);
  for (int t = 0; t < 2000; ++t) {
    const Matrix4 m = rng.matrix(t % 3 == 0 ? 1e-3 : 5.0);
    const double expected = oracles::charpoly_operator_norm(m);
    CHECK(operator_norm(m) == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("norm sandwich: op <= hs <= 2 op for random matrices") {
  oracles::Rng rng(7);
  for (int t = 0; t < 10000; ++t) {
    const Matrix4 m = rng.matrix();
    const double op = operator_norm(m);
    const double hs = hs_norm(m);
    CHECK(op <= hs * (1.0 + 1e-12));
    CHECK(hs <= 2.0 * op * (1.0 + 1e-12));
  }
}

TEST_CASE("hs_norm is unitarily invariant") {
  oracles::Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const Matrix4 m = rng.matrix();
    const Matrix4 u = oracles::random_unitary(rng);
    const Matrix4 v = oracles::random_unitary(rng);
    CHECK(hs_norm(u * m * v) == doctest::Approx(hs_norm(m)).epsilon(1e-12));
  }
}

TEST_CASE("adjoint and trace") {
  oracles::Rng rng(3);
  const Matrix4 m = rng.matrix();
  const Matrix4 a = m.adjoint();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(a(i, j) == std::conj(m(j, i)));
  // tr(M*M) is real and equals hs^2.
  const Complex t = (m.adjoint() * m).trace();
  CHECK(std::abs(t.imag()) <= 1e-14 * std::abs(t.real()));
  CHECK(t.real() == doctest::Approx(hs_norm(m) * hs_norm(m)).epsilon(1e-13));
}
