#include <doctest.h>

#include <stdexcept>

#include "diraccert/dirac_basis.hpp"

using namespace diraccert;

namespace {

bool exactly_zero(const Matrix4& m) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (m(i, j) != Complex{}) return false;
  return true;
}

}  // namespace

TEST_CASE("standard representation is Dirac-Pauli") {
  const DiracBasis& b = dirac_basis(Representation::standard);
  const Matrix4& a4 = b.alpha4();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Complex expected = i != j ? Complex{} : Complex{i < 2 ? 1.0 : -1.0, 0.0};
      CHECK(a4(i, j) == expected);
    }
  // alpha_1 has sigma_1 in the off-diagonal blocks.
  const Matrix4& a1 = b.alpha_vec(0);
  CHECK(a1(0, 3) == Complex{1.0, 0.0});
  CHECK(a1(1, 2) == Complex{1.0, 0.0});
  CHECK(a1(2, 1) == Complex{1.0, 0.0});
  CHECK(a1(3, 0) == Complex{1.0, 0.0});
  CHECK(a1(0, 0) == Complex{});
  CHECK(a1(0, 1) == Complex{});
}

TEST_CASE("anticommutation relations hold exactly in both representations") {
  for (Representation rep : {Representation::standard, Representation::weyl}) {
    const DiracBasis& b = dirac_basis(rep);
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        Matrix4 res = b.alpha[mu] * b.alpha[nu] + b.alpha[nu] * b.alpha[mu];
        if (mu == nu) res -= Matrix4::identity() * Complex{2.0, 0.0};
        CHECK(exactly_zero(res));
      }
  }
}

TEST_CASE("hermiticity and trace identities") {
  for (Representation rep : {Representation::standard, Representation::weyl}) {
    const DiracBasis& b = dirac_basis(rep);
    for (const Matrix4& a : b.alpha) {
      CHECK(exactly_zero(a - a.adjoint()));
      CHECK(a.trace() == Complex{});
    }
    for (int k = 0; k < 3; ++k) CHECK((b.alpha4() * b.alpha_vec(k)).trace() == Complex{});
    // the specific product singled out in the certification suites
    CHECK((b.alpha4() * b.alpha_vec(1)).trace() == Complex{});
  }
}

TEST_CASE("representation tags") {
  CHECK(&dirac_basis("standard") == &dirac_basis(Representation::standard));
  CHECK(&dirac_basis("weyl") == &dirac_basis(Representation::weyl));
  CHECK(representation_tag(Representation::weyl) == "weyl");
  CHECK_THROWS_AS(dirac_basis("majorana"), std::invalid_argument);
  CHECK_THROWS_AS(dirac_basis(""), std::invalid_argument);
}
