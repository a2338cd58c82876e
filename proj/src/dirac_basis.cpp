#include "diraccert/dirac_basis.hpp"

#include <stdexcept>
#include <string>

namespace diraccert {

namespace {

constexpr Complex I{0.0, 1.0};

// Pauli matrices.
struct Pauli {
  Complex e[2][2];
};
constexpr Pauli kSigma[3] = {
    {{{0, 1}, {1, 0}}},            // sigma_1
    {{{0, -I}, {I, 0}}},           // sigma_2
    {{{1, 0}, {0, Complex{-1}}}},  // sigma_3
};

// Places the 2x2 block b at block position (bi, bj), scaled by s.
void put_block(Matrix4& m, int bi, int bj, const Pauli& b, Complex s = 1.0) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(2 * bi + i, 2 * bj + j) = s * b.e[i][j];
}

DiracBasis make_standard() {
  DiracBasis basis;
  basis.representation = Representation::standard;
  for (int k = 0; k < 3; ++k) {
    put_block(basis.alpha[k], 0, 1, kSigma[k]);
    put_block(basis.alpha[k], 1, 0, kSigma[k]);
  }
  basis.alpha[3](0, 0) = 1.0;
  basis.alpha[3](1, 1) = 1.0;
  basis.alpha[3](2, 2) = -1.0;
  basis.alpha[3](3, 3) = -1.0;
  return basis;
}

DiracBasis make_weyl() {
  DiracBasis basis;
  basis.representation = Representation::weyl;
  for (int k = 0; k < 3; ++k) {
    put_block(basis.alpha[k], 0, 0, kSigma[k], Complex{-1.0});
    put_block(basis.alpha[k], 1, 1, kSigma[k]);
  }
  basis.alpha[3](0, 2) = 1.0;
  basis.alpha[3](1, 3) = 1.0;
  basis.alpha[3](2, 0) = 1.0;
  basis.alpha[3](3, 1) = 1.0;
  return basis;
}

}  // namespace

Representation representation_from_tag(std::string_view tag) {
  if (tag == "standard") return Representation::standard;
  if (tag == "weyl") return Representation::weyl;
  throw std::invalid_argument("unknown representation tag: " + std::string(tag) +
                              " (expected \"standard\" or \"weyl\")");
}

std::string_view representation_tag(Representation rep) {
  return rep == Representation::standard ? "standard" : "weyl";
}

const DiracBasis& dirac_basis(Representation rep) {
  static const DiracBasis standard = make_standard();
  static const DiracBasis weyl = make_weyl();
  return rep == Representation::standard ? standard : weyl;
}

const DiracBasis& dirac_basis(std::string_view tag) {
  return dirac_basis(representation_from_tag(tag));
}

}  // namespace diraccert
