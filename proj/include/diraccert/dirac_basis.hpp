#pragma once

#include <string_view>

#include "diraccert/matrix4.hpp"

namespace diraccert {

// Two built-in representations of the anticommutation relations
//   alpha_mu alpha_nu + alpha_nu alpha_mu = 2 delta_{mu nu} I ,
// mu, nu in {1,...,4}.  All entries are 0, +-1 or +-i, so the relations
// hold exactly in floating point.
enum class Representation {
  standard,  // Dirac-Pauli: alpha_k = offdiag(sigma_k), alpha_4 = diag(1,1,-1,-1)
  weyl,      // chiral: alpha_k = diag(-sigma_k, sigma_k), alpha_4 = offdiag(I)
};

Representation representation_from_tag(std::string_view tag);
std::string_view representation_tag(Representation rep);

struct DiracBasis {
  // alpha[0..2] are alpha_1..alpha_3, alpha[3] is alpha_4.
  std::array<Matrix4, 4> alpha;
  Representation representation;

  const Matrix4& alpha_vec(int k) const { return alpha[k]; }  // k in {0,1,2}
  const Matrix4& alpha4() const { return alpha[3]; }
};

// Shared immutable instances; safe for concurrent use.
const DiracBasis& dirac_basis(Representation rep = Representation::standard);

// Throws std::invalid_argument for tags other than "standard" / "weyl".
const DiracBasis& dirac_basis(std::string_view tag);

}  // namespace diraccert
