#pragma once

#include <array>
#include <optional>
#include <string>

#include "edgestates/blocks.hpp"
#include "edgestates/numlin.hpp"
#include "edgestates/types.hpp"

namespace edgestates {

enum class FamilyKind { F76, F75, F65, F44, F85, General };

std::string to_string(FamilyKind kind);

/// Parameters of one state construction. mu is always stored as
/// 1/lambda, never set independently. For the named 3-vector kinds
/// (F76/F75/F65/F44) alpha, beta, gamma stay empty: their contribution
/// is folded into the reduced closed form. F85 and General carry all
/// six vectors explicitly in C^nu.
struct FamilySpec {
  FamilyKind kind = FamilyKind::General;
  double lambda = 0.0;
  double mu = 0.0;
  std::optional<double> t;  // F85 only, > 1
  Index nu = 0;
  ComplexVector xi, eta, zeta;
  ComplexVector alpha, beta, gamma;
};

/// Shape and parameter checks. Named kinds additionally require unit
/// xi, eta, zeta; F85 requires t > 1 and orthonormal alpha, beta, gamma
/// orthogonal to span{xi, eta, zeta}. General specs may violate the
/// orthogonality conditions; certification decides what they produce.
void validate(const FamilySpec& spec);

/// The 3 x 3 matrix [[1, lambda, mu], [mu, 1, lambda], [lambda, mu, 1]].
ComplexMatrix rho_matrix(double lambda);

/// Closed-form 9 x 9 state. Named kinds emit the reduced pattern (all-ones
/// outer diagonal block, diagonal 1, lambda^2, mu^2, ... and the three
/// pair overlaps); F85 and General evaluate the full pre-reduction form
/// entry by entry from the vector inner products. Hermitian by
/// construction; positivity is certified separately.
BlockMatrix general_state(const FamilySpec& spec);

/// Same state through the Gram route: sigma_i from the vector entries,
/// x_i = rho ∘ sigma_i, X^tau = sum_i x_i~ x_i~*, X = (X^tau)^tau.
/// X^tau is PSD by construction. For named kinds the vectors are lifted
/// to C^(nu+3) to host an explicit orthonormal alpha, beta, gamma.
BlockMatrix gram_route_state(const FamilySpec& spec);

struct NamedFamily {
  FamilySpec spec;
  BlockMatrix state;
};

/// Canonical representative of a named family: xi = e1, eta = e2 and
/// zeta = e3 (F76), (e1+e2)/sqrt(2) (F75), e1 (F65); F44 has
/// xi = eta = zeta = e1. F85 lives in C^5 with xi = sqrt(t) e1,
/// eta = sqrt(t) e2, zeta = sqrt(1/(t(t+1))) (xi+eta) and
/// alpha, beta, gamma = e3, e4, e5. t is required iff kind is F85.
NamedFamily named_family(FamilyKind kind, double lambda, std::optional<double> t = {});

struct DualSubspaces {
  MatrixSubspace d_tilde;  // dim 7
  MatrixSubspace e_tilde;  // dim 6
};

/// Vectorized orthonormal bases of the dual-face subspaces
/// D = span{e12, e21, e23, e32, e31, e13, (e11+e22+e33)/sqrt(3)} and
/// E = span{lambda e12 + mu e21, lambda e23 + mu e32, lambda e31 + mu e13,
///          e11, e22, e33}, orthonormalized in the listed order.
DualSubspaces dual_subspaces(double lambda);

struct FactorPair {
  ComplexVector x;  // C^3
  ComplexVector y;  // C^3
};

/// The six rank-one matrices of range(X^tau) for the F85 family, as
/// factor pairs with x y* equal to the matrix (four real, one +i/-i
/// pair). Paper order: the two positive real ones, the +i one, the two
/// negated real ones, the -i one.
std::array<FactorPair, 6> witnesses_85(double lambda, double t);

}  // namespace edgestates
