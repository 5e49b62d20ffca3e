#pragma once

#include <cstdint>
#include <vector>

#include "edgestates/blocks.hpp"
#include "edgestates/types.hpp"

namespace edgestates {

/// Decomposable positive map M_m -> M_n as two Kraus lists: the
/// completely positive part X -> sum V* X V and the completely
/// copositive part X -> sum W* X^t W. All Kraus matrices are m x n.
struct DecomposableMap {
  Index m = 0;
  Index n = 0;
  std::vector<ComplexMatrix> cp_kraus;
  std::vector<ComplexMatrix> ccp_kraus;
};

/// Validates shapes and that at least one Kraus list is nonempty.
void validate(const DecomposableMap& phi);

/// sum_i V_i* X V_i + sum_j W_j* X^t W_j for X in M_m.
ComplexMatrix apply_map(const DecomposableMap& phi, const ComplexMatrix& X);

/// Bilinear pairing <A, phi> = sum_ij <phi(e_ij), a_ij> with
/// <X, Y> = Tr(Y X^t). Real up to roundoff when A is Hermitian and phi
/// preserves Hermiticity. Deliberately returns the complex value: a
/// nonzero imaginary part on Hermitian input exposes transpose-convention
/// bugs.
Complex pairing(const BlockMatrix& A, const DecomposableMap& phi);

/// Sum of squared Frobenius norms of all Kraus matrices; the natural
/// scale of the pairing in phi.
double kraus_scale(const DecomposableMap& phi);

/// pairing() reduced to its real part; throws when |Im| exceeds
/// tol * ||A||_F * kraus_scale(phi).
double real_pairing(const BlockMatrix& A, const DecomposableMap& phi, double tol = 1e-10);

/// The one-parameter decomposable map on M_3 with completely positive
/// Kraus parts {e11-e22, e22-e33, e33-e11} and completely copositive
/// parts {mu e12 - lambda e21, mu e23 - lambda e32, mu e31 - lambda e13},
/// mu = 1/lambda. Requires lambda > 0 and lambda != 1.
DecomposableMap phi_family(double lambda);

struct PositivityMargin {
  double margin = 0.0;
  ComplexVector argmin_x;
};

/// Multistart estimate of min over unit x of lambda_min(phi(x x*)).
/// A strictly positive margin is evidence the map lies in the interior
/// of the positive maps. Deterministic given the seed; restart k draws
/// from seed + k and ties resolve to the lowest restart index.
PositivityMargin positivity_margin(const DecomposableMap& phi, int restarts,
                                   std::uint64_t seed);

}  // namespace edgestates
