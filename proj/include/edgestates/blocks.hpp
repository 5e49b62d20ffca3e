#pragma once

#include "edgestates/types.hpp"

namespace edgestates {

/// Element of M_n ⊗ M_m stored as an m x m grid of n x n blocks.
/// Global index g = i*n + k (0-based) addresses block row i, inner row k,
/// so block (i,j) of A = sum_ij a_ij ⊗ e_ij is data.block(i*n, j*n, n, n).
struct BlockMatrix {
  Index m = 0;  // outer factor M_m
  Index n = 0;  // inner factor M_n
  ComplexMatrix data;

  BlockMatrix() = default;
  BlockMatrix(Index m_, Index n_, ComplexMatrix data_);

  Index dim() const { return n * m; }

  auto block(Index i, Index j) { return data.block(i * n, j * n, n, n); }
  auto block(Index i, Index j) const { return data.block(i * n, j * n, n, n); }

  bool is_hermitian(double rel_tol = 1e-12) const;
};

/// Block transpose: block (i,j) of the result is block (j,i) of the input.
/// A pure entry permutation; applying it twice returns the input bit-exactly.
BlockMatrix partial_transpose(const BlockMatrix& A);

/// Row-major flattening of an m x n matrix into C^(nm): component
/// i*n + k is z(i,k). An inner-product isomorphism M_{m x n} -> C^n ⊗ C^m.
ComplexVector vectorize(const ComplexMatrix& z);

/// Inverse of vectorize.
ComplexMatrix matricize(const ComplexVector& v, Index m, Index n);

/// Rank-one projector z~ z~* as a BlockMatrix with m = rows(z), n = cols(z).
BlockMatrix pure_state(const ComplexMatrix& z);

struct ConjugatePair {
  ComplexMatrix z;  // x y*
  ComplexMatrix w;  // conj(x) y*
};

/// The rank-one matrix x y* together with its conjugate partner conj(x) y*.
/// The partner is the matrix whose pure state is the partial transpose of
/// pure_state(x y*).
ConjugatePair conjugate_partner(const ComplexVector& x, const ComplexVector& y);

/// Entrywise (Hadamard) product of equally shaped block matrices.
BlockMatrix hadamard(const BlockMatrix& A, const BlockMatrix& B);

}  // namespace edgestates
