#pragma once

#include "edgestates/types.hpp"

namespace edgestates {

/// A subspace of C^ambient_dim held as an orthonormal basis (columns).
/// dim() == 0 is the trivial subspace; basis then has zero columns.
struct MatrixSubspace {
  Index ambient_dim = 0;
  ComplexMatrix basis;

  Index dim() const { return basis.cols(); }
};

struct HermitianEig {
  RealVector eigenvalues;      // ascending
  ComplexMatrix eigenvectors;  // orthonormal columns, col(k) pairs with eigenvalues(k)
};

/// Eigendecomposition of a Hermitian matrix. The input must satisfy
/// ||H - H*||_inf <= 1e-12 ||H||_F; it is symmetrized before solving, so
/// residuals are measured against (H + H*)/2. Deterministic for
/// identical input bits. Throws std::invalid_argument on non-square or
/// non-Hermitian input.
HermitianEig hermitian_eig(const ComplexMatrix& H);

struct SmallestSingular {
  double sigma_min = 0.0;
  ComplexVector right_vector;  // unit norm, ||M v|| == sigma_min up to roundoff
};

/// Smallest of cols(M) singular values. A matrix with fewer rows than
/// columns always has sigma_min = 0, with right_vector spanning part of
/// the null space. Throws on an empty matrix.
SmallestSingular smallest_singular_value(const ComplexMatrix& M);

/// Count of singular values exceeding rank_rel_tol * sigma_max.
/// The zero matrix has rank 0.
Index numerical_rank(const ComplexMatrix& M, const TolerancePolicy& tol = {});

struct SpectralSplit {
  MatrixSubspace range;
  MatrixSubspace kernel;
};

/// Splits C^n into range and kernel of a Hermitian PSD matrix: range is
/// spanned by eigenvectors with eigenvalue > rank_rel_tol * lambda_max,
/// kernel is the complementary part of the eigenbasis, so
/// range.dim() + kernel.dim() == n always. Throws when an eigenvalue is
/// below -psd_rel_tol ||H||_F (non-PSD input).
SpectralSplit spectral_split(const ComplexMatrix& H, const TolerancePolicy& tol = {});

/// Relative distance from v to span(S): ||v - P_S v|| / ||v||.
/// Defined as 0 for v = 0. Throws on ambient dimension mismatch.
double residual_to_subspace(const ComplexVector& v, const MatrixSubspace& S);

/// Orthonormal basis of span(S1 ∪ S2). Throws on ambient mismatch.
MatrixSubspace join_subspaces(const MatrixSubspace& S1, const MatrixSubspace& S2,
                              const TolerancePolicy& tol = {});

}  // namespace edgestates
