#include "edgestates/blocks.hpp"

#include <stdexcept>

namespace edgestates {

BlockMatrix::BlockMatrix(Index m_, Index n_, ComplexMatrix data_)
    : m(m_), n(n_), data(std::move(data_)) {
  if (m <= 0 || n <= 0) throw std::invalid_argument("BlockMatrix: m, n must be positive");
  if (data.rows() != n * m || data.cols() != n * m)
    throw std::invalid_argument("BlockMatrix: data must be (nm) x (nm)");
}

bool BlockMatrix::is_hermitian(double rel_tol) const {
  const double scale = data.norm();
  if (scale == 0.0) return true;
  return (data - data.adjoint()).cwiseAbs().maxCoeff() <= rel_tol * scale;
}

BlockMatrix partial_transpose(const BlockMatrix& A) {
  BlockMatrix out(A.m, A.n, ComplexMatrix(A.dim(), A.dim()));
  for (Index i = 0; i < A.m; ++i)
    for (Index j = 0; j < A.m; ++j) out.block(i, j) = A.block(j, i);
  return out;
}

ComplexVector vectorize(const ComplexMatrix& z) {
  const Index m = z.rows(), n = z.cols();
  ComplexVector v(m * n);
  for (Index i = 0; i < m; ++i)
    for (Index k = 0; k < n; ++k) v(i * n + k) = z(i, k);
  return v;
}

ComplexMatrix matricize(const ComplexVector& v, Index m, Index n) {
  if (v.size() != m * n) throw std::invalid_argument("matricize: length mismatch");
  ComplexMatrix z(m, n);
  for (Index i = 0; i < m; ++i)
    for (Index k = 0; k < n; ++k) z(i, k) = v(i * n + k);
  return z;
}

BlockMatrix pure_state(const ComplexMatrix& z) {
  if (z.norm() == 0.0) throw std::invalid_argument("pure_state: zero input");
  const ComplexVector v = vectorize(z);
  return BlockMatrix(z.rows(), z.cols(), v * v.adjoint());
}

ConjugatePair conjugate_partner(const ComplexVector& x, const ComplexVector& y) {
  if (x.norm() == 0.0 || y.norm() == 0.0)
    throw std::invalid_argument("conjugate_partner: zero input vector");
  return ConjugatePair{x * y.adjoint(), x.conjugate() * y.adjoint()};
}

BlockMatrix hadamard(const BlockMatrix& A, const BlockMatrix& B) {
  if (A.m != B.m || A.n != B.n) throw std::invalid_argument("hadamard: shape mismatch");
  return BlockMatrix(A.m, A.n, A.data.cwiseProduct(B.data));
}

}  // namespace edgestates
