#include "edgestates/numlin.hpp"

#include <stdexcept>

namespace edgestates {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

HermitianEig hermitian_eig(const ComplexMatrix& H) {
  require(H.rows() == H.cols(), "hermitian_eig: matrix must be square");
  require(H.size() > 0, "hermitian_eig: matrix must be nonempty");
  const double scale = H.norm();
  const double asym = (H - H.adjoint()).cwiseAbs().maxCoeff();
  require(asym <= 1e-12 * scale || scale == 0.0,
          "hermitian_eig: input is not Hermitian within tolerance");

  const ComplexMatrix S = 0.5 * (H + H.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(S);
  require(solver.info() == Eigen::Success, "hermitian_eig: eigensolver failed");
  return HermitianEig{solver.eigenvalues(), solver.eigenvectors()};
}

SmallestSingular smallest_singular_value(const ComplexMatrix& M) {
  require(M.rows() > 0 && M.cols() > 0, "smallest_singular_value: empty matrix");
  Eigen::JacobiSVD<ComplexMatrix> svd(M, Eigen::ComputeFullV);
  const Index cols = M.cols();
  SmallestSingular out;
  out.right_vector = svd.matrixV().col(cols - 1);
  // Full V lists cols right singular vectors; when rows < cols the trailing
  // ones span the null space and the matching singular values are zero.
  out.sigma_min = (M.rows() >= cols) ? svd.singularValues()(cols - 1) : 0.0;
  return out;
}

Index numerical_rank(const ComplexMatrix& M, const TolerancePolicy& tol) {
  if (M.size() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> svd(M);
  const auto& sigma = svd.singularValues();
  const double cutoff = tol.rank_rel_tol * sigma(0);
  Index rank = 0;
  for (Index k = 0; k < sigma.size(); ++k) {
    if (sigma(k) > cutoff && sigma(k) > 0.0) ++rank;
  }
  return rank;
}

SpectralSplit spectral_split(const ComplexMatrix& H, const TolerancePolicy& tol) {
  const HermitianEig eig = hermitian_eig(H);
  const double scale = H.norm();
  const Index n = H.rows();
  require(eig.eigenvalues(0) >= -tol.psd_rel_tol * scale,
          "spectral_split: input has a significantly negative eigenvalue");

  const double lambda_max = eig.eigenvalues(n - 1);
  const double cutoff = tol.rank_rel_tol * lambda_max;
  Index kernel_dim = 0;
  while (kernel_dim < n && eig.eigenvalues(kernel_dim) <= cutoff) ++kernel_dim;

  SpectralSplit split;
  split.kernel = MatrixSubspace{n, eig.eigenvectors.leftCols(kernel_dim)};
  split.range = MatrixSubspace{n, eig.eigenvectors.rightCols(n - kernel_dim)};
  return split;
}

double residual_to_subspace(const ComplexVector& v, const MatrixSubspace& S) {
  require(v.size() == S.ambient_dim, "residual_to_subspace: dimension mismatch");
  const double vnorm = v.norm();
  if (vnorm == 0.0) return 0.0;
  if (S.dim() == 0) return 1.0;
  const ComplexVector r = v - S.basis * (S.basis.adjoint() * v);
  return r.norm() / vnorm;
}

MatrixSubspace join_subspaces(const MatrixSubspace& S1, const MatrixSubspace& S2,
                              const TolerancePolicy& tol) {
  require(S1.ambient_dim == S2.ambient_dim, "join_subspaces: ambient dimension mismatch");
  const Index ambient = S1.ambient_dim;
  const Index total = S1.dim() + S2.dim();
  if (total == 0) return MatrixSubspace{ambient, ComplexMatrix(ambient, 0)};

  ComplexMatrix stacked(ambient, total);
  stacked.leftCols(S1.dim()) = S1.basis;
  stacked.rightCols(S2.dim()) = S2.basis;

  Eigen::JacobiSVD<ComplexMatrix> svd(stacked, Eigen::ComputeThinU);
  const auto& sigma = svd.singularValues();
  const double cutoff = tol.rank_rel_tol * sigma(0);
  Index rank = 0;
  for (Index k = 0; k < sigma.size(); ++k) {
    if (sigma(k) > cutoff && sigma(k) > 0.0) ++rank;
  }
  return MatrixSubspace{ambient, svd.matrixU().leftCols(rank)};
}

}  // namespace edgestates
