#pragma once

#include <complex>

#include <Eigen/Dense>

namespace edgestates {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Relative tolerances for rank decisions, PSD verdicts and subspace
/// membership. All thresholds scale with the input (largest singular
/// value or Frobenius norm), never with absolute magnitudes.
struct TolerancePolicy {
  double rank_rel_tol = 1e-8;
  double psd_rel_tol = 1e-10;
  double membership_tol = 1e-10;
};

}  // namespace edgestates
