#include "edgestates/certify.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "edgestates/detail/optimize.hpp"
#include "edgestates/detail/random.hpp"

namespace edgestates {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// (a|b): linear in the first argument.
Complex inner(const ComplexVector& a, const ComplexVector& b) { return b.dot(a); }

std::vector<ComplexMatrix> matricized_kernel(const BlockMatrix& A, const TolerancePolicy& tol) {
  const MatrixSubspace kernel = spectral_split(A.data, tol).kernel;
  std::vector<ComplexMatrix> out;
  out.reserve(kernel.dim());
  for (Index j = 0; j < kernel.dim(); ++j)
    out.push_back(matricize(kernel.basis.col(j), A.m, A.n));
  return out;
}

// Rows x* K_j (kernel of A^tau) stacked over x^T L_j (kernel of A).
ComplexMatrix constraint_matrix(const ComplexVector& x,
                                const std::vector<ComplexMatrix>& ker_tau,
                                const std::vector<ComplexMatrix>& ker, Index n) {
  ComplexMatrix rows(static_cast<Index>(ker_tau.size() + ker.size()), n);
  Index r = 0;
  for (const auto& k : ker_tau) rows.row(r++) = x.adjoint() * k;
  for (const auto& k : ker) rows.row(r++) = x.transpose() * k;
  return rows;
}

ComplexVector basis_vector(Index dim, Index k) {
  ComplexVector v = ComplexVector::Zero(dim);
  v(k) = 1.0;
  return v;
}

EdgeReport skipped_edge_report(const BlockMatrix& A, const SearchConfig& cfg) {
  EdgeReport report;
  report.verdict = EdgeVerdict::ProductPairFound;
  report.min_objective = 0.0;
  report.best_x = basis_vector(A.m, 0);
  report.best_y = basis_vector(A.n, 0);
  report.restarts_run = 0;
  report.seed = cfg.seed;
  return report;
}

}  // namespace

std::string to_string(EdgeVerdict verdict) {
  return verdict == EdgeVerdict::ProductPairFound ? "PRODUCT_PAIR_FOUND" : "NO_PAIR_FOUND";
}

PptReport is_ppt(const BlockMatrix& A, const TolerancePolicy& tol) {
  require(A.is_hermitian(), "is_ppt: input is not Hermitian");
  const BlockMatrix A_tau = partial_transpose(A);
  PptReport report;
  report.norm_scale = A.data.norm();
  report.min_eig_a = hermitian_eig(A.data).eigenvalues(0);
  report.min_eig_a_tau = hermitian_eig(A_tau.data).eigenvalues(0);
  const double floor = -tol.psd_rel_tol * report.norm_scale;
  report.is_ppt = report.min_eig_a >= floor && report.min_eig_a_tau >= floor;
  return report;
}

std::pair<Index, Index> rank_profile(const BlockMatrix& A, const TolerancePolicy& tol) {
  return {numerical_rank(A.data, tol), numerical_rank(partial_transpose(A).data, tol)};
}

std::pair<Index, Index> gram_rank_prediction(const ComplexVector& xi, const ComplexVector& eta,
                                             const ComplexVector& zeta,
                                             const TolerancePolicy& tol) {
  for (const auto* u : {&xi, &eta, &zeta})
    require(std::abs(u->norm() - 1.0) <= 1e-12, "gram_rank_prediction: vectors must be unit");

  auto gram2 = [&](const ComplexVector& a, const ComplexVector& b) {
    ComplexMatrix g(2, 2);
    g << inner(a, a), inner(a, b), inner(b, a), inner(b, b);
    return g;
  };
  ComplexMatrix gram3(3, 3);
  const ComplexVector* u[3] = {&xi, &eta, &zeta};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) gram3(a, b) = inner(*u[a], *u[b]);

  const Index s = 1 + numerical_rank(gram2(xi, eta), tol) + numerical_rank(gram2(eta, zeta), tol) +
                  numerical_rank(gram2(zeta, xi), tol);
  const Index t = 3 + numerical_rank(gram3, tol);
  return {s, t};
}

EdgeReport edge_search(const BlockMatrix& A, const SearchConfig& cfg,
                       const TolerancePolicy& tol) {
  require(cfg.restarts >= 1, "edge_search: restarts must be >= 1");
  require(is_ppt(A, tol).is_ppt, "edge_search: input is not PPT");

  const std::vector<ComplexMatrix> ker = matricized_kernel(A, tol);
  const std::vector<ComplexMatrix> ker_tau = matricized_kernel(partial_transpose(A), tol);
  const Index m = A.m, n = A.n;
  const bool no_constraints = ker.empty() && ker_tau.empty();

  auto objective_at = [&](const ComplexVector& x) {
    if (no_constraints) return 0.0;
    return smallest_singular_value(constraint_matrix(x, ker_tau, ker, n)).sigma_min;
  };
  auto objective = [&](const RealVector& p) {
    return objective_at(detail::sphere_point(p, m));
  };

  EdgeReport report;
  report.seed = cfg.seed;
  report.min_objective = std::numeric_limits<double>::infinity();

  detail::NelderMeadOptions opts;
  opts.max_iterations = cfg.max_iterations;
  opts.step_tolerance = cfg.step_tolerance;

  for (int k = 0; k < cfg.restarts; ++k) {
    detail::Sampler sampler(cfg.seed + static_cast<std::uint64_t>(k));
    const ComplexVector x0 = sampler.unit_vector(m);
    double minimum;
    ComplexVector arg;
    if (no_constraints) {
      minimum = 0.0;
      arg = x0;
    } else {
      const auto result = detail::nelder_mead(objective, detail::sphere_params(x0), opts);
      minimum = result.f;
      arg = detail::sphere_point(result.x, m);
    }
    report.per_restart_minima.push_back(minimum);
    if (minimum < report.min_objective) {
      report.min_objective = minimum;
      report.best_x = arg;
    }
    report.restarts_run = k + 1;
    if (report.min_objective < cfg.objective_tolerance) break;
  }

  if (no_constraints) {
    report.best_y = basis_vector(n, 0);
  } else {
    report.best_y = smallest_singular_value(
                        constraint_matrix(report.best_x, ker_tau, ker, n))
                        .right_vector;
  }
  report.verdict = report.min_objective < cfg.objective_tolerance
                       ? EdgeVerdict::ProductPairFound
                       : EdgeVerdict::NoPairFound;
  return report;
}

CandidateCheck candidate_check(const BlockMatrix& A, const ComplexVector& x,
                               const ComplexVector& y, const TolerancePolicy& tol) {
  require(x.norm() > 0.0 && y.norm() > 0.0, "candidate_check: zero vector");
  require(x.size() == A.m && y.size() == A.n, "candidate_check: vector dimension mismatch");

  const MatrixSubspace range = spectral_split(A.data, tol).range;
  const MatrixSubspace range_tau = spectral_split(partial_transpose(A).data, tol).range;

  const ConjugatePair pair = conjugate_partner(x, y);
  CandidateCheck check;
  check.residual_tau = residual_to_subspace(vectorize(pair.z), range_tau);
  check.residual_partner = residual_to_subspace(vectorize(pair.w), range);
  check.in_range_tau = check.residual_tau <= tol.membership_tol;
  check.partner_in_range = check.residual_partner <= tol.membership_tol;
  return check;
}

DualFaceResult dual_face_membership(const BlockMatrix& A, const DecomposableMap& phi,
                                    const TolerancePolicy& tol) {
  DualFaceResult result;
  result.pairing_value = pairing(A, phi);
  const double scale = A.data.norm() * kraus_scale(phi);
  result.member = std::abs(result.pairing_value) <= tol.membership_tol * scale;
  return result;
}

CertificationReport classify(const BlockMatrix& A, const std::optional<DecomposableMap>& phi,
                             const SearchConfig& cfg, const TolerancePolicy& tol) {
  CertificationReport report;
  report.ppt = is_ppt(A, tol);
  std::tie(report.s, report.t) = rank_profile(A, tol);

  if (phi.has_value()) {
    const DualFaceResult dual = dual_face_membership(A, *phi, tol);
    report.pairing_value = dual.pairing_value;
    report.dual_face_member = dual.member;
  }

  const bool full_rank = report.s == A.dim() || report.t == A.dim();
  if (!report.ppt.is_ppt || full_rank) {
    report.edge = skipped_edge_report(A, cfg);
  } else {
    report.edge = edge_search(A, cfg, tol);
  }
  return report;
}

}  // namespace edgestates
