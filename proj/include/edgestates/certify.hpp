#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edgestates/blocks.hpp"
#include "edgestates/maps.hpp"
#include "edgestates/numlin.hpp"
#include "edgestates/types.hpp"

namespace edgestates {

struct PptReport {
  bool is_ppt = false;
  double min_eig_a = 0.0;
  double min_eig_a_tau = 0.0;
  double norm_scale = 0.0;  // ||A||_F
};

enum class EdgeVerdict { ProductPairFound, NoPairFound };

std::string to_string(EdgeVerdict verdict);

struct EdgeReport {
  EdgeVerdict verdict = EdgeVerdict::NoPairFound;
  double min_objective = 0.0;
  ComplexVector best_x;
  ComplexVector best_y;
  int restarts_run = 0;
  std::uint64_t seed = 0;
  std::vector<double> per_restart_minima;
};

struct SearchConfig {
  int restarts = 300;
  std::uint64_t seed = 0;
  int max_iterations = 500;
  double step_tolerance = 1e-12;
  double objective_tolerance = 1e-10;  // coincides with membership_tol by default
};

struct CertificationReport {
  PptReport ppt;
  Index s = 0;  // rank(A)
  Index t = 0;  // rank(A^tau)
  std::optional<Complex> pairing_value;
  std::optional<bool> dual_face_member;
  EdgeReport edge;
};

/// PSD verdict on A and A^tau from the smallest eigenvalues, both
/// measured against psd_rel_tol * ||A||_F. Throws on non-Hermitian input.
PptReport is_ppt(const BlockMatrix& A, const TolerancePolicy& tol = {});

/// (rank A, rank A^tau) under the tolerance policy.
std::pair<Index, Index> rank_profile(const BlockMatrix& A, const TolerancePolicy& tol = {});

/// Predicted rank profile from the construction vectors alone:
/// s = 1 + sum of the ranks of the three pairwise 2 x 2 Gram blocks,
/// t = 3 + rank of the 3 x 3 Gram matrix. Requires unit vectors.
std::pair<Index, Index> gram_rank_prediction(const ComplexVector& xi, const ComplexVector& eta,
                                             const ComplexVector& zeta,
                                             const TolerancePolicy& tol = {});

/// Numerical range-criterion search. For unit x, stack the rows
/// x* K_j over the matricized kernel basis {K_j} of A^tau and x^T L_j
/// over the kernel basis {L_j} of A; the objective is the smallest
/// singular value of that stack (0 when it has no rows). A zero at
/// (x, y) certifies a product vector x y* in range(A^tau) whose partner
/// conj(x) y* lies in range(A), i.e. the state is not edge. Multistart
/// Nelder-Mead over the phase-gauged unit sphere; restart k draws from
/// seed + k; stops early once a restart beats objective_tolerance.
/// Deterministic given the config. Throws when A is not PPT.
EdgeReport edge_search(const BlockMatrix& A, const SearchConfig& cfg,
                       const TolerancePolicy& tol = {});

struct CandidateCheck {
  bool in_range_tau = false;
  bool partner_in_range = false;
  double residual_tau = 0.0;
  double residual_partner = 0.0;
};

/// Residuals of x y* against range(A^tau) and of conj(x) y* against
/// range(A); the booleans compare against membership_tol.
CandidateCheck candidate_check(const BlockMatrix& A, const ComplexVector& x,
                               const ComplexVector& y, const TolerancePolicy& tol = {});

struct DualFaceResult {
  Complex pairing_value;
  bool member = false;
};

/// Whether <A, phi> vanishes within membership_tol * ||A||_F * kraus_scale(phi).
DualFaceResult dual_face_membership(const BlockMatrix& A, const DecomposableMap& phi,
                                    const TolerancePolicy& tol = {});

/// Aggregated verdicts. The edge search is skipped (verdict
/// ProductPairFound, zero restarts) when either rank is full -- such
/// states are interior points of the PPT cone -- and when A fails the
/// PPT test, where edge-ness is not defined.
CertificationReport classify(const BlockMatrix& A, const std::optional<DecomposableMap>& phi,
                             const SearchConfig& cfg = {}, const TolerancePolicy& tol = {});

}  // namespace edgestates
