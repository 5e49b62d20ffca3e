#include "edgestates/maps.hpp"

#include <limits>
#include <stdexcept>

#include "edgestates/detail/optimize.hpp"
#include "edgestates/detail/random.hpp"
#include "edgestates/numlin.hpp"

namespace edgestates {

namespace {

ComplexMatrix unit_matrix(Index m, Index i, Index j) {
  ComplexMatrix e = ComplexMatrix::Zero(m, m);
  e(i, j) = 1.0;
  return e;
}

}  // namespace

void validate(const DecomposableMap& phi) {
  if (phi.m <= 0 || phi.n <= 0)
    throw std::invalid_argument("DecomposableMap: m, n must be positive");
  if (phi.cp_kraus.empty() && phi.ccp_kraus.empty())
    throw std::invalid_argument("DecomposableMap: at least one Kraus list must be nonempty");
  for (const auto& V : phi.cp_kraus)
    if (V.rows() != phi.m || V.cols() != phi.n)
      throw std::invalid_argument("DecomposableMap: cp Kraus matrix is not m x n");
  for (const auto& W : phi.ccp_kraus)
    if (W.rows() != phi.m || W.cols() != phi.n)
      throw std::invalid_argument("DecomposableMap: ccp Kraus matrix is not m x n");
}

ComplexMatrix apply_map(const DecomposableMap& phi, const ComplexMatrix& X) {
  if (X.rows() != phi.m || X.cols() != phi.m)
    throw std::invalid_argument("apply_map: input must be m x m");
  ComplexMatrix out = ComplexMatrix::Zero(phi.n, phi.n);
  for (const auto& V : phi.cp_kraus) out += V.adjoint() * X * V;
  for (const auto& W : phi.ccp_kraus) out += W.adjoint() * X.transpose() * W;
  return out;
}

Complex pairing(const BlockMatrix& A, const DecomposableMap& phi) {
  if (A.m != phi.m || A.n != phi.n)
    throw std::invalid_argument("pairing: block matrix does not match the map's m, n");
  Complex total(0.0, 0.0);
  for (Index i = 0; i < phi.m; ++i) {
    for (Index j = 0; j < phi.m; ++j) {
      const ComplexMatrix img = apply_map(phi, unit_matrix(phi.m, i, j));
      total += (A.block(i, j) * img.transpose()).trace();
    }
  }
  return total;
}

double kraus_scale(const DecomposableMap& phi) {
  double scale = 0.0;
  for (const auto& V : phi.cp_kraus) scale += V.squaredNorm();
  for (const auto& W : phi.ccp_kraus) scale += W.squaredNorm();
  return scale;
}

double real_pairing(const BlockMatrix& A, const DecomposableMap& phi, double tol) {
  const Complex value = pairing(A, phi);
  const double scale = A.data.norm() * kraus_scale(phi);
  if (std::abs(value.imag()) > tol * scale)
    throw std::invalid_argument("real_pairing: pairing has a significant imaginary part");
  return value.real();
}

DecomposableMap phi_family(double lambda) {
  if (!(lambda > 0.0) || lambda == 1.0)
    throw std::invalid_argument("phi_family: lambda must satisfy lambda > 0, lambda != 1");
  const double mu = 1.0 / lambda;
  DecomposableMap phi;
  phi.m = phi.n = 3;
  phi.cp_kraus = {unit_matrix(3, 0, 0) - unit_matrix(3, 1, 1),
                  unit_matrix(3, 1, 1) - unit_matrix(3, 2, 2),
                  unit_matrix(3, 2, 2) - unit_matrix(3, 0, 0)};
  phi.ccp_kraus = {mu * unit_matrix(3, 0, 1) - lambda * unit_matrix(3, 1, 0),
                   mu * unit_matrix(3, 1, 2) - lambda * unit_matrix(3, 2, 1),
                   mu * unit_matrix(3, 2, 0) - lambda * unit_matrix(3, 0, 2)};
  return phi;
}

PositivityMargin positivity_margin(const DecomposableMap& phi, int restarts,
                                   std::uint64_t seed) {
  validate(phi);
  if (restarts < 1) throw std::invalid_argument("positivity_margin: restarts must be >= 1");
  const Index m = phi.m;

  auto objective = [&](const RealVector& p) {
    const ComplexVector x = detail::sphere_point(p, m);
    const ComplexMatrix img = apply_map(phi, x * x.adjoint());
    return hermitian_eig(img).eigenvalues(0);
  };

  PositivityMargin out;
  out.margin = std::numeric_limits<double>::infinity();
  detail::NelderMeadOptions opts;
  for (int k = 0; k < restarts; ++k) {
    detail::Sampler sampler(seed + static_cast<std::uint64_t>(k));
    const ComplexVector x0 = sampler.unit_vector(m);
    const auto result = detail::nelder_mead(objective, detail::sphere_params(x0), opts);
    if (result.f < out.margin) {
      out.margin = result.f;
      out.argmin_x = detail::sphere_point(result.x, m);
    }
  }
  return out;
}

}  // namespace edgestates
