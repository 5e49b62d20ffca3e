#include "edgestates/families.hpp"

#include <cmath>
#include <stdexcept>

namespace edgestates {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// (a|b): linear in the first argument, conjugate-linear in the second.
Complex inner(const ComplexVector& a, const ComplexVector& b) { return b.dot(a); }

ComplexVector basis_vector(Index dim, Index k) {
  ComplexVector v = ComplexVector::Zero(dim);
  v(k) = 1.0;
  return v;
}

bool is_named_triple(FamilyKind kind) {
  return kind == FamilyKind::F76 || kind == FamilyKind::F75 || kind == FamilyKind::F65 ||
         kind == FamilyKind::F44;
}

// Modified Gram-Schmidt in column order; the spanning lists used here are
// linearly independent by construction, so nothing is ever dropped.
ComplexMatrix orthonormalize_columns(ComplexMatrix B) {
  for (Index j = 0; j < B.cols(); ++j) {
    for (int pass = 0; pass < 2; ++pass)
      for (Index k = 0; k < j; ++k) B.col(j) -= B.col(k).dot(B.col(j)) * B.col(k);
    const double norm = B.col(j).norm();
    require(norm > 1e-12, "orthonormalize: dependent spanning list");
    B.col(j) /= norm;
  }
  return B;
}

BlockMatrix reduced_state(const FamilySpec& spec) {
  const double l2 = spec.lambda * spec.lambda;
  const double m2 = spec.mu * spec.mu;
  ComplexMatrix X = ComplexMatrix::Zero(9, 9);
  const double diag[9] = {1.0, l2, m2, m2, 1.0, l2, l2, m2, 1.0};
  for (Index g = 0; g < 9; ++g) X(g, g) = diag[g];
  X(0, 4) = X(4, 0) = X(0, 8) = X(8, 0) = X(4, 8) = X(8, 4) = 1.0;
  X(1, 3) = inner(spec.eta, spec.xi);
  X(3, 1) = std::conj(X(1, 3));
  X(2, 6) = inner(spec.zeta, spec.xi);
  X(6, 2) = std::conj(X(2, 6));
  X(5, 7) = inner(spec.zeta, spec.eta);
  X(7, 5) = std::conj(X(5, 7));
  return BlockMatrix(3, 3, std::move(X));
}

BlockMatrix full_closed_form(const FamilySpec& spec) {
  const ComplexVector* v[3][3] = {{&spec.xi, &spec.alpha, &spec.gamma},
                                  {&spec.alpha, &spec.eta, &spec.beta},
                                  {&spec.gamma, &spec.beta, &spec.zeta}};
  const ComplexMatrix rho = rho_matrix(spec.lambda);
  ComplexMatrix X(9, 9);
  for (Index i = 0; i < 3; ++i)
    for (Index k = 0; k < 3; ++k)
      for (Index j = 0; j < 3; ++j)
        for (Index l = 0; l < 3; ++l)
          X(i * 3 + k, j * 3 + l) = rho(j, k) * rho(i, l) * inner(*v[j][k], *v[i][l]);
  return BlockMatrix(3, 3, std::move(X));
}

}  // namespace

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::F76: return "76";
    case FamilyKind::F75: return "75";
    case FamilyKind::F65: return "65";
    case FamilyKind::F44: return "44";
    case FamilyKind::F85: return "85";
    case FamilyKind::General: return "general";
  }
  return "?";
}

void validate(const FamilySpec& spec) {
  require(spec.lambda > 0.0 && spec.lambda != 1.0,
          "FamilySpec: lambda must satisfy lambda > 0, lambda != 1");
  require(spec.mu == 1.0 / spec.lambda, "FamilySpec: mu must be derived as 1/lambda");
  require(spec.nu >= 1, "FamilySpec: nu must be positive");
  require(spec.xi.size() == spec.nu && spec.eta.size() == spec.nu && spec.zeta.size() == spec.nu,
          "FamilySpec: xi, eta, zeta must live in C^nu");

  if (is_named_triple(spec.kind)) {
    require(!spec.t.has_value(), "FamilySpec: t is only meaningful for the 85 family");
    for (const auto* u : {&spec.xi, &spec.eta, &spec.zeta})
      require(std::abs(u->norm() - 1.0) <= 1e-12,
              "FamilySpec: named families need unit xi, eta, zeta");
    return;
  }

  require(spec.alpha.size() == spec.nu && spec.beta.size() == spec.nu &&
              spec.gamma.size() == spec.nu,
          "FamilySpec: alpha, beta, gamma must live in C^nu");
  if (spec.kind == FamilyKind::F85) {
    require(spec.t.has_value() && *spec.t > 1.0, "FamilySpec: t must satisfy t > 1");
    const ComplexVector* abg[3] = {&spec.alpha, &spec.beta, &spec.gamma};
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        const Complex ip = inner(*abg[a], *abg[b]);
        require(std::abs(ip - (a == b ? 1.0 : 0.0)) <= 1e-12,
                "FamilySpec: alpha, beta, gamma must be orthonormal");
      }
    for (const auto* u : {&spec.xi, &spec.eta, &spec.zeta})
      for (const auto* w : abg)
        require(std::abs(inner(*u, *w)) <= 1e-12,
                "FamilySpec: span{xi,eta,zeta} must be orthogonal to span{alpha,beta,gamma}");
  } else {
    require(!spec.t.has_value(), "FamilySpec: t is only meaningful for the 85 family");
  }
}

ComplexMatrix rho_matrix(double lambda) {
  require(lambda > 0.0, "rho_matrix: lambda must be positive");
  const double mu = 1.0 / lambda;
  ComplexMatrix rho(3, 3);
  rho << 1.0, lambda, mu, mu, 1.0, lambda, lambda, mu, 1.0;
  return rho;
}

BlockMatrix general_state(const FamilySpec& spec) {
  validate(spec);
  if (is_named_triple(spec.kind)) return reduced_state(spec);
  return full_closed_form(spec);
}

BlockMatrix gram_route_state(const FamilySpec& spec) {
  validate(spec);

  FamilySpec work = spec;
  if (is_named_triple(spec.kind)) {
    // Host an explicit orthonormal alpha, beta, gamma by padding into C^(nu+3).
    work.nu = spec.nu + 3;
    auto lift = [&](const ComplexVector& u) {
      ComplexVector v = ComplexVector::Zero(work.nu);
      v.head(spec.nu) = u;
      return v;
    };
    work.xi = lift(spec.xi);
    work.eta = lift(spec.eta);
    work.zeta = lift(spec.zeta);
    work.alpha = basis_vector(work.nu, spec.nu);
    work.beta = basis_vector(work.nu, spec.nu + 1);
    work.gamma = basis_vector(work.nu, spec.nu + 2);
  }

  const ComplexMatrix rho = rho_matrix(work.lambda);
  ComplexMatrix x_tau = ComplexMatrix::Zero(9, 9);
  for (Index p = 0; p < work.nu; ++p) {
    ComplexMatrix sigma(3, 3);
    sigma << work.xi(p), work.alpha(p), work.gamma(p),
             work.alpha(p), work.eta(p), work.beta(p),
             work.gamma(p), work.beta(p), work.zeta(p);
    const ComplexVector v = vectorize(rho.cwiseProduct(sigma));
    x_tau += v * v.adjoint();
  }
  return partial_transpose(BlockMatrix(3, 3, std::move(x_tau)));
}

NamedFamily named_family(FamilyKind kind, double lambda, std::optional<double> t) {
  require(kind != FamilyKind::General, "named_family: kind must be one of the named families");
  require(lambda > 0.0 && lambda != 1.0,
          "named_family: lambda must satisfy lambda > 0, lambda != 1");

  FamilySpec spec;
  spec.kind = kind;
  spec.lambda = lambda;
  spec.mu = 1.0 / lambda;

  if (kind == FamilyKind::F85) {
    require(t.has_value() && *t > 1.0, "named_family: t must satisfy t > 1");
    spec.t = t;
    spec.nu = 5;
    const double tt = *t;
    spec.xi = std::sqrt(tt) * basis_vector(5, 0);
    spec.eta = std::sqrt(tt) * basis_vector(5, 1);
    spec.zeta = std::sqrt(1.0 / (tt * (tt + 1.0))) * (spec.xi + spec.eta);
    spec.alpha = basis_vector(5, 2);
    spec.beta = basis_vector(5, 3);
    spec.gamma = basis_vector(5, 4);
  } else {
    require(!t.has_value(), "named_family: t is only meaningful for the 85 family");
    spec.nu = 3;
    spec.xi = basis_vector(3, 0);
    spec.eta = basis_vector(3, 1);
    switch (kind) {
      case FamilyKind::F76: spec.zeta = basis_vector(3, 2); break;
      case FamilyKind::F75:
        spec.zeta = (basis_vector(3, 0) + basis_vector(3, 1)) / std::sqrt(2.0);
        break;
      case FamilyKind::F65: spec.zeta = basis_vector(3, 0); break;
      case FamilyKind::F44:
        spec.xi = spec.eta = spec.zeta = basis_vector(3, 0);
        break;
      default: break;
    }
  }

  BlockMatrix state = general_state(spec);
  return NamedFamily{std::move(spec), std::move(state)};
}

DualSubspaces dual_subspaces(double lambda) {
  require(lambda > 0.0 && lambda != 1.0,
          "dual_subspaces: lambda must satisfy lambda > 0, lambda != 1");
  const double mu = 1.0 / lambda;

  auto unit = [](Index i, Index j) {
    ComplexMatrix z = ComplexMatrix::Zero(3, 3);
    z(i, j) = 1.0;
    return z;
  };

  const ComplexMatrix diag = (unit(0, 0) + unit(1, 1) + unit(2, 2)) / std::sqrt(3.0);
  const ComplexMatrix d_list[7] = {unit(0, 1), unit(1, 0), unit(1, 2), unit(2, 1),
                                   unit(2, 0), unit(0, 2), diag};
  const ComplexMatrix e_list[6] = {lambda * unit(0, 1) + mu * unit(1, 0),
                                   lambda * unit(1, 2) + mu * unit(2, 1),
                                   lambda * unit(2, 0) + mu * unit(0, 2),
                                   unit(0, 0), unit(1, 1), unit(2, 2)};

  ComplexMatrix d_basis(9, 7), e_basis(9, 6);
  for (int k = 0; k < 7; ++k) d_basis.col(k) = vectorize(d_list[k]);
  for (int k = 0; k < 6; ++k) e_basis.col(k) = vectorize(e_list[k]);

  return DualSubspaces{MatrixSubspace{9, orthonormalize_columns(std::move(d_basis))},
                       MatrixSubspace{9, orthonormalize_columns(std::move(e_basis))}};
}

std::array<FactorPair, 6> witnesses_85(double lambda, double t) {
  require(lambda > 0.0 && lambda != 1.0,
          "witnesses_85: lambda must satisfy lambda > 0, lambda != 1");
  require(t > 1.0, "witnesses_85: t must satisfy t > 1");
  const double mu = 1.0 / lambda;
  const double c = std::pow(t * t + t, 0.25);
  const Complex i(0.0, 1.0);

  auto vec3 = [](Complex a, Complex b, Complex c3) {
    ComplexVector v(3);
    v << a, b, c3;
    return v;
  };

  return {FactorPair{vec3(c, 0, lambda), vec3(1, 0, mu / c)},
          FactorPair{vec3(0, c, mu), vec3(0, 1, lambda / c)},
          FactorPair{vec3(1, -i * mu, 0), vec3(-i, lambda, 0)},
          FactorPair{vec3(-c, 0, lambda), vec3(1, 0, -mu / c)},
          FactorPair{vec3(0, -c, mu), vec3(0, 1, -lambda / c)},
          FactorPair{vec3(1, i * mu, 0), vec3(i, lambda, 0)}};
}

}  // namespace edgestates
