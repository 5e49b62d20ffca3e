#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "edgestates/certify.hpp"
#include "edgestates/families.hpp"
#include "test_helpers.hpp"

using namespace edgestates;

namespace {

const double kLambdaGrid[] = {0.4, 2.0, 5.0};
const FamilyKind kTripleKinds[] = {FamilyKind::F76, FamilyKind::F75, FamilyKind::F65,
                                   FamilyKind::F44};

ComplexVector basis3(Index k) {
  ComplexVector v = ComplexVector::Zero(3);
  v(k) = 1.0;
  return v;
}

BlockMatrix normalized_identity() {
  return BlockMatrix(3, 3, ComplexMatrix::Identity(9, 9) / 9.0);
}

struct SeparableMixture {
  BlockMatrix state;
  std::vector<ComplexVector> xs, ys;
};

SeparableMixture random_separable_mixture(detail::Sampler& sampler, int terms) {
  SeparableMixture mix;
  ComplexMatrix A = ComplexMatrix::Zero(9, 9);
  for (int k = 0; k < terms; ++k) {
    const ComplexVector x = sampler.unit_vector(3);
    const ComplexVector y = sampler.unit_vector(3);
    const ComplexVector v = vectorize(x * y.adjoint());
    A += (0.2 + sampler.uniform01()) * (v * v.adjoint());
    mix.xs.push_back(x);
    mix.ys.push_back(y);
  }
  mix.state = BlockMatrix(3, 3, A);
  return mix;
}

SearchConfig quick_config(std::uint64_t seed, int restarts = 40) {
  SearchConfig cfg;
  cfg.restarts = restarts;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("is_ppt: identity, families, and an NPT pure state") {
  CHECK(is_ppt(normalized_identity()).is_ppt);

  for (FamilyKind kind : kTripleKinds) CHECK(is_ppt(named_family(kind, 2.0).state).is_ppt);
  CHECK(is_ppt(named_family(FamilyKind::F85, 2.0, 2.0).state).is_ppt);

  ComplexMatrix z = ComplexMatrix::Zero(3, 3);
  z(0, 0) = z(1, 1) = 1.0 / std::sqrt(2.0);
  const PptReport report = is_ppt(pure_state(z));
  CHECK_FALSE(report.is_ppt);
  CHECK(report.min_eig_a_tau == doctest::Approx(-0.5));
  CHECK(report.min_eig_a >= -1e-14);

  BlockMatrix skew(3, 3, ComplexMatrix::Zero(9, 9));
  skew.data(0, 1) = 1.0;
  CHECK_THROWS_AS(is_ppt(skew), std::invalid_argument);
}

TEST_CASE("rank_profile: family table rows and symmetry") {
  CHECK(rank_profile(named_family(FamilyKind::F76, 2.0).state) == std::pair<Index, Index>{7, 6});
  CHECK(rank_profile(named_family(FamilyKind::F85, 2.0, 2.0).state) ==
        std::pair<Index, Index>{8, 5});
  CHECK(rank_profile(BlockMatrix(3, 3, ComplexMatrix::Identity(9, 9))) ==
        std::pair<Index, Index>{9, 9});

  detail::Sampler sampler(51);
  for (int rep = 0; rep < 10; ++rep) {
    const BlockMatrix A(3, 3, edgestates::testing::random_psd(sampler, 9, 1 + rep % 5));
    const auto direct = rank_profile(A);
    const auto swapped = rank_profile(partial_transpose(A));
    CHECK(direct.first == swapped.second);
    CHECK(direct.second == swapped.first);
  }
}

TEST_CASE("gram_rank_prediction: the four canonical choices of zeta") {
  const ComplexVector e1 = basis3(0), e2 = basis3(1), e3 = basis3(2);
  const ComplexVector mix = (e1 + e2) / std::sqrt(2.0);
  CHECK(gram_rank_prediction(e1, e2, e3) == std::pair<Index, Index>{7, 6});
  CHECK(gram_rank_prediction(e1, e2, mix) == std::pair<Index, Index>{7, 5});
  CHECK(gram_rank_prediction(e1, e2, e1) == std::pair<Index, Index>{6, 5});
  CHECK(gram_rank_prediction(e1, e1, e1) == std::pair<Index, Index>{4, 4});
  CHECK_THROWS_AS(gram_rank_prediction(2.0 * e1, e2, e3), std::invalid_argument);
}

TEST_CASE("gram_rank_prediction: matches rank_profile on random unit triples") {
  detail::Sampler sampler(52);
  for (int rep = 0; rep < 100; ++rep) {
    // host the triple in C^6 so alpha, beta, gamma fit orthogonally
    const ComplexVector xi = sampler.unit_vector(3);
    const ComplexVector eta = sampler.unit_vector(3);
    const ComplexVector zeta = sampler.unit_vector(3);

    FamilySpec spec;
    spec.kind = FamilyKind::General;
    spec.lambda = 2.0;
    spec.mu = 0.5;
    spec.nu = 6;
    auto lift = [](const ComplexVector& u) {
      ComplexVector v = ComplexVector::Zero(6);
      v.head(3) = u;
      return v;
    };
    spec.xi = lift(xi);
    spec.eta = lift(eta);
    spec.zeta = lift(zeta);
    spec.alpha = ComplexVector::Zero(6);
    spec.beta = ComplexVector::Zero(6);
    spec.gamma = ComplexVector::Zero(6);
    spec.alpha(3) = spec.beta(4) = spec.gamma(5) = 1.0;

    const auto predicted = gram_rank_prediction(xi, eta, zeta);
    const auto measured = rank_profile(general_state(spec));
    CHECK(predicted == measured);
  }
}

TEST_CASE("edge_search: full-rank PPT state has an empty constraint stack") {
  const EdgeReport report = edge_search(normalized_identity(), quick_config(1, 5));
  CHECK(report.verdict == EdgeVerdict::ProductPairFound);
  CHECK(report.min_objective == 0.0);
  const CandidateCheck check = candidate_check(normalized_identity(), report.best_x, report.best_y);
  CHECK(check.in_range_tau);
  CHECK(check.partner_in_range);
}

TEST_CASE("edge_search: a pure product state is its own witness") {
  const ComplexMatrix z = basis3(0) * basis3(0).adjoint();
  const EdgeReport report = edge_search(pure_state(z), quick_config(3, 60));
  REQUIRE(report.verdict == EdgeVerdict::ProductPairFound);
  CHECK(std::abs(report.best_x.dot(basis3(0))) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(std::abs(report.best_y.dot(basis3(0))) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("edge_search: rejects non-PPT input") {
  ComplexMatrix z = ComplexMatrix::Zero(3, 3);
  z(0, 0) = z(1, 1) = 1.0;
  CHECK_THROWS_AS(edge_search(pure_state(z), quick_config(1)), std::invalid_argument);
}

TEST_CASE("edge_search: no product pair for the (4,4) family") {
  const BlockMatrix X = named_family(FamilyKind::F44, 2.0).state;
  const EdgeReport report = edge_search(X, quick_config(7, 60));
  CHECK(report.verdict == EdgeVerdict::NoPairFound);
  CHECK(report.min_objective > 1e-4);
  CHECK(report.restarts_run == 60);
  CHECK(report.per_restart_minima.size() == 60);
}

TEST_CASE("edge_search: separable mixtures always yield a confirmed pair") {
  detail::Sampler sampler(53);
  for (int rep = 0; rep < 10; ++rep) {
    const SeparableMixture mix = random_separable_mixture(sampler, 2 + rep % 2);
    const EdgeReport report = edge_search(mix.state, quick_config(100 + rep, 60));
    REQUIRE(report.verdict == EdgeVerdict::ProductPairFound);
    const CandidateCheck check = candidate_check(mix.state, report.best_x, report.best_y);
    CHECK(check.residual_tau <= 10.0 * TolerancePolicy{}.membership_tol);
    CHECK(check.residual_partner <= 10.0 * TolerancePolicy{}.membership_tol);
  }
}

TEST_CASE("edge_search: deterministic for identical inputs") {
  const BlockMatrix X = named_family(FamilyKind::F65, 5.0).state;
  const EdgeReport a = edge_search(X, quick_config(99, 20));
  const EdgeReport b = edge_search(X, quick_config(99, 20));
  CHECK(a.min_objective == b.min_objective);
  CHECK(a.best_x == b.best_x);
  CHECK(a.best_y == b.best_y);
  CHECK(a.per_restart_minima == b.per_restart_minima);
  CHECK(a.restarts_run == b.restarts_run);
  CHECK(to_string(a.verdict) == to_string(b.verdict));
}

TEST_CASE("candidate_check: the (8,5) witnesses and a product sanity case") {
  const BlockMatrix X = named_family(FamilyKind::F85, 2.0, 2.0).state;
  for (const FactorPair& w : witnesses_85(2.0, 2.0)) {
    const CandidateCheck check = candidate_check(X, w.x, w.y);
    CHECK(check.in_range_tau);
    CHECK_FALSE(check.partner_in_range);
    CHECK(check.residual_partner > 1e-3);
  }

  detail::Sampler sampler(54);
  const ComplexVector x = sampler.unit_vector(3);
  const ComplexVector y = sampler.unit_vector(3);
  const BlockMatrix P = pure_state(x * y.adjoint());
  // the generating pair for pure_state(x y*) is (conj(x), y)
  const CandidateCheck check = candidate_check(P, x.conjugate(), y);
  CHECK(check.in_range_tau);
  CHECK(check.partner_in_range);

  CHECK_THROWS_AS(candidate_check(P, ComplexVector::Zero(3), y), std::invalid_argument);
}

TEST_CASE("dual_face_membership: member for families 1-4, not for 85 or identity") {
  const TolerancePolicy tol;
  const BlockMatrix X76 = named_family(FamilyKind::F76, 2.0).state;
  const DualFaceResult member = dual_face_membership(X76, phi_family(2.0), tol);
  CHECK(member.member);
  CHECK(std::abs(member.pairing_value) <= 1e-10 * X76.data.norm());

  const BlockMatrix X85 = named_family(FamilyKind::F85, 2.0, 2.0).state;
  const DualFaceResult non_member = dual_face_membership(X85, phi_family(2.0), tol);
  CHECK_FALSE(non_member.member);
  CHECK(non_member.pairing_value.real() > 0.0);

  const DualFaceResult identity = dual_face_membership(
      BlockMatrix(3, 3, ComplexMatrix::Identity(9, 9)), phi_family(2.0), tol);
  CHECK_FALSE(identity.member);
  CHECK(identity.pairing_value.real() > 0.0);
  // direct evaluation: 3 * ||e11 - e22||^2 + 3 * (mu^2 + lambda^2)
  CHECK(identity.pairing_value.real() == doctest::Approx(18.75));
}

TEST_CASE("dual-face membership implies an edge verdict across the lambda grid") {
  for (FamilyKind kind : kTripleKinds) {
    for (double lambda : kLambdaGrid) {
      const BlockMatrix X = named_family(kind, lambda).state;
      REQUIRE(is_ppt(X).is_ppt);
      REQUIRE(dual_face_membership(X, phi_family(lambda)).member);
      const EdgeReport report = edge_search(X, quick_config(11, 40));
      CHECK(report.verdict == EdgeVerdict::NoPairFound);
    }
  }
}

TEST_CASE("classify: family states and the interior point") {
  const CertificationReport f65 =
      classify(named_family(FamilyKind::F65, 5.0).state, phi_family(5.0), quick_config(42, 60));
  CHECK(f65.ppt.is_ppt);
  CHECK(f65.s == 6);
  CHECK(f65.t == 5);
  REQUIRE(f65.dual_face_member.has_value());
  CHECK(*f65.dual_face_member);
  CHECK(f65.edge.verdict == EdgeVerdict::NoPairFound);

  const CertificationReport id = classify(normalized_identity(), std::nullopt, quick_config(1));
  CHECK(id.ppt.is_ppt);
  CHECK(id.s == 9);
  CHECK(id.t == 9);
  CHECK(id.edge.verdict == EdgeVerdict::ProductPairFound);
  CHECK(id.edge.restarts_run == 0);  // skipped: interior of the PPT cone
  CHECK_FALSE(id.pairing_value.has_value());

  const CertificationReport f75 =
      classify(named_family(FamilyKind::F75, 0.4).state, std::nullopt, quick_config(8, 60));
  CHECK(f75.s == 7);
  CHECK(f75.t == 5);
  CHECK(f75.edge.verdict == EdgeVerdict::NoPairFound);
}

TEST_CASE("classify: non-PPT input reports ppt=false and skips the search") {
  ComplexMatrix z = ComplexMatrix::Zero(3, 3);
  z(0, 0) = z(1, 1) = 1.0;
  const CertificationReport report = classify(pure_state(z), std::nullopt, quick_config(1));
  CHECK_FALSE(report.ppt.is_ppt);
  CHECK(report.edge.restarts_run == 0);
}
