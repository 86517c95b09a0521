#include "isospec/geometry_oracle.hpp"
#include "isospec/rep_theory.hpp"

#include <doctest.h>

#include <cmath>

using namespace isospec;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kSamples = 60;
constexpr std::uint64_t kSeed = 42;

void require_all_pass(const std::vector<OracleReport>& reps) {
  REQUIRE(!reps.empty());
  for (auto& r : reps) {
    CAPTURE(r.label);
    CAPTURE(r.max_residual);
    CHECK(r.pass);
  }
}

// max over samples of |Laplacian(basis_i) - sum_j M(i,j) basis_j|, relative
double row_residual(CaseId c, const Weight& w, const RationalMatrix& M) {
  auto B = basis(c, w);
  const int N = ambient_model(c).N;
  double worst = 0;
  for (const SamplePoint& s : sample_points(c, kPi / 8, 10, 3)) {
    auto jets = hw_jets(c, s.x);
    std::vector<Jet> mj;
    for (auto& m : B) mj.push_back(monomial_jet(m, jets, N));
    for (size_t i = 0; i < B.size(); ++i) {
      Complex rhs = 0;
      double scale = 1;
      for (size_t j = 0; j < B.size(); ++j) {
        rhs += M(i, j).get_d() * mj[j].value;
        scale = std::max(scale, std::abs(M(i, j).get_d() * mj[j].value));
      }
      worst = std::max(worst, std::abs(submanifold_laplacian(mj[i], s) - rhs) / scale);
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("sample points are deterministic and lie on the minimal level") {
  for (CaseId c : {CaseId::SO5, CaseId::SO3xSO2}) {
    auto a = sample_points(c, kPi / 8, 5, kSeed), b = sample_points(c, kPi / 8, 5, kSeed);
    auto other = sample_points(c, kPi / 8, 5, kSeed + 1);
    for (int i = 0; i < 5; ++i) {
      CHECK((a[i].x - b[i].x).norm() == 0);
      CHECK((a[i].x - other[i].x).norm() > 1e-6);
      CHECK(std::abs(cm_jet(c, a[i].x).value) < 1e-12);
      CHECK(a[i].tangent_frame.cols() == ambient_model(c).dim_m);
    }
  }
}

TEST_CASE("identity suites pass at 1e-8") {
  for (CaseId c : {CaseId::SO5, CaseId::SO3xSO2}) {
    for (Suite s : {Suite::Sanity, Suite::Gradients, Suite::Laplacians, Suite::Eigenfunctions}) {
      CAPTURE(to_string(s));
      require_all_pass(verify_identities(c, s, kSamples, kSeed, 1e-8));
    }
  }
  CHECK(verify_identities(CaseId::SO5, Suite::Gradients, 2, kSeed, 1e-8).size() == 14);
  CHECK(verify_identities(CaseId::SO3xSO2, Suite::Gradients, 2, kSeed, 1e-8).size() == 18);
  CHECK(verify_identities(CaseId::SO5, Suite::Laplacians, 2, kSeed, 1e-8).size() == 5);
  CHECK(verify_identities(CaseId::SO3xSO2, Suite::Laplacians, 2, kSeed, 1e-8).size() == 6);
}

TEST_CASE("s-pair eigenvalues -32 -+ 4 sqrt 14") {
  auto reps = verify_identities(CaseId::SO5, Suite::SPair, kSamples, kSeed, 1e-8);
  CHECK(reps.size() == 4);
  require_all_pass(reps);
}

TEST_CASE("SO3xSO2 relations hold pointwise") {
  require_all_pass(verify_identities(CaseId::SO3xSO2, Suite::Relations, kSamples, kSeed, 1e-8));
}

TEST_CASE("mean curvature vanishes on the minimal level and follows the closed form elsewhere") {
  CHECK(std::abs(mean_curvature_formula(kPi / 8)) < 1e-12);
  for (CaseId c : {CaseId::SO5, CaseId::SO3xSO2}) {
    require_all_pass(curvature_checks(c, kPi / 8, 20, kSeed, 1e-9));
    for (double theta : {kPi / 12, 0.2, 0.6}) require_all_pass(curvature_checks(c, theta, 20, kSeed, 1e-6));
  }
}

TEST_CASE("explicit fixtures") {
  require_all_pass(fixture_checks(CaseId::SO5, 1e-8));
  require_all_pass(fixture_checks(CaseId::SO3xSO2, 1e-8));
}

TEST_CASE("torus equivariance") {
  for (CaseId c : {CaseId::SO5, CaseId::SO3xSO2}) CHECK(equivariance_check(c, 20, kSeed, 1e-9).pass);
}

TEST_CASE("rank and matrix agreement at every candidate weight") {
  for (CaseId c : {CaseId::SO5, CaseId::SO3xSO2}) {
    for (auto& cand : candidate_weights(c, Rational(group_case(c).jacobi_threshold))) {
      CAPTURE(to_string(cand.w));
      OracleReport rank = rank_independence_check(c, cand.w, 10, kSeed);
      CHECK(rank.pass);
      CHECK(rank.max_residual == 0);
      CHECK(matrix_agreement_check(c, cand.w, 5, kSeed, 1e-8).pass);
    }
  }
}

TEST_CASE("negative control: the closed-form recurrence at (1,3) is rejected numerically") {
  const Weight w{1, 3};
  CHECK(row_residual(CaseId::SO3xSO2, w, laplacian_matrix(CaseId::SO3xSO2, w)) < 1e-8);
  CHECK(row_residual(CaseId::SO3xSO2, w, recurrence_matrix(CaseId::SO3xSO2, w)) > 1e-2);
}

TEST_CASE("tangential gradient of a coordinate is the projected basis vector") {
  auto s = sample_points(CaseId::SO3xSO2, kPi / 8, 1, 9)[0];
  const int N = ambient_model(CaseId::SO3xSO2).N;
  Jet xi = Jet::constant(N, 0);
  xi.value = s.x[0];
  xi.grad = Eigen::VectorXcd::Zero(N);
  xi.grad[0] = 1;
  Eigen::VectorXcd g = tangential_gradient(xi, s);
  Eigen::VectorXd e0 = Eigen::VectorXd::Zero(N);
  e0[0] = 1;
  Eigen::VectorXd expect = s.tangent_frame * (s.tangent_frame.transpose() * e0);
  CHECK((g.real() - expect).norm() < 1e-12);
  CHECK(g.imag().norm() == 0);
}

TEST_CASE("suite names round trip") {
  for (Suite s : {Suite::Gradients, Suite::Laplacians, Suite::Eigenfunctions, Suite::SPair,
                  Suite::Relations, Suite::Sanity})
    CHECK(parse_suite(to_string(s)) == s);
  CHECK_THROWS_AS(parse_suite("bogus"), Error);
}
