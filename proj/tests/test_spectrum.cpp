#include "isospec/geometry_oracle.hpp"
#include "isospec/hwf_algebra.hpp"
#include "isospec/rep_theory.hpp"
#include "isospec/spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <doctest.h>

#include <algorithm>
#include <set>

using namespace isospec;

namespace {

struct Row {
  std::string value;
  long mult;
};

void check_lines(const std::vector<SpectralLine>& got, const std::vector<Row>& want) {
  REQUIRE(got.size() == want.size());
  for (size_t i = 0; i < want.size(); ++i) {
    CAPTURE(i);
    CHECK(got[i].value_exact == want[i].value);
    CHECK(got[i].total_multiplicity == want[i].mult);
  }
}

std::set<Weight> weights_of(const SpectralLine& l) {
  std::set<Weight> s;
  for (auto& c : l.contributions) s.insert(c.w);
  return s;
}

// Spectrum of -A from a floating point solver, as an independent check.
std::vector<double> float_spectrum(CaseId c, const Weight& w) {
  RationalMatrix A = laplacian_matrix(c, w);
  Eigen::MatrixXd D(A.rows(), A.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) D(i, j) = -A(i, j).get_d();
  Eigen::VectorXcd ev = D.eigenvalues();
  std::vector<double> out;
  for (int i = 0; i < ev.size(); ++i) out.push_back(ev[i].real());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("SO5 table up to 32") {
  auto lines = spectral_table(CaseId::SO5, 32);
  check_lines(lines, {{"0", 1},
                      {"8", 10},
                      {"16", 5},
                      {"32 - 4*sqrt(14)", 14},
                      {"min root of x^3 - 128*x^2 + 4896*x - 52736", 35},
                      {"24", 10},
                      {"40 - 4*sqrt(10)", 35},
                      {"min root of x^3 - 176*x^2 + 9120*x - 140288", 81},
                      {"64 - 4*sqrt(70)", 84},
                      {"32", 35}});
  CHECK(lines[3].value_approx == "17.033370");
  CHECK(lines[4].value_approx == "18.199148");
  CHECK(lines[6].value_approx == "27.350889");
  CHECK(lines[7].value_approx == "28.615481");
  CHECK(lines[8].value_approx == "30.533599");
}

TEST_CASE("SO5 index and nullity") {
  IndexReport r = index_nullity(CaseId::SO5);
  CHECK(r.cutoff == 32);
  CHECK(r.index == 275);
  CHECK(r.nullity == 35);
  CHECK(r.rotation_nullity_matches);
}

TEST_CASE("SO3xSO2 table up to 16") {
  auto lines = spectral_table(CaseId::SO3xSO2, 16);
  // the (2,2) summand contributes the smallest root of a cubic; see README
  check_lines(lines, {{"0", 1},
                      {"4", 6},
                      {"8", 5},
                      {"20 - 4*sqrt(7)", 5},
                      {"min root of x^3 - 80*x^2 + 1888*x - 12032", 10},
                      {"12", 6},
                      {"24 - 4*sqrt(5)", 16},
                      {"16", 11}});
  CHECK(weights_of(lines[6]) == std::set<Weight>{{1, 3}, {1, -3}, {2, 1}, {2, -1}});
  CHECK(weights_of(lines[2]) == std::set<Weight>{{1, 0}, {0, 2}, {0, -2}});
  CHECK(weights_of(lines[7]) == std::set<Weight>{{1, 2}, {1, -2}, {2, 0}});
  CHECK(weights_of(lines[4]) == std::set<Weight>{{2, 2}, {2, -2}});
  CHECK(lines[4].value_approx == "10.264417");
}

TEST_CASE("the (2,2) line is real: floating point eigensolver and geometry agree") {
  auto ev = float_spectrum(CaseId::SO3xSO2, {2, 2});
  REQUIRE(ev.size() == 3);
  CHECK(ev[0] == doctest::Approx(10.264417).epsilon(1e-6));
  OracleReport agree = matrix_agreement_check(CaseId::SO3xSO2, {2, 2}, 20, 42, 1e-8);
  CHECK(agree.pass);
  OracleReport rank = rank_independence_check(CaseId::SO3xSO2, {2, 2}, 20, 42);
  CHECK(rank.pass);
}

TEST_CASE("SO3xSO2 index and nullity") {
  IndexReport r = index_nullity(CaseId::SO3xSO2);
  CHECK(r.index == 49);
  CHECK(r.nullity == 11);
  CHECK(r.rotation_nullity_matches);
}

TEST_CASE("index and nullity are stable when the cutoff is raised") {
  for (CaseId c : {CaseId::SO5, CaseId::SO3xSO2}) {
    const Rational T = group_case(c).jacobi_threshold;
    auto base = spectral_table(c, T);
    auto wide = spectral_table(c, T + 4);
    std::vector<SpectralLine> kept;
    for (auto& l : wide)
      if (std::any_of(base.begin(), base.end(), [&](auto& b) { return b.factor == l.factor && b.index == l.index; }))
        kept.push_back(l);
    REQUIRE(kept.size() == base.size());
    for (size_t i = 0; i < base.size(); ++i) {
      CHECK(kept[i].value_exact == base[i].value_exact);
      CHECK(kept[i].total_multiplicity == base[i].total_multiplicity);
    }
    // everything new lies strictly above the threshold
    for (auto& l : wide)
      if (std::none_of(base.begin(), base.end(), [&](auto& b) { return b.factor == l.factor && b.index == l.index; }))
        CHECK(root_within(l.root, QSqrt2{T, 0}, QSqrt2{T + 4, 0}));
  }
}

TEST_CASE("sandwich bound and real spectra at every candidate weight") {
  for (CaseId c : {CaseId::SO5, CaseId::SO3xSO2}) {
    for (auto& cand : candidate_weights(c, Rational(group_case(c).jacobi_threshold))) {
      CAPTURE(to_string(cand.w));
      WeightSpectrum ws = analyze_weight(c, cand.w);
      CHECK(ws.all_real);
      CHECK(ws.sandwich);
      CHECK(ws.factorization_complete);
    }
  }
}

TEST_CASE("line values sit between the contributing Casimir bounds") {
  for (CaseId c : {CaseId::SO5, CaseId::SO3xSO2}) {
    const GroupCase& gc = group_case(c);
    for (auto& l : spectral_table(c, gc.jacobi_threshold)) {
      long lo = 1L << 40, hi = 0;
      for (auto& ct : l.contributions) {
        lo = std::min(lo, casimir(c, ct.w));
        hi = std::max(hi, casimir(c, ct.w));
      }
      CHECK(root_within(l.root, Rational(lo) * gc.r_min, Rational(hi) * gc.r_max));
    }
  }
}

TEST_CASE("multiplicity accounting") {
  for (CaseId c : {CaseId::SO5, CaseId::SO3xSO2}) {
    IndexReport r = index_nullity(c);
    long sum = 0;
    for (auto& l : r.lines) {
      long per = 0;
      for (auto& ct : l.contributions) per += long(ct.occurrences) * ct.irrep_dim;
      CHECK(per == l.total_multiplicity);
      sum += l.total_multiplicity;
    }
    CHECK(sum == r.index + r.nullity);
  }
}

TEST_CASE("cutoff zero reports nullity zero") {
  IndexReport r = index_nullity(CaseId::SO5, Rational(0));
  REQUIRE(r.lines.size() == 1);  // the constants, not strictly below 0
  CHECK(r.index == 0);
  CHECK(r.nullity == 0);
}

TEST_CASE("first nonzero eigenvalue and 2(n-1)") {
  CHECK(first_nonzero_eigenvalue(CaseId::SO5).value_exact == "8");
  CHECK(first_nonzero_eigenvalue(CaseId::SO3xSO2).value_exact == "4");
  CHECK(always_eigenvalue_2n_minus_2(CaseId::SO5));
  CHECK(always_eigenvalue_2n_minus_2(CaseId::SO3xSO2));
}

TEST_CASE("quadratic roots render in simplest surd form") {
  CHECK(quadratic_root_string(from_coeffs({496, -48, 1}), 1) == "24 - 4*sqrt(5)");
  CHECK(quadratic_root_string(from_coeffs({496, -48, 1}), 2) == "24 + 4*sqrt(5)");
  CHECK(quadratic_root_string(from_coeffs({-2, 0, 1}), 1) == "-sqrt(2)");
  CHECK(quadratic_root_string(from_coeffs({-1, -1, 1}), 1) == "1/2 - 1/2*sqrt(5)");
}
