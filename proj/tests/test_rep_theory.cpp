#include "isospec/rep_theory.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace isospec;

TEST_CASE("SO5 multiplicities agree with the Freudenthal zero-weight oracle") {
  // the oracle's stated range is k + 2l <= 14
  for (int k = 0; k <= 14; ++k)
    for (int l = 0; k + 2 * l <= 14; ++l) {
      CAPTURE(k);
      CAPTURE(l);
      CHECK(multiplicity(CaseId::SO5, {k, 2 * l}) == zero_weight_mult_oracle_so5(k, 2 * l));
    }
}

TEST_CASE("SO3xSO2 multiplicities agree with the monomial-count oracle") {
  for (int p = 0; p <= 10; ++p)
    for (int q = -10; q <= 10; ++q) {
      CAPTURE(p);
      CAPTURE(q);
      CHECK(multiplicity(CaseId::SO3xSO2, {p, q}) == mult_oracle_so3so2(p, q));
    }
}

TEST_CASE("known multiplicities") {
  CHECK(multiplicity(CaseId::SO5, {0, 0}) == 1);
  CHECK(multiplicity(CaseId::SO5, {8, 0}) == 5);
  CHECK(multiplicity(CaseId::SO5, {2, 2}) == 5);
  CHECK(multiplicity(CaseId::SO5, {1, 1}) == 0);
  CHECK(multiplicity(CaseId::SO3xSO2, {4, 4}) == 5);
  CHECK(multiplicity(CaseId::SO3xSO2, {1, 3}) == 2);
  CHECK(multiplicity(CaseId::SO3xSO2, {0, 1}) == 0);
}

TEST_CASE("Casimir eigenvalues and dimensions") {
  CHECK(casimir(CaseId::SO5, {8, 0}) == 88);
  CHECK(casimir(CaseId::SO5, {0, 2}) == 6);
  CHECK(casimir(CaseId::SO5, {1, 0}) == 4);
  CHECK(casimir(CaseId::SO3xSO2, {4, 4}) == 36);
  CHECK(casimir(CaseId::SO3xSO2, {1, -3}) == 11);
  CHECK_THROWS_AS(casimir(CaseId::SO5, {1, 1}), Error);

  CHECK(irrep_dim(CaseId::SO5, {1, 0}) == 5);
  CHECK(irrep_dim(CaseId::SO5, {0, 2}) == 10);
  CHECK(irrep_dim(CaseId::SO5, {2, 0}) == 14);
  CHECK(irrep_dim(CaseId::SO5, {2, 2}) == 81);
  CHECK(irrep_dim(CaseId::SO3xSO2, {3, -2}) == 7);
}

TEST_CASE("gate is decided exactly at the boundary") {
  // (2 - sqrt 2) * 27 = 15.82 <= 16 < 16.40 = (2 - sqrt 2) * 28
  CHECK(gate_passes(27, 16));
  CHECK_FALSE(gate_passes(28, 16));
  CHECK(gate_passes(0, 0));
  CHECK_FALSE(gate_passes(1, 0));
  GateEvaluation g = evaluate_gate(CaseId::SO3xSO2, {3, 4}, 16);
  CHECK(g.mu == 28);
  CHECK(g.lhs == 40);
  CHECK(g.lhs_sq == 1600);
  CHECK(g.rhs_sq == 1568);
  CHECK_FALSE(g.passes);
  CHECK(g.describe().find("1600 > 2mu^2 = 1568") != std::string::npos);
}

TEST_CASE("SO5 candidates at K = 32 are exactly the 20 listed weights") {
  std::set<Weight> expected = {{0, 0}, {0, 2}, {0, 4}, {0, 6}, {0, 8}, {1, 0}, {1, 2},
                               {1, 4}, {1, 6}, {2, 0}, {2, 2}, {2, 4}, {2, 6}, {3, 0},
                               {3, 2}, {3, 4}, {4, 0}, {4, 2}, {5, 0}, {6, 0}};
  std::set<Weight> got;
  for (auto& c : candidate_weights(CaseId::SO5, 32)) got.insert(c.w);
  CHECK(got == expected);
}

TEST_CASE("SO3xSO2 candidates at K = 16 omit (3,4)") {
  std::set<Weight> expected = {{0, 0}, {0, 2}, {0, 4}, {1, 0}, {1, 1}, {1, 2}, {1, 3},
                               {1, 4}, {1, 5}, {2, 0}, {2, 1}, {2, 2}, {2, 3}, {2, 4},
                               {3, 0}, {3, 1}, {3, 2}, {3, 3}, {4, 0}, {4, 1}, {4, 2}};
  std::set<Weight> got;
  for (auto& c : candidate_weights(CaseId::SO3xSO2, 16)) {
    got.insert(c.w);
    CHECK(c.doubled == (c.w.b > 0));
  }
  CHECK(got == expected);
}

TEST_CASE("candidates are sorted by Casimir and every gate pass is included") {
  for (CaseId c : {CaseId::SO5, CaseId::SO3xSO2}) {
    const Rational K = group_case(c).jacobi_threshold;
    auto cands = candidate_weights(c, K);
    CHECK(std::is_sorted(cands.begin(), cands.end(),
                         [](auto& x, auto& y) { return x.mu < y.mu; }));
    // brute force over a box far beyond the gate
    long count = 0;
    for (const Weight& w : weights_up_to_casimir(c, 200))
      if (gate_passes(casimir(c, w), K)) ++count;
    CHECK(count == long(cands.size()));
  }
}
