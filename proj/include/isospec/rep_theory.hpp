#pragma once

#include "isospec/types.hpp"

#include <vector>

namespace isospec {

// Number of copies of V_w inside L^2(M).
int multiplicity(CaseId c, const Weight& w);

// Casimir eigenvalue on V_w (the normal-metric Laplace eigenvalue).
long casimir(CaseId c, const Weight& w);

// Complex dimension of V_w. For SO3xSO2 this is 2p+1 regardless of q.
long irrep_dim(CaseId c, const Weight& w);

// Zero-weight multiplicity of V_{k,2l} via Freudenthal's recursion on B2.
int zero_weight_mult_oracle_so5(int k, int two_ell, int bound = 14);

// Multiplicity by counting monomials of Sym^p minus Sym^{p-2} in the
// (-1)^q eigenspace of eps = diag(-1,-1,1).
int mult_oracle_so3so2(int p, int q);

// Exact test of (2 - sqrt 2) * mu <= K.
bool gate_passes(long mu, const Rational& K);

struct GateEvaluation {
  Weight w;
  long mu = 0;
  Rational lhs;       // 2 mu - K
  Rational lhs_sq;    // (2 mu - K)^2
  Rational rhs_sq;    // 2 mu^2
  bool passes = false;
  std::string describe() const;
};

GateEvaluation evaluate_gate(CaseId c, const Weight& w, const Rational& K);

struct Candidate {
  Weight w;
  long mu = 0;
  int multiplicity = 0;
  bool doubled = false;  // SO3xSO2 with q > 0: (p,-q) contributes equally
};

// All weights with nonzero multiplicity passing the gate at K. Sorted by
// Casimir, then lexicographically. SO3xSO2 returns q >= 0 representatives.
std::vector<Candidate> candidate_weights(CaseId c, const Rational& K);

// Every weight with nonzero multiplicity and Casimir <= mu_max (q >= 0).
std::vector<Weight> weights_up_to_casimir(CaseId c, long mu_max);

}  // namespace isospec
