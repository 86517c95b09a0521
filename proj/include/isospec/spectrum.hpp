#pragma once

#include "isospec/exact_linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace isospec {

// One real eigenvalue of -Laplacian on a summand: root number `index`
// (1-based, ascending) of the irreducible factor `factor`.
struct Eigenvalue {
  IntPolynomial factor;
  int index = 1;
  RootInterval root;
  int occurrences = 1;  // algebraic multiplicity inside the summand matrix
};

struct WeightSpectrum {
  Weight w;
  long mu = 0;
  IntPolynomial charpoly;  // of -Laplacian matrix
  std::vector<Eigenvalue> eigenvalues;
  bool all_real = false;   // isolated real roots account for the full degree
  bool sandwich = false;   // r_min*mu <= lambda <= r_max*mu for every root
  bool factorization_complete = true;
};

WeightSpectrum analyze_weight(CaseId c, const Weight& w);

struct Contribution {
  Weight w;            // q < 0 appears explicitly for SO3xSO2 mirror pairs
  int occurrences = 0;
  long irrep_dim = 0;
};

struct SpectralLine {
  IntPolynomial factor;
  int index = 1;
  RootInterval root;
  std::string value_exact;   // "16", "32 - 4*sqrt(14)", "min root of x^3 - ..."
  std::string value_approx;  // 6 decimals
  std::vector<Contribution> contributions;
  long total_multiplicity = 0;

  bool is_rational() const { return factor.degree() == 1; }
  Rational rational_value() const;  // requires is_rational()
};

// Eigenvalues of -Laplacian with value <= K, merged across weights, ascending.
std::vector<SpectralLine> spectral_table(CaseId c, const Rational& K);

struct IndexReport {
  CaseId c;
  Rational cutoff;
  long index = 0;
  long nullity = 0;
  std::vector<SpectralLine> lines;
  bool rotation_nullity_matches = false;
};

// Defaults to the Jacobi threshold. A cutoff of 0 reports nullity 0.
IndexReport index_nullity(CaseId c, std::optional<Rational> cutoff = std::nullopt);

SpectralLine first_nonzero_eigenvalue(CaseId c);
bool always_eigenvalue_2n_minus_2(CaseId c);

// Exact test lo <= root <= hi where lo, hi are in Q(sqrt 2).
bool root_within(const RootInterval& iv, const QSqrt2& lo, const QSqrt2& hi);

// "a - b*sqrt(d)" for a root of an irreducible quadratic.
std::string quadratic_root_string(const IntPolynomial& f, int index);

}  // namespace isospec
