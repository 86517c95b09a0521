#pragma once

#include "isospec/types.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace isospec {

enum class Gen : int { Zeta = 0, Nu, Kappa, Sigma, Rho, Beta };
constexpr int kNumGens = 6;
const char* gen_name(Gen g);

// Contribution of one generator to the weight grading.
Weight gen_weight(CaseId c, Gen g);
bool gen_available(CaseId c, Gen g);

struct Monomial {
  std::array<int, kNumGens> e{};

  int& operator[](Gen g) { return e[int(g)]; }
  int operator[](Gen g) const { return e[int(g)]; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

Monomial make_monomial(std::initializer_list<std::pair<Gen, int>> factors);
Monomial operator*(const Monomial& x, const Monomial& y);
std::string to_string(const Monomial& m);

using HWPolynomial = std::map<Monomial, Rational>;

HWPolynomial operator+(const HWPolynomial& x, const HWPolynomial& y);
HWPolynomial operator*(const HWPolynomial& x, const HWPolynomial& y);
HWPolynomial operator*(const Rational& s, const HWPolynomial& x);
HWPolynomial operator*(const Monomial& m, const HWPolynomial& x);
void add_to(HWPolynomial& acc, const HWPolynomial& x, const Rational& s = 1);
std::string to_string(const HWPolynomial& p);

Weight weight_of(CaseId c, const Monomial& m);

// Rewrite rule lhs -> rhs, applied to monomials divisible by lhs when the
// guard holds. Used only for SO3xSO2, where the generators are dependent.
struct Relation {
  Monomial lhs;
  HWPolynomial rhs;
  bool requires_odd_part = false;  // monomial must contain zeta or nu
  bool forbids_odd_part = false;   // monomial must not contain zeta or nu
  std::string label;
};

struct DotTable {
  CaseId c;
  std::map<std::pair<Gen, Gen>, HWPolynomial> entries;  // key sorted
  std::map<Gen, HWPolynomial> laplacians;
  std::vector<Relation> relations;
  // Entries that are not part of the base table but were derived
  // (and are checked by the geometry oracle).
  std::vector<std::pair<Gen, Gen>> derived_entries;

  bool has(Gen x, Gen y) const;
  const HWPolynomial& dot(Gen x, Gen y) const;
  const HWPolynomial& laplacian(Gen x) const;
};

const DotTable& dot_table(CaseId c);

// Bring a polynomial to the normal form of its case (no-op for SO5).
HWPolynomial normalize(CaseId c, const HWPolynomial& p);

std::vector<Monomial> basis(CaseId c, const Weight& w);

HWPolynomial laplacian_of_monomial(CaseId c, const Monomial& m);

// Rows are images: A(i,j) = coefficient of basis[j] in Laplacian(basis[i]).
RationalMatrix laplacian_matrix(CaseId c, const Weight& w);

struct RecurrenceTerm {
  int row = 0;
  std::string target;  // e.g. "kappa f_3"
  Rational coeff;
  std::string klass;   // documented discrepancy class, or empty
};

// Same matrix assembled from the closed-form recurrences. Terms whose
// target index falls outside the basis but carry a nonzero coefficient are
// reported through `dropped` instead of being silently ignored.
RationalMatrix recurrence_matrix(CaseId c, const Weight& w,
                                 std::vector<RecurrenceTerm>* dropped = nullptr);

struct EntryMismatch {
  int row = 0, col = 0;
  Rational product_rule;
  Rational recurrence;
  std::string klass;   // documented discrepancy class, or empty
};

struct WeightCrosscheck {
  Weight w;
  std::vector<EntryMismatch> mismatches;
  std::vector<RecurrenceTerm> dropped;
  bool all_documented() const;
};

struct CrosscheckReport {
  CaseId c;
  std::vector<WeightCrosscheck> weights;
  int mismatch_count() const;
  int undocumented_count() const;
};

CrosscheckReport crosscheck_matrices(CaseId c, const std::vector<Weight>& weights);

// Human readable notes for each documented discrepancy class.
const std::map<std::string, std::string>& documented_discrepancy_classes();

}  // namespace isospec
