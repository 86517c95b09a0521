#pragma once

#include "isospec/types.hpp"

#include <string>
#include <vector>

namespace isospec {

// Dense univariate polynomial over Q, ascending coefficients, no trailing
// zeros (the zero polynomial is empty).
using QPoly = std::vector<Rational>;

int degree(const QPoly& p);
void trim(QPoly& p);
QPoly operator+(const QPoly& x, const QPoly& y);
QPoly operator-(const QPoly& x, const QPoly& y);
QPoly operator*(const QPoly& x, const QPoly& y);
QPoly derivative(const QPoly& p);
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
QPoly monic(const QPoly& p);
QPoly gcd(QPoly a, QPoly b);
Rational eval(const QPoly& p, const Rational& x);
QSqrt2 eval(const QPoly& p, const QSqrt2& x);
// (x - r)
QPoly linear(const Rational& r);

// Integer polynomial, primitive with positive leading coefficient.
struct IntPolynomial {
  std::vector<Integer> c;  // ascending
  // For characteristic polynomials: c = scale * (monic rational char poly).
  Integer scale = 1;

  int degree() const { return int(c.size()) - 1; }
  friend bool operator==(const IntPolynomial& x, const IntPolynomial& y) { return x.c == y.c; }
};

IntPolynomial primitive_part(const QPoly& p);
QPoly to_qpoly(const IntPolynomial& p);
IntPolynomial from_coeffs(std::initializer_list<long> ascending);
// "x^5 + 1440*x^4 - 3*x + 2"
std::string to_string(const IntPolynomial& p, const std::string& var = "x");
std::string to_string(const QPoly& p, const std::string& var = "x");

// Exact det(xI - A) made primitive over Z; `scale` records the clearing factor.
IntPolynomial char_poly(const RationalMatrix& A);
// Exact determinant by fraction-free (Bareiss) elimination.
Rational determinant(RationalMatrix A);

// Squarefree decomposition: p = lc * prod s_i^i, returned as (s_i, i) with
// each s_i monic and nonconstant.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p);

struct RootInterval {
  Rational lo, hi;       // lo == hi for an exact rational root
  int multiplicity = 1;
  int sign_lo = 0;       // sign of the squarefree factor at lo / hi
  int sign_hi = 0;
  QPoly factor;          // squarefree factor owning the root
  bool exact() const { return lo == hi; }
};

std::vector<RootInterval> isolate_real_roots(const IntPolynomial& P);
std::vector<RootInterval> isolate_real_roots(const QPoly& P);

// Number of real roots (with multiplicity) of a squarefree polynomial in
// the half-open interval (a, b], by Sturm's theorem.
int sturm_count(const QPoly& squarefree, const Rational& a, const Rational& b);

struct BelowCount {
  int below = 0;           // roots strictly below t, with multiplicity
  bool exact_root = false; // P(t) == 0
  int root_multiplicity = 0;
};

BelowCount count_roots_below(const IntPolynomial& P, const Rational& t);

// Bisect within the isolating interval until its width is <= eps.
Rational refine_root(const RootInterval& iv, const Rational& eps);
void refine_in_place(RootInterval& iv, const Rational& eps);

struct Factorization {
  std::vector<std::pair<IntPolynomial, int>> factors;  // irreducible, exponent
  // False when a squarefree part had non-real roots or was too large for the
  // subset search; that part is then reported unsplit.
  bool complete = true;
};

// Factorization over Q of a polynomial whose roots are all real: rational
// roots first, then a subset search over isolated roots with each
// candidate factor confirmed by exact division.
Factorization factor_over_q(const IntPolynomial& P, int max_subset_degree = 24);

// Decimal rendering of a rational with `digits` places after the point.
std::string decimal(const Rational& x, int digits);

}  // namespace isospec
