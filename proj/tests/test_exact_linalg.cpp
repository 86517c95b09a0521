#include "isospec/exact_linalg.hpp"
#include "isospec/hwf_algebra.hpp"
#include "isospec/rep_theory.hpp"

#include <doctest.h>

#include <random>

using namespace isospec;

namespace {

QPoly qpoly(std::initializer_list<long> ascending) {
  QPoly p;
  for (long v : ascending) p.push_back(Rational(v));
  return p;
}

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("char_poly agrees with det(rI - A) on random rational matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    RationalMatrix A(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) A(i, j) = random_rational(rng);
    IntPolynomial P = char_poly(A);
    REQUIRE(P.degree() == 4);
    QPoly monic_p = to_qpoly(P);
    for (auto& c : monic_p) c /= Rational(P.scale);
    for (int s = 0; s < 3; ++s) {
      Rational r = random_rational(rng);
      RationalMatrix M = -A;
      for (int i = 0; i < 4; ++i) M(i, i) += r;
      CHECK(eval(monic_p, r) == determinant(M));
    }
  }
}

TEST_CASE("trace relation on the (8,0) matrix") {
  RationalMatrix A = laplacian_matrix(CaseId::SO5, {8, 0});
  IntPolynomial P = char_poly(A);
  CHECK(P.scale == 1);
  CHECK(P.c[4] == -A.trace());
  CHECK(P.c[4] == 1440);
  CHECK(to_string(P) == "x^5 + 1440*x^4 + 782464*x^3 + 200810496*x^2 + 24403705856*x + 1126904627200");
}

TEST_CASE("denominators are cleared by the recorded scale") {
  RationalMatrix A(2, 2);
  A << Rational(1, 2), Rational(0), Rational(0), Rational(1, 3);
  IntPolynomial P = char_poly(A);  // (x - 1/2)(x - 1/3) = x^2 - 5/6 x + 1/6
  CHECK(P.scale == 6);
  CHECK(P.c == std::vector<Integer>{1, -5, 6});
}

TEST_CASE("root isolation counts multiplicity and finds exact rational roots") {
  // (x - 1)(x - 2)^2 (x^2 - 2)
  QPoly p = qpoly({-1, 1}) * qpoly({-2, 1}) * qpoly({-2, 1}) * qpoly({-2, 0, 1});
  auto roots = isolate_real_roots(p);
  int total = 0;
  for (auto& r : roots) total += r.multiplicity;
  CHECK(total == 5);
  REQUIRE(roots.size() == 4);
  CHECK(roots[1].exact());
  CHECK(roots[1].lo == 1);
  CHECK(roots[3].exact());
  CHECK(roots[3].lo == 2);
  CHECK(roots[3].multiplicity == 2);
  CHECK(roots[2].lo * roots[2].lo <= 2);
  CHECK(roots[2].hi * roots[2].hi >= 2);
}

TEST_CASE("refinement of sqrt 2 to 1e-12") {
  auto roots = isolate_real_roots(qpoly({-2, 0, 1}));
  REQUIRE(roots.size() == 2);
  RootInterval r = roots[1];
  const Rational eps(1, 1000000000000L);
  refine_in_place(r, eps);
  CHECK(r.hi - r.lo <= eps);
  CHECK(r.lo * r.lo < 2);
  CHECK(r.hi * r.hi > 2);
  CHECK(decimal(r.lo, 12).substr(0, 13) == "1.41421356237");
}

TEST_CASE("Sturm counts and exact threshold membership") {
  QPoly p = qpoly({-2, 0, 1}) * qpoly({-16, 1});
  CHECK(sturm_count(p, -10, 10) == 2);
  CHECK(sturm_count(p, 0, 16) == 2);
  CHECK(sturm_count(p, 0, Rational(31, 2)) == 1);
  IntPolynomial P = primitive_part(p * qpoly({-16, 1}));
  BelowCount b = count_roots_below(P, 16);
  CHECK(b.below == 2);
  CHECK(b.exact_root);
  CHECK(b.root_multiplicity == 2);
}

TEST_CASE("squarefree decomposition") {
  QPoly p = qpoly({-1, 1}) * qpoly({-2, 1}) * qpoly({-2, 1}) * qpoly({3});
  auto sf = squarefree_decomposition(p);
  REQUIRE(sf.size() == 2);
  CHECK(sf[0].second == 1);
  CHECK(sf[0].first == qpoly({-1, 1}));
  CHECK(sf[1].second == 2);
  CHECK(sf[1].first == qpoly({-2, 1}));
}

TEST_CASE("factorization over Q of an all-real polynomial") {
  // (x - 8)^2 (x^2 - 48x + 496)(x^3 - 128x^2 + 4896x - 52736)
  QPoly cubic = qpoly({-52736, 4896, -128, 1});
  QPoly quad = qpoly({496, -48, 1});
  QPoly p = qpoly({-8, 1}) * qpoly({-8, 1}) * quad * cubic;
  Factorization F = factor_over_q(primitive_part(p));
  CHECK(F.complete);
  REQUIRE(F.factors.size() == 3);
  CHECK(F.factors[0].first.degree() == 1);
  CHECK(F.factors[0].second == 2);
  CHECK(to_string(F.factors[1].first) == "x^2 - 48*x + 496");
  CHECK(to_string(F.factors[2].first) == "x^3 - 128*x^2 + 4896*x - 52736");
}

TEST_CASE("factorization reports non-real parts as incomplete") {
  Factorization F = factor_over_q(primitive_part(qpoly({1, 0, 1}) * qpoly({-3, 1})));
  CHECK_FALSE(F.complete);
}

TEST_CASE("every candidate characteristic polynomial has an all-real root set") {
  for (CaseId c : {CaseId::SO5, CaseId::SO3xSO2}) {
    for (const Weight& w : weights_up_to_casimir(c, c == CaseId::SO5 ? 54 : 27)) {
      IntPolynomial P = char_poly(laplacian_matrix(c, w));
      int total = 0;
      for (auto& r : isolate_real_roots(P)) total += r.multiplicity;
      CAPTURE(to_string(w));
      CHECK(total == P.degree());
    }
  }
}

TEST_CASE("decimal rendering") {
  CHECK(decimal(Rational(1, 3), 6) == "0.333333");
  CHECK(decimal(Rational(-5, 2), 2) == "-2.50");
  CHECK(decimal(Rational(16), 6) == "16.000000");
}
