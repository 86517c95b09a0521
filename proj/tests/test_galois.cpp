#include "isospec/galois.hpp"
#include "isospec/hwf_algebra.hpp"

#include <doctest.h>

#include <algorithm>

using namespace isospec;

TEST_CASE("primes") {
  CHECK(primes_up_to(30) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(primes_up_to(1).empty());
}

TEST_CASE("factor degrees mod p") {
  // x^5 - x - 1 is irreducible mod 5 (Artin-Schreier)
  auto ct = factor_degrees_mod_p(from_coeffs({-1, -1, 0, 0, 0, 1}), 5);
  REQUIRE(ct);
  CHECK(ct->degrees == std::vector<int>{5});
  // x^2 + 1 splits mod 5 and stays irreducible mod 3
  CHECK(factor_degrees_mod_p(from_coeffs({1, 0, 1}), 5)->degrees == std::vector<int>{1, 1});
  CHECK(factor_degrees_mod_p(from_coeffs({1, 0, 1}), 3)->degrees == std::vector<int>{2});
}

TEST_CASE("skip rule: bad primes are never used") {
  // p divides the leading coefficient
  CHECK_FALSE(factor_degrees_mod_p(from_coeffs({1, 1, 3}), 3));
  // p divides the discriminant of x^2 - 2 (disc 8)
  CHECK_FALSE(factor_degrees_mod_p(from_coeffs({-2, 0, 1}), 2));
  // disc(x^2 - 5) = 20
  CHECK_FALSE(factor_degrees_mod_p(from_coeffs({-5, 0, 1}), 5));
}

TEST_CASE("the two quintics have symmetric Galois group") {
  for (auto [c, w] : {std::pair{CaseId::SO5, Weight{8, 0}}, std::pair{CaseId::SO3xSO2, Weight{4, 4}}}) {
    UnsolvabilityReport r = unsolvability_report(c, w);
    CHECK(r.factorization_complete);
    REQUIRE(r.factors.size() == 1);
    REQUIRE(r.factors[0].certificate);
    const GaloisCertificate& cert = *r.factors[0].certificate;
    CHECK(cert.conclusion == GaloisConclusion::SymmetricGroup);
    REQUIRE(cert.irreducibility_witness);
    REQUIRE(cert.transposition_witness);
    CHECK(cert.irreducibility_witness->degrees == std::vector<int>{5});
    auto D = cert.transposition_witness->degrees;
    CHECK(std::count(D.begin(), D.end(), 2) == 1);
  }
  auto so5 = unsolvability_report(CaseId::SO5, {8, 0}).factors[0].certificate;
  CHECK(so5->irreducibility_witness->prime == 19);
  CHECK(so5->transposition_witness->prime == 5);
  auto so3 = unsolvability_report(CaseId::SO3xSO2, {4, 4}).factors[0].certificate;
  CHECK(so3->irreducibility_witness->prime == 13);
  CHECK(so3->transposition_witness->prime == 31);
}

TEST_CASE("soundness on solvable polynomials") {
  const std::vector<IntPolynomial> solvable = {
      from_coeffs({-2, 0, 0, 0, 0, 1}),            // x^5 - 2, Frobenius group F20
      from_coeffs({12, -5, 0, 0, 0, 1}),           // x^5 - 5x + 12, dihedral D5
      from_coeffs({1, 3, -3, -4, 1, 1}),           // 2cos(2pi/11), cyclic
      from_coeffs({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}),  // 11th cyclotomic, cyclic of order 10
      from_coeffs({-3, 0, 0, 0, 0, 0, 1}),         // x^6 - 3, dihedral of order 12
  };
  for (auto& p : solvable) {
    CAPTURE(to_string(p));
    GaloisCertificate cert = symmetric_group_certificate(p, 3000);
    CHECK(cert.conclusion == GaloisConclusion::Inconclusive);
  }
}

TEST_CASE("x^5 - x - 1 and a composite degree example") {
  CHECK(symmetric_group_certificate(from_coeffs({-1, -1, 0, 0, 0, 1})).conclusion ==
        GaloisConclusion::SymmetricGroup);
  // x^6 + x + 1 has group S6; 6 is not prime, so a (1,5) witness is also needed
  GaloisCertificate six = symmetric_group_certificate(from_coeffs({1, 1, 0, 0, 0, 0, 1}));
  CHECK(six.conclusion == GaloisConclusion::SymmetricGroup);
  REQUIRE(six.primitivity_witness);
  CHECK(six.primitivity_witness->degrees == std::vector<int>{1, 5});
}

TEST_CASE("low degree summands are trivially solvable") {
  UnsolvabilityReport r = unsolvability_report(CaseId::SO5, {0, 2});
  CHECK(r.factors.size() == 2);
  for (auto& f : r.factors) CHECK_FALSE(f.certificate);
  CHECK(symmetric_group_certificate(from_coeffs({-3, 1})).conclusion == GaloisConclusion::SymmetricGroup);
}

TEST_CASE("certificates are deterministic") {
  IntPolynomial P = char_poly(laplacian_matrix(CaseId::SO5, {8, 0}));
  auto a = symmetric_group_certificate(P), b = symmetric_group_certificate(P);
  CHECK(a.irreducibility_witness->prime == b.irreducibility_witness->prime);
  CHECK(a.transposition_witness->prime == b.transposition_witness->prime);
  CHECK(a.primes_tried == b.primes_tried);
}
