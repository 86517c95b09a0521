#pragma once

#include "isospec/exact_linalg.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace isospec {

// Degrees of the irreducible factors of P mod a good prime, ascending.
struct CycleType {
  std::uint64_t prime = 0;
  std::vector<int> degrees;
};

// Empty when p divides the leading coefficient or P mod p is not squarefree.
std::optional<CycleType> factor_degrees_mod_p(const IntPolynomial& P, std::uint64_t p);

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

enum class GaloisConclusion { SymmetricGroup, Inconclusive };
const char* to_string(GaloisConclusion c);

struct GaloisCertificate {
  IntPolynomial poly;
  // cycle type {n}: irreducible, so the group is transitive and holds an n-cycle
  std::optional<CycleType> irreducibility_witness;
  // exactly one factor of degree 2, all others odd: an odd power is a transposition
  std::optional<CycleType> transposition_witness;
  // {n-1, 1}: makes the group 2-transitive, needed when n is not prime
  std::optional<CycleType> primitivity_witness;
  GaloisConclusion conclusion = GaloisConclusion::Inconclusive;
  int primes_tried = 0;
};

// Sound but incomplete: SymmetricGroup is only claimed when the witnesses
// force it; otherwise Inconclusive once primes <= prime_bound are exhausted.
GaloisCertificate symmetric_group_certificate(const IntPolynomial& P,
                                              std::uint64_t prime_bound = 10000);

struct FactorReport {
  IntPolynomial factor;
  int exponent = 1;
  std::optional<GaloisCertificate> certificate;  // only for degree >= 5
};

struct UnsolvabilityReport {
  CaseId c;
  Weight w;
  IntPolynomial poly;  // characteristic polynomial of the Laplacian matrix
  bool factorization_complete = true;
  std::vector<FactorReport> factors;
};

UnsolvabilityReport unsolvability_report(CaseId c, const Weight& w,
                                         std::uint64_t prime_bound = 10000);

}  // namespace isospec
