#pragma once

#include "isospec/exact_linalg.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace isospec::cli {

enum class Format { Table, Json, Csv };

struct RunConfig {
  std::string command;
  std::optional<CaseId> c;
  std::optional<Rational> cutoff;  // default: Jacobi threshold of the case
  std::optional<Weight> weight;
  std::string poly;                // galois only: explicit polynomial
  std::string suite = "all";       // verify only
  long max_casimir = -1;           // crosscheck only; -1 selects the default range
  std::uint64_t seed = 42;
  int samples = 200;
  double tol = 1e-8;
  std::uint64_t prime_bound = 10000;
  Format format = Format::Table;
  std::string output;
  bool strict = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;

// "k,2l" for SO5 (second entry even), "p,q" for SO3xSO2.
Weight parse_weight(CaseId c, const std::string& s);
Rational parse_rational(const std::string& s);
// Integer polynomial in x, e.g. "x^5 - x - 1" or "3*x^2+2".
IntPolynomial parse_polynomial(const std::string& s);

// Runs one command; usage problems throw UsageError.
int execute(const RunConfig& cfg, std::ostream& out);

struct UsageError : Error {
  using Error::Error;
};

// Full argv front end: parse, execute, route output, map errors to exit codes.
int run(int argc, char** argv);

}  // namespace isospec::cli
