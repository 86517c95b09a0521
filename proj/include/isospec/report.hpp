#pragma once

#include "isospec/galois.hpp"
#include "isospec/geometry_oracle.hpp"
#include "isospec/hwf_algebra.hpp"
#include "isospec/rep_theory.hpp"
#include "isospec/spectrum.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace isospec {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

// Ascending coefficients as decimal strings.
Json coefficients_json(const IntPolynomial& p);
Json weight_json(const Weight& w);

// Spectrum / index
Json spectral_line_json(const SpectralLine& l);
Json index_json(const IndexReport& r, bool include_lines);
Json spectrum_json(const IndexReport& r);
std::string spectrum_csv(const std::vector<SpectralLine>& lines);
std::string spectrum_table(const IndexReport& r);
std::string index_table(const IndexReport& r);
// "(1,3) + (1,-3) + (2,1) + (2,-1)"
std::string contributions_string(const SpectralLine& l);

// Candidates plus gate evaluations of the excluded weights in the shell
// K/(2 - sqrt 2) < mu <= 2K, where the gate first starts to bite.
struct CandidateReport {
  CaseId c;
  Rational cutoff;
  std::vector<Candidate> candidates;
  std::vector<GateEvaluation> boundary_exclusions;
};
CandidateReport candidate_report(CaseId c, const Rational& K);
Json candidates_json(const CandidateReport& r);
std::string candidates_table(const CandidateReport& r);
std::string candidates_csv(const CandidateReport& r);

// Matrices
Json matrix_json(CaseId c, const Weight& w);
std::string matrix_table(CaseId c, const Weight& w);
Json charpoly_json(CaseId c, const Weight& w);

// Galois
Json certificate_json(const GaloisCertificate& cert);
Json galois_json(const UnsolvabilityReport& r);
Json galois_poly_json(const IntPolynomial& p, std::uint64_t prime_bound);
std::string certificate_table(const GaloisCertificate& cert);
std::string galois_table(const UnsolvabilityReport& r);

// Geometry oracle
struct VerifyBlock {
  std::string suite;
  double theta = 0;
  std::vector<OracleReport> identities;
};
struct VerifyRun {
  CaseId c;
  std::uint64_t seed = 42;
  int samples = 200;
  double tol = 1e-8;
  std::vector<VerifyBlock> blocks;
  bool pass() const;
};
// suite == "all" runs every block; otherwise one of gradients, laplacians,
// eigenfunctions, s_pair, relations, sanity, curvature, fixtures,
// equivariance, rank, agreement.
VerifyRun run_verification(CaseId c, const std::string& suite, int samples, std::uint64_t seed,
                           double tol);
Json verify_json(const VerifyRun& run);
std::string verify_table(const VerifyRun& run);
const std::vector<std::string>& verify_suite_names();

// Recurrence crosscheck
Json crosscheck_json(const CrosscheckReport& r);
std::string crosscheck_table(const CrosscheckReport& r);

std::string csv_escape(const std::string& s);

}  // namespace isospec
