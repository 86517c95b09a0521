#include "isospec/report.hpp"

#include "isospec/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace isospec {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string pad(const std::string& s, size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string fixed6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

Json header(const char* command, CaseId c) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["case"] = group_case(c).name;
  return j;
}

Json oracle_json(const OracleReport& r) {
  return {{"label", r.label},
          {"samples", r.samples},
          {"max_residual", r.max_residual},
          {"tol", r.tol},
          {"pass", r.pass}};
}

Json cycle_json(const std::optional<CycleType>& ct) {
  if (!ct) return nullptr;
  return {{"prime", ct->prime}, {"degrees", ct->degrees}};
}

std::string cycle_string(const std::optional<CycleType>& ct) {
  if (!ct) return "none";
  std::string s = "p=" + std::to_string(ct->prime) + " degrees {";
  for (size_t i = 0; i < ct->degrees.size(); ++i)
    s += (i ? "," : "") + std::to_string(ct->degrees[i]);
  return s + "}";
}

}  // namespace

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

Json coefficients_json(const IntPolynomial& p) {
  Json a = Json::array();
  for (const Integer& c : p.c) a.push_back(c.get_str());
  return a;
}

Json weight_json(const Weight& w) { return Json::array({w.a, w.b}); }

std::string contributions_string(const SpectralLine& l) {
  std::string s;
  for (size_t i = 0; i < l.contributions.size(); ++i)
    s += (i ? " + " : "") + to_string(l.contributions[i].w);
  return s;
}

Json spectral_line_json(const SpectralLine& l) {
  Json contribs = Json::array();
  for (const Contribution& c : l.contributions)
    contribs.push_back(
        {{"weight", weight_json(c.w)}, {"occurrences", c.occurrences}, {"irrep_dim", c.irrep_dim}});
  return {{"value_exact", l.value_exact},
          {"value_approx", l.value_approx},
          {"min_poly_factor", {{"polynomial", to_string(l.factor)},
                               {"coefficients", coefficients_json(l.factor)},
                               {"root_index", l.index}}},
          {"interval", {{"lo", l.root.lo.get_str()}, {"hi", l.root.hi.get_str()}}},
          {"contributions", contribs},
          {"multiplicity", l.total_multiplicity}};
}

Json index_json(const IndexReport& r, bool include_lines) {
  Json j = header(include_lines ? "spectrum" : "index", r.c);
  j["cutoff"] = r.cutoff.get_str();
  if (include_lines) {
    Json lines = Json::array();
    for (const auto& l : r.lines) lines.push_back(spectral_line_json(l));
    j["lines"] = lines;
  }
  j["index"] = r.index;
  j["nullity"] = r.nullity;
  j["rotation_nullity"] = group_case(r.c).rotation_nullity;
  j["rotation_match"] = r.rotation_nullity_matches;
  return j;
}

Json spectrum_json(const IndexReport& r) { return index_json(r, true); }

std::string spectrum_csv(const std::vector<SpectralLine>& lines) {
  std::string out = "value_exact,value_approx,weights,multiplicity\n";
  for (const auto& l : lines)
    out += csv_escape(l.value_exact) + "," + l.value_approx + "," +
           csv_escape(contributions_string(l)) + "," + std::to_string(l.total_multiplicity) + "\n";
  return out;
}

std::string spectrum_table(const IndexReport& r) {
  std::ostringstream os;
  os << "case " << group_case(r.c).name << ", eigenvalues of -Laplacian <= " << r.cutoff << "\n";
  size_t w = 12;
  for (const auto& l : r.lines) w = std::max(w, l.value_exact.size());
  os << pad("value", w) << "  " << pad("approx", 12) << "  " << pad("mult", 5) << "  weights\n";
  for (const auto& l : r.lines)
    os << pad(l.value_exact, w) << "  " << pad(l.value_approx, 12) << "  "
       << pad(std::to_string(l.total_multiplicity), 5) << "  " << contributions_string(l) << "\n";
  os << index_table(r);
  return os.str();
}

std::string index_table(const IndexReport& r) {
  std::ostringstream os;
  os << "index=" << r.index << " nullity=" << r.nullity
     << " rotation_nullity=" << group_case(r.c).rotation_nullity
     << " rotation_match=" << (r.rotation_nullity_matches ? "true" : "false") << "\n";
  return os.str();
}

CandidateReport candidate_report(CaseId c, const Rational& K) {
  CandidateReport r{c, K, candidate_weights(c, K), {}};
  // gate fails only when mu > K / (2 - sqrt 2) > K, so mu <= 2K covers the first shell
  Rational two_k = 2 * K;
  long mu_max = two_k < 0 ? -1 : long(floor(two_k.get_d()));
  for (const Weight& w : weights_up_to_casimir(c, mu_max)) {
    GateEvaluation g = evaluate_gate(c, w, K);
    if (!g.passes) r.boundary_exclusions.push_back(g);
  }
  std::stable_sort(r.boundary_exclusions.begin(), r.boundary_exclusions.end(),
                   [](const GateEvaluation& x, const GateEvaluation& y) { return x.mu < y.mu; });
  return r;
}

Json candidates_json(const CandidateReport& r) {
  Json j = header("candidates", r.c);
  j["cutoff"] = r.cutoff.get_str();
  Json cands = Json::array();
  for (const Candidate& c : r.candidates)
    cands.push_back({{"weight", weight_json(c.w)},
                     {"casimir", c.mu},
                     {"multiplicity", c.multiplicity},
                     {"doubled", c.doubled},
                     {"irrep_dim", irrep_dim(r.c, c.w)}});
  j["candidates"] = cands;
  Json ex = Json::array();
  for (const GateEvaluation& g : r.boundary_exclusions)
    ex.push_back({{"weight", weight_json(g.w)},
                  {"casimir", g.mu},
                  {"lhs", g.lhs.get_str()},
                  {"lhs_squared", g.lhs_sq.get_str()},
                  {"rhs_squared", g.rhs_sq.get_str()},
                  {"passes", g.passes},
                  {"evaluation", g.describe()}});
  j["excluded"] = ex;
  return j;
}

std::string candidates_table(const CandidateReport& r) {
  std::ostringstream os;
  os << "case " << group_case(r.c).name << ", gate (2 - sqrt 2) mu <= " << r.cutoff << ": "
     << r.candidates.size() << " weights\n";
  os << pad("weight", 10) << "  " << pad("casimir", 8) << "  " << pad("mult", 5) << "  dim\n";
  for (const Candidate& c : r.candidates) {
    std::string w = to_string(c.w);
    if (c.doubled) w = "(" + std::to_string(c.w.a) + ",+-" + std::to_string(c.w.b) + ")";
    os << pad(w, 10) << "  " << pad(std::to_string(c.mu), 8) << "  "
       << pad(std::to_string(c.multiplicity), 5) << "  " << irrep_dim(r.c, c.w) << "\n";
  }
  os << "excluded with mu <= 2K:\n";
  for (const GateEvaluation& g : r.boundary_exclusions) os << "  " << g.describe() << "\n";
  return os.str();
}

std::string candidates_csv(const CandidateReport& r) {
  std::string out = "weight,casimir,multiplicity,doubled,irrep_dim\n";
  for (const Candidate& c : r.candidates)
    out += csv_escape(to_string(c.w)) + "," + std::to_string(c.mu) + "," +
           std::to_string(c.multiplicity) + "," + (c.doubled ? "true" : "false") + "," +
           std::to_string(irrep_dim(r.c, c.w)) + "\n";
  return out;
}

Json matrix_json(CaseId c, const Weight& w) {
  Json j = header("matrix", c);
  j["weight"] = weight_json(w);
  Json b = Json::array();
  for (const Monomial& m : basis(c, w)) b.push_back(to_string(m));
  j["basis"] = b;
  j["orientation"] = "rows are images of basis elements";
  RationalMatrix A = laplacian_matrix(c, w);
  Json rows = Json::array();
  for (int i = 0; i < A.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < A.cols(); ++k) row.push_back(A(i, k).get_str());
    rows.push_back(row);
  }
  j["matrix"] = rows;
  return j;
}

std::string matrix_table(CaseId c, const Weight& w) {
  RationalMatrix A = laplacian_matrix(c, w);
  auto B = basis(c, w);
  std::vector<std::vector<std::string>> cells(A.rows());
  size_t width = 1;
  for (int i = 0; i < A.rows(); ++i)
    for (int k = 0; k < A.cols(); ++k) {
      cells[i].push_back(A(i, k).get_str());
      width = std::max(width, cells[i].back().size());
    }
  std::ostringstream os;
  os << "case " << group_case(c).name << ", weight " << to_string(w) << ", basis";
  for (const auto& m : B) os << " " << to_string(m);
  os << "\n";
  for (auto& row : cells) {
    for (size_t k = 0; k < row.size(); ++k) {
      os << (k ? "  " : "") << std::string(width - row[k].size(), ' ') << row[k];
    }
    os << "\n";
  }
  return os.str();
}

Json charpoly_json(CaseId c, const Weight& w) {
  IntPolynomial P = char_poly(laplacian_matrix(c, w));
  Json j = header("charpoly", c);
  j["weight"] = weight_json(w);
  j["size"] = P.degree();
  j["polynomial"] = to_string(P);
  j["coefficients"] = coefficients_json(P);
  j["scale"] = P.scale.get_str();
  return j;
}

Json certificate_json(const GaloisCertificate& cert) {
  return {{"prime_5cycle", cycle_json(cert.irreducibility_witness)},
          {"prime_transposition", cycle_json(cert.transposition_witness)},
          {"prime_primitivity", cycle_json(cert.primitivity_witness)},
          {"conclusion", to_string(cert.conclusion)},
          {"primes_tried", cert.primes_tried}};
}

Json galois_json(const UnsolvabilityReport& r) {
  Json j = header("galois", r.c);
  j["weight"] = weight_json(r.w);
  j["poly"] = to_string(r.poly);
  j["factorization_complete"] = r.factorization_complete;
  Json fs = Json::array();
  for (const FactorReport& f : r.factors)
    fs.push_back({{"polynomial", to_string(f.factor)},
                  {"degree", f.factor.degree()},
                  {"exponent", f.exponent},
                  {"certificate", f.certificate ? certificate_json(*f.certificate) : Json(nullptr)}});
  j["factors"] = fs;
  return j;
}

Json galois_poly_json(const IntPolynomial& p, std::uint64_t prime_bound) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "galois";
  j["case"] = nullptr;
  j["weight"] = nullptr;
  j["poly"] = to_string(p);
  j["factorization_complete"] = true;
  GaloisCertificate cert = symmetric_group_certificate(p, prime_bound);
  j["factors"] = Json::array({{{"polynomial", to_string(p)},
                               {"degree", p.degree()},
                               {"exponent", 1},
                               {"certificate", certificate_json(cert)}}});
  return j;
}

std::string certificate_table(const GaloisCertificate& cert) {
  std::ostringstream os;
  const int n = cert.poly.degree();
  os << "  conclusion: " << to_string(cert.conclusion) << " (" << cert.primes_tried
     << " good primes tried)\n";
  os << "  " << n << "-cycle witness: " << cycle_string(cert.irreducibility_witness) << "\n";
  os << "  transposition witness: " << cycle_string(cert.transposition_witness) << "\n";
  if (cert.primitivity_witness) os << "  (n-1)-cycle witness: " << cycle_string(cert.primitivity_witness) << "\n";
  return os.str();
}

std::string galois_table(const UnsolvabilityReport& r) {
  std::ostringstream os;
  os << "case " << group_case(r.c).name << ", weight " << to_string(r.w) << "\n";
  os << "char poly: " << to_string(r.poly) << "\n";
  if (!r.factorization_complete) os << "warning: factorization over Q incomplete\n";
  for (const FactorReport& f : r.factors) {
    os << "factor " << to_string(f.factor) << " (degree " << f.factor.degree();
    if (f.exponent > 1) os << ", exponent " << f.exponent;
    os << ")";
    if (!f.certificate) {
      os << ": degree < 5, solvable by radicals\n";
    } else {
      os << "\n" << certificate_table(*f.certificate);
    }
  }
  return os.str();
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {
      "sanity", "gradients", "laplacians", "relations", "eigenfunctions", "s_pair",
      "curvature", "fixtures", "equivariance", "rank", "agreement"};
  return names;
}

bool VerifyRun::pass() const {
  for (const auto& b : blocks)
    for (const auto& r : b.identities)
      if (!r.pass) return false;
  return true;
}

VerifyRun run_verification(CaseId c, const std::string& suite, int samples, std::uint64_t seed,
                           double tol) {
  const auto& names = verify_suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
    throw Error("unknown suite '" + suite + "'");
  VerifyRun run{c, seed, samples, tol, {}};
  auto want = [&](const char* s) { return suite == "all" || suite == s; };
  const double h = kPi / 8;

  for (const char* s : {"sanity", "gradients", "laplacians", "relations", "eigenfunctions", "s_pair"}) {
    if (!want(s)) continue;
    if (std::string(s) == "relations" && c != CaseId::SO3xSO2) continue;
    if (std::string(s) == "s_pair" && c != CaseId::SO5) continue;
    run.blocks.push_back({s, h, verify_identities(c, parse_suite(s), samples, seed, tol)});
  }
  if (want("curvature")) {
    // the minimal level must have H = 0 to 1e-9; other levels follow the closed form
    run.blocks.push_back({"curvature", h, curvature_checks(c, h, samples, seed, std::min(tol, 1e-9))});
    for (double theta : {kPi / 12, 0.2, 0.6})
      run.blocks.push_back({"curvature", theta, curvature_checks(c, theta, samples, seed, tol)});
  }
  if (want("fixtures")) run.blocks.push_back({"fixtures", h, fixture_checks(c, tol)});
  if (want("equivariance"))
    run.blocks.push_back({"equivariance", h, {equivariance_check(c, samples, seed, tol)}});
  if (want("rank") || want("agreement")) {
    auto cands = candidate_weights(c, Rational(group_case(c).jacobi_threshold));
    if (want("rank")) {
      std::vector<OracleReport> reps(cands.size());
      parallel_for(cands.size(), [&](size_t i) {
        reps[i] = rank_independence_check(c, cands[i].w, samples, seed);
      });
      run.blocks.push_back({"rank", h, reps});
    }
    if (want("agreement")) {
      std::vector<OracleReport> reps(cands.size());
      parallel_for(cands.size(), [&](size_t i) {
        reps[i] = matrix_agreement_check(c, cands[i].w, samples, seed, tol);
      });
      run.blocks.push_back({"agreement", h, reps});
    }
  }
  return run;
}

Json verify_json(const VerifyRun& run) {
  Json j = header("verify", run.c);
  j["seed"] = run.seed;
  j["samples"] = run.samples;
  j["tol"] = run.tol;
  Json blocks = Json::array();
  for (const auto& b : run.blocks) {
    Json ids = Json::array();
    for (const auto& r : b.identities) ids.push_back(oracle_json(r));
    blocks.push_back({{"suite", b.suite},
                      {"case", group_case(run.c).name},
                      {"theta", b.theta},
                      {"seed", run.seed},
                      {"samples", run.samples},
                      {"identities", ids}});
  }
  j["suites"] = blocks;
  j["pass"] = run.pass();
  return j;
}

std::string verify_table(const VerifyRun& run) {
  std::ostringstream os;
  int total = 0, failed = 0;
  for (const auto& b : run.blocks) {
    os << "[" << b.suite << "] theta=" << fixed6(b.theta) << "\n";
    for (const auto& r : b.identities) {
      ++total;
      if (!r.pass) ++failed;
      os << "  " << (r.pass ? "ok   " : "FAIL ") << pad(r.label, 56) << " max=" << sci(r.max_residual)
         << " tol=" << sci(r.tol) << "\n";
    }
  }
  os << total - failed << "/" << total << " identities pass (case " << group_case(run.c).name
     << ", seed " << run.seed << ", " << run.samples << " samples)\n";
  return os.str();
}

Json crosscheck_json(const CrosscheckReport& r) {
  Json j = header("crosscheck", r.c);
  Json ws = Json::array();
  for (const WeightCrosscheck& w : r.weights) {
    Json mm = Json::array();
    for (const EntryMismatch& e : w.mismatches)
      mm.push_back({{"row", e.row},
                    {"col", e.col},
                    {"product_rule", e.product_rule.get_str()},
                    {"recurrence", e.recurrence.get_str()},
                    {"class", e.klass}});
    Json dr = Json::array();
    for (const RecurrenceTerm& t : w.dropped)
      dr.push_back({{"row", t.row}, {"target", t.target}, {"coeff", t.coeff.get_str()}, {"class", t.klass}});
    ws.push_back({{"weight", weight_json(w.w)}, {"mismatches", mm}, {"dropped", dr}});
  }
  j["weights"] = ws;
  j["mismatch_count"] = r.mismatch_count();
  j["undocumented_count"] = r.undocumented_count();
  Json cls = Json::object();
  for (const auto& [k, v] : documented_discrepancy_classes()) cls[k] = v;
  j["documented_classes"] = cls;
  return j;
}

std::string crosscheck_table(const CrosscheckReport& r) {
  std::ostringstream os;
  os << "case " << group_case(r.c).name << ": product rule vs closed-form recurrences on "
     << r.weights.size() << " weights\n";
  std::map<std::string, int> per_class;
  for (const WeightCrosscheck& w : r.weights) {
    for (const EntryMismatch& e : w.mismatches) {
      os << "  " << pad(to_string(w.w), 8) << " entry (" << e.row << "," << e.col
         << "): product rule " << e.product_rule << ", recurrence " << e.recurrence << "  ["
         << (e.klass.empty() ? "UNDOCUMENTED" : e.klass) << "]\n";
      ++per_class[e.klass];
    }
    for (const RecurrenceTerm& t : w.dropped) {
      os << "  " << pad(to_string(w.w), 8) << " row " << t.row << " -> " << t.target << " "
         << t.coeff << " falls outside the basis  ["
         << (t.klass.empty() ? "UNDOCUMENTED" : t.klass) << "]\n";
      ++per_class[t.klass];
    }
  }
  os << "mismatches: " << r.mismatch_count() << ", undocumented: " << r.undocumented_count() << "\n";
  for (const auto& [k, v] : documented_discrepancy_classes())
    if (per_class.count(k)) os << "documented class " << k << " (" << per_class[k] << "): " << v << "\n";
  if (!per_class.empty()) os << "see README.md, section \"Known recurrence discrepancies\"\n";
  return os.str();
}

}  // namespace isospec
