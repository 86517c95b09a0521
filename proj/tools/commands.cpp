#include "commands.hpp"

#include "isospec/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

namespace isospec::cli {

namespace {

// Weight used by matrix, charpoly and galois when --weight is omitted: the
// summands whose characteristic polynomials are irreducible quintics.
Weight default_quintic_weight(CaseId c) { return c == CaseId::SO5 ? Weight{8, 0} : Weight{4, 4}; }

CaseId require_case(const RunConfig& cfg) {
  if (!cfg.c) throw UsageError("--case is required for '" + cfg.command + "'");
  return *cfg.c;
}

// (p,-q) carries the conjugate representation and the same Laplacian matrix.
Weight representative(CaseId c, Weight w, std::ostream* note) {
  if (c == CaseId::SO3xSO2 && w.b < 0) {
    if (note) *note << "note: " << to_string(w) << " is the mirror of (" << w.a << "," << -w.b
                    << "), which has the same matrix\n";
    w.b = -w.b;
  }
  return w;
}

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void reject_csv(const RunConfig& cfg) {
  if (cfg.format == Format::Csv)
    throw UsageError("--format csv is only available for spectrum and candidates");
}

int cmd_index(const RunConfig& cfg, std::ostream& out) {
  reject_csv(cfg);
  IndexReport r = index_nullity(require_case(cfg), cfg.cutoff);
  if (cfg.format == Format::Json) {
    write_json(out, index_json(r, false));
  } else {
    out << index_table(r);
  }
  return kExitOk;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  IndexReport r = index_nullity(require_case(cfg), cfg.cutoff);
  switch (cfg.format) {
    case Format::Json: write_json(out, spectrum_json(r)); break;
    case Format::Csv: out << spectrum_csv(r.lines); break;
    case Format::Table: out << spectrum_table(r); break;
  }
  return kExitOk;
}

int cmd_candidates(const RunConfig& cfg, std::ostream& out) {
  CaseId c = require_case(cfg);
  CandidateReport r = candidate_report(c, cfg.cutoff.value_or(Rational(group_case(c).jacobi_threshold)));
  switch (cfg.format) {
    case Format::Json: write_json(out, candidates_json(r)); break;
    case Format::Csv: out << candidates_csv(r); break;
    case Format::Table: out << candidates_table(r); break;
  }
  return kExitOk;
}

int cmd_matrix(const RunConfig& cfg, std::ostream& out) {
  reject_csv(cfg);
  CaseId c = require_case(cfg);
  const bool table = cfg.format == Format::Table;
  Weight w = representative(c, cfg.weight.value_or(default_quintic_weight(c)), table ? &out : nullptr);
  if (table) {
    out << matrix_table(c, w);
  } else {
    write_json(out, matrix_json(c, w));
  }
  return kExitOk;
}

int cmd_charpoly(const RunConfig& cfg, std::ostream& out) {
  reject_csv(cfg);
  CaseId c = require_case(cfg);
  const bool table = cfg.format == Format::Table;
  Weight w = representative(c, cfg.weight.value_or(default_quintic_weight(c)), table ? &out : nullptr);
  if (table) {
    out << to_string(char_poly(laplacian_matrix(c, w))) << "\n";
  } else {
    write_json(out, charpoly_json(c, w));
  }
  return kExitOk;
}

int cmd_galois(const RunConfig& cfg, std::ostream& out) {
  reject_csv(cfg);
  const bool table = cfg.format == Format::Table;
  if (!cfg.poly.empty()) {
    if (cfg.weight) throw UsageError("--poly and --weight are mutually exclusive");
    IntPolynomial P = parse_polynomial(cfg.poly);
    if (P.degree() < 1) throw UsageError("--poly must have positive degree");
    if (table) {
      out << "polynomial: " << to_string(P) << "\n"
          << certificate_table(symmetric_group_certificate(P, cfg.prime_bound));
    } else {
      write_json(out, galois_poly_json(P, cfg.prime_bound));
    }
    return kExitOk;
  }
  CaseId c = require_case(cfg);
  Weight w = representative(c, cfg.weight.value_or(default_quintic_weight(c)), table ? &out : nullptr);
  UnsolvabilityReport r = unsolvability_report(c, w, cfg.prime_bound);
  if (table) {
    out << galois_table(r);
  } else {
    write_json(out, galois_json(r));
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  reject_csv(cfg);
  if (cfg.samples < 1) throw UsageError("--samples must be positive");
  if (!(cfg.tol > 0)) throw UsageError("--tol must be positive");
  VerifyRun run;
  try {
    run = run_verification(require_case(cfg), cfg.suite, cfg.samples, cfg.seed, cfg.tol);
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    if (std::string(e.what()).rfind("unknown suite", 0) == 0) throw UsageError(e.what());
    throw;
  }
  if (cfg.format == Format::Json) {
    write_json(out, verify_json(run));
  } else {
    out << verify_table(run);
  }
  return run.pass() ? kExitOk : kExitVerification;
}

int cmd_crosscheck(const RunConfig& cfg, std::ostream& out) {
  reject_csv(cfg);
  CaseId c = require_case(cfg);
  std::vector<Weight> ws;
  if (cfg.weight) {
    ws.push_back(representative(c, *cfg.weight, nullptr));
  } else {
    long mu = cfg.max_casimir >= 0 ? cfg.max_casimir : (c == CaseId::SO5 ? 60 : 40);
    ws = weights_up_to_casimir(c, mu);
  }
  CrosscheckReport r = crosscheck_matrices(c, ws);
  if (cfg.format == Format::Json) {
    write_json(out, crosscheck_json(r));
  } else {
    out << crosscheck_table(r);
  }
  if (r.undocumented_count() > 0) return kExitVerification;
  if (cfg.strict && r.mismatch_count() > 0) return kExitVerification;
  return kExitOk;
}

}  // namespace

Weight parse_weight(CaseId c, const std::string& s) {
  static const std::regex re(R"(\s*\(?\s*(-?\d+)\s*,\s*(-?\d+)\s*\)?\s*)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw UsageError("weight '" + s + "' is not a pair like 8,0");
  Weight w{std::stoi(m[1]), std::stoi(m[2])};
  if (w.a < 0) throw UsageError("weight " + to_string(w) + ": first entry must be >= 0");
  if (c == CaseId::SO5) {
    if (w.b < 0) throw UsageError("weight " + to_string(w) + ": second entry must be >= 0");
    if (w.b % 2 != 0)
      throw UsageError("SO5 weights are (k,2l) and need an even second entry; " + to_string(w) +
                       " has multiplicity zero in L^2(M)");
  }
  if (multiplicity(c, w) == 0)
    throw UsageError("weight " + to_string(w) + " has multiplicity zero in L^2(M)");
  return w;
}

Rational parse_rational(const std::string& s) {
  static const std::regex re(R"(\s*-?\d+(/\d+)?\s*)");
  if (!std::regex_match(s, re)) throw UsageError("'" + s + "' is not a rational like 32 or 65/2");
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  Rational q;
  if (q.set_str(t, 10) != 0 || q.get_den() == 0) throw UsageError("bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

IntPolynomial parse_polynomial(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw UsageError("empty polynomial");
  static const std::regex term(R"(([+-]?)(\d*)(\*?x(\^(\d+))?)?)");
  QPoly p;
  size_t pos = 0;
  while (pos < t.size()) {
    std::smatch m;
    std::string rest = t.substr(pos);
    if (!std::regex_search(rest, m, term, std::regex_constants::match_continuous) ||
        m.length(0) == 0 || (m[2].length() == 0 && !m[3].matched) ||
        (pos > 0 && m[1].length() == 0))
      throw UsageError("cannot parse polynomial '" + s + "' near '" + rest + "'");
    if (m[3].matched && m[3].str()[0] == '*' && m[2].length() == 0)
      throw UsageError("cannot parse polynomial '" + s + "'");
    Integer coef = m[2].length() ? Integer(m[2].str()) : Integer(1);
    if (m[1] == "-") coef = -coef;
    size_t e = 0;
    if (m[3].matched) e = m[5].matched ? std::stoul(m[5].str()) : 1;
    if (e > 1000) throw UsageError("polynomial degree too large");
    if (p.size() <= e) p.resize(e + 1, Rational(0));
    p[e] += Rational(coef);
    pos += m.length(0);
  }
  trim(p);
  if (p.empty()) throw UsageError("zero polynomial");
  IntPolynomial P = primitive_part(p);
  return P;
}

int execute(const RunConfig& cfg, std::ostream& out) {
  if (cfg.command == "index") return cmd_index(cfg, out);
  if (cfg.command == "spectrum") return cmd_spectrum(cfg, out);
  if (cfg.command == "candidates") return cmd_candidates(cfg, out);
  if (cfg.command == "matrix") return cmd_matrix(cfg, out);
  if (cfg.command == "charpoly") return cmd_charpoly(cfg, out);
  if (cfg.command == "galois") return cmd_galois(cfg, out);
  if (cfg.command == "verify") return cmd_verify(cfg, out);
  if (cfg.command == "crosscheck") return cmd_crosscheck(cfg, out);
  throw UsageError("unknown command '" + cfg.command + "'");
}

int run(int argc, char** argv) {
  CLI::App app{"Morse index and low spectrum of the minimal isoparametric hypersurfaces with "
               "four principal curvatures in S^9 (SO5) and S^5 (SO3xSO2)",
               "isospec"};
  app.require_subcommand(1);

  std::string case_s, cutoff_s, weight_s, format_s = "table";
  RunConfig cfg;

  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec specs[] = {
      {"index", "Morse index and nullity (eigenvalues of -Laplacian below / at the cutoff)"},
      {"spectrum", "eigenvalues of -Laplacian up to the cutoff with multiplicities and weights"},
      {"candidates", "weights passing the Casimir gate, with the excluded boundary shell"},
      {"matrix", "exact Laplacian matrix on one isotypical summand"},
      {"charpoly", "characteristic polynomial of the Laplacian matrix"},
      {"galois", "Dedekind certificate that the Galois group is symmetric"},
      {"verify", "numerical geometry oracle on sampled points"},
      {"crosscheck", "product-rule matrices against the closed-form recurrences"}};

  for (const Spec& sp : specs) {
    CLI::App* sub = app.add_subcommand(sp.name, sp.help);
    const std::string name = sp.name;
    sub->add_option("--case", case_s, "so5 or so3so2")->check(CLI::IsMember({"so5", "so3so2"}));
    sub->add_option("--format", format_s, "table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--output,-o", cfg.output, "write to this file instead of stdout");
    if (name == "index" || name == "spectrum" || name == "candidates")
      sub->add_option("--cutoff", cutoff_s, "rational cutoff K (default: the Jacobi threshold)");
    if (name == "matrix" || name == "charpoly" || name == "galois" || name == "crosscheck")
      sub->add_option("--weight", weight_s, "weight as k,2l (so5) or p,q (so3so2)");
    if (name == "galois") {
      sub->add_option("--poly", cfg.poly, "explicit integer polynomial in x instead of a weight");
      sub->add_option("--prime-bound", cfg.prime_bound, "largest prime tried")->check(CLI::PositiveNumber);
    }
    if (name == "verify") {
      sub->add_option("--seed", cfg.seed, "sampling seed");
      sub->add_option("--samples", cfg.samples, "sample points per identity");
      sub->add_option("--tol", cfg.tol, "residual tolerance");
      sub->add_option("--suite", cfg.suite, "all, or one suite name");
    }
    if (name == "crosscheck") {
      sub->add_option("--max-casimir", cfg.max_casimir, "check every weight up to this Casimir");
      sub->add_flag("--strict", cfg.strict, "fail on documented discrepancies too");
    }
    sub->callback([&cfg, name] { cfg.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (!case_s.empty()) cfg.c = parse_case(case_s);
    if (!cutoff_s.empty()) cfg.cutoff = parse_rational(cutoff_s);
    if (!weight_s.empty()) {
      if (!cfg.c) throw UsageError("--weight needs --case");
      cfg.weight = parse_weight(*cfg.c, weight_s);
    }
    cfg.format = format_s == "json" ? Format::Json : format_s == "csv" ? Format::Csv : Format::Table;

    std::ostringstream buf;
    int code = execute(cfg, buf);
    if (cfg.output.empty()) {
      std::cout << buf.str();
    } else {
      std::ofstream f(cfg.output, std::ios::binary);
      if (!f) throw Error("cannot open output file '" + cfg.output + "'");
      f << buf.str();
      if (!f) throw Error("failed writing '" + cfg.output + "'");
    }
    return code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.get_subcommands().front()->help();
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace isospec::cli
