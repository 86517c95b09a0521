#include "isospec/spectrum.hpp"

#include "isospec/hwf_algebra.hpp"
#include "isospec/parallel.hpp"
#include "isospec/rep_theory.hpp"

#include <algorithm>

namespace isospec {

namespace {

std::string rational_string(const Rational& q) { return q.get_str(); }

// -1, 0, +1 for root - b, exact.
int compare_root(RootInterval iv, const QSqrt2& b) {
  if (iv.exact()) return sign(QSqrt2{iv.lo, 0} - b);
  if (sign(eval(iv.factor, b)) == 0) return 0;
  Rational eps = (iv.hi - iv.lo) / 2;
  for (int it = 0; it < 400; ++it) {
    Rational lo, hi;
    enclose(b, eps, lo, hi);
    if (iv.hi < lo) return -1;
    if (iv.lo > hi) return 1;
    eps /= 2;
    refine_in_place(iv, eps);
    if (iv.exact()) return sign(QSqrt2{iv.lo, 0} - b);
  }
  throw Error("root comparison did not separate");
}

// -1, 0, +1 comparing two roots; equal only for the same factor and index.
int compare_lines(const IntPolynomial& f, int i, RootInterval a, const IntPolynomial& g, int j,
                  RootInterval b) {
  if (f == g) return i < j ? -1 : (i > j ? 1 : 0);
  // distinct irreducible factors share no root, so refinement separates them
  for (int it = 0; it < 400; ++it) {
    if (a.hi < b.lo) return -1;
    if (b.hi < a.lo) return 1;
    if (a.exact() && b.exact()) return a.lo < b.lo ? -1 : (a.lo > b.lo ? 1 : 0);
    Rational w = std::max(a.hi - a.lo, b.hi - b.lo) / 4;
    refine_in_place(a, w);
    refine_in_place(b, w);
  }
  throw Error("root comparison did not separate");
}

void squarefree_split(const Integer& D, Integer& square_root, Integer& core) {
  square_root = 1;
  core = 1;
  Integer rest = D;
  for (Integer p = 2; p * p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) square_root *= p;
    if (e % 2) core *= p;
  }
  // what remains has at most two prime factors
  Integer s = sqrt(rest);
  if (s * s == rest) {
    square_root *= s;
  } else {
    core *= rest;
  }
}

std::string exact_string(const IntPolynomial& f, int index, const RootInterval& iv) {
  if (f.degree() == 1) return rational_string(iv.lo);
  if (f.degree() == 2) return quadratic_root_string(f, index);
  std::string where = index == 1 ? "min root" : "root " + std::to_string(index);
  return where + " of " + to_string(f);
}

std::string approx_string(RootInterval iv) {
  refine_in_place(iv, Rational(1, 1000000000));
  return decimal(iv.exact() ? iv.lo : (iv.lo + iv.hi) / 2, 6);
}

// Is root <= K (rational)?
bool at_most(RootInterval iv, const Rational& K) {
  return compare_root(std::move(iv), QSqrt2{K, 0}) <= 0;
}

}  // namespace

bool root_within(const RootInterval& iv, const QSqrt2& lo, const QSqrt2& hi) {
  return compare_root(iv, lo) >= 0 && compare_root(iv, hi) <= 0;
}

std::string quadratic_root_string(const IntPolynomial& f, int index) {
  const Integer &c0 = f.c[0], &c1 = f.c[1], &c2 = f.c[2];
  Integer D = c1 * c1 - 4 * c2 * c0;
  Integer s, d;
  squarefree_split(D, s, d);
  Rational a(-c1, 2 * c2), b(s, 2 * c2);
  a.canonicalize();
  b.canonicalize();
  std::string surd = (b == 1 ? "" : rational_string(b) + "*") + "sqrt(" + d.get_str() + ")";
  // c2 > 0, so the smaller root takes the minus sign
  if (a == 0) return (index == 1 ? "-" : "") + surd;
  return rational_string(a) + (index == 1 ? " - " : " + ") + surd;
}

Rational SpectralLine::rational_value() const {
  if (!is_rational()) throw Error("eigenvalue is not rational");
  return root.lo;
}

WeightSpectrum analyze_weight(CaseId c, const Weight& w) {
  WeightSpectrum ws;
  ws.w = w;
  ws.mu = casimir(c, w);
  RationalMatrix M = -laplacian_matrix(c, w);
  ws.charpoly = char_poly(M);
  Factorization F = factor_over_q(ws.charpoly);
  ws.factorization_complete = F.complete;
  int counted = 0;
  for (auto& [f, e] : F.factors) {
    auto roots = isolate_real_roots(f);
    for (size_t k = 0; k < roots.size(); ++k) {
      ws.eigenvalues.push_back({f, int(k) + 1, roots[k], e});
      counted += e;
    }
  }
  ws.all_real = counted == ws.charpoly.degree();
  const GroupCase& gc = group_case(c);
  Rational mu(ws.mu);
  ws.sandwich = std::all_of(ws.eigenvalues.begin(), ws.eigenvalues.end(), [&](auto& ev) {
    return root_within(ev.root, mu * gc.r_min, mu * gc.r_max);
  });
  return ws;
}

std::vector<SpectralLine> spectral_table(CaseId c, const Rational& K) {
  auto cands = candidate_weights(c, K);
  std::vector<WeightSpectrum> per(cands.size());
  parallel_for(cands.size(), [&](size_t i) { per[i] = analyze_weight(c, cands[i].w); });

  std::vector<SpectralLine> lines;
  for (size_t i = 0; i < cands.size(); ++i) {
    const Candidate& cand = cands[i];
    const long dim = irrep_dim(c, cand.w);
    for (const Eigenvalue& ev : per[i].eigenvalues) {
      if (!at_most(ev.root, K)) continue;
      // irreducible factors: equal values means equal factor and root index
      auto it = std::find_if(lines.begin(), lines.end(), [&](const SpectralLine& l) {
        return l.factor == ev.factor && l.index == ev.index;
      });
      if (it == lines.end()) {
        SpectralLine l;
        l.factor = ev.factor;
        l.index = ev.index;
        l.root = ev.root;
        lines.push_back(l);
        it = lines.end() - 1;
      }
      it->contributions.push_back({cand.w, ev.occurrences, dim});
      if (cand.doubled) it->contributions.push_back({{cand.w.a, -cand.w.b}, ev.occurrences, dim});
      it->total_multiplicity += long(ev.occurrences) * dim * (cand.doubled ? 2 : 1);
    }
  }
  std::sort(lines.begin(), lines.end(), [](const SpectralLine& x, const SpectralLine& y) {
    return compare_lines(x.factor, x.index, x.root, y.factor, y.index, y.root) < 0;
  });
  for (auto& l : lines) {
    l.value_exact = exact_string(l.factor, l.index, l.root);
    l.value_approx = approx_string(l.root);
  }
  return lines;
}

IndexReport index_nullity(CaseId c, std::optional<Rational> cutoff) {
  const GroupCase& gc = group_case(c);
  IndexReport rep;
  rep.c = c;
  rep.cutoff = cutoff ? *cutoff : Rational(gc.jacobi_threshold);
  rep.lines = spectral_table(c, rep.cutoff);
  for (const auto& l : rep.lines) {
    if (l.is_rational() && l.rational_value() == rep.cutoff) {
      if (rep.cutoff != 0) rep.nullity += l.total_multiplicity;
    } else {
      rep.index += l.total_multiplicity;
    }
  }
  rep.rotation_nullity_matches = rep.nullity == gc.rotation_nullity;
  return rep;
}

SpectralLine first_nonzero_eigenvalue(CaseId c) {
  const GroupCase& gc = group_case(c);
  for (auto& l : spectral_table(c, Rational(gc.jacobi_threshold)))
    if (!(l.is_rational() && l.rational_value() == 0)) return l;
  throw Error("no positive eigenvalue below the threshold");
}

bool always_eigenvalue_2n_minus_2(CaseId c) {
  const Rational target = 2 * (group_case(c).n - 1);
  for (auto& l : spectral_table(c, target))
    if (l.is_rational() && l.rational_value() == target) return true;
  return false;
}

}  // namespace isospec
