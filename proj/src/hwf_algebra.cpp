#include "isospec/hwf_algebra.hpp"
#include "isospec/rep_theory.hpp"

#include <algorithm>
#include <sstream>

namespace isospec {

const char* gen_name(Gen g) {
  static const char* names[] = {"zeta", "nu", "kappa", "sigma", "rho", "beta"};
  return names[int(g)];
}

Weight gen_weight(CaseId c, Gen g) {
  if (c == CaseId::SO5) {
    switch (g) {
      case Gen::Zeta:
      case Gen::Nu: return {0, 2};
      case Gen::Kappa: return {1, 0};
      case Gen::Sigma: return {2, 0};
      case Gen::Rho: return {1, 2};
      case Gen::Beta: break;
    }
    throw Error("beta is not a generator in the SO5 case");
  }
  switch (g) {
    case Gen::Zeta:
    case Gen::Nu: return {1, 1};
    case Gen::Kappa: return {1, 0};
    case Gen::Sigma: return {0, 2};
    case Gen::Rho:
    case Gen::Beta: return {2, 0};
  }
  return {};
}

bool gen_available(CaseId c, Gen g) {
  return !(c == CaseId::SO5 && g == Gen::Beta);
}

Monomial make_monomial(std::initializer_list<std::pair<Gen, int>> factors) {
  Monomial m;
  for (auto& [g, k] : factors) m[g] += k;
  return m;
}

Monomial operator*(const Monomial& x, const Monomial& y) {
  Monomial m;
  for (int i = 0; i < kNumGens; ++i) m.e[i] = x.e[i] + y.e[i];
  return m;
}

std::string to_string(const Monomial& m) {
  // display order follows the usual basis notation
  static const Gen order[] = {Gen::Rho, Gen::Sigma, Gen::Zeta, Gen::Nu,
                              Gen::Kappa, Gen::Beta};
  std::string s;
  for (Gen g : order) {
    int k = m[g];
    if (k == 0) continue;
    if (!s.empty()) s += "*";
    s += gen_name(g);
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s.empty() ? "1" : s;
}

HWPolynomial operator+(const HWPolynomial& x, const HWPolynomial& y) {
  HWPolynomial r = x;
  add_to(r, y);
  return r;
}

void add_to(HWPolynomial& acc, const HWPolynomial& x, const Rational& s) {
  if (s == 0) return;
  for (auto& [m, c] : x) {
    auto it = acc.find(m);
    if (it == acc.end()) {
      acc.emplace(m, s * c);
    } else {
      it->second += s * c;
      if (it->second == 0) acc.erase(it);
    }
  }
}

HWPolynomial operator*(const HWPolynomial& x, const HWPolynomial& y) {
  HWPolynomial r;
  for (auto& [mx, cx] : x)
    for (auto& [my, cy] : y) add_to(r, HWPolynomial{{mx * my, cx * cy}});
  return r;
}

HWPolynomial operator*(const Rational& s, const HWPolynomial& x) {
  HWPolynomial r;
  add_to(r, x, s);
  return r;
}

HWPolynomial operator*(const Monomial& m, const HWPolynomial& x) {
  HWPolynomial r;
  for (auto& [mx, c] : x) r.emplace(m * mx, c);
  return r;
}

std::string to_string(const HWPolynomial& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : p) {
    Rational a = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool unit = (a == 1);
    if (!unit) os << a;
    std::string ms = to_string(m);
    if (ms != "1")
      os << (unit ? "" : "*") << ms;
    else if (unit)
      os << "1";
    first = false;
  }
  return os.str();
}

Weight weight_of(CaseId c, const Monomial& m) {
  Weight w{0, 0};
  for (int i = 0; i < kNumGens; ++i) {
    if (m.e[i] == 0) continue;
    Weight gw = gen_weight(c, Gen(i));
    w.a += m.e[i] * gw.a;
    w.b += m.e[i] * gw.b;
  }
  return w;
}

namespace {

using G = Gen;

HWPolynomial P(std::initializer_list<std::pair<Rational, Monomial>> terms) {
  HWPolynomial p;
  for (auto& [c, m] : terms) add_to(p, HWPolynomial{{m, c}});
  return p;
}

Monomial M(std::initializer_list<std::pair<Gen, int>> f) { return make_monomial(f); }

std::pair<Gen, Gen> key(Gen x, Gen y) {
  return int(x) <= int(y) ? std::make_pair(x, y) : std::make_pair(y, x);
}

DotTable make_so5() {
  DotTable t;
  t.c = CaseId::SO5;
  const Monomial z = M({{G::Zeta, 1}}), n = M({{G::Nu, 1}}), k = M({{G::Kappa, 1}}),
                 s = M({{G::Sigma, 1}}), r = M({{G::Rho, 1}});
  auto& e = t.entries;
  e[key(G::Zeta, G::Zeta)] = P({{-1, z * z}, {-1, n * n}});
  e[key(G::Zeta, G::Nu)] = P({{2, z * z}, {-6, z * n}});
  e[key(G::Nu, G::Nu)] = P({{3, z * z}, {-4, z * n}, {-9, n * n}});
  e[key(G::Kappa, G::Kappa)] = P({{-8, k * k}, {4, s}});
  e[key(G::Kappa, G::Sigma)] = P({{-4, k * k * k}});
  e[key(G::Sigma, G::Sigma)] = P({{-4, k * k * k * k}, {8, k * k * s}, {-8, s * s}});
  e[key(G::Zeta, G::Rho)] = P({{-4, z * r}});
  e[key(G::Nu, G::Rho)] = P({{-12, n * r}});
  e[key(G::Kappa, G::Rho)] = P({{-8, k * r}});
  e[key(G::Sigma, G::Rho)] = P({{-8, s * r}});
  e[key(G::Zeta, G::Kappa)] = P({{-2, z * k}, {-2, n * k}});
  e[key(G::Zeta, G::Sigma)] = P({{-2, z * s}, {-2, n * k * k}, {2, n * s}});
  e[key(G::Nu, G::Kappa)] = P({{-2, z * k}, {-6, n * k}});
  e[key(G::Nu, G::Sigma)] = P({{-6, z * k * k}, {2, z * s}, {-6, n * s}});
  auto& l = t.laplacians;
  l[G::Zeta] = P({{-8, z}});
  l[G::Nu] = P({{-24, n}});
  l[G::Kappa] = P({{-16, k}});
  l[G::Rho] = P({{-32, r}});
  l[G::Sigma] = P({{-4, k * k}, {-16, s}});
  return t;
}

DotTable make_so3so2() {
  DotTable t;
  t.c = CaseId::SO3xSO2;
  const Monomial z = M({{G::Zeta, 1}}), n = M({{G::Nu, 1}}), k = M({{G::Kappa, 1}}),
                 s = M({{G::Sigma, 1}}), r = M({{G::Rho, 1}}), b = M({{G::Beta, 1}});
  const Rational half(1, 2), sixteenth(1, 16);
  auto& e = t.entries;
  e[key(G::Kappa, G::Beta)] = P({{16, k * k * k}});
  e[key(G::Kappa, G::Rho)] = P({{-8, k * r}});
  e[key(G::Kappa, G::Sigma)] = HWPolynomial{};
  e[key(G::Rho, G::Sigma)] = P({{64, b * s}, {256, k * k * s}});
  e[key(G::Beta, G::Sigma)] = P({{half, r * s}});
  e[key(G::Beta, G::Rho)] = P({{-8, b * r}});
  e[key(G::Kappa, G::Kappa)] = P({{-1, b}, {-8, k * k}});
  e[key(G::Sigma, G::Sigma)] = P({{-8, s * s}});
  e[key(G::Sigma, G::Zeta)] = P({{-2, s * z}, {half, s * n}});
  e[key(G::Sigma, G::Nu)] = P({{8, s * z}, {-6, s * n}});
  e[key(G::Kappa, G::Zeta)] = P({{-2, k * z}, {-half, k * n}});
  e[key(G::Kappa, G::Nu)] = P({{-8, k * z}, {-6, k * n}});
  e[key(G::Zeta, G::Beta)] = P({{-4, z * b}, {-1, n * b}, {half, z * r}, {-sixteenth, n * r}});
  e[key(G::Nu, G::Beta)] = P({{-16, z * b}, {-12, n * b}, {3, z * r}});
  e[key(G::Zeta, G::Rho)] = P({{32, z * b}, {-4, z * r}});
  e[key(G::Nu, G::Rho)] = P({{-96, n * b}, {32, z * r}, {-12, n * r}});
  e[key(G::Beta, G::Beta)] = P({{-32, b * k * k}, {-64, k * k * k * k}, {-8, b * b}});
  // Not among the base table entries; needed once rho appears squared in the
  // odd-q bases. Fitted numerically and re-verified by the oracle.
  e[key(G::Rho, G::Rho)] =
      P({{-16384, k * k * k * k}, {-12288, k * k * b}, {-1024, b * b}});
  t.derived_entries.push_back(key(G::Rho, G::Rho));
  auto& l = t.laplacians;
  l[G::Zeta] = P({{-4, z}});
  l[G::Nu] = P({{-12, n}});
  l[G::Beta] = P({{-8, b}, {16, k * k}});
  l[G::Rho] = P({{-16, r}});
  l[G::Kappa] = P({{-8, k}});
  l[G::Sigma] = P({{-8, s}});
  // Algebraic relations among the generators (also oracle-verified).
  t.relations.push_back({z * k * k,
                         P({{Rational(1, 32), z * r}, {Rational(-1, 4), z * b},
                            {-sixteenth, n * b}}),
                         true, false, "zeta*kappa^2"});
  t.relations.push_back({n * k * k,
                         P({{Rational(1, 4), z * r}, {-1, z * b},
                            {Rational(-1, 32), n * r}, {Rational(-3, 4), n * b}}),
                         true, false, "nu*kappa^2"});
  t.relations.push_back({r * r,
                         P({{1024, k * k * k * k}, {1024, k * k * b}, {128, b * b}}),
                         false, true, "rho^2"});
  return t;
}

bool divides(const Monomial& d, const Monomial& m) {
  for (int i = 0; i < kNumGens; ++i)
    if (d.e[i] > m.e[i]) return false;
  return true;
}

Monomial quotient(const Monomial& m, const Monomial& d) {
  Monomial q;
  for (int i = 0; i < kNumGens; ++i) q.e[i] = m.e[i] - d.e[i];
  return q;
}

bool has_odd_part(const Monomial& m) { return m[G::Zeta] > 0 || m[G::Nu] > 0; }

Monomial single(Gen g, int k = 1) {
  Monomial m;
  m[g] = k;
  return m;
}

}  // namespace

bool DotTable::has(Gen x, Gen y) const { return entries.count(key(x, y)) > 0; }

const HWPolynomial& DotTable::dot(Gen x, Gen y) const {
  auto it = entries.find(key(x, y));
  if (it == entries.end())
    throw Error(std::string("closure violated: gradient product (") + gen_name(x) +
                "," + gen_name(y) + ") is not available");
  return it->second;
}

const HWPolynomial& DotTable::laplacian(Gen x) const {
  auto it = laplacians.find(x);
  if (it == laplacians.end())
    throw Error(std::string("no Laplacian for generator ") + gen_name(x));
  return it->second;
}

const DotTable& dot_table(CaseId c) {
  static const DotTable so5 = make_so5();
  static const DotTable so3so2 = make_so3so2();
  return c == CaseId::SO5 ? so5 : so3so2;
}

HWPolynomial normalize(CaseId c, const HWPolynomial& p) {
  const DotTable& t = dot_table(c);
  if (t.relations.empty()) return p;
  HWPolynomial cur = p;
  for (int guard = 0; guard < 10000; ++guard) {
    HWPolynomial next;
    bool changed = false;
    for (auto& [m, coeff] : cur) {
      const Relation* hit = nullptr;
      for (const Relation& rel : t.relations) {
        if (!divides(rel.lhs, m)) continue;
        if (rel.requires_odd_part && !has_odd_part(m)) continue;
        if (rel.forbids_odd_part && has_odd_part(m)) continue;
        hit = &rel;
        break;
      }
      if (!hit) {
        add_to(next, HWPolynomial{{m, coeff}});
      } else {
        add_to(next, quotient(m, hit->lhs) * hit->rhs, coeff);
        changed = true;
      }
    }
    cur.swap(next);
    if (!changed) return cur;
  }
  throw Error("normal form rewriting did not terminate");
}

std::vector<Monomial> basis(CaseId c, const Weight& w) {
  int m = multiplicity(c, w);
  if (m == 0) throw Error("weight " + to_string(w) + " has multiplicity zero");
  std::vector<Monomial> out;
  if (c == CaseId::SO5) {
    int k = w.a, l = w.b / 2;
    for (int i = 0; i <= k / 2; ++i)
      for (int j = 0; j <= l; ++j)
        out.push_back(make_monomial({{G::Kappa, k - 2 * i}, {G::Sigma, i},
                                     {G::Zeta, l - j}, {G::Nu, j}}));
    if (k >= 1 && l >= 1)
      for (int i = 0; i <= (k - 1) / 2; ++i)
        for (int j = 0; j <= l - 1; ++j)
          out.push_back(make_monomial({{G::Rho, 1}, {G::Kappa, k - 1 - 2 * i},
                                       {G::Sigma, i}, {G::Zeta, l - 1 - j}, {G::Nu, j}}));
  } else {
    if (w.b < 0) throw Error("SO3xSO2 bases are built for q >= 0 only");
    int P = w.a, Q = w.b;
    if (Q % 2 == 0) {
      int r = Q / 2, kk = P % 2, p = P / 2;
      for (int j = 0; j <= p; ++j)
        out.push_back(make_monomial({{G::Sigma, r}, {G::Beta, j},
                                     {G::Kappa, 2 * p - 2 * j + kk}}));
      for (int j = 0; j <= p - 1; ++j)
        out.push_back(make_monomial({{G::Rho, 1}, {G::Sigma, r}, {G::Beta, j},
                                     {G::Kappa, 2 * p - 2 * j - 2 + kk}}));
    } else {
      int r = (Q - 1) / 2;
      int kk = (P % 2 == 0) ? 1 : 0;
      int p = (P - 1 - kk) / 2;
      for (Gen odd : {G::Zeta, G::Nu})
        for (int j = 0; j <= p; ++j)
          out.push_back(make_monomial({{G::Sigma, r}, {odd, 1}, {G::Rho, p - j},
                                       {G::Beta, j}, {G::Kappa, kk}}));
    }
  }
  if (int(out.size()) != m)
    throw Error("basis size mismatch at " + to_string(w));
  return out;
}

HWPolynomial laplacian_of_monomial(CaseId c, const Monomial& m) {
  const DotTable& t = dot_table(c);
  if (c == CaseId::SO5 && m[G::Rho] > 1)
    throw Error("closure violated: rho exponent exceeds 1 in " + to_string(m));
  HWPolynomial out;
  // Laplacian of prod g_i^{e_i}:
  //   sum_i e_i m/g_i Lap(g_i)
  // + sum_i e_i(e_i-1) m/g_i^2 grad g_i . grad g_i
  // + 2 sum_{i<j} e_i e_j m/(g_i g_j) grad g_i . grad g_j
  for (int i = 0; i < kNumGens; ++i) {
    int ei = m.e[i];
    if (ei == 0) continue;
    Gen gi = Gen(i);
    add_to(out, quotient(m, single(gi)) * t.laplacian(gi), ei);
    if (ei >= 2) add_to(out, quotient(m, single(gi, 2)) * t.dot(gi, gi), Rational(ei) * (ei - 1));
    for (int j = i + 1; j < kNumGens; ++j) {
      int ej = m.e[j];
      if (ej == 0) continue;
      Gen gj = Gen(j);
      add_to(out, quotient(m, single(gi) * single(gj)) * t.dot(gi, gj), 2 * Rational(ei) * ej);
    }
  }
  return normalize(c, out);
}

RationalMatrix laplacian_matrix(CaseId c, const Weight& w) {
  std::vector<Monomial> b = basis(c, w);
  std::map<Monomial, int> index;
  for (int i = 0; i < int(b.size()); ++i) index[b[i]] = i;
  const int n = int(b.size());
  RationalMatrix A = RationalMatrix::Constant(n, n, Rational(0));
  for (int i = 0; i < n; ++i) {
    HWPolynomial img = laplacian_of_monomial(c, b[i]);
    for (auto& [mono, coeff] : img) {
      auto it = index.find(mono);
      if (it == index.end())
        throw Error("closure violated at " + to_string(w) + ": Laplacian of " +
                    to_string(b[i]) + " contains " + to_string(mono));
      A(i, it->second) = coeff;
    }
  }
  return A;
}

bool WeightCrosscheck::all_documented() const {
  for (auto& m : mismatches)
    if (m.klass.empty()) return false;
  for (auto& d : dropped)
    if (d.klass.empty()) return false;
  return true;
}

int CrosscheckReport::mismatch_count() const {
  int n = 0;
  for (auto& w : weights) n += int(w.mismatches.size());
  return n;
}

int CrosscheckReport::undocumented_count() const {
  int n = 0;
  for (auto& w : weights) {
    for (auto& m : w.mismatches)
      if (m.klass.empty()) ++n;
    for (auto& d : w.dropped)
      if (d.klass.empty()) ++n;
  }
  return n;
}

}  // namespace isospec
