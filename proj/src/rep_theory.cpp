#include "isospec/rep_theory.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

namespace isospec {

namespace {

void require_valid(CaseId c, const Weight& w) {
  if (w.a < 0) throw Error("weight " + to_string(w) + ": first index must be >= 0");
  if (c == CaseId::SO5 && w.b < 0)
    throw Error("weight " + to_string(w) + ": SO5 second index must be >= 0");
}

}  // namespace

int multiplicity(CaseId c, const Weight& w) {
  require_valid(c, w);
  if (c == CaseId::SO5) {
    if (w.b % 2 != 0) return 0;
    int k = w.a, l = w.b / 2;
    return l * (k + 1) + k / 2 + 1;
  }
  int p = w.a, q = std::abs(w.b);
  return (p % 2 == q % 2) ? p + 1 : p;
}

long casimir(CaseId c, const Weight& w) {
  require_valid(c, w);
  if (c == CaseId::SO5) {
    // (k+l)(k+l+3) + l(l+1) with l = b/2, written to stay integral for odd b
    // (4 * mu is integral in general; even b is the only case used here)
    if (w.b % 2 != 0) throw Error("SO5 Casimir requested for odd second index");
    long k = w.a, l = w.b / 2;
    return (k + l) * (k + l + 3) + l * (l + 1);
  }
  long p = w.a, q = w.b;
  return p * (p + 1) + q * q;
}

long irrep_dim(CaseId c, const Weight& w) {
  require_valid(c, w);
  if (c == CaseId::SO5) {
    if (w.b % 2 != 0) throw Error("SO5 dimension requested for odd second index");
    long k = w.a, l = w.b / 2;
    return (k + 2 * l + 2) * (k + 1) * (2 * k + 2 * l + 3) * (2 * l + 1) / 6;
  }
  return 2L * w.a + 1;
}

int zero_weight_mult_oracle_so5(int k, int two_ell, int bound) {
  if (k < 0 || two_ell < 0) throw Error("negative highest weight");
  if (k + two_ell > bound)
    throw Error("Freudenthal oracle bound exceeded: k+2l = " +
                std::to_string(k + two_ell) + " > " + std::to_string(bound));
  // Zero lies in the root lattice coset of lambda only for even 2l.
  if (two_ell % 2 != 0) return 0;
  const int l = two_ell / 2;
  // epsilon coordinates; positive roots e1, e2, e1+e2, e1-e2; 2*rho = (3,1)
  const int L1 = k + l, L2 = l;
  const int roots[4][2] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
  auto ip = [](int x1, int x2, int y1, int y2) { return long(x1) * y1 + long(x2) * y2; };
  // |v + rho|^2 scaled by 4 so that everything stays integral
  auto norm_rho4 = [&](int v1, int v2) {
    long a = 2L * v1 + 3, b = 2L * v2 + 1;
    return a * a + b * b;
  };
  auto dominant = [](int v1, int v2) {
    int x = std::abs(v1), y = std::abs(v2);
    return std::make_pair(std::max(x, y), std::min(x, y));
  };
  auto below_lambda = [&](int v1, int v2) {
    int a = L1 - v1, b = L1 + L2 - v1 - v2;
    return a >= 0 && b >= 0;
  };
  std::map<std::pair<int, int>, long> mult;
  auto lookup = [&](int v1, int v2) -> long {
    auto d = dominant(v1, v2);
    if (!below_lambda(d.first, d.second)) return 0;
    auto it = mult.find(d);
    return it == mult.end() ? 0 : it->second;
  };
  // dominant weights mu = (L1 - a, L2 + a - b), processed by depth a + b
  const int max_depth = L1 + L2 + L1;
  for (int depth = 0; depth <= max_depth; ++depth) {
    for (int a = 0; a <= depth; ++a) {
      int b = depth - a;
      int m1 = L1 - a, m2 = L2 + a - b;
      if (!(m1 >= m2 && m2 >= 0)) continue;
      if (depth == 0) {
        mult[{m1, m2}] = 1;
        continue;
      }
      long num = 0;
      for (auto& r : roots) {
        for (int j = 1;; ++j) {
          int v1 = m1 + j * r[0], v2 = m2 + j * r[1];
          if (std::abs(v1) > L1 || std::abs(v2) > L1) break;
          num += lookup(v1, v2) * ip(v1, v2, r[0], r[1]);
        }
      }
      long den4 = norm_rho4(L1, L2) - norm_rho4(m1, m2);
      // m = 2 num / den, with den = den4 / 4
      long value = 8 * num / den4;
      if (value * den4 != 8 * num) throw Error("Freudenthal recursion produced a non-integer");
      mult[{m1, m2}] = value;
    }
  }
  return int(lookup(0, 0));
}

int mult_oracle_so3so2(int p, int q) {
  if (p < 0) throw Error("negative SO(3) weight");
  int parity = std::abs(q) % 2;
  auto count = [parity](int d) {
    if (d < 0) return 0;
    int n = 0;
    for (int a = 0; a <= d; ++a)
      for (int b = 0; a + b <= d; ++b)
        if ((a + b) % 2 == parity) ++n;
    return n;
  };
  return count(p) - count(p - 2);
}

bool gate_passes(long mu, const Rational& K) {
  Rational lhs = 2 * Rational(mu) - K;
  if (lhs <= 0) return true;
  return lhs * lhs <= 2 * Rational(mu) * Rational(mu);
}

GateEvaluation evaluate_gate(CaseId c, const Weight& w, const Rational& K) {
  GateEvaluation e;
  e.w = w;
  e.mu = casimir(c, w);
  e.lhs = 2 * Rational(e.mu) - K;
  e.lhs_sq = e.lhs * e.lhs;
  e.rhs_sq = 2 * Rational(e.mu) * Rational(e.mu);
  e.passes = gate_passes(e.mu, K);
  return e;
}

std::string GateEvaluation::describe() const {
  std::ostringstream os;
  os << to_string(w) << ": mu = " << mu << ", 2mu - K = " << lhs;
  if (lhs <= 0) {
    os << " <= 0, kept";
  } else {
    os << " > 0 and (2mu - K)^2 = " << lhs_sq << (passes ? " <= " : " > ")
       << "2mu^2 = " << rhs_sq << (passes ? ", kept" : ", excluded");
  }
  return os.str();
}

std::vector<Weight> weights_up_to_casimir(CaseId c, long mu_max) {
  std::vector<Weight> out;
  if (mu_max < 0) return out;
  if (c == CaseId::SO5) {
    for (long s = 0; s * (s + 3) <= mu_max; ++s)  // s = k + l
      for (long l = 0; l <= s; ++l) {
        Weight w{int(s - l), int(2 * l)};
        if (casimir(c, w) <= mu_max && multiplicity(c, w) > 0) out.push_back(w);
      }
  } else {
    for (long p = 0; p * (p + 1) <= mu_max; ++p)
      for (long q = 0; p * (p + 1) + q * q <= mu_max; ++q) {
        Weight w{int(p), int(q)};
        if (multiplicity(c, w) > 0) out.push_back(w);
      }
  }
  return out;
}

std::vector<Candidate> candidate_weights(CaseId c, const Rational& K) {
  std::vector<Candidate> out;
  if (K < 0) return out;
  // (2 - sqrt 2) > 1/2, so any passing weight has mu < 2K.
  mpz_class box = 2 * K.get_num() / K.get_den();
  for (const Weight& w : weights_up_to_casimir(c, box.get_si())) {
    long mu = casimir(c, w);
    if (!gate_passes(mu, K)) continue;
    out.push_back({w, mu, multiplicity(c, w), c == CaseId::SO3xSO2 && w.b > 0});
  }
  std::sort(out.begin(), out.end(), [](const Candidate& x, const Candidate& y) {
    if (x.mu != y.mu) return x.mu < y.mu;
    return x.w < y.w;
  });
  return out;
}

}  // namespace isospec
