#include "isospec/exact_linalg.hpp"

#include <algorithm>
#include <functional>

namespace isospec {

namespace {

Integer round_nearest(const Rational& q) {
  Rational shifted = q + Rational(1, 2);
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return f;
}

Rational cauchy(const QPoly& p) {
  Rational m = 0;
  for (size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, Rational(abs(p[i] / p.back())));
  return m + 1;
}

// rest has only real, irrational, simple roots; `roots` isolates all of them.
void split_real(const QPoly& rest, std::vector<RootInterval> roots,
                std::vector<IntPolynomial>& parts) {
  IntPolynomial S = primitive_part(rest);
  const int n = S.degree();
  const Integer c = S.c.back();
  // Monic integer transform T(y) = c^{n-1} S(y / c); its roots are c * x_i.
  QPoly T(n + 1);
  Integer cp = 1;
  for (int k = n; k >= 0; --k) {
    T[k] = Rational(S.c[k] * cp);
    if (k < n) cp *= c;
  }
  // Precision so that every elementary symmetric function of at most n
  // approximated roots is off by less than 1/4.
  Rational Y = Rational(c) * cauchy(rest) + 1;
  Rational bound = 4 * n;
  for (int i = 0; i < n; ++i) bound *= 2 * Y;
  Rational width = 1 / (bound * Rational(c));
  std::vector<Rational> y;
  for (auto& iv : roots) {
    refine_in_place(iv, width);
    y.push_back(Rational(c) * (iv.exact() ? iv.lo : (iv.lo + iv.hi) / 2));
  }

  std::vector<int> remaining(n);
  for (int i = 0; i < n; ++i) remaining[i] = i;
  QPoly R = T;
  std::vector<QPoly> found;
  while (!remaining.empty()) {
    const int r = int(remaining.size());
    bool split = false;
    for (int size = 1; size < r && !split; ++size) {
      std::vector<int> pick{remaining[0]};
      std::function<bool(int)> rec = [&](int start) -> bool {
        if (int(pick.size()) == size) {
          QPoly g{Rational(1)};
          for (int idx : pick) g = g * linear(y[idx]);
          for (auto& coeff : g) coeff = Rational(round_nearest(coeff));
          QPoly q, rem;
          divmod(R, g, q, rem);
          if (!rem.empty()) return false;
          found.push_back(g);
          R = q;
          std::vector<int> keep;
          for (int idx : remaining)
            if (std::find(pick.begin(), pick.end(), idx) == pick.end()) keep.push_back(idx);
          remaining = keep;
          return true;
        }
        for (int k = start; k < r; ++k) {
          pick.push_back(remaining[k]);
          if (rec(k + 1)) return true;
          pick.pop_back();
        }
        return false;
      };
      split = rec(1);
    }
    if (!split) {
      found.push_back(R);
      remaining.clear();
    }
  }
  // back to x: g(c x), made primitive
  for (const QPoly& g : found) {
    QPoly h(g.size());
    Rational pw = 1;
    for (size_t k = 0; k < g.size(); ++k) {
      h[k] = g[k] * pw;
      pw *= Rational(c);
    }
    parts.push_back(primitive_part(h));
  }
}

}  // namespace

Factorization factor_over_q(const IntPolynomial& P, int max_subset_degree) {
  Factorization out;
  for (auto& [s, e] : squarefree_decomposition(to_qpoly(P))) {
    std::vector<IntPolynomial> parts;
    QPoly rest = to_qpoly(primitive_part(s));
    std::vector<RootInterval> irrational;
    for (auto& iv : isolate_real_roots(rest)) {
      if (iv.exact()) {
        parts.push_back(primitive_part(linear(iv.lo)));
        QPoly q, r;
        divmod(rest, linear(iv.lo), q, r);
        rest = q;
      } else {
        irrational.push_back(iv);
      }
    }
    if (degree(rest) >= 1) {
      if (int(irrational.size()) != degree(rest) || degree(rest) > max_subset_degree) {
        out.complete = false;
        parts.push_back(primitive_part(rest));
      } else {
        // intervals were isolated against the unstripped factor; reisolate
        split_real(rest, isolate_real_roots(rest), parts);
      }
    }
    for (auto& f : parts) out.factors.push_back({f, e});
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) {
    if (x.first.degree() != y.first.degree()) return x.first.degree() < y.first.degree();
    return std::lexicographical_compare(x.first.c.rbegin(), x.first.c.rend(),
                                        y.first.c.rbegin(), y.first.c.rend());
  });
  return out;
}

}  // namespace isospec
