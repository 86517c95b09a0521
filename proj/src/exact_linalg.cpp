#include "isospec/exact_linalg.hpp"

#include <algorithm>
#include <sstream>

namespace isospec {

int degree(const QPoly& p) { return int(p.size()) - 1; }

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly operator+(const QPoly& x, const QPoly& y) {
  QPoly r(std::max(x.size(), y.size()), Rational(0));
  for (size_t i = 0; i < x.size(); ++i) r[i] += x[i];
  for (size_t i = 0; i < y.size(); ++i) r[i] += y[i];
  trim(r);
  return r;
}

QPoly operator-(const QPoly& x, const QPoly& y) {
  QPoly r(std::max(x.size(), y.size()), Rational(0));
  for (size_t i = 0; i < x.size(); ++i) r[i] += x[i];
  for (size_t i = 0; i < y.size(); ++i) r[i] -= y[i];
  trim(r);
  return r;
}

QPoly operator*(const QPoly& x, const QPoly& y) {
  if (x.empty() || y.empty()) return {};
  QPoly r(x.size() + y.size() - 1, Rational(0));
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
  trim(r);
  return r;
}

QPoly derivative(const QPoly& p) {
  if (p.size() <= 1) return {};
  QPoly d(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Rational(long(i));
  trim(d);
  return d;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  if (b.empty()) throw Error("polynomial division by zero");
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lb = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    size_t shift = r.size() - b.size();
    Rational f = r.back() / lb;
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
    r.pop_back();  // leading term cancels exactly
    trim(r);
  }
  trim(q);
}

QPoly monic(const QPoly& p) {
  if (p.empty()) return p;
  QPoly r = p;
  Rational l = p.back();
  for (auto& c : r) c /= l;
  return r;
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Rational eval(const QPoly& p, const Rational& x) {
  Rational acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

QSqrt2 eval(const QPoly& p, const QSqrt2& x) {
  QSqrt2 acc;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + QSqrt2{p[i], 0};
  return acc;
}

QPoly linear(const Rational& r) { return {-r, Rational(1)}; }

IntPolynomial primitive_part(const QPoly& p) {
  IntPolynomial out;
  if (p.empty()) return out;
  Integer L = 1;
  for (auto& c : p) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  Integer g = 0;
  for (auto& c : p) {
    Integer v = c.get_num() * (L / c.get_den());
    ints.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (ints.back() < 0) g = -g;
  for (auto& v : ints) v /= g;
  out.c = std::move(ints);
  // p = (lc p) * monic, and out = (L / g) * p
  Rational s = Rational(L, 1) / Rational(g, 1) * p.back();
  s.canonicalize();
  out.scale = s.get_num();
  if (s.get_den() != 1) out.scale = 1;  // only meaningful for monic input
  return out;
}

QPoly to_qpoly(const IntPolynomial& p) {
  QPoly q;
  for (auto& c : p.c) q.push_back(Rational(c));
  trim(q);
  return q;
}

IntPolynomial from_coeffs(std::initializer_list<long> ascending) {
  QPoly q;
  for (long c : ascending) q.push_back(Rational(c));
  trim(q);
  return primitive_part(q);
}

namespace {

std::string term_string(const std::string& coeff, int k, const std::string& var, bool unit) {
  std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
  if (k == 0) return coeff;
  if (unit) return mono;
  return coeff + "*" + mono;
}

template <typename C>
std::string render(const std::vector<C>& c, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (int k = int(c.size()) - 1; k >= 0; --k) {
    if (c[k] == 0) continue;
    C a = abs(c[k]);
    std::ostringstream cs;
    cs << a;
    bool neg = c[k] < 0;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    os << term_string(cs.str(), k, var, a == 1 && k > 0);
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace

std::string to_string(const IntPolynomial& p, const std::string& var) { return render(p.c, var); }
std::string to_string(const QPoly& p, const std::string& var) { return render(p, var); }

namespace {

RationalMatrix mul(const RationalMatrix& A, const RationalMatrix& B) {
  RationalMatrix C = RationalMatrix::Constant(A.rows(), B.cols(), Rational(0));
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index k = 0; k < A.cols(); ++k) {
      if (A(i, k) == 0) continue;
      for (Eigen::Index j = 0; j < B.cols(); ++j) C(i, j) += A(i, k) * B(k, j);
    }
  return C;
}

}  // namespace

IntPolynomial char_poly(const RationalMatrix& A) {
  if (A.rows() != A.cols()) throw Error("char_poly: matrix is not square");
  const int n = int(A.rows());
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
  QPoly c(n + 1, Rational(0));
  c[n] = 1;
  RationalMatrix M = RationalMatrix::Constant(n, n, Rational(0));
  for (int k = 1; k <= n; ++k) {
    M = mul(A, M);
    for (int i = 0; i < n; ++i) M(i, i) += c[n - k + 1];
    RationalMatrix AM = mul(A, M);
    Rational tr = 0;
    for (int i = 0; i < n; ++i) tr += AM(i, i);
    c[n - k] = -tr / Rational(k);
  }
  return primitive_part(c);
}

Rational determinant(RationalMatrix A) {
  const int n = int(A.rows());
  if (n != A.cols()) throw Error("determinant: matrix is not square");
  if (n == 0) return 1;
  Rational prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (A(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (A(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      A.row(k).swap(A.row(piv));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Rational v = A(i, j) * A(k, k) - A(i, k) * A(k, j);
        A(i, j) = v / prev;
      }
      A(i, k) = 0;
    }
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p0) {
  // Yun's algorithm
  std::vector<std::pair<QPoly, int>> out;
  QPoly p = monic(p0);
  if (degree(p) < 1) return out;
  QPoly dp = derivative(p);
  QPoly a = gcd(p, dp);
  QPoly q, r;
  divmod(p, a, q, r);
  QPoly b = q;
  divmod(dp, a, q, r);
  QPoly c = q;
  QPoly d = c - derivative(b);
  int i = 1;
  while (degree(b) >= 1) {
    QPoly g = gcd(b, d);
    if (degree(g) >= 1) out.push_back({g, i});
    divmod(b, g, q, r);
    b = q;
    divmod(d, g, q, r);
    c = q;
    d = c - derivative(b);
    ++i;
  }
  return out;
}

namespace {

int sgn_at(const QPoly& p, const Rational& x) { return sgn(eval(p, x)); }

std::vector<QPoly> sturm_chain(const QPoly& s) {
  std::vector<QPoly> chain{s, derivative(s)};
  while (degree(chain.back()) > 0) {
    QPoly q, r;
    divmod(chain[chain.size() - 2], chain.back(), q, r);
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(r);
  }
  return chain;
}

int variations(const std::vector<QPoly>& chain, const Rational& x) {
  int v = 0, last = 0;
  for (auto& p : chain) {
    int s = sgn_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

Rational cauchy_bound(const QPoly& p) {
  Rational m = 0;
  for (size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, Rational(abs(p[i] / p.back())));
  return m + 1;
}

struct Isolator {
  QPoly s;
  std::vector<QPoly> chain;
  Integer lead;  // leading coefficient of the primitive integer form of s

  explicit Isolator(const QPoly& sq) : s(sq), chain(sturm_chain(sq)) {
    lead = primitive_part(sq).c.back();
  }

  int count(const Rational& a, const Rational& b) const {
    return variations(chain, a) - variations(chain, b);
  }

  // Interval (lo, hi] holds exactly one root; make endpoints non-roots or
  // collapse to an exact rational root.
  void settle(RootInterval& iv) const {
    if (sgn_at(s, iv.hi) == 0) {
      iv.lo = iv.hi;
      return;
    }
    while (sgn_at(s, iv.lo) == 0) {
      Rational mid = (iv.lo + iv.hi) / 2;
      if (count(mid, iv.hi) == 1)
        iv.lo = mid;
      else
        iv.hi = mid;
      if (sgn_at(s, iv.hi) == 0) {
        iv.lo = iv.hi;
        return;
      }
    }
    // A rational root d/e of s has e | lead: refine below width 1/lead and
    // test the single candidate.
    Rational width_cap(1, 1);
    width_cap /= Rational(abs(lead));
    while (iv.hi - iv.lo >= width_cap) bisect(iv);
    Rational scaled = iv.hi * Rational(abs(lead));
    Integer N = scaled.get_num() / scaled.get_den();  // floor for positive, trunc otherwise
    for (Integer cand = N - 1; cand <= N + 1; ++cand) {
      Rational x(cand, abs(lead));
      x.canonicalize();
      if (x > iv.lo && x <= iv.hi && sgn_at(s, x) == 0) {
        iv.lo = iv.hi = x;
        return;
      }
    }
    iv.sign_lo = sgn_at(s, iv.lo);
    iv.sign_hi = sgn_at(s, iv.hi);
  }

  void bisect(RootInterval& iv) const {
    Rational mid = (iv.lo + iv.hi) / 2;
    int sm = sgn_at(s, mid);
    if (sm == 0) {
      iv.lo = iv.hi = mid;
      return;
    }
    int slo = sgn_at(s, iv.lo);
    if (slo != 0 && sm != slo)
      iv.hi = mid;
    else if (slo != 0)
      iv.lo = mid;
    else if (count(iv.lo, mid) == 1)
      iv.hi = mid;
    else
      iv.lo = mid;
  }

  void isolate(const Rational& a, const Rational& b, int n, int mult,
               std::vector<RootInterval>& out) const {
    if (n == 0) return;
    if (n == 1) {
      RootInterval iv;
      iv.lo = a;
      iv.hi = b;
      iv.multiplicity = mult;
      iv.factor = s;
      settle(iv);
      out.push_back(iv);
      return;
    }
    Rational mid = (a + b) / 2;
    int left = count(a, mid);
    isolate(a, mid, left, mult, out);
    isolate(mid, b, n - left, mult, out);
  }
};

bool overlaps(const RootInterval& x, const RootInterval& y) {
  if (x.exact() && y.exact()) return x.lo == y.lo;
  if (x.exact()) return y.lo < x.lo && x.lo <= y.hi;
  if (y.exact()) return x.lo < y.lo && y.lo <= x.hi;
  return x.lo < y.hi && y.lo < x.hi;
}

}  // namespace

int sturm_count(const QPoly& squarefree, const Rational& a, const Rational& b) {
  auto chain = sturm_chain(squarefree);
  return variations(chain, a) - variations(chain, b);
}

std::vector<RootInterval> isolate_real_roots(const QPoly& P) {
  std::vector<RootInterval> out;
  for (auto& [s, mult] : squarefree_decomposition(P)) {
    Isolator iso(s);
    Rational B = cauchy_bound(s);
    iso.isolate(-B, B, iso.count(-B, B), mult, out);
  }
  // Roots of different squarefree factors are distinct: refine until the
  // intervals are pairwise disjoint.
  for (bool again = true; again;) {
    again = false;
    for (size_t i = 0; i < out.size(); ++i)
      for (size_t j = i + 1; j < out.size(); ++j)
        while (overlaps(out[i], out[j])) {
          again = true;
          for (RootInterval* iv : {&out[i], &out[j]})
            if (!iv->exact()) Isolator(iv->factor).bisect(*iv);
        }
  }
  std::sort(out.begin(), out.end(),
            [](const RootInterval& x, const RootInterval& y) { return x.hi < y.hi; });
  return out;
}

std::vector<RootInterval> isolate_real_roots(const IntPolynomial& P) {
  return isolate_real_roots(to_qpoly(P));
}

BelowCount count_roots_below(const IntPolynomial& P, const Rational& t) {
  BelowCount bc;
  QPoly q = to_qpoly(P);
  for (auto& [s, mult] : squarefree_decomposition(q)) {
    auto chain = sturm_chain(s);
    // roots in (-inf, t] = V(-B) - V(t) with B a root bound
    Rational B = cauchy_bound(s);
    Rational lo = std::min<Rational>(-B, t - 1);
    int upto = variations(chain, lo) - variations(chain, t);
    bool at = sgn_at(s, t) == 0;
    if (at) {
      bc.exact_root = true;
      bc.root_multiplicity += mult;
      --upto;
    }
    bc.below += mult * upto;
  }
  return bc;
}

void refine_in_place(RootInterval& iv, const Rational& eps) {
  if (iv.exact()) return;
  Isolator iso(iv.factor);
  while (!iv.exact() && iv.hi - iv.lo > eps) iso.bisect(iv);
}

Rational refine_root(const RootInterval& iv0, const Rational& eps) {
  RootInterval iv = iv0;
  refine_in_place(iv, eps);
  return iv.exact() ? iv.lo : (iv.lo + iv.hi) / 2;
}

std::string decimal(const Rational& x, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Rational y = abs(x) * Rational(scale) + Rational(1, 2);
  Integer n = y.get_num() / y.get_den();  // round half up on |x|
  std::string s = n.get_str();
  if (int(s.size()) <= digits) s = std::string(digits + 1 - s.size(), '0') + s;
  std::string out = s.substr(0, s.size() - digits);
  if (digits > 0) out += "." + s.substr(s.size() - digits);
  bool zero = (n == 0);
  return (x < 0 && !zero ? "-" : "") + out;
}

}  // namespace isospec
