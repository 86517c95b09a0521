#include "isospec/galois.hpp"

#include "isospec/hwf_algebra.hpp"

#include <algorithm>

namespace isospec {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
// Polynomial over F_p, ascending, no trailing zeros.
using FpPoly = std::vector<u64>;

u64 mulmod(u64 a, u64 b, u64 p) { return u64(u128(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (a %= p; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

u64 inverse(u64 a, u64 p) { return powmod(a, p - 2, p); }

void trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const FpPoly& f) { return int(f.size()) - 1; }

FpPoly sub(FpPoly a, const FpPoly& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

FpPoly mul(const FpPoly& a, const FpPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  trim(r);
  return r;
}

void divmod(FpPoly a, const FpPoly& b, u64 p, FpPoly* q, FpPoly* r) {
  const int db = deg(b);
  const u64 inv = inverse(b.back(), p);
  FpPoly quot(std::max(0, deg(a) - db + 1), 0);
  for (int i = deg(a); i >= db; --i) {
    u64 c = mulmod(a[i], inv, p);
    if (c == 0) continue;
    quot[i - db] = c;
    for (int j = 0; j <= db; ++j) a[i - db + j] = (a[i - db + j] + p - mulmod(c, b[j], p)) % p;
  }
  trim(a);
  trim(quot);
  if (q) *q = quot;
  if (r) *r = a;
}

FpPoly mod(const FpPoly& a, const FpPoly& m, u64 p) {
  FpPoly r;
  divmod(a, m, p, nullptr, &r);
  return r;
}

FpPoly gcd(FpPoly a, FpPoly b, u64 p) {
  while (!b.empty()) {
    FpPoly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    u64 inv = inverse(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

FpPoly derivative(const FpPoly& f, u64 p) {
  FpPoly d;
  for (size_t i = 1; i < f.size(); ++i) d.push_back(mulmod(f[i], i % p, p));
  trim(d);
  return d;
}

// base^e mod m
FpPoly powmod(FpPoly base, u64 e, const FpPoly& m, u64 p) {
  FpPoly r{1};
  base = mod(base, m, p);
  for (; e; e >>= 1) {
    if (e & 1) r = mod(mul(r, base, p), m, p);
    base = mod(mul(base, base, p), m, p);
  }
  return r;
}

}  // namespace

std::vector<u64> primes_up_to(u64 bound) {
  std::vector<u64> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (u64 i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

std::optional<CycleType> factor_degrees_mod_p(const IntPolynomial& P, u64 p) {
  FpPoly f;
  for (const Integer& c : P.c) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
    f.push_back(r.get_ui());
  }
  trim(f);
  if (deg(f) != P.degree()) return std::nullopt;
  if (deg(gcd(f, derivative(f, p), p)) > 0) return std::nullopt;

  CycleType ct{p, {}};
  const FpPoly x{0, 1};
  FpPoly h = x;  // x^(p^d) mod f
  for (int d = 1; 2 * d <= deg(f); ++d) {
    h = powmod(h, p, f, p);
    FpPoly g = gcd(f, sub(h, x, p), p);
    if (deg(g) > 0) {
      for (int k = 0; k < deg(g) / d; ++k) ct.degrees.push_back(d);
      FpPoly q;
      divmod(f, g, p, &q, nullptr);
      f = q;
      h = mod(h, f, p);
    }
  }
  if (deg(f) > 0) ct.degrees.push_back(deg(f));
  std::sort(ct.degrees.begin(), ct.degrees.end());
  return ct;
}

const char* to_string(GaloisConclusion c) {
  return c == GaloisConclusion::SymmetricGroup ? "SymmetricGroup" : "Inconclusive";
}

GaloisCertificate symmetric_group_certificate(const IntPolynomial& P, u64 prime_bound) {
  GaloisCertificate cert;
  cert.poly = P;
  const int n = P.degree();
  if (n == 1) {
    cert.conclusion = GaloisConclusion::SymmetricGroup;
    return cert;
  }
  if (n < 1) return cert;
  bool n_prime = true;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) n_prime = false;

  for (u64 p : primes_up_to(prime_bound)) {
    auto ct = factor_degrees_mod_p(P, p);
    if (!ct) continue;
    ++cert.primes_tried;
    const auto& D = ct->degrees;
    if (!cert.irreducibility_witness && D.size() == 1) cert.irreducibility_witness = ct;
    int twos = int(std::count(D.begin(), D.end(), 2));
    bool rest_odd = std::all_of(D.begin(), D.end(), [](int d) { return d == 2 || d % 2 == 1; });
    if (!cert.transposition_witness && twos == 1 && rest_odd) cert.transposition_witness = ct;
    if (!cert.primitivity_witness && D.size() == 2 && D[0] == 1 && D[1] == n - 1)
      cert.primitivity_witness = ct;
    bool done = cert.irreducibility_witness && cert.transposition_witness &&
                (n_prime || cert.primitivity_witness);
    if (done) {
      cert.conclusion = GaloisConclusion::SymmetricGroup;
      return cert;
    }
  }
  return cert;
}

UnsolvabilityReport unsolvability_report(CaseId c, const Weight& w, u64 prime_bound) {
  UnsolvabilityReport rep{c, w, char_poly(laplacian_matrix(c, w)), true, {}};
  Factorization F = factor_over_q(rep.poly);
  rep.factorization_complete = F.complete;
  for (auto& [f, e] : F.factors) {
    FactorReport fr{f, e, std::nullopt};
    if (f.degree() >= 5) fr.certificate = symmetric_group_certificate(f, prime_bound);
    rep.factors.push_back(fr);
  }
  return rep;
}

}  // namespace isospec
