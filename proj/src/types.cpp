#include "isospec/types.hpp"

#include <cmath>

namespace isospec {

QSqrt2 operator+(const QSqrt2& x, const QSqrt2& y) {
  return {x.a + y.a, x.b + y.b};
}

QSqrt2 operator-(const QSqrt2& x, const QSqrt2& y) {
  return {x.a - y.a, x.b - y.b};
}

QSqrt2 operator*(const QSqrt2& x, const QSqrt2& y) {
  return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
}

QSqrt2 operator*(const Rational& s, const QSqrt2& x) {
  return {s * x.a, s * x.b};
}

int sign(const QSqrt2& x) {
  int sa = sgn(x.a), sb = sgn(x.b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with 2 b^2
  Rational d = x.a * x.a - 2 * x.b * x.b;
  return sgn(d) * sa;
}

void enclose(const QSqrt2& x, const Rational& eps, Rational& lo, Rational& hi) {
  if (x.b == 0) {
    lo = hi = x.a;
    return;
  }
  // bisect sqrt(2) in [1, 3/2] until |b| * width <= eps
  Rational s_lo = 1, s_hi = Rational(3, 2);
  Rational absb = abs(x.b);
  while (absb * (s_hi - s_lo) > eps) {
    Rational mid = (s_lo + s_hi) / 2;
    if (mid * mid < 2)
      s_lo = mid;
    else
      s_hi = mid;
  }
  if (x.b > 0) {
    lo = x.a + x.b * s_lo;
    hi = x.a + x.b * s_hi;
  } else {
    lo = x.a + x.b * s_hi;
    hi = x.a + x.b * s_lo;
  }
}

double to_double(const QSqrt2& x) {
  return x.a.get_d() + x.b.get_d() * std::sqrt(2.0);
}

const GroupCase& group_case(CaseId id) {
  static const GroupCase so5{CaseId::SO5, "so5", 9, 4, 8, 32, 35,
                             {2, -1}, {4, 2}};
  static const GroupCase so3so2{CaseId::SO3xSO2, "so3so2", 5, 4, 4, 16, 11,
                                {2, -1}, {4, 2}};
  return id == CaseId::SO5 ? so5 : so3so2;
}

CaseId parse_case(const std::string& s) {
  if (s == "so5") return CaseId::SO5;
  if (s == "so3so2") return CaseId::SO3xSO2;
  throw Error("unknown case '" + s + "' (expected so5 or so3so2)");
}

std::string to_string(const Weight& w) {
  return "(" + std::to_string(w.a) + "," + std::to_string(w.b) + ")";
}

}  // namespace isospec
