#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace Eigen {

// Exact rationals as an Eigen scalar. Only storage and elementwise
// arithmetic are used; no Eigen decomposition ever sees an mpq_class.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace isospec {

using Rational = mpq_class;
using Integer = mpz_class;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = DenseMatrix<Rational>;

enum class CaseId { SO5, SO3xSO2 };

// a + b*sqrt(2) with rational a, b.
struct QSqrt2 {
  Rational a = 0;
  Rational b = 0;
};

QSqrt2 operator+(const QSqrt2& x, const QSqrt2& y);
QSqrt2 operator-(const QSqrt2& x, const QSqrt2& y);
QSqrt2 operator*(const QSqrt2& x, const QSqrt2& y);
QSqrt2 operator*(const Rational& s, const QSqrt2& x);
int sign(const QSqrt2& x);
// Rational enclosure lo <= x <= hi of width at most eps.
void enclose(const QSqrt2& x, const Rational& eps, Rational& lo, Rational& hi);
double to_double(const QSqrt2& x);

struct GroupCase {
  CaseId id;
  std::string name;       // "so5" or "so3so2"
  int n;                  // hypersurface M^{n-1} in S^n
  int g;                  // number of distinct principal curvatures
  int hypersurface_dim;
  int jacobi_threshold;   // g*(n-1)
  int rotation_nullity;   // dim SO(n+1) - dim G
  QSqrt2 r_min;
  QSqrt2 r_max;
};

const GroupCase& group_case(CaseId id);
CaseId parse_case(const std::string& s);

// SO5: (k, 2l) with the second entry stored as given (must be even).
// SO3xSO2: (p, q) with q signed.
struct Weight {
  int a = 0;
  int b = 0;
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

std::string to_string(const Weight& w);

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace isospec
