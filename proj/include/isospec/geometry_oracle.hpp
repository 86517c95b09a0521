#pragma once

#include "isospec/hwf_algebra.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace isospec {

using Complex = std::complex<double>;

// Value, gradient and Hessian of an ambient function at one point.
struct Jet {
  Complex value;
  Eigen::VectorXcd grad;
  Eigen::MatrixXcd hess;

  static Jet constant(int N, Complex c);
};

Jet operator+(const Jet& f, const Jet& g);
Jet operator-(const Jet& f, const Jet& g);
Jet operator*(const Jet& f, const Jet& g);
Jet operator*(Complex s, const Jet& f);
Jet pow(const Jet& f, int e);

struct AmbientModel {
  CaseId c;
  int N;      // ambient Euclidean dimension (10 or 6)
  int dim_m;  // hypersurface dimension (8 or 4)
  // SO5: orthonormal basis Y_1..Y_10 of so(5) for <X,Y> = -tr(XY)/2.
  std::vector<Eigen::MatrixXd> Y;
};

const AmbientModel& ambient_model(CaseId c);

// Group element: SO5 uses g (5x5); SO3xSO2 uses A (3x3) and the angle t.
struct GroupElement {
  Eigen::MatrixXd g;
  double t = 0;
};

struct SamplePoint {
  double theta = 0;
  Eigen::VectorXd group_params;
  Eigen::VectorXd x;
  Eigen::VectorXd n;
  Eigen::MatrixXd tangent_frame;  // N x dim_m, orthonormal columns
};

// Ambient coordinates of g . h(theta).
Eigen::VectorXd orbit_point(CaseId c, const GroupElement& g, double theta);
// Completes x with its normal and tangent frame. Throws on a rank defect.
SamplePoint make_sample(CaseId c, const Eigen::VectorXd& x, double theta);
std::vector<SamplePoint> sample_points(CaseId c, double theta, int count, std::uint64_t seed);

// Cartan-Muenzner polynomial.
Jet cm_jet(CaseId c, const Eigen::VectorXd& x);

std::map<Gen, Jet> hw_jets(CaseId c, const Eigen::VectorXd& x);
std::map<Gen, Complex> hw_values(CaseId c, const Eigen::VectorXd& x);
Complex evaluate(const HWPolynomial& p, const std::map<Gen, Complex>& values);
Jet monomial_jet(const Monomial& m, const std::map<Gen, Jet>& gens, int N);

// grad f - (grad f . x) x - (grad f . n) n (complex bilinear).
Eigen::VectorXcd tangential_gradient(const Jet& f, const SamplePoint& s);
// Sum of Hess f(e_i, e_i) over the frame minus dim_m (x . grad f); valid on
// the minimal level.
Complex submanifold_laplacian(const Jet& f, const SamplePoint& s);

struct OracleReport {
  std::string label;
  int samples = 0;
  double max_residual = 0;
  double tol = 0;
  bool pass = false;
};

enum class Suite { Gradients, Laplacians, Eigenfunctions, SPair, Relations, Sanity };
Suite parse_suite(const std::string& s);
const char* to_string(Suite s);

std::vector<OracleReport> verify_identities(CaseId c, Suite suite, int samples,
                                            std::uint64_t seed, double tol);

// Principal curvatures, mean curvature against its closed form, and (SO5)
// the metric coefficients along the weight-space directions.
std::vector<OracleReport> curvature_checks(CaseId c, double theta, int samples,
                                           std::uint64_t seed, double tol);
double mean_curvature_formula(double theta);

// Numerical rank of the basis evaluated at >= 2m points.
OracleReport rank_independence_check(CaseId c, const Weight& w, int samples, std::uint64_t seed,
                                     double threshold = 1e-6);

// Numerical Laplacian of each basis monomial against the exact matrix row.
OracleReport matrix_agreement_check(CaseId c, const Weight& w, int samples, std::uint64_t seed,
                                    double tol);

// Torus elements act on each generator by its weight character.
OracleReport equivariance_check(CaseId c, int samples, std::uint64_t seed, double tol);

// Explicit points with known generator values.
std::vector<OracleReport> fixture_checks(CaseId c, double tol);

}  // namespace isospec
