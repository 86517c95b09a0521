#include "isospec/geometry_oracle.hpp"

#include "isospec/rep_theory.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

namespace isospec {

namespace {

constexpr double kPi = 3.14159265358979323846;
const Complex I(0, 1);

// Sparse polynomial with complex coefficients in at most 10 variables.
struct Poly {
  using Exp = std::array<unsigned char, 10>;
  std::map<Exp, Complex> t;

  static Poly var(int i) {
    Poly p;
    Exp e{};
    e[i] = 1;
    p.t[e] = 1;
    return p;
  }
  static Poly constant(Complex c) {
    Poly p;
    if (c != Complex(0)) p.t[Exp{}] = c;
    return p;
  }
  void add(const Exp& e, Complex c) {
    auto& slot = t[e];
    slot += c;
    if (slot == Complex(0)) t.erase(e);
  }
  Poly diff(int i) const {
    Poly d;
    for (auto& [e, c] : t) {
      if (e[i] == 0) continue;
      Exp f = e;
      --f[i];
      d.add(f, c * double(e[i]));
    }
    return d;
  }
  Complex eval(const Eigen::VectorXd& x) const {
    Complex s = 0;
    for (auto& [e, c] : t) {
      double m = 1;
      for (int i = 0; i < int(x.size()); ++i)
        for (int k = 0; k < e[i]; ++k) m *= x[i];
      s += c * m;
    }
    return s;
  }
};

Poly operator+(Poly a, const Poly& b) {
  for (auto& [e, c] : b.t) a.add(e, c);
  return a;
}
Poly operator-(Poly a, const Poly& b) {
  for (auto& [e, c] : b.t) a.add(e, -c);
  return a;
}
Poly operator*(Complex s, Poly a) {
  Poly r;
  for (auto& [e, c] : a.t) r.add(e, s * c);
  return r;
}
Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (auto& [ea, ca] : a.t)
    for (auto& [eb, cb] : b.t) {
      Poly::Exp e;
      for (int i = 0; i < 10; ++i) e[i] = ea[i] + eb[i];
      r.add(e, ca * cb);
    }
  return r;
}

// A polynomial with its first and second derivatives precomputed.
struct Compiled {
  Poly f;
  std::vector<Poly> g;
  std::vector<std::vector<Poly>> h;

  Compiled() = default;
  Compiled(const Poly& p, int N) : f(p), g(N), h(N, std::vector<Poly>(N)) {
    for (int i = 0; i < N; ++i) {
      g[i] = p.diff(i);
      for (int j = 0; j < N; ++j) h[i][j] = g[i].diff(j);
    }
  }
  Jet at(const Eigen::VectorXd& x) const {
    const int N = int(g.size());
    Jet J{f.eval(x), Eigen::VectorXcd(N), Eigen::MatrixXcd(N, N)};
    for (int i = 0; i < N; ++i) {
      J.grad[i] = g[i].eval(x);
      for (int j = 0; j < N; ++j) J.hess(i, j) = h[i][j].eval(x);
    }
    return J;
  }
};

Eigen::MatrixXd E(int i, int j, int n) {
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  M(i - 1, j - 1) = 1;
  M(j - 1, i - 1) = -1;
  return M;
}

struct CaseData {
  AmbientModel model;
  Compiled F;
  std::map<Gen, Compiled> gens;
  std::vector<Compiled> normal;   // n_i = (1/4) dF/dx_i
  std::vector<Compiled> qmap;     // SO5 only
};

CaseData build_so5() {
  CaseData d;
  const double r = std::sqrt(2.0);
  d.model = {CaseId::SO5, 10, 8,
             {E(2, 3, 5), E(4, 5, 5), E(1, 2, 5), E(1, 3, 5), E(1, 4, 5), E(1, 5, 5),
              (E(2, 4, 5) + E(3, 5, 5)) / r, (E(2, 5, 5) - E(3, 4, 5)) / r,
              (E(2, 4, 5) - E(3, 5, 5)) / r, (E(2, 5, 5) + E(3, 4, 5)) / r}};
  std::vector<Poly> x;
  for (int i = 0; i < 10; ++i) x.push_back(Poly::var(i));
  const Complex s2 = r;
  std::vector<Poly> q = {
      2.0 * (x[0] * x[1]) - x[6] * x[6] - x[7] * x[7] + x[8] * x[8] + x[9] * x[9],
      s2 * (x[4] * x[6] - x[4] * x[8] + x[5] * x[7] - x[5] * x[9]) - 2.0 * (x[1] * x[3]),
      s2 * (x[5] * x[6] + x[5] * x[8] - x[4] * x[7] - x[4] * x[9]) + 2.0 * (x[1] * x[2]),
      s2 * (x[2] * x[8] - x[2] * x[6] + x[3] * x[7] + x[3] * x[9]) - 2.0 * (x[5] * x[0]),
      s2 * (x[2] * x[9] - x[2] * x[7] - x[3] * x[6] - x[3] * x[8]) + 2.0 * (x[4] * x[0])};
  Poly r2, q2;
  for (auto& xi : x) r2 = r2 + xi * xi;
  for (auto& qi : q) q2 = q2 + qi * qi;
  Poly F = 2.0 * q2 - r2 * r2;
  std::vector<Poly> dF;
  for (int i = 0; i < 10; ++i) dF.push_back(F.diff(i));
  Poly zeta = x[8] + I * x[9];
  Poly kappa = q[1] + I * q[2];
  Poly sigma = Poly() - x[2] * x[2] + x[3] * x[3] - 2.0 * (x[6] * x[8]) - 2.0 * (x[7] * x[9]) +
               I * (-2.0 * (x[2] * x[3]) - 2.0 * (x[6] * x[9]) + 2.0 * (x[7] * x[8]));
  Poly nu = 0.25 * (dF[8] + I * dF[9]);
  Poly rho = 0.25 * ((x[8] + I * x[9]) * (dF[2] + I * dF[3])) -
             0.25 * ((dF[8] + I * dF[9]) * (x[2] + I * x[3]));
  d.F = Compiled(F, 10);
  d.gens = {{Gen::Zeta, Compiled(zeta, 10)}, {Gen::Nu, Compiled(nu, 10)},
            {Gen::Kappa, Compiled(kappa, 10)}, {Gen::Sigma, Compiled(sigma, 10)},
            {Gen::Rho, Compiled(rho, 10)}};
  for (int i = 0; i < 10; ++i) d.normal.emplace_back(0.25 * dF[i], 10);
  for (auto& qi : q) d.qmap.emplace_back(qi, 10);
  return d;
}

// Coordinates (x11, x12, x21, x22, x31, x32) of a 3x2 matrix, row-major.
CaseData build_so3so2() {
  CaseData d;
  d.model = {CaseId::SO3xSO2, 6, 4, {}};
  Poly X[3][2];
  for (int i = 0; i < 3; ++i)
    for (int a = 0; a < 2; ++a) X[i][a] = Poly::var(2 * i + a);
  Poly r2;
  for (int i = 0; i < 3; ++i)
    for (int a = 0; a < 2; ++a) r2 = r2 + X[i][a] * X[i][a];
  Poly G[2][2];
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int i = 0; i < 3; ++i) G[a][b] = G[a][b] + X[i][a] * X[i][b];
  Poly F = 8.0 * (G[0][0] * G[1][1] - G[0][1] * G[1][0]) - r2 * r2;
  Poly n[3][2];
  for (int i = 0; i < 3; ++i)
    for (int a = 0; a < 2; ++a) n[i][a] = 0.25 * F.diff(2 * i + a);
  Poly zeta = X[0][0] - X[1][1] + I * (X[1][0] + X[0][1]);
  Poly nu = 4.0 * (n[0][0] - n[1][1] + I * (n[1][0] + n[0][1]));
  Poly k1 = X[1][0] * X[2][1] - X[2][0] * X[1][1];
  Poly k2 = X[2][0] * X[0][1] - X[0][0] * X[2][1];
  Poly kappa = k1 + I * k2;
  Poly third = Poly::constant(1.0 / 3.0) * r2;
  Poly b11 = X[0][0] * X[0][0] + X[0][1] * X[0][1] - third;
  Poly b22 = X[1][0] * X[1][0] + X[1][1] * X[1][1] - third;
  Poly b12 = X[0][0] * X[1][0] + X[0][1] * X[1][1];
  Poly beta = b11 - b22 + (2.0 * I) * b12;
  auto rr = [&](int i, int j) {
    return 4.0 * (X[i][0] * n[j][1] + X[j][0] * n[i][1] - X[i][1] * n[j][0] - X[j][1] * n[i][0]);
  };
  Poly rho = -2.0 * rr(0, 1) + I * (rr(0, 0) - rr(1, 1));
  Poly s12 = G[0][1];
  Poly s22 = G[1][1] - 0.5 * r2;
  Poly sigma = s12 + I * s22;
  d.F = Compiled(F, 6);
  d.gens = {{Gen::Zeta, Compiled(zeta, 6)}, {Gen::Nu, Compiled(nu, 6)},
            {Gen::Kappa, Compiled(kappa, 6)}, {Gen::Sigma, Compiled(sigma, 6)},
            {Gen::Rho, Compiled(rho, 6)}, {Gen::Beta, Compiled(beta, 6)}};
  for (int i = 0; i < 6; ++i) d.normal.emplace_back(0.25 * F.diff(i), 6);
  return d;
}

const CaseData& case_data(CaseId c) {
  static const CaseData so5 = build_so5();
  static const CaseData so3so2 = build_so3so2();
  return c == CaseId::SO5 ? so5 : so3so2;
}

Complex dot(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  return (a.array() * b.array()).sum();
}

Eigen::MatrixXd so5_matrix(const Eigen::VectorXd& x) {
  const auto& Y = ambient_model(CaseId::SO5).Y;
  Eigen::MatrixXd X = Eigen::MatrixXd::Zero(5, 5);
  for (int i = 0; i < 10; ++i) X += x[i] * Y[i];
  return X;
}

Eigen::VectorXd so5_coords(const Eigen::MatrixXd& X) {
  const auto& Y = ambient_model(CaseId::SO5).Y;
  Eigen::VectorXd x(10);
  for (int i = 0; i < 10; ++i) x[i] = -0.5 * (X * Y[i]).trace();
  return x;
}

Eigen::MatrixXd so3so2_matrix(const Eigen::VectorXd& x) {
  Eigen::MatrixXd X(3, 2);
  for (int i = 0; i < 3; ++i)
    for (int a = 0; a < 2; ++a) X(i, a) = x[2 * i + a];
  return X;
}

Eigen::VectorXd so3so2_coords(const Eigen::MatrixXd& X) {
  Eigen::VectorXd x(6);
  for (int i = 0; i < 3; ++i)
    for (int a = 0; a < 2; ++a) x[2 * i + a] = X(i, a);
  return x;
}

Eigen::Matrix2d rot2(double t) {
  Eigen::Matrix2d R;
  R << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
  return R;
}

Eigen::Matrix3d skew3(double a, double b, double c) {
  Eigen::Matrix3d S;
  S << 0, -c, b, c, 0, -a, -b, a, 0;
  return S;
}

// Velocity vectors of the infinitesimal group action at x.
Eigen::MatrixXd action_vectors(CaseId c, const Eigen::VectorXd& x) {
  if (c == CaseId::SO5) {
    const auto& Y = ambient_model(c).Y;
    Eigen::MatrixXd X = so5_matrix(x);
    Eigen::MatrixXd V(10, 10);
    for (int k = 0; k < 10; ++k) V.col(k) = so5_coords(Y[k] * X - X * Y[k]);
    return V;
  }
  Eigen::MatrixXd X = so3so2_matrix(x);
  Eigen::MatrixXd V(6, 4);
  for (int k = 0; k < 3; ++k) {
    Eigen::Vector3d e = Eigen::Vector3d::Zero();
    e[k] = 1;
    V.col(k) = so3so2_coords(skew3(e[0], e[1], e[2]) * X);
  }
  Eigen::Matrix2d J;
  J << 0, -1, 1, 0;
  V.col(3) = so3so2_coords(X * J.transpose());
  return V;
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(index),
                    std::uint32_t(index >> 32)};
  return std::mt19937_64(seq);
}

// Uniform in the ball of radius pi.
Eigen::VectorXd random_ball(std::mt19937_64& rng, int dim) {
  std::uniform_real_distribution<double> u(-kPi, kPi);
  Eigen::VectorXd v(dim);
  do {
    for (int i = 0; i < dim; ++i) v[i] = u(rng);
  } while (v.norm() > kPi);
  return v;
}

GroupElement group_from_params(CaseId c, const Eigen::VectorXd& v) {
  if (c == CaseId::SO5) {
    const auto& Y = ambient_model(c).Y;
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(5, 5);
    for (int i = 0; i < 10; ++i) L += v[i] * Y[i];
    return {L.exp(), 0};
  }
  Eigen::MatrixXd A = Eigen::Matrix3d(skew3(v[0], v[1], v[2]).exp());
  return {A, v[3]};
}

OracleReport make_report(std::string label, int samples, double residual, double tol) {
  return {std::move(label), samples, residual, tol, residual <= tol};
}

// Jets of x_i and n_i at a point.
std::vector<Jet> coordinate_jets(const Eigen::VectorXd& x) {
  const int N = int(x.size());
  std::vector<Jet> out;
  for (int i = 0; i < N; ++i) {
    Jet J = Jet::constant(N, x[i]);
    J.grad[i] = 1;
    out.push_back(J);
  }
  return out;
}

std::vector<Jet> normal_jets(CaseId c, const Eigen::VectorXd& x) {
  std::vector<Jet> out;
  for (auto& p : case_data(c).normal) out.push_back(p.at(x));
  return out;
}

// s(X) = X^2 - tr(X^2)/5 I for X = sum v_i Y_i with jet entries; upper triangle.
std::vector<Jet> s_map(const std::vector<Jet>& v) {
  const auto& Y = ambient_model(CaseId::SO5).Y;
  const int N = int(v[0].grad.size());
  std::vector<std::vector<Jet>> X(5, std::vector<Jet>(5, Jet::constant(N, 0)));
  for (int k = 0; k < 10; ++k)
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b)
        if (Y[k](a, b) != 0) X[a][b] = X[a][b] + Complex(Y[k](a, b)) * v[k];
  std::vector<std::vector<Jet>> X2(5, std::vector<Jet>(5, Jet::constant(N, 0)));
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int m = 0; m < 5; ++m) X2[a][b] = X2[a][b] + X[a][m] * X[m][b];
  Jet tr = Jet::constant(N, 0);
  for (int a = 0; a < 5; ++a) tr = tr + X2[a][a];
  std::vector<Jet> out;
  for (int a = 0; a < 5; ++a)
    for (int b = a; b < 5; ++b) out.push_back(a == b ? X2[a][b] - Complex(0.2) * tr : X2[a][b]);
  return out;
}

std::string weight_label(const Weight& w) { return to_string(w); }

}  // namespace

Jet Jet::constant(int N, Complex c) {
  return {c, Eigen::VectorXcd::Zero(N), Eigen::MatrixXcd::Zero(N, N)};
}

Jet operator+(const Jet& f, const Jet& g) { return {f.value + g.value, f.grad + g.grad, f.hess + g.hess}; }
Jet operator-(const Jet& f, const Jet& g) { return {f.value - g.value, f.grad - g.grad, f.hess - g.hess}; }
Jet operator*(Complex s, const Jet& f) { return {s * f.value, s * f.grad, s * f.hess}; }

Jet operator*(const Jet& f, const Jet& g) {
  Jet r;
  r.value = f.value * g.value;
  r.grad = f.value * g.grad + g.value * f.grad;
  r.hess = f.value * g.hess + g.value * f.hess + f.grad * g.grad.transpose() +
           g.grad * f.grad.transpose();
  return r;
}

Jet pow(const Jet& f, int e) {
  Jet r = Jet::constant(int(f.grad.size()), 1);
  for (int i = 0; i < e; ++i) r = r * f;
  return r;
}

const AmbientModel& ambient_model(CaseId c) { return case_data(c).model; }

Eigen::VectorXd orbit_point(CaseId c, const GroupElement& g, double theta) {
  if (c == CaseId::SO5) {
    const auto& Y = ambient_model(c).Y;
    Eigen::MatrixXd X0 = std::cos(theta) * Y[0] + std::sin(theta) * Y[1];
    return so5_coords(g.g * X0 * g.g.transpose());
  }
  Eigen::MatrixXd X0 = Eigen::MatrixXd::Zero(3, 2);
  X0(0, 0) = std::cos(theta);
  X0(1, 1) = std::sin(theta);
  return so3so2_coords(g.g * X0 * rot2(g.t).transpose());
}

SamplePoint make_sample(CaseId c, const Eigen::VectorXd& x, double theta) {
  const AmbientModel& M = ambient_model(c);
  SamplePoint s;
  s.theta = theta;
  s.x = x;
  Jet F = cm_jet(c, x);
  Eigen::VectorXd G = F.grad.real() - 4 * F.value.real() * x;
  s.n = G / G.norm();
  Eigen::MatrixXd V = action_vectors(c, x);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(V, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > 1e-8 * sv[0]) ++rank;
  if (rank != M.dim_m) throw Error("degenerate tangent frame");
  s.tangent_frame = svd.matrixU().leftCols(M.dim_m);
  return s;
}

std::vector<SamplePoint> sample_points(CaseId c, double theta, int count, std::uint64_t seed) {
  std::vector<SamplePoint> out;
  const int dim = c == CaseId::SO5 ? 10 : 4;
  for (std::uint64_t idx = 0; int(out.size()) < count; ++idx) {
    auto rng = sample_rng(seed, idx);
    Eigen::VectorXd v = random_ball(rng, dim);
    try {
      SamplePoint s = make_sample(c, orbit_point(c, group_from_params(c, v), theta), theta);
      s.group_params = v;
      out.push_back(std::move(s));
    } catch (const Error&) {
      // rank defect: draw the next index
    }
  }
  return out;
}

Jet cm_jet(CaseId c, const Eigen::VectorXd& x) { return case_data(c).F.at(x); }

std::map<Gen, Jet> hw_jets(CaseId c, const Eigen::VectorXd& x) {
  std::map<Gen, Jet> out;
  for (auto& [g, p] : case_data(c).gens) out[g] = p.at(x);
  return out;
}

std::map<Gen, Complex> hw_values(CaseId c, const Eigen::VectorXd& x) {
  std::map<Gen, Complex> out;
  for (auto& [g, p] : case_data(c).gens) out[g] = p.f.eval(x);
  return out;
}

Complex evaluate(const HWPolynomial& p, const std::map<Gen, Complex>& values) {
  Complex s = 0;
  for (auto& [m, coeff] : p) {
    Complex term = coeff.get_d();
    for (int k = 0; k < kNumGens; ++k)
      for (int e = 0; e < m.e[k]; ++e) term *= values.at(Gen(k));
    s += term;
  }
  return s;
}

Jet monomial_jet(const Monomial& m, const std::map<Gen, Jet>& gens, int N) {
  Jet r = Jet::constant(N, 1);
  for (int k = 0; k < kNumGens; ++k)
    if (m.e[k] > 0) r = r * pow(gens.at(Gen(k)), m.e[k]);
  return r;
}

Eigen::VectorXcd tangential_gradient(const Jet& f, const SamplePoint& s) {
  Eigen::VectorXcd x = s.x.cast<Complex>(), n = s.n.cast<Complex>();
  return f.grad - dot(f.grad, x) * x - dot(f.grad, n) * n;
}

Complex submanifold_laplacian(const Jet& f, const SamplePoint& s) {
  Complex sum = 0;
  const Eigen::MatrixXd& T = s.tangent_frame;
  for (int i = 0; i < T.cols(); ++i) {
    Eigen::VectorXcd e = T.col(i).cast<Complex>();
    sum += dot(e, f.hess * e);
  }
  return sum - double(T.cols()) * dot(s.x.cast<Complex>(), f.grad);
}

Suite parse_suite(const std::string& s) {
  if (s == "gradients") return Suite::Gradients;
  if (s == "laplacians") return Suite::Laplacians;
  if (s == "eigenfunctions") return Suite::Eigenfunctions;
  if (s == "s_pair") return Suite::SPair;
  if (s == "relations") return Suite::Relations;
  if (s == "sanity") return Suite::Sanity;
  throw Error("unknown suite '" + s + "'");
}

const char* to_string(Suite s) {
  switch (s) {
    case Suite::Gradients: return "gradients";
    case Suite::Laplacians: return "laplacians";
    case Suite::Eigenfunctions: return "eigenfunctions";
    case Suite::SPair: return "s_pair";
    case Suite::Relations: return "relations";
    case Suite::Sanity: return "sanity";
  }
  return "";
}

std::vector<OracleReport> verify_identities(CaseId c, Suite suite, int samples,
                                            std::uint64_t seed, double tol) {
  const DotTable& T = dot_table(c);
  const AmbientModel& M = ambient_model(c);
  auto pts = sample_points(c, kPi / 8, samples, seed);
  std::vector<std::string> labels;
  std::vector<double> worst;
  auto record = [&](size_t k, const std::string& label, double r) {
    if (k >= labels.size()) {
      labels.push_back(label);
      worst.push_back(0);
    }
    worst[k] = std::max(worst[k], r);
  };
  const double eig_x = c == CaseId::SO5 ? -8 : -4;
  const double eig_n = c == CaseId::SO5 ? -24 : -12;
  const double eig_xn = c == CaseId::SO5 ? -32 : -16;

  for (const SamplePoint& s : pts) {
    size_t k = 0;
    auto jets = hw_jets(c, s.x);
    std::map<Gen, Complex> vals;
    for (auto& [g, j] : jets) vals[g] = j.value;
    switch (suite) {
      case Suite::Gradients:
        for (auto& [key, rhs] : T.entries) {
          Complex lhs = dot(tangential_gradient(jets.at(key.first), s),
                            tangential_gradient(jets.at(key.second), s));
          record(k++, std::string("grad ") + gen_name(key.first) + " . grad " + gen_name(key.second),
                 std::abs(lhs - evaluate(rhs, vals)));
        }
        break;
      case Suite::Laplacians:
        for (auto& [g, rhs] : T.laplacians)
          record(k++, std::string("laplacian ") + gen_name(g),
                 std::abs(submanifold_laplacian(jets.at(g), s) - evaluate(rhs, vals)));
        break;
      case Suite::Relations:
        for (auto& rel : T.relations) {
          HWPolynomial lhs{{rel.lhs, Rational(1)}};
          // guards restrict where the rule is applied, not where it holds
          record(k++, "relation " + rel.label, std::abs(evaluate(lhs, vals) - evaluate(rel.rhs, vals)));
        }
        break;
      case Suite::Eigenfunctions: {
        auto X = coordinate_jets(s.x);
        auto Nn = normal_jets(c, s.x);
        double rx = 0, rn = 0, rxn = 0, rq = 0;
        for (int i = 0; i < M.N; ++i) {
          rx = std::max(rx, std::abs(submanifold_laplacian(X[i], s) - eig_x * X[i].value));
          rn = std::max(rn, std::abs(submanifold_laplacian(Nn[i], s) - eig_n * Nn[i].value));
          for (int j = i + 1; j < M.N; ++j) {
            Jet w = X[i] * Nn[j] - X[j] * Nn[i];
            rxn = std::max(rxn, std::abs(submanifold_laplacian(w, s) - eig_xn * w.value));
          }
        }
        record(k++, "laplacian x = " + std::to_string(int(eig_x)) + " x", rx);
        record(k++, "laplacian n = " + std::to_string(int(eig_n)) + " n", rn);
        record(k++, "laplacian x^n = " + std::to_string(int(eig_xn)) + " x^n", rxn);
        if (c == CaseId::SO5) {
          for (auto& q : case_data(c).qmap) {
            Jet J = q.at(s.x);
            rq = std::max(rq, std::abs(submanifold_laplacian(J, s) + 16.0 * J.value));
          }
          record(k++, "laplacian q = -16 q", rq);
        }
        break;
      }
      case Suite::SPair: {
        if (c != CaseId::SO5) break;
        auto sx = s_map(coordinate_jets(s.x));
        auto sn = s_map(normal_jets(c, s.x));
        const double r14 = std::sqrt(14.0);
        double m1 = 0, m2 = 0, ep = 0, em = 0;
        for (size_t i = 0; i < sx.size(); ++i) {
          Complex lx = submanifold_laplacian(sx[i], s), ln = submanifold_laplacian(sn[i], s);
          m1 = std::max(m1, std::abs(lx - (-18.0 * sx[i].value - 2.0 * sn[i].value)));
          m2 = std::max(m2, std::abs(ln - (-14.0 * sx[i].value - 46.0 * sn[i].value)));
          for (double sg : {1.0, -1.0}) {
            Complex u = 7.0 * sx[i].value + (7 + sg * 2 * r14) * sn[i].value;
            Complex lu = 7.0 * lx + (7 + sg * 2 * r14) * ln;
            double res = std::abs(lu - (-32 - sg * 4 * r14) * u);
            (sg > 0 ? ep : em) = std::max(sg > 0 ? ep : em, res);
          }
        }
        record(k++, "laplacian s(x) = -18 s(x) - 2 s(n)", m1);
        record(k++, "laplacian s(n) = -14 s(x) - 46 s(n)", m2);
        record(k++, "7 s(x) + (7+2sqrt14) s(n): eigenvalue -32-4sqrt14", ep);
        record(k++, "7 s(x) + (7-2sqrt14) s(n): eigenvalue -32+4sqrt14", em);
        break;
      }
      case Suite::Sanity: {
        Jet F = cm_jet(c, s.x);
        record(k++, "F(x) = 0 on the minimal level", std::abs(F.value));
        record(k++, "|x| = 1", std::abs(s.x.norm() - 1));
        record(k++, "|grad F| = 4", std::abs(F.grad.real().norm() - 4));
        record(k++, "x . grad F = 4F", std::abs(dot(s.x.cast<Complex>(), F.grad) - 4.0 * F.value));
        Eigen::MatrixXd B(M.N, M.dim_m + 2);
        B << s.tangent_frame, s.x, s.n;
        record(k++, "frame orthonormal", (B.transpose() * B - Eigen::MatrixXd::Identity(M.dim_m + 2, M.dim_m + 2)).norm());
        record(k++, "tangential gradient of F", tangential_gradient(F, s).norm());
        break;
      }
    }
  }
  std::vector<OracleReport> out;
  for (size_t k = 0; k < labels.size(); ++k)
    out.push_back(make_report(labels[k], int(pts.size()), worst[k], tol));
  return out;
}

double mean_curvature_formula(double theta) {
  return 4 * std::sin(8 * theta) / (std::cos(8 * theta) - 1);
}

std::vector<OracleReport> curvature_checks(CaseId c, double theta, int samples,
                                           std::uint64_t seed, double tol) {
  const int mult = c == CaseId::SO5 ? 2 : 1;
  const double t = std::tan(theta);
  std::vector<double> expected;
  for (double k : {t, -1 / t, (1 + t) / (1 - t), (t - 1) / (1 + t)})
    for (int i = 0; i < mult; ++i) expected.push_back(k);
  std::sort(expected.begin(), expected.end());
  const double H = mean_curvature_formula(theta);

  double worst_k = 0, worst_h = 0;
  auto pts = sample_points(c, theta, samples, seed);
  for (const SamplePoint& s : pts) {
    Jet F = cm_jet(c, s.x);
    const double f = F.value.real();
    Eigen::VectorXd G = F.grad.real() - 4 * f * s.x;
    const int N = int(s.x.size());
    Eigen::MatrixXd S = -(s.tangent_frame.transpose() *
                          (F.hess.real() - 4 * f * Eigen::MatrixXd::Identity(N, N)) *
                          s.tangent_frame) / G.norm();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S);
    std::vector<double> got(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    double best = 1e300;
    int best_sign = 1;
    for (int sg : {1, -1}) {
      std::vector<double> g2;
      for (double v : got) g2.push_back(sg * v);
      std::sort(g2.begin(), g2.end());
      double r = 0;
      for (size_t i = 0; i < g2.size(); ++i) r = std::max(r, std::abs(g2[i] - expected[i]));
      if (r < best) {
        best = r;
        best_sign = sg;
      }
    }
    worst_k = std::max(worst_k, best);
    double measured = best_sign * S.trace() / mult;  // sum of the distinct curvatures
    worst_h = std::max(worst_h, std::abs(measured - H));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "theta=%.6f", theta);
  std::vector<OracleReport> out = {
      make_report(std::string("principal curvatures ") + buf, int(pts.size()), worst_k, tol),
      make_report(std::string("mean curvature vs 4sin8t/(cos8t-1) ") + buf, int(pts.size()),
                  worst_h, tol)};
  if (c == CaseId::SO5) {
    // |[Y_i, h(theta)]|^2 for the weight-space directions Y_3..Y_10
    const auto& Y = ambient_model(c).Y;
    Eigen::MatrixXd h = std::cos(theta) * Y[0] + std::sin(theta) * Y[1];
    const double cs = std::cos(theta), sn = std::sin(theta);
    const double a[4] = {cs * cs, sn * sn, 1 - 2 * sn * cs, 1 + 2 * sn * cs};
    double r = 0;
    for (int i = 2; i < 10; ++i) {
      Eigen::MatrixXd B = Y[i] * h - h * Y[i];
      r = std::max(r, std::abs(-0.5 * (B * B).trace() - a[(i - 2) / 2]));
    }
    out.push_back(make_report(std::string("metric coefficients ") + buf, 1, r, tol));
  }
  return out;
}

OracleReport rank_independence_check(CaseId c, const Weight& w, int samples, std::uint64_t seed,
                                     double threshold) {
  auto B = basis(c, w);
  const int m = int(B.size());
  auto pts = sample_points(c, kPi / 8, std::max(samples, 2 * m), seed);
  Eigen::MatrixXcd V(pts.size(), m);
  for (size_t i = 0; i < pts.size(); ++i) {
    auto vals = hw_values(c, pts[i].x);
    for (int j = 0; j < m; ++j) V(i, j) = evaluate(HWPolynomial{{B[j], Rational(1)}}, vals);
  }
  for (int j = 0; j < m; ++j) V.col(j) /= V.col(j).norm();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(V);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > threshold * sv[0]) ++rank;
  char buf[96];
  std::snprintf(buf, sizeof buf, "rank %s = %d of %d (sigma_min/sigma_max = %.3g)",
                weight_label(w).c_str(), rank, m, sv[sv.size() - 1] / sv[0]);
  return make_report(buf, int(pts.size()), std::abs(rank - m), 0);
}

OracleReport matrix_agreement_check(CaseId c, const Weight& w, int samples, std::uint64_t seed,
                                    double tol) {
  auto B = basis(c, w);
  RationalMatrix A = laplacian_matrix(c, w);
  const int N = ambient_model(c).N;
  auto pts = sample_points(c, kPi / 8, samples, seed);
  double worst = 0;
  for (const SamplePoint& s : pts) {
    auto jets = hw_jets(c, s.x);
    std::vector<Jet> mj;
    for (auto& m : B) mj.push_back(monomial_jet(m, jets, N));
    for (size_t i = 0; i < B.size(); ++i) {
      Complex rhs = 0;
      double scale = 1;
      for (size_t j = 0; j < B.size(); ++j) {
        Complex term = A(i, j).get_d() * mj[j].value;
        rhs += term;
        scale = std::max(scale, std::abs(term));
      }
      worst = std::max(worst, std::abs(submanifold_laplacian(mj[i], s) - rhs) / scale);
    }
  }
  return make_report("laplacian matrix " + weight_label(w) + " (relative)", int(pts.size()), worst,
                     tol);
}

OracleReport equivariance_check(CaseId c, int samples, std::uint64_t seed, double tol) {
  auto pts = sample_points(c, kPi / 8, samples, seed);
  std::mt19937_64 rng(seed + 7);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  double worst = 0;
  for (const SamplePoint& s : pts) {
    const double a = u(rng), b = u(rng);
    Eigen::VectorXd y;
    if (c == CaseId::SO5) {
      const auto& Y = ambient_model(c).Y;
      Eigen::MatrixXd T = Eigen::MatrixXd(a * Y[0] + b * Y[1]).exp();
      y = so5_coords(T * so5_matrix(s.x) * T.transpose());
    } else {
      Eigen::Matrix3d Ra = Eigen::Matrix3d::Identity();
      Ra.topLeftCorner<2, 2>() = rot2(a);
      y = so3so2_coords(Ra * so3so2_matrix(s.x) * rot2(b).transpose());
    }
    auto before = hw_values(c, s.x), after = hw_values(c, y);
    for (auto& [g, v] : before) {
      Weight w = gen_weight(c, g);
      Complex chi = c == CaseId::SO5
                        ? std::exp(-I * (double(w.a + w.b / 2) * a + double(w.b / 2) * b))
                        : std::exp(I * (double(w.a) * a + double(w.b) * b));
      worst = std::max(worst, std::abs(after.at(g) - chi * v));
    }
  }
  return make_report("torus equivariance of the generators", int(pts.size()), worst, tol);
}

std::vector<OracleReport> fixture_checks(CaseId c, double tol) {
  std::vector<OracleReport> out;
  const double r2 = std::sqrt(2.0);
  if (c == CaseId::SO5) {
    const auto& Y = ambient_model(c).Y;
    // circle Ad(exp(tY3) A) through h(pi/8)
    Eigen::MatrixXd A(5, 5);
    const double h = 0.5 * r2, s3 = 0.5 * std::sqrt(3.0);
    A << h, 0, 0, 0, h, 0, 0.5, 0, -s3, 0, 0, 0, 1, 0, 0, 0, s3, 0, 0.5, 0, -h, 0, 0, 0, h;
    const double p8 = kPi / 8;
    double worst = 0, worst_dot = 0;
    for (double t : {0.0, 0.3, 1.1, 2.0, 4.5}) {
      Eigen::MatrixXd g = Eigen::MatrixXd(t * Y[2]).exp() * A;
      Eigen::VectorXd x = orbit_point(c, {g, 0}, p8);
      auto v = hw_values(c, x);
      const double st = std::sin(t), ct = std::cos(t);
      Complex w = 0.25 * (-I * std::sqrt(3.0) * ct + st);
      std::map<Gen, Complex> expect = {
          {Gen::Zeta, w * std::sin(p8) - I * std::sqrt(6.0) / 4.0 * std::cos(p8)},
          {Gen::Nu, w * std::sin(3 * p8) + I * std::sqrt(6.0) / 4.0 * std::sin(p8)},
          {Gen::Kappa, -0.5 * st},
          {Gen::Rho, -std::sqrt(3.0) / 8 * st * ct + I / 8.0 * ct * ct - 0.5 * I},
          {Gen::Sigma, -0.25 * ct * ct + 3.0 / 8 * r2 + 0.25}};
      for (auto& [gname, e] : expect) worst = std::max(worst, std::abs(v.at(gname) - e));
      SamplePoint sp = make_sample(c, x, p8);
      auto J = hw_jets(c, x);
      Complex zk = dot(tangential_gradient(J.at(Gen::Zeta), sp), tangential_gradient(J.at(Gen::Kappa), sp));
      Complex ezk = -I * std::sqrt(6.0) / 4.0 * st * std::cos(p8) * ct -
                    I * std::sqrt(3.0) / 2.0 * std::sin(p8) * st + r2 / 4 * std::cos(p8) * st * st;
      worst_dot = std::max(worst_dot, std::abs(zk - ezk));
    }
    out.push_back(make_report("circle: generator values", 5, worst, tol));
    out.push_back(make_report("circle: grad zeta . grad kappa", 5, worst_dot, tol));

    // p_t; sigma carries -(sqrt2/2) cos^2 t
    const double c0 = std::sqrt(4 - 2 * r2);
    double wp = 0, wf = 0;
    for (double t : {0.0, 0.4, 1.3, 2.5}) {
      Eigen::VectorXd x = Eigen::VectorXd::Zero(10);
      x[2] = std::pow(2.0, -0.25) * std::cos(t);
      x[4] = -std::pow(2.0, -0.25) * std::sin(t);
      x[6] = 0.5 * c0;
      auto v = hw_values(c, x);
      wf = std::max(wf, std::abs(cm_jet(c, x).value));
      std::map<Gen, Complex> expect = {{Gen::Zeta, 0},
                                       {Gen::Nu, -std::pow(2.0, -0.5) * c0},
                                       {Gen::Kappa, -std::pow(2.0, -0.75) * c0 * std::sin(t)},
                                       {Gen::Sigma, -r2 / 2 * std::cos(t) * std::cos(t)},
                                       {Gen::Rho, std::pow(2.0, -0.75) * c0 * std::cos(t)}};
      for (auto& [gname, e] : expect) wp = std::max(wp, std::abs(v.at(gname) - e));
    }
    out.push_back(make_report("p_t: F = 0", 4, wf, tol));
    out.push_back(make_report("p_t: generator values", 4, wp, tol));

    Eigen::VectorXd h8 = orbit_point(c, {Eigen::MatrixXd::Identity(5, 5), 0}, kPi / 8);
    out.push_back(make_report("h(pi/8): zeta = 0", 1, std::abs(hw_values(c, h8).at(Gen::Zeta)), tol));
    Eigen::VectorXd h12 = orbit_point(c, {Eigen::MatrixXd::Identity(5, 5), 0}, kPi / 12);
    out.push_back(make_report("h(pi/12): F = -1/2", 1, std::abs(cm_jet(c, h12).value + 0.5), tol));
    return out;
  }

  // Points listed in the column-major order (x11, x21, x31, x12, x22, x32).
  auto from_colmajor = [](std::array<double, 6> p) {
    Eigen::VectorXd x(6);
    const int perm[6] = {0, 2, 4, 1, 3, 5};
    for (int i = 0; i < 6; ++i) x[perm[i]] = p[i];
    return x;
  };
  const double a = std::sqrt(2 - r2), b = std::sqrt(r2 - 1);
  Eigen::VectorXd p1 = from_colmajor({0, 0.5 * a, 0, -0.25 * (-2 + r2) * std::sqrt(2 * r2 + 4), 0,
                                      0.5 * std::pow(2.0, 0.75)});
  Eigen::VectorXd p2 = from_colmajor({0.5 * b, 0, 0.5 * r2, 0, 0.5 * b, 0});
  Eigen::VectorXd p3 = from_colmajor({0, 0.5 * a, 0.5 * std::pow(2.0, 0.75), 0.5 * a, 0, 0});
  Eigen::VectorXd p2u = p2 / p2.norm();
  double wf = 0;
  for (auto* p : {&p1, &p2, &p3}) wf = std::max(wf, std::abs(cm_jet(c, *p).value));
  for (auto* p : {&p1, &p3}) wf = std::max(wf, std::abs(p->norm() - 1));
  out.push_back(make_report("p1, p2, p3: F = 0; p1, p3 unit", 3, wf, tol));
  // Reference values hold up to a unit phase per point, so moduli are compared.
  // The values listed for p3 are realized by p2 scaled to the unit sphere.
  auto v1 = hw_values(c, p1), v2 = hw_values(c, p2), v2u = hw_values(c, p2u);
  double wv = 0;
  auto chk = [&](Complex got, double expect_abs) { wv = std::max(wv, std::abs(std::abs(got) - expect_abs)); };
  chk(v1.at(Gen::Kappa), 0.25 * std::pow(2.0, 0.75) * a);
  chk(v1.at(Gen::Rho), 8 * (r2 - 1));
  chk(v1.at(Gen::Beta), 0);
  chk(v1.at(Gen::Zeta), a);
  chk(v2.at(Gen::Kappa), 0.25 * r2 * b);
  chk(v2.at(Gen::Rho), 4 * (r2 - 1));
  chk(v2.at(Gen::Beta), 0);
  chk(v2u.at(Gen::Zeta), 0);
  chk(v2u.at(Gen::Nu), 4 * r2 * a);
  chk(v2u.at(Gen::Rho), 8 * (r2 - 1));
  chk(v2u.at(Gen::Beta), 0);
  out.push_back(make_report("p1, p2, p2/|p2|: generator moduli", 3, wv, tol));
  return out;
}

}  // namespace isospec
