#include "cwlab/lie_group.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <numbers>

#include "cwlab/error.hpp"

namespace cwlab {

namespace {

using Complex = std::complex<double>;
constexpr Complex kI(0.0, 1.0);

void require_same(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.family != y.family || x.n() != y.n())
    throw Error(ErrorCode::kDimensionMismatch, "algebra elements of different groups");
}

void require_same(const GroupElement& g, const AlgebraElement& x) {
  if (g.family != x.family || g.n() != x.n())
    throw Error(ErrorCode::kDimensionMismatch, "group and algebra element sizes differ");
}

Eigen::MatrixXcd clean(GroupFamily family, Eigen::MatrixXcd m) {
  if (family == GroupFamily::kSO) m = m.real().cast<Complex>();
  return m;
}

}  // namespace

bool AlgebraElement::is_valid(double tol) const {
  if (m.rows() != m.cols()) return false;
  if ((m + m.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  if (family == GroupFamily::kSU) return std::abs(m.trace()) <= tol;
  return m.imag().cwiseAbs().maxCoeff() <= tol;
}

bool GroupElement::is_valid(double unitary_tol, double det_tol) const {
  if (u.rows() != u.cols()) return false;
  const auto n = u.rows();
  if ((u * u.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() >
      unitary_tol)
    return false;
  if (family == GroupFamily::kSO && u.imag().cwiseAbs().maxCoeff() > unitary_tol)
    return false;
  return std::abs(u.determinant() - Complex(1.0, 0.0)) <= det_tol;
}

GroupElement GroupElement::identity(GroupFamily family, int n) {
  return {family, Eigen::MatrixXcd::Identity(n, n)};
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.family != b.family || a.n() != b.n())
    throw Error(ErrorCode::kDimensionMismatch, "group product: size mismatch");
  return {a.family, a.u * b.u};
}

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
  require_same(x, y);
  return {x.family, x.m + y.m};
}

AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
  require_same(x, y);
  return {x.family, x.m - y.m};
}

AlgebraElement operator*(double s, const AlgebraElement& x) { return {x.family, s * x.m}; }

double bi_inner(const AlgebraElement& x, const AlgebraElement& y) {
  require_same(x, y);
  return -(x.m * y.m).trace().real();
}

double bi_norm(const AlgebraElement& x) { return std::sqrt(std::max(0.0, bi_inner(x, x))); }

GroupElement group_exp(const AlgebraElement& x) {
  // X = i H with H Hermitian; exp(X) = Q diag(e^{i lambda}) Q^*
  Eigen::MatrixXcd h = -kI * x.m;
  h = 0.5 * (h + h.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  const Eigen::VectorXd lambda = es.eigenvalues();
  Eigen::VectorXcd phases(lambda.size());
  for (Eigen::Index k = 0; k < lambda.size(); ++k) phases(k) = std::exp(kI * lambda(k));
  const Eigen::MatrixXcd& q = es.eigenvectors();
  return {x.family, clean(x.family, q * phases.asDiagonal() * q.adjoint())};
}

AlgebraElement group_log(const GroupElement& g, double branch_tol) {
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(g.u);
  const Eigen::MatrixXcd& t = schur.matrixT();
  const Eigen::MatrixXcd& q = schur.matrixU();
  Eigen::VectorXcd log_diag(t.rows());
  double phase_sum = 0.0;
  for (Eigen::Index k = 0; k < t.rows(); ++k) {
    const double theta = std::arg(t(k, k));
    if (std::numbers::pi - std::abs(theta) < branch_tol)
      throw Error(ErrorCode::kLogBranch, "eigenphase at the branch cut +-pi");
    log_diag(k) = kI * theta;
    phase_sum += theta;
  }
  if (g.family == GroupFamily::kSU && std::abs(phase_sum) > 1e-6)
    throw Error(ErrorCode::kLogBranch, "principal logarithm is not traceless");
  Eigen::MatrixXcd m = q * log_diag.asDiagonal() * q.adjoint();
  m = 0.5 * (m - m.adjoint()).eval();
  return {g.family, clean(g.family, std::move(m))};
}

AlgebraElement adjoint(const GroupElement& g, const AlgebraElement& x) {
  require_same(g, x);
  return {x.family, clean(x.family, g.u * x.m * g.u.adjoint())};
}

GroupElement haar_sample(GroupFamily family, int n, std::uint64_t seed) {
  Rng rng(seed);
  return haar_sample(family, n, rng);
}

GroupElement haar_sample(GroupFamily family, int n, Rng& rng) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "haar_sample needs n >= 2");
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double re = normal(rng);
      const double im = family == GroupFamily::kSU ? normal(rng) : 0.0;
      z(i, j) = Complex(re, im);
    }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < n; ++k) {
    const Complex d = r(k, k);
    const double mag = std::abs(d);
    q.col(k) *= mag > 0 ? d / mag : Complex(1.0, 0.0);
  }
  if (family == GroupFamily::kSU) {
    const Complex det = q.determinant();
    q *= std::pow(det, -1.0 / n);
  } else {
    q = q.real().cast<Complex>();
    if (q.determinant().real() < 0) q.col(0) *= -1.0;
  }
  return {family, q};
}

AlgebraElement cartan_embed(LieType t, const Vec& x) {
  if (t.family == Family::kE6)
    throw Error(ErrorCode::kE6Unsupported, "no matrix realization for E6");
  if (t.family == Family::kD && t.rank == 2) {
    // so(4): blocks only, no D_2 root system needed
    if (x.size() != 2)
      throw Error(ErrorCode::kAmbientConstraint, "D2 expects 2 coordinates");
  } else {
    build_root_system(t).check_cartan_point(x);
  }
  const std::vector<double> a = to_double(x);
  if (t.family == Family::kA) {
    const auto n = static_cast<Eigen::Index>(a.size());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) m(k, k) = kI * a[static_cast<std::size_t>(k)];
    return {GroupFamily::kSU, m};
  }
  const auto n = static_cast<Eigen::Index>(2 * a.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t j = 0; j < a.size(); ++j) {
    const auto k = static_cast<Eigen::Index>(2 * j);
    m(k, k + 1) = a[j];
    m(k + 1, k) = -a[j];
  }
  return {GroupFamily::kSO, m};
}

GroupElement geodesic_flow(const AlgebraElement& x, const AlgebraElement& v,
                           const GroupElement& g, double t) {
  require_same(g, x);
  require_same(g, v);
  return group_exp(t * x) * g * group_exp(-t * v);
}

int algebra_dim(GroupFamily family, int n) {
  return family == GroupFamily::kSU ? n * n - 1 : n * (n - 1) / 2;
}

std::vector<AlgebraElement> algebra_basis(GroupFamily family, int n) {
  std::vector<AlgebraElement> basis;
  const double s = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(n, n);
      e(j, k) = s;
      e(k, j) = -s;
      basis.push_back({family, e});
      if (family == GroupFamily::kSU) {
        Eigen::MatrixXcd f = Eigen::MatrixXcd::Zero(n, n);
        f(j, k) = kI * s;
        f(k, j) = kI * s;
        basis.push_back({family, f});
      }
    }
  if (family == GroupFamily::kSU) {
    for (int l = 1; l < n; ++l) {
      Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
      const double norm = 1.0 / std::sqrt(double(l) * (l + 1));
      for (int k = 0; k < l; ++k) h(k, k) = kI * norm;
      h(l, l) = -kI * (l * norm);
      basis.push_back({family, h});
    }
  }
  return basis;
}

Eigen::VectorXd to_coords(const AlgebraElement& x) {
  const auto basis = algebra_basis(x.family, x.n());
  Eigen::VectorXd c(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k)
    c(static_cast<Eigen::Index>(k)) = bi_inner(x, basis[k]);
  return c;
}

AlgebraElement from_coords(GroupFamily family, int n, const Eigen::VectorXd& c) {
  const auto basis = algebra_basis(family, n);
  if (c.size() != static_cast<Eigen::Index>(basis.size()))
    throw Error(ErrorCode::kDimensionMismatch, "coordinate vector has wrong length");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t k = 0; k < basis.size(); ++k)
    m += c(static_cast<Eigen::Index>(k)) * basis[k].m;
  return {family, m};
}

Eigen::VectorXd adjoint_coords(const GroupElement& g, const Eigen::VectorXd& c) {
  return to_coords(adjoint(g, from_coords(g.family, g.n(), c)));
}

double frobenius_distance(const GroupElement& a, const GroupElement& b) {
  return (a.u - b.u).norm();
}

LemgeoResult lemgeo_solve(const AlgebraElement& x, double t0, const AlgebraElement& v,
                          double tol, int max_iter) {
  require_same(x, v);
  if (std::abs(bi_inner(x, x) - 1.0) > 1e-9)
    throw Error(ErrorCode::kInvalidArgument, "lemgeo_solve: X must be a unit vector");
  if (bi_norm(v) >= 1.0)
    throw Error(ErrorCode::kInvalidArgument, "lemgeo_solve: |V|_bi must be < 1");
  if (!(t0 > 0.0)) throw Error(ErrorCode::kInvalidArgument, "lemgeo_solve: t0 must be > 0");

  const GroupElement g = group_exp(t0 * x);
  AlgebraElement step = group_log(g);
  double t = bi_norm(step);
  if (t >= t0 - tol)
    throw Error(ErrorCode::kNotApplicable, "geodesic is already minimizing");

  LemgeoResult out;
  out.t_sequence.push_back(t);
  AlgebraElement direction = t > 0 ? (1.0 / t) * step : x;
  double prev_delta = -1.0;
  for (int it = 1; it <= max_iter; ++it) {
    step = group_log(g * group_exp((t - t0) * v));
    const double t_next = bi_norm(step);
    const double delta = std::abs(t_next - t);
    if (prev_delta > 1e-9) {
      out.ratios.push_back(delta / prev_delta);
      out.max_ratio = std::max(out.max_ratio, out.ratios.back());
    }
    out.t_sequence.push_back(t_next);
    if (t_next > 0) direction = (1.0 / t_next) * step;
    t = t_next;
    prev_delta = delta;
    if (delta <= tol) {
      out.iterations = it;
      out.t_prime = t;
      out.x_prime = direction;
      const GroupElement rebuilt = group_exp(t * direction) * group_exp((t0 - t) * v);
      out.residual = frobenius_distance(g, rebuilt);
      return out;
    }
  }
  throw Error(ErrorCode::kNoConvergence, "lemgeo_solve: no convergence within max_iter");
}

}  // namespace cwlab
