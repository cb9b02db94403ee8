#pragma once

// binary64 matrix groups SU(n) and SO(n): exponential, principal logarithm,
// adjoint action, Haar sampling, Cartan embeddings and the flow
// exp(tX) g exp(-tV).

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "cwlab/root_system.hpp"
#include "cwlab/sampling.hpp"

namespace cwlab {

enum class GroupFamily { kSU, kSO };

/// su(n): skew-Hermitian traceless. so(n): real antisymmetric (stored complex).
struct AlgebraElement {
  GroupFamily family = GroupFamily::kSU;
  Eigen::MatrixXcd m;

  int n() const { return static_cast<int>(m.rows()); }
  bool is_valid(double tol = 1e-12) const;
};

/// Unitary (SU) or real orthogonal (SO) with determinant one.
struct GroupElement {
  GroupFamily family = GroupFamily::kSU;
  Eigen::MatrixXcd u;

  int n() const { return static_cast<int>(u.rows()); }
  bool is_valid(double unitary_tol = 1e-12, double det_tol = 1e-10) const;

  static GroupElement identity(GroupFamily family, int n);
  GroupElement inverse() const { return {family, u.adjoint()}; }
  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
};

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement operator*(double s, const AlgebraElement& x);

/// -Re tr(XY)
double bi_inner(const AlgebraElement& x, const AlgebraElement& y);
double bi_norm(const AlgebraElement& x);

GroupElement group_exp(const AlgebraElement& x);

/// Principal logarithm (eigenphases in (-pi, pi)). Throws kLogBranch when an
/// eigenphase is within `branch_tol` of +-pi, or, for SU(n), when the
/// principal logarithm is not traceless.
AlgebraElement group_log(const GroupElement& g, double branch_tol = 1e-8);

/// g X g^{-1}
AlgebraElement adjoint(const GroupElement& g, const AlgebraElement& x);

/// Gaussian matrix, QR, phase correction of R's diagonal, then determinant
/// normalisation. Deterministic per seed.
GroupElement haar_sample(GroupFamily family, int n, std::uint64_t seed);
GroupElement haar_sample(GroupFamily family, int n, Rng& rng);

/// A_n: diag(i a_0, ..., i a_n) in su(n+1).
/// D_n: 2x2 blocks [[0, a_j], [-a_j, 0]] in so(2n); n = 2 is accepted here.
/// Throws kE6Unsupported for E6 and kAmbientConstraint for bad points.
AlgebraElement cartan_embed(LieType t, const Vec& x);

/// exp(tX) g exp(-tV)
GroupElement geodesic_flow(const AlgebraElement& x, const AlgebraElement& v,
                           const GroupElement& g, double t);

/// Basis orthonormal for bi_inner.
std::vector<AlgebraElement> algebra_basis(GroupFamily family, int n);
int algebra_dim(GroupFamily family, int n);
Eigen::VectorXd to_coords(const AlgebraElement& x);
AlgebraElement from_coords(GroupFamily family, int n, const Eigen::VectorXd& c);
/// Ad(g) expressed on coordinates of the orthonormal basis.
Eigen::VectorXd adjoint_coords(const GroupElement& g, const Eigen::VectorXd& c);

double frobenius_distance(const GroupElement& a, const GroupElement& b);

struct LemgeoResult {
  double t_prime = 0.0;
  AlgebraElement x_prime;
  int iterations = 0;
  std::vector<double> t_sequence;
  /// |t_{i+1} - t_i| / |t_i - t_{i-1}| while the denominator is above 1e-9
  std::vector<double> ratios;
  double max_ratio = 0.0;
  /// ||exp(t0 X) - exp(t' X') exp((t0 - t') V)||_F
  double residual = 0.0;
};

/// Given a unit X whose geodesic exp(tX), t in [0, t0], is not minimizing,
/// finds t' < t0 and unit X' with exp(t0 X) = exp(t' X') exp((t0 - t') V) by
/// iterating (t_{i+1}, X_{i+1}) = principal-log data of
/// exp(t0 X) exp((t_i - t0) V).
///
/// Throws kInvalidArgument (|X| != 1, |V| >= 1, size mismatch),
/// kNotApplicable (geodesic already minimizing), kLogBranch and
/// kNoConvergence.
LemgeoResult lemgeo_solve(const AlgebraElement& x, double t0, const AlgebraElement& v,
                          double tol = 1e-12, int max_iter = 500);

}  // namespace cwlab
