#pragma once

// Left-invariant Randers norms F(y) = sqrt(y^T A y) + <y, V>_B on a Lie
// algebra, their indicatrix quadrics, round-sphere detection, Zermelo
// navigation data and indicatrix translation.

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>

#include "cwlab/error.hpp"
#include "cwlab/exact_matrix.hpp"
#include "cwlab/quadric.hpp"

namespace cwlab {

/// Exact Randers data. A is the Gram matrix of alpha, B the bi-invariant
/// inner product, V the vector representing beta through B, and w = B V.
struct RandersData {
  ExactMatrix alpha_gram;
  ExactMatrix bi_gram;
  Vec v_bi;
  Vec w;

  std::size_t dim() const { return w.size(); }
  friend bool operator==(const RandersData&, const RandersData&) = default;
};

/// Throws kNotSpd if A or B is not symmetric positive definite and
/// kNonConvex if w^T A^{-1} w >= 1.
RandersData make_randers(ExactMatrix alpha_gram, ExactMatrix bi_gram, Vec v_bi);

/// ||beta||_alpha^2 = w^T A^{-1} w
Scalar beta_norm_sq(const RandersData& d);

double eval_F(const RandersData& d, const Vec& y);

/// Exact test of F(y) = 1: y^T A y = (1 - w^T y)^2 with 1 - w^T y > 0.
bool on_indicatrix(const RandersData& d, const Vec& y);

/// (A - w w^T, 2w, -1)
Quadric indicatrix_quadric(const RandersData& d);

struct RoundSphere {
  Vec center;
  Scalar radius_sq;  // in the B-norm
  Scalar lambda;     // A - w w^T = lambda B
};

/// Present iff A - w w^T is a positive multiple of B.
std::optional<RoundSphere> is_round_sphere(const RandersData& d);

/// Randers data whose indicatrix is the B-unit sphere centred at W.
/// Throws kNonConvex when |W|_B >= 1.
RandersData navigation_to_randers(const ExactMatrix& bi_gram, const Vec& wind);

/// Data whose indicatrix is the indicatrix of d translated by -shift.
/// Throws kShiftInvalid when the origin would not be inside the result.
RandersData shift_indicatrix(const RandersData& d, const Vec& shift);

// ---------------------------------------------------------------------------
// binary64 counterpart used for sampling experiments

struct NumericRanders {
  Eigen::MatrixXd alpha_gram;
  Eigen::MatrixXd bi_gram;
  Eigen::VectorXd v_bi;
  Eigen::VectorXd w;

  Eigen::Index dim() const { return w.size(); }
};

NumericRanders make_numeric_randers(Eigen::MatrixXd alpha_gram, Eigen::MatrixXd bi_gram,
                                    Eigen::VectorXd v_bi);
NumericRanders to_numeric(const RandersData& d);

inline double eval_F(const NumericRanders& d, const Eigen::VectorXd& y) {
  return std::sqrt(std::max(0.0, y.dot(d.alpha_gram * y))) + d.w.dot(y);
}

struct VariationReport {
  double min = 0.0;
  double max = 0.0;
  double variation = 0.0;
  std::size_t samples = 0;
};

/// Samples F(Ad(g) X - X') over the given group elements. A Killing field
/// generated by (X, X') can only have constant length if the variation is
/// zero; this refutes, it does not prove. `ad(g, Y)` returns Ad(g) Y in the
/// coordinates used by d. Throws kInvalidArgument for an empty sample set
/// and kDegenerateDirection if Ad(g) X - X' vanishes for some sample.
template <class Sample, class AdMap>
VariationReport constant_length_test(const NumericRanders& d, const Eigen::VectorXd& x,
                                     const Eigen::VectorXd& x_prime,
                                     std::span<const Sample> samples, AdMap&& ad) {
  if (samples.empty())
    throw Error(ErrorCode::kInvalidArgument, "constant_length_test: no samples");
  VariationReport rep;
  rep.min = std::numeric_limits<double>::infinity();
  rep.max = -std::numeric_limits<double>::infinity();
  for (const auto& g : samples) {
    const Eigen::VectorXd y = ad(g, x) - x_prime;
    if (y.norm() < 1e-12)
      throw Error(ErrorCode::kDegenerateDirection,
                  "Ad(g)X - X' vanishes for a sample; direction is degenerate");
    const double f = eval_F(d, y);
    rep.min = std::min(rep.min, f);
    rep.max = std::max(rep.max, f);
  }
  rep.samples = samples.size();
  rep.variation = rep.max - rep.min;
  return rep;
}

}  // namespace cwlab
