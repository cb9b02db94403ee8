#include "cwlab/randers.hpp"

namespace cwlab {

namespace {

void require_spd(const ExactMatrix& m, const char* what) {
  if (m.rows() != m.cols() || !m.is_symmetric() || !is_positive_definite(m))
    throw Error(ErrorCode::kNotSpd, std::string(what) + " is not symmetric positive definite");
}

Vec solve_or_throw(const ExactMatrix& a, const Vec& b) {
  auto x = solve(a, b);
  if (!x) throw Error(ErrorCode::kNotSpd, "singular matrix");
  return *x;
}

}  // namespace

RandersData make_randers(ExactMatrix alpha_gram, ExactMatrix bi_gram, Vec v_bi) {
  require_spd(alpha_gram, "alpha Gram matrix");
  require_spd(bi_gram, "bi-invariant Gram matrix");
  if (alpha_gram.rows() != bi_gram.rows() || v_bi.size() != bi_gram.rows())
    throw Error(ErrorCode::kDimensionMismatch, "make_randers: inconsistent sizes");
  RandersData d{std::move(alpha_gram), std::move(bi_gram), std::move(v_bi), {}};
  d.w = d.bi_gram * d.v_bi;
  if (beta_norm_sq(d) >= Scalar(1))
    throw Error(ErrorCode::kNonConvex, "||beta||_alpha >= 1: not a Randers norm");
  return d;
}

Scalar beta_norm_sq(const RandersData& d) {
  return dot(d.w, solve_or_throw(d.alpha_gram, d.w));
}

double eval_F(const RandersData& d, const Vec& y) {
  return std::sqrt(std::max(0.0, d.alpha_gram.quadratic_form(y).to_double())) +
         dot(d.w, y).to_double();
}

bool on_indicatrix(const RandersData& d, const Vec& y) {
  const Scalar rest = Scalar(1) - dot(d.w, y);
  return rest.sign() > 0 && d.alpha_gram.quadratic_form(y) == rest * rest;
}

Quadric indicatrix_quadric(const RandersData& d) {
  return Quadric{d.alpha_gram - ExactMatrix::outer(d.w, d.w), Scalar(2) * d.w, Scalar(-1)};
}

std::optional<RoundSphere> is_round_sphere(const RandersData& d) {
  const ExactMatrix m = d.alpha_gram - ExactMatrix::outer(d.w, d.w);
  const Scalar lambda = m(0, 0) / d.bi_gram(0, 0);
  if (lambda.sign() <= 0 || !(m == lambda * d.bi_gram)) return std::nullopt;
  RoundSphere s;
  s.lambda = lambda;
  s.center = solve_or_throw(lambda * d.bi_gram, -d.w);
  s.radius_sq = (Scalar(1) - dot(d.w, s.center)) / lambda;
  return s;
}

RandersData navigation_to_randers(const ExactMatrix& bi_gram, const Vec& wind) {
  require_spd(bi_gram, "bi-invariant Gram matrix");
  const Scalar wind_sq = bi_gram.quadratic_form(wind);
  if (wind_sq >= Scalar(1))
    throw Error(ErrorCode::kNonConvex, "navigation wind must satisfy |W|_B < 1");
  const Scalar lambda = Scalar(1) - wind_sq;
  const Vec bw = bi_gram * wind;
  const Scalar inv_lambda = lambda.inverse();
  ExactMatrix a = (inv_lambda * inv_lambda) *
                  (lambda * bi_gram + ExactMatrix::outer(bw, bw));
  // V = B^{-1} w = -W / lambda
  return make_randers(std::move(a), bi_gram, -inv_lambda * wind);
}

RandersData shift_indicatrix(const RandersData& d, const Vec& shift) {
  if (shift.size() != d.dim())
    throw Error(ErrorCode::kDimensionMismatch, "shift_indicatrix: size mismatch");
  const Quadric q = indicatrix_quadric(d);
  // q(z + s) = z^T M z + 2 (M s + w)^T z + q(s)
  const Scalar k = q.evaluate(shift);
  if (k.sign() >= 0)
    throw Error(ErrorCode::kShiftInvalid, "origin leaves the translated indicatrix");
  const Scalar scale = (-k).inverse();
  const Vec w_new = scale * (q.a * shift + d.w);
  ExactMatrix a_new = scale * q.a + ExactMatrix::outer(w_new, w_new);
  Vec v_new = solve_or_throw(d.bi_gram, w_new);
  return make_randers(std::move(a_new), d.bi_gram, std::move(v_new));
}

NumericRanders make_numeric_randers(Eigen::MatrixXd alpha_gram, Eigen::MatrixXd bi_gram,
                                    Eigen::VectorXd v_bi) {
  auto spd = [](const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols() || !m.isApprox(m.transpose(), 1e-12)) return false;
    Eigen::LLT<Eigen::MatrixXd> llt(m);
    return llt.info() == Eigen::Success;
  };
  if (!spd(alpha_gram) || !spd(bi_gram))
    throw Error(ErrorCode::kNotSpd, "Gram matrix is not symmetric positive definite");
  if (alpha_gram.rows() != bi_gram.rows() || v_bi.size() != bi_gram.rows())
    throw Error(ErrorCode::kDimensionMismatch, "make_numeric_randers: inconsistent sizes");
  NumericRanders d{std::move(alpha_gram), std::move(bi_gram), std::move(v_bi), {}};
  d.w = d.bi_gram * d.v_bi;
  const double beta_sq = d.w.dot(d.alpha_gram.llt().solve(d.w));
  if (beta_sq >= 1.0)
    throw Error(ErrorCode::kNonConvex, "||beta||_alpha >= 1: not a Randers norm");
  return d;
}

NumericRanders to_numeric(const RandersData& d) {
  const auto n = static_cast<Eigen::Index>(d.dim());
  Eigen::MatrixXd a(n, n), b(n, n);
  Eigen::VectorXd v(n), w(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    v(i) = d.v_bi[ui].to_double();
    w(i) = d.w[ui].to_double();
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      a(i, j) = d.alpha_gram(ui, uj).to_double();
      b(i, j) = d.bi_gram(ui, uj).to_double();
    }
  }
  return NumericRanders{a, b, v, w};
}

}  // namespace cwlab
