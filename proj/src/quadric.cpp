#include "cwlab/quadric.hpp"

#include <unordered_set>

#include "cwlab/error.hpp"

namespace cwlab {

namespace {

Vec evaluation_row(const Vec& x) {
  const std::size_t n = x.size();
  Vec row;
  row.reserve(quadric_unknowns(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      row.push_back(i == j ? x[i] * x[i] : Scalar(2) * x[i] * x[j]);
  for (std::size_t i = 0; i < n; ++i) row.push_back(x[i]);
  row.push_back(1);
  return row;
}

Quadric quadric_from_coefficients(const Vec& v, std::size_t n) {
  Quadric q{ExactMatrix(n, n), Vec(n), Scalar()};
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j, ++k) q.a(i, j) = q.a(j, i) = v[k];
  for (std::size_t i = 0; i < n; ++i) q.b[i] = v[k++];
  q.c = v[k];
  return q;
}

std::size_t check_dims(std::span<const Vec> points) {
  if (points.empty()) throw Error(ErrorCode::kInvalidArgument, "empty point list");
  const std::size_t n = points.front().size();
  for (const auto& p : points)
    if (p.size() != n)
      throw Error(ErrorCode::kDimensionMismatch, "points of different dimension");
  return n;
}

Scalar max_abs_row_sum(const ExactMatrix& m) {
  Scalar best;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Scalar s;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j).abs();
    if (s > best) best = s;
  }
  return best;
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kCertifiedCentered: return "CERTIFIED_CENTERED";
    case Verdict::kCounterexample: return "COUNTEREXAMPLE";
    case Verdict::kNotApplicable: return "NOT_APPLICABLE";
  }
  return "?";
}

std::string_view method_name(CertMethod m) {
  switch (m) {
    case CertMethod::kSymmetricSpan: return "SYMMETRIC_SPAN";
    case CertMethod::kMidpointAffine: return "MIDPOINT_AFFINE";
    case CertMethod::kNullspace: return "NULLSPACE";
  }
  return "?";
}

Scalar Quadric::evaluate(const Vec& x) const {
  return a.quadratic_form(x) + dot(b, x) + c;
}

std::optional<Vec> Quadric::center() const {
  auto sol = solve(a, b);
  if (!sol) return std::nullopt;
  return Scalar::rational(-1, 2) * *sol;
}

std::size_t quadric_unknowns(std::size_t n) { return n * (n + 1) / 2 + n + 1; }

std::vector<Quadric> quadric_space(std::span<const Vec> points) {
  const std::size_t n = check_dims(points);
  RowReducer reducer(quadric_unknowns(n));
  for (const auto& p : points) reducer.add(evaluation_row(p));
  std::vector<Quadric> out;
  for (const auto& v : reducer.null_space()) out.push_back(quadric_from_coefficients(v, n));
  return out;
}

NullspaceCertifier::NullspaceCertifier(ExactMatrix gram)
    : gram_(std::move(gram)), dim_(gram_.rows()), reducer_(quadric_unknowns(dim_)) {
  if (!gram_.is_symmetric())
    throw Error(ErrorCode::kNotSymmetric, "NullspaceCertifier: gram not symmetric");
}

bool NullspaceCertifier::add(const Vec& point) {
  if (point.size() != dim_)
    throw Error(ErrorCode::kDimensionMismatch, "NullspaceCertifier: point dimension");
  points_.push_back(point);
  const Scalar r2 = gram_.quadratic_form(point);
  if (!radius_sq_) {
    radius_sq_ = r2;
  } else if (*radius_sq_ != r2) {
    off_sphere_ = true;
  }
  if (off_sphere_ || radius_sq_->sign() <= 0) return false;
  reducer_.add(evaluation_row(point));
  // The sphere itself always lies in the quadric space.
  return reducer_.rank() + 1 < reducer_.cols();
}

CenterCertificate NullspaceCertifier::finish() const {
  CenterCertificate cert;
  cert.method = CertMethod::kNullspace;
  cert.dimension = dim_;
  cert.points_used = points_.size();
  if (points_.empty() || off_sphere_ || radius_sq_->sign() <= 0) return cert;

  const auto null = reducer_.null_space();
  cert.quadric_space_dim = null.size();
  const Quadric* offset = nullptr;
  std::vector<Quadric> basis;
  basis.reserve(null.size());
  for (const auto& v : null) basis.push_back(quadric_from_coefficients(v, dim_));
  for (const auto& q : basis)
    if (!is_zero(q.b)) {
      offset = &q;
      break;
    }
  if (offset == nullptr) {
    cert.verdict = Verdict::kCertifiedCentered;
    return cert;
  }

  // (G, 0, -r^2) + eps * offset, eps from Gershgorin, halved until the
  // quadratic part passes Sylvester's criterion.
  Scalar eps = Scalar(1) / (Scalar(1) + max_abs_row_sum(offset->a));
  const Quadric sphere{gram_, Vec(dim_), -*radius_sq_};
  Quadric witness;
  for (int attempt = 0;; ++attempt) {
    witness = Quadric{sphere.a + eps * offset->a, eps * offset->b,
                      sphere.c + eps * offset->c};
    if (is_positive_definite(witness.a)) break;
    if (attempt > 200)
      throw Error(ErrorCode::kNotApplicable, "could not find positive definite witness");
    eps /= 2;
  }
  for (const auto& p : points_)
    if (!witness.evaluate(p).is_zero())
      throw Error(ErrorCode::kNotApplicable, "witness does not vanish on input");
  cert.verdict = Verdict::kCounterexample;
  cert.witness = std::move(witness);
  return cert;
}

CenterCertificate center_forced(std::span<const Vec> points) {
  const std::size_t n = check_dims(points);
  return center_forced(points, ExactMatrix::identity(n));
}

CenterCertificate center_forced(std::span<const Vec> points, const ExactMatrix& gram) {
  const std::size_t n = check_dims(points);
  if (gram.rows() != n || gram.cols() != n)
    throw Error(ErrorCode::kDimensionMismatch, "center_forced: gram size");
  NullspaceCertifier cert(gram);
  const Scalar r2 = gram.quadratic_form(points.front());
  for (const auto& p : points)
    if (gram.quadratic_form(p) != r2) {
      CenterCertificate na;
      na.dimension = n;
      na.points_used = points.size();
      return na;
    }
  for (const auto& p : points)
    if (!cert.add(p)) break;
  return cert.finish();
}

CenterCertificate symmetric_span_certify(std::span<const Vec> points,
                                         std::optional<std::size_t> dim) {
  CenterCertificate cert;
  cert.method = CertMethod::kSymmetricSpan;
  cert.points_used = points.size();
  if (points.empty()) return cert;
  const std::size_t n = check_dims(points);
  cert.dimension = dim.value_or(n);

  const std::unordered_set<Vec, VecHash> set(points.begin(), points.end());
  for (const auto& p : points)
    if (!set.contains(-p)) return cert;

  RowReducer reducer(n);
  for (const auto& p : points) {
    reducer.add(p);
    if (reducer.rank() == cert.dimension) break;
  }
  if (reducer.rank() == cert.dimension) cert.verdict = Verdict::kCertifiedCentered;
  return cert;
}

CenterCertificate midpoint_affine_certify(std::span<const Vec> points,
                                          std::span<const Vec> simple_roots,
                                          std::optional<std::size_t> dim) {
  CenterCertificate cert;
  cert.method = CertMethod::kMidpointAffine;
  cert.points_used = points.size();
  if (simple_roots.empty())
    throw Error(ErrorCode::kInvalidArgument, "midpoint_affine_certify: no roots");
  const std::size_t ambient = simple_roots.front().size();
  cert.dimension = dim.value_or(ambient);
  {
    RowReducer span(ambient);
    for (const auto& v : simple_roots) span.add(v);
    if (span.rank() != cert.dimension)
      throw Error(ErrorCode::kInvalidArgument,
                  "midpoint_affine_certify: roots do not span the space");
  }
  if (points.empty()) return cert;
  if (check_dims(points) != ambient)
    throw Error(ErrorCode::kDimensionMismatch, "points and roots differ in dimension");

  const std::unordered_set<Vec, VecHash> set(points.begin(), points.end());
  bool all_pass = true;
  for (const auto& v : simple_roots) {
    const Scalar coef = Scalar(1) / dot(v, v);
    std::vector<Vec> midpoints;
    std::unordered_set<Vec, VecHash> seen;
    RowReducer diffs(ambient);
    for (const auto& x : points) {
      const Scalar xv = dot(x, v);
      if (xv.is_zero()) continue;
      Vec mid = x;
      axpy(mid, -(coef * xv), v);  // projection onto v^perp = chord midpoint
      Vec partner = mid;
      axpy(partner, -(coef * xv), v);
      if (!set.contains(partner) || !seen.insert(mid).second) continue;
      if (midpoints.empty()) {
        midpoints.push_back(std::move(mid));
      } else {
        diffs.add(mid - midpoints.front());
        midpoints.push_back(std::move(mid));
        if (diffs.rank() + 1 == cert.dimension) break;
      }
    }
    const std::size_t r = midpoints.empty() ? 0 : diffs.rank();
    cert.hyperplane_ranks.push_back(r);
    if (midpoints.empty() || r + 1 != cert.dimension) all_pass = false;
  }
  if (all_pass) cert.verdict = Verdict::kCertifiedCentered;
  return cert;
}

}  // namespace cwlab
