#pragma once

// Quadrics through finite point sets and certificates that every ellipsoid
// containing a point set is centered at the origin.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cwlab/exact_matrix.hpp"
#include "cwlab/scalar.hpp"

namespace cwlab {

/// The locus x^T A x + b^T x + c = 0 with A symmetric.
struct Quadric {
  ExactMatrix a;
  Vec b;
  Scalar c;

  std::size_t dim() const { return b.size(); }
  Scalar evaluate(const Vec& x) const;
  /// -A^{-1} b / 2; nullopt if A is singular.
  std::optional<Vec> center() const;

  friend bool operator==(const Quadric&, const Quadric&) = default;
};

enum class Verdict { kCertifiedCentered, kCounterexample, kNotApplicable };
enum class CertMethod { kSymmetricSpan, kMidpointAffine, kNullspace };

std::string_view verdict_name(Verdict v);
std::string_view method_name(CertMethod m);

struct CenterCertificate {
  Verdict verdict = Verdict::kNotApplicable;
  CertMethod method = CertMethod::kNullspace;
  std::size_t dimension = 0;
  /// dim of the space of quadrics through the points (NULLSPACE only)
  std::optional<std::size_t> quadric_space_dim;
  /// present iff verdict == kCounterexample
  std::optional<Quadric> witness;
  /// affine rank of chord midpoints per root (MIDPOINT_AFFINE only)
  std::vector<std::size_t> hyperplane_ranks;
  /// number of points actually used; NULLSPACE may stop early
  std::size_t points_used = 0;
};

/// Number of unknowns (A upper triangle, b, c) for quadrics in dimension n.
std::size_t quadric_unknowns(std::size_t n);

/// Basis of all (A, b, c) vanishing on every point.
/// Throws kDimensionMismatch on ragged input and kInvalidArgument on empty.
std::vector<Quadric> quadric_space(std::span<const Vec> points);

/// Decides whether every quadric through the points has b = 0 by computing
/// the space of quadrics through them. Points are fed one at a time so a
/// long orbit can stop as soon as the answer is settled.
///
/// The points must lie on a common sphere x^T G x = r^2 > 0. Since that
/// sphere is always in the quadric space, rank cols-1 of the evaluation
/// system already forces b = 0, and any quadric in the space with b != 0
/// perturbs the sphere into an off-center ellipsoid through the points.
class NullspaceCertifier {
 public:
  explicit NullspaceCertifier(ExactMatrix gram);

  /// Returns false once the verdict is settled and further points are moot.
  bool add(const Vec& point);
  CenterCertificate finish() const;

 private:
  ExactMatrix gram_;
  std::size_t dim_;
  std::vector<Vec> points_;
  RowReducer reducer_;
  std::optional<Scalar> radius_sq_;
  bool off_sphere_ = false;
};

/// NULLSPACE method with the Euclidean metric.
CenterCertificate center_forced(std::span<const Vec> points);
/// NULLSPACE method where the common-sphere condition uses x^T G x.
CenterCertificate center_forced(std::span<const Vec> points, const ExactMatrix& gram);

/// Certifies when the set is symmetric (S = -S) and spans a space of
/// dimension `dim` (defaults to the coordinate dimension).
CenterCertificate symmetric_span_certify(std::span<const Vec> points,
                                         std::optional<std::size_t> dim = {});

/// For every root v, chords x -> reflect(x, v) with both ends in the set have
/// midpoints on v^perp; certifies if those midpoints affinely span v^perp
/// (inside the span of the roots) for every root. Throws kInvalidArgument if
/// the roots do not span a space of dimension `dim` (defaults to the
/// coordinate dimension).
CenterCertificate midpoint_affine_certify(std::span<const Vec> points,
                                          std::span<const Vec> simple_roots,
                                          std::optional<std::size_t> dim = {});

}  // namespace cwlab
