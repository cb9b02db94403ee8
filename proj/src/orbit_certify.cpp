#include "cwlab/orbit_certify.hpp"

#include "cwlab/error.hpp"

namespace cwlab {

Vec CartanChart::to_chart(const Vec& x) const {
  if (!drop_last) return x;
  return Vec(x.begin(), x.end() - 1);
}

CartanChart cartan_chart(const RootSystem& rs) {
  CartanChart chart;
  if (rs.type().family == Family::kA) {
    const std::size_t n = rs.rank();
    chart.drop_last = true;
    chart.gram = ExactMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) chart.gram(i, j) = i == j ? 2 : 1;
  } else {
    chart.gram = ExactMatrix::identity(rs.ambient_dim());
  }
  return chart;
}

CenterCertificate nullspace_certify_orbit(const RootSystem& rs, const Vec& x) {
  const CartanChart chart = cartan_chart(rs);
  NullspaceCertifier cert(chart.gram);
  visit_orbit(rs, x, [&](const Vec& p) { return cert.add(chart.to_chart(p)); });
  return cert.finish();
}

bool OrbitCertification::concordant() const {
  const bool shortcut_certified =
      symmetric_span.verdict == Verdict::kCertifiedCentered ||
      midpoint_affine.verdict == Verdict::kCertifiedCentered;
  return !shortcut_certified || nullspace.verdict == Verdict::kCertifiedCentered;
}

OrbitCertification certify_orbit(const RootSystem& rs, const Vec& x) {
  rs.check_cartan_point(x);
  if (is_zero(x)) throw Error(ErrorCode::kInvalidArgument, "certify_orbit: zero point");
  OrbitCertification out;
  const WeylOrbit orbit = weyl_orbit(rs, x);
  out.orbit_size = orbit.size();
  out.symmetric_span = symmetric_span_certify(orbit.points, rs.rank());
  out.midpoint_affine = midpoint_affine_certify(orbit.points, rs.simple_roots(), rs.rank());

  const CartanChart chart = cartan_chart(rs);
  NullspaceCertifier cert(chart.gram);
  for (const auto& p : orbit.points)
    if (!cert.add(chart.to_chart(p))) break;
  out.nullspace = cert.finish();
  return out;
}

}  // namespace cwlab
