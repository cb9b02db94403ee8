#pragma once

// Runs the three center certifiers on Weyl orbits of a root system.

#include <cstddef>

#include "cwlab/quadric.hpp"
#include "cwlab/root_system.hpp"

namespace cwlab {

/// Linear coordinates on the Cartan space. For A_n the last coordinate is
/// dropped (it is minus the sum of the others); otherwise the identity.
/// `gram` is the Euclidean inner product expressed in chart coordinates.
struct CartanChart {
  bool drop_last = false;
  ExactMatrix gram;

  Vec to_chart(const Vec& x) const;
};

CartanChart cartan_chart(const RootSystem& rs);

/// NULLSPACE certificate for the orbit of x, computed in chart coordinates.
/// Walks the orbit lazily and stops as soon as the verdict is settled.
CenterCertificate nullspace_certify_orbit(const RootSystem& rs, const Vec& x);

struct OrbitCertification {
  std::size_t orbit_size = 0;
  CenterCertificate symmetric_span;
  CenterCertificate midpoint_affine;
  CenterCertificate nullspace;

  /// Soundness concordance: a SYMMETRIC_SPAN or MIDPOINT_AFFINE certificate implies NULLSPACE agrees.
  bool concordant() const;
};

/// Enumerates the orbit of x and runs all three methods.
/// Throws kInvalidArgument for x = 0 and kAmbientConstraint off the Cartan space.
OrbitCertification certify_orbit(const RootSystem& rs, const Vec& x);

}  // namespace cwlab
