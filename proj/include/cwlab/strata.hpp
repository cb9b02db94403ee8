#pragma once

// Eigenvalue-multiplicity types of Cartan elements, genericity predicates,
// and codimensions of the corresponding adjoint-orbit strata.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cwlab/root_system.hpp"
#include "cwlab/scalar.hpp"

namespace cwlab {

struct MultiplicityType {
  LieType family;
  /// multiplicity of the eigenvalue 0 (D only, always even)
  int n0 = 0;
  /// sorted in decreasing order
  std::vector<int> parts;

  int m() const { return static_cast<int>(parts.size()); }
  int ones() const;
  std::string to_string() const;

  friend bool operator==(const MultiplicityType&, const MultiplicityType&) = default;
};

struct StratumReport {
  MultiplicityType mtype;
  int codim = 0;
  bool generic = false;
};

/// A: multiplicities of the entries. D: n0 = 2 #{zero entries}, parts are
/// multiplicities of the distinct nonzero |a_i|. E6: multiplicities of the
/// entries in the given coordinates.
MultiplicityType multiplicity_type(LieType t, const Vec& x);

/// Genericity of a type for A (two parts equal to 1) and D (m >= 2 and some
/// part equal to 1). Throws kInvalidLieType for E6.
bool is_generic_type(const MultiplicityType& mt);

/// A/D: is_generic_type of the multiplicity type. E6: the Weyl orbit contains
/// a point with at least three distinct entries (searched lazily).
/// Throws kInvalidArgument for x = 0.
bool is_generic(const RootSystem& rs, const Vec& x);

/// A: sum n_i^2 - m. D: n0(n0-1)/2 + sum n_i^2 - m. Throws kE6Unsupported.
int codim(const MultiplicityType& mt);

/// Every multiplicity type of an A or D Lie type (including x = 0), sorted by
/// codimension. Throws kE6Unsupported for E6.
std::vector<StratumReport> enumerate_strata(LieType t);

/// Smallest codim among non-generic strata.
int min_nongeneric_codim(const std::vector<StratumReport>& strata);

/// rank + #{roots orthogonal to x}
std::size_t centralizer_dim(const RootSystem& rs, const Vec& x);

struct ProbeTrial {
  std::vector<int> parts;
  Vec point;
  bool generic = false;
  std::optional<std::size_t> centralizer_dim;  // set for failures only
};

struct ProbeTypeSummary {
  std::vector<int> parts;
  int trials = 0;
  int failures = 0;
  double failure_fraction() const { return trials ? double(failures) / trials : 0.0; }
};

struct ProbeReport {
  std::uint64_t seed = 0;
  std::vector<ProbeTypeSummary> summary;
  std::vector<ProbeTrial> trials;
};

/// For the multiplicity types {6}, {5,1}, {4,2}, {3,3} draws `trials` random
/// nonzero rational points each and searches their Weyl orbit for a point
/// with three distinct entries. Throws kInvalidArgument if trials < 1 or the
/// root system is not E6.
ProbeReport e6_generic_probe(const RootSystem& rs, int trials, std::uint64_t seed);

}  // namespace cwlab
