#pragma once

// Root systems A_n, D_n, E6 over exact coordinates and Weyl-group orbits.
//
// Coordinates:
//   A_n  : n+1 entries summing to zero (diagonal of su(n+1) divided by i).
//   D_n  : n entries, roots +-e_i +- e_j.
//   E6   : R^6, either the standard frame (D5 roots plus the 32 vectors
//          (+-1/2,...,+-1/2, +-r3/2) with an odd number of plus signs) or the
//          A5xA1 frame in which the A5 roots are the permutations of
//          (1,-1,0,0,0,0) and the A1 root is (1,...,1)/r3.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "cwlab/scalar.hpp"

namespace cwlab {

enum class Family { kA, kD, kE6 };

struct LieType {
  Family family = Family::kA;
  int rank = 1;

  static LieType A(int n) { return {Family::kA, n}; }
  static LieType D(int n) { return {Family::kD, n}; }
  static LieType E6() { return {Family::kE6, 6}; }

  /// Throws kInvalidLieType unless A rank >= 1, D rank >= 3, E6 rank 6.
  void validate() const;
  std::string name() const;

  friend bool operator==(const LieType&, const LieType&) = default;
};

enum class E6Frame { kStandard, kA5A1 };

class RootSystem {
 public:
  RootSystem(LieType type, E6Frame frame, std::size_t ambient_dim,
             std::vector<Vec> roots, std::vector<Vec> simple_roots);

  const LieType& type() const { return type_; }
  E6Frame frame() const { return frame_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  /// Dimension of the Cartan space (the Lie rank).
  std::size_t rank() const { return static_cast<std::size_t>(type_.rank); }
  const std::vector<Vec>& roots() const { return roots_; }
  /// Reflections in these roots generate the Weyl group. For A_n these are
  /// e_0 - e_i (i = 1..n); for D_n e_1 - e_{i+1} (i = 1..n-1) followed by
  /// e_1 + e_2. For E6 a base of the root system (see build_root_system).
  const std::vector<Vec>& simple_roots() const { return simple_roots_; }

  bool is_root(const Vec& v) const;
  /// Throws kAmbientConstraint if x is not in the Cartan space.
  void check_cartan_point(const Vec& x) const;

 private:
  LieType type_;
  E6Frame frame_;
  std::size_t ambient_dim_;
  std::vector<Vec> roots_;
  std::vector<Vec> simple_roots_;
};

RootSystem build_root_system(LieType t, E6Frame frame = E6Frame::kStandard);

/// v - 2 <v,r>/<r,r> r. Throws kZeroRoot for r = 0.
Vec reflect(const Vec& v, const Vec& root);

struct WeylOrbit {
  Vec base_point;
  std::vector<Vec> points;  // BFS order, base point first

  std::size_t size() const { return points.size(); }
  bool contains(const Vec& v) const;

  /// Rebuilds the lookup table; call after editing `points` by hand.
  void reindex();

 private:
  // (hash, index) sorted by hash
  std::vector<std::pair<std::size_t, std::size_t>> lookup_;
};

WeylOrbit weyl_orbit(const RootSystem& rs, const Vec& x);

/// Breadth-first walk over the orbit of x. The visitor returns false to stop.
/// Returns true iff the whole orbit was visited.
bool visit_orbit(const RootSystem& rs, const Vec& x,
                 const std::function<bool(const Vec&)>& visit);

/// Whether -Id lies in the Weyl group (A_1, D_even).
bool contains_minus_id(LieType t);

/// Set equality of finite point sets.
bool same_point_set(const std::vector<Vec>& a, const std::vector<Vec>& b);

}  // namespace cwlab
