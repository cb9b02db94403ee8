#include "cwlab/root_system.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>
#include <utility>

#include "cwlab/error.hpp"

namespace cwlab {

namespace {

Vec unit(std::size_t n, std::size_t i, const Scalar& s = 1) {
  Vec v(n);
  v[i] = s;
  return v;
}

// Hash set of indices into an external point store; lets BFS keep a single
// copy of each orbit point.
class PointIndex {
 public:
  explicit PointIndex(std::vector<Vec>& store)
      : store_(store), set_(64, Hash{&store_}, Eq{&store_}) {}

  /// Appends p to the store unless already present. Returns true if new.
  bool insert(Vec p) {
    store_.push_back(std::move(p));
    if (set_.insert(store_.size() - 1).second) return true;
    store_.pop_back();
    return false;
  }

 private:
  struct Hash {
    const std::vector<Vec>* store;
    std::size_t operator()(std::size_t i) const { return VecHash{}((*store)[i]); }
  };
  struct Eq {
    const std::vector<Vec>* store;
    bool operator()(std::size_t i, std::size_t j) const {
      return (*store)[i] == (*store)[j];
    }
  };
  std::vector<Vec>& store_;
  std::unordered_set<std::size_t, Hash, Eq> set_;
};

std::vector<Vec> a_roots(int n) {
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  std::vector<Vec> roots;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      if (i == j) continue;
      Vec v(dim);
      v[i] = 1;
      v[j] = -1;
      roots.push_back(std::move(v));
    }
  return roots;
}

std::vector<Vec> d_roots(std::size_t dim, std::size_t active) {
  std::vector<Vec> roots;
  for (std::size_t i = 0; i < active; ++i)
    for (std::size_t j = i + 1; j < active; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          Vec v(dim);
          v[i] = si;
          v[j] = sj;
          roots.push_back(std::move(v));
        }
  return roots;
}

RootSystem build_e6_standard() {
  std::vector<Vec> roots = d_roots(6, 5);
  const Scalar half = Scalar::rational(1, 2);
  const Scalar half_r3 = Scalar(mpq_class(0), mpq_class(1, 2));
  for (unsigned mask = 0; mask < 64; ++mask) {
    if (__builtin_popcount(mask) % 2 == 0) continue;  // odd number of + signs
    Vec v(6);
    for (std::size_t k = 0; k < 5; ++k) v[k] = (mask >> k) & 1u ? half : -half;
    v[5] = (mask >> 5) & 1u ? half_r3 : -half_r3;
    roots.push_back(std::move(v));
  }
  std::vector<Vec> simple;
  simple.push_back(unit(6, 0) + unit(6, 1));
  for (std::size_t k = 0; k < 4; ++k) simple.push_back(unit(6, k + 1) - unit(6, k));
  Vec last(6, -half);
  last[5] = half_r3;
  simple.push_back(std::move(last));
  return RootSystem(LieType::E6(), E6Frame::kStandard, 6, std::move(roots),
                    std::move(simple));
}

RootSystem build_e6_a5a1() {
  std::vector<Vec> roots = a_roots(5);
  const Scalar inv_r3 = Scalar(mpq_class(0), mpq_class(1, 3));  // 1/r3
  roots.push_back(Vec(6, inv_r3));
  roots.push_back(Vec(6, -inv_r3));
  const Scalar up = Scalar(mpq_class(1, 2), mpq_class(1, 6));     // (1/r3 + 1)/2
  const Scalar down = Scalar(mpq_class(-1, 2), mpq_class(1, 6));  // (1/r3 - 1)/2
  for (unsigned mask = 0; mask < 64; ++mask) {
    if (__builtin_popcount(mask) != 3) continue;
    Vec v(6);
    for (std::size_t k = 0; k < 6; ++k) v[k] = (mask >> k) & 1u ? up : down;
    roots.push_back(-v);
    roots.push_back(std::move(v));
  }
  std::vector<Vec> simple;
  for (std::size_t k = 0; k < 4; ++k) simple.push_back(unit(6, k + 1) - unit(6, k));
  simple.push_back(Vec(6, inv_r3));
  Vec last(6, -down);
  last[2] = last[3] = last[4] = -up;
  simple.push_back(std::move(last));
  return RootSystem(LieType::E6(), E6Frame::kA5A1, 6, std::move(roots),
                    std::move(simple));
}

}  // namespace

void LieType::validate() const {
  const bool ok = (family == Family::kA && rank >= 1) ||
                  (family == Family::kD && rank >= 3) ||
                  (family == Family::kE6 && rank == 6);
  if (!ok) throw Error(ErrorCode::kInvalidLieType, "invalid Lie type " + name());
}

std::string LieType::name() const {
  switch (family) {
    case Family::kA: return "A" + std::to_string(rank);
    case Family::kD: return "D" + std::to_string(rank);
    case Family::kE6: return rank == 6 ? "E6" : "E6(rank " + std::to_string(rank) + ")";
  }
  return "?";
}

RootSystem::RootSystem(LieType type, E6Frame frame, std::size_t ambient_dim,
                       std::vector<Vec> roots, std::vector<Vec> simple_roots)
    : type_(type),
      frame_(frame),
      ambient_dim_(ambient_dim),
      roots_(std::move(roots)),
      simple_roots_(std::move(simple_roots)) {}

bool RootSystem::is_root(const Vec& v) const {
  for (const auto& r : roots_)
    if (r == v) return true;
  return false;
}

void RootSystem::check_cartan_point(const Vec& x) const {
  if (x.size() != ambient_dim_)
    throw Error(ErrorCode::kAmbientConstraint,
                type_.name() + " expects " + std::to_string(ambient_dim_) +
                    " coordinates, got " + std::to_string(x.size()));
  if (type_.family == Family::kA) {
    Scalar sum;
    for (const auto& s : x) sum += s;
    if (!sum.is_zero())
      throw Error(ErrorCode::kAmbientConstraint,
                  type_.name() + " point must have entries summing to zero");
  }
}

RootSystem build_root_system(LieType t, E6Frame frame) {
  t.validate();
  switch (t.family) {
    case Family::kA: {
      const std::size_t dim = static_cast<std::size_t>(t.rank) + 1;
      std::vector<Vec> simple;
      for (std::size_t i = 1; i < dim; ++i) simple.push_back(unit(dim, 0) - unit(dim, i));
      return RootSystem(t, E6Frame::kStandard, dim, a_roots(t.rank), std::move(simple));
    }
    case Family::kD: {
      const std::size_t dim = static_cast<std::size_t>(t.rank);
      std::vector<Vec> simple;
      for (std::size_t i = 1; i < dim; ++i) simple.push_back(unit(dim, 0) - unit(dim, i));
      simple.push_back(unit(dim, 0) + unit(dim, 1));
      return RootSystem(t, E6Frame::kStandard, dim, d_roots(dim, dim), std::move(simple));
    }
    case Family::kE6:
      return frame == E6Frame::kA5A1 ? build_e6_a5a1() : build_e6_standard();
  }
  throw Error(ErrorCode::kInvalidLieType, "unknown family");
}

Vec reflect(const Vec& v, const Vec& root) {
  const Scalar rr = dot(root, root);
  if (rr.is_zero()) throw Error(ErrorCode::kZeroRoot, "reflection in the zero vector");
  const Scalar vr = dot(v, root);
  if (vr.is_zero()) return v;
  Vec out(v);
  axpy(out, -(Scalar(2) * vr / rr), root);
  return out;
}

namespace {

bool orbit_bfs(const RootSystem& rs, const Vec& x,
               const std::function<bool(const Vec&)>& visit,
               std::vector<Vec>& store) {
  rs.check_cartan_point(x);
  const auto& gens = rs.simple_roots();
  std::vector<Scalar> coef;  // 2/<r,r>
  for (const auto& r : gens) coef.push_back(Scalar(2) / dot(r, r));

  PointIndex index(store);
  index.insert(x);
  if (!visit(x)) return false;
  for (std::size_t head = 0; head < store.size(); ++head) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const Scalar vr = dot(store[head], gens[g]);
      if (vr.is_zero()) continue;
      Vec y = store[head];
      axpy(y, -(coef[g] * vr), gens[g]);
      if (index.insert(std::move(y)) && !visit(store.back())) return false;
    }
  }
  return true;
}

}  // namespace

bool visit_orbit(const RootSystem& rs, const Vec& x,
                 const std::function<bool(const Vec&)>& visit) {
  std::vector<Vec> store;
  return orbit_bfs(rs, x, visit, store);
}

WeylOrbit weyl_orbit(const RootSystem& rs, const Vec& x) {
  WeylOrbit orbit;
  orbit.base_point = x;
  orbit_bfs(rs, x, [](const Vec&) { return true; }, orbit.points);
  orbit.reindex();
  return orbit;
}

void WeylOrbit::reindex() {
  const VecHash h;
  lookup_.clear();
  lookup_.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) lookup_.emplace_back(h(points[i]), i);
  std::sort(lookup_.begin(), lookup_.end());
}

bool WeylOrbit::contains(const Vec& v) const {
  if (lookup_.size() != points.size()) {
    for (const auto& p : points)
      if (p == v) return true;
    return false;
  }
  const std::size_t key = VecHash{}(v);
  auto it = std::lower_bound(lookup_.begin(), lookup_.end(), std::pair{key, std::size_t{0}});
  for (; it != lookup_.end() && it->first == key; ++it)
    if (points[it->second] == v) return true;
  return false;
}

bool contains_minus_id(LieType t) {
  t.validate();
  switch (t.family) {
    case Family::kA: return t.rank == 1;
    case Family::kD: return t.rank % 2 == 0;
    case Family::kE6: return false;
  }
  return false;
}

bool same_point_set(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  const std::unordered_set<Vec, VecHash> sa(a.begin(), a.end());
  const std::unordered_set<Vec, VecHash> sb(b.begin(), b.end());
  return sa == sb;
}

}  // namespace cwlab
