#include "cwlab/strata.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "cwlab/error.hpp"
#include "cwlab/sampling.hpp"

namespace cwlab {

namespace {

std::vector<int> multiplicities(const Vec& entries) {
  std::unordered_map<Scalar, int, ScalarHash> counts;
  for (const auto& e : entries) ++counts[e];
  std::vector<int> parts;
  for (const auto& [value, count] : counts) parts.push_back(count);
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

void partitions(int n, int max_part, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions(n, n, cur, out);
  return out;
}

void check_point(LieType t, const Vec& x) {
  t.validate();
  const std::size_t expected =
      static_cast<std::size_t>(t.rank) + (t.family == Family::kA ? 1 : 0);
  if (x.size() != expected)
    throw Error(ErrorCode::kAmbientConstraint,
                t.name() + " expects " + std::to_string(expected) + " coordinates");
  if (t.family == Family::kA) {
    Scalar sum;
    for (const auto& s : x) sum += s;
    if (!sum.is_zero())
      throw Error(ErrorCode::kAmbientConstraint, "A_n point must sum to zero");
  }
}

std::size_t distinct_count(const Vec& v) {
  std::unordered_set<Scalar, ScalarHash> s(v.begin(), v.end());
  return s.size();
}

}  // namespace

int MultiplicityType::ones() const {
  return static_cast<int>(std::count(parts.begin(), parts.end(), 1));
}

std::string MultiplicityType::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  if (family.family == Family::kD) {
    os << "n0=" << n0;
    first = false;
  }
  for (int p : parts) {
    if (!first) os << ',';
    os << p;
    first = false;
  }
  os << '}';
  return os.str();
}

MultiplicityType multiplicity_type(LieType t, const Vec& x) {
  check_point(t, x);
  MultiplicityType mt{t, 0, {}};
  if (t.family == Family::kD) {
    Vec nonzero_abs;
    for (const auto& a : x) {
      if (a.is_zero()) {
        mt.n0 += 2;
      } else {
        nonzero_abs.push_back(a.abs());
      }
    }
    mt.parts = multiplicities(nonzero_abs);
  } else {
    mt.parts = multiplicities(x);
  }
  return mt;
}

bool is_generic_type(const MultiplicityType& mt) {
  switch (mt.family.family) {
    case Family::kA: return mt.ones() >= 2;
    case Family::kD: return mt.m() >= 2 && mt.ones() >= 1;
    case Family::kE6: break;
  }
  throw Error(ErrorCode::kInvalidLieType, "E6 genericity is decided on the orbit");
}

bool is_generic(const RootSystem& rs, const Vec& x) {
  rs.check_cartan_point(x);
  if (is_zero(x)) throw Error(ErrorCode::kInvalidArgument, "is_generic: zero point");
  if (rs.type().family != Family::kE6)
    return is_generic_type(multiplicity_type(rs.type(), x));
  bool found = false;
  visit_orbit(rs, x, [&](const Vec& p) {
    found = distinct_count(p) >= 3;
    return !found;
  });
  return found;
}

int codim(const MultiplicityType& mt) {
  if (mt.family.family == Family::kE6)
    throw Error(ErrorCode::kE6Unsupported, "no closed codimension formula for E6");
  int sum_sq = 0;
  for (int p : mt.parts) sum_sq += p * p;
  const int base = sum_sq - mt.m();
  if (mt.family.family == Family::kA) return base;
  return mt.n0 * (mt.n0 - 1) / 2 + base;
}

std::vector<StratumReport> enumerate_strata(LieType t) {
  t.validate();
  std::vector<StratumReport> out;
  auto push = [&](MultiplicityType mt) {
    StratumReport r{mt, codim(mt), is_generic_type(mt)};
    out.push_back(std::move(r));
  };
  switch (t.family) {
    case Family::kA:
      for (auto& p : partitions(t.rank + 1)) push({t, 0, std::move(p)});
      break;
    case Family::kD:
      for (int zeros = 0; zeros <= t.rank; ++zeros)
        for (auto& p : partitions(t.rank - zeros)) push({t, 2 * zeros, std::move(p)});
      break;
    case Family::kE6:
      throw Error(ErrorCode::kE6Unsupported, "stratum enumeration needs family A or D");
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.codim < b.codim;
  });
  return out;
}

int min_nongeneric_codim(const std::vector<StratumReport>& strata) {
  int best = -1;
  for (const auto& s : strata)
    if (!s.generic && (best < 0 || s.codim < best)) best = s.codim;
  return best;
}

std::size_t centralizer_dim(const RootSystem& rs, const Vec& x) {
  rs.check_cartan_point(x);
  std::size_t vanishing = 0;
  for (const auto& r : rs.roots())
    if (dot(r, x).is_zero()) ++vanishing;
  return rs.rank() + vanishing;
}

ProbeReport e6_generic_probe(const RootSystem& rs, int trials, std::uint64_t seed) {
  if (rs.type().family != Family::kE6)
    throw Error(ErrorCode::kInvalidArgument, "e6_generic_probe needs the E6 root system");
  if (trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be >= 1");
  ProbeReport report;
  report.seed = seed;
  const std::vector<std::vector<int>> types = {{6}, {5, 1}, {4, 2}, {3, 3}};
  for (std::size_t ti = 0; ti < types.size(); ++ti) {
    ProbeTypeSummary summary{types[ti], 0, 0};
    for (int k = 0; k < trials; ++k) {
      Rng rng(derive_seed(seed, ti * 1000003ULL + static_cast<std::uint64_t>(k)));
      // distinct nonzero block values
      Vec values;
      while (values.size() < types[ti].size()) {
        Scalar v = random_nonzero_rational(rng);
        if (std::find(values.begin(), values.end(), v) == values.end())
          values.push_back(std::move(v));
      }
      Vec x;
      for (std::size_t b = 0; b < types[ti].size(); ++b)
        for (int r = 0; r < types[ti][b]; ++r) x.push_back(values[b]);
      std::shuffle(x.begin(), x.end(), rng);

      ProbeTrial trial{types[ti], x, is_generic(rs, x), std::nullopt};
      ++summary.trials;
      if (!trial.generic) {
        ++summary.failures;
        trial.centralizer_dim = centralizer_dim(rs, x);
      }
      report.trials.push_back(std::move(trial));
    }
    report.summary.push_back(summary);
  }
  return report;
}

}  // namespace cwlab
