#include "cwlab/sampling.hpp"

namespace cwlab {

Scalar random_rational(Rng& rng, int height) {
  std::uniform_int_distribution<long> num(-height, height);
  std::uniform_int_distribution<long> den(1, height);
  return Scalar::rational(num(rng), den(rng));
}

Scalar random_nonzero_rational(Rng& rng, int height) {
  for (;;) {
    Scalar s = random_rational(rng, height);
    if (!s.is_zero()) return s;
  }
}

Vec random_rational_vec(Rng& rng, std::size_t n, int height) {
  Vec v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_rational(rng, height));
  return v;
}

Vec random_sum_zero_vec(Rng& rng, std::size_t coords, int height) {
  Vec v = random_rational_vec(rng, coords, height);
  Scalar sum;
  for (std::size_t i = 0; i + 1 < coords; ++i) sum += v[i];
  v.back() = -sum;
  return v;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 step
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace cwlab
