#pragma once

// Seeded bounded-height rational sampling.

#include <cstdint>
#include <random>

#include "cwlab/scalar.hpp"

namespace cwlab {

using Rng = std::mt19937_64;

/// p/q with |p| <= height, 1 <= q <= height.
Scalar random_rational(Rng& rng, int height = 12);
Scalar random_nonzero_rational(Rng& rng, int height = 12);
Vec random_rational_vec(Rng& rng, std::size_t n, int height = 12);

/// Random point with entry sum zero in R^{n+1} (an A_n Cartan point).
Vec random_sum_zero_vec(Rng& rng, std::size_t coords, int height = 12);

/// Derives a per-trial seed so trials stay reproducible independently.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace cwlab
