#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace eqlines {

// The engine's output sequence is fixed by the standard; the helpers below
// avoid std::*_distribution so that seeded results match across toolchains.
using Rng = std::mt19937_64;

// Uniform integer in [0, bound), bound > 0, by rejection.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);
// Uniform integer in [lo, hi].
int uniform_int(Rng& rng, int lo, int hi);
// Uniform double in [0, 1) with 53 random bits.
double uniform_unit(Rng& rng);
bool bernoulli(Rng& rng, double p);

// t distinct elements of {0, ..., n-1}, sorted; partial Fisher-Yates.
std::vector<int> sample_without_replacement(Rng& rng, int n, int t);

}  // namespace eqlines
