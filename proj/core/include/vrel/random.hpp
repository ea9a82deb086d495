#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace vrel {

// mt19937_64 output is fixed by the standard; the helpers below avoid the
// implementation-defined std distributions so draws are portable.
using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

// Order-sensitive mix of the given words into one seed.
std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts);

// Uniform in [0, bound), bound > 0.
std::uint64_t uniform_index(Rng& rng, std::uint64_t bound);

// Uniform in [0, 1) with 53 random bits.
double uniform_unit(Rng& rng);

}  // namespace vrel
