#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace farch {

// All randomness flows through mt19937_64, whose output is fixed by the
// standard, so a seed reproduces bit-identical results on any platform.

std::mt19937_64 make_rng(std::uint64_t seed);

/// Derives an engine from a list of words (seed, run index, pair index, ...)
/// so that independent consumers get independent, reproducible streams.
std::mt19937_64 derive_stream(std::initializer_list<std::uint64_t> words);

/// Unbiased draw from {0, ..., bound-1} by rejection. bound must be > 0.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Uniform double in [0, 1) with 53 random bits.
double uniform_unit(std::mt19937_64& rng);

}  // namespace farch
