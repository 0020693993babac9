#pragma once

#include <cstdint>
#include <random>

#include "farch/sequence.hpp"

namespace farch {

/// Uniformly random permutation of {0, ..., n-1} via Fisher-Yates with
/// unbiased draws. Identical (n, seed) always yields the same permutation.
/// Throws InvalidParameter when n < 2.
Permutation random_permutation(std::size_t n, std::uint64_t seed);
Permutation random_permutation(std::size_t n, std::mt19937_64& rng);

/// Builds the FARCH sender/receiver pair of period N^2 for permutation w.
/// The sender repeats w N times. The receiver rearranges the symbols of w
/// so that under every relative clock shift the pair meets each channel
/// exactly once per period; its layout depends on the parity of N:
///   even N: slot i*N+j holds w_i, i.e. each symbol repeated N times;
///   odd N:  [w_0, w_{N-1}], then N blocks of [w_{N-2}, ..., w_1], then
///           N-1 blocks of [w_0, w_{N-1}].
/// N = 2 uses the even layout.
SequencePair farch_pair(const Permutation& w);

enum class BaselineKind {
    RoundRobin,     ///< sender == receiver == [0..N-1] repeated N times
    UniformRandom,  ///< two independent i.i.d. uniform words of length N^2
};

/// Negative-control pairs for the metrics engine and the simulator.
/// Deterministic per (kind, n, seed). Throws InvalidParameter when n < 2.
SequencePair baseline_pair(BaselineKind kind, std::size_t n, std::uint64_t seed);

}  // namespace farch
