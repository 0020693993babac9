#include "farch/rng.hpp"

#include "farch/errors.hpp"

namespace farch {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::mt19937_64 make_rng(std::uint64_t seed) {
    return std::mt19937_64{seed};
}

std::mt19937_64 derive_stream(std::initializer_list<std::uint64_t> words) {
    std::uint64_t h = 0x243f6a8885a308d3ULL;
    for (std::uint64_t w : words) {
        h = splitmix64(h ^ w);
    }
    return std::mt19937_64{h};
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) {
        throw InvalidParameter("uniform_below: bound must be positive");
    }
    // Reject the low tail so every residue class is equally likely.
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    std::uint64_t x = rng();
    while (x < threshold) {
        x = rng();
    }
    return x % bound;
}

double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace farch
