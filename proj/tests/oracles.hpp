#pragma once

// Independent reference implementations the tests pin expected values
// against. Everything here is deliberately naive (materialized rotations,
// literal definition scans) and shares no code with the library's metric
// paths.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "farch/generator.hpp"
#include "farch/rng.hpp"
#include "farch/sequence.hpp"

namespace farch::testing {

// Hit count by materializing the rotated ahead sequence with std::rotate
// and comparing slot by slot.
inline std::size_t naive_hit_count(const ChannelSequence& ahead,
                                   const ChannelSequence& behind, std::size_t tau,
                                   std::size_t prefix_len, ChannelId k) {
    std::vector<ChannelId> rotated = ahead.entries();
    const auto offset = static_cast<std::ptrdiff_t>(tau % ahead.period());
    std::rotate(rotated.begin(), rotated.begin() + offset, rotated.end());
    std::size_t hits = 0;
    for (std::size_t i = 0; i < prefix_len; ++i) {
        hits += rotated[i] == k && behind.at(i) == k;
    }
    return hits;
}

inline std::optional<std::uint32_t> naive_first_slot(const ChannelSequence& ahead,
                                                     const ChannelSequence& behind,
                                                     std::size_t tau, ChannelId k) {
    std::vector<ChannelId> rotated = ahead.entries();
    const auto offset = static_cast<std::ptrdiff_t>(tau % ahead.period());
    std::rotate(rotated.begin(), rotated.begin() + offset, rotated.end());
    for (std::size_t i = 0; i < behind.period(); ++i) {
        if (rotated[i] == k && behind.at(i) == k) {
            return static_cast<std::uint32_t>(i + 1);
        }
    }
    return std::nullopt;
}

inline bool naive_max_diversity(const SequencePair& pair) {
    const std::size_t t = pair.period();
    const std::size_t n = pair.n_channels();
    for (int dir = 0; dir < 2; ++dir) {
        const ChannelSequence& ahead = dir == 0 ? pair.sender() : pair.receiver();
        const ChannelSequence& behind = dir == 0 ? pair.receiver() : pair.sender();
        for (std::size_t tau = 0; tau < t; ++tau) {
            for (std::size_t k = 0; k < n; ++k) {
                if (!naive_first_slot(ahead, behind, tau, static_cast<ChannelId>(k))) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Worst first meeting on any channel, over both directions and all shifts;
// nullopt when some shift never meets at all.
inline std::optional<std::uint32_t> naive_mttr(const SequencePair& pair) {
    const std::size_t t = pair.period();
    const std::size_t n = pair.n_channels();
    std::uint32_t worst = 0;
    for (int dir = 0; dir < 2; ++dir) {
        const ChannelSequence& ahead = dir == 0 ? pair.sender() : pair.receiver();
        const ChannelSequence& behind = dir == 0 ? pair.receiver() : pair.sender();
        for (std::size_t tau = 0; tau < t; ++tau) {
            std::uint32_t best = 0;
            for (std::size_t k = 0; k < n; ++k) {
                const auto slot =
                    naive_first_slot(ahead, behind, tau, static_cast<ChannelId>(k));
                if (slot && (best == 0 || *slot < best)) {
                    best = *slot;
                }
            }
            if (best == 0) {
                return std::nullopt;
            }
            worst = std::max(worst, best);
        }
    }
    return worst;
}

inline std::optional<std::uint32_t> naive_mcttr(const SequencePair& pair) {
    const std::size_t t = pair.period();
    const std::size_t n = pair.n_channels();
    std::uint32_t worst = 0;
    for (int dir = 0; dir < 2; ++dir) {
        const ChannelSequence& ahead = dir == 0 ? pair.sender() : pair.receiver();
        const ChannelSequence& behind = dir == 0 ? pair.receiver() : pair.sender();
        for (std::size_t tau = 0; tau < t; ++tau) {
            for (std::size_t k = 0; k < n; ++k) {
                const auto slot =
                    naive_first_slot(ahead, behind, tau, static_cast<ChannelId>(k));
                if (!slot) {
                    return std::nullopt;
                }
                worst = std::max(worst, *slot);
            }
        }
    }
    return worst;
}

inline ChannelSequence random_sequence(std::size_t n, std::size_t period,
                                       std::mt19937_64& rng) {
    std::vector<ChannelId> entries(period);
    for (auto& c : entries) {
        c = static_cast<ChannelId>(uniform_below(rng, n));
    }
    return {n, std::move(entries)};
}

// Skewed toward low channel indices, so visit counts are non-uniform.
inline ChannelSequence skewed_sequence(std::size_t n, std::size_t period,
                                       std::mt19937_64& rng) {
    std::vector<ChannelId> entries(period);
    for (auto& c : entries) {
        const auto a = uniform_below(rng, n);
        const auto b = uniform_below(rng, n);
        c = static_cast<ChannelId>(std::min(a, b));
    }
    return {n, std::move(entries)};
}

// ---- diversity-preserving transforms ---------------------------------------
// Shifting either sequence, relabeling channels, or doubling the period all
// keep maximal rendezvous diversity but change the sequences (and, for
// shifts, the metric values), so they turn FARCH pairs into "random
// max-diversity pairs" that exercise the metric paths beyond FARCH
// structure.

inline SequencePair shifted_pair(const SequencePair& pair, std::size_t a, std::size_t b) {
    return {cyclic_shift(pair.sender(), a), cyclic_shift(pair.receiver(), b)};
}

inline SequencePair relabeled_pair(const SequencePair& pair, const Permutation& sigma) {
    auto relabel = [&](const ChannelSequence& seq) {
        std::vector<ChannelId> entries(seq.period());
        for (std::size_t i = 0; i < seq.period(); ++i) {
            entries[i] = sigma[seq.at(i)];
        }
        return ChannelSequence(seq.n_channels(), std::move(entries));
    };
    return {relabel(pair.sender()), relabel(pair.receiver())};
}

inline SequencePair doubled_pair(const SequencePair& pair) {
    auto twice = [](const ChannelSequence& seq) {
        std::vector<ChannelId> entries;
        entries.reserve(2 * seq.period());
        entries.insert(entries.end(), seq.entries().begin(), seq.entries().end());
        entries.insert(entries.end(), seq.entries().begin(), seq.entries().end());
        return ChannelSequence(seq.n_channels(), std::move(entries));
    };
    return {twice(pair.sender()), twice(pair.receiver())};
}

// Random non-FARCH pair with maximal diversity: a FARCH pair pushed through
// random shifts and a random relabeling. Returned with External origin.
inline SequencePair random_max_diversity_pair(std::size_t n, std::mt19937_64& rng) {
    const auto base = farch_pair(random_permutation(n, rng));
    const std::size_t a = uniform_below(rng, base.period());
    const std::size_t b = uniform_below(rng, base.period());
    const auto sigma = random_permutation(n, rng);
    return relabeled_pair(shifted_pair(base, a, b), sigma);
}

}  // namespace farch::testing
