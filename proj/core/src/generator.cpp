#include "farch/generator.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "farch/errors.hpp"
#include "farch/rng.hpp"

namespace farch {

Permutation random_permutation(std::size_t n, std::uint64_t seed) {
    auto rng = make_rng(seed);
    return random_permutation(n, rng);
}

Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
    if (n < 2) {
        throw InvalidParameter("random_permutation: need n >= 2, got " +
                               std::to_string(n));
    }
    std::vector<ChannelId> image(n);
    std::iota(image.begin(), image.end(), ChannelId{0});
    // Fisher-Yates with unbiased draws; std::shuffle is not pinned down by
    // the standard, this is.
    for (std::size_t i = n - 1; i > 0; --i) {
        const std::size_t j = uniform_below(rng, i + 1);
        std::swap(image[i], image[j]);
    }
    return Permutation(std::move(image));
}

SequencePair farch_pair(const Permutation& w) {
    const std::size_t n = w.size();
    const std::size_t t = n * n;

    std::vector<ChannelId> sender(t);
    for (std::size_t i = 0; i < t; ++i) {
        sender[i] = w[i % n];
    }

    std::vector<ChannelId> receiver;
    receiver.reserve(t);
    if (n % 2 == 0) {
        // Each symbol held for N consecutive slots.
        for (std::size_t i = 0; i < n; ++i) {
            receiver.insert(receiver.end(), n, w[i]);
        }
    } else {
        // [w_0, w_{N-1}], N blocks of [w_{N-2}, ..., w_1], N-1 blocks of
        // [w_0, w_{N-1}].
        receiver.push_back(w[0]);
        receiver.push_back(w[n - 1]);
        for (std::size_t rep = 0; rep < n; ++rep) {
            for (std::size_t i = n - 2; i >= 1; --i) {
                receiver.push_back(w[i]);
            }
        }
        for (std::size_t rep = 0; rep + 1 < n; ++rep) {
            receiver.push_back(w[0]);
            receiver.push_back(w[n - 1]);
        }
    }

    return SequencePair(ChannelSequence(n, std::move(sender)),
                        ChannelSequence(n, std::move(receiver)), w);
}

SequencePair baseline_pair(BaselineKind kind, std::size_t n, std::uint64_t seed) {
    if (n < 2) {
        throw InvalidParameter("baseline_pair: need n >= 2, got " + std::to_string(n));
    }
    const std::size_t t = n * n;
    switch (kind) {
        case BaselineKind::RoundRobin: {
            std::vector<ChannelId> word(t);
            for (std::size_t i = 0; i < t; ++i) {
                word[i] = static_cast<ChannelId>(i % n);
            }
            ChannelSequence seq(n, word);
            return SequencePair(seq, seq);
        }
        case BaselineKind::UniformRandom: {
            auto rng = make_rng(seed);
            auto draw = [&] {
                std::vector<ChannelId> word(t);
                for (auto& c : word) {
                    c = static_cast<ChannelId>(uniform_below(rng, n));
                }
                return ChannelSequence(n, std::move(word));
            };
            ChannelSequence sender = draw();
            ChannelSequence receiver = draw();
            return SequencePair(std::move(sender), std::move(receiver));
        }
    }
    throw InvalidParameter("baseline_pair: unknown kind");
}

}  // namespace farch
