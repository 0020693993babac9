#include "farch/sequence.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "farch/errors.hpp"

namespace farch {

ChannelSequence::ChannelSequence(std::size_t n_channels, std::vector<ChannelId> entries)
    : n_channels_(n_channels), entries_(std::move(entries)) {
    if (n_channels_ < 2) {
        throw InvalidParameter("ChannelSequence: need at least 2 channels, got " +
                               std::to_string(n_channels_));
    }
    if (entries_.empty()) {
        throw InvalidParameter("ChannelSequence: period must be at least 1");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] >= n_channels_) {
            throw InvalidParameter("ChannelSequence: entry " + std::to_string(i) +
                                   " = " + std::to_string(entries_[i]) +
                                   " out of range for N = " + std::to_string(n_channels_));
        }
    }
}

std::vector<std::size_t> ChannelSequence::visit_counts() const {
    std::vector<std::size_t> counts(n_channels_, 0);
    for (ChannelId c : entries_) {
        ++counts[c];
    }
    return counts;
}

bool ChannelSequence::uniform_frequency() const {
    if (period() % n_channels_ != 0) {
        return false;
    }
    const std::size_t expected = period() / n_channels_;
    const auto counts = visit_counts();
    return std::all_of(counts.begin(), counts.end(),
                       [expected](std::size_t c) { return c == expected; });
}

ChannelSequence cyclic_shift(const ChannelSequence& seq, std::size_t tau) {
    const std::size_t t = seq.period();
    std::vector<ChannelId> shifted(t);
    for (std::size_t i = 0; i < t; ++i) {
        shifted[i] = seq.at((i + tau) % t);
    }
    return ChannelSequence(seq.n_channels(), std::move(shifted));
}

bool is_distinct_pair(const ChannelSequence& u, const ChannelSequence& v) {
    if (u.period() != v.period()) {
        return true;  // different lengths can never be shifts of each other
    }
    const std::size_t t = u.period();
    // u^tau == v for some tau iff v^tau' == u for some tau', so one scan
    // settles both directions.
    for (std::size_t tau = 0; tau < t; ++tau) {
        bool equal = true;
        for (std::size_t i = 0; i < t && equal; ++i) {
            equal = u.at((i + tau) % t) == v.at(i);
        }
        if (equal) {
            return false;
        }
    }
    return true;
}

Permutation::Permutation(std::vector<ChannelId> image) : image_(std::move(image)) {
    if (image_.size() < 2) {
        throw InvalidParameter("Permutation: need size >= 2, got " +
                               std::to_string(image_.size()));
    }
    std::vector<bool> seen(image_.size(), false);
    for (ChannelId v : image_) {
        if (v >= image_.size() || seen[v]) {
            throw InvalidParameter("Permutation: image is not a bijection on Z_" +
                                   std::to_string(image_.size()));
        }
        seen[v] = true;
    }
}

namespace {

void check_compatible(const ChannelSequence& sender, const ChannelSequence& receiver) {
    if (sender.n_channels() != receiver.n_channels()) {
        throw IncompatiblePair("SequencePair: alphabet mismatch (N = " +
                               std::to_string(sender.n_channels()) + " vs " +
                               std::to_string(receiver.n_channels()) + ")");
    }
    if (sender.period() != receiver.period()) {
        throw IncompatiblePair("SequencePair: period mismatch (T = " +
                               std::to_string(sender.period()) + " vs " +
                               std::to_string(receiver.period()) + ")");
    }
}

}  // namespace

SequencePair::SequencePair(ChannelSequence sender, ChannelSequence receiver)
    : sender_(std::move(sender)), receiver_(std::move(receiver)) {
    check_compatible(sender_, receiver_);
}

SequencePair::SequencePair(ChannelSequence sender, ChannelSequence receiver,
                           Permutation origin)
    : sender_(std::move(sender)),
      receiver_(std::move(receiver)),
      origin_(std::move(origin)) {
    check_compatible(sender_, receiver_);
}

}  // namespace farch
