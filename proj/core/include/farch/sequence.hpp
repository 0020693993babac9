#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace farch {

/// Channel index in {0, ..., N-1}.
using ChannelId = std::uint32_t;

/// A periodic channel-hopping word over an alphabet of N channels. Entry i
/// is the channel visited in the (i+1)-th slot of a period. Slots are
/// 0-based internally; reported rendezvous times are 1-based. Immutable
/// after construction.
class ChannelSequence {
public:
    /// Requires n_channels >= 2, at least one entry, and every entry in
    /// [0, n_channels). Throws InvalidParameter otherwise.
    ChannelSequence(std::size_t n_channels, std::vector<ChannelId> entries);

    std::size_t n_channels() const noexcept { return n_channels_; }
    std::size_t period() const noexcept { return entries_.size(); }

    /// Entry at slot (no wrap); slot must be < period().
    ChannelId at(std::size_t slot) const { return entries_[slot]; }
    /// Entry at slot i mod period, for walking beyond one period.
    ChannelId at_wrapped(std::size_t i) const { return entries_[i % entries_.size()]; }

    const std::vector<ChannelId>& entries() const noexcept { return entries_; }

    /// Number of occurrences of each channel in one period.
    std::vector<std::size_t> visit_counts() const;

    /// True when every channel appears exactly period/N times.
    bool uniform_frequency() const;

    friend bool operator==(const ChannelSequence&, const ChannelSequence&) = default;

private:
    std::size_t n_channels_;
    std::vector<ChannelId> entries_;
};

/// Rotation by tau slots: entry i of the result is entry (i + tau) mod T of
/// the input. Shifting by any multiple of T is the identity.
ChannelSequence cyclic_shift(const ChannelSequence& seq, std::size_t tau);

/// True when neither sequence is a cyclic shift of the other.
bool is_distinct_pair(const ChannelSequence& u, const ChannelSequence& v);

/// A bijection on {0, ..., N-1}, stored in one-line notation.
class Permutation {
public:
    /// Throws InvalidParameter unless the image is a permutation of
    /// {0, ..., image.size()-1} with size >= 2.
    explicit Permutation(std::vector<ChannelId> image);

    std::size_t size() const noexcept { return image_.size(); }
    ChannelId operator[](std::size_t i) const { return image_[i]; }
    const std::vector<ChannelId>& image() const noexcept { return image_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<ChannelId> image_;
};

/// A (sender, receiver) hopping pair over one alphabet and period. Pairs
/// produced by farch_pair() carry their generating permutation; externally
/// supplied pairs (any common period >= 1) carry none.
class SequencePair {
public:
    /// External pair. Throws IncompatiblePair unless both sequences share
    /// n_channels and period.
    SequencePair(ChannelSequence sender, ChannelSequence receiver);
    SequencePair(ChannelSequence sender, ChannelSequence receiver, Permutation origin);

    const ChannelSequence& sender() const noexcept { return sender_; }
    const ChannelSequence& receiver() const noexcept { return receiver_; }
    std::size_t n_channels() const noexcept { return sender_.n_channels(); }
    std::size_t period() const noexcept { return sender_.period(); }

    bool is_farch() const noexcept { return origin_.has_value(); }
    /// Generating permutation; empty for external pairs.
    const std::optional<Permutation>& origin() const noexcept { return origin_; }

private:
    ChannelSequence sender_;
    ChannelSequence receiver_;
    std::optional<Permutation> origin_;
};

}  // namespace farch
