#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "farch/sequence.hpp"

namespace farch {

/// Which sequence's clock runs ahead of the other's. Both cases must be
/// examined for every metric; time is always counted in slots of the
/// behind sequence, starting at 1.
enum class Direction { SenderAhead, ReceiverAhead };

inline constexpr Direction kDirections[] = {Direction::SenderAhead,
                                            Direction::ReceiverAhead};

const char* to_string(Direction d);

/// Number of slots i in [0, prefix_len) at which the ahead sequence,
/// shifted by tau, and the behind sequence both visit channel k:
/// |{ i : ahead[(tau+i) mod T] == behind[i] == k }|.
/// Throws IncompatiblePair on alphabet/period mismatch and
/// InvalidParameter when prefix_len is outside [1, T] or k is out of range.
std::size_t hit_count(const ChannelSequence& ahead, const ChannelSequence& behind,
                      std::size_t tau, std::size_t prefix_len, ChannelId k);

/// Same, with ahead/behind picked from the pair's roles by direction.
std::size_t hit_count(const SequencePair& pair, Direction direction,
                      std::size_t tau, std::size_t prefix_len, ChannelId k);

/// Per-(direction, shift, channel) table of first-rendezvous slots within
/// one period, 1-based; a cell is empty when the pair never meets on that
/// channel at that shift. Every rendezvous metric reads off this table.
class RendezvousProfile {
public:
    static RendezvousProfile build(const SequencePair& pair);

    std::size_t n_channels() const noexcept { return n_; }
    std::size_t period() const noexcept { return period_; }

    /// First 1-based slot with a channel-k rendezvous, or nullopt.
    std::optional<std::uint32_t> first_slot(Direction d, std::size_t tau,
                                            ChannelId k) const;

    /// The N cells of one (direction, shift); 0 encodes "never".
    std::span<const std::uint32_t> row(Direction d, std::size_t tau) const;

    /// True when every cell is filled, i.e. the pair has maximal
    /// rendezvous diversity.
    bool complete() const noexcept { return complete_; }

private:
    std::size_t n_ = 0;
    std::size_t period_ = 0;
    bool complete_ = false;
    std::vector<std::uint32_t> cells_;  // [(dir*T + tau)*N + k], 0 = never
};

RendezvousProfile build_profile(const SequencePair& pair);

/// True iff the pair meets on every channel under every shift in both
/// directions within one period.
bool is_max_diversity(const SequencePair& pair);

/// Worst-case time to rendezvous when an adversary may disable up to h of
/// the N channels; h = 0 gives the MTTR, h = N-1 the MCTTR. For one
/// direction and shift the adversary's best move is to disable the h
/// channels met earliest, leaving the (h+1)-th smallest first-meeting slot;
/// the metric is the maximum of that over all directions and shifts.
/// Throws MetricUndefined unless the pair has maximal diversity.
std::uint32_t mttr_h(const RendezvousProfile& profile, std::size_t h);
std::uint32_t mttr_h(const SequencePair& pair, std::size_t h);

/// All of MTTR_0 .. MTTR_{N-1} in one pass. Nondecreasing in h.
std::vector<std::uint32_t> mttr_h_vector(const RendezvousProfile& profile);

/// Literal form of mttr_h: enumerates every channel subset of size N-h
/// that could remain available and scans slots for the first rendezvous
/// inside it. Exponential in min(h, N-h); the cross-check for mttr_h's
/// order-statistic shortcut. Shares no code with RendezvousProfile.
std::uint32_t mttr_h_exhaustive(const SequencePair& pair, std::size_t h);

struct CorrelationCheck {
    std::uint64_t lhs = 0;  ///< sum over all T shifts of prefix hit counts
    std::uint64_t rhs = 0;  ///< (#k in the m-prefix of u) * (#k in v)
    bool holds() const noexcept { return lhs == rhs; }
};

/// Exact correlation identity: summing H over all shifts of v against the
/// m-prefix of u factorizes into the two occurrence counts. Holds for
/// arbitrary sequences, prefixes and channels.
CorrelationCheck correlation_sum_check(const ChannelSequence& u, std::size_t m,
                                       const ChannelSequence& v, ChannelId k);

struct MetricsReport {
    std::size_t n = 0;
    std::size_t period = 0;
    bool max_diversity = false;
    /// Worst-case TTR with all channels available. Defined as long as every
    /// (direction, shift) meets on at least one channel, which is weaker
    /// than maximal diversity.
    std::optional<std::uint32_t> mttr;
    /// Worst-case TTR with at least one channel available; exists only for
    /// maximal-diversity pairs.
    std::optional<std::uint32_t> mcttr;
    /// MTTR_h for h = 0..N-1; all present iff max_diversity.
    std::vector<std::optional<std::uint32_t>> mttr_h;
    std::vector<std::size_t> sender_visits;    ///< per-channel counts, one period
    std::vector<std::size_t> receiver_visits;
};

MetricsReport compute_metrics(const SequencePair& pair);

struct BoundCheck {
    std::uint64_t value = 0;
    std::uint64_t bound = 0;
    bool pass = false;       ///< value >= bound
    bool applicable = true;  ///< precondition of the bound satisfied
};

/// Lower-bound conformance for a maximal-diversity pair: MCTTR >= N^2
/// always; MTTR >= N and MTTR_h >= (h+1)N (h <= N-2) under the minimum-
/// MCTTR precondition. Also reports the two structural properties that are
/// necessary for MCTTR = N^2: uniform channel frequency in both sequences
/// and distinctness of the pair.
struct BoundReport {
    BoundCheck mcttr;
    BoundCheck mttr;
    std::vector<BoundCheck> mttr_h;  ///< index h, for h = 0..N-2
    bool uniform_frequency = false;
    bool distinct = false;
    bool all_pass() const;
};

/// Throws MetricUndefined unless the pair has maximal diversity.
BoundReport bound_report(const SequencePair& pair);

/// Full analysis of one pair: metrics always, bounds when they exist.
struct AnalysisReport {
    MetricsReport metrics;
    std::optional<BoundReport> bounds;  ///< present iff max_diversity
};

AnalysisReport analyze_pair(const SequencePair& pair);

}  // namespace farch
