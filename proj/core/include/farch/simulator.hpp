#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "farch/metrics.hpp"
#include "farch/sequence.hpp"

namespace farch {

/// How primary users occupy their channels over time.
enum class TrafficMode {
    PerSlot,       ///< each PU transmits independently with prob. p every slot
    StaticPerRun,  ///< one Bernoulli(p) transmit state per PU per attempt
};

const char* to_string(TrafficMode m);
/// Accepts "per-slot" and "static". Throws InvalidParameter otherwise.
TrafficMode traffic_mode_from_string(std::string_view s);

/// One simulated deployment: N licensed channels, X primary users pinned to
/// X distinct channels (resampled each run), each transmitting with
/// probability p, and pairs of secondary users hopping until they meet on
/// an unoccupied channel.
struct Scenario {
    std::size_t n_channels = 0;   ///< N >= 2
    std::size_t n_pus = 0;        ///< X, 0 <= X < N
    double transmit_prob = 0.0;   ///< p in [0, 1]
    TrafficMode traffic_mode = TrafficMode::PerSlot;
    std::size_t n_su_pairs = 10;  ///< SU pairs per run
    std::size_t trials = 10000;   ///< independent runs
    std::uint64_t seed = 0;
    std::size_t max_slots = 0;    ///< per-attempt cap; 0 means 4*N^2

    std::size_t effective_max_slots() const;
    /// Throws InvalidParameter on any violated field constraint.
    void validate() const;
};

/// Result of one rendezvous attempt.
struct TrialOutcome {
    bool timed_out = false;
    std::uint32_t ttr = 0;    ///< 1-based rendezvous slot (0 if timed out)
    ChannelId channel = 0;    ///< rendezvous channel
    std::uint32_t shift = 0;  ///< sampled relative clock offset
    Direction direction = Direction::SenderAhead;  ///< whose clock ran ahead
};

struct SimStats {
    double mean_ttr = 0.0;          ///< mean of per-run mean TTRs
    double std_err = 0.0;           ///< NaN when fewer than two runs completed
    std::size_t n_runs = 0;         ///< runs contributing to the mean
    std::size_t timeout_count = 0;  ///< attempts that hit max_slots
};

/// Supplies the hopping pair an SU pair uses for one attempt.
using PairSource = std::function<SequencePair(std::size_t n_channels, std::mt19937_64&)>;

/// Fresh FARCH pair from a fresh random permutation per attempt.
PairSource farch_source();
/// Replays the same pair for every attempt (variance-reduction studies).
PairSource fixed_source(SequencePair pair);

/// X distinct PU channels, uniform without replacement. Implemented as the
/// first X entries of a full random channel permutation, so for a fixed rng
/// state the occupied set grows monotonically with X.
std::vector<ChannelId> sample_pu_channels(std::size_t n_channels, std::size_t n_pus,
                                          std::mt19937_64& rng);

/// One rendezvous attempt: samples PU placement (first overload), a clock
/// offset uniform over the period and an ahead direction, then walks slots
/// of the behind sequence until both SUs visit the same channel while no
/// transmitting PU occupies it. Times out after scenario.effective_max_slots().
TrialOutcome run_trial(const SequencePair& pair, const Scenario& scenario,
                       std::mt19937_64& rng);
TrialOutcome run_trial(const SequencePair& pair, const Scenario& scenario,
                       std::span<const ChannelId> pu_channels, std::mt19937_64& rng);

/// scenario.trials independent runs. Each run places PUs once and then
/// simulates scenario.n_su_pairs SU pairs against that placement, each pair
/// with its own sequences, offset and direction. Every run and every pair
/// derives its own stream from (seed, run, pair), so results are
/// bit-identical for identical inputs regardless of evaluation order.
SimStats average_ttr(const PairSource& source, const Scenario& scenario);

/// Cartesian sweep grid over (N, X, p). X comes either from x_values or,
/// when x_factor is set, as floor(x_factor * N) per N.
struct SweepConfig {
    std::vector<std::size_t> n_values;
    std::vector<std::size_t> x_values;
    std::optional<double> x_factor;
    std::vector<double> p_values;
    TrafficMode traffic_mode = TrafficMode::PerSlot;
    std::size_t n_su_pairs = 10;
    std::size_t trials = 10000;
    std::uint64_t seed = 0;
    std::size_t max_slots = 0;

    void validate() const;
};

struct SweepRow {
    Scenario scenario;              ///< the grid point
    std::optional<SimStats> stats;  ///< empty when the point was skipped
    std::string error;              ///< diagnostic for skipped points
};

using SweepProgress = std::function<void(const SweepRow&, std::size_t index,
                                         std::size_t total)>;

/// Evaluates average_ttr over the grid, one row per point. Every point
/// reuses the master seed, so under one sweep the samples are coupled and
/// mean TTR is pointwise nondecreasing in p and in X. Invalid grid points
/// (e.g. X >= N) yield a diagnostic row instead of aborting the sweep.
std::vector<SweepRow> sweep(const SweepConfig& config, const SweepProgress& progress = {});

}  // namespace farch
