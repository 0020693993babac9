#include "farch/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "farch/errors.hpp"
#include "farch/generator.hpp"
#include "farch/rng.hpp"

namespace farch {

namespace {

// Stream tags keep run-level and pair-level draws on disjoint streams.
constexpr std::uint64_t kPlacementStream = 0x70755f706c616365ULL;  // "pu_place"
constexpr std::uint64_t kPairStream = 0x73755f7061697273ULL;       // "su_pairs"

double nan_value() {
    return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

const char* to_string(TrafficMode m) {
    return m == TrafficMode::PerSlot ? "per-slot" : "static";
}

TrafficMode traffic_mode_from_string(std::string_view s) {
    if (s == "per-slot") {
        return TrafficMode::PerSlot;
    }
    if (s == "static") {
        return TrafficMode::StaticPerRun;
    }
    throw InvalidParameter("traffic mode must be 'per-slot' or 'static', got '" +
                           std::string(s) + "'");
}

std::size_t Scenario::effective_max_slots() const {
    return max_slots != 0 ? max_slots : 4 * n_channels * n_channels;
}

void Scenario::validate() const {
    if (n_channels < 2) {
        throw InvalidParameter("Scenario: need n_channels >= 2, got " +
                               std::to_string(n_channels));
    }
    if (n_pus >= n_channels) {
        throw InvalidParameter("Scenario: need n_pus < n_channels, got X = " +
                               std::to_string(n_pus) + " with N = " +
                               std::to_string(n_channels));
    }
    if (!(transmit_prob >= 0.0 && transmit_prob <= 1.0)) {
        throw InvalidParameter("Scenario: transmit_prob must be in [0, 1]");
    }
    if (n_su_pairs < 1) {
        throw InvalidParameter("Scenario: need at least one SU pair");
    }
    if (trials < 1) {
        throw InvalidParameter("Scenario: need at least one trial");
    }
    if (effective_max_slots() < n_channels * n_channels) {
        throw InvalidParameter("Scenario: max_slots must be at least N^2");
    }
}

PairSource farch_source() {
    return [](std::size_t n_channels, std::mt19937_64& rng) {
        return farch_pair(random_permutation(n_channels, rng));
    };
}

PairSource fixed_source(SequencePair pair) {
    return [pair = std::move(pair)](std::size_t n_channels, std::mt19937_64&) {
        if (n_channels != pair.n_channels()) {
            throw InvalidParameter("fixed_source: pair alphabet does not match scenario");
        }
        return pair;
    };
}

std::vector<ChannelId> sample_pu_channels(std::size_t n_channels, std::size_t n_pus,
                                          std::mt19937_64& rng) {
    if (n_pus >= n_channels) {
        throw InvalidParameter("sample_pu_channels: need n_pus < n_channels");
    }
    // Full Fisher-Yates selection: the draw count does not depend on n_pus
    // and the occupied set is a prefix, so matched seeds nest across X.
    std::vector<ChannelId> channels(n_channels);
    std::iota(channels.begin(), channels.end(), ChannelId{0});
    for (std::size_t i = 0; i + 1 < n_channels; ++i) {
        const std::size_t j = i + uniform_below(rng, n_channels - i);
        std::swap(channels[i], channels[j]);
    }
    channels.resize(n_pus);
    return channels;
}

TrialOutcome run_trial(const SequencePair& pair, const Scenario& scenario,
                       std::mt19937_64& rng) {
    const auto pus = sample_pu_channels(scenario.n_channels, scenario.n_pus, rng);
    return run_trial(pair, scenario, pus, rng);
}

TrialOutcome run_trial(const SequencePair& pair, const Scenario& scenario,
                       std::span<const ChannelId> pu_channels, std::mt19937_64& rng) {
    scenario.validate();
    if (pair.n_channels() != scenario.n_channels) {
        throw InvalidParameter("run_trial: pair alphabet does not match scenario");
    }
    if (pu_channels.size() != scenario.n_pus) {
        throw InvalidParameter("run_trial: PU placement does not match scenario");
    }

    const std::size_t n = scenario.n_channels;
    const std::size_t t = pair.period();
    const double p = scenario.transmit_prob;

    std::vector<char> occupied(n, 0);
    for (ChannelId c : pu_channels) {
        if (c >= n) {
            throw InvalidParameter("run_trial: PU channel out of range");
        }
        occupied[c] = 1;
    }

    const std::size_t tau = uniform_below(rng, t);
    const Direction direction =
        uniform_below(rng, 2) == 0 ? Direction::SenderAhead : Direction::ReceiverAhead;
    const ChannelSequence& ahead =
        direction == Direction::SenderAhead ? pair.sender() : pair.receiver();
    const ChannelSequence& behind =
        direction == Direction::SenderAhead ? pair.receiver() : pair.sender();

    // Static mode fixes one transmit state per channel for the whole
    // attempt. Drawn for all N channels so streams stay aligned across X.
    std::vector<char> static_tx(n, 0);
    if (scenario.traffic_mode == TrafficMode::StaticPerRun) {
        for (std::size_t c = 0; c < n; ++c) {
            static_tx[c] = uniform_unit(rng) < p;
        }
    }

    const std::size_t max_slots = scenario.effective_max_slots();
    for (std::size_t i = 0; i < max_slots; ++i) {
        const ChannelId c = behind.at_wrapped(i);
        if (ahead.at_wrapped(tau + i) != c) {
            continue;
        }
        bool blocked;
        if (scenario.traffic_mode == TrafficMode::PerSlot) {
            // One draw per coincidence slot, consumed whether or not a PU
            // sits on the channel, so matched seeds couple across p and X.
            const bool transmitting = uniform_unit(rng) < p;
            blocked = occupied[c] && transmitting;
        } else {
            blocked = occupied[c] && static_tx[c];
        }
        if (!blocked) {
            TrialOutcome outcome;
            outcome.ttr = static_cast<std::uint32_t>(i + 1);
            outcome.channel = c;
            outcome.shift = static_cast<std::uint32_t>(tau);
            outcome.direction = direction;
            return outcome;
        }
    }

    TrialOutcome outcome;
    outcome.timed_out = true;
    outcome.shift = static_cast<std::uint32_t>(tau);
    outcome.direction = direction;
    return outcome;
}

SimStats average_ttr(const PairSource& source, const Scenario& scenario) {
    scenario.validate();
    if (!source) {
        throw InvalidParameter("average_ttr: empty pair source");
    }

    std::vector<double> run_means;
    run_means.reserve(scenario.trials);
    std::size_t timeouts = 0;

    for (std::size_t run = 0; run < scenario.trials; ++run) {
        auto placement_rng = derive_stream({scenario.seed, kPlacementStream, run});
        const auto pus =
            sample_pu_channels(scenario.n_channels, scenario.n_pus, placement_rng);

        double sum = 0.0;
        std::size_t completed = 0;
        for (std::size_t pair_idx = 0; pair_idx < scenario.n_su_pairs; ++pair_idx) {
            auto rng = derive_stream({scenario.seed, kPairStream, run, pair_idx});
            const SequencePair pair = source(scenario.n_channels, rng);
            const TrialOutcome outcome = run_trial(pair, scenario, pus, rng);
            if (outcome.timed_out) {
                ++timeouts;
            } else {
                sum += outcome.ttr;
                ++completed;
            }
        }
        if (completed > 0) {
            run_means.push_back(sum / static_cast<double>(completed));
        }
    }

    SimStats stats;
    stats.timeout_count = timeouts;
    stats.n_runs = run_means.size();
    if (run_means.empty()) {
        stats.mean_ttr = nan_value();
        stats.std_err = nan_value();
        return stats;
    }
    const double mean =
        std::accumulate(run_means.begin(), run_means.end(), 0.0) /
        static_cast<double>(run_means.size());
    stats.mean_ttr = mean;
    if (run_means.size() < 2) {
        stats.std_err = nan_value();
    } else {
        double ss = 0.0;
        for (double x : run_means) {
            ss += (x - mean) * (x - mean);
        }
        const double var = ss / static_cast<double>(run_means.size() - 1);
        stats.std_err = std::sqrt(var / static_cast<double>(run_means.size()));
    }
    return stats;
}

void SweepConfig::validate() const {
    if (x_factor && !x_values.empty()) {
        throw InvalidParameter("SweepConfig: give either x values or x_factor, not both");
    }
    if (!x_factor && x_values.empty() && !n_values.empty() && !p_values.empty()) {
        throw InvalidParameter("SweepConfig: no X dimension given");
    }
}

std::vector<SweepRow> sweep(const SweepConfig& config, const SweepProgress& progress) {
    config.validate();

    std::vector<SweepRow> rows;
    const std::size_t xs_per_n = config.x_factor ? 1 : config.x_values.size();
    const std::size_t total = config.n_values.size() * xs_per_n * config.p_values.size();
    rows.reserve(total);

    for (std::size_t n : config.n_values) {
        std::vector<std::size_t> xs;
        if (config.x_factor) {
            xs.push_back(static_cast<std::size_t>(*config.x_factor * static_cast<double>(n)));
        } else {
            xs = config.x_values;
        }
        for (std::size_t x : xs) {
            for (double p : config.p_values) {
                SweepRow row;
                row.scenario.n_channels = n;
                row.scenario.n_pus = x;
                row.scenario.transmit_prob = p;
                row.scenario.traffic_mode = config.traffic_mode;
                row.scenario.n_su_pairs = config.n_su_pairs;
                row.scenario.trials = config.trials;
                row.scenario.seed = config.seed;
                row.scenario.max_slots = config.max_slots;
                try {
                    row.scenario.validate();
                    row.stats = average_ttr(farch_source(), row.scenario);
                } catch (const Error& e) {
                    row.error = e.what();
                }
                if (progress) {
                    progress(row, rows.size(), total);
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

}  // namespace farch
