#include "farch/metrics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "farch/errors.hpp"

namespace farch {

namespace {

constexpr std::uint32_t kNever = 0;

void check_hit_args(const ChannelSequence& ahead, const ChannelSequence& behind,
                    std::size_t prefix_len, ChannelId k) {
    if (ahead.n_channels() != behind.n_channels()) {
        throw IncompatiblePair("hit_count: alphabet mismatch");
    }
    if (ahead.period() != behind.period()) {
        throw IncompatiblePair("hit_count: period mismatch");
    }
    if (prefix_len < 1 || prefix_len > behind.period()) {
        throw InvalidParameter("hit_count: prefix length " + std::to_string(prefix_len) +
                               " outside [1, " + std::to_string(behind.period()) + "]");
    }
    if (k >= ahead.n_channels()) {
        throw InvalidParameter("hit_count: channel " + std::to_string(k) +
                               " out of range");
    }
}

// (ahead, behind) roles of a pair for one direction.
std::pair<const ChannelSequence*, const ChannelSequence*> oriented(
    const SequencePair& pair, Direction d) {
    if (d == Direction::SenderAhead) {
        return {&pair.sender(), &pair.receiver()};
    }
    return {&pair.receiver(), &pair.sender()};
}

}  // namespace

const char* to_string(Direction d) {
    return d == Direction::SenderAhead ? "sender_ahead" : "receiver_ahead";
}

std::size_t hit_count(const ChannelSequence& ahead, const ChannelSequence& behind,
                      std::size_t tau, std::size_t prefix_len, ChannelId k) {
    check_hit_args(ahead, behind, prefix_len, k);
    const std::size_t t = ahead.period();
    std::size_t hits = 0;
    std::size_t j = tau % t;
    for (std::size_t i = 0; i < prefix_len; ++i) {
        if (behind.at(i) == k && ahead.at(j) == k) {
            ++hits;
        }
        if (++j == t) {
            j = 0;
        }
    }
    return hits;
}

std::size_t hit_count(const SequencePair& pair, Direction direction, std::size_t tau,
                      std::size_t prefix_len, ChannelId k) {
    auto [ahead, behind] = oriented(pair, direction);
    return hit_count(*ahead, *behind, tau, prefix_len, k);
}

RendezvousProfile RendezvousProfile::build(const SequencePair& pair) {
    RendezvousProfile p;
    p.n_ = pair.n_channels();
    p.period_ = pair.period();
    const std::size_t t = p.period_;
    p.cells_.assign(2 * t * p.n_, kNever);

    for (std::size_t d = 0; d < 2; ++d) {
        auto [ahead, behind] = oriented(pair, kDirections[d]);
        for (std::size_t tau = 0; tau < t; ++tau) {
            std::uint32_t* row = p.cells_.data() + (d * t + tau) * p.n_;
            std::size_t open = p.n_;
            std::size_t j = tau;
            for (std::size_t i = 0; i < t; ++i) {
                const ChannelId c = behind->at(i);
                if (ahead->at(j) == c && row[c] == kNever) {
                    row[c] = static_cast<std::uint32_t>(i + 1);
                    if (--open == 0) {
                        break;
                    }
                }
                if (++j == t) {
                    j = 0;
                }
            }
        }
    }
    p.complete_ =
        std::find(p.cells_.begin(), p.cells_.end(), kNever) == p.cells_.end();
    return p;
}

std::optional<std::uint32_t> RendezvousProfile::first_slot(Direction d, std::size_t tau,
                                                           ChannelId k) const {
    if (tau >= period_ || k >= n_) {
        throw InvalidParameter("RendezvousProfile: shift or channel out of range");
    }
    const std::size_t d_idx = d == Direction::SenderAhead ? 0 : 1;
    const std::uint32_t v = cells_[(d_idx * period_ + tau) * n_ + k];
    if (v == kNever) {
        return std::nullopt;
    }
    return v;
}

std::span<const std::uint32_t> RendezvousProfile::row(Direction d, std::size_t tau) const {
    if (tau >= period_) {
        throw InvalidParameter("RendezvousProfile: shift out of range");
    }
    const std::size_t d_idx = d == Direction::SenderAhead ? 0 : 1;
    return {cells_.data() + (d_idx * period_ + tau) * n_, n_};
}

RendezvousProfile build_profile(const SequencePair& pair) {
    return RendezvousProfile::build(pair);
}

bool is_max_diversity(const SequencePair& pair) {
    return RendezvousProfile::build(pair).complete();
}

namespace {

void require_complete(const RendezvousProfile& profile) {
    if (!profile.complete()) {
        throw MetricUndefined(
            "metric requires maximal rendezvous diversity: some (shift, channel) "
            "never meets within one period");
    }
}

}  // namespace

std::uint32_t mttr_h(const RendezvousProfile& profile, std::size_t h) {
    require_complete(profile);
    const std::size_t n = profile.n_channels();
    if (h >= n) {
        throw InvalidParameter("mttr_h: h must be in [0, N-1]");
    }
    std::uint32_t worst = 0;
    std::vector<std::uint32_t> buf(n);
    for (Direction d : kDirections) {
        for (std::size_t tau = 0; tau < profile.period(); ++tau) {
            auto cells = profile.row(d, tau);
            std::copy(cells.begin(), cells.end(), buf.begin());
            std::nth_element(buf.begin(), buf.begin() + h, buf.end());
            worst = std::max(worst, buf[h]);
        }
    }
    return worst;
}

std::uint32_t mttr_h(const SequencePair& pair, std::size_t h) {
    return mttr_h(RendezvousProfile::build(pair), h);
}

std::vector<std::uint32_t> mttr_h_vector(const RendezvousProfile& profile) {
    require_complete(profile);
    const std::size_t n = profile.n_channels();
    std::vector<std::uint32_t> worst(n, 0);
    std::vector<std::uint32_t> buf(n);
    for (Direction d : kDirections) {
        for (std::size_t tau = 0; tau < profile.period(); ++tau) {
            auto cells = profile.row(d, tau);
            std::copy(cells.begin(), cells.end(), buf.begin());
            std::sort(buf.begin(), buf.end());
            for (std::size_t h = 0; h < n; ++h) {
                worst[h] = std::max(worst[h], buf[h]);
            }
        }
    }
    return worst;
}

std::uint32_t mttr_h_exhaustive(const SequencePair& pair, std::size_t h) {
    const std::size_t n = pair.n_channels();
    const std::size_t t = pair.period();
    if (h >= n) {
        throw InvalidParameter("mttr_h_exhaustive: h must be in [0, N-1]");
    }
    const std::size_t keep = n - h;

    std::uint32_t worst = 0;
    std::vector<char> available(n, 0);

    // For one available set, the worst first rendezvous over both
    // directions and all shifts, scanning slots directly.
    auto scan_all_shifts = [&](const ChannelSequence& ahead, const ChannelSequence& behind) {
        for (std::size_t tau = 0; tau < t; ++tau) {
            std::uint32_t first = kNever;
            std::size_t j = tau;
            for (std::size_t i = 0; i < t; ++i) {
                const ChannelId c = behind.at(i);
                if (available[c] && ahead.at(j) == c) {
                    first = static_cast<std::uint32_t>(i + 1);
                    break;
                }
                if (++j == t) {
                    j = 0;
                }
            }
            if (first == kNever) {
                throw MetricUndefined(
                    "mttr_h_exhaustive: no rendezvous on the available channels "
                    "within one period; the pair lacks maximal diversity");
            }
            worst = std::max(worst, first);
        }
    };

    // Enumerate all subsets of size keep in lexicographic order.
    std::vector<std::size_t> pick(keep);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    while (true) {
        std::fill(available.begin(), available.end(), 0);
        for (std::size_t idx : pick) {
            available[idx] = 1;
        }
        scan_all_shifts(pair.sender(), pair.receiver());
        scan_all_shifts(pair.receiver(), pair.sender());

        // Advance to the next combination.
        std::size_t i = keep;
        while (i > 0 && pick[i - 1] == n - keep + (i - 1)) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++pick[i - 1];
        for (std::size_t j = i; j < keep; ++j) {
            pick[j] = pick[j - 1] + 1;
        }
    }
    return worst;
}

CorrelationCheck correlation_sum_check(const ChannelSequence& u, std::size_t m,
                                       const ChannelSequence& v, ChannelId k) {
    check_hit_args(v, u, m, k);
    CorrelationCheck result;
    for (std::size_t tau = 0; tau < v.period(); ++tau) {
        result.lhs += hit_count(v, u, tau, m, k);
    }
    std::uint64_t x_k = 0;
    for (std::size_t i = 0; i < m; ++i) {
        x_k += u.at(i) == k;
    }
    std::uint64_t y_k = 0;
    for (std::size_t i = 0; i < v.period(); ++i) {
        y_k += v.at(i) == k;
    }
    result.rhs = x_k * y_k;
    return result;
}

MetricsReport compute_metrics(const SequencePair& pair) {
    const auto profile = RendezvousProfile::build(pair);
    const std::size_t n = pair.n_channels();

    MetricsReport report;
    report.n = n;
    report.period = pair.period();
    report.max_diversity = profile.complete();
    report.sender_visits = pair.sender().visit_counts();
    report.receiver_visits = pair.receiver().visit_counts();
    report.mttr_h.assign(n, std::nullopt);

    // MTTR needs only some channel to meet at every shift, so it can exist
    // for pairs without maximal diversity.
    std::uint32_t worst = 0;
    bool mttr_defined = true;
    for (Direction d : kDirections) {
        for (std::size_t tau = 0; tau < profile.period() && mttr_defined; ++tau) {
            std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
            for (std::uint32_t cell : profile.row(d, tau)) {
                if (cell != kNever) {
                    best = std::min(best, cell);
                }
            }
            if (best == std::numeric_limits<std::uint32_t>::max()) {
                mttr_defined = false;
            } else {
                worst = std::max(worst, best);
            }
        }
    }
    if (mttr_defined) {
        report.mttr = worst;
    }

    if (report.max_diversity) {
        const auto vec = mttr_h_vector(profile);
        for (std::size_t h = 0; h < n; ++h) {
            report.mttr_h[h] = vec[h];
        }
        report.mcttr = vec[n - 1];
    }
    return report;
}

bool BoundReport::all_pass() const {
    if (!mcttr.pass || !mttr.pass) {
        return false;
    }
    return std::all_of(mttr_h.begin(), mttr_h.end(),
                       [](const BoundCheck& c) { return c.pass; });
}

BoundReport bound_report(const SequencePair& pair) {
    const auto profile = RendezvousProfile::build(pair);
    require_complete(profile);
    const std::size_t n = pair.n_channels();
    const auto vec = mttr_h_vector(profile);

    const std::uint64_t n_sq = static_cast<std::uint64_t>(n) * n;
    const std::uint64_t measured_mcttr = vec[n - 1];
    const std::uint64_t measured_mttr = vec[0];
    // The MTTR and MTTR_h bounds are proved under MCTTR = N^2.
    const bool minimum_mcttr = measured_mcttr == n_sq;

    BoundReport report;
    report.mcttr = {measured_mcttr, n_sq, measured_mcttr >= n_sq, true};
    report.mttr = {measured_mttr, n, measured_mttr >= n, minimum_mcttr};
    report.mttr_h.reserve(n - 1);
    for (std::size_t h = 0; h + 1 < n; ++h) {
        const std::uint64_t bound = static_cast<std::uint64_t>(h + 1) * n;
        report.mttr_h.push_back({vec[h], bound, vec[h] >= bound, minimum_mcttr});
    }
    report.uniform_frequency =
        pair.sender().uniform_frequency() && pair.receiver().uniform_frequency();
    report.distinct = is_distinct_pair(pair.sender(), pair.receiver());
    return report;
}

AnalysisReport analyze_pair(const SequencePair& pair) {
    AnalysisReport report;
    report.metrics = compute_metrics(pair);
    if (report.metrics.max_diversity) {
        report.bounds = bound_report(pair);
    }
    return report;
}

}  // namespace farch
