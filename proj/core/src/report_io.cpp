#include "farch/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include <nlohmann/json.hpp>

namespace farch {

namespace {

using nlohmann::json;

json optional_to_json(const std::optional<std::uint32_t>& v) {
    if (v) {
        return *v;
    }
    return nullptr;
}

json check_to_json(const BoundCheck& c) {
    return json{{"value", c.value},
                {"bound", c.bound},
                {"pass", c.pass},
                {"applicable", c.applicable}};
}

json number_or_null(double v) {
    if (!std::isfinite(v)) {
        return nullptr;
    }
    return v;
}

// Fixed decimal text for CSV cells so repeated runs are byte-identical.
std::string format_stat(double v) {
    if (!std::isfinite(v)) {
        return "nan";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string format_prob(double p) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", p);
    return buf;
}

json row_to_json(const SweepRow& row) {
    const Scenario& sc = row.scenario;
    json j{{"n", sc.n_channels},
           {"x", sc.n_pus},
           {"p", sc.transmit_prob},
           {"traffic_mode", to_string(sc.traffic_mode)},
           {"trials", sc.trials},
           {"seed", sc.seed}};
    if (row.stats) {
        j["mean_ttr"] = number_or_null(row.stats->mean_ttr);
        j["std_err"] = number_or_null(row.stats->std_err);
        j["timeouts"] = row.stats->timeout_count;
    } else {
        j["mean_ttr"] = nullptr;
        j["std_err"] = nullptr;
        j["timeouts"] = 0;
        j["error"] = row.error;
    }
    return j;
}

}  // namespace

std::string analysis_to_json(const AnalysisReport& report, int indent) {
    const MetricsReport& m = report.metrics;
    json doc;
    doc["n"] = m.n;
    doc["period"] = m.period;
    doc["max_diversity"] = m.max_diversity;
    doc["mttr"] = optional_to_json(m.mttr);
    doc["mcttr"] = optional_to_json(m.mcttr);
    json mttr_h = json::array();
    for (const auto& v : m.mttr_h) {
        mttr_h.push_back(optional_to_json(v));
    }
    doc["mttr_h"] = std::move(mttr_h);
    doc["visit_counts"] = {{"sender", m.sender_visits}, {"receiver", m.receiver_visits}};

    if (report.bounds) {
        const BoundReport& b = *report.bounds;
        json bounds;
        bounds["mcttr"] = check_to_json(b.mcttr);
        bounds["mttr"] = check_to_json(b.mttr);
        json per_h = json::array();
        for (std::size_t h = 0; h < b.mttr_h.size(); ++h) {
            json c = check_to_json(b.mttr_h[h]);
            c["h"] = h;
            per_h.push_back(std::move(c));
        }
        bounds["mttr_h"] = std::move(per_h);
        bounds["uniform_frequency"] = b.uniform_frequency;
        bounds["distinct"] = b.distinct;
        bounds["all_pass"] = b.all_pass();
        doc["bounds"] = std::move(bounds);
    } else {
        doc["bounds"] = nullptr;
    }
    return doc.dump(indent) + "\n";
}

void write_mttr_h_csv(std::ostream& out, const MetricsReport& metrics,
                      std::size_t h_max) {
    out << "h,mttr_h,lower_bound\n";
    const std::size_t last = std::min(h_max, metrics.n - 1);
    for (std::size_t h = 0; h <= last; ++h) {
        out << h << ',';
        if (h < metrics.mttr_h.size() && metrics.mttr_h[h]) {
            out << *metrics.mttr_h[h];
        }
        out << ',' << (h + 1) * metrics.n << '\n';
    }
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "n,x,p,traffic_mode,trials,mean_ttr,std_err,timeouts,seed\n";
    for (const SweepRow& row : rows) {
        const Scenario& sc = row.scenario;
        out << sc.n_channels << ',' << sc.n_pus << ',' << format_prob(sc.transmit_prob)
            << ',' << to_string(sc.traffic_mode) << ',' << sc.trials << ',';
        if (row.stats) {
            out << format_stat(row.stats->mean_ttr) << ','
                << format_stat(row.stats->std_err) << ',' << row.stats->timeout_count;
        } else {
            out << "nan,nan,0";
        }
        out << ',' << sc.seed << '\n';
    }
}

std::string sweep_to_json(const std::vector<SweepRow>& rows, int indent) {
    json doc;
    json out_rows = json::array();
    for (const SweepRow& row : rows) {
        out_rows.push_back(row_to_json(row));
    }
    doc["rows"] = std::move(out_rows);
    return doc.dump(indent) + "\n";
}

}  // namespace farch
