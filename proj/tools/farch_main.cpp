// farch: generate FARCH channel-hopping pairs, measure their rendezvous
// metrics exactly, check the lower bounds, and run PU-traffic simulations.
//
// Subcommands:
//   generate --n N --seed S --out DIR
//   analyze  --sender FILE --receiver FILE --out DIR [--h-max H]
//   simulate --n N --x X --p P --trials R --seed S [--traffic M] [--pairs K] [--out FILE]
//   sweep    --config FILE [--out FILE]
//
// Exit codes: 0 success, 1 usage error, 2 I/O or parse error, 3 internal
// invariant violation.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "farch/errors.hpp"
#include "farch/generator.hpp"
#include "farch/metrics.hpp"
#include "farch/report_io.hpp"
#include "farch/sequence_io.hpp"
#include "farch/simulator.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitInternal = 3;

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw farch::IoError("cannot create output directory " + dir.string() + ": " +
                             ec.message());
    }
}

void write_text_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw farch::IoError("cannot write " + path.string());
    }
    out << text;
    if (!out) {
        throw farch::IoError("failed while writing " + path.string());
    }
}

std::string read_text_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw farch::IoError("cannot open " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// ---- generate -------------------------------------------------------------

struct GenerateArgs {
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "text";
};

void run_generate(const GenerateArgs& args) {
    const auto perm = farch::random_permutation(args.n, args.seed);
    const auto pair = farch::farch_pair(perm);

    const fs::path dir(args.out);
    ensure_dir(dir);
    const std::string ext = args.format == "json" ? ".json" : ".seq";
    const fs::path sender_path = dir / ("sender" + ext);
    const fs::path receiver_path = dir / ("receiver" + ext);
    farch::write_sequence(sender_path, pair.sender());
    farch::write_sequence(receiver_path, pair.receiver());

    json manifest;
    manifest["n"] = args.n;
    manifest["seed"] = args.seed;
    manifest["permutation"] = perm.image();
    manifest["period"] = pair.period();
    manifest["sender"] = sender_path.filename().string();
    manifest["receiver"] = receiver_path.filename().string();
    write_text_file(dir / "manifest.json", manifest.dump(2) + "\n");

    std::cerr << "generate: n=" << args.n << " seed=" << args.seed << " -> "
              << dir.string() << "\n";
}

// ---- analyze --------------------------------------------------------------

struct AnalyzeArgs {
    std::string sender;
    std::string receiver;
    std::string out;
    std::size_t h_max = SIZE_MAX;
};

void run_analyze(const AnalyzeArgs& args) {
    auto sender = farch::read_sequence(args.sender);
    auto receiver = farch::read_sequence(args.receiver);
    const farch::SequencePair pair(std::move(sender), std::move(receiver));
    const auto report = farch::analyze_pair(pair);

    const fs::path dir(args.out);
    ensure_dir(dir);
    write_text_file(dir / "report.json", farch::analysis_to_json(report));

    std::ostringstream csv;
    farch::write_mttr_h_csv(csv, report.metrics, args.h_max);
    write_text_file(dir / "mttr_h.csv", csv.str());

    std::cerr << "analyze: n=" << report.metrics.n << " period=" << report.metrics.period
              << " max_diversity=" << (report.metrics.max_diversity ? "true" : "false")
              << " -> " << dir.string() << "\n";
}

// ---- simulate / sweep -----------------------------------------------------

void emit_rows(const std::vector<farch::SweepRow>& rows, const std::string& out_path,
               std::string format) {
    if (format.empty()) {
        format = (!out_path.empty() && fs::path(out_path).extension() == ".json")
                     ? "json"
                     : "csv";
    }
    std::string text;
    if (format == "json") {
        text = farch::sweep_to_json(rows);
    } else {
        std::ostringstream csv;
        farch::write_sweep_csv(csv, rows);
        text = csv.str();
    }
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text_file(out_path, text);
    }
}

struct SimulateArgs {
    farch::Scenario scenario;
    std::string traffic = "per-slot";
    bool fixed_pair = false;
    std::string out;
    std::string format;
};

void run_simulate(SimulateArgs& args) {
    args.scenario.traffic_mode = farch::traffic_mode_from_string(args.traffic);
    args.scenario.validate();

    farch::PairSource source = farch::farch_source();
    if (args.fixed_pair) {
        source = farch::fixed_source(farch::farch_pair(
            farch::random_permutation(args.scenario.n_channels, args.scenario.seed)));
    }

    farch::SweepRow row;
    row.scenario = args.scenario;
    row.stats = farch::average_ttr(source, args.scenario);
    std::cerr << "simulate: n=" << args.scenario.n_channels << " x=" << args.scenario.n_pus
              << " p=" << args.scenario.transmit_prob << " trials=" << args.scenario.trials
              << " mean_ttr=" << row.stats->mean_ttr << "\n";
    emit_rows({row}, args.out, args.format);
}

struct SweepArgs {
    std::string config_path;
    std::string out;
    std::string format;
};

// Config JSON mirrors the scenario fields; n/x/p accept a scalar or an
// array, and x may instead be given as {"x_factor": f} with X = floor(f*N).
farch::SweepConfig parse_sweep_config(const json& doc) {
    if (!doc.is_object()) {
        throw farch::ParseError("sweep config: top level must be an object");
    }

    auto size_list = [&](const char* key) {
        std::vector<std::size_t> values;
        if (!doc.contains(key)) {
            return values;
        }
        const json& v = doc[key];
        if (v.is_number_unsigned() || v.is_number_integer()) {
            values.push_back(v.get<std::size_t>());
        } else if (v.is_array()) {
            for (const auto& item : v) {
                if (!item.is_number_integer() && !item.is_number_unsigned()) {
                    throw farch::ParseError(std::string("sweep config: '") + key +
                                            "' entries must be integers");
                }
                values.push_back(item.get<std::size_t>());
            }
        } else {
            throw farch::ParseError(std::string("sweep config: '") + key +
                                    "' must be an integer or array");
        }
        return values;
    };

    farch::SweepConfig cfg;
    cfg.n_values = size_list("n");
    cfg.x_values = size_list("x");
    if (doc.contains("x_factor")) {
        if (!doc["x_factor"].is_number()) {
            throw farch::ParseError("sweep config: 'x_factor' must be a number");
        }
        cfg.x_factor = doc["x_factor"].get<double>();
    }
    if (doc.contains("p")) {
        const json& v = doc["p"];
        if (v.is_number()) {
            cfg.p_values.push_back(v.get<double>());
        } else if (v.is_array()) {
            for (const auto& item : v) {
                if (!item.is_number()) {
                    throw farch::ParseError("sweep config: 'p' entries must be numbers");
                }
                cfg.p_values.push_back(item.get<double>());
            }
        } else {
            throw farch::ParseError("sweep config: 'p' must be a number or array");
        }
    }
    if (doc.contains("traffic_mode")) {
        cfg.traffic_mode =
            farch::traffic_mode_from_string(doc["traffic_mode"].get<std::string>());
    }
    if (doc.contains("n_su_pairs")) {
        cfg.n_su_pairs = doc["n_su_pairs"].get<std::size_t>();
    }
    if (doc.contains("trials")) {
        cfg.trials = doc["trials"].get<std::size_t>();
    }
    if (!doc.contains("seed")) {
        throw farch::ParseError("sweep config: 'seed' is required");
    }
    cfg.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("max_slots")) {
        cfg.max_slots = doc["max_slots"].get<std::size_t>();
    }
    return cfg;
}

void run_sweep(const SweepArgs& args) {
    json doc;
    try {
        doc = json::parse(read_text_file(args.config_path));
    } catch (const json::exception& e) {
        throw farch::ParseError(args.config_path + ": invalid JSON: " + e.what());
    }
    const farch::SweepConfig cfg = parse_sweep_config(doc);

    const auto progress = [](const farch::SweepRow& row, std::size_t index,
                             std::size_t total) {
        std::cerr << "sweep: [" << index + 1 << "/" << total << "] n="
                  << row.scenario.n_channels << " x=" << row.scenario.n_pus
                  << " p=" << row.scenario.transmit_prob;
        if (row.stats) {
            std::cerr << " mean_ttr=" << row.stats->mean_ttr;
        } else {
            std::cerr << " skipped: " << row.error;
        }
        std::cerr << "\n";
    };
    const auto rows = farch::sweep(cfg, progress);
    emit_rows(rows, args.out, args.format);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "FARCH channel hopping: sequence generation, exact rendezvous metrics "
        "and bounds, PU-traffic simulation"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Construct a FARCH sequence pair");
    generate->add_option("--n", gen.n, "Number of channels (>= 2)")->required();
    generate->add_option("--seed", gen.seed, "Permutation seed")->required();
    generate->add_option("--out", gen.out, "Output directory")->required();
    generate->add_option("--format", gen.format, "Sequence file format")
        ->check(CLI::IsMember({"text", "json"}));
    generate->callback([&] { run_generate(gen); });

    AnalyzeArgs ana;
    auto* analyze = app.add_subcommand("analyze", "Measure rendezvous metrics of a pair");
    analyze->add_option("--sender", ana.sender, "Sender sequence file")->required();
    analyze->add_option("--receiver", ana.receiver, "Receiver sequence file")->required();
    analyze->add_option("--out", ana.out, "Output directory")->required();
    analyze->add_option("--h-max", ana.h_max, "Largest h for the MTTR_h CSV");
    analyze->callback([&] { run_analyze(ana); });

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Average TTR under PU traffic");
    simulate->add_option("--n", sim.scenario.n_channels, "Number of channels")->required();
    simulate->add_option("--x", sim.scenario.n_pus, "Number of PUs (< n)")->required();
    simulate->add_option("--p", sim.scenario.transmit_prob, "PU transmit probability")
        ->required();
    simulate->add_option("--trials", sim.scenario.trials, "Independent runs")->required();
    simulate->add_option("--seed", sim.scenario.seed, "Master seed")->required();
    simulate->add_option("--traffic", sim.traffic, "PU traffic model")
        ->check(CLI::IsMember({"per-slot", "static"}));
    simulate->add_option("--pairs", sim.scenario.n_su_pairs, "SU pairs per run");
    simulate->add_option("--max-slots", sim.scenario.max_slots,
                         "Per-attempt slot cap (default 4*N^2)");
    simulate->add_flag("--fixed-pair", sim.fixed_pair,
                       "Reuse one FARCH pair for every attempt");
    simulate->add_option("--out", sim.out, "Output file (default stdout)");
    simulate->add_option("--format", sim.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    simulate->callback([&] { run_simulate(sim); });

    SweepArgs swp;
    auto* sweep_cmd = app.add_subcommand("sweep", "Average TTR over an (N, X, p) grid");
    sweep_cmd->add_option("--config", swp.config_path, "Sweep config JSON")->required();
    sweep_cmd->add_option("--out", swp.out, "Output file (default stdout)");
    sweep_cmd->add_option("--format", swp.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->callback([&] { run_sweep(swp); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const farch::InvalidParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const farch::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const farch::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const farch::IncompatiblePair& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}
