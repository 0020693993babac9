#include "farch/sequence_io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "farch/errors.hpp"

namespace farch {

namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) {
    throw ParseError("sequence file: " + what);
}

ChannelSequence make_checked(std::size_t n, std::vector<ChannelId> entries) {
    try {
        return ChannelSequence(n, std::move(entries));
    } catch (const InvalidParameter& e) {
        malformed(e.what());
    }
}

}  // namespace

ChannelSequence parse_sequence_text(std::istream& in) {
    std::string tag;
    long long n = 0;
    long long t = 0;
    if (!(in >> tag) || tag != "N" || !(in >> n)) {
        malformed("expected header line 'N <channels>'");
    }
    if (!(in >> tag) || tag != "T" || !(in >> t)) {
        malformed("expected header line 'T <period>'");
    }
    if (n < 2) {
        malformed("N must be >= 2, got " + std::to_string(n));
    }
    if (t < 1) {
        malformed("T must be >= 1, got " + std::to_string(t));
    }
    std::vector<ChannelId> entries;
    entries.reserve(static_cast<std::size_t>(t));
    for (long long i = 0; i < t; ++i) {
        long long v = 0;
        if (!(in >> v)) {
            malformed("expected " + std::to_string(t) + " entries, got " +
                      std::to_string(i));
        }
        if (v < 0 || v >= n) {
            malformed("entry " + std::to_string(i) + " = " + std::to_string(v) +
                      " out of range for N = " + std::to_string(n));
        }
        entries.push_back(static_cast<ChannelId>(v));
    }
    long long extra = 0;
    if (in >> extra) {
        malformed("trailing data after " + std::to_string(t) + " entries");
    }
    return make_checked(static_cast<std::size_t>(n), std::move(entries));
}

ChannelSequence parse_sequence_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        malformed(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n_channels") || !doc.contains("entries")) {
        malformed("JSON form needs an object with 'n_channels' and 'entries'");
    }
    if (!doc["n_channels"].is_number_integer() || !doc["entries"].is_array()) {
        malformed("'n_channels' must be an integer and 'entries' an array");
    }
    const long long n = doc["n_channels"].get<long long>();
    if (n < 2) {
        malformed("n_channels must be >= 2, got " + std::to_string(n));
    }
    std::vector<ChannelId> entries;
    entries.reserve(doc["entries"].size());
    for (const auto& item : doc["entries"]) {
        if (!item.is_number_integer()) {
            malformed("entries must all be integers");
        }
        const long long v = item.get<long long>();
        if (v < 0 || v >= n) {
            malformed("entry " + std::to_string(v) + " out of range for N = " +
                      std::to_string(n));
        }
        entries.push_back(static_cast<ChannelId>(v));
    }
    return make_checked(static_cast<std::size_t>(n), std::move(entries));
}

ChannelSequence read_sequence(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open sequence file: " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    const std::size_t start = text.find_first_not_of(" \t\r\n");
    if (start == std::string::npos) {
        throw ParseError("sequence file is empty: " + path.string());
    }
    try {
        if (text[start] == '{') {
            return parse_sequence_json_text(text);
        }
        std::istringstream stream(text);
        return parse_sequence_text(stream);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void write_sequence_text(std::ostream& out, const ChannelSequence& seq) {
    out << "N " << seq.n_channels() << "\n";
    out << "T " << seq.period() << "\n";
    for (std::size_t i = 0; i < seq.period(); ++i) {
        if (i > 0) {
            out << ' ';
        }
        out << seq.at(i);
    }
    out << "\n";
}

std::string sequence_to_json_text(const ChannelSequence& seq, int indent) {
    json doc;
    doc["n_channels"] = seq.n_channels();
    doc["entries"] = seq.entries();
    return doc.dump(indent) + "\n";
}

void write_sequence(const std::filesystem::path& path, const ChannelSequence& seq) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write sequence file: " + path.string());
    }
    if (path.extension() == ".json") {
        out << sequence_to_json_text(seq);
    } else {
        write_sequence_text(out, seq);
    }
    if (!out) {
        throw IoError("failed while writing: " + path.string());
    }
}

}  // namespace farch
