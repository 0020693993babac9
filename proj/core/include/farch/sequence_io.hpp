#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "farch/sequence.hpp"

namespace farch {

// Sequence file formats. Text:
//   N <channels>
//   T <period>
//   <T space-separated channel indices>
// JSON: {"n_channels": <int>, "entries": [<int>, ...]}
// Both parsers reject out-of-range entries and malformed structure with
// ParseError.

/// Reads either format, sniffed from the first non-space character.
ChannelSequence read_sequence(const std::filesystem::path& path);

ChannelSequence parse_sequence_text(std::istream& in);
ChannelSequence parse_sequence_json_text(const std::string& text);

void write_sequence_text(std::ostream& out, const ChannelSequence& seq);
std::string sequence_to_json_text(const ChannelSequence& seq, int indent = 2);

/// Writes JSON when the extension is .json, text otherwise.
void write_sequence(const std::filesystem::path& path, const ChannelSequence& seq);

}  // namespace farch
