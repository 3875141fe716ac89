#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ditrail/digraph.hpp"

namespace ditrail {

/// A digraph plus an optional prescribed vertex set read from an "S:" line.
struct Instance {
  Digraph digraph;
  std::optional<std::vector<VertexId>> s;
};

/// Text format: first data line "n m", then m lines "tail head" (0-based),
/// one optional "S: i j k" line, '#' comments and blank lines ignored.
/// Duplicate arcs, loops, bad counts, or trailing junk are parse errors.
Instance parse_instance(std::istream& in);
Instance parse_instance_string(const std::string& text);
Instance load_instance(const std::string& path);

/// Canonical encoding: "n m" header followed by the sorted arc list. Equal
/// digraphs serialize identically.
std::string format_digraph(const Digraph& d);
std::string format_instance(const Digraph& d, std::span<const VertexId> s);

/// SHA-256 (hex) of the canonical digraph encoding; the instance hash used
/// in reports and certificates. Independent of any "S:" line.
std::string digraph_sha256(const Digraph& d);

/// SHA-256 (hex) of arbitrary bytes.
std::string sha256_hex(std::string_view bytes);

}  // namespace ditrail
