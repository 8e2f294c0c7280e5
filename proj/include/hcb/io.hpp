// Parsing and output helpers shared by the CLI: rational vectors on the
// command line, git-style blob hashes for config echoes, CSV assembly.
#pragma once

#include <string>
#include <vector>

#include "hcb/geometry.hpp"
#include "hcb/numeric.hpp"

namespace hcb {

/// Comma-separated rationals, e.g. "0,1/3" -> {0, 1/3}.
std::vector<Rational> parse_rational_vector(const std::string& text);

PointQ parse_point(const std::string& text);
DirectionQ parse_direction(const std::string& text);

/// SHA-1 of "blob <len>\0<content>", hex-encoded; matches `git hash-object`.
std::string git_blob_sha1(const std::string& content);

/// Escapes a CSV field when needed (commas, quotes, newlines).
std::string csv_field(const std::string& value);

}  // namespace hcb
