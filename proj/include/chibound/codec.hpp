#pragma once

#include "chibound/graph.hpp"

#include <string>
#include <string_view>

namespace chibound {

/// Decode one graph6 line (a trailing "\n" or "\r\n" is tolerated).
///
/// Throws InvalidInput on a malformed size header, on characters outside
/// 63..126, on a payload that is too short, on trailing bytes past the
/// payload, and on non-zero padding bits.
Graph graph6_decode(std::string_view text);

/// Canonical graph6 string, without a trailing newline.
std::string graph6_encode(const Graph& g);

/// Parse DIMACS .col text: "c" comments, one "p edge n m" line, "e u v" lines
/// with 1-based endpoints. Duplicate edges collapse; self-loops are rejected.
Graph dimacs_read(std::string_view text);

/// "p edge n m" followed by one "e u v" line per edge (u < v, sorted).
std::string dimacs_write(const Graph& g);

}  // namespace chibound
