#pragma once

#include <iosfwd>
#include <string>

#include "girthpath/digraph.hpp"

namespace girthpath {

// Canonical edge-list text format: first non-comment line "n m", then m
// lines "u v" (0-based). '#' starts a comment anywhere on a line. Writers
// emit arcs sorted lexicographically with LF endings.
Digraph parse_edge_list(std::istream& in);            // throws parse_error
Digraph parse_edge_list_file(const std::string& path);
void write_edge_list(const Digraph& d, std::ostream& out);
std::string canonical_edge_list(const Digraph& d);

// DOT export for visualization; direction preserved, no styling contract.
void write_dot(const Digraph& d, std::ostream& out);

// FNV-1a 64-bit hash of the canonical edge list, as 16 hex digits.
std::string digest(const Digraph& d);
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace girthpath
