#pragma once

#include <stdexcept>
#include <string>

#include "becurv/graph.hpp"

namespace becurv {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Edge-list text format:
//   e U V [W]   edge with optional weight (default 1.0)
//   v U         isolated vertex
//   m U X       vertex measure (custom preset only)
//   #...        comment; blank lines ignored; order-insensitive.
WeightedGraph parse_edge_list(const std::string& text, WeightedGraph::Preset preset);

// Canonical serialization: v lines for isolated vertices, then e lines
// sorted by endpoint, then m lines (custom preset only). Weight printed
// only when it differs from 1.0, using the shortest representation that
// round-trips through strtod. parse -> serialize is idempotent.
std::string serialize_edge_list(const WeightedGraph& g);

// graph6: N(n) header then the upper triangle column-major, 6 bits per
// character offset by 63. Decoding enforces a minimal-length header, valid
// characters, exact body length, and zero padding bits, so that
// encode(decode(s)) == s byte for byte.
std::string encode_graph6(const WeightedGraph& g);
WeightedGraph decode_graph6(const std::string& line,
                            WeightedGraph::Preset preset = WeightedGraph::Preset::non_normalized);

// Shortest decimal form of x that parses back to exactly x.
std::string format_double(double x);

}  // namespace becurv
