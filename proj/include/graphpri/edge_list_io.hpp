#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "graphpri/graph.hpp"

namespace graphpri {

// Raised on malformed edge-list input; the message carries file and line.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Text edge list: one "u v [weight]" per line, '#' starts a comment, weight
// defaults to 1. A "# nodes N" header pins the node count (and is how
// trailing isolated nodes survive a round trip); without it the count is
// max index + 1. node_count_override beats both.
Graph read_edge_list(std::istream& in, const std::string& name = "<stream>",
                     std::optional<int> node_count_override = std::nullopt);
Graph read_edge_list(const std::string& path,
                     std::optional<int> node_count_override = std::nullopt);

// Canonical form: "# nodes N" header, edges sorted by (min(u,v), max(u,v))
// with u < v per line, weight printed only when != 1 (12 significant
// digits). Reading it back reproduces node count, edge set and weights;
// edge order also round-trips whenever the edge list is already canonical,
// which holds for everything produced by this library.
std::string format_edge_list(const Graph& g);
void write_edge_list(const Graph& g, const std::string& path);

}  // namespace graphpri
