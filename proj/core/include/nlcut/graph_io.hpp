#pragma once

#include <string>
#include <string_view>

#include "nlcut/graph.hpp"

namespace nlcut {

/// Reads an edge list: one "u v [w]" per line, w defaults to 1, '#' starts a
/// comment, and an optional leading "n <count>" declares the vertex count.
/// Without the header, n is one more than the largest id.
Graph parse_graph(std::string_view text);

/// Canonical edge list with an "n" header; parse_graph(emit_graph(g)) == g.
std::string emit_graph(const Graph& g);

/// Reads "i mu_i" lines. Unlisted vertices get measure zero.
std::vector<Rational> parse_measure(std::string_view text, int n);

/// Reads "i value" lines. Unlisted vertices get zero.
RVector parse_vector(std::string_view text, int n);

std::string emit_vector(const RVector& x);

/// Text of a whole file; throws Error(invalid_argument) when unreadable.
std::string read_file(const std::string& path);

bool same_graph(const Graph& a, const Graph& b);

}  // namespace nlcut
