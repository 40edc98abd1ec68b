#pragma once

#include <cstdint>
#include <string>

#include "nlcut/graph.hpp"

namespace nlcut {

// Unit-weight families with the degree measure.

/// Path on k vertices 0-1-...-(k-1).
Graph path_graph(int k);
/// Cycle on k >= 3 vertices.
Graph cycle_graph(int k);
Graph complete_graph(int k);
/// Star on k vertices: center 0 joined to leaves 1..k-1.
Graph star_graph(int k);
/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
Graph petersen_graph();
/// k triangles sharing the hub 2k; triangle i is a_i = i, b_i = k + i.
Graph star_triangle_graph(int k);
/// Uniform random recursive spanning tree plus each remaining pair with probability p.
Graph random_connected_graph(int n, double p, std::uint64_t seed);

/// Builds a family by name: path, cycle, complete, star, petersen, star_triangle.
/// Throws Error(invalid_argument) for an unknown family or a bad size.
Graph generate(const std::string& family, int k);

}  // namespace nlcut
