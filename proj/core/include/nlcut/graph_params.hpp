#pragma once

#include <optional>

#include "nlcut/graph.hpp"

namespace nlcut {

struct GraphParams {
  int alpha = 0;
  int matching = 0;
  /// n - matching; empty when some vertex is isolated.
  std::optional<int> edge_cover;
  bool is_bipartite = false;
  bool is_forest = false;
};

/// Combinatorial parameters, ignoring edge weights. Throws TooLarge above cap vertices.
GraphParams graph_params(const Graph& g, int cap = 24);

int independence_number(const Graph& g, int cap = 24);
int matching_number(const Graph& g, int cap = 24);
/// Throws IsolatedVertex when no edge cover exists.
int edge_cover_number(const Graph& g, int cap = 24);
bool is_bipartite(const Graph& g);
bool is_forest(const Graph& g);

}  // namespace nlcut
