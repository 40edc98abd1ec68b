#include "nlcut/graph_params.hpp"

#include <unordered_map>

#include "nlcut/errors.hpp"

namespace nlcut {

namespace {

void check_cap(const Graph& g, int cap) {
  if (g.n() > cap) {
    throw Error(ErrorCode::too_large, "n = " + std::to_string(g.n()) + " exceeds cap " + std::to_string(cap));
  }
}

void max_independent(const Graph& g, VertexSet candidates, int taken, int& best) {
  if (candidates.empty()) {
    best = std::max(best, taken);
    return;
  }
  if (taken + candidates.size() <= best) return;
  int v = candidates.first();
  VertexSet rest = candidates - VertexSet({v});
  VertexSet nb = g.neighbor_set(v) & rest;
  max_independent(g, rest - nb, taken + 1, best);
  if (!nb.empty()) max_independent(g, rest, taken, best);
}

int max_matching(const Graph& g, VertexSet left, std::unordered_map<std::uint64_t, int>& memo) {
  if (left.size() < 2) return 0;
  if (auto it = memo.find(left.bits()); it != memo.end()) return it->second;
  int v = left.first();
  VertexSet rest = left - VertexSet({v});
  int best = max_matching(g, rest, memo);
  for (int u : (g.neighbor_set(v) & rest).ids()) {
    best = std::max(best, 1 + max_matching(g, rest - VertexSet({u}), memo));
  }
  memo.emplace(left.bits(), best);
  return best;
}

}  // namespace

int independence_number(const Graph& g, int cap) {
  check_cap(g, cap);
  int best = 0;
  max_independent(g, g.vertices(), 0, best);
  return best;
}

int matching_number(const Graph& g, int cap) {
  check_cap(g, cap);
  std::unordered_map<std::uint64_t, int> memo;
  return max_matching(g, g.vertices(), memo);
}

int edge_cover_number(const Graph& g, int cap) {
  for (int v = 0; v < g.n(); ++v) {
    if (g.neighbors(v).empty()) throw Error(ErrorCode::isolated_vertex, "vertex " + std::to_string(v));
  }
  return g.n() - matching_number(g, cap);
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Neighbor& nb : g.neighbors(v)) {
        if (color[nb.vertex] == -1) {
          color[nb.vertex] = 1 - color[v];
          stack.push_back(nb.vertex);
        } else if (color[nb.vertex] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_forest(const Graph& g) {
  auto components = connected_components(g, g.vertices());
  return g.m() == g.n() - static_cast<int>(components.size());
}

GraphParams graph_params(const Graph& g, int cap) {
  GraphParams p;
  p.alpha = independence_number(g, cap);
  p.matching = matching_number(g, cap);
  bool isolated = false;
  for (int v = 0; v < g.n(); ++v) isolated = isolated || g.neighbors(v).empty();
  if (!isolated) p.edge_cover = g.n() - p.matching;
  p.is_bipartite = is_bipartite(g);
  p.is_forest = is_forest(g);
  return p;
}

}  // namespace nlcut
