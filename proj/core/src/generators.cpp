#include "nlcut/generators.hpp"

#include <random>

#include "nlcut/errors.hpp"

namespace nlcut {

namespace {

void require_size(int k, int min, const char* family) {
  if (k < min) {
    throw Error(ErrorCode::invalid_argument,
                std::string(family) + " needs k >= " + std::to_string(min));
  }
}

Edge unit(int u, int v) { return {u, v, Rational(1)}; }

}  // namespace

Graph path_graph(int k) {
  require_size(k, 1, "path");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < k; ++i) edges.push_back(unit(i, i + 1));
  return Graph(k, edges);
}

Graph cycle_graph(int k) {
  require_size(k, 3, "cycle");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.push_back(unit(i, (i + 1) % k));
  return Graph(k, edges);
}

Graph complete_graph(int k) {
  require_size(k, 1, "complete");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) edges.push_back(unit(i, j));
  return Graph(k, edges);
}

Graph star_graph(int k) {
  require_size(k, 1, "star");
  std::vector<Edge> edges;
  for (int i = 1; i < k; ++i) edges.push_back(unit(0, i));
  return Graph(k, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back(unit(i, (i + 1) % 5));
    edges.push_back(unit(5 + i, 5 + (i + 2) % 5));
    edges.push_back(unit(i, i + 5));
  }
  return Graph(10, edges);
}

Graph star_triangle_graph(int k) {
  require_size(k, 1, "star_triangle");
  int hub = 2 * k;
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    edges.push_back(unit(i, hub));
    edges.push_back(unit(k + i, hub));
    edges.push_back(unit(i, k + i));
  }
  return Graph(2 * k + 1, edges);
}

Graph random_connected_graph(int n, double p, std::uint64_t seed) {
  require_size(n, 1, "random");
  if (p < 0.0 || p > 1.0) throw Error(ErrorCode::invalid_argument, "edge probability outside [0,1]");
  // Raw engine output keeps the graph identical across standard libraries.
  std::mt19937_64 rng(seed);
  auto uniform01 = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    int u = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
    present[u][v] = true;
    edges.push_back(unit(u, v));
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (present[u][v]) continue;
      if (uniform01() < p) edges.push_back(unit(u, v));
    }
  }
  return Graph(n, edges);
}

Graph generate(const std::string& family, int k) {
  if (family == "path") return path_graph(k);
  if (family == "cycle") return cycle_graph(k);
  if (family == "complete") return complete_graph(k);
  if (family == "star") return star_graph(k);
  if (family == "petersen") return petersen_graph();
  if (family == "star_triangle") return star_triangle_graph(k);
  throw Error(ErrorCode::invalid_argument, "unknown graph family '" + family + "'");
}

}  // namespace nlcut
