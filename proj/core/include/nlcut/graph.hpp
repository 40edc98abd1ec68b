#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nlcut/rational.hpp"

namespace nlcut {

constexpr int kMaxVertices = 64;

/// Subset of [0, n) packed into a 64-bit mask.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> ids);

  static VertexSet from_ids(const std::vector<int>& ids);
  static VertexSet full(int n);

  bool contains(int v) const { return (bits_ >> v) & 1u; }
  void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcountll(bits_); }
  std::uint64_t bits() const { return bits_; }

  /// Smallest member, or -1 when empty.
  int first() const { return bits_ ? __builtin_ctzll(bits_) : -1; }

  std::vector<int> ids() const;
  VertexSet complement(int n) const { return VertexSet(full(n).bits_ & ~bits_); }

  VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  friend bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
  friend bool operator!=(VertexSet a, VertexSet b) { return a.bits_ != b.bits_; }

  /// Orders by sorted id list, lexicographically.
  friend bool lex_less(VertexSet a, VertexSet b);

 private:
  std::uint64_t bits_ = 0;
};

struct SetPair {
  VertexSet a;
  VertexSet b;
};

struct Edge {
  int u;
  int v;
  Rational w;
};

struct Neighbor {
  int vertex;
  int edge;
};

/// Undirected graph with positive rational edge weights and a vertex measure.
/// Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Merges parallel edges by summing weights; rejects self-loops and
  /// non-positive weights. Without a measure, mu defaults to weighted degree.
  Graph(int n, const std::vector<Edge>& edges,
        std::optional<std::vector<Rational>> measure = std::nullopt);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Neighbor>& neighbors(int v) const { return adj_[v]; }
  const std::vector<Rational>& mu() const { return mu_; }
  const Rational& mu(int v) const { return mu_[v]; }
  const Rational& degree(int v) const { return degree_[v]; }
  VertexSet neighbor_set(int v) const { return neighbor_mask_[v]; }
  bool adjacent(int u, int v) const { return neighbor_mask_[u].contains(v); }
  VertexSet vertices() const { return VertexSet::full(n_); }

  /// Sum of all vertex measures.
  const Rational& total_volume() const { return total_volume_; }
  /// Twice the total edge weight.
  const Rational& twice_edge_weight() const { return twice_edge_weight_; }
  bool measure_is_degree() const { return measure_is_degree_; }
  bool unit_weights() const { return unit_weights_; }

  /// Same edges with the measure replaced.
  Graph with_measure(const std::vector<Rational>& measure) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adj_;
  std::vector<VertexSet> neighbor_mask_;
  std::vector<Rational> degree_;
  std::vector<Rational> mu_;
  Rational total_volume_;
  Rational twice_edge_weight_;
  bool measure_is_degree_ = true;
  bool unit_weights_ = true;
};

Rational vol(const Graph& g, VertexSet s);

/// Total weight of edges with one end in a and the other in b.
/// Throws OverlappingSets when a and b intersect.
Rational cut_weight(const Graph& g, VertexSet a, VertexSet b);

/// Weight of edges leaving s.
Rational boundary(const Graph& g, VertexSet s);

/// Weight of edges with both ends in s.
Rational inner_weight(const Graph& g, VertexSet s);

/// Components of the subgraph induced by s, ordered by smallest vertex id.
std::vector<VertexSet> connected_components(const Graph& g, VertexSet s);

bool is_connected(const Graph& g);

std::string to_string(VertexSet s);

}  // namespace nlcut
