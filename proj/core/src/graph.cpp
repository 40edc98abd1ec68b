#include "nlcut/graph.hpp"

#include <algorithm>
#include <map>

#include "nlcut/errors.hpp"

namespace nlcut {

VertexSet::VertexSet(std::initializer_list<int> ids) {
  for (int v : ids) insert(v);
}

VertexSet VertexSet::from_ids(const std::vector<int>& ids) {
  VertexSet s;
  for (int v : ids) {
    if (v < 0 || v >= kMaxVertices) {
      throw Error(ErrorCode::invalid_argument, "vertex id " + std::to_string(v) + " out of range");
    }
    s.insert(v);
  }
  return s;
}

VertexSet VertexSet::full(int n) {
  if (n >= 64) return VertexSet(~std::uint64_t{0});
  return VertexSet((std::uint64_t{1} << n) - 1);
}

std::vector<int> VertexSet::ids() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(__builtin_ctzll(b));
  return out;
}

bool lex_less(VertexSet a, VertexSet b) {
  std::uint64_t x = a.bits_, y = b.bits_;
  while (x && y) {
    int p = __builtin_ctzll(x), q = __builtin_ctzll(y);
    if (p != q) return p < q;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

Graph::Graph(int n, const std::vector<Edge>& edges, std::optional<std::vector<Rational>> measure)
    : n_(n) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "negative vertex count");
  if (n > kMaxVertices) {
    throw Error(ErrorCode::too_large, "at most " + std::to_string(kMaxVertices) + " vertices");
  }
  std::map<std::pair<int, int>, Rational> merged;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(ErrorCode::invalid_argument,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range");
    }
    if (e.u == e.v) throw Error(ErrorCode::self_loop, "vertex " + std::to_string(e.u));
    if (e.w <= 0) {
      throw Error(ErrorCode::negative_weight, "edge (" + std::to_string(e.u) + "," +
                                                  std::to_string(e.v) + ") has weight " +
                                                  to_string(e.w));
    }
    merged[{std::min(e.u, e.v), std::max(e.u, e.v)}] += e.w;
  }

  adj_.resize(n);
  neighbor_mask_.resize(n);
  degree_.assign(n, Rational(0));
  for (const auto& [key, w] : merged) {
    int id = static_cast<int>(edges_.size());
    edges_.push_back({key.first, key.second, w});
    adj_[key.first].push_back({key.second, id});
    adj_[key.second].push_back({key.first, id});
    neighbor_mask_[key.first].insert(key.second);
    neighbor_mask_[key.second].insert(key.first);
    degree_[key.first] += w;
    degree_[key.second] += w;
    twice_edge_weight_ += 2 * w;
    if (w != 1) unit_weights_ = false;
  }

  if (measure) {
    if (static_cast<int>(measure->size()) != n) {
      throw Error(ErrorCode::invalid_argument, "measure length differs from vertex count");
    }
    for (int i = 0; i < n; ++i) {
      if ((*measure)[i] < 0) {
        throw Error(ErrorCode::negative_weight, "measure of vertex " + std::to_string(i));
      }
    }
    mu_ = std::move(*measure);
    measure_is_degree_ = mu_ == degree_;
  } else {
    mu_ = degree_;
  }
  for (const Rational& m : mu_) total_volume_ += m;
}

Graph Graph::with_measure(const std::vector<Rational>& measure) const {
  return Graph(n_, edges_, measure);
}

Rational vol(const Graph& g, VertexSet s) {
  Rational total;
  for (int v : s.ids()) total += g.mu(v);
  return total;
}

Rational cut_weight(const Graph& g, VertexSet a, VertexSet b) {
  if (a.intersects(b)) throw Error(ErrorCode::overlapping_sets, to_string(a) + " and " + to_string(b));
  Rational total;
  for (const Edge& e : g.edges()) {
    if ((a.contains(e.u) && b.contains(e.v)) || (a.contains(e.v) && b.contains(e.u))) total += e.w;
  }
  return total;
}

Rational boundary(const Graph& g, VertexSet s) { return cut_weight(g, s, s.complement(g.n())); }

Rational inner_weight(const Graph& g, VertexSet s) {
  Rational total;
  for (const Edge& e : g.edges()) {
    if (s.contains(e.u) && s.contains(e.v)) total += e.w;
  }
  return total;
}

std::vector<VertexSet> connected_components(const Graph& g, VertexSet s) {
  std::vector<VertexSet> out;
  VertexSet left = s;
  while (!left.empty()) {
    VertexSet comp({left.first()});
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier.ids()) next = next | g.neighbor_set(v);
      next = (next & left) - comp;
      comp = comp | next;
      frontier = next;
    }
    out.push_back(comp);
    left = left - comp;
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.n() <= 1 || connected_components(g, g.vertices()).size() == 1;
}

std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s.ids()) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace nlcut
