#include "nlcut/oracles.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <thread>

#include "nlcut/errors.hpp"

namespace nlcut {

namespace {

constexpr int kSubsetCap = 20;
constexpr int kPairCap = 14;
constexpr int kWayCap = 12;
constexpr int kBlockCap = 12;

int effective_cap(const EnumerationConfig& cfg, int fallback) { return cfg.cap.value_or(fallback); }

void check_cap(const Graph& g, int cap, const char* what) {
  if (g.n() > cap) {
    throw Error(ErrorCode::too_large, std::string(what) + ": n = " + std::to_string(g.n()) +
                                          " exceeds cap " + std::to_string(cap));
  }
}

void require_two_vertices(const Graph& g, const char* what) {
  if (g.n() < 2) throw Error(ErrorCode::invalid_argument, std::string(what) + " needs n >= 2");
}

struct Best {
  bool valid = false;
  Rational value;
  std::vector<VertexSet> sets;
};

bool improves(const Best& b, const Rational& value, bool maximize) {
  if (!b.valid) return true;
  return maximize ? value > b.value : value < b.value;
}

void offer(Best& b, const Rational& value, std::vector<VertexSet> sets, bool maximize) {
  if (improves(b, value, maximize) || (value == b.value && lex_less(sets, b.sets))) {
    b.valid = true;
    b.value = value;
    b.sets = std::move(sets);
  }
}

void merge(Best& into, const Best& other, bool maximize) {
  if (other.valid) offer(into, other.value, other.sets, maximize);
}

/// Splits [0, count) into contiguous chunks, one per worker, and merges the
/// per-chunk optima in chunk order.
Best parallel_search(std::uint64_t count, int workers, bool maximize,
                     const std::function<void(std::uint64_t, Best&)>& visit) {
  workers = std::max(1, workers);
  if (workers == 1 || count < 2) {
    Best best;
    for (std::uint64_t i = 0; i < count; ++i) visit(i, best);
    return best;
  }
  std::uint64_t chunks = std::min<std::uint64_t>(workers, count);
  std::vector<Best> partial(chunks);
  std::vector<std::thread> threads;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    std::uint64_t begin = count * c / chunks, end = count * (c + 1) / chunks;
    threads.emplace_back([&, c, begin, end] {
      for (std::uint64_t i = begin; i < end; ++i) visit(i, partial[c]);
    });
  }
  for (auto& t : threads) t.join();
  Best best;
  for (const Best& p : partial) merge(best, p, maximize);
  return best;
}

/// Edge weights between the classes of a set pair.
struct PairCounts {
  Rational between;  // |E(A,B)|
  Rational inner_a;  // weight inside A
  Rational inner_b;
  Rational outward;  // |E(A u B, rest)|
};

PairCounts pair_counts(const Graph& g, VertexSet a, VertexSet b) {
  PairCounts c;
  for (const Edge& e : g.edges()) {
    bool ua = a.contains(e.u), ub = b.contains(e.u);
    bool va = a.contains(e.v), vb = b.contains(e.v);
    bool uin = ua || ub, vin = va || vb;
    if ((ua && vb) || (ub && va)) {
      c.between += e.w;
    } else if (ua && va) {
      c.inner_a += e.w;
    } else if (ub && vb) {
      c.inner_b += e.w;
    } else if (uin != vin) {
      c.outward += e.w;
    }
  }
  return c;
}

Rational subset_cut(const Graph& g, VertexSet s) {
  Rational total;
  for (const Edge& e : g.edges()) {
    if (s.contains(e.u) != s.contains(e.v)) total += e.w;
  }
  return total;
}

enum class SubsetObjective { cheeger, maxcut, mincut, anti };

CutCertificate subset_oracle(const Graph& g, SubsetObjective what, const EnumerationConfig& cfg,
                             const char* name) {
  require_two_vertices(g, name);
  check_cap(g, effective_cap(cfg, kSubsetCap), name);
  const int n = g.n();
  const Rational& total = g.total_volume();
  if (what != SubsetObjective::cheeger && total == 0) throw Error(ErrorCode::zero_measure, name);
  bool maximize = what == SubsetObjective::maxcut || what == SubsetObjective::anti;
  const VertexSet everything = g.vertices();

  // Vertex 0 always lies in S; S = V is excluded.
  std::uint64_t count = std::uint64_t{1} << (n - 1);
  Best best = parallel_search(count, cfg.workers, maximize, [&](std::uint64_t i, Best& local) {
    VertexSet s((i << 1) | 1u);
    if (s == everything) return;
    Rational cut = subset_cut(g, s);
    Rational value;
    switch (what) {
      case SubsetObjective::cheeger: {
        Rational vs = vol(g, s);
        Rational small = std::min(vs, Rational(total - vs));
        if (small == 0) return;
        value = cut / small;
        break;
      }
      case SubsetObjective::maxcut:
      case SubsetObjective::mincut:
        value = 2 * cut / total;
        break;
      case SubsetObjective::anti: {
        Rational vs = vol(g, s);
        Rational large = std::max(vs, Rational(total - vs));
        value = cut / large;
        break;
      }
    }
    if (!improves(local, value, maximize) && value != local.value) return;
    offer(local, value, {s, everything - s}, maximize);
  });
  if (!best.valid) throw Error(ErrorCode::degenerate_denominator, std::string(name) + ": no admissible cut");
  return {CertificateKind::subset, best.sets, best.value};
}

/// Visits every set pair (A, B) with A u B nonempty: supports in index order,
/// then A over the submasks of the support.
CutCertificate pair_oracle(const Graph& g, bool maximize, const EnumerationConfig& cfg, const char* name,
                           const std::function<bool(VertexSet, VertexSet, Rational&)>& value_of) {
  check_cap(g, effective_cap(cfg, kPairCap), name);
  std::uint64_t count = std::uint64_t{1} << g.n();
  Best best = parallel_search(count, cfg.workers, maximize, [&](std::uint64_t u, Best& local) {
    if (u == 0) return;
    Rational value;
    std::uint64_t a = u;
    while (true) {
      VertexSet sa(a), sb(u & ~a);
      if (value_of(sa, sb, value) && (improves(local, value, maximize) || value == local.value)) {
        offer(local, value, {sa, sb}, maximize);
      }
      if (a == 0) break;
      a = (a - 1) & u;
    }
  });
  if (!best.valid) throw Error(ErrorCode::degenerate_denominator, std::string(name) + ": no admissible pair");
  return {CertificateKind::set_pair, best.sets, best.value};
}

}  // namespace

const char* to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::subset: return "subset";
    case CertificateKind::set_pair: return "set_pair";
    case CertificateKind::subpartition: return "subpartition";
    case CertificateKind::partition: return "partition";
  }
  return "?";
}

bool lex_less(const std::vector<VertexSet>& a, const std::vector<VertexSet>& b) {
  std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (a[i] != b[i]) return lex_less(a[i], b[i]);
  }
  return a.size() < b.size();
}

CutCertificate cheeger(const Graph& g, const EnumerationConfig& cfg) {
  if (!is_connected(g)) throw Error(ErrorCode::disconnected, "cheeger constant needs a connected graph");
  return subset_oracle(g, SubsetObjective::cheeger, cfg, "cheeger");
}

CutCertificate maxcut(const Graph& g, const EnumerationConfig& cfg) {
  return subset_oracle(g, SubsetObjective::maxcut, cfg, "maxcut");
}

CutCertificate mincut(const Graph& g, const EnumerationConfig& cfg) {
  return subset_oracle(g, SubsetObjective::mincut, cfg, "mincut");
}

CutCertificate anti_cheeger(const Graph& g, const EnumerationConfig& cfg) {
  return subset_oracle(g, SubsetObjective::anti, cfg, "anti_cheeger");
}

CutCertificate dual_cheeger(const Graph& g, const EnumerationConfig& cfg) {
  return pair_oracle(g, true, cfg, "dual_cheeger", [&](VertexSet a, VertexSet b, Rational& out) {
    Rational volume = vol(g, a | b);
    if (volume == 0) return false;
    out = 2 * cut_weight(g, a, b) / volume;
    return true;
  });
}

CutCertificate modified_dual_cheeger(const Graph& g, const EnumerationConfig& cfg) {
  return pair_oracle(g, true, cfg, "modified_dual_cheeger", [&](VertexSet a, VertexSet b, Rational& out) {
    PairCounts c = pair_counts(g, a, b);
    Rational den = vol(g, a | b) + c.outward;
    if (den == 0) return false;
    out = (2 * c.between + c.outward) / den;
    return true;
  });
}

CutCertificate k_way_dual_cheeger(const Graph& g, int k, const EnumerationConfig& cfg) {
  const int n = g.n();
  if (k < 1 || k > n) throw Error(ErrorCode::bad_k, "k = " + std::to_string(k) + " outside [1, n]");
  check_cap(g, effective_cap(cfg, kWayCap), "k_way_dual_cheeger");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;

  // Best single pair ratio on each support.
  std::vector<bool> usable(full + 1, false);
  std::vector<Rational> ratio(full + 1);
  std::vector<std::uint64_t> split(full + 1, 0);
  for (std::uint64_t u = 1; u <= full; ++u) {
    Rational volume = vol(g, VertexSet(u));
    if (volume == 0) continue;
    Best best;
    std::uint64_t a = u;
    while (true) {
      VertexSet sa(a), sb(u & ~a);
      Rational value = 2 * cut_weight(g, sa, sb) / volume;
      if (improves(best, value, true) || value == best.value) offer(best, value, {sa, sb}, true);
      if (a == 0) break;
      a = (a - 1) & u;
    }
    usable[u] = true;
    ratio[u] = best.value;
    split[u] = best.sets[0].bits();
  }

  // layer[j][m]: best min-ratio of j disjoint usable supports inside m.
  std::vector<std::vector<bool>> feasible(k + 1, std::vector<bool>(full + 1, false));
  std::vector<std::vector<Rational>> layer(k + 1, std::vector<Rational>(full + 1));
  std::fill(feasible[0].begin(), feasible[0].end(), true);
  for (int j = 1; j <= k; ++j) {
    for (std::uint64_t m = 1; m <= full; ++m) {
      std::uint64_t low = m & (~m + 1);
      std::uint64_t rest = m & ~low;
      bool ok = feasible[j][rest];
      Rational best = ok ? layer[j][rest] : Rational(0);
      for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
        std::uint64_t u = sub | low;
        if (usable[u] && feasible[j - 1][m & ~u]) {
          Rational value = j == 1 ? ratio[u] : std::min(ratio[u], layer[j - 1][m & ~u]);
          if (!ok || value > best) {
            ok = true;
            best = value;
          }
        }
        if (sub == 0) break;
      }
      feasible[j][m] = ok;
      layer[j][m] = best;
    }
  }
  if (!feasible[k][full]) {
    throw Error(ErrorCode::bad_k, "fewer than " + std::to_string(k) + " disjoint supports of positive volume");
  }

  // Walk back along the first choice matching each optimum.
  CutCertificate cert{CertificateKind::set_pair, {}, layer[k][full]};
  std::uint64_t m = full;
  for (int j = k; j >= 1; --j) {
    const Rational& target = layer[j][m];
    while (true) {
      std::uint64_t low = m & (~m + 1);
      std::uint64_t rest = m & ~low;
      std::uint64_t chosen = 0;
      for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
        std::uint64_t u = sub | low;
        if (usable[u] && feasible[j - 1][m & ~u]) {
          Rational value = j == 1 ? ratio[u] : std::min(ratio[u], layer[j - 1][m & ~u]);
          if (value == target) {
            chosen = u;
            break;
          }
        }
        if (sub == 0) break;
      }
      if (chosen != 0) {
        cert.sets.push_back(VertexSet(split[chosen]));
        cert.sets.push_back(VertexSet(chosen & ~split[chosen]));
        m &= ~chosen;
        break;
      }
      m = rest;
    }
  }
  return cert;
}

CutCertificate minmax_k_cut(const Graph& g, int k, bool require_partition, const EnumerationConfig& cfg) {
  const int n = g.n();
  if (k < 1 || k > n) throw Error(ErrorCode::bad_k, "k = " + std::to_string(k) + " outside [1, n]");
  check_cap(g, effective_cap(cfg, kBlockCap), "minmax_k_cut");

  // label[v] = 0 for V0, 1..k for blocks numbered by first appearance.
  std::vector<int> label(n, 0);
  std::vector<std::vector<Rational>> between(k + 1, std::vector<Rational>(k + 1));
  Best best;

  auto evaluate = [&] {
    for (auto& row : between)
      for (auto& cell : row) cell = 0;
    for (const Edge& e : g.edges()) {
      int a = label[e.u], b = label[e.v];
      if (a != b) {
        between[a][b] += e.w;
        between[b][a] += e.w;
      }
    }
    Rational worst;
    // Block 1 stays outside S; S and its complement give the same sum.
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << (k - 1)); ++s) {
      std::uint64_t in = s << 1;
      Rational sum;
      for (int i = 1; i <= k; ++i) {
        if (!((in >> (i - 1)) & 1u)) continue;
        for (int j = 1; j <= k; ++j) {
          if (!((in >> (j - 1)) & 1u)) sum += between[i][j];
        }
      }
      if (sum > worst) worst = sum;
    }
    Rational value = 2 * worst;
    for (int i = 1; i <= k; ++i) value += between[i][0];
    if (!improves(best, value, false) && value != best.value) return;
    std::vector<VertexSet> blocks(k);
    for (int v = 0; v < n; ++v) {
      if (label[v] > 0) blocks[label[v] - 1].insert(v);
    }
    offer(best, value, std::move(blocks), false);
  };

  std::function<void(int, int)> assign = [&](int v, int used) {
    if (k - used > n - v) return;
    if (v == n) {
      if (used == k) evaluate();
      return;
    }
    if (!require_partition) {
      label[v] = 0;
      assign(v + 1, used);
    }
    for (int b = 1; b <= std::min(used + 1, k); ++b) {
      label[v] = b;
      assign(v + 1, std::max(used, b));
    }
  };
  assign(0, 0);

  return {require_partition ? CertificateKind::partition : CertificateKind::subpartition, best.sets,
          best.value};
}

CutCertificate ratio_oracle(ProblemId id, const Graph& g, const EnumerationConfig& cfg) {
  const Rational& total = g.total_volume();
  const Rational& e = g.twice_edge_weight();
  auto median_dev = [&](VertexSet a, VertexSet b) {
    // Ternary vector with values 1 on a, -1 on b, 0 elsewhere; try t in {-1, 0, 1}.
    Rational va = vol(g, a), vb = vol(g, b);
    Rational vr = total - va - vb;
    Rational at_zero = va + vb;
    Rational at_plus = 2 * vb + vr;
    Rational at_minus = 2 * va + vr;
    return std::min({at_zero, at_plus, at_minus});
  };

  switch (id) {
    case ProblemId::cheeger_tv:
      return pair_oracle(g, false, cfg, "cheeger_tv", [&](VertexSet a, VertexSet b, Rational& out) {
        Rational den = median_dev(a, b);
        if (den == 0) return false;
        PairCounts c = pair_counts(g, a, b);
        out = (2 * c.between + c.outward) / den;
        return true;
      });
    case ProblemId::cheeger_new:
      return pair_oracle(g, false, cfg, "cheeger_new", [&](VertexSet a, VertexSet b, Rational& out) {
        Rational den = median_dev(a, b);
        if (den == 0) return false;
        PairCounts c = pair_counts(g, a, b);
        out = (e - 2 * c.inner_a - 2 * c.inner_b - c.outward) / den;
        return true;
      });
    case ProblemId::dual:
      return pair_oracle(g, false, cfg, "dual", [&](VertexSet a, VertexSet b, Rational& out) {
        Rational den = vol(g, a | b);
        if (den == 0) return false;
        PairCounts c = pair_counts(g, a, b);
        out = (2 * c.inner_a + 2 * c.inner_b + c.outward) / den;
        return true;
      });
    case ProblemId::mdual:
      return pair_oracle(g, false, cfg, "mdual", [&](VertexSet a, VertexSet b, Rational& out) {
        PairCounts c = pair_counts(g, a, b);
        Rational num = 2 * c.inner_a + 2 * c.inner_b + c.outward;
        Rational den = num + 2 * c.between + c.outward;
        if (den == 0) return false;
        out = num / den;
        return true;
      });
    case ProblemId::maxcut_ratio:
      if (total == 0) throw Error(ErrorCode::zero_measure, "maxcut_ratio");
      return pair_oracle(g, true, cfg, "maxcut_ratio", [&](VertexSet a, VertexSet b, Rational& out) {
        PairCounts c = pair_counts(g, a, b);
        out = (2 * c.between + c.outward) / total;
        return true;
      });
    case ProblemId::anti:
      return pair_oracle(g, true, cfg, "anti", [&](VertexSet a, VertexSet b, Rational& out) {
        Rational den = 2 * total - median_dev(a, b);
        if (den == 0) return false;
        PairCounts c = pair_counts(g, a, b);
        out = (2 * c.between + c.outward) / den;
        return true;
      });
  }
  throw Error(ErrorCode::unknown_problem, "unregistered ratio");
}

}  // namespace nlcut
