#pragma once

#include <optional>
#include <vector>

#include "nlcut/functionals.hpp"
#include "nlcut/graph.hpp"

namespace nlcut {

enum class CertificateKind { subset, set_pair, subpartition, partition };

const char* to_string(CertificateKind kind);

/// Optimal sets of an exhaustive search together with the optimal value.
/// subset: [S, S^c]; set_pair: [V1, V2]; k-way: [V1, V2, V3, V4, ...];
/// subpartition / partition: the k blocks, with V0 implied.
struct CutCertificate {
  CertificateKind kind = CertificateKind::subset;
  std::vector<VertexSet> sets;
  Rational value;
};

/// Orders certificates by their sorted id lists, lexicographically.
bool lex_less(const std::vector<VertexSet>& a, const std::vector<VertexSet>& b);

struct EnumerationConfig {
  /// Largest n accepted; unset means the oracle's own default.
  std::optional<int> cap;
  /// Threads splitting the enumeration; results do not depend on it.
  int workers = 1;
};

/// min |E(S,S^c)| / min(vol S, vol S^c). Requires a connected graph.
CutCertificate cheeger(const Graph& g, const EnumerationConfig& cfg = {});
/// max 2|E(S,S^c)| / vol(V).
CutCertificate maxcut(const Graph& g, const EnumerationConfig& cfg = {});
/// min 2|E(S,S^c)| / vol(V) over S not in {empty, V}.
CutCertificate mincut(const Graph& g, const EnumerationConfig& cfg = {});
/// max |E(S,S^c)| / max(vol S, vol S^c).
CutCertificate anti_cheeger(const Graph& g, const EnumerationConfig& cfg = {});
/// max 2|E(V1,V2)| / vol(V1 u V2) over disjoint pairs.
CutCertificate dual_cheeger(const Graph& g, const EnumerationConfig& cfg = {});
/// max (2|E(V1,V2)| + |boundary U|) / (vol U + |boundary U|), U = V1 u V2.
CutCertificate modified_dual_cheeger(const Graph& g, const EnumerationConfig& cfg = {});
/// Best worst-pair dual ratio over k disjoint set pairs with nonempty unions.
CutCertificate k_way_dual_cheeger(const Graph& g, int k, const EnumerationConfig& cfg = {});
/// Min over k nonempty disjoint blocks (covering V when require_partition) of
/// 2 max_S sum_{i in S, j not in S} |E(V_i,V_j)| + sum_i |E(V_i,V_0)|.
CutCertificate minmax_k_cut(const Graph& g, int k, bool require_partition,
                            const EnumerationConfig& cfg = {});

/// Optimum of the problem's ratio over all nonzero vectors 1_A - 1_B, from
/// closed-form set-pair counts.
CutCertificate ratio_oracle(ProblemId id, const Graph& g, const EnumerationConfig& cfg = {});

}  // namespace nlcut
