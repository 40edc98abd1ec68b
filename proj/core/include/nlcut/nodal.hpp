#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nlcut/eigen.hpp"
#include "nlcut/graph.hpp"

namespace nlcut {

enum class NodalConvention { sign_based, support_based, sup_norm_based };

const char* to_string(NodalConvention c);
/// Accepts sign_based, support_based, sup_norm_based and the short forms sign, support, sup_norm.
NodalConvention parse_convention(const std::string& name);

/// One connected component of {x = +|x|_inf} u {x = -|x|_inf}, split by sign.
struct SupNormComponent {
  VertexSet a;  // inside D+
  VertexSet b;  // inside D-
};

/// Domain statistics of a vector. All sets are connected components of the
/// subgraph induced by their defining vertex set, ordered by smallest id.
struct NodalReport {
  NodalConvention convention = NodalConvention::sign_based;
  std::vector<VertexSet> strong_pos;       // components of {x > 0}
  std::vector<VertexSet> strong_neg;       // components of {x < 0}
  std::vector<VertexSet> support_domains;  // components of {x != 0}
  VertexSet d_plus, d_minus, d_zero;
  /// Domains counted by S under the chosen convention.
  std::vector<VertexSet> pm_domains;
  /// Components of the complement of the counted domains; S0 counts them.
  std::vector<VertexSet> null_domains;
  std::vector<SupNormComponent> sup_components;
  int S = 0;
  int S0 = 0;
  int Sprime = 0;
  /// Null components with at least two vertices.
  int N_nonsingleton = 0;
};

/// sign_based counts components of {x > 0} and {x < 0} against {x = 0};
/// support_based counts components of the support against {x = 0};
/// sup_norm_based counts components of D+ and D- against D0.
/// The remaining fields are filled under every convention. Throws ZeroVector.
NodalReport analyze(const Graph& g, const RVector& x, NodalConvention convention);

/// |E(D+, w)| == |E(D-, w)| for every component w of D0.
/// Requires a verified maxcut_inf report; throws NotVerified otherwise.
bool check_null_symmetry(const Graph& g, const EigenpairReport& report);

struct StructureCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct StructureOptions {
  /// Variational index and multiplicity for the Courant-type counts.
  std::optional<int> k;
  std::optional<int> r;
  /// Largest S' for which every sign flip is re-verified.
  int flip_cap = 16;
};

struct StructureReport {
  NodalReport nodal;
  std::vector<StructureCheck> checks;
  bool all_hold() const;
};

/// Structure of an eigenvector at the largest eigenvalue. For maxcut_inf:
/// domain split, |boundary A_i| = |boundary B_i|, per-vertex balance on D0,
/// sign-flip closure, D0 edgeless and S' <= (n-1)/2. For anti_cheeger: D0
/// edgeless and |D0| <= 1 when some median lies strictly inside
/// (-|x|_inf, |x|_inf). The caller is responsible for the eigenvalue being
/// the largest. Throws NotVerified for an unverified report and
/// an InvalidArgument error for other problems.
StructureReport check_max_eigvec_structure(const Graph& g, const EigenpairReport& report,
                                           const StructureOptions& opts = {});

/// S <= k + r - 1 and S0 <= k + r - 2 under the sup-norm convention.
std::vector<StructureCheck> courant_checks(const NodalReport& nodal, int k, int r);

}  // namespace nlcut
