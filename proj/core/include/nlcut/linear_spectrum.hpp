#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nlcut/graph.hpp"

namespace nlcut {

struct Spectrum {
  /// Ascending.
  std::vector<double> eigenvalues;
  /// Orthonormal eigenvectors, column j paired with eigenvalues[j].
  std::optional<std::vector<std::vector<double>>> eigenvectors;
  /// Largest |A v - lambda v|_inf over the returned pairs.
  double residual_bound = 0;
};

/// Eigenvalues of I - D^{-1/2} W D^{-1/2}, D the weighted degrees, by cyclic
/// Jacobi rotations until the off-diagonal norm drops below 1e-12.
/// Throws IsolatedVertex.
Spectrum normalized_laplacian_spectrum(const Graph& g, bool with_vectors = false);

constexpr double kSpectralTolerance = 1e-9;

/// lhs <= mid <= rhs, compared in floating point with an absolute tolerance.
/// Exact forms of rational sides are kept as strings when available.
struct InequalityReport {
  std::string name;
  std::optional<int> k;
  double lhs = 0, mid = 0, rhs = 0;
  std::string lhs_exact, mid_exact, rhs_exact;
  bool holds = false;
  /// min(mid - lhs, rhs - mid).
  double slack = 0;
};

enum class InequalityKind { cheeger, dual, delorme_poljak, kway, forest, multiplicity };

const char* to_string(InequalityKind kind);
/// Parses one kind; "all" is handled by the caller.
InequalityKind parse_inequality_kind(const std::string& name);
const std::vector<InequalityKind>& all_inequality_kinds();

struct InequalityOptions {
  std::vector<InequalityKind> kinds = all_inequality_kinds();
  std::optional<int> cap;
  int workers = 1;
};

/// Classical two-sided bounds evaluated with exact oracle constants against
/// the floating-point spectrum. Degree measure throughout. Forest checks run
/// only on forests; the k-way checks scan signless eigenpairs.
std::vector<InequalityReport> inequality_suite(const Graph& g, const InequalityOptions& opts = {});

/// alpha <= eta (edge cover number), with equality required on connected
/// bipartite graphs. Reported as lhs = alpha, mid = rhs = eta.
InequalityReport multiplicity_bounds_check(const Graph& g, int cap = 24);

}  // namespace nlcut
