#pragma once

#include <functional>
#include <string>

#include "nlcut/graph.hpp"

namespace nlcut {

struct Interval {
  Rational lo;
  Rational hi;
};

/// Sum of w_ij |x_i - x_j| over edges.
Rational total_variation(const Graph& g, const RVector& x);
/// Sum of w_ij |x_i + x_j| over edges.
Rational signless_variation(const Graph& g, const RVector& x);

/// Minimizers of t -> sum mu_i |x_i - t|. Throws ZeroMeasure when vol(V) = 0.
Interval median_interval(const Graph& g, const RVector& x);
/// Minimum of sum mu_i |x_i - t| over t.
Rational median_deviation(const Graph& g, const RVector& x);

Rational sup_norm(const RVector& x);
Rational l1_mu_norm(const Graph& g, const RVector& x);
Rational l1_norm(const RVector& x);

/// 1_A - 1_B on n vertices.
RVector indicator(int n, VertexSet a, VertexSet b = {});

/// Vertices where x attains +|x|_inf, -|x|_inf, and the rest.
struct SupNormSets {
  VertexSet plus;
  VertexSet minus;
  VertexSet zero;
};
SupNormSets sup_norm_sets(const RVector& x);

VertexSet positive_support(const RVector& x);
VertexSet negative_support(const RVector& x);

using SetPairFunction = std::function<Rational(VertexSet, VertexSet)>;

/// Piecewise-linear extension of f: sum over increasing levels t of |x| of
/// (t_next - t) f({x > t}, {x < -t}), starting from level 0.
Rational lovasz_extension(const SetPairFunction& f, const RVector& x);

enum class ProblemId { cheeger_tv, cheeger_new, dual, mdual, maxcut_ratio, anti };

const char* to_string(ProblemId id);
/// Accepts the canonical names plus dual_cheeger, modified_dual, maxcut, anti_cheeger.
ProblemId parse_problem(const std::string& name);
bool is_maximization(ProblemId id);
const std::vector<ProblemId>& all_problems();

struct RatioParts {
  Rational numerator;
  Rational denominator;
};

/// Numerator and denominator of the problem's continuous ratio at x.
RatioParts ratio_parts(ProblemId id, const Graph& g, const RVector& x);

/// numerator / denominator; throws DegenerateDenominator when the denominator vanishes.
Rational ratio_objective(ProblemId id, const Graph& g, const RVector& x);

}  // namespace nlcut
