#include "nlcut/functionals.hpp"

#include <algorithm>
#include <numeric>

#include "nlcut/errors.hpp"

namespace nlcut {

namespace {

void check_length(const Graph& g, const RVector& x) {
  if (static_cast<int>(x.size()) != g.n()) {
    throw Error(ErrorCode::invalid_argument, "vector length " + std::to_string(x.size()) +
                                                 " differs from n = " + std::to_string(g.n()));
  }
}

}  // namespace

Rational total_variation(const Graph& g, const RVector& x) {
  check_length(g, x);
  Rational total, diff;
  for (const Edge& e : g.edges()) {
    diff = x[e.u] - x[e.v];
    total += e.w * abs(diff);
  }
  return total;
}

Rational signless_variation(const Graph& g, const RVector& x) {
  check_length(g, x);
  Rational total, sum;
  for (const Edge& e : g.edges()) {
    sum = x[e.u] + x[e.v];
    total += e.w * abs(sum);
  }
  return total;
}

Interval median_interval(const Graph& g, const RVector& x) {
  check_length(g, x);
  const Rational& total = g.total_volume();
  if (total == 0) throw Error(ErrorCode::zero_measure, "vol(V) = 0");
  std::vector<int> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return x[a] < x[b]; });

  Rational half = total / 2;
  Interval out;
  Rational below;
  for (std::size_t k = 0; k < order.size(); ++k) {
    below += g.mu(order[k]);
    bool last_of_value = k + 1 == order.size() || x[order[k + 1]] != x[order[k]];
    if (last_of_value && below >= half) {
      out.lo = x[order[k]];
      break;
    }
  }
  Rational above;
  for (std::size_t k = order.size(); k-- > 0;) {
    above += g.mu(order[k]);
    bool first_of_value = k == 0 || x[order[k - 1]] != x[order[k]];
    if (first_of_value && above >= half) {
      out.hi = x[order[k]];
      break;
    }
  }
  return out;
}

Rational median_deviation(const Graph& g, const RVector& x) {
  Rational c = median_interval(g, x).lo;
  Rational total, diff;
  for (int i = 0; i < g.n(); ++i) {
    diff = x[i] - c;
    total += g.mu(i) * abs(diff);
  }
  return total;
}

Rational sup_norm(const RVector& x) {
  Rational best;
  for (const Rational& v : x) {
    if (abs(v) > best) best = abs(v);
  }
  return best;
}

Rational l1_mu_norm(const Graph& g, const RVector& x) {
  check_length(g, x);
  Rational total;
  for (int i = 0; i < g.n(); ++i) total += g.mu(i) * abs(x[i]);
  return total;
}

Rational l1_norm(const RVector& x) {
  Rational total;
  for (const Rational& v : x) total += abs(v);
  return total;
}

RVector indicator(int n, VertexSet a, VertexSet b) {
  if (a.intersects(b)) throw Error(ErrorCode::overlapping_sets, to_string(a) + " and " + to_string(b));
  RVector x(n, Rational(0));
  for (int v : a.ids()) x[v] = 1;
  for (int v : b.ids()) x[v] = -1;
  return x;
}

SupNormSets sup_norm_sets(const RVector& x) {
  Rational top = sup_norm(x);
  SupNormSets s;
  for (int i = 0; i < static_cast<int>(x.size()); ++i) {
    if (top != 0 && x[i] == top) {
      s.plus.insert(i);
    } else if (top != 0 && x[i] == -top) {
      s.minus.insert(i);
    } else {
      s.zero.insert(i);
    }
  }
  return s;
}

VertexSet positive_support(const RVector& x) {
  VertexSet s;
  for (int i = 0; i < static_cast<int>(x.size()); ++i) {
    if (x[i] > 0) s.insert(i);
  }
  return s;
}

VertexSet negative_support(const RVector& x) {
  VertexSet s;
  for (int i = 0; i < static_cast<int>(x.size()); ++i) {
    if (x[i] < 0) s.insert(i);
  }
  return s;
}

Rational lovasz_extension(const SetPairFunction& f, const RVector& x) {
  std::vector<Rational> levels;
  levels.reserve(x.size() + 1);
  levels.push_back(Rational(0));
  for (const Rational& v : x) levels.push_back(abs(v));
  std::stable_sort(levels.begin(), levels.end());

  Rational total;
  for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
    Rational step = levels[k + 1] - levels[k];
    if (step == 0) continue;
    VertexSet plus, minus;
    for (int j = 0; j < static_cast<int>(x.size()); ++j) {
      if (x[j] > levels[k]) plus.insert(j);
      if (-x[j] > levels[k]) minus.insert(j);
    }
    total += step * f(plus, minus);
  }
  return total;
}

const char* to_string(ProblemId id) {
  switch (id) {
    case ProblemId::cheeger_tv: return "cheeger_tv";
    case ProblemId::cheeger_new: return "cheeger_new";
    case ProblemId::dual: return "dual";
    case ProblemId::mdual: return "mdual";
    case ProblemId::maxcut_ratio: return "maxcut_ratio";
    case ProblemId::anti: return "anti";
  }
  return "?";
}

ProblemId parse_problem(const std::string& name) {
  for (ProblemId id : all_problems()) {
    if (name == to_string(id)) return id;
  }
  if (name == "dual_cheeger") return ProblemId::dual;
  if (name == "modified_dual") return ProblemId::mdual;
  if (name == "maxcut") return ProblemId::maxcut_ratio;
  if (name == "anti_cheeger") return ProblemId::anti;
  throw Error(ErrorCode::unknown_problem, "'" + name + "'");
}

bool is_maximization(ProblemId id) { return id == ProblemId::maxcut_ratio || id == ProblemId::anti; }

const std::vector<ProblemId>& all_problems() {
  static const std::vector<ProblemId> ids{ProblemId::cheeger_tv, ProblemId::cheeger_new,
                                          ProblemId::dual,       ProblemId::mdual,
                                          ProblemId::maxcut_ratio, ProblemId::anti};
  return ids;
}

RatioParts ratio_parts(ProblemId id, const Graph& g, const RVector& x) {
  switch (id) {
    case ProblemId::cheeger_tv:
      return {total_variation(g, x), median_deviation(g, x)};
    case ProblemId::cheeger_new:
      return {g.twice_edge_weight() * sup_norm(x) - signless_variation(g, x), median_deviation(g, x)};
    case ProblemId::dual:
      return {signless_variation(g, x), l1_mu_norm(g, x)};
    case ProblemId::mdual: {
      Rational plus = signless_variation(g, x);
      return {plus, plus + total_variation(g, x)};
    }
    case ProblemId::maxcut_ratio:
      return {total_variation(g, x), g.total_volume() * sup_norm(x)};
    case ProblemId::anti:
      return {total_variation(g, x), 2 * g.total_volume() * sup_norm(x) - median_deviation(g, x)};
  }
  throw Error(ErrorCode::unknown_problem, "unregistered ratio");
}

Rational ratio_objective(ProblemId id, const Graph& g, const RVector& x) {
  RatioParts p = ratio_parts(id, g, x);
  if (p.denominator == 0) {
    const char* why = "denominator vanishes";
    switch (id) {
      case ProblemId::cheeger_tv:
      case ProblemId::cheeger_new: why = "x must be nonconstant"; break;
      case ProblemId::dual: why = "x must be nonzero on the support of mu"; break;
      case ProblemId::mdual: why = "x must be nonzero on a non-isolated vertex"; break;
      case ProblemId::maxcut_ratio:
      case ProblemId::anti: why = "x must be nonzero and vol(V) positive"; break;
    }
    throw Error(ErrorCode::degenerate_denominator, std::string(to_string(id)) + ": " + why);
  }
  return p.numerator / p.denominator;
}

}  // namespace nlcut
