#include "nlcut/eigen.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "nlcut/errors.hpp"
#include "nlcut/rational_lp.hpp"

namespace nlcut {

namespace {

constexpr int kBinaryCap = 20;
constexpr int kTernaryCap = 12;

/// Variable for a selection from scale * Sgn(t).
int sign_variable(ExactLp& lp, int sign, const Rational& scale) {
  if (sign > 0) return lp.add_variable(scale, scale);
  if (sign < 0) return lp.add_variable(-scale, -scale);
  return lp.add_variable(-scale, scale);
}

bool uses_median(EigenproblemId id, bool raw) {
  switch (id) {
    case EigenproblemId::one_lap: return !raw;
    case EigenproblemId::cheeger_new:
    case EigenproblemId::anti_cheeger: return true;
    default: return false;
  }
}

bool uses_sup_norm(EigenproblemId id) {
  return id == EigenproblemId::cheeger_new || id == EigenproblemId::maxcut_inf ||
         id == EigenproblemId::anti_cheeger;
}

bool uses_difference(EigenproblemId id) {
  return id == EigenproblemId::one_lap || id == EigenproblemId::hat_signless ||
         id == EigenproblemId::maxcut_inf || id == EigenproblemId::anti_cheeger;
}

bool uses_sum(EigenproblemId id) {
  return id == EigenproblemId::signless_one_lap || id == EigenproblemId::hat_signless ||
         id == EigenproblemId::cheeger_new;
}

std::vector<Rational> median_candidates(const Graph& g, const RVector& x) {
  Interval iv = median_interval(g, x);
  std::vector<Rational> points{iv.lo};
  for (const Rational& v : x) {
    if (v > iv.lo && v < iv.hi) points.push_back(v);
  }
  points.push_back(iv.hi);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<Rational> out;
  for (std::size_t k = 0; k < points.size(); ++k) {
    out.push_back(points[k]);
    if (k + 1 < points.size()) out.push_back((points[k] + points[k + 1]) / 2);
  }
  return out;
}

/// Builds and solves the feasibility system for one median choice.
bool solve_system(EigenproblemId id, bool raw, const Graph& g, const Rational& lambda, const RVector& x,
                  const std::optional<Rational>& c, EigenWitness& witness) {
  const int n = g.n();
  const auto& edges = g.edges();
  ExactLp lp;
  std::vector<std::vector<std::pair<int, Rational>>> rows(n);

  std::vector<int> zd, zs, vv, sv, tv;
  Rational one(1);
  if (uses_difference(id)) {
    Rational scale = id == EigenproblemId::hat_signless ? Rational(-lambda) : one;
    for (const Edge& e : edges) {
      int var = sign_variable(lp, sgn(Rational(x[e.u] - x[e.v])), one);
      zd.push_back(var);
      rows[e.u].emplace_back(var, scale * e.w);
      rows[e.v].emplace_back(var, -scale * e.w);
    }
  }
  if (uses_sum(id)) {
    Rational scale = id == EigenproblemId::hat_signless ? Rational(1 - lambda) : one;
    for (const Edge& e : edges) {
      int var = sign_variable(lp, sgn(Rational(x[e.u] + x[e.v])), one);
      zs.push_back(var);
      rows[e.u].emplace_back(var, scale * e.w);
      rows[e.v].emplace_back(var, scale * e.w);
    }
  }
  if (c) {
    std::vector<std::pair<int, Rational>> balance;
    Rational coef = id == EigenproblemId::one_lap ? Rational(-lambda) : lambda;
    for (int i = 0; i < n; ++i) {
      int var = sign_variable(lp, sgn(Rational(x[i] - *c)), g.mu(i));
      vv.push_back(var);
      balance.emplace_back(var, one);
      rows[i].emplace_back(var, coef);
    }
    lp.add_equality(std::move(balance), Rational(0));
  }
  if (id == EigenproblemId::signless_one_lap || (id == EigenproblemId::one_lap && raw)) {
    for (int i = 0; i < n; ++i) {
      int var = sign_variable(lp, sgn(x[i]), one);
      sv.push_back(var);
      rows[i].emplace_back(var, Rational(-lambda * g.mu(i)));
    }
  }

  Rational budget;
  if (uses_sup_norm(id)) {
    if (id == EigenproblemId::cheeger_new) budget = g.twice_edge_weight();
    if (id == EigenproblemId::maxcut_inf) budget = lambda * g.total_volume();
    if (id == EigenproblemId::anti_cheeger) budget = 2 * lambda * g.total_volume();
    SupNormSets d = sup_norm_sets(x);
    std::vector<std::pair<int, Rational>> mass;
    for (int i = 0; i < n; ++i) {
      int var;
      if (d.plus.contains(i)) {
        var = lp.add_variable(Rational(0), budget);
        mass.emplace_back(var, one);
      } else if (d.minus.contains(i)) {
        var = lp.add_variable(Rational(-budget), Rational(0));
        mass.emplace_back(var, Rational(-1));
      } else {
        var = lp.add_variable(Rational(0), Rational(0));
      }
      tv.push_back(var);
      rows[i].emplace_back(var, Rational(-1));
    }
    lp.add_equality(std::move(mass), budget);
  }

  for (int i = 0; i < n; ++i) lp.add_equality(std::move(rows[i]), Rational(0));
  if (!lp.solve()) return false;

  auto collect = [&lp](const std::vector<int>& vars) {
    std::vector<Rational> out;
    out.reserve(vars.size());
    for (int v : vars) out.push_back(lp.value(v));
    return out;
  };
  witness = EigenWitness{};
  witness.z = collect(zd);
  witness.z_plus = collect(zs);
  witness.v = collect(vv);
  witness.s = collect(sv);
  witness.c_x = c;
  if (!tv.empty() && budget != 0) {
    for (int v : tv) witness.p.push_back(abs(lp.value(v)) / budget);
  }
  return true;
}

bool is_constant(const RVector& x) {
  return std::all_of(x.begin(), x.end(), [&](const Rational& v) { return v == x.front(); });
}

}  // namespace

const char* to_string(EigenproblemId id) {
  switch (id) {
    case EigenproblemId::one_lap: return "one_lap";
    case EigenproblemId::signless_one_lap: return "signless_one_lap";
    case EigenproblemId::hat_signless: return "hat_signless";
    case EigenproblemId::cheeger_new: return "cheeger_new";
    case EigenproblemId::maxcut_inf: return "maxcut_inf";
    case EigenproblemId::anti_cheeger: return "anti_cheeger";
  }
  return "?";
}

EigenproblemId parse_eigenproblem(const std::string& name) {
  for (EigenproblemId id : all_eigenproblems()) {
    if (name == to_string(id)) return id;
  }
  if (name == "signless") return EigenproblemId::signless_one_lap;
  if (name == "hat") return EigenproblemId::hat_signless;
  if (name == "maxcut") return EigenproblemId::maxcut_inf;
  if (name == "anti") return EigenproblemId::anti_cheeger;
  throw Error(ErrorCode::unknown_problem, "'" + name + "'");
}

const std::vector<EigenproblemId>& all_eigenproblems() {
  static const std::vector<EigenproblemId> ids{
      EigenproblemId::one_lap,     EigenproblemId::signless_one_lap, EigenproblemId::hat_signless,
      EigenproblemId::cheeger_new, EigenproblemId::maxcut_inf,       EigenproblemId::anti_cheeger};
  return ids;
}

ProblemId ratio_for(EigenproblemId id) {
  switch (id) {
    case EigenproblemId::one_lap: return ProblemId::cheeger_tv;
    case EigenproblemId::signless_one_lap: return ProblemId::dual;
    case EigenproblemId::hat_signless: return ProblemId::mdual;
    case EigenproblemId::cheeger_new: return ProblemId::cheeger_new;
    case EigenproblemId::maxcut_inf: return ProblemId::maxcut_ratio;
    case EigenproblemId::anti_cheeger: return ProblemId::anti;
  }
  throw Error(ErrorCode::unknown_problem, "unregistered eigenproblem");
}

EigenpairReport verify(EigenproblemId id, const Graph& g, const Rational& lambda, const RVector& x,
                       const VerifyOptions& opts) {
  if (static_cast<int>(x.size()) != g.n()) {
    throw Error(ErrorCode::invalid_argument, "vector length differs from n");
  }
  if (std::all_of(x.begin(), x.end(), [](const Rational& v) { return v == 0; })) {
    throw Error(ErrorCode::zero_vector, to_string(id));
  }
  if (id == EigenproblemId::cheeger_new && is_constant(x)) {
    throw Error(ErrorCode::nonconstant_required, to_string(id));
  }

  EigenpairReport report;
  report.problem = id;
  report.raw_form = id == EigenproblemId::one_lap && opts.raw_one_lap;
  report.lambda = lambda;
  report.x = x;

  if (uses_median(id, report.raw_form)) {
    std::vector<Rational> medians = median_candidates(g, x);
    for (const Rational& c : medians) {
      if (solve_system(id, report.raw_form, g, lambda, x, c, report.witness)) {
        report.verdict = true;
        return report;
      }
    }
    report.violated = "no subgradient selection satisfies the system for any of " +
                      std::to_string(medians.size()) + " candidate medians";
    return report;
  }
  if (solve_system(id, report.raw_form, g, lambda, x, std::nullopt, report.witness)) {
    report.verdict = true;
  } else {
    report.violated = "no subgradient selection satisfies the system";
  }
  return report;
}

bool rayleigh_consistency(EigenproblemId id, const Graph& g, const Rational& lambda, const RVector& x) {
  RatioParts parts = ratio_parts(ratio_for(id), g, x);
  return parts.numerator == lambda * parts.denominator;
}

RVector binarize(EigenproblemId id, const Graph& g, const RVector& x, BinarizeVariant variant) {
  if (static_cast<int>(x.size()) != g.n()) {
    throw Error(ErrorCode::invalid_argument, "vector length differs from n");
  }
  if (std::all_of(x.begin(), x.end(), [](const Rational& v) { return v == 0; })) {
    throw Error(ErrorCode::zero_vector, "binarize");
  }
  const int n = g.n();
  switch (id) {
    case EigenproblemId::maxcut_inf:
    case EigenproblemId::anti_cheeger: {
      SupNormSets d = sup_norm_sets(x);
      if (variant == BinarizeVariant::plus_minus) return indicator(n, d.plus, d.minus);
      return indicator(n, d.plus, d.plus.complement(n));
    }
    case EigenproblemId::cheeger_new:
    case EigenproblemId::signless_one_lap:
    case EigenproblemId::hat_signless:
      return indicator(n, positive_support(x), negative_support(x));
    case EigenproblemId::one_lap: {
      Rational c = median_interval(g, x).lo;
      RVector shifted(x);
      for (Rational& v : shifted) v -= c;
      return indicator(n, positive_support(shifted), negative_support(shifted));
    }
  }
  throw Error(ErrorCode::unknown_problem, "unregistered eigenproblem");
}

std::vector<RVector> scan_candidates(int n, CandidateFamily family) {
  std::vector<RVector> out;
  if (n == 0) return out;
  if (family == CandidateFamily::binary) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n - 1)); ++m) {
      VertexSet a((m << 1) | 1u);
      out.push_back(indicator(n, a, a.complement(n)));
    }
    return out;
  }
  // Ternary digits with the first nonzero entry +1.
  RVector x(n, Rational(0));
  std::vector<int> digit(n, 0);
  while (true) {
    int k = 0;
    while (k < n && digit[k] == 2) {
      digit[k] = 0;
      ++k;
    }
    if (k == n) break;
    ++digit[k];
    int first = -1;
    for (int i = 0; i < n; ++i) {
      if (digit[i] != 0) {
        first = i;
        break;
      }
    }
    if (digit[first] != 1) continue;
    for (int i = 0; i < n; ++i) x[i] = digit[i] == 0 ? 0 : (digit[i] == 1 ? 1 : -1);
    out.push_back(x);
  }
  return out;
}

namespace {

CandidateFamily resolve_family(EigenproblemId id, CandidateFamily family) {
  if (family != CandidateFamily::automatic) return family;
  return (id == EigenproblemId::maxcut_inf || id == EigenproblemId::anti_cheeger) ? CandidateFamily::binary
                                                                                   : CandidateFamily::ternary;
}

std::vector<RVector> candidates_for(EigenproblemId id, const Graph& g, const ScanOptions& opts) {
  CandidateFamily family = resolve_family(id, opts.family);
  int cap = opts.cap.value_or(family == CandidateFamily::binary ? kBinaryCap : kTernaryCap);
  if (g.n() > cap) {
    throw Error(ErrorCode::too_large, std::string("scan: n = ") + std::to_string(g.n()) + " exceeds cap " +
                                          std::to_string(cap));
  }
  return scan_candidates(g.n(), family);
}

/// The only eigenvalue a candidate can carry, or nothing when undefined.
std::optional<Rational> candidate_lambda(EigenproblemId id, const Graph& g, const RVector& x) {
  bool constant = is_constant(x);
  if (id == EigenproblemId::cheeger_new && constant) return std::nullopt;
  if (id == EigenproblemId::one_lap && constant) return Rational(0);
  RatioParts parts = ratio_parts(ratio_for(id), g, x);
  if (parts.denominator == 0) return std::nullopt;
  return Rational(parts.numerator / parts.denominator);
}

template <typename Fn>
void run_parallel(std::size_t count, int workers, Fn&& fn) {
  workers = std::max(1, workers);
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> threads;
  std::size_t chunks = std::min<std::size_t>(workers, count);
  for (std::size_t c = 0; c < chunks; ++c) {
    threads.emplace_back([&, c] {
      for (std::size_t i = count * c / chunks; i < count * (c + 1) / chunks; ++i) fn(i);
    });
  }
  for (auto& t : threads) t.join();
}

}  // namespace

std::vector<SpectrumPoint> spectrum_scan(EigenproblemId id, const Graph& g, const ScanOptions& opts) {
  std::vector<RVector> cands = candidates_for(id, g, opts);
  std::map<Rational, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (auto lambda = candidate_lambda(id, g, cands[i])) groups[*lambda].push_back(i);
  }
  std::vector<std::pair<Rational, std::vector<std::size_t>>> ordered(groups.begin(), groups.end());
  std::vector<std::optional<std::size_t>> found(ordered.size());
  VerifyOptions vopts{opts.raw_one_lap};
  run_parallel(ordered.size(), opts.workers, [&](std::size_t k) {
    for (std::size_t i : ordered[k].second) {
      if (verify(id, g, ordered[k].first, cands[i], vopts).verdict) {
        found[k] = i;
        return;
      }
    }
  });
  std::vector<SpectrumPoint> out;
  for (std::size_t k = 0; k < ordered.size(); ++k) {
    if (!found[k]) continue;
    const RVector& x = cands[*found[k]];
    out.push_back({ordered[k].first,
                   CutCertificate{CertificateKind::set_pair, {positive_support(x), negative_support(x)},
                                  ordered[k].first}});
  }
  return out;
}

std::vector<EigenpairReport> eigenvector_scan(EigenproblemId id, const Graph& g, const ScanOptions& opts) {
  std::vector<RVector> cands = candidates_for(id, g, opts);
  std::vector<std::optional<EigenpairReport>> results(cands.size());
  VerifyOptions vopts{opts.raw_one_lap};
  run_parallel(cands.size(), opts.workers, [&](std::size_t i) {
    auto lambda = candidate_lambda(id, g, cands[i]);
    if (!lambda) return;
    EigenpairReport r = verify(id, g, *lambda, cands[i], vopts);
    if (r.verdict) results[i] = std::move(r);
  });
  std::vector<EigenpairReport> out;
  for (auto& r : results) {
    if (r) out.push_back(std::move(*r));
  }
  return out;
}

}  // namespace nlcut
