#include "nlcut/dinkelbach.hpp"

#include <algorithm>
#include <random>
#include <thread>

#include "nlcut/errors.hpp"

namespace nlcut {

namespace {

constexpr int kExactCap = 12;

bool is_constant(const RVector& x) {
  return std::all_of(x.begin(), x.end(), [&](const Rational& v) { return v == x.front(); });
}

/// Labels in {-1, 0, +1} allowed by Omega once scaled.
bool labels_allowed(DomainKind kind, VertexSet a, VertexSet b, int n) {
  if (a.empty() && b.empty()) return false;
  switch (kind) {
    case DomainKind::nonzero: return true;
    case DomainKind::nonconstant_2cut: return !a.empty() && !b.empty();
    case DomainKind::nonconstant_3cut: return (!a.empty() && !b.empty()) || (a | b) != VertexSet::full(n);
  }
  return false;
}

RVector scaled_indicator(int n, VertexSet a, VertexSet b) {
  RVector x = indicator(n, a, b);
  Rational s(a.size() + b.size());
  for (Rational& v : x) v /= s;
  return x;
}

struct Candidate {
  VertexSet a, b;
  Rational numerator, denominator;
};

/// Inner objective of a scaled candidate, sign-adjusted so smaller is better.
Rational score(const Candidate& c, const Rational& r, Opt opt) {
  Rational v = (c.numerator - r * c.denominator) / (c.a.size() + c.b.size());
  return opt == Opt::min ? v : Rational(-v);
}

bool pair_less(VertexSet a1, VertexSet b1, VertexSet a2, VertexSet b2) {
  return lex_less(std::vector<VertexSet>{a1, b1}, std::vector<VertexSet>{a2, b2});
}

std::vector<Candidate> enumerate_candidates(const RatioProblem& p, const Graph& g) {
  const int n = g.n();
  std::vector<Candidate> out;
  // Q and the inner objective are even, so the first nonzero label is +1.
  for (const RVector& x : scan_candidates(n, CandidateFamily::ternary)) {
    VertexSet a = positive_support(x), b = negative_support(x);
    if (!labels_allowed(p.domain, a, b, n)) continue;
    RatioParts parts = ratio_parts(p.id, g, x);
    if (parts.denominator <= 0) continue;
    out.push_back({a, b, parts.numerator, parts.denominator});
  }
  return out;
}

std::size_t exact_argopt(const std::vector<Candidate>& cands, const Rational& r, Opt opt, int workers) {
  workers = std::max(1, std::min<int>(workers, static_cast<int>(cands.size())));
  std::vector<std::size_t> best(workers, cands.size());
  std::vector<Rational> best_score(workers);
  auto scan = [&](int w) {
    std::size_t lo = cands.size() * w / workers, hi = cands.size() * (w + 1) / workers;
    for (std::size_t i = lo; i < hi; ++i) {
      Rational s = score(cands[i], r, opt);
      if (best[w] == cands.size() || s < best_score[w] ||
          (s == best_score[w] && pair_less(cands[i].a, cands[i].b, cands[best[w]].a, cands[best[w]].b))) {
        best[w] = i;
        best_score[w] = s;
      }
    }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(scan, w);
    for (auto& t : threads) t.join();
  }
  std::size_t pick = cands.size();
  Rational pick_score;
  for (int w = 0; w < workers; ++w) {
    std::size_t i = best[w];
    if (i == cands.size()) continue;
    if (pick == cands.size() || best_score[w] < pick_score ||
        (best_score[w] == pick_score && pair_less(cands[i].a, cands[i].b, cands[pick].a, cands[pick].b))) {
      pick = i;
      pick_score = best_score[w];
    }
  }
  return pick;
}

class FlipSearch {
 public:
  FlipSearch(const RatioProblem& p, const Graph& g, std::uint64_t seed, int restarts)
      : p_(p), g_(g), rng_(seed), restarts_(restarts) {}

  /// Best candidate found from the given start and random restarts.
  std::optional<Candidate> run(const Rational& r, const std::vector<int>& start) {
    std::optional<Candidate> best;
    Rational best_score;
    auto consider = [&](std::vector<int> labels) {
      auto c = evaluate(labels);
      if (!c) return;
      Rational s = score(*c, r, p_.opt);
      descend(labels, *c, s, r);
      if (!best || s < best_score || (s == best_score && pair_less(c->a, c->b, best->a, best->b))) {
        best = c;
        best_score = s;
      }
    };
    consider(start);
    std::uniform_int_distribution<int> pick(-1, 1);
    for (int t = 0; t < restarts_; ++t) {
      std::vector<int> labels(g_.n());
      for (int& l : labels) l = pick(rng_);
      consider(std::move(labels));
    }
    return best;
  }

 private:
  std::optional<Candidate> evaluate(const std::vector<int>& labels) const {
    VertexSet a, b;
    for (int i = 0; i < g_.n(); ++i) {
      if (labels[i] > 0) a.insert(i);
      if (labels[i] < 0) b.insert(i);
    }
    if (!labels_allowed(p_.domain, a, b, g_.n())) return std::nullopt;
    RatioParts parts = ratio_parts(p_.id, g_, indicator(g_.n(), a, b));
    if (parts.denominator <= 0) return std::nullopt;
    return Candidate{a, b, parts.numerator, parts.denominator};
  }

  void descend(std::vector<int>& labels, Candidate& current, Rational& current_score, const Rational& r) const {
    bool improved = true;
    while (improved) {
      improved = false;
      for (int i = 0; i < g_.n(); ++i) {
        int original = labels[i];
        for (int l : {-1, 0, 1}) {
          if (l == original) continue;
          labels[i] = l;
          auto c = evaluate(labels);
          if (c) {
            Rational s = score(*c, r, p_.opt);
            if (s < current_score) {
              current = *c;
              current_score = s;
              original = l;
              improved = true;
            }
          }
          labels[i] = original;
        }
      }
    }
  }

  const RatioProblem& p_;
  const Graph& g_;
  std::mt19937_64 rng_;
  int restarts_;
};

}  // namespace

const char* to_string(DomainKind kind) {
  switch (kind) {
    case DomainKind::nonzero: return "nonzero";
    case DomainKind::nonconstant_2cut: return "nonconstant_2cut";
    case DomainKind::nonconstant_3cut: return "nonconstant_3cut";
  }
  return "?";
}

const RatioProblem& ratio_problem(ProblemId id) {
  static const std::vector<RatioProblem> registry{
      {ProblemId::cheeger_tv, "I", "0", "N", "0", Opt::min, DomainKind::nonconstant_2cut},
      {ProblemId::cheeger_new, "e*sup", "I+", "N", "0", Opt::min, DomainKind::nonconstant_3cut},
      {ProblemId::dual, "I+", "0", "l1_mu", "0", Opt::min, DomainKind::nonzero},
      {ProblemId::mdual, "I+", "0", "I+ + I", "0", Opt::min, DomainKind::nonzero},
      {ProblemId::maxcut_ratio, "I", "0", "vol*sup", "0", Opt::max, DomainKind::nonzero},
      {ProblemId::anti, "I", "0", "2vol*sup", "N", Opt::max, DomainKind::nonzero},
  };
  for (const RatioProblem& p : registry) {
    if (p.id == id) return p;
  }
  throw Error(ErrorCode::unknown_problem, "no decomposition registered");
}

bool in_omega(DomainKind kind, const RVector& x) {
  if (x.empty() || l1_norm(x) != 1) return false;
  auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  bool balanced = *lo + *hi == 0;
  bool touches_zero = std::any_of(x.begin(), x.end(), [](const Rational& v) { return v == 0; });
  switch (kind) {
    case DomainKind::nonzero: return true;
    case DomainKind::nonconstant_2cut: return balanced;
    case DomainKind::nonconstant_3cut: return balanced || touches_zero;
  }
  return false;
}

RVector project_to_omega(DomainKind kind, const RVector& x) {
  RVector y(x);
  if (!y.empty() && kind != DomainKind::nonzero) {
    auto [lo, hi] = std::minmax_element(y.begin(), y.end());
    bool balanced = *lo + *hi == 0;
    bool touches_zero = std::any_of(y.begin(), y.end(), [](const Rational& v) { return v == 0; });
    if (!balanced && !(kind == DomainKind::nonconstant_3cut && touches_zero)) {
      Rational mid = (*lo + *hi) / 2;
      for (Rational& v : y) v -= mid;
    }
  }
  Rational norm = l1_norm(y);
  if (norm == 0) throw Error(ErrorCode::not_in_omega, "vector projects to zero");
  for (Rational& v : y) v /= norm;
  return y;
}

const char* to_string(InnerSolver s) { return s == InnerSolver::exact_enum ? "exact" : "flip"; }

InnerSolver parse_inner(const std::string& name) {
  if (name == "exact" || name == "exact_enum") return InnerSolver::exact_enum;
  if (name == "flip" || name == "local_flip") return InnerSolver::local_flip;
  throw Error(ErrorCode::invalid_argument, "unknown inner solver '" + name + "'");
}

DinkelbachTrace solve(const RatioProblem& problem, const Graph& g, const std::optional<RVector>& x0,
                      const DinkelbachOptions& opts) {
  const int n = g.n();
  if (n < 2) throw Error(ErrorCode::invalid_argument, "need at least two vertices");
  if ((problem.id == ProblemId::cheeger_tv || problem.id == ProblemId::cheeger_new) && !is_connected(g)) {
    throw Error(ErrorCode::disconnected, to_string(problem.id));
  }
  if (x0 && static_cast<int>(x0->size()) != n) {
    throw Error(ErrorCode::invalid_argument, "start vector length differs from n");
  }
  int cap = opts.cap.value_or(kExactCap);
  if (opts.inner == InnerSolver::exact_enum && n > cap) {
    throw Error(ErrorCode::too_large, "exact inner search: n = " + std::to_string(n) + " exceeds cap " +
                                          std::to_string(cap));
  }

  RVector start = project_to_omega(problem.domain, x0 ? *x0 : indicator(n, VertexSet{0}));
  RatioParts parts = ratio_parts(problem.id, g, start);
  if (parts.denominator <= 0) throw Error(ErrorCode::not_in_omega, "start point has no defined ratio");

  DinkelbachTrace trace;
  trace.problem = problem.id;
  trace.inner = opts.inner;
  trace.exact = opts.inner == InnerSolver::exact_enum;
  trace.iterations.push_back({0, Rational(parts.numerator / parts.denominator), start, Rational(0)});

  std::vector<Candidate> cands;
  if (opts.inner == InnerSolver::exact_enum) cands = enumerate_candidates(problem, g);
  FlipSearch flip(problem, g, opts.seed, opts.restarts);

  for (int k = 1; k <= opts.max_iterations; ++k) {
    const DinkelbachStep& prev = trace.iterations.back();
    std::optional<Candidate> next;
    if (opts.inner == InnerSolver::exact_enum) {
      std::size_t i = exact_argopt(cands, prev.r, problem.opt, opts.workers);
      if (i < cands.size()) next = cands[i];
    } else {
      std::vector<int> labels(n);
      for (int i = 0; i < n; ++i) labels[i] = sgn(prev.x[i]);
      next = flip.run(prev.r, labels);
      // Keep the current iterate unless the heuristic strictly improves on it.
      if (next && score(*next, prev.r, problem.opt) >= 0) next.reset();
    }
    if (!next) {
      trace.converged = opts.inner == InnerSolver::local_flip;
      break;
    }
    Rational r = next->numerator / next->denominator;
    Rational previous = prev.r;
    Rational inner = (next->numerator - previous * next->denominator) / (next->a.size() + next->b.size());
    trace.iterations.push_back({k, r, scaled_indicator(n, next->a, next->b), inner});
    if (r == previous) {
      trace.converged = true;
      break;
    }
  }

  const DinkelbachStep& last = trace.iterations.back();
  trace.final = CutCertificate{CertificateKind::set_pair,
                               {positive_support(last.x), negative_support(last.x)}, last.r};
  return trace;
}

EigenproblemId eigenproblem_for(ProblemId id) {
  switch (id) {
    case ProblemId::cheeger_tv: return EigenproblemId::one_lap;
    case ProblemId::cheeger_new: return EigenproblemId::cheeger_new;
    case ProblemId::dual: return EigenproblemId::signless_one_lap;
    case ProblemId::mdual: return EigenproblemId::hat_signless;
    case ProblemId::maxcut_ratio: return EigenproblemId::maxcut_inf;
    case ProblemId::anti: return EigenproblemId::anti_cheeger;
  }
  throw Error(ErrorCode::unknown_problem, "no eigenproblem registered");
}

bool stationary_check(ProblemId id, const Graph& g, const Rational& lambda, const RVector& x) {
  const RatioProblem& p = ratio_problem(id);
  if (p.domain != DomainKind::nonzero && !x.empty() && is_constant(x)) {
    throw Error(ErrorCode::nonconstant_required, to_string(id));
  }
  return verify(eigenproblem_for(id), g, lambda, x).verdict;
}

}  // namespace nlcut
