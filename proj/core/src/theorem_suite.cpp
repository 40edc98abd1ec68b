#include "nlcut/theorem_suite.hpp"

#include <algorithm>
#include <filesystem>
#include <set>
#include <thread>

#include "nlcut/dinkelbach.hpp"
#include "nlcut/eigen.hpp"
#include "nlcut/errors.hpp"
#include "nlcut/generators.hpp"
#include "nlcut/graph_io.hpp"
#include "nlcut/graph_params.hpp"
#include "nlcut/linear_spectrum.hpp"
#include "nlcut/nodal.hpp"
#include "nlcut/oracles.hpp"

namespace nlcut {

namespace {

constexpr std::size_t kKeptFailures = 20;

struct Partial {
  long checked = 0;
  std::vector<std::string> failures;

  template <typename Msg>
  void expect(bool ok, Msg&& msg) {
    ++checked;
    if (!ok) failures.push_back(msg());
  }
};

/// Runs fn on every entry accepted by keep, in parallel, merging in corpus order.
template <typename Keep, typename Fn>
CriterionResult over_corpus(int id, std::string name, const std::vector<CorpusEntry>& corpus, int workers, Keep keep,
                            Fn fn) {
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (keep(corpus[i].graph)) picked.push_back(i);
  }
  std::vector<Partial> parts(picked.size());
  auto work = [&](std::size_t slot) {
    const CorpusEntry& entry = corpus[picked[slot]];
    try {
      fn(entry, parts[slot]);
    } catch (const std::exception& e) {
      parts[slot].expect(false, [&] { return std::string("exception: ") + e.what(); });
    }
    for (std::string& f : parts[slot].failures) f = entry.name + ": " + f;
  };
  std::size_t threads = std::min<std::size_t>(std::max(1, workers), picked.size());
  if (threads <= 1) {
    for (std::size_t s = 0; s < picked.size(); ++s) work(s);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t s = t; s < picked.size(); s += threads) work(s);
      });
    }
    for (auto& th : pool) th.join();
  }
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  for (Partial& p : parts) {
    r.checked += p.checked;
    r.failed += static_cast<long>(p.failures.size());
    for (std::string& f : p.failures) {
      if (r.failures.size() < kKeptFailures) r.failures.push_back(std::move(f));
    }
  }
  return r;
}

CriterionResult single(int id, std::string name, const std::function<void(Partial&)>& fn) {
  std::vector<CorpusEntry> one{{name, Graph()}};
  return over_corpus(id, name, one, 1, [](const Graph&) { return true; },
                     [&](const CorpusEntry&, Partial& p) { fn(p); });
}

bool is_constant(const RVector& x) {
  return std::all_of(x.begin(), x.end(), [&](const Rational& v) { return v == x.front(); });
}

bool needs_nonconstant(ProblemId id) { return id == ProblemId::cheeger_tv || id == ProblemId::cheeger_new; }

/// Optimum of Q over the ternary grid, straight from the functionals.
std::optional<Rational> ternary_optimum(ProblemId id, const Graph& g, std::set<Rational>* values = nullptr) {
  std::optional<Rational> best;
  bool maximize = is_maximization(id);
  for (const RVector& x : scan_candidates(g.n(), CandidateFamily::ternary)) {
    if (needs_nonconstant(id) && is_constant(x)) continue;
    RatioParts parts = ratio_parts(id, g, x);
    if (parts.denominator <= 0) continue;
    Rational q = parts.numerator / parts.denominator;
    if (values) values->insert(q);
    if (!best || (maximize ? q > *best : q < *best)) best = q;
  }
  return best;
}

std::optional<Rational> combinatorial_value(ProblemId id, const Graph& g) {
  switch (id) {
    case ProblemId::cheeger_tv:
    case ProblemId::cheeger_new:
      if (!is_connected(g)) return std::nullopt;
      return cheeger(g).value;
    case ProblemId::dual: return Rational(1 - dual_cheeger(g).value);
    case ProblemId::mdual: return Rational(1 - modified_dual_cheeger(g).value);
    case ProblemId::maxcut_ratio: return maxcut(g).value;
    case ProblemId::anti: return anti_cheeger(g).value;
  }
  return std::nullopt;
}

std::string str(const Rational& q) { return to_string(q); }

std::string opt_str(const std::optional<Rational>& q) { return q ? to_string(*q) : "none"; }

}  // namespace

std::vector<CorpusEntry> load_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw Error(ErrorCode::invalid_argument, "not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".txt") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });
  std::vector<CorpusEntry> out;
  for (const fs::path& p : files) out.push_back({p.filename().string(), parse_graph(read_file(p.string()))});
  return out;
}

CriterionResult check_ratio_equivalence(const std::vector<CorpusEntry>& corpus, const SuiteOptions& opts) {
  auto keep = [&](const Graph& g) { return g.n() >= 2 && g.n() <= opts.exhaustive_cap; };
  return over_corpus(1, "ratio_equivalence", corpus, opts.workers, keep, [](const CorpusEntry& e, Partial& p) {
    for (ProblemId id : all_problems()) {
      std::optional<Rational> oracle = combinatorial_value(id, e.graph);
      if (!oracle) continue;
      std::optional<Rational> scanned = ternary_optimum(id, e.graph);
      p.expect(scanned && *scanned == *oracle, [&] {
        return std::string(to_string(id)) + " continuous " + opt_str(scanned) + " vs combinatorial " + str(*oracle);
      });
    }
  });
}

CriterionResult check_dinkelbach_exactness(const std::vector<CorpusEntry>& corpus, const SuiteOptions& opts) {
  auto keep = [&](const Graph& g) { return g.n() >= 2 && g.n() <= opts.exhaustive_cap; };
  return over_corpus(2, "dinkelbach_exactness", corpus, opts.workers, keep, [](const CorpusEntry& e, Partial& p) {
    const Graph& g = e.graph;
    for (ProblemId id : all_problems()) {
      if (needs_nonconstant(id) && !is_connected(g)) continue;
      const RatioProblem& problem = ratio_problem(id);
      DinkelbachTrace trace = solve(problem, g);
      Rational oracle = ratio_oracle(id, g).value;
      std::string name = to_string(id);
      p.expect(trace.converged, [&] { return name + " did not converge"; });
      p.expect(trace.final.value == oracle,
               [&] { return name + " final " + str(trace.final.value) + " vs oracle " + str(oracle); });
      bool monotone = true, inside = true;
      for (std::size_t k = 0; k < trace.iterations.size(); ++k) {
        const DinkelbachStep& s = trace.iterations[k];
        if (!in_omega(problem.domain, s.x)) inside = false;
        if (k == 0) continue;
        const Rational& prev = trace.iterations[k - 1].r;
        if (problem.opt == Opt::min ? s.r > prev : s.r < prev) monotone = false;
      }
      p.expect(monotone, [&] { return name + " trace not monotone"; });
      p.expect(inside, [&] { return name + " iterate outside Omega"; });
      std::set<Rational> values;
      ternary_optimum(id, g, &values);
      p.expect(trace.iterations.size() - 1 <= values.size(), [&] {
        return name + " took " + std::to_string(trace.iterations.size() - 1) + " steps for " +
               std::to_string(values.size()) + " values";
      });
      const RVector& x = trace.iterations.back().x;
      p.expect(stationary_check(id, g, trace.final.value, x),
               [&] { return name + " fixed point " + str(trace.final.value) + " not stationary"; });
    }
  });
}

CriterionResult check_eigenpair_constructors(const std::vector<CorpusEntry>& corpus, const SuiteOptions& opts) {
  auto keep = [&](const Graph& g) { return g.n() >= 2 && g.n() <= opts.exhaustive_cap; };
  return over_corpus(3, "eigenpair_constructors", corpus, opts.workers, keep, [](const CorpusEntry& e, Partial& p) {
    const Graph& g = e.graph;
    const int n = g.n();
    const Rational& total = g.total_volume();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      VertexSet a(mask), b = a.complement(n);
      RVector x = indicator(n, a, b);
      Rational cut = boundary(g, a), va = vol(g, a), vb = vol(g, b);
      Rational lmax = 2 * cut / total;
      p.expect(verify(EigenproblemId::maxcut_inf, g, lmax, x).verdict,
               [&] { return "maxcut_inf rejects " + to_string(a) + " at " + str(lmax); });
      Rational lanti = cut / std::max(va, vb);
      p.expect(verify(EigenproblemId::anti_cheeger, g, lanti, x).verdict,
               [&] { return "anti_cheeger rejects " + to_string(a) + " at " + str(lanti); });
      if (!a.empty() && !b.empty() && std::min(va, vb) > 0) {
        Rational lnew = cut / std::min(va, vb);
        p.expect(verify(EigenproblemId::cheeger_new, g, lnew, x).verdict,
                 [&] { return "cheeger_new rejects " + to_string(a) + " at " + str(lnew); });
      }
    }
  });
}

CriterionResult check_spectral_identities(const std::vector<CorpusEntry>& corpus, const SuiteOptions& opts) {
  auto keep = [&](const Graph& g) { return g.n() >= 2 && g.n() <= opts.exhaustive_cap; };
  return over_corpus(4, "spectral_identities", corpus, opts.workers, keep, [](const CorpusEntry& e, Partial& p) {
    const Graph& g = e.graph;
    const int n = g.n();
    bool connected = is_connected(g);

    if (connected) {
      Rational h = cheeger(g).value;
      std::optional<Rational> smallest;
      for (const SpectrumPoint& s : spectrum_scan(EigenproblemId::cheeger_new, g)) {
        if (s.lambda != 0) {
          smallest = s.lambda;
          break;
        }
      }
      p.expect(smallest && *smallest == h,
               [&] { return "cheeger_new smallest nonzero " + opt_str(smallest) + " vs h " + str(h); });
    }

    std::vector<SpectrumPoint> signless = spectrum_scan(EigenproblemId::signless_one_lap, g);
    Rational dual = 1 - dual_cheeger(g).value;
    p.expect(!signless.empty() && signless.front().lambda == dual, [&] {
      return "signless smallest " + (signless.empty() ? std::string("none") : str(signless.front().lambda)) +
             " vs 1-h+ " + str(dual);
    });

    std::vector<SpectrumPoint> mc = spectrum_scan(EigenproblemId::maxcut_inf, g);
    Rational hmax = maxcut(g).value;
    p.expect(!mc.empty() && mc.back().lambda == hmax, [&] {
      return "maxcut_inf largest " + (mc.empty() ? std::string("none") : str(mc.back().lambda)) + " vs " + str(hmax);
    });
    const Rational& total = g.total_volume();
    if (!mc.empty()) {
      Rational mn = minmax_k_cut(g, n, false).value;
      p.expect(total * mc.back().lambda == mn,
               [&] { return "vol*largest " + str(Rational(total * mc.back().lambda)) + " vs M_n " + str(mn); });
    }
    if (connected && mc.size() >= 2) {
      Rational m2 = minmax_k_cut(g, 2, false).value;
      p.expect(total * mc[1].lambda == m2,
               [&] { return "vol*second " + str(Rational(total * mc[1].lambda)) + " vs M_2 " + str(m2); });
    }
  });
}

CriterionResult check_structure_theorems(const std::vector<CorpusEntry>& corpus, const SuiteOptions& opts) {
  auto keep = [&](const Graph& g) { return g.n() >= 2 && g.n() <= opts.exhaustive_cap; };
  return over_corpus(5, "structure_theorems", corpus, opts.workers, keep, [](const CorpusEntry& e, Partial& p) {
    const Graph& g = e.graph;
    bool connected = is_connected(g);
    ScanOptions ternary;
    ternary.family = CandidateFamily::ternary;

    std::vector<EigenpairReport> pairs = eigenvector_scan(EigenproblemId::maxcut_inf, g, ternary);
    std::set<Rational, std::greater<Rational>> values;
    for (const EigenpairReport& r : pairs) values.insert(r.lambda);
    std::optional<Rational> min_nonzero;
    for (const Rational& v : values) {
      if (v != 0) min_nonzero = v;
    }
    for (const EigenpairReport& r : pairs) {
      std::string where = "maxcut_inf " + str(r.lambda) + " x=" + emit_vector(r.x);
      p.expect(check_null_symmetry(g, r), [&] { return where + " breaks null symmetry"; });
      int rank = static_cast<int>(std::distance(values.begin(), values.find(r.lambda)));
      NodalReport nr = analyze(g, r.x, NodalConvention::sup_norm_based);
      p.expect(nr.N_nonsingleton <= rank, [&] {
        return where + " has " + std::to_string(nr.N_nonsingleton) + " non-singleton null domains at rank " +
               std::to_string(rank);
      });
      if (connected && min_nonzero && r.lambda == *min_nonzero) {
        p.expect(nr.S0 <= 2, [&] { return where + " has S0 = " + std::to_string(nr.S0); });
      }
      if (r.lambda == *values.begin()) {
        for (const StructureCheck& c : check_max_eigvec_structure(g, r).checks) {
          p.expect(c.holds, [&] { return where + " fails " + c.name + " " + c.detail; });
        }
      }
    }

    std::vector<EigenpairReport> anti = eigenvector_scan(EigenproblemId::anti_cheeger, g, ternary);
    std::optional<Rational> top;
    for (const EigenpairReport& r : anti) {
      if (!top || r.lambda > *top) top = r.lambda;
    }
    for (const EigenpairReport& r : anti) {
      if (r.lambda != *top) continue;
      std::string where = "anti_cheeger " + str(r.lambda) + " x=" + emit_vector(r.x);
      for (const StructureCheck& c : check_max_eigvec_structure(g, r).checks) {
        p.expect(c.holds, [&] { return where + " fails " + c.name + " " + c.detail; });
      }
    }
  });
}

CriterionResult check_star_triangle(const SuiteOptions&) {
  return single(6, "star_triangle", [](Partial& p) {
    for (int k = 1; k <= 3; ++k) {
      Graph g = star_triangle_graph(k);
      const int n = g.n();
      VertexSet a, b;
      for (int i = 0; i < k; ++i) {
        a.insert(i);
        b.insert(k + i);
      }
      RVector x = indicator(n, a, b);
      Rational lambda = Rational(2 * k * 2) / g.total_volume();
      std::string where = "k=" + std::to_string(k);
      EigenpairReport r = verify(EigenproblemId::maxcut_inf, g, lambda, x);
      p.expect(r.verdict, [&] { return where + " rejected at " + str(lambda); });
      Rational hmax = maxcut(g).value;
      p.expect(hmax == lambda, [&] { return where + " h_max " + str(hmax) + " vs " + str(lambda); });
      std::vector<SpectrumPoint> scan = spectrum_scan(EigenproblemId::maxcut_inf, g);
      p.expect(!scan.empty() && scan.back().lambda == lambda, [&] { return where + " scan maximum differs"; });
      NodalReport nr = analyze(g, x, NodalConvention::sup_norm_based);
      p.expect(nr.Sprime == k, [&] { return where + " S' = " + std::to_string(nr.Sprime); });
      p.expect(nr.d_zero == VertexSet{2 * k}, [&] { return where + " D0 = " + to_string(nr.d_zero); });
      if (r.verdict) {
        for (const StructureCheck& c : check_max_eigvec_structure(g, r).checks) {
          p.expect(c.holds, [&] { return where + " fails " + c.name; });
        }
      }
    }
  });
}

CriterionResult check_inequalities(const std::vector<CorpusEntry>& corpus, const SuiteOptions& opts) {
  auto keep = [&](const Graph& g) { return g.n() >= 2 && g.n() <= opts.inequality_cap; };
  return over_corpus(7, "inequalities", corpus, opts.workers, keep, [](const CorpusEntry& e, Partial& p) {
    for (const InequalityReport& r : inequality_suite(e.graph)) {
      p.expect(r.holds, [&] {
        std::string out = r.name;
        if (r.k) out += " k=" + std::to_string(*r.k);
        return out + ": " + std::to_string(r.lhs) + " <= " + std::to_string(r.mid) + " <= " + std::to_string(r.rhs);
      });
    }
  });
}

CriterionResult check_petersen(const SuiteOptions&) {
  return single(8, "petersen", [](Partial& p) {
    Graph g = petersen_graph();
    const Rational expected(4, 5);
    Rational direct = maxcut(g).value;
    p.expect(direct == expected, [&] { return "maxcut ratio " + str(direct); });
    p.expect(maxcut(g).value == direct, [] { return "maxcut ratio unstable"; });
    Rational cut = direct * g.total_volume() / 2;
    p.expect(cut == 12, [&] { return "maxcut weight " + str(cut); });

    std::vector<SpectrumPoint> scan = spectrum_scan(EigenproblemId::maxcut_inf, g);
    p.expect(!scan.empty() && scan.back().lambda == expected, [] { return "scan maximum differs from 4/5"; });
    Rational via_minmax = minmax_k_cut(g, g.n(), false).value / g.total_volume();
    p.expect(via_minmax == expected, [&] { return "M_n/vol = " + str(via_minmax); });

    int alpha = independence_number(g);
    p.expect(alpha == 4, [&] { return "independence number " + std::to_string(alpha); });
    int brute = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n()); ++mask) {
      if (inner_weight(g, VertexSet(mask)) == 0) brute = std::max(brute, VertexSet(mask).size());
    }
    p.expect(brute == alpha, [&] { return "subset scan gives " + std::to_string(brute); });
  });
}

std::vector<CriterionResult> run_suite(const std::vector<CorpusEntry>& corpus, const SuiteOptions& opts) {
  return {check_ratio_equivalence(corpus, opts),   check_dinkelbach_exactness(corpus, opts),
          check_eigenpair_constructors(corpus, opts), check_spectral_identities(corpus, opts),
          check_structure_theorems(corpus, opts),  check_star_triangle(opts),
          check_inequalities(corpus, opts),        check_petersen(opts)};
}

}  // namespace nlcut
