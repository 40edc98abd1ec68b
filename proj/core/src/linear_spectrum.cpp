#include "nlcut/linear_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "nlcut/eigen.hpp"
#include "nlcut/errors.hpp"
#include "nlcut/graph_params.hpp"
#include "nlcut/nodal.hpp"
#include "nlcut/oracles.hpp"

namespace nlcut {

namespace {

using Matrix = std::vector<std::vector<double>>;

double off_diagonal_norm(const Matrix& a) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (i != j) s += a[i][j] * a[i][j];
    }
  }
  return std::sqrt(s);
}

/// Cyclic Jacobi; returns eigenvalues on the diagonal of a and vectors in v.
void jacobi(Matrix& a, Matrix& v) {
  const std::size_t n = a.size();
  v.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;
  for (int sweep = 0; sweep < 100 && off_diagonal_norm(a) >= 1e-12; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
}

Matrix normalized_laplacian(const Graph& g) {
  const int n = g.n();
  std::vector<double> inv_sqrt(n);
  for (int i = 0; i < n; ++i) {
    if (g.degree(i) == 0) throw Error(ErrorCode::isolated_vertex, "vertex " + std::to_string(i));
    inv_sqrt[i] = 1.0 / std::sqrt(to_double(g.degree(i)));
  }
  Matrix a(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) a[i][i] = 1.0;
  for (const Edge& e : g.edges()) {
    double w = -to_double(e.w) * inv_sqrt[e.u] * inv_sqrt[e.v];
    a[e.u][e.v] = w;
    a[e.v][e.u] = w;
  }
  return a;
}

InequalityReport make_report(std::string name, std::optional<int> k, double lhs, double mid, double rhs,
                             std::string lhs_exact = "", std::string mid_exact = "", std::string rhs_exact = "") {
  InequalityReport r;
  r.name = std::move(name);
  r.k = k;
  r.lhs = lhs;
  r.mid = mid;
  r.rhs = rhs;
  r.lhs_exact = std::move(lhs_exact);
  r.mid_exact = std::move(mid_exact);
  r.rhs_exact = std::move(rhs_exact);
  r.holds = lhs <= mid + kSpectralTolerance && mid <= rhs + kSpectralTolerance;
  r.slack = std::min(mid - lhs, rhs - mid);
  return r;
}

Graph with_degree_measure(const Graph& g) { return g.measure_is_degree() ? g : Graph(g.n(), g.edges()); }

}  // namespace

Spectrum normalized_laplacian_spectrum(const Graph& g, bool with_vectors) {
  const int n = g.n();
  Matrix a = normalized_laplacian(g), work = a, v;
  jacobi(work, v);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int p, int q) { return work[p][p] < work[q][q]; });

  Spectrum s;
  Matrix vectors(n, std::vector<double>(n));
  for (int j = 0; j < n; ++j) {
    s.eigenvalues.push_back(work[order[j]][order[j]]);
    for (int i = 0; i < n; ++i) vectors[i][j] = v[i][order[j]];
  }
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      double av = 0;
      for (int k = 0; k < n; ++k) av += a[i][k] * vectors[k][j];
      s.residual_bound = std::max(s.residual_bound, std::fabs(av - s.eigenvalues[j] * vectors[i][j]));
    }
  }
  if (with_vectors) s.eigenvectors = std::move(vectors);
  return s;
}

const char* to_string(InequalityKind kind) {
  switch (kind) {
    case InequalityKind::cheeger: return "cheeger";
    case InequalityKind::dual: return "dual";
    case InequalityKind::delorme_poljak: return "delorme_poljak";
    case InequalityKind::kway: return "kway";
    case InequalityKind::forest: return "forest";
    case InequalityKind::multiplicity: return "multiplicity";
  }
  return "?";
}

InequalityKind parse_inequality_kind(const std::string& name) {
  for (InequalityKind k : all_inequality_kinds()) {
    if (name == to_string(k)) return k;
  }
  throw Error(ErrorCode::invalid_argument, "unknown inequality suite '" + name + "'");
}

const std::vector<InequalityKind>& all_inequality_kinds() {
  static const std::vector<InequalityKind> kinds{InequalityKind::cheeger, InequalityKind::dual,
                                                 InequalityKind::delorme_poljak, InequalityKind::kway,
                                                 InequalityKind::forest, InequalityKind::multiplicity};
  return kinds;
}

InequalityReport multiplicity_bounds_check(const Graph& g, int cap) {
  int alpha = independence_number(g, cap);
  int eta = edge_cover_number(g, cap);
  bool equality_case = is_bipartite(g) && is_connected(g);
  InequalityReport r = make_report("multiplicity", std::nullopt, alpha, eta, eta, std::to_string(alpha),
                                   std::to_string(eta), std::to_string(eta));
  r.holds = alpha <= eta && (!equality_case || alpha == eta);
  return r;
}

std::vector<InequalityReport> inequality_suite(const Graph& graph, const InequalityOptions& opts) {
  const Graph g = with_degree_measure(graph);
  const int n = g.n();
  EnumerationConfig cfg{opts.cap, opts.workers};
  Spectrum spec = normalized_laplacian_spectrum(g);
  const std::vector<double>& lam = spec.eigenvalues;
  auto wants = [&](InequalityKind k) { return std::find(opts.kinds.begin(), opts.kinds.end(), k) != opts.kinds.end(); };
  std::vector<InequalityReport> out;

  // h_k^+ by exhaustive search, cached across checks.
  std::map<int, Rational> h_plus;
  auto h_plus_k = [&](int k) -> const Rational& {
    auto it = h_plus.find(k);
    if (it == h_plus.end()) it = h_plus.emplace(k, k_way_dual_cheeger(g, k, cfg).value).first;
    return it->second;
  };

  if (wants(InequalityKind::cheeger) && n >= 2) {
    Rational h = is_connected(g) ? cheeger(g, cfg).value : Rational(0);
    double hd = to_double(h);
    out.push_back(make_report("cheeger", std::nullopt, hd * hd / 2, lam[1], 2 * hd,
                              to_string(Rational(h * h / 2)), "", to_string(Rational(2 * h))));
  }
  if (wants(InequalityKind::dual) && n >= 1) {
    Rational c = 1 - dual_cheeger(g, cfg).value;
    double cd = to_double(c);
    out.push_back(make_report("dual_cheeger", std::nullopt, cd * cd / 2, 2 - lam.back(), 2 * cd,
                              to_string(Rational(c * c / 2)), "", to_string(Rational(2 * c))));
  }
  if (wants(InequalityKind::delorme_poljak) && n >= 2) {
    // Largest cut weight against vol(V)/4 times the top eigenvalue.
    Rational cut = maxcut(g, cfg).value * g.total_volume() / 2;
    double bound = to_double(g.total_volume()) / 4 * lam.back();
    out.push_back(make_report("delorme_poljak", std::nullopt, 0, to_double(cut), bound, "0", to_string(cut)));
  }
  if (wants(InequalityKind::kway) && n >= 1) {
    ScanOptions sopts;
    sopts.cap = opts.cap;
    sopts.workers = opts.workers;
    std::vector<EigenpairReport> pairs = eigenvector_scan(EigenproblemId::signless_one_lap, g, sopts);
    std::set<std::pair<Rational, int>> seen;
    for (const EigenpairReport& p : pairs) {
      int m = static_cast<int>(analyze(g, p.x, NodalConvention::support_based).support_domains.size());
      seen.emplace(p.lambda, m);
    }
    std::optional<Rational> smallest;
    for (const auto& [c, m] : seen) {
      if (!smallest) smallest = c;
      Rational lower = 1 - h_plus_k(m);
      out.push_back(make_report("kway_lower", m, to_double(lower), to_double(c), to_double(c), to_string(lower),
                                to_string(c), to_string(c)));
    }
    if (smallest) {
      Rational upper = 1 - h_plus_k(1);
      out.push_back(make_report("kway_upper", 1, to_double(*smallest), to_double(*smallest), to_double(upper),
                                to_string(*smallest), to_string(*smallest), to_string(upper)));
    }
  }
  if (wants(InequalityKind::forest) && n >= 1 && is_forest(g)) {
    ScanOptions sopts;
    sopts.cap = opts.cap;
    sopts.workers = opts.workers;
    std::vector<SpectrumPoint> points = spectrum_scan(EigenproblemId::signless_one_lap, g, sopts);
    for (int k = 1; k <= n; ++k) {
      Rational c = 1 - h_plus_k(k);
      bool present = std::any_of(points.begin(), points.end(), [&](const SpectrumPoint& p) { return p.lambda == c; });
      double cd = to_double(c);
      InequalityReport identity = make_report("forest_identity", k, cd, cd, cd, to_string(c), to_string(c), to_string(c));
      identity.holds = present;
      out.push_back(identity);
      out.push_back(make_report("forest_dual_cheeger", k, cd * cd / 2, 2 - lam[n - k], 2 * cd,
                                to_string(Rational(c * c / 2)), "", to_string(Rational(2 * c))));
    }
  }
  if (wants(InequalityKind::multiplicity)) {
    out.push_back(multiplicity_bounds_check(g, std::max(24, opts.cap.value_or(24))));
  }
  return out;
}

}  // namespace nlcut
