#include "nlcut/nodal.hpp"

#include <algorithm>

#include "nlcut/errors.hpp"
#include "nlcut/functionals.hpp"

namespace nlcut {

namespace {

std::vector<VertexSet> merged(std::vector<VertexSet> a, const std::vector<VertexSet>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end(), [](VertexSet p, VertexSet q) { return p.first() < q.first(); });
  return a;
}

void require_verified(const EigenpairReport& report) {
  if (!report.verdict) {
    throw Error(ErrorCode::not_verified, std::string(to_string(report.problem)) + " pair was not verified");
  }
}

StructureCheck make_check(std::string name, bool holds, std::string detail) {
  return {std::move(name), holds, std::move(detail)};
}

bool any_inner_median(const Graph& g, const RVector& x) {
  Interval iv = median_interval(g, x);
  Rational bound = sup_norm(x);
  // The median set is an interval; test its point closest to zero.
  Rational closest = iv.lo > 0 ? iv.lo : (iv.hi < 0 ? iv.hi : Rational(0));
  return abs(closest) < bound;
}

/// Components of plus u minus joined only by edges with one end in each.
std::vector<VertexSet> cross_components(const Graph& g, VertexSet plus, VertexSet minus) {
  std::vector<VertexSet> out;
  VertexSet left = plus | minus;
  while (!left.empty()) {
    VertexSet comp({left.first()});
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier.ids()) {
        next = next | (g.neighbor_set(v) & (plus.contains(v) ? minus : plus));
      }
      next = (next & left) - comp;
      comp = comp | next;
      frontier = next;
    }
    out.push_back(comp);
    left = left - comp;
  }
  return out;
}

}  // namespace

const char* to_string(NodalConvention c) {
  switch (c) {
    case NodalConvention::sign_based: return "sign_based";
    case NodalConvention::support_based: return "support_based";
    case NodalConvention::sup_norm_based: return "sup_norm_based";
  }
  return "?";
}

NodalConvention parse_convention(const std::string& name) {
  if (name == "sign_based" || name == "sign") return NodalConvention::sign_based;
  if (name == "support_based" || name == "support") return NodalConvention::support_based;
  if (name == "sup_norm_based" || name == "sup_norm") return NodalConvention::sup_norm_based;
  throw Error(ErrorCode::invalid_argument, "unknown convention '" + name + "'");
}

NodalReport analyze(const Graph& g, const RVector& x, NodalConvention convention) {
  if (static_cast<int>(x.size()) != g.n()) {
    throw Error(ErrorCode::invalid_argument, "vector length differs from n");
  }
  if (std::all_of(x.begin(), x.end(), [](const Rational& v) { return v == 0; })) {
    throw Error(ErrorCode::zero_vector, "analyze");
  }
  const int n = g.n();
  NodalReport r;
  r.convention = convention;
  VertexSet pos = positive_support(x), neg = negative_support(x);
  VertexSet zero = (pos | neg).complement(n);
  r.strong_pos = connected_components(g, pos);
  r.strong_neg = connected_components(g, neg);
  r.support_domains = connected_components(g, pos | neg);

  SupNormSets d = sup_norm_sets(x);
  r.d_plus = d.plus;
  r.d_minus = d.minus;
  r.d_zero = d.zero;
  for (VertexSet comp : connected_components(g, d.plus | d.minus)) {
    r.sup_components.push_back({comp & d.plus, comp & d.minus});
  }
  r.Sprime = static_cast<int>(r.sup_components.size());

  switch (convention) {
    case NodalConvention::sign_based:
      r.pm_domains = merged(r.strong_pos, r.strong_neg);
      r.null_domains = connected_components(g, zero);
      break;
    case NodalConvention::support_based:
      r.pm_domains = r.support_domains;
      r.null_domains = connected_components(g, zero);
      break;
    case NodalConvention::sup_norm_based:
      r.pm_domains = merged(connected_components(g, d.plus), connected_components(g, d.minus));
      r.null_domains = connected_components(g, d.zero);
      break;
  }
  r.S = static_cast<int>(r.pm_domains.size());
  r.S0 = static_cast<int>(r.null_domains.size());
  r.N_nonsingleton = static_cast<int>(
      std::count_if(r.null_domains.begin(), r.null_domains.end(), [](VertexSet s) { return s.size() >= 2; }));
  return r;
}

bool check_null_symmetry(const Graph& g, const EigenpairReport& report) {
  require_verified(report);
  if (report.problem != EigenproblemId::maxcut_inf) {
    throw Error(ErrorCode::invalid_argument, "null symmetry applies to maxcut_inf eigenpairs");
  }
  SupNormSets d = sup_norm_sets(report.x);
  for (VertexSet omega : connected_components(g, d.zero)) {
    if (cut_weight(g, d.plus, omega) != cut_weight(g, d.minus, omega)) return false;
  }
  return true;
}

bool StructureReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const StructureCheck& c) { return c.holds; });
}

std::vector<StructureCheck> courant_checks(const NodalReport& nodal, int k, int r) {
  return {make_check("courant_S", nodal.S <= k + r - 1,
                     "S=" + std::to_string(nodal.S) + " bound=" + std::to_string(k + r - 1)),
          make_check("courant_S0", nodal.S0 <= k + r - 2,
                     "S0=" + std::to_string(nodal.S0) + " bound=" + std::to_string(k + r - 2))};
}

StructureReport check_max_eigvec_structure(const Graph& g, const EigenpairReport& report,
                                           const StructureOptions& opts) {
  require_verified(report);
  const EigenproblemId id = report.problem;
  if (id != EigenproblemId::maxcut_inf && id != EigenproblemId::anti_cheeger) {
    throw Error(ErrorCode::invalid_argument,
                std::string("largest-eigenvalue structure is defined for maxcut_inf and anti_cheeger, not ") +
                    to_string(id));
  }
  const int n = g.n();
  StructureReport out;
  out.nodal = analyze(g, report.x, NodalConvention::sup_norm_based);
  const NodalReport& nr = out.nodal;

  bool edgeless = inner_weight(g, nr.d_zero) == 0;
  out.checks.push_back(make_check("null_edgeless", edgeless, "D0=" + to_string(nr.d_zero)));

  if (id == EigenproblemId::maxcut_inf) {
    // Components of D+ u D- under D+/D- edges alone coincide with the induced ones.
    std::vector<VertexSet> cross = cross_components(g, nr.d_plus, nr.d_minus);
    std::vector<VertexSet> induced;
    for (const SupNormComponent& c : nr.sup_components) induced.push_back(c.a | c.b);
    out.checks.push_back(make_check("bipartite_components", cross == induced,
                                    std::to_string(cross.size()) + " vs " + std::to_string(induced.size())));

    bool boundary_ok = true;
    std::string boundary_detail;
    for (const SupNormComponent& c : nr.sup_components) {
      Rational ba = boundary(g, c.a), bb = boundary(g, c.b);
      if (ba != bb) {
        boundary_ok = false;
        boundary_detail += to_string(c.a) + ":" + to_string(ba) + " vs " + to_string(c.b) + ":" + to_string(bb) + " ";
      }
    }
    out.checks.push_back(make_check("boundary_balance", boundary_ok, boundary_detail));

    bool vertex_ok = true;
    for (const SupNormComponent& c : nr.sup_components) {
      for (int v : nr.d_zero.ids()) {
        if (cut_weight(g, c.a, VertexSet{v}) != cut_weight(g, c.b, VertexSet{v})) vertex_ok = false;
      }
    }
    out.checks.push_back(make_check("null_vertex_balance", vertex_ok, ""));

    if (nr.Sprime > opts.flip_cap) {
      throw Error(ErrorCode::too_large, "sign-flip closure over 2^" + std::to_string(nr.Sprime) + " vectors");
    }
    bool flips_ok = true;
    std::string flip_detail;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nr.Sprime); ++mask) {
      VertexSet a, b;
      for (int i = 0; i < nr.Sprime; ++i) {
        const SupNormComponent& c = nr.sup_components[i];
        if ((mask >> i) & 1u) {
          a = a | c.b;
          b = b | c.a;
        } else {
          a = a | c.a;
          b = b | c.b;
        }
      }
      if (!verify(id, g, report.lambda, indicator(n, a, b)).verdict) {
        flips_ok = false;
        flip_detail = "flip mask " + std::to_string(mask) + " rejected";
        break;
      }
    }
    out.checks.push_back(make_check("sign_flip_closure", flips_ok, flip_detail));

    if (n >= 3 && is_connected(g)) {
      out.checks.push_back(make_check("sprime_bound", 2 * nr.Sprime <= n - 1,
                                      "S'=" + std::to_string(nr.Sprime) + " n=" + std::to_string(n)));
    }
  } else if (any_inner_median(g, report.x)) {
    out.checks.push_back(make_check("inner_median_null_size", nr.d_zero.size() <= 1,
                                    "|D0|=" + std::to_string(nr.d_zero.size())));
  }

  if (opts.k && opts.r) {
    for (StructureCheck& c : courant_checks(nr, *opts.k, *opts.r)) out.checks.push_back(std::move(c));
  }
  return out;
}

}  // namespace nlcut
