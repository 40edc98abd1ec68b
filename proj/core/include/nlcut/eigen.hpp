#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nlcut/functionals.hpp"
#include "nlcut/graph.hpp"
#include "nlcut/oracles.hpp"

namespace nlcut {

/// The set-valued eigenproblems checked by verify().
///   one_lap          0 in Delta_1 x - lambda dN(x)
///   signless_one_lap 0 in Delta_1^+ x - lambda mu Sgn(x)
///   hat_signless     0 in (1 - lambda) Delta_1^+ x - lambda Delta_1 x
///   cheeger_new      0 in e d|x|_inf - Delta_1^+ x - lambda dN(x)
///   maxcut_inf       0 in Delta_1 x - lambda vol(V) d|x|_inf
///   anti_cheeger     0 in Delta_1 x - 2 lambda vol(V) d|x|_inf + lambda dN(x)
enum class EigenproblemId { one_lap, signless_one_lap, hat_signless, cheeger_new, maxcut_inf, anti_cheeger };

const char* to_string(EigenproblemId id);
/// Accepts the canonical names plus signless, hat, maxcut, anti.
EigenproblemId parse_eigenproblem(const std::string& name);
const std::vector<EigenproblemId>& all_eigenproblems();

/// Ratio whose value an eigenvector of the problem must attain.
ProblemId ratio_for(EigenproblemId id);

/// Subgradient selections that certify an eigenpair. Edge-indexed entries
/// follow Graph::edges() and are oriented from the smaller endpoint.
struct EigenWitness {
  std::vector<Rational> z;       // z_uv in Sgn(x_u - x_v)
  std::vector<Rational> z_plus;  // z_uv in Sgn(x_u + x_v)
  std::vector<Rational> v;       // v_i in mu_i Sgn(x_i - c_x), summing to zero
  std::vector<Rational> s;       // s_i in Sgn(x_i)
  std::vector<Rational> p;       // share of the sup-norm term at each vertex, in [0, 1]
  std::optional<Rational> c_x;   // median used for v
};

struct EigenpairReport {
  EigenproblemId problem = EigenproblemId::one_lap;
  bool raw_form = false;
  bool verdict = false;
  Rational lambda;
  RVector x;
  EigenWitness witness;
  std::string violated;
};

struct VerifyOptions {
  /// one_lap only: check 0 in Delta_1 x - lambda mu Sgn(x) without centering.
  bool raw_one_lap = false;
};

/// Decides exactly whether (lambda, x) is an eigenpair by solving the linear
/// feasibility system over the subgradient selections. For systems with a
/// median term every candidate median is tried: both ends of the median
/// interval, coordinates inside it, and midpoints between them.
/// Throws ZeroVector for x = 0 and NonconstantRequired for constant x in cheeger_new.
EigenpairReport verify(EigenproblemId id, const Graph& g, const Rational& lambda, const RVector& x,
                       const VerifyOptions& opts = {});

/// numerator(x) == lambda * denominator(x) for the problem's ratio.
bool rayleigh_consistency(EigenproblemId id, const Graph& g, const Rational& lambda, const RVector& x);

enum class BinarizeVariant {
  canonical,   // 1_{D+, D+^c} for the sup-norm problems
  plus_minus,  // 1_{D+, D-}
};

/// Induced two- or three-valued vector with the same eigenvalue:
/// maxcut_inf, anti_cheeger: 1_{D+, D+^c} (or 1_{D+, D-});
/// cheeger_new, signless_one_lap, hat_signless: sign(x);
/// one_lap: sign(x - c) with c the lower median.
RVector binarize(EigenproblemId id, const Graph& g, const RVector& x,
                 BinarizeVariant variant = BinarizeVariant::canonical);

enum class CandidateFamily {
  automatic,  // binary for the sup-norm problems, ternary otherwise
  binary,     // 1_{A, A^c}
  ternary,    // 1_A - 1_B
};

struct ScanOptions {
  std::optional<int> cap;
  int workers = 1;
  CandidateFamily family = CandidateFamily::automatic;
  bool raw_one_lap = false;
};

struct SpectrumPoint {
  Rational lambda;
  CutCertificate witness;  // set_pair [x > 0, x < 0] of one verified eigenvector
};

/// Eigenvalues carried by two- or three-valued eigenvectors, ascending, one
/// witness each. Each candidate is tested at its own ratio value, which any
/// eigenvector must attain; x and -x are scanned once.
std::vector<SpectrumPoint> spectrum_scan(EigenproblemId id, const Graph& g, const ScanOptions& opts = {});

/// Every verified candidate eigenpair, in candidate order.
std::vector<EigenpairReport> eigenvector_scan(EigenproblemId id, const Graph& g, const ScanOptions& opts = {});

/// Candidate vectors in scan order (first nonzero entry positive).
std::vector<RVector> scan_candidates(int n, CandidateFamily family);

}  // namespace nlcut
