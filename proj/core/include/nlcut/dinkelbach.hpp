#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nlcut/eigen.hpp"
#include "nlcut/functionals.hpp"
#include "nlcut/oracles.hpp"

namespace nlcut {

enum class Opt { min, max };
enum class DomainKind { nonzero, nonconstant_2cut, nonconstant_3cut };

const char* to_string(DomainKind kind);

/// Q = (f1 - f2) / (g1 - g2) with positively homogeneous convex pieces,
/// optimized over the compact set Omega selected by the domain kind.
struct RatioProblem {
  ProblemId id;
  std::string f1, f2, g1, g2;
  Opt opt;
  DomainKind domain;
};

const RatioProblem& ratio_problem(ProblemId id);

/// Exact membership in Omega: |x|_1 = 1, plus max + min = 0 for 2-cut
/// domains, or that or a zero coordinate for 3-cut domains.
bool in_omega(DomainKind kind, const RVector& x);

/// Shifts so that max + min = 0 when needed, then scales to |x|_1 = 1.
/// Throws NotInOmega when nothing nonzero is left.
RVector project_to_omega(DomainKind kind, const RVector& x);

enum class InnerSolver { exact_enum, local_flip };

const char* to_string(InnerSolver s);
InnerSolver parse_inner(const std::string& name);

struct DinkelbachOptions {
  InnerSolver inner = InnerSolver::exact_enum;
  std::optional<int> cap;
  int workers = 1;
  std::uint64_t seed = 1;
  int restarts = 16;
  int max_iterations = 10000;
};

struct DinkelbachStep {
  int k = 0;
  Rational r;
  RVector x;
  /// Inner objective at r_{k-1} attained by x_k; zero for the start point.
  Rational inner_value;
};

struct DinkelbachTrace {
  ProblemId problem;
  InnerSolver inner;
  std::vector<DinkelbachStep> iterations;
  bool converged = false;
  /// Support pair of the final iterate with its ratio.
  CutCertificate final;
  /// False for local_flip, whose result carries no optimality claim.
  bool exact = true;
};

/// Two-step iteration x_{k+1} = argopt over Omega of
/// f1 + r_k g2 - f2 - r_k g1, r_{k+1} = Q(x_{k+1}), stopping at r_{k+1} = r_k.
/// x0 defaults to the indicator of vertex 0; it is projected onto Omega.
/// exact_enum scans scaled ternary vectors with lexicographically smallest
/// (A, B) among ties and throws TooLarge above its cap (12 by default).
/// Throws Disconnected for cheeger_tv and cheeger_new on disconnected graphs.
DinkelbachTrace solve(const RatioProblem& problem, const Graph& g, const std::optional<RVector>& x0 = std::nullopt,
                      const DinkelbachOptions& opts = {});

EigenproblemId eigenproblem_for(ProblemId id);

/// Verifies (lambda, x) against the eigenproblem of the ratio problem.
/// Throws NonconstantRequired for constant x on nonconstant domains.
bool stationary_check(ProblemId id, const Graph& g, const Rational& lambda, const RVector& x);

}  // namespace nlcut
