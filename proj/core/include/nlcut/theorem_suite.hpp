#pragma once

#include <string>
#include <vector>

#include "nlcut/graph.hpp"

namespace nlcut {

struct CorpusEntry {
  std::string name;
  Graph graph;
};

/// Every *.txt graph in dir, ordered by file name.
std::vector<CorpusEntry> load_corpus(const std::string& dir);

struct SuiteOptions {
  /// Largest n for the exhaustive ternary checks.
  int exhaustive_cap = 8;
  /// Largest n for the spectral inequality checks.
  int inequality_cap = 10;
  /// Threads over corpus graphs; results do not depend on it.
  int workers = 1;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  long checked = 0;
  long failed = 0;
  /// The first failures, in corpus order.
  std::vector<std::string> failures;
  bool passed() const { return failed == 0 && checked > 0; }
};

/// Continuous optima over the ternary grid equal the combinatorial constants.
CriterionResult check_ratio_equivalence(const std::vector<CorpusEntry>& corpus, const SuiteOptions& opts = {});
/// Exact-inner Dinkelbach runs reach the oracle value with monotone traces.
CriterionResult check_dinkelbach_exactness(const std::vector<CorpusEntry>& corpus, const SuiteOptions& opts = {});
/// Indicator vectors of every subset verify at their closed-form eigenvalues.
CriterionResult check_eigenpair_constructors(const std::vector<CorpusEntry>& corpus, const SuiteOptions& opts = {});
/// Extreme scanned eigenvalues equal h, 1 - h+, the maxcut ratio, M_2 and M_n.
CriterionResult check_spectral_identities(const std::vector<CorpusEntry>& corpus, const SuiteOptions& opts = {});
/// Nodal structure of every scanned maxcut_inf and anti_cheeger eigenpair.
CriterionResult check_structure_theorems(const std::vector<CorpusEntry>& corpus, const SuiteOptions& opts = {});
/// Star-of-triangles maximal eigenvectors for k = 1, 2, 3.
CriterionResult check_star_triangle(const SuiteOptions& opts = {});
/// Linear spectral inequalities with exact constants.
CriterionResult check_inequalities(const std::vector<CorpusEntry>& corpus, const SuiteOptions& opts = {});
/// Petersen graph maxcut ratio 4/5, cut 12 and independence number 4, each
/// computed along two paths.
CriterionResult check_petersen(const SuiteOptions& opts = {});

/// Criteria 1 to 8 in order.
std::vector<CriterionResult> run_suite(const std::vector<CorpusEntry>& corpus, const SuiteOptions& opts = {});

}  // namespace nlcut
