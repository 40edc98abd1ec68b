#pragma once

#include <utility>
#include <vector>

#include "nlcut/rational.hpp"

namespace nlcut {

/// Feasibility of { A y = b, lo <= y <= hi } over the rationals, with every
/// variable boxed. Presolve handles fixed, singleton and forcing rows; the
/// rest goes to a bounded-variable phase-one simplex with Bland's rule.
class ExactLp {
 public:
  int add_variable(const Rational& lo, const Rational& hi);
  void add_equality(std::vector<std::pair<int, Rational>> terms, const Rational& rhs);

  /// True when a feasible point exists; value() then returns it.
  bool solve();

  const Rational& value(int var) const { return value_[var]; }
  int variables() const { return static_cast<int>(lo_.size()); }
  int constraints() const { return static_cast<int>(rows_.size()); }
  /// Simplex pivots of the last solve; zero when presolve decided.
  int pivots() const { return pivots_; }

 private:
  struct Row {
    std::vector<std::pair<int, Rational>> terms;
    Rational rhs;
  };

  bool presolve(std::vector<bool>& fixed, std::vector<bool>& active_row);
  bool simplex(const std::vector<bool>& fixed, const std::vector<bool>& active_row);

  std::vector<Rational> lo_, hi_;
  std::vector<Row> rows_;
  std::vector<Rational> value_;
  int pivots_ = 0;
};

}  // namespace nlcut
