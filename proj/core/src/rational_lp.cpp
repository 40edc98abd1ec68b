#include "nlcut/rational_lp.hpp"

#include <map>

#include "nlcut/errors.hpp"

namespace nlcut {

int ExactLp::add_variable(const Rational& lo, const Rational& hi) {
  lo_.push_back(lo);
  hi_.push_back(hi);
  return static_cast<int>(lo_.size()) - 1;
}

void ExactLp::add_equality(std::vector<std::pair<int, Rational>> terms, const Rational& rhs) {
  std::map<int, Rational> merged;
  for (auto& [var, coef] : terms) {
    if (var < 0 || var >= variables()) throw Error(ErrorCode::invalid_argument, "unknown LP variable");
    merged[var] += coef;
  }
  Row row;
  for (auto& [var, coef] : merged) {
    if (coef != 0) row.terms.emplace_back(var, coef);
  }
  row.rhs = rhs;
  rows_.push_back(std::move(row));
}

bool ExactLp::presolve(std::vector<bool>& fixed, std::vector<bool>& active_row) {
  const int nv = variables();
  for (int j = 0; j < nv; ++j) {
    if (lo_[j] > hi_[j]) return false;
    if (lo_[j] == hi_[j]) {
      fixed[j] = true;
      value_[j] = lo_[j];
    }
  }
  bool changed = true;
  Rational residual, low, high, forced;
  while (changed) {
    changed = false;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!active_row[r]) continue;
      const Row& row = rows_[r];
      residual = row.rhs;
      low = 0;
      high = 0;
      int free_count = 0, last_free = -1;
      Rational last_coef;
      for (const auto& [var, coef] : row.terms) {
        if (fixed[var]) {
          residual -= coef * value_[var];
          continue;
        }
        ++free_count;
        last_free = var;
        last_coef = coef;
        if (coef > 0) {
          low += coef * lo_[var];
          high += coef * hi_[var];
        } else {
          low += coef * hi_[var];
          high += coef * lo_[var];
        }
      }
      if (free_count == 0) {
        if (residual != 0) return false;
        active_row[r] = false;
        continue;
      }
      if (residual < low || residual > high) return false;
      if (free_count == 1) {
        value_[last_free] = residual / last_coef;
        fixed[last_free] = true;
        active_row[r] = false;
        changed = true;
        continue;
      }
      if (residual == low || residual == high) {
        // Forcing row: every free variable sits at the bound that attains it.
        bool at_low = residual == low;
        for (const auto& [var, coef] : row.terms) {
          if (fixed[var]) continue;
          value_[var] = ((coef > 0) == at_low) ? lo_[var] : hi_[var];
          fixed[var] = true;
        }
        active_row[r] = false;
        changed = true;
      }
    }
  }
  return true;
}

bool ExactLp::simplex(const std::vector<bool>& fixed, const std::vector<bool>& active_row) {
  std::vector<int> cols;  // structural column -> LP variable
  std::vector<int> col_of(variables(), -1);
  for (int j = 0; j < variables(); ++j) {
    if (!fixed[j]) {
      col_of[j] = static_cast<int>(cols.size());
      cols.push_back(j);
    }
  }
  std::vector<int> row_ids;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (active_row[r]) row_ids.push_back(static_cast<int>(r));
  }
  const int m = static_cast<int>(row_ids.size());
  const int ns = static_cast<int>(cols.size());
  if (m == 0) {
    for (int j : cols) value_[j] = lo_[j];
    return true;
  }
  const int width = ns + m;

  // Shift structural variables to [0, upper]; artificial columns follow.
  std::vector<Rational> upper(ns);
  for (int c = 0; c < ns; ++c) upper[c] = hi_[cols[c]] - lo_[cols[c]];

  std::vector<std::vector<Rational>> tab(m, std::vector<Rational>(width));
  std::vector<Rational> beta(m);
  for (int i = 0; i < m; ++i) {
    const Row& row = rows_[row_ids[i]];
    Rational rhs = row.rhs;
    for (const auto& [var, coef] : row.terms) {
      if (fixed[var]) {
        rhs -= coef * value_[var];
      } else {
        tab[i][col_of[var]] = coef;
        rhs -= coef * lo_[var];
      }
    }
    if (rhs < 0) {
      for (int c = 0; c < ns; ++c) tab[i][c] = -tab[i][c];
      rhs = -rhs;
    }
    tab[i][ns + i] = 1;
    beta[i] = rhs;
  }

  std::vector<int> basis(m);
  std::vector<int> row_of(width, -1);
  std::vector<bool> at_upper(width, false);
  for (int i = 0; i < m; ++i) {
    basis[i] = ns + i;
    row_of[ns + i] = i;
  }

  auto is_artificial = [ns](int c) { return c >= ns; };
  auto current = [&](int c) -> Rational {
    if (row_of[c] >= 0) return beta[row_of[c]];
    return at_upper[c] ? upper[c] : Rational(0);
  };

  Rational reduced, step, limit, ratio;
  while (true) {
    Rational infeasibility;
    for (int i = 0; i < m; ++i) {
      if (is_artificial(basis[i])) infeasibility += beta[i];
    }
    if (infeasibility == 0) break;

    // Bland: lowest-index structural column with an improving direction.
    int enter = -1, direction = 0;
    for (int c = 0; c < ns && enter < 0; ++c) {
      if (row_of[c] >= 0) continue;
      reduced = 0;
      for (int i = 0; i < m; ++i) {
        if (is_artificial(basis[i])) reduced -= tab[i][c];
      }
      if (!at_upper[c] && reduced < 0 && upper[c] > 0) {
        enter = c;
        direction = 1;
      } else if (at_upper[c] && reduced > 0) {
        enter = c;
        direction = -1;
      }
    }
    if (enter < 0) return false;

    // Ratio test; ties go to the lowest variable index.
    int leave_row = -1, leave_var = enter;
    bool leave_to_upper = direction < 0;
    bool bounded = true;
    step = upper[enter];
    for (int i = 0; i < m; ++i) {
      const Rational& a = tab[i][enter];
      if (a == 0) continue;
      int b = basis[i];
      bool decreasing = (direction > 0) == (a > 0);
      if (decreasing) {
        limit = beta[i] / abs(a);
      } else if (!is_artificial(b)) {
        limit = (upper[b] - beta[i]) / abs(a);
      } else {
        continue;
      }
      if (!bounded || limit < step || (limit == step && b < leave_var)) {
        step = limit;
        leave_row = i;
        leave_var = b;
        leave_to_upper = !decreasing;
        bounded = true;
      }
    }

    for (int i = 0; i < m; ++i) {
      if (tab[i][enter] != 0) beta[i] -= direction * step * tab[i][enter];
    }
    if (leave_row < 0) {
      at_upper[enter] = direction > 0;
      continue;
    }

    ++pivots_;
    Rational entering_value = (direction > 0 ? Rational(0) : upper[enter]) + direction * step;
    int out = basis[leave_row];
    row_of[out] = -1;
    at_upper[out] = leave_to_upper;
    basis[leave_row] = enter;
    row_of[enter] = leave_row;
    at_upper[enter] = false;

    Rational pivot = tab[leave_row][enter];
    for (int c = 0; c < width; ++c) {
      if (tab[leave_row][c] != 0) tab[leave_row][c] /= pivot;
    }
    beta[leave_row] = entering_value;
    for (int i = 0; i < m; ++i) {
      if (i == leave_row) continue;
      Rational factor = tab[i][enter];
      if (factor == 0) continue;
      for (int c = 0; c < width; ++c) {
        if (tab[leave_row][c] != 0) tab[i][c] -= factor * tab[leave_row][c];
      }
    }
  }

  for (int c = 0; c < ns; ++c) value_[cols[c]] = lo_[cols[c]] + current(c);
  return true;
}

bool ExactLp::solve() {
  pivots_ = 0;
  value_.assign(variables(), Rational(0));
  std::vector<bool> fixed(variables(), false);
  std::vector<bool> active_row(rows_.size(), true);
  if (!presolve(fixed, active_row)) return false;
  return simplex(fixed, active_row);
}

}  // namespace nlcut
