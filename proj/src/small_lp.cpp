#include "latework/small_lp.hpp"

#include <stdexcept>

namespace latework {

namespace {

// Dense tableau in canonical form with respect to `basis`.
struct Tableau {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> a;    // rows x cols
  std::vector<Rational> rhs;  // rows
  std::vector<Rational> reduced;  // c_j - c_B B^-1 A_j
  Rational value;
  std::vector<std::size_t> basis;

  Rational& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }

  void pivot(std::size_t pr, std::size_t pc) {
    const Rational inv = 1 / at(pr, pc);
    for (std::size_t c = 0; c < cols; ++c) {
      if (sgn(at(pr, c)) != 0) at(pr, c) *= inv;
    }
    rhs[pr] *= inv;

    std::vector<std::size_t> nz;
    for (std::size_t c = 0; c < cols; ++c) {
      if (sgn(at(pr, c)) != 0) nz.push_back(c);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr) continue;
      const Rational factor = at(r, pc);
      if (sgn(factor) == 0) continue;
      for (std::size_t c : nz) at(r, c) -= factor * at(pr, c);
      rhs[r] -= factor * rhs[pr];
    }
    const Rational factor = reduced[pc];
    if (sgn(factor) != 0) {
      for (std::size_t c : nz) reduced[c] -= factor * at(pr, c);
      value += factor * rhs[pr];
    }
    basis[pr] = pc;
  }
};

}  // namespace

BasicLpSolution solve_small_lp(const SmallLp& lp) {
  const std::size_t m = lp.machine_count();
  const std::size_t n = lp.job_count();
  if (lp.jobs.size() != n || lp.count_capacity.size() != m) {
    throw std::invalid_argument("SmallLp: inconsistent dimensions");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (lp.time_capacity[i] < 0 || lp.count_capacity[i] < 0) {
      throw std::invalid_argument("SmallLp: capacities must be nonnegative");
    }
  }

  BasicLpSolution sol;
  sol.x.assign(m + 1, std::vector<Rational>(n, Rational(0)));
  sol.duals.assign(2 * m + n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) sol.x[0][j] = 1;
  if (n == 0) return sol;

  // Columns: x[i][j] at i*n + j, then time slacks, then count slacks.
  const std::size_t structural = (m + 1) * n;
  const auto col_x = [n](std::size_t i, std::size_t j) { return i * n + j; };
  const auto col_time_slack = [&](std::size_t i) { return structural + i; };
  const auto col_count_slack = [&](std::size_t i) { return structural + m + i; };

  Tableau tab;
  tab.rows = 2 * m + n;
  tab.cols = structural + 2 * m;
  tab.a.assign(tab.rows * tab.cols, Rational(0));
  tab.rhs.assign(tab.rows, Rational(0));
  tab.reduced.assign(tab.cols, Rational(0));
  tab.basis.assign(tab.rows, 0);

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      tab.at(i, col_x(i + 1, j)) = from_time(lp.sizes[j]);
      tab.at(m + i, col_x(i + 1, j)) = 1;
    }
    tab.at(i, col_time_slack(i)) = 1;
    tab.at(m + i, col_count_slack(i)) = 1;
    tab.rhs[i] = from_time(lp.time_capacity[i]);
    tab.rhs[m + i] = from_time(lp.count_capacity[i]);
    tab.basis[i] = col_time_slack(i);
    tab.basis[m + i] = col_count_slack(i);
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i <= m; ++i) tab.at(2 * m + j, col_x(i, j)) = 1;
    tab.rhs[2 * m + j] = 1;
    tab.basis[2 * m + j] = col_x(0, j);
  }
  // Every basic column has cost zero, so the initial reduced costs equal c.
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 0; j < n; ++j) tab.reduced[col_x(i, j)] = from_time(lp.sizes[j]);
  }

  while (true) {
    std::size_t entering = tab.cols;
    for (std::size_t c = 0; c < tab.cols; ++c) {
      if (sgn(tab.reduced[c]) > 0) {
        entering = c;
        break;
      }
    }
    if (entering == tab.cols) break;

    std::size_t leaving = tab.rows;
    Rational best_ratio;
    for (std::size_t r = 0; r < tab.rows; ++r) {
      const Rational& coef = tab.at(r, entering);
      if (sgn(coef) <= 0) continue;
      Rational ratio = tab.rhs[r] / coef;
      if (leaving == tab.rows || ratio < best_ratio ||
          (ratio == best_ratio && tab.basis[r] < tab.basis[leaving])) {
        leaving = r;
        best_ratio = std::move(ratio);
      }
    }
    if (leaving == tab.rows) throw std::logic_error("SmallLp reported unbounded; it is bounded by sum p_j");
    tab.pivot(leaving, entering);
    ++sol.pivots;
  }

  for (auto& row : sol.x) std::fill(row.begin(), row.end(), Rational(0));
  for (std::size_t r = 0; r < tab.rows; ++r) {
    const std::size_t c = tab.basis[r];
    if (c < structural) sol.x[c / n][c % n] = tab.rhs[r];
  }
  sol.objective = tab.value;

  // Duals: y_r = c_s - reduced_s for the column s that is the unit vector of
  // row r in the original matrix (a slack, or x[0][j] for job rows).
  for (std::size_t i = 0; i < m; ++i) {
    sol.duals[i] = -tab.reduced[col_time_slack(i)];
    sol.duals[m + i] = -tab.reduced[col_count_slack(i)];
  }
  for (std::size_t j = 0; j < n; ++j) sol.duals[2 * m + j] = -tab.reduced[col_x(0, j)];
  return sol;
}

bool is_lp_feasible(const SmallLp& lp, const std::vector<std::vector<Rational>>& x) {
  const std::size_t m = lp.machine_count();
  const std::size_t n = lp.job_count();
  if (x.size() != m + 1) return false;
  for (const auto& row : x) {
    if (row.size() != n) return false;
    for (const auto& v : row) {
      if (sgn(v) < 0) return false;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    Rational time = 0;
    Rational count = 0;
    for (std::size_t j = 0; j < n; ++j) {
      time += x[i + 1][j] * from_time(lp.sizes[j]);
      count += x[i + 1][j];
    }
    if (time > from_time(lp.time_capacity[i]) || count > from_time(lp.count_capacity[i])) return false;
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rational total = 0;
    for (std::size_t i = 0; i <= m; ++i) total += x[i][j];
    if (total != 1) return false;
  }
  return true;
}

Rational lp_objective(const SmallLp& lp, const std::vector<std::vector<Rational>>& x) {
  Rational value = 0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    for (std::size_t j = 0; j < lp.job_count(); ++j) value += x[i][j] * from_time(lp.sizes[j]);
  }
  return value;
}

std::size_t fractional_job_count(const std::vector<std::vector<Rational>>& x) {
  if (x.empty()) return 0;
  std::size_t count = 0;
  for (std::size_t j = 0; j < x.front().size(); ++j) {
    bool fractional = false;
    for (const auto& row : x) fractional = fractional || (sgn(row[j]) > 0 && row[j] < 1);
    if (fractional) ++count;
  }
  return count;
}

std::size_t support_size(const std::vector<std::vector<Rational>>& x) {
  std::size_t count = 0;
  for (const auto& row : x) {
    for (const auto& v : row) count += sgn(v) > 0 ? 1 : 0;
  }
  return count;
}

Rational integral_part_value(const SmallLp& lp, const std::vector<std::vector<Rational>>& x) {
  Rational value = 0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    for (std::size_t j = 0; j < lp.job_count(); ++j) {
      if (x[i][j] == 1) value += from_time(lp.sizes[j]);
    }
  }
  return value;
}

}  // namespace latework
