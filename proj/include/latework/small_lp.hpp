#pragma once

// LP relaxation for placing small jobs into the idle time before d:
//
//   max  sum_{i>=1} sum_j x[i][j] p_j
//   s.t. sum_j x[i][j] p_j <= time_capacity[i-1]     i = 1..m
//        sum_j x[i][j]     <= count_capacity[i-1]    i = 1..m
//        sum_{i>=0} x[i][j] = 1                      every small job j
//        x >= 0
//
// Row 0 of x is "not placed before d". Solved exactly over the rationals by
// a primal simplex with Bland's rule, so the result is a vertex.

#include "latework/model.hpp"
#include "latework/rational.hpp"

#include <vector>

namespace latework {

struct SmallLp {
  std::vector<JobId> jobs;            // instance ids of the small jobs, column order
  std::vector<Time> sizes;            // p_j per column
  std::vector<Time> time_capacity;    // P_small per machine, >= 0
  std::vector<Time> count_capacity;   // n_small per machine, >= 0

  std::size_t machine_count() const noexcept { return time_capacity.size(); }
  std::size_t job_count() const noexcept { return sizes.size(); }
  std::size_t row_count() const noexcept { return 2 * machine_count() + job_count(); }
};

struct BasicLpSolution {
  /// x[i][j], i = 0..m, j = column index into SmallLp::jobs.
  std::vector<std::vector<Rational>> x;
  Rational objective;
  /// Optimal dual values: time rows, then count rows, then job rows.
  std::vector<Rational> duals;
  int pivots = 0;
};

/// Throws std::invalid_argument on mismatched sizes or negative capacities.
BasicLpSolution solve_small_lp(const SmallLp& lp);

/// Exact check of every constraint row and of x >= 0.
bool is_lp_feasible(const SmallLp& lp, const std::vector<std::vector<Rational>>& x);

Rational lp_objective(const SmallLp& lp, const std::vector<std::vector<Rational>>& x);

/// Number of jobs j with 0 < x[i][j] < 1 for some i.
std::size_t fractional_job_count(const std::vector<std::vector<Rational>>& x);

/// Number of strictly positive entries of x.
std::size_t support_size(const std::vector<std::vector<Rational>>& x);

/// Objective of the integral part: sum of p_j over x[i][j] == 1, i >= 1.
Rational integral_part_value(const SmallLp& lp, const std::vector<std::vector<Rational>>& x);

}  // namespace latework
