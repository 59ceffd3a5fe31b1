#pragma once

// Job classification (huge / big / small), geometric rounding grids and the
// enumeration of big-job assignments and layouts.

#include "latework/model.hpp"
#include "latework/rational.hpp"

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace latework {

enum class RoundingMode { down, up };

/// Throws std::invalid_argument unless 0 < eps <= 1/3.
void require_eps(const Rational& eps);

/// floor(log_{1+eps}(1/eps^2)) + 1, computed exactly.
int class_bound(const Rational& eps);

/// Distinct integer values ceil(eps^2 d (1+eps)^k) below d (mode down), or
/// floor(eps^2 d (1+eps)^k) up to and including the first value >= d (mode
/// up). Zero values are dropped.
struct RoundingGrid {
  RoundingMode mode = RoundingMode::down;
  std::vector<Time> values;
};

/// Requires d >= 1 and 0 < eps < 1.
RoundingGrid build_grid(Time due_date, const Rational& eps, RoundingMode mode);

/// Largest grid value <= p (down) or smallest grid value >= p (up).
/// Throws std::domain_error when no grid value qualifies.
Time round_job(Time p, const RoundingGrid& grid);

struct BigClass {
  Time rounded = 0;
  std::vector<JobId> jobs;  // longest actual job first, ties by id
};

struct JobClasses {
  Rational eps;
  RoundingGrid grid;
  std::vector<JobId> huge;   // p >= d
  std::vector<JobId> big;    // eps^2 d <= p < d
  std::vector<JobId> small;  // p < eps^2 d
  std::vector<BigClass> big_classes;  // one per grid value, possibly empty
};

JobClasses classify_jobs(const Instance& inst, const Rational& eps, RoundingMode mode = RoundingMode::down);

/// Caps on enumeration size. The layout count grows like C(m + k2, k2) and
/// k2 is exponential in 1/eps^2, so large eps-instances need an explicit bound.
struct GuardLimits {
  std::size_t max_assignments = 1'000'000;
  std::size_t max_layouts = 10'000'000;

  /// Reads LATEWORK_GUARD as "<both>" or "<assignments>,<layouts>"; falls back
  /// to the defaults when unset.
  static GuardLimits from_environment();
};

class EnumerationGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// gamma[h] big jobs of class h start before d on one machine.
struct Assignment {
  std::vector<int> gamma;

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend auto operator<=>(const Assignment&, const Assignment&) = default;
};

/// t[i] machines use assignment i.
struct Layout {
  std::vector<int> t;

  friend bool operator==(const Layout&, const Layout&) = default;
  friend auto operator<=>(const Layout&, const Layout&) = default;
};

/// Capacity and start-before-d check, with rounded values laid out in
/// non-decreasing order.
bool is_feasible_assignment(const Assignment& a, const JobClasses& classes, const Instance& inst);

bool is_feasible_layout(const Layout& layout, const std::vector<Assignment>& assignments,
                        const JobClasses& classes, const Instance& inst);

/// All feasible assignments with gamma[h] <= |B_h|, in lexicographic order.
std::vector<Assignment> enumerate_assignments(const JobClasses& classes, const Instance& inst,
                                              const GuardLimits& limits = {});

/// Visits every feasible layout once, in lexicographic order of t. Returns
/// the number visited.
std::size_t for_each_layout(const std::vector<Assignment>& assignments, const JobClasses& classes,
                            const Instance& inst, const GuardLimits& limits,
                            const std::function<void(const Layout&)>& visit);

std::vector<Layout> enumerate_layouts(const std::vector<Assignment>& assignments, const JobClasses& classes,
                                      const Instance& inst, const GuardLimits& limits = {});

}  // namespace latework
