#pragma once

// Approximation algorithms for early work maximization and shifted late
// work minimization:
//
//   * huge_shortcut    optimal when at least m jobs have p_j >= d
//   * algorithm_A      layout enumeration over rounded big jobs, small jobs
//                      placed by algorithm_B (N >= n) or algorithm_C (N < n)
//   * algorithm_LS     capacity-aware list scheduling
//   * ptas_early / ptas_shifted_late  best of algorithm_A and LPT order
//
// Every returned schedule is feasible.

#include "latework/classify.hpp"
#include "latework/model.hpp"
#include "latework/small_lp.hpp"

#include <optional>
#include <span>
#include <vector>

namespace latework {

/// Machines filled from time 0 without idle time, with the residual idle
/// time before d and residual job capacity derived from actual loads.
class PartialSchedule {
 public:
  explicit PartialSchedule(const Instance& inst);

  void append(std::size_t machine, JobId job);

  std::size_t machine_count() const noexcept { return machines_.size(); }
  const std::vector<JobId>& jobs_on(std::size_t machine) const { return machines_.at(machine); }
  Time load(std::size_t machine) const { return loads_.at(machine); }
  /// P_small_i = max(0, d - load).
  Time idle_before_due(std::size_t machine) const;
  /// n_small_i = N - jobs on the machine.
  Time remaining_capacity(std::size_t machine) const;

  Schedule to_schedule() const { return Schedule{machines_}; }

 private:
  const Instance* inst_;
  std::vector<std::vector<JobId>> machines_;
  std::vector<Time> loads_;
};

struct SmallJobPlacement {
  PartialSchedule partial;
  std::vector<JobId> pending;  // small jobs not placed before d, input order kept
};

/// Returns a schedule putting one huge job first on each machine when
/// |H| >= m; such a schedule has X = m*d and is optimal. Otherwise nullopt.
std::optional<Schedule> huge_shortcut(const Instance& inst, const JobClasses& classes);

/// Greedy fill for the uncapacitated case: machine by machine, append every
/// small job (in the given order) that still finishes by d.
SmallJobPlacement algorithm_B(const Instance& inst, PartialSchedule partial, std::span<const JobId> small);

/// The LP over the residuals of `partial` for the given small jobs.
SmallLp build_small_lp(const Instance& inst, const PartialSchedule& partial, std::span<const JobId> small);

/// Solves build_small_lp exactly and keeps the jobs with x[i][j] == 1 on
/// machine i; fractional and unplaced jobs stay pending.
SmallJobPlacement algorithm_C(const Instance& inst, PartialSchedule partial, std::span<const JobId> small);

/// Non-increasing processing time, ties by job id.
std::vector<JobId> lpt_order(const Instance& inst);

/// List scheduling restricted to machines below capacity; ties on the
/// minimum load go to the lowest machine index.
Schedule algorithm_LS(const Instance& inst, std::span<const JobId> order);

/// Builds the complete schedule of one layout: huge jobs on machines
/// 0..|H|-1, big jobs per the layout, small jobs via B or C, leftovers
/// spread over the machines with room.
Schedule realize_layout(const Instance& inst, const JobClasses& classes,
                        const std::vector<Assignment>& assignments, const Layout& layout);

/// Best realize_layout schedule over all feasible layouts (largest X, first
/// layout in lexicographic order on ties). Falls back to huge_shortcut when
/// |H| >= m. Throws EnumerationGuardError when the caps are exceeded.
Schedule algorithm_A(const Instance& inst, const Rational& eps, RoundingMode mode,
                     const GuardLimits& limits = {});

/// X >= (1 - 4 eps) OPT.
Schedule ptas_early(const Instance& inst, const Rational& eps, const GuardLimits& limits = {});

/// c p_sum + Y <= (1 + 4 eps / c)(c p_sum + Y*).
Schedule ptas_shifted_late(const Instance& inst, const Rational& eps, const Rational& c,
                           const GuardLimits& limits = {});

enum class LevelingGoal { below_max, shifted_above };

/// Maps to the late-work instance, runs the matching PTAS and maps back.
/// Throws UnmappableInstanceError for zero demands.
LevelingSchedule solve_leveling(const LevelingInstance& inst, const Rational& eps, LevelingGoal goal,
                                const Rational& c = 1, const GuardLimits& limits = {});

}  // namespace latework
