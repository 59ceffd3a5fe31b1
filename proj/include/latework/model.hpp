#pragma once

// Instances and schedules for P|d_j=d, n_i<=N| late/early work and for
// unit-job resource leveling, with feasibility checks and the four
// objective functions.
//
// Indices are 0-based throughout: job ids, machine indices and time slots.

#include "latework/rational.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace latework {

using JobId = std::size_t;

struct Job {
  JobId id = 0;
  Time p = 1;

  friend bool operator==(const Job&, const Job&) = default;
};

/// m identical machines, at most N jobs per machine, common due date d.
class Instance {
 public:
  /// Throws std::invalid_argument unless m, N, d and every p_j are positive
  /// and m*N >= n.
  Instance(int machines, int capacity, Time due_date, std::vector<Time> processing_times);

  int machines() const noexcept { return machines_; }
  int capacity() const noexcept { return capacity_; }
  Time due_date() const noexcept { return due_date_; }
  std::size_t job_count() const noexcept { return jobs_.size(); }
  std::span<const Job> jobs() const noexcept { return jobs_; }
  Time p(JobId j) const { return jobs_.at(j).p; }
  std::vector<Time> processing_times() const;
  Time total_processing() const noexcept { return p_sum_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  int machines_;
  int capacity_;
  Time due_date_;
  std::vector<Job> jobs_;
  Time p_sum_ = 0;
};

/// Per-machine job sequences. Jobs run back to back from time 0, so start
/// times follow from the order and are never stored.
struct Schedule {
  std::vector<std::vector<JobId>> machines;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

/// Unit-time jobs with resource demands a_j on `machines` parallel machines,
/// common deadline C (slots 0..C-1) and resource limit L.
class LevelingInstance {
 public:
  LevelingInstance(int machines, int horizon, Time limit, std::vector<Time> demands);

  int machines() const noexcept { return machines_; }
  int horizon() const noexcept { return horizon_; }
  Time limit() const noexcept { return limit_; }
  std::size_t job_count() const noexcept { return demands_.size(); }
  std::span<const Time> demands() const noexcept { return demands_; }
  Time total_demand() const noexcept { return a_sum_; }

  friend bool operator==(const LevelingInstance&, const LevelingInstance&) = default;

 private:
  int machines_;
  int horizon_;
  Time limit_;
  std::vector<Time> demands_;
  Time a_sum_ = 0;
};

struct Placement {
  int machine = 0;
  int slot = 0;

  friend bool operator==(const Placement&, const Placement&) = default;
};

/// placements[j] is the (machine, start slot) of job j.
struct LevelingSchedule {
  std::vector<Placement> placements;

  friend bool operator==(const LevelingSchedule&, const LevelingSchedule&) = default;
};

struct ValidationResult {
  bool ok = true;
  std::vector<std::string> violations;

  explicit operator bool() const noexcept { return ok; }
};

/// Raised by objective evaluation when handed an infeasible schedule.
class InvalidScheduleError : public std::invalid_argument {
 public:
  explicit InvalidScheduleError(const std::vector<std::string>& violations);
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

ValidationResult validate_schedule(const Instance& inst, const Schedule& s);

/// Includes the packing rule: k jobs in a slot occupy machines 0..k-1.
ValidationResult validate_leveling_schedule(const LevelingInstance& inst, const LevelingSchedule& s);

std::vector<Time> machine_loads(const Instance& inst, const Schedule& s);
std::vector<Time> start_times(const Instance& inst, const Schedule& s);

Time late_work(const Instance& inst, const Schedule& s);
Time early_work(const Instance& inst, const Schedule& s);

/// c * p_sum + Y. Throws std::invalid_argument for c <= 0.
Rational shifted_late_work(const Instance& inst, const Schedule& s, const Rational& c);

std::vector<Time> slot_demands(const LevelingInstance& inst, const LevelingSchedule& s);
Time leveling_above(const LevelingInstance& inst, const LevelingSchedule& s);
Time leveling_below(const LevelingInstance& inst, const LevelingSchedule& s);

/// Objective helpers on raw per-machine loads; used where a schedule is
/// still being built.
Time early_work_of_loads(std::span<const Time> loads, Time due_date);
Time late_work_of_loads(std::span<const Time> loads, Time due_date);

}  // namespace latework
