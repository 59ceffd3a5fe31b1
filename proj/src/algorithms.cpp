#include "latework/algorithms.hpp"

#include "latework/reduction.hpp"

#include <algorithm>
#include <numeric>

namespace latework {

PartialSchedule::PartialSchedule(const Instance& inst)
    : inst_(&inst),
      machines_(static_cast<std::size_t>(inst.machines())),
      loads_(static_cast<std::size_t>(inst.machines()), 0) {}

void PartialSchedule::append(std::size_t machine, JobId job) {
  auto& seq = machines_.at(machine);
  if (seq.size() >= static_cast<std::size_t>(inst_->capacity())) {
    throw std::logic_error("machine capacity exceeded");
  }
  seq.push_back(job);
  loads_[machine] += inst_->p(job);
}

Time PartialSchedule::idle_before_due(std::size_t machine) const {
  return std::max<Time>(0, inst_->due_date() - loads_.at(machine));
}

Time PartialSchedule::remaining_capacity(std::size_t machine) const {
  return inst_->capacity() - static_cast<Time>(machines_.at(machine).size());
}

std::optional<Schedule> huge_shortcut(const Instance& inst, const JobClasses& classes) {
  const auto m = static_cast<std::size_t>(inst.machines());
  if (classes.huge.size() < m) return std::nullopt;
  PartialSchedule partial(inst);
  std::vector<bool> placed(inst.job_count(), false);
  for (std::size_t i = 0; i < m; ++i) {
    partial.append(i, classes.huge[i]);
    placed[classes.huge[i]] = true;
  }
  for (const auto& job : inst.jobs()) {
    if (placed[job.id]) continue;
    std::size_t target = 0;
    for (std::size_t i = 1; i < m; ++i) {
      if (partial.remaining_capacity(i) > partial.remaining_capacity(target)) target = i;
    }
    partial.append(target, job.id);
  }
  return partial.to_schedule();
}

SmallJobPlacement algorithm_B(const Instance& inst, PartialSchedule partial, std::span<const JobId> small) {
  std::vector<JobId> pending(small.begin(), small.end());
  for (std::size_t i = 0; i < partial.machine_count() && !pending.empty(); ++i) {
    std::vector<JobId> rest;
    rest.reserve(pending.size());
    for (JobId j : pending) {
      if (inst.p(j) <= partial.idle_before_due(i) && partial.remaining_capacity(i) > 0) {
        partial.append(i, j);
      } else {
        rest.push_back(j);
      }
    }
    pending = std::move(rest);
  }
  return {std::move(partial), std::move(pending)};
}

SmallLp build_small_lp(const Instance& inst, const PartialSchedule& partial, std::span<const JobId> small) {
  SmallLp lp;
  lp.jobs.assign(small.begin(), small.end());
  for (JobId j : small) lp.sizes.push_back(inst.p(j));
  for (std::size_t i = 0; i < partial.machine_count(); ++i) {
    lp.time_capacity.push_back(partial.idle_before_due(i));
    lp.count_capacity.push_back(partial.remaining_capacity(i));
  }
  return lp;
}

SmallJobPlacement algorithm_C(const Instance& inst, PartialSchedule partial, std::span<const JobId> small) {
  const SmallLp lp = build_small_lp(inst, partial, small);
  const BasicLpSolution sol = solve_small_lp(lp);
  std::vector<JobId> pending;
  for (std::size_t j = 0; j < lp.job_count(); ++j) {
    std::size_t home = 0;
    for (std::size_t i = 1; i < sol.x.size(); ++i) {
      if (sol.x[i][j] == 1) home = i;
    }
    if (home == 0) {
      pending.push_back(lp.jobs[j]);
    } else {
      partial.append(home - 1, lp.jobs[j]);
    }
  }
  return {std::move(partial), std::move(pending)};
}

std::vector<JobId> lpt_order(const Instance& inst) {
  std::vector<JobId> order(inst.job_count());
  std::iota(order.begin(), order.end(), JobId{0});
  std::stable_sort(order.begin(), order.end(), [&](JobId a, JobId b) { return inst.p(a) > inst.p(b); });
  return order;
}

Schedule algorithm_LS(const Instance& inst, std::span<const JobId> order) {
  PartialSchedule partial(inst);
  for (JobId j : order) {
    std::size_t best = partial.machine_count();
    for (std::size_t i = 0; i < partial.machine_count(); ++i) {
      if (partial.remaining_capacity(i) == 0) continue;
      if (best == partial.machine_count() || partial.load(i) < partial.load(best)) best = i;
    }
    if (best == partial.machine_count()) throw std::logic_error("no machine below capacity");
    partial.append(best, j);
  }
  return partial.to_schedule();
}

namespace {

// Leftover jobs go round-robin over machines ordered by (room desc, load asc,
// index), skipping machines that fill up.
void place_leftovers(const Instance& inst, PartialSchedule& partial, std::vector<JobId> leftovers) {
  std::stable_sort(leftovers.begin(), leftovers.end(), [&](JobId a, JobId b) {
    return inst.p(a) != inst.p(b) ? inst.p(a) > inst.p(b) : a < b;
  });
  std::vector<std::size_t> order(partial.machine_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (partial.remaining_capacity(a) != partial.remaining_capacity(b)) {
      return partial.remaining_capacity(a) > partial.remaining_capacity(b);
    }
    if (partial.load(a) != partial.load(b)) return partial.load(a) < partial.load(b);
    return a < b;
  });
  std::size_t cursor = 0;
  for (JobId j : leftovers) {
    std::size_t tries = 0;
    while (partial.remaining_capacity(order[cursor]) == 0) {
      cursor = (cursor + 1) % order.size();
      if (++tries > order.size()) throw std::logic_error("no capacity left for leftover jobs");
    }
    partial.append(order[cursor], j);
    cursor = (cursor + 1) % order.size();
  }
}

std::vector<JobId> small_jobs_longest_first(const Instance& inst, const JobClasses& classes) {
  std::vector<JobId> small = classes.small;
  std::stable_sort(small.begin(), small.end(), [&](JobId a, JobId b) { return inst.p(a) > inst.p(b); });
  return small;
}

Schedule realize_with_small_order(const Instance& inst, const JobClasses& classes,
                                  const std::vector<Assignment>& assignments, const Layout& layout,
                                  std::span<const JobId> small) {
  PartialSchedule partial(inst);
  std::size_t machine = 0;
  for (JobId j : classes.huge) partial.append(machine++, j);

  std::vector<std::size_t> drawn(classes.big_classes.size(), 0);
  for (std::size_t a = 0; a < assignments.size(); ++a) {
    for (int copy = 0; copy < layout.t[a]; ++copy) {
      for (std::size_t h = 0; h < classes.big_classes.size(); ++h) {
        for (int k = 0; k < assignments[a].gamma[h]; ++k) {
          partial.append(machine, classes.big_classes[h].jobs.at(drawn[h]++));
        }
      }
      ++machine;
    }
  }

  std::vector<JobId> leftovers;
  for (std::size_t h = 0; h < classes.big_classes.size(); ++h) {
    const auto& jobs = classes.big_classes[h].jobs;
    leftovers.insert(leftovers.end(), jobs.begin() + static_cast<std::ptrdiff_t>(drawn[h]), jobs.end());
  }

  const bool uncapacitated = static_cast<std::size_t>(inst.capacity()) >= inst.job_count();
  SmallJobPlacement placed = uncapacitated ? algorithm_B(inst, std::move(partial), small)
                                           : algorithm_C(inst, std::move(partial), small);
  leftovers.insert(leftovers.end(), placed.pending.begin(), placed.pending.end());
  place_leftovers(inst, placed.partial, std::move(leftovers));
  return placed.partial.to_schedule();
}

Time early_work_unchecked(const Instance& inst, const Schedule& s) {
  Time x = 0;
  for (const auto& seq : s.machines) {
    Time load = 0;
    for (JobId j : seq) load += inst.p(j);
    x += std::min(load, inst.due_date());
  }
  return x;
}

}  // namespace

Schedule realize_layout(const Instance& inst, const JobClasses& classes,
                        const std::vector<Assignment>& assignments, const Layout& layout) {
  if (!is_feasible_layout(layout, assignments, classes, inst)) {
    throw std::invalid_argument("layout is not feasible for these assignments");
  }
  const auto small = small_jobs_longest_first(inst, classes);
  return realize_with_small_order(inst, classes, assignments, layout, small);
}

Schedule algorithm_A(const Instance& inst, const Rational& eps, RoundingMode mode, const GuardLimits& limits) {
  const JobClasses classes = classify_jobs(inst, eps, mode);
  if (auto shortcut = huge_shortcut(inst, classes)) return *shortcut;

  const auto assignments = enumerate_assignments(classes, inst, limits);
  const auto small = small_jobs_longest_first(inst, classes);

  std::optional<Schedule> best;
  Time best_x = -1;
  for_each_layout(assignments, classes, inst, limits, [&](const Layout& layout) {
    Schedule s = realize_with_small_order(inst, classes, assignments, layout, small);
    const Time x = early_work_unchecked(inst, s);
    if (x > best_x) {
      best_x = x;
      best = std::move(s);
    }
  });
  // The all-zero layout is always feasible, so at least one schedule exists.
  return *best;
}

Schedule ptas_early(const Instance& inst, const Rational& eps, const GuardLimits& limits) {
  require_eps(eps);
  const JobClasses classes = classify_jobs(inst, eps, RoundingMode::down);
  if (auto shortcut = huge_shortcut(inst, classes)) return *shortcut;
  Schedule from_layouts = algorithm_A(inst, eps, RoundingMode::down, limits);
  const auto order = lpt_order(inst);
  Schedule from_list = algorithm_LS(inst, order);
  return early_work(inst, from_layouts) >= early_work(inst, from_list) ? from_layouts : from_list;
}

Schedule ptas_shifted_late(const Instance& inst, const Rational& eps, const Rational& c,
                           const GuardLimits& limits) {
  require_eps(eps);
  if (sgn(c) <= 0) throw std::invalid_argument("shift factor c must be positive");
  const JobClasses classes = classify_jobs(inst, eps, RoundingMode::up);
  if (auto shortcut = huge_shortcut(inst, classes)) return *shortcut;
  Schedule from_layouts = algorithm_A(inst, eps, RoundingMode::up, limits);
  const auto order = lpt_order(inst);
  Schedule from_list = algorithm_LS(inst, order);
  return late_work(inst, from_layouts) <= late_work(inst, from_list) ? from_layouts : from_list;
}

LevelingSchedule solve_leveling(const LevelingInstance& inst, const Rational& eps, LevelingGoal goal,
                                const Rational& c, const GuardLimits& limits) {
  const Instance late = instance_from_leveling(inst);
  const Schedule s = goal == LevelingGoal::below_max ? ptas_early(late, eps, limits)
                                                     : ptas_shifted_late(late, eps, c, limits);
  return schedule_to_leveling(late, s);
}

}  // namespace latework
