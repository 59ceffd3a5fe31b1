#include "latework/model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace latework {

namespace {

std::string join_violations(const std::vector<std::string>& violations) {
  std::string out = "invalid schedule";
  for (const auto& v : violations) {
    out += "; ";
    out += v;
  }
  return out;
}

void require_valid(const Instance& inst, const Schedule& s) {
  auto check = validate_schedule(inst, s);
  if (!check.ok) throw InvalidScheduleError(check.violations);
}

void require_valid(const LevelingInstance& inst, const LevelingSchedule& s) {
  auto check = validate_leveling_schedule(inst, s);
  if (!check.ok) throw InvalidScheduleError(check.violations);
}

}  // namespace

Instance::Instance(int machines, int capacity, Time due_date, std::vector<Time> processing_times)
    : machines_(machines), capacity_(capacity), due_date_(due_date) {
  if (machines < 1) throw std::invalid_argument("machine count must be positive");
  if (capacity < 1) throw std::invalid_argument("machine capacity must be positive");
  if (due_date < 1) throw std::invalid_argument("due date must be positive");
  const auto n = processing_times.size();
  if (static_cast<std::size_t>(machines) * static_cast<std::size_t>(capacity) < n) {
    throw std::invalid_argument("m*N < n: no feasible schedule exists");
  }
  jobs_.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (processing_times[j] < 1) {
      throw std::invalid_argument("processing time of job " + std::to_string(j) + " must be positive");
    }
    jobs_.push_back(Job{j, processing_times[j]});
    p_sum_ += processing_times[j];
  }
}

std::vector<Time> Instance::processing_times() const {
  std::vector<Time> out;
  out.reserve(jobs_.size());
  for (const auto& job : jobs_) out.push_back(job.p);
  return out;
}

LevelingInstance::LevelingInstance(int machines, int horizon, Time limit, std::vector<Time> demands)
    : machines_(machines), horizon_(horizon), limit_(limit), demands_(std::move(demands)) {
  if (machines < 1) throw std::invalid_argument("machine count must be positive");
  if (horizon < 1) throw std::invalid_argument("deadline C must be positive");
  if (limit < 0) throw std::invalid_argument("resource limit must be nonnegative");
  if (static_cast<std::size_t>(machines) * static_cast<std::size_t>(horizon) < demands_.size()) {
    throw std::invalid_argument("machines*C < n: no feasible schedule exists");
  }
  for (std::size_t j = 0; j < demands_.size(); ++j) {
    if (demands_[j] < 0) {
      throw std::invalid_argument("demand of job " + std::to_string(j) + " must be nonnegative");
    }
    a_sum_ += demands_[j];
  }
}

InvalidScheduleError::InvalidScheduleError(const std::vector<std::string>& violations)
    : std::invalid_argument(join_violations(violations)), violations_(violations) {}

ValidationResult validate_schedule(const Instance& inst, const Schedule& s) {
  ValidationResult result;
  auto fail = [&](std::string msg) {
    result.ok = false;
    result.violations.push_back(std::move(msg));
  };

  if (s.machines.size() != static_cast<std::size_t>(inst.machines())) {
    fail("schedule has " + std::to_string(s.machines.size()) + " machines, instance has " +
         std::to_string(inst.machines()));
  }
  std::vector<int> seen(inst.job_count(), 0);
  for (std::size_t i = 0; i < s.machines.size(); ++i) {
    const auto& seq = s.machines[i];
    if (seq.size() > static_cast<std::size_t>(inst.capacity())) {
      fail("machine " + std::to_string(i) + " holds " + std::to_string(seq.size()) +
           " jobs, capacity is " + std::to_string(inst.capacity()));
    }
    for (JobId j : seq) {
      if (j >= inst.job_count()) {
        fail("unknown job id " + std::to_string(j) + " on machine " + std::to_string(i));
        continue;
      }
      if (++seen[j] == 2) fail("job " + std::to_string(j) + " scheduled more than once");
    }
  }
  for (std::size_t j = 0; j < seen.size(); ++j) {
    if (seen[j] == 0) fail("job " + std::to_string(j) + " not scheduled");
  }
  return result;
}

ValidationResult validate_leveling_schedule(const LevelingInstance& inst, const LevelingSchedule& s) {
  ValidationResult result;
  auto fail = [&](std::string msg) {
    result.ok = false;
    result.violations.push_back(std::move(msg));
  };

  if (s.placements.size() != inst.job_count()) {
    fail("schedule places " + std::to_string(s.placements.size()) + " jobs, instance has " +
         std::to_string(inst.job_count()));
    return result;
  }
  const auto width = static_cast<std::size_t>(inst.machines());
  std::vector<int> occupied(width * static_cast<std::size_t>(inst.horizon()), 0);
  bool in_range = true;
  for (std::size_t j = 0; j < s.placements.size(); ++j) {
    const auto [machine, slot] = s.placements[j];
    if (machine < 0 || machine >= inst.machines() || slot < 0 || slot >= inst.horizon()) {
      fail("job " + std::to_string(j) + " placed outside the machine/slot grid");
      in_range = false;
      continue;
    }
    auto& cell = occupied[static_cast<std::size_t>(slot) * width + static_cast<std::size_t>(machine)];
    if (++cell == 2) {
      fail("machine " + std::to_string(machine) + " runs two jobs at slot " + std::to_string(slot));
    }
  }
  if (!in_range) return result;
  for (int t = 0; t < inst.horizon(); ++t) {
    bool gap = false;
    for (std::size_t i = 0; i < width; ++i) {
      const bool used = occupied[static_cast<std::size_t>(t) * width + i] > 0;
      if (!used) {
        gap = true;
      } else if (gap) {
        fail("slot " + std::to_string(t) + " uses machine " + std::to_string(i) +
             " while a lower machine is idle");
        break;
      }
    }
  }
  return result;
}

std::vector<Time> machine_loads(const Instance& inst, const Schedule& s) {
  require_valid(inst, s);
  std::vector<Time> loads;
  loads.reserve(s.machines.size());
  for (const auto& seq : s.machines) {
    Time load = 0;
    for (JobId j : seq) load += inst.p(j);
    loads.push_back(load);
  }
  return loads;
}

std::vector<Time> start_times(const Instance& inst, const Schedule& s) {
  require_valid(inst, s);
  std::vector<Time> start(inst.job_count(), 0);
  for (const auto& seq : s.machines) {
    Time t = 0;
    for (JobId j : seq) {
      start[j] = t;
      t += inst.p(j);
    }
  }
  return start;
}

Time early_work_of_loads(std::span<const Time> loads, Time due_date) {
  Time x = 0;
  for (Time load : loads) x += std::min(load, due_date);
  return x;
}

Time late_work_of_loads(std::span<const Time> loads, Time due_date) {
  Time y = 0;
  for (Time load : loads) y += std::max<Time>(0, load - due_date);
  return y;
}

Time late_work(const Instance& inst, const Schedule& s) {
  const auto loads = machine_loads(inst, s);
  return late_work_of_loads(loads, inst.due_date());
}

Time early_work(const Instance& inst, const Schedule& s) {
  const auto loads = machine_loads(inst, s);
  const Time x = early_work_of_loads(loads, inst.due_date());
  if (x + late_work_of_loads(loads, inst.due_date()) != inst.total_processing()) {
    throw std::logic_error("early work + late work != p_sum");
  }
  return x;
}

Rational shifted_late_work(const Instance& inst, const Schedule& s, const Rational& c) {
  if (sgn(c) <= 0) throw std::invalid_argument("shift factor c must be positive");
  return c * from_time(inst.total_processing()) + from_time(late_work(inst, s));
}

std::vector<Time> slot_demands(const LevelingInstance& inst, const LevelingSchedule& s) {
  require_valid(inst, s);
  std::vector<Time> demand(static_cast<std::size_t>(inst.horizon()), 0);
  for (std::size_t j = 0; j < s.placements.size(); ++j) {
    demand[static_cast<std::size_t>(s.placements[j].slot)] += inst.demands()[j];
  }
  return demand;
}

Time leveling_above(const LevelingInstance& inst, const LevelingSchedule& s) {
  const auto demand = slot_demands(inst, s);
  return late_work_of_loads(demand, inst.limit());
}

Time leveling_below(const LevelingInstance& inst, const LevelingSchedule& s) {
  const auto demand = slot_demands(inst, s);
  const Time below = early_work_of_loads(demand, inst.limit());
  if (below + late_work_of_loads(demand, inst.limit()) != inst.total_demand()) {
    throw std::logic_error("usage below + usage above != a_sum");
  }
  return below;
}

}  // namespace latework
