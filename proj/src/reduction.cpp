#include "latework/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace latework {

LevelingInstance instance_to_leveling(const Instance& inst) {
  return LevelingInstance(inst.capacity(), inst.machines(), inst.due_date(), inst.processing_times());
}

Instance instance_from_leveling(const LevelingInstance& inst) {
  const auto demands = inst.demands();
  for (std::size_t j = 0; j < demands.size(); ++j) {
    if (demands[j] < 1) {
      throw UnmappableInstanceError("job " + std::to_string(j) +
                                    " has zero demand; late-work jobs need positive processing time");
    }
  }
  if (inst.limit() < 1) {
    throw UnmappableInstanceError("resource limit 0 maps to due date 0, which is not a valid instance");
  }
  return Instance(inst.horizon(), inst.machines(), inst.limit(), {demands.begin(), demands.end()});
}

LevelingSchedule schedule_to_leveling(const Instance& inst, const Schedule& s) {
  const auto check = validate_schedule(inst, s);
  if (!check.ok) throw InvalidScheduleError(check.violations);
  LevelingSchedule out;
  out.placements.resize(inst.job_count());
  for (std::size_t i = 0; i < s.machines.size(); ++i) {
    const auto& seq = s.machines[i];
    for (std::size_t pos = 0; pos < seq.size(); ++pos) {
      out.placements[seq[pos]] = Placement{static_cast<int>(pos), static_cast<int>(i)};
    }
  }
  return out;
}

Schedule schedule_from_leveling(const LevelingInstance& inst, const LevelingSchedule& s) {
  const auto check = validate_leveling_schedule(inst, s);
  if (!check.ok) throw InvalidScheduleError(check.violations);
  // Packing guarantees slot t uses machines 0..k-1, which become positions.
  std::vector<std::vector<std::pair<int, JobId>>> by_slot(static_cast<std::size_t>(inst.horizon()));
  for (std::size_t j = 0; j < s.placements.size(); ++j) {
    by_slot[static_cast<std::size_t>(s.placements[j].slot)].emplace_back(s.placements[j].machine, j);
  }
  Schedule out;
  out.machines.resize(by_slot.size());
  for (std::size_t t = 0; t < by_slot.size(); ++t) {
    auto& jobs = by_slot[t];
    std::sort(jobs.begin(), jobs.end());
    for (const auto& [machine, job] : jobs) out.machines[t].push_back(job);
  }
  return out;
}

PartitionInstance partition_hard_instance(const std::vector<Time>& sizes) {
  if (sizes.empty()) throw std::invalid_argument("PARTITION needs at least one item");
  if (std::any_of(sizes.begin(), sizes.end(), [](Time e) { return e < 1; })) {
    throw std::invalid_argument("PARTITION item sizes must be positive");
  }
  const Time total = std::accumulate(sizes.begin(), sizes.end(), Time{0});
  if (total % 2 != 0) throw std::invalid_argument("PARTITION requires an even total size");
  const auto n = static_cast<int>(sizes.size());
  return PartitionInstance{Instance(2, n, total / 2, sizes), total / 2};
}

}  // namespace latework
