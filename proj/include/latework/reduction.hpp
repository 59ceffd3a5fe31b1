#pragma once

// Bijection between P|d_j=d, n_i<=N|Y and unit-job resource leveling
// P|p_j=1|~Y, on instances and on schedules, plus the PARTITION construction
// for two machines.
//
// Instance map: N machines, C := m, L := d, a_j := p_j.
// Schedule map: the l-th job on machine i goes to machine l at slot i.

#include "latework/model.hpp"

#include <stdexcept>
#include <vector>

namespace latework {

/// A leveling instance with no late-work preimage (zero demand or L = 0).
class UnmappableInstanceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

LevelingInstance instance_to_leveling(const Instance& inst);
Instance instance_from_leveling(const LevelingInstance& inst);

LevelingSchedule schedule_to_leveling(const Instance& inst, const Schedule& s);
Schedule schedule_from_leveling(const LevelingInstance& inst, const LevelingSchedule& s);

/// Two machines, p_j := e_j, N := n, d := E where sum e_j = 2E.
/// The optimum late work is 0 exactly when the sizes split into two halves
/// of sum E.
struct PartitionInstance {
  Instance instance;
  Time half_sum;
};

/// Throws std::invalid_argument on an empty list, a non-positive size or an
/// odd total.
PartitionInstance partition_hard_instance(const std::vector<Time>& sizes);

}  // namespace latework
