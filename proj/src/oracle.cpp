#include "latework/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

namespace latework {

namespace {

struct Slot {
  Time load = 0;  // capped at d
  int count = 0;

  friend bool operator==(const Slot&, const Slot&) = default;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

using State = std::vector<Slot>;

struct StateHash {
  std::size_t operator()(const State& s) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto& slot : s) {
      h ^= static_cast<std::uint64_t>(slot.load) * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(slot.count);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

struct Back {
  std::uint32_t parent;
  std::uint32_t position;  // index into the parent's sorted signature
};

}  // namespace

OracleResult exact_best_early(const Instance& inst, std::size_t node_budget) {
  const auto m = static_cast<std::size_t>(inst.machines());
  const Time d = inst.due_date();
  const int cap = inst.capacity();

  std::vector<JobId> order(inst.job_count());
  std::iota(order.begin(), order.end(), JobId{0});
  std::stable_sort(order.begin(), order.end(), [&](JobId a, JobId b) { return inst.p(a) > inst.p(b); });

  std::vector<std::vector<State>> levels(1, {State(m)});
  std::vector<std::vector<Back>> back(1, {Back{0, 0}});
  std::size_t generated = 1;

  for (JobId job : order) {
    const Time p = inst.p(job);
    std::vector<State> next;
    std::vector<Back> next_back;
    std::unordered_map<State, std::uint32_t, StateHash> index;
    const auto& current = levels.back();
    for (std::size_t s = 0; s < current.size(); ++s) {
      const State& state = current[s];
      for (std::size_t pos = 0; pos < m; ++pos) {
        if (state[pos].count >= cap) continue;
        if (pos > 0 && state[pos] == state[pos - 1]) continue;
        State child = state;
        child[pos].load = std::min(d, child[pos].load + p);
        child[pos].count += 1;
        std::sort(child.begin(), child.end());
        if (++generated > node_budget) {
          throw OracleBudgetError("oracle search exceeded " + std::to_string(node_budget) + " states");
        }
        auto [it, inserted] = index.try_emplace(child, static_cast<std::uint32_t>(next.size()));
        if (inserted) {
          next.push_back(std::move(child));
          next_back.push_back(Back{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(pos)});
        }
      }
    }
    levels.push_back(std::move(next));
    back.push_back(std::move(next_back));
  }

  const auto& last = levels.back();
  std::size_t best = 0;
  Time best_x = -1;
  for (std::size_t s = 0; s < last.size(); ++s) {
    Time x = 0;
    for (const auto& slot : last[s]) x += slot.load;
    if (x > best_x) {
      best_x = x;
      best = s;
    }
  }

  // Recover the sorted-position choice per level, then replay on real machines.
  std::vector<std::uint32_t> positions(order.size());
  std::size_t cursor = best;
  for (std::size_t level = order.size(); level > 0; --level) {
    positions[level - 1] = back[level][cursor].position;
    cursor = back[level][cursor].parent;
  }

  struct Machine {
    Slot slot;
    std::size_t id;
  };
  std::vector<Machine> machines(m);
  for (std::size_t i = 0; i < m; ++i) machines[i].id = i;
  OracleResult result;
  result.witness.machines.resize(m);
  for (std::size_t k = 0; k < order.size(); ++k) {
    std::stable_sort(machines.begin(), machines.end(),
                     [](const Machine& a, const Machine& b) { return a.slot < b.slot; });
    auto& target = machines[positions[k]];
    target.slot.load = std::min(d, target.slot.load + inst.p(order[k]));
    target.slot.count += 1;
    result.witness.machines[target.id].push_back(order[k]);
  }

  result.best_X = best_x;
  result.best_Y = inst.total_processing() - best_x;
  if (early_work(inst, result.witness) != best_x) {
    throw std::logic_error("oracle witness does not attain the optimum");
  }
  return result;
}

Branch exact_condition_branch(const Instance& inst, const Rational& eps, const OracleResult& result) {
  const Rational threshold = eps * from_time(inst.machines()) * from_time(inst.due_date());
  return from_time(result.best_X) >= threshold ? Branch::big : Branch::small;
}

const char* to_string(Branch b) noexcept { return b == Branch::big ? "big" : "small"; }

}  // namespace latework
