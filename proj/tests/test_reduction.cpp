#include "latework/reduction.hpp"

#include "support/brute_force.hpp"

#include <doctest.h>

#include <random>

using namespace latework;

namespace {

// Three machines, N = 4, d = 6; loads 5, 7, 7.
Instance two_view_instance() { return Instance(3, 4, 6, {1, 1, 2, 1, 2, 1, 4, 1, 3, 1, 2}); }
Schedule two_view_schedule() { return Schedule{{{0, 1, 2, 3}, {4, 5, 6}, {7, 8, 9, 10}}}; }

}  // namespace

TEST_SUITE("reduction") {
  TEST_CASE("instance map") {
    const Instance inst(3, 4, 5, {1, 1, 2, 1, 2, 1, 4, 1, 3, 1, 2});
    const LevelingInstance lv = instance_to_leveling(inst);
    CHECK(lv == LevelingInstance(4, 3, 5, inst.processing_times()));
    CHECK(instance_from_leveling(lv) == inst);

    CHECK(instance_to_leveling(Instance(1, 1, 1, {1})) == LevelingInstance(1, 1, 1, {1}));
    CHECK(instance_from_leveling(LevelingInstance(2, 3, 4, {2, 2})) == Instance(3, 2, 4, {2, 2}));
    CHECK_THROWS_AS(instance_from_leveling(LevelingInstance(2, 3, 4, {0, 2})), UnmappableInstanceError);
    CHECK_THROWS_AS(instance_from_leveling(LevelingInstance(2, 3, 0, {1, 2})), UnmappableInstanceError);
  }

  TEST_CASE("schedule map on the two-view example") {
    const Instance inst = two_view_instance();
    const Schedule s = two_view_schedule();
    const LevelingInstance lv = instance_to_leveling(inst);
    const LevelingSchedule ls = schedule_to_leveling(inst, s);

    CHECK(ls.placements[4] == Placement{0, 1});
    CHECK(ls.placements[3] == Placement{3, 0});
    CHECK(ls.placements[10] == Placement{3, 2});
    CHECK(ls.placements[0] == Placement{0, 0});
    CHECK(ls.placements[8] == Placement{1, 2});
    CHECK(validate_leveling_schedule(lv, ls).ok);

    CHECK(slot_demands(lv, ls) == std::vector<Time>{5, 7, 7});
    CHECK(late_work(inst, s) == 2);
    CHECK(leveling_above(lv, ls) == 2);
    CHECK(leveling_below(lv, ls) == early_work(inst, s));

    CHECK(schedule_from_leveling(lv, ls) == s);
  }

  TEST_CASE("schedule map edge cases") {
    const Instance one(3, 1, 5, {4});
    const LevelingInstance lv = instance_to_leveling(one);
    CHECK(schedule_from_leveling(lv, LevelingSchedule{{{0, 0}}}) == Schedule{{{0}, {}, {}}});
    CHECK_THROWS_AS(schedule_from_leveling(instance_to_leveling(Instance(3, 2, 5, {4})),
                                           LevelingSchedule{{{1, 0}}}),
                    InvalidScheduleError);

    const Instance wide(2, 3, 5, {1, 2});
    const LevelingSchedule ls = schedule_to_leveling(wide, Schedule{{{}, {1, 0}}});
    CHECK(ls.placements[1] == Placement{0, 1});
    CHECK(ls.placements[0] == Placement{1, 1});
    CHECK_THROWS_AS(schedule_to_leveling(wide, Schedule{{{0}, {0}}}), InvalidScheduleError);
  }

  TEST_CASE("PARTITION construction") {
    const auto yes = partition_hard_instance({3, 1, 2, 2});
    CHECK(yes.instance == Instance(2, 4, 4, {3, 1, 2, 2}));
    CHECK(yes.half_sum == 4);
    CHECK(testing::has_equal_split({3, 1, 2, 2}));
    CHECK(testing::brute_best_early(yes.instance) == 8);

    const auto pair = partition_hard_instance({1, 1});
    CHECK(pair.instance == Instance(2, 2, 1, {1, 1}));
    CHECK(testing::brute_best_early(pair.instance) == 2);

    CHECK_THROWS_AS(partition_hard_instance({1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(partition_hard_instance({}), std::invalid_argument);
    CHECK_THROWS_AS(partition_hard_instance({2, 0}), std::invalid_argument);
  }

  TEST_CASE("property: optimum late work is zero exactly on equal splits") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
      const auto n = std::uniform_int_distribution<int>(1, 7)(rng);
      std::vector<Time> sizes(static_cast<std::size_t>(n));
      for (auto& e : sizes) e = std::uniform_int_distribution<Time>(1, 9)(rng);
      if (std::accumulate(sizes.begin(), sizes.end(), Time{0}) % 2 != 0) sizes.back() += 1;
      const auto p = partition_hard_instance(sizes);
      const Time best_y = p.instance.total_processing() - testing::brute_best_early(p.instance);
      CHECK((best_y == 0) == testing::has_equal_split(sizes));
    }
  }

  TEST_CASE("property: round trips and objective preservation") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
      const Instance inst = testing::random_instance(rng, 12, 5, 25, 20);
      const Schedule s = testing::random_schedule(inst, rng);
      const LevelingInstance lv = instance_to_leveling(inst);
      CHECK(instance_from_leveling(lv) == inst);
      CHECK(instance_to_leveling(instance_from_leveling(lv)) == lv);

      const LevelingSchedule ls = schedule_to_leveling(inst, s);
      REQUIRE(validate_leveling_schedule(lv, ls).ok);
      CHECK(schedule_from_leveling(lv, ls) == s);
      CHECK(schedule_to_leveling(inst, schedule_from_leveling(lv, ls)) == ls);
      CHECK(late_work(inst, s) == leveling_above(lv, ls));
      CHECK(early_work(inst, s) == leveling_below(lv, ls));
    }
  }
}
