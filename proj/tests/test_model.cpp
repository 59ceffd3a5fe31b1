#include "latework/model.hpp"

#include "support/brute_force.hpp"

#include <doctest.h>

#include <random>

using namespace latework;

namespace {

Instance three_jobs() { return Instance(2, 3, 5, {3, 4, 6}); }

}  // namespace

TEST_SUITE("model") {
  TEST_CASE("instance construction rejects invalid data") {
    CHECK_THROWS_AS(Instance(0, 1, 5, {1}), std::invalid_argument);
    CHECK_THROWS_AS(Instance(1, 0, 5, {1}), std::invalid_argument);
    CHECK_THROWS_AS(Instance(1, 1, 0, {1}), std::invalid_argument);
    CHECK_THROWS_AS(Instance(1, 1, 5, {0}), std::invalid_argument);
    CHECK_THROWS_AS(Instance(1, 1, 5, {3, 4}), std::invalid_argument);
    const Instance inst = three_jobs();
    CHECK(inst.total_processing() == 13);
    CHECK(inst.jobs()[2] == Job{2, 6});
  }

  TEST_CASE("validate_schedule") {
    const Instance inst = three_jobs();
    CHECK(validate_schedule(inst, Schedule{{{2}, {0, 1}}}).ok);

    auto dup = validate_schedule(inst, Schedule{{{2, 2}, {0, 1}}});
    CHECK_FALSE(dup.ok);
    CHECK(dup.violations.front().find("more than once") != std::string::npos);
  }

  TEST_CASE("validate_schedule reports capacity, missing and unknown jobs") {
    const Instance wide(3, 1, 5, {3, 4, 6});
    auto cap = validate_schedule(wide, Schedule{{{0, 1}, {2}, {}}});
    CHECK_FALSE(cap.ok);
    CHECK(cap.violations.front().find("capacity") != std::string::npos);

    CHECK_FALSE(validate_schedule(three_jobs(), Schedule{{{0}, {1}}}).ok);
    CHECK_FALSE(validate_schedule(three_jobs(), Schedule{{{0, 1, 2}, {7}}}).ok);
    CHECK_FALSE(validate_schedule(three_jobs(), Schedule{{{0, 1, 2}}}).ok);
  }

  TEST_CASE("loads and objectives") {
    const Instance inst = three_jobs();
    const Schedule s{{{2}, {0, 1}}};
    CHECK(machine_loads(inst, s) == std::vector<Time>{6, 7});
    CHECK(late_work(inst, s) == 3);
    CHECK(early_work(inst, s) == 10);
    CHECK(shifted_late_work(inst, s, 1) == 16);
    CHECK(start_times(inst, s) == std::vector<Time>{0, 3, 0});

    const Schedule empty_machine{{{0, 1, 2}, {}}};
    CHECK(machine_loads(inst, empty_machine) == std::vector<Time>{13, 0});

    const Instance one(1, 3, 5, {3, 4, 6});
    CHECK(machine_loads(one, Schedule{{{0, 1, 2}}}) == std::vector<Time>{13});

    const Instance fits(2, 3, 20, {3, 4, 6});
    CHECK(late_work(fits, s) == 0);
    CHECK(early_work(fits, s) == fits.total_processing());

    const Instance boundary(1, 1, 1, {1});
    CHECK(late_work(boundary, Schedule{{{0}}}) == 0);

    const Instance saturated(1, 2, 4, {4, 4});
    CHECK(early_work(saturated, Schedule{{{0, 1}}}) == 4);
  }

  TEST_CASE("shifted late work") {
    const Instance inst(1, 2, 7, {4, 4});
    const Schedule s{{{0, 1}}};
    CHECK(late_work(inst, s) == 1);
    CHECK(shifted_late_work(inst, s, Rational(1, 2)) == 5);
    const Instance fits(2, 3, 20, {3, 4, 6});
    CHECK(shifted_late_work(fits, Schedule{{{2}, {0, 1}}}, 3) == 39);
    CHECK_THROWS_AS(shifted_late_work(inst, s, 0), std::invalid_argument);
    CHECK_THROWS_AS(shifted_late_work(inst, s, -1), std::invalid_argument);
  }

  TEST_CASE("objectives reject invalid schedules") {
    CHECK_THROWS_AS(late_work(three_jobs(), Schedule{{{2, 2}, {0, 1}}}), InvalidScheduleError);
    CHECK_THROWS_AS(early_work(three_jobs(), Schedule{{{2}, {0}}}), InvalidScheduleError);
  }

  TEST_CASE("leveling objectives") {
    // Slot demands [6, 7, 3] with L = 5.
    const LevelingInstance inst(2, 3, 5, {6, 4, 3, 3});
    const LevelingSchedule s{{{0, 0}, {0, 1}, {1, 1}, {0, 2}}};
    CHECK(slot_demands(inst, s) == std::vector<Time>{6, 7, 3});
    CHECK(leveling_above(inst, s) == 3);
    CHECK(leveling_below(inst, s) == 13);

    const LevelingInstance roomy(2, 3, 10, {6, 4, 3, 3});
    CHECK(leveling_above(roomy, s) == 0);
    CHECK(leveling_below(roomy, s) == roomy.total_demand());

    const LevelingInstance zero_limit(2, 3, 0, {6, 4, 3, 3});
    CHECK(leveling_below(zero_limit, s) == 0);
  }

  TEST_CASE("leveling validation enforces the packing rule") {
    const LevelingInstance inst(2, 2, 5, {1, 1});
    CHECK(validate_leveling_schedule(inst, LevelingSchedule{{{0, 0}, {1, 0}}}).ok);
    CHECK(validate_leveling_schedule(inst, LevelingSchedule{{{0, 0}, {0, 1}}}).ok);
    CHECK_FALSE(validate_leveling_schedule(inst, LevelingSchedule{{{1, 0}, {0, 1}}}).ok);
    CHECK_FALSE(validate_leveling_schedule(inst, LevelingSchedule{{{0, 0}, {0, 0}}}).ok);
    CHECK_FALSE(validate_leveling_schedule(inst, LevelingSchedule{{{0, 0}, {0, 2}}}).ok);
    CHECK_FALSE(validate_leveling_schedule(inst, LevelingSchedule{{{0, 0}}}).ok);
    CHECK_THROWS_AS(LevelingInstance(1, 1, 0, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(LevelingInstance(1, 2, -1, {1}), std::invalid_argument);
  }

  TEST_CASE("property: identities, symmetry and bounds on random schedules") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
      const Instance inst = testing::random_instance(rng, 9, 4, 30, 25);
      Schedule s = testing::random_schedule(inst, rng);
      const Time x = early_work(inst, s);
      const Time y = late_work(inst, s);
      CHECK(x + y == inst.total_processing());
      CHECK(x <= std::min<Time>(inst.total_processing(), inst.machines() * inst.due_date()));
      CHECK(y >= std::max<Time>(0, inst.total_processing() - inst.machines() * inst.due_date()));

      for (auto& seq : s.machines) std::shuffle(seq.begin(), seq.end(), rng);
      std::shuffle(s.machines.begin(), s.machines.end(), rng);
      CHECK(early_work(inst, s) == x);
      CHECK(late_work(inst, s) == y);
    }
  }
}
