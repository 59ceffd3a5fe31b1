#include "latework/algorithms.hpp"
#include "latework/reduction.hpp"

#include "support/brute_force.hpp"

#include <doctest.h>

#include <random>

using namespace latework;

namespace {

Rational random_eps(std::mt19937_64& rng) {
  static const Rational choices[] = {Rational(1, 3), Rational(1, 4), Rational(1, 5)};
  return choices[std::uniform_int_distribution<int>(0, 2)(rng)];
}

Rational shifted(const Instance& inst, Time y, const Rational& c) {
  return c * from_time(inst.total_processing()) + from_time(y);
}

// Replays list scheduling and checks each step picked a least-loaded machine
// below capacity, lowest index first.
bool follows_list_rule(const Instance& inst, const std::vector<JobId>& order, const Schedule& s) {
  std::vector<std::size_t> where(inst.job_count());
  std::vector<std::size_t> position(inst.job_count());
  for (std::size_t i = 0; i < s.machines.size(); ++i) {
    for (std::size_t k = 0; k < s.machines[i].size(); ++k) {
      where[s.machines[i][k]] = i;
      position[s.machines[i][k]] = k;
    }
  }
  std::vector<Time> load(s.machines.size(), 0);
  std::vector<int> count(s.machines.size(), 0);
  for (JobId j : order) {
    const std::size_t i = where[j];
    if (count[i] >= inst.capacity() || static_cast<std::size_t>(count[i]) != position[j]) return false;
    for (std::size_t other = 0; other < load.size(); ++other) {
      if (count[other] >= inst.capacity()) continue;
      if (load[other] < load[i] || (load[other] == load[i] && other < i)) return false;
    }
    load[i] += inst.p(j);
    ++count[i];
  }
  return true;
}

}  // namespace

TEST_SUITE("algorithms") {
  TEST_CASE("partial schedule residuals") {
    const Instance inst(2, 3, 5, {3, 4, 6});
    PartialSchedule partial(inst);
    partial.append(0, 0);
    CHECK(partial.idle_before_due(0) == 2);
    CHECK(partial.remaining_capacity(0) == 2);
    partial.append(1, 2);
    CHECK(partial.idle_before_due(1) == 0);
    CHECK(partial.load(1) == 6);
    const Instance tight(2, 1, 5, {1, 1});
    PartialSchedule full(tight);
    full.append(0, 0);
    CHECK_THROWS(full.append(0, 1));
  }

  TEST_CASE("huge shortcut") {
    const Instance inst(2, 2, 3, {3, 5, 1});
    const auto classes = classify_jobs(inst, Rational(1, 3));
    const auto s = huge_shortcut(inst, classes);
    REQUIRE(s.has_value());
    CHECK(validate_schedule(inst, *s).ok);
    CHECK(early_work(inst, *s) == 6);

    const Instance one_huge(2, 2, 3, {3, 1, 1});
    CHECK_FALSE(huge_shortcut(one_huge, classify_jobs(one_huge, Rational(1, 3))).has_value());

    const Instance all_huge(3, 1, 4, {4, 6, 9});
    const auto t = huge_shortcut(all_huge, classify_jobs(all_huge, Rational(1, 4)));
    REQUIRE(t.has_value());
    for (const auto& seq : t->machines) CHECK(seq.size() == 1);
    CHECK(late_work(all_huge, *t) == all_huge.total_processing() - 3 * 4);
  }

  TEST_CASE("algorithm B greedy trace") {
    const Instance inst(2, 5, 5, {3, 2, 2});
    PartialSchedule partial(inst);
    partial.append(0, 0);
    const std::vector<JobId> small{1, 2};
    const auto out = algorithm_B(inst, partial, small);
    CHECK(out.partial.jobs_on(0) == std::vector<JobId>{0, 1});
    CHECK(out.partial.jobs_on(1) == std::vector<JobId>{2});
    CHECK(out.pending.empty());

    const Instance busy(2, 5, 5, {5, 6, 1});
    PartialSchedule saturated(busy);
    saturated.append(0, 0);
    saturated.append(1, 1);
    const std::vector<JobId> tiny{2};
    const auto none = algorithm_B(busy, saturated, tiny);
    CHECK(none.pending == std::vector<JobId>{2});

    const Instance first(2, 5, 5, {1});
    const std::vector<JobId> only{0};
    CHECK(algorithm_B(first, PartialSchedule(first), only).partial.jobs_on(0) == std::vector<JobId>{0});
  }

  TEST_CASE("algorithm C keeps the integral part") {
    const Instance inst(1, 2, 3, {2, 2});
    const std::vector<JobId> small{0, 1};
    const auto out = algorithm_C(inst, PartialSchedule(inst), small);
    CHECK(out.partial.jobs_on(0).size() == 1);
    CHECK(out.pending.size() == 1);

    const Instance roomy(2, 2, 10, {2, 3, 1});
    const std::vector<JobId> all{0, 1, 2};
    const auto placed = algorithm_C(roomy, PartialSchedule(roomy), all);
    CHECK(placed.pending.empty());

    const Instance busy(2, 3, 4, {4, 5, 1, 1});
    PartialSchedule saturated(busy);
    saturated.append(0, 0);
    saturated.append(1, 1);
    const std::vector<JobId> tiny{2, 3};
    CHECK(algorithm_C(busy, saturated, tiny).pending == tiny);
  }

  TEST_CASE("list scheduling") {
    const Instance inst(2, 3, 10, {5, 4, 3, 3, 2});
    const auto order = lpt_order(inst);
    CHECK(order == std::vector<JobId>{0, 1, 2, 3, 4});
    const auto s = algorithm_LS(inst, order);
    CHECK(s.machines[0] == std::vector<JobId>{0, 3});
    CHECK(s.machines[1] == std::vector<JobId>{1, 2, 4});
    CHECK(machine_loads(inst, s) == std::vector<Time>{8, 9});

    const Instance single(1, 3, 10, {1, 2, 3});
    const std::vector<JobId> given{2, 0, 1};
    CHECK(algorithm_LS(single, given).machines[0] == given);

    const Instance unit(3, 1, 10, {7, 1, 4});
    const auto spread = algorithm_LS(unit, lpt_order(unit));
    CHECK(spread.machines == std::vector<std::vector<JobId>>{{0}, {2}, {1}});

    const Instance ties(2, 3, 10, {2, 5, 2});
    CHECK(lpt_order(ties) == std::vector<JobId>{1, 0, 2});
  }

  TEST_CASE("algorithm A examples") {
    const Instance inst(2, 4, 4, {3, 3, 3});
    const auto s = algorithm_A(inst, Rational(1, 3), RoundingMode::down);
    CHECK(validate_schedule(inst, s).ok);
    CHECK(early_work(inst, s) == 7);

    const Instance fits(1, 2, 2, {1, 1});
    const auto t = algorithm_A(fits, Rational(1, 3), RoundingMode::down);
    CHECK(early_work(fits, t) == 2);
    CHECK(late_work(fits, t) == 0);

    const Instance huge_only(3, 2, 4, {5, 7});
    const auto h = algorithm_A(huge_only, Rational(1, 4), RoundingMode::down);
    CHECK(h.machines[0] == std::vector<JobId>{0});
    CHECK(h.machines[1] == std::vector<JobId>{1});
    CHECK(h.machines[2].empty());
  }

  TEST_CASE("combined drivers") {
    const Instance inst(2, 2, 4, {4, 4, 4});
    CHECK(early_work(inst, ptas_early(inst, Rational(1, 3))) == 8);

    const auto part = partition_hard_instance({3, 1, 2, 2});
    const auto s = ptas_shifted_late(part.instance, Rational(1, 4), 1);
    CHECK(late_work(part.instance, s) <= 8);

    const Instance fits(1, 3, 10, {2, 3, 4});
    const auto f = ptas_shifted_late(fits, Rational(1, 3), 2);
    CHECK(late_work(fits, f) == 0);
    CHECK(shifted_late_work(fits, f, 2) == 18);

    const Instance many_huge(2, 2, 3, {4, 5, 1});
    CHECK(early_work(many_huge, ptas_early(many_huge, Rational(1, 4))) == 6);
    CHECK(late_work(many_huge, ptas_shifted_late(many_huge, Rational(1, 4), 1)) == 10 - 6);

    CHECK_THROWS_AS(ptas_early(inst, Rational(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(ptas_shifted_late(inst, Rational(1, 3), 0), std::invalid_argument);
  }

  TEST_CASE("guard trips propagate") {
    const Instance inst(3, 6, 40, {10, 11, 12, 13, 14, 15, 16, 17, 18, 19});
    CHECK_THROWS_AS(algorithm_A(inst, Rational(1, 5), RoundingMode::down, GuardLimits{3, 3}),
                    EnumerationGuardError);
  }

  TEST_CASE("leveling via transformation") {
    const Instance inst(3, 4, 6, {1, 1, 2, 1, 2, 1, 4, 1, 3, 1, 2});
    const LevelingInstance lv = instance_to_leveling(inst);
    for (auto goal : {LevelingGoal::below_max, LevelingGoal::shifted_above}) {
      const auto ls = solve_leveling(lv, Rational(1, 3), goal);
      REQUIRE(validate_leveling_schedule(lv, ls).ok);
      const Schedule pre = schedule_from_leveling(lv, ls);
      CHECK(leveling_above(lv, ls) == late_work(inst, pre));
      CHECK(leveling_above(lv, ls) <= 2);
    }

    const LevelingInstance roomy(3, 3, 10, {4, 5, 2, 3});
    CHECK(leveling_above(roomy, solve_leveling(roomy, Rational(1, 4), LevelingGoal::shifted_above)) == 0);

    const LevelingInstance one_slot(4, 1, 5, {2, 3, 4});
    CHECK(leveling_above(one_slot, solve_leveling(one_slot, Rational(1, 4), LevelingGoal::below_max)) == 4);

    CHECK_THROWS_AS(solve_leveling(LevelingInstance(2, 2, 3, {0, 1}), Rational(1, 4), LevelingGoal::below_max),
                    UnmappableInstanceError);
  }

  TEST_CASE("property: feasibility and guarantees against brute force") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 250; ++trial) {
      const Instance inst = testing::random_instance(rng, 7, 3, 20, 25);
      const Rational eps = random_eps(rng);
      const Time best = testing::brute_best_early(inst);
      const Time best_y = inst.total_processing() - best;
      const Rational c = Rational(std::uniform_int_distribution<long>(1, 4)(rng), 2);

      const auto a = algorithm_A(inst, eps, RoundingMode::down);
      const auto a_up = algorithm_A(inst, eps, RoundingMode::up);
      const auto ls = algorithm_LS(inst, lpt_order(inst));
      const auto pe = ptas_early(inst, eps);
      const auto pl = ptas_shifted_late(inst, eps, c);
      for (const auto* s : {&a, &a_up, &ls, &pe, &pl}) {
        REQUIRE(validate_schedule(inst, *s).ok);
        CHECK(early_work(inst, *s) <= best);
      }
      CHECK(follows_list_rule(inst, lpt_order(inst), ls));
      CHECK(early_work(inst, pe) >= std::max(early_work(inst, a), early_work(inst, ls)));
      CHECK(late_work(inst, pl) <= std::min(late_work(inst, a_up), late_work(inst, ls)));
      CHECK(from_time(early_work(inst, pe)) >= (1 - 4 * eps) * from_time(best));
      CHECK(shifted(inst, late_work(inst, pl), c) <= (1 + 4 * eps / c) * shifted(inst, best_y, c));

      const auto classes = classify_jobs(inst, eps);
      if (classes.huge.size() < static_cast<std::size_t>(inst.machines())) {
        for (const auto* s : {&a, &a_up}) {
          for (std::size_t i = 0; i < s->machines.size(); ++i) {
            long huge_here = 0;
            for (JobId j : s->machines[i]) huge_here += inst.p(j) >= inst.due_date();
            CHECK(huge_here == (i < classes.huge.size() ? 1 : 0));
          }
        }
      }
    }
  }

  TEST_CASE("property: list rule on arbitrary orders") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 200; ++trial) {
      const Instance inst = testing::random_instance(rng, 12, 4, 30, 30);
      std::vector<JobId> order(inst.job_count());
      std::iota(order.begin(), order.end(), JobId{0});
      std::shuffle(order.begin(), order.end(), rng);
      const auto s = algorithm_LS(inst, order);
      REQUIRE(validate_schedule(inst, s).ok);
      CHECK(follows_list_rule(inst, order, s));
    }
  }

  TEST_CASE("property: integral part of the LP solution") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 150; ++trial) {
      const Instance inst = testing::random_instance(rng, 10, 3, 60, 40);
      const Rational eps = random_eps(rng);
      const auto classes = classify_jobs(inst, eps);
      PartialSchedule partial(inst);
      std::size_t next = 0;
      for (JobId j : classes.big) {
        const auto i = next++ % partial.machine_count();
        if (partial.remaining_capacity(i) > 0 && partial.idle_before_due(i) > 0) partial.append(i, j);
      }
      const auto lp = build_small_lp(inst, partial, classes.small);
      const auto sol = solve_small_lp(lp);
      const auto m = static_cast<long>(inst.machines());
      CHECK(integral_part_value(lp, sol.x) >= sol.objective - 2 * eps * eps * from_time(inst.due_date()) * m);

      const auto out = algorithm_C(inst, partial, classes.small);
      Time placed = 0;
      for (std::size_t i = 0; i < out.partial.machine_count(); ++i) {
        for (JobId j : out.partial.jobs_on(i)) {
          if (std::find(classes.small.begin(), classes.small.end(), j) != classes.small.end()) placed += inst.p(j);
        }
        CHECK(out.partial.remaining_capacity(i) >= 0);
        CHECK(out.partial.load(i) <= std::max(partial.load(i), inst.due_date()));
      }
      CHECK(from_time(placed) == integral_part_value(lp, sol.x));
      CHECK(placed + [&] {
        Time rest = 0;
        for (JobId j : out.pending) rest += inst.p(j);
        return rest;
      }() == [&] {
        Time all = 0;
        for (JobId j : classes.small) all += inst.p(j);
        return all;
      }());
    }
  }
}
