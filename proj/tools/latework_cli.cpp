// latework: solve, transform, generate and benchmark late-work / early-work
// scheduling instances.

#include "latework/algorithms.hpp"
#include "latework/experiment.hpp"
#include "latework/generate.hpp"
#include "latework/io.hpp"
#include "latework/oracle.hpp"
#include "latework/reduction.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace latework;

namespace {

constexpr int kExitError = 1;
constexpr int kExitGuard = 2;

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw std::invalid_argument("empty eps list");
  return out;
}

Schedule solve_latework(const Instance& inst, const std::string& algo, const Rational& eps, const Rational& c,
                        const GuardLimits& limits) {
  if (algo == "ptas-early") return ptas_early(inst, eps, limits);
  if (algo == "ptas-late") return ptas_shifted_late(inst, eps, c, limits);
  if (algo == "ls") {
    const auto order = lpt_order(inst);
    return algorithm_LS(inst, order);
  }
  return exact_best_early(inst).witness;
}

void print_objectives(Time x, Time y, const Rational& shifted) {
  std::cout << "X=" << x << " Y=" << y << " shifted=" << to_string(shifted) << "\n";
}

int run_solve(const std::string& algo, const std::string& eps_text, const std::string& c_text,
              const std::string& in_path, const std::string& out_path) {
  const Rational eps = parse_rational(eps_text);
  const Rational c = parse_rational(c_text);
  if (sgn(c) <= 0) throw std::invalid_argument("--c must be positive");
  const GuardLimits limits = GuardLimits::from_environment();
  const AnyInstance any = parse_instance(read_file(in_path));

  if (const auto* inst = std::get_if<Instance>(&any)) {
    const Schedule s = solve_latework(*inst, algo, eps, c, limits);
    write_file(out_path, write_schedule(s));
    print_objectives(early_work(*inst, s), late_work(*inst, s), shifted_late_work(*inst, s, c));
    return 0;
  }

  const auto& level = std::get<LevelingInstance>(any);
  const Instance late = instance_from_leveling(level);
  const LevelingSchedule ls = schedule_to_leveling(late, solve_latework(late, algo, eps, c, limits));
  write_file(out_path, write_leveling_schedule(ls));
  const Time above = leveling_above(level, ls);
  print_objectives(leveling_below(level, ls), above, c * from_time(level.total_demand()) + from_time(above));
  return 0;
}

int run_transform(const std::string& to, const std::string& in_path, const std::string& out_path,
                  const std::string& schedule_in, const std::string& schedule_out) {
  const AnyInstance any = parse_instance(read_file(in_path));
  if (!schedule_in.empty() && schedule_out.empty()) {
    throw std::invalid_argument("--schedule requires --schedule-out");
  }
  if (to == "leveling") {
    const auto* inst = std::get_if<Instance>(&any);
    if (inst == nullptr) throw std::invalid_argument("--to leveling expects a latework instance");
    write_file(out_path, write_instance(instance_to_leveling(*inst)));
    if (!schedule_in.empty()) {
      const Schedule s = parse_schedule(read_file(schedule_in), inst->machines());
      write_file(schedule_out, write_leveling_schedule(schedule_to_leveling(*inst, s)));
    }
    return 0;
  }
  const auto* level = std::get_if<LevelingInstance>(&any);
  if (level == nullptr) throw std::invalid_argument("--to latework expects a leveling instance");
  write_file(out_path, write_instance(instance_from_leveling(*level)));
  if (!schedule_in.empty()) {
    const LevelingSchedule ls = parse_leveling_schedule(read_file(schedule_in), level->job_count());
    write_file(schedule_out, write_schedule(schedule_from_leveling(*level, ls)));
  }
  return 0;
}

int run_gen(const std::string& kind, const std::string& answer, std::uint64_t seed, const std::string& spec_path,
            const std::string& out_path) {
  GenSpec spec = spec_path.empty() ? GenSpec{} : parse_gen_spec(read_file(spec_path));
  if (!kind.empty()) spec.kind = kind == "partition" ? GenKind::partition : GenKind::random;
  if (answer == "yes") spec.answer = PartitionAnswer::yes;
  if (answer == "no") spec.answer = PartitionAnswer::no;
  if (answer == "any") spec.answer = PartitionAnswer::any;
  spec.seed = seed;
  write_file(out_path, write_instance(gen_random(spec)));
  return 0;
}

int run_bench(const std::string& spec_path, const std::string& eps_text, const std::string& c_text,
              std::size_t trials, const std::string& csv_path, unsigned threads) {
  const GenSpec spec = parse_gen_spec(read_file(spec_path));
  ExperimentOptions options;
  options.threads = threads;
  options.limits = GuardLimits::from_environment();
  const RatioReport report = run_experiment(spec, parse_rational_list(eps_text), parse_rational(c_text), trials, options);
  write_file(csv_path, report.to_csv());
  std::size_t failed = 0;
  for (const auto& row : report.rows) failed += (row.guarantee_ok.has_value() && !*row.guarantee_ok) ? 1 : 0;
  std::cout << "rows=" << report.rows.size() << " excluded=" << report.excluded() << " violations=" << failed
            << "\n";
  return report.verdict() ? 0 : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Early/late work scheduling with machine capacities, and unit-job resource leveling"};
  app.require_subcommand(1);

  std::string algo = "ptas-early";
  std::string eps_text = "1/4";
  std::string c_text = "1";
  std::string in_path;
  std::string out_path;
  auto* solve = app.add_subcommand("solve", "Solve an instance (latework or leveling)");
  solve->add_option("--algo", algo, "Algorithm")
      ->check(CLI::IsMember({"ptas-early", "ptas-late", "ls", "exact"}));
  solve->add_option("--eps", eps_text, "Accuracy eps in (0, 1/3], e.g. 1/4");
  solve->add_option("--c", c_text, "Shift factor c > 0 for c*p_sum + Y");
  solve->add_option("--in", in_path, "Instance file")->required();
  solve->add_option("--out", out_path, "Schedule output file")->required();

  std::string to;
  std::string schedule_in;
  std::string schedule_out;
  auto* transform = app.add_subcommand("transform", "Map instances (and schedules) between the two problems");
  transform->add_option("--to", to, "Target problem")->required()->check(CLI::IsMember({"leveling", "latework"}));
  transform->add_option("--in", in_path, "Instance file")->required();
  transform->add_option("--out", out_path, "Mapped instance file")->required();
  transform->add_option("--schedule", schedule_in, "Schedule of the input instance");
  transform->add_option("--schedule-out", schedule_out, "Mapped schedule file");

  std::string kind;
  std::string answer;
  std::uint64_t seed = 1;
  std::string spec_path;
  auto* gen = app.add_subcommand("gen", "Generate a latework instance");
  gen->add_option("--kind", kind, "Generator kind")->check(CLI::IsMember({"random", "partition"}));
  gen->add_option("--answer", answer, "PARTITION answer of a partition instance")
      ->check(CLI::IsMember({"yes", "no", "any"}));
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--spec", spec_path, "JSON generator spec");
  gen->add_option("--out", out_path, "Instance output file")->required();

  std::size_t trials = 100;
  std::string csv_path;
  unsigned threads = 1;
  std::string bench_eps = "1/4";
  auto* bench = app.add_subcommand("bench", "Ratio experiment against the exact oracle");
  bench->add_option("--spec", spec_path, "JSON generator spec")->required();
  bench->add_option("--eps", bench_eps, "Comma-separated eps values, e.g. 1/4,1/5");
  bench->add_option("--c", c_text, "Shift factor c > 0");
  bench->add_option("--trials", trials, "Number of generated instances");
  bench->add_option("--csv", csv_path, "CSV output file")->required();
  bench->add_option("--threads", threads, "Worker threads");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return run_solve(algo, eps_text, c_text, in_path, out_path);
    if (*transform) return run_transform(to, in_path, out_path, schedule_in, schedule_out);
    if (*gen) return run_gen(kind, answer, seed, spec_path, out_path);
    if (*bench) return run_bench(spec_path, bench_eps, c_text, trials, csv_path, threads);
  } catch (const EnumerationGuardError& e) {
    std::cerr << "latework: " << e.what() << " (raise LATEWORK_GUARD or use a larger eps)\n";
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "latework: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
