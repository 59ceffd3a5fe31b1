#include "latework/experiment.hpp"

#include "latework/algorithms.hpp"

#include <atomic>
#include <exception>
#include <sstream>
#include <thread>

namespace latework {

namespace {

Rational ratio(const Rational& num, const Rational& den) {
  return sgn(den) == 0 ? Rational(1) : Rational(num / den);
}

std::vector<RatioRow> run_trial(const GenSpec& base, std::size_t trial, const std::vector<Rational>& eps_list,
                                const Rational& c, const ExperimentOptions& options) {
  GenSpec spec = base;
  spec.seed = derive_seed(base.seed, trial);
  const Instance inst = gen_random(spec);

  RatioRow proto;
  proto.seed = spec.seed;
  proto.trial = trial;
  proto.n = inst.job_count();
  proto.m = inst.machines();
  proto.N = inst.capacity();
  proto.d = inst.due_date();
  proto.c = c;

  std::vector<RatioRow> rows;
  std::optional<OracleResult> oracle;
  try {
    oracle = exact_best_early(inst, options.oracle_budget);
  } catch (const OracleBudgetError&) {
    for (const auto& eps : eps_list) {
      RatioRow row = proto;
      row.eps = eps;
      row.branch = "budget";
      rows.push_back(std::move(row));
    }
    return rows;
  }

  const Rational p_sum = from_time(inst.total_processing());
  const Rational best_shifted = c * p_sum + from_time(oracle->best_Y);
  const Rational best_x = from_time(oracle->best_X);

  for (const auto& eps : eps_list) {
    RatioRow row = proto;
    row.eps = eps;
    row.oracle_X = oracle->best_X;
    row.oracle_Y = oracle->best_Y;
    row.oracle_shifted = best_shifted;
    try {
      const Schedule early = ptas_early(inst, eps, options.limits);
      const Schedule late = ptas_shifted_late(inst, eps, c, options.limits);
      row.algo_X = early_work(inst, early);
      row.algo_shifted = shifted_late_work(inst, late, c);
      row.ratio_X = ratio(from_time(row.algo_X), best_x);
      row.ratio_shifted = ratio(row.algo_shifted, best_shifted);

      bool ok = from_time(row.algo_X) >= (1 - 4 * eps) * best_x &&
                row.algo_shifted <= (1 + 4 * eps / c) * best_shifted;

      const Branch branch = exact_condition_branch(inst, eps, *oracle);
      row.branch = to_string(branch);
      if (branch == Branch::big) {
        const Schedule a_down = algorithm_A(inst, eps, RoundingMode::down, options.limits);
        const Schedule a_up = algorithm_A(inst, eps, RoundingMode::up, options.limits);
        ok = ok && from_time(early_work(inst, a_down)) >= (1 - 4 * eps) * best_x &&
             shifted_late_work(inst, a_up, c) <= (1 + 4 * eps / c) * best_shifted;
      } else {
        const auto order = lpt_order(inst);
        const Schedule lpt = algorithm_LS(inst, order);
        ok = ok && from_time(early_work(inst, lpt)) >= (1 - 2 * eps) * best_x &&
             shifted_late_work(inst, lpt, c) <= (1 + 2 * eps / c) * best_shifted;
      }
      row.guarantee_ok = ok;
    } catch (const EnumerationGuardError&) {
      row.branch = "guard";
      row.guarantee_ok.reset();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

bool RatioReport::verdict() const {
  for (const auto& row : rows) {
    if (row.guarantee_ok.has_value() && !*row.guarantee_ok) return false;
  }
  return true;
}

std::size_t RatioReport::excluded() const {
  std::size_t count = 0;
  for (const auto& row : rows) count += row.guarantee_ok.has_value() ? 0 : 1;
  return count;
}

std::string RatioReport::csv_header() {
  return "seed,trial,n,m,N,d,eps,c,branch,oracle_X,oracle_Y,algo_X,ratio_X,ratio_X_float,"
         "oracle_shifted,algo_shifted,ratio_shifted,ratio_shifted_float,guarantee_ok\n";
}

std::string RatioReport::to_csv() const {
  std::ostringstream out;
  out << csv_header();
  for (const auto& r : rows) {
    out << r.seed << ',' << r.trial << ',' << r.n << ',' << r.m << ',' << r.N << ',' << r.d << ','
        << to_string(r.eps) << ',' << to_string(r.c) << ',' << r.branch << ',';
    if (r.branch == "budget") {
      out << ",,,,,,,,,na\n";
      continue;
    }
    out << r.oracle_X << ',' << r.oracle_Y << ',';
    if (!r.guarantee_ok.has_value()) {
      out << ",,," << to_string(r.oracle_shifted) << ",,,,na\n";
      continue;
    }
    out << r.algo_X << ',' << to_string(r.ratio_X) << ',' << to_decimal(r.ratio_X) << ','
        << to_string(r.oracle_shifted) << ',' << to_string(r.algo_shifted) << ','
        << to_string(r.ratio_shifted) << ',' << to_decimal(r.ratio_shifted) << ','
        << (*r.guarantee_ok ? "true" : "false") << '\n';
  }
  return out.str();
}

RatioReport run_experiment(const GenSpec& spec, const std::vector<Rational>& eps_list, const Rational& c,
                           std::size_t trials, const ExperimentOptions& options) {
  validate_spec(spec);
  for (const auto& eps : eps_list) require_eps(eps);
  if (sgn(c) <= 0) throw std::invalid_argument("shift factor c must be positive");

  std::vector<std::vector<RatioRow>> per_trial(trials);
  std::vector<std::exception_ptr> failures(trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < trials; t = next++) {
      try {
        per_trial[t] = run_trial(spec, t, eps_list, c, options);
      } catch (...) {
        failures[t] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  }

  // Rethrow the failure of the lowest trial so errors are thread-count independent.
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  RatioReport report;
  for (auto& rows : per_trial) {
    for (auto& row : rows) report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace latework
