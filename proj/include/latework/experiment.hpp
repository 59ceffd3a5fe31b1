#pragma once

// Ratio experiments: generated instances, exact optimum, both PTAS drivers
// and the branch-specific algorithm, checked against the guarantees in
// exact rational arithmetic.

#include "latework/classify.hpp"
#include "latework/generate.hpp"
#include "latework/oracle.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace latework {

struct RatioRow {
  std::uint64_t seed = 0;  // regenerates the instance via gen_random
  std::size_t trial = 0;
  std::size_t n = 0;
  int m = 0;
  int N = 0;
  Time d = 0;
  Rational eps;
  Rational c;
  /// "big" / "small" by X* >= eps*m*d, or "guard" / "budget" when the
  /// enumeration cap or the oracle budget stopped the row.
  std::string branch;
  Time oracle_X = 0;
  Time oracle_Y = 0;
  Time algo_X = 0;
  Rational ratio_X;
  Rational oracle_shifted;
  Rational algo_shifted;
  Rational ratio_shifted;
  /// Unset on excluded rows.
  std::optional<bool> guarantee_ok;
};

struct RatioReport {
  std::vector<RatioRow> rows;

  /// True when no counted row violates a guarantee.
  bool verdict() const;
  std::size_t excluded() const;
  std::string to_csv() const;
  static std::string csv_header();
};

struct ExperimentOptions {
  unsigned threads = 1;
  GuardLimits limits{};
  std::size_t oracle_budget = 20'000'000;
};

/// Checks per (trial, eps):
///   X_ptas >= (1 - 4 eps) X*,  c p_sum + Y_ptas <= (1 + 4 eps/c)(c p_sum + Y*)
/// and for the branch selected by the oracle
///   big:   algorithm_A alone meets the same two bounds,
///   small: LPT list scheduling meets (1 - 2 eps) and (1 + 2 eps/c).
/// Rows come out in (trial, eps) order whatever the thread count.
RatioReport run_experiment(const GenSpec& spec, const std::vector<Rational>& eps_list, const Rational& c,
                           std::size_t trials, const ExperimentOptions& options = {});

}  // namespace latework
