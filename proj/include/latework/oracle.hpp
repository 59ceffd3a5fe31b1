#pragma once

// Exact optimum for desk-scale instances. Used as ground truth for the
// approximation guarantees.

#include "latework/model.hpp"
#include "latework/rational.hpp"

#include <cstddef>
#include <stdexcept>

namespace latework {

struct OracleResult {
  Time best_X = 0;
  Time best_Y = 0;
  Schedule witness;
};

class OracleBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Maximum early work (equivalently minimum late work) over all
/// capacity-respecting job-to-machine assignments. Searches job by job over
/// sorted per-machine (min(load, d), job count) signatures; `node_budget`
/// caps the number of generated states and throws OracleBudgetError when
/// exceeded.
OracleResult exact_best_early(const Instance& inst, std::size_t node_budget = 20'000'000);

enum class Branch { big, small };

/// big iff X* >= eps * m * d.
Branch exact_condition_branch(const Instance& inst, const Rational& eps, const OracleResult& result);

const char* to_string(Branch b) noexcept;

}  // namespace latework
