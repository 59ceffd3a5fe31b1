#pragma once

// Seeded instance generators: random mixtures of small / big / huge jobs and
// PARTITION-derived two-machine instances.

#include "latework/model.hpp"
#include "latework/rational.hpp"
#include "latework/reduction.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace latework {

struct IntRange {
  Time lo = 1;
  Time hi = 1;

  friend bool operator==(const IntRange&, const IntRange&) = default;
};

enum class GenKind { random, partition };

/// Which PARTITION answer a partition spec produces; `any` draws sizes
/// uniformly and evens the total.
enum class PartitionAnswer { yes, no, any };

struct GenSpec {
  GenKind kind = GenKind::random;
  IntRange jobs{4, 10};
  IntRange machines{2, 3};
  /// Drawn N is raised to ceil(n/m) when needed so that m*N >= n.
  IntRange capacity{1, 10};
  IntRange due_date{20, 60};
  /// Relative weights of the bands [1, e^2 d), [e^2 d, d) and [d, 2d] where
  /// e = class_eps.
  int small_weight = 1;
  int big_weight = 2;
  int huge_weight = 1;
  Rational class_eps{1, 5};
  /// When positive, big sizes are drawn from a pool of this many values.
  int distinct_big = 0;
  /// Item sizes for kind = partition. The yes/no constructions use only the
  /// upper bound.
  IntRange item_size{1, 20};
  PartitionAnswer answer = PartitionAnswer::yes;
  std::uint64_t seed = 1;
};

/// Throws std::invalid_argument on empty or non-positive ranges, all-zero
/// weights or a class_eps outside (0, 1).
void validate_spec(const GenSpec& spec);

/// Deterministic in spec.seed. Partition specs go through
/// partition_hard_instance with the total made even.
Instance gen_random(const GenSpec& spec);

/// Seed for trial `index` of a run seeded with `base`.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// n sizes in [1, max_size] that split into two halves of equal sum.
std::vector<Time> partition_yes_sizes(std::uint64_t seed, int n, Time max_size);

/// n sizes with an even total that admit no equal split: either one item
/// exceeds half the total, or every item is even while the half is odd.
std::vector<Time> partition_no_sizes(std::uint64_t seed, int n, Time max_size);

/// JSON object with optional keys kind, n, m, N, d (each [lo, hi]),
/// weights ([small, big, huge]), class_eps, distinct_big, sizes, answer
/// ("yes", "no", "any"), seed.
GenSpec parse_gen_spec(std::string_view json_text);

}  // namespace latework
