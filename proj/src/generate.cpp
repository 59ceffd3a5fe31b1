#include "latework/generate.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace latework {

namespace {

Time draw(std::mt19937_64& rng, IntRange r) {
  return std::uniform_int_distribution<Time>(r.lo, r.hi)(rng);
}

void require_range(const IntRange& r, const char* name, Time min_lo) {
  if (r.lo < min_lo || r.hi < r.lo) {
    throw std::invalid_argument(std::string("inconsistent range for ") + name + ": [" +
                                std::to_string(r.lo) + ", " + std::to_string(r.hi) + "]");
  }
}

// `parts` values in [1, max_size] summing to `total`.
std::vector<Time> random_composition(std::mt19937_64& rng, Time total, int parts, Time max_size) {
  std::vector<Time> out(static_cast<std::size_t>(parts), 1);
  Time remaining = total - parts;
  while (remaining > 0) {
    auto& slot = out[static_cast<std::size_t>(draw(rng, {0, parts - 1}))];
    if (slot < max_size) {
      slot += 1;
      --remaining;
    }
  }
  return out;
}

}  // namespace

void validate_spec(const GenSpec& spec) {
  require_range(spec.jobs, "n", 0);
  require_range(spec.machines, "m", 1);
  require_range(spec.capacity, "N", 1);
  require_range(spec.due_date, "d", 1);
  require_range(spec.item_size, "sizes", 1);
  if (spec.small_weight < 0 || spec.big_weight < 0 || spec.huge_weight < 0 ||
      spec.small_weight + spec.big_weight + spec.huge_weight == 0) {
    throw std::invalid_argument("size band weights must be nonnegative and not all zero");
  }
  if (sgn(spec.class_eps) <= 0 || spec.class_eps >= 1) {
    throw std::invalid_argument("class_eps must lie in (0, 1)");
  }
  if (spec.distinct_big < 0) throw std::invalid_argument("distinct_big must be nonnegative");
  if (spec.kind == GenKind::partition) {
    const Time min_items = spec.answer == PartitionAnswer::yes ? 2 : 1;
    if (spec.jobs.lo < min_items) {
      throw std::invalid_argument("partition instances need at least " + std::to_string(min_items) + " items");
    }
    if (spec.answer == PartitionAnswer::no && spec.item_size.hi < 2) {
      throw std::invalid_argument("no-instances need sizes up to at least 2");
    }
  }
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 over the pair
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Instance gen_random(const GenSpec& spec) {
  validate_spec(spec);
  std::mt19937_64 rng(spec.seed);

  if (spec.kind == GenKind::partition) {
    const auto n = static_cast<int>(draw(rng, spec.jobs));
    const std::uint64_t sub_seed = rng();
    switch (spec.answer) {
      case PartitionAnswer::yes:
        return partition_hard_instance(partition_yes_sizes(sub_seed, n, spec.item_size.hi)).instance;
      case PartitionAnswer::no:
        return partition_hard_instance(partition_no_sizes(sub_seed, n, spec.item_size.hi)).instance;
      case PartitionAnswer::any:
        break;
    }
    std::vector<Time> sizes(static_cast<std::size_t>(n));
    for (auto& e : sizes) e = draw(rng, spec.item_size);
    if (std::accumulate(sizes.begin(), sizes.end(), Time{0}) % 2 != 0) sizes.back() += 1;
    return partition_hard_instance(sizes).instance;
  }

  const auto n = static_cast<std::size_t>(draw(rng, spec.jobs));
  const auto m = static_cast<int>(draw(rng, spec.machines));
  const Time d = draw(rng, spec.due_date);
  auto cap = static_cast<int>(draw(rng, spec.capacity));
  const auto needed = static_cast<int>((n + static_cast<std::size_t>(m) - 1) / static_cast<std::size_t>(m));
  cap = std::max({cap, needed, 1});

  const Time big_lo = ceil_to_time(spec.class_eps * spec.class_eps * from_time(d));
  const IntRange small_band{1, std::max<Time>(1, big_lo - 1)};
  const Time big_hi = std::max<Time>(1, d - 1);
  const IntRange big_band{std::clamp<Time>(big_lo, 1, big_hi), big_hi};
  const IntRange huge_band{d, 2 * d};

  std::vector<Time> pool;
  if (spec.distinct_big > 0) {
    for (int k = 0; k < spec.distinct_big; ++k) pool.push_back(draw(rng, big_band));
  }

  std::discrete_distribution<int> band({static_cast<double>(spec.small_weight),
                                        static_cast<double>(spec.big_weight),
                                        static_cast<double>(spec.huge_weight)});
  std::vector<Time> p(n);
  for (auto& value : p) {
    switch (band(rng)) {
      case 0:
        value = draw(rng, small_band);
        break;
      case 1:
        value = pool.empty() ? draw(rng, big_band)
                             : pool[static_cast<std::size_t>(draw(rng, {0, static_cast<Time>(pool.size()) - 1}))];
        break;
      default:
        value = draw(rng, huge_band);
        break;
    }
  }
  return Instance(m, cap, d, std::move(p));
}

std::vector<Time> partition_yes_sizes(std::uint64_t seed, int n, Time max_size) {
  if (n < 2 || max_size < 1) throw std::invalid_argument("a yes-instance needs n >= 2 and max_size >= 1");
  if (max_size == 1 && n % 2 != 0) throw std::invalid_argument("an odd number of unit items never splits evenly");
  std::mt19937_64 rng(seed);
  int left = 0;
  int right = 0;
  do {
    left = static_cast<int>(draw(rng, {1, n - 1}));
    right = n - left;
  } while (std::max(left, right) > static_cast<Time>(std::min(left, right)) * max_size);
  const Time half = draw(rng, {std::max(left, right), static_cast<Time>(std::min(left, right)) * max_size});
  std::vector<Time> sizes = random_composition(rng, half, left, max_size);
  const auto other = random_composition(rng, half, right, max_size);
  sizes.insert(sizes.end(), other.begin(), other.end());
  std::shuffle(sizes.begin(), sizes.end(), rng);
  return sizes;
}

std::vector<Time> partition_no_sizes(std::uint64_t seed, int n, Time max_size) {
  if (n < 1 || max_size < 2) throw std::invalid_argument("a no-instance needs n >= 1 and max_size >= 2");
  std::mt19937_64 rng(seed);
  std::vector<Time> sizes;
  if (n >= 3 && draw(rng, {0, 1}) == 0) {
    // All even, total = 2 mod 4, so the half is odd and unreachable.
    Time sum = 0;
    for (int k = 0; k < n; ++k) {
      sizes.push_back(2 * draw(rng, {1, std::max<Time>(1, max_size / 2)}));
      sum += sizes.back();
    }
    if (sum % 4 == 0) sizes.back() += 2;
  } else {
    // One dominant item: rest sums to R, big item R + 2t exceeds the half R + t.
    Time rest = 0;
    for (int k = 0; k + 1 < n; ++k) {
      sizes.push_back(draw(rng, {1, max_size}));
      rest += sizes.back();
    }
    sizes.push_back(rest + 2 * draw(rng, {1, max_size}));
  }
  std::shuffle(sizes.begin(), sizes.end(), rng);
  return sizes;
}

GenSpec parse_gen_spec(std::string_view json_text) {
  const auto doc = nlohmann::json::parse(json_text);
  if (!doc.is_object()) throw std::invalid_argument("generator spec must be a JSON object");
  GenSpec spec;
  auto range = [&](const char* key, IntRange& out) {
    if (!doc.contains(key)) return;
    const auto& v = doc.at(key);
    if (v.is_number_integer()) {
      out.lo = out.hi = v.get<Time>();
    } else if (v.is_array() && v.size() == 2) {
      out.lo = v[0].get<Time>();
      out.hi = v[1].get<Time>();
    } else {
      throw std::invalid_argument(std::string("spec key '") + key + "' must be an integer or [lo, hi]");
    }
  };
  if (doc.contains("kind")) {
    const auto kind = doc.at("kind").get<std::string>();
    if (kind == "random") {
      spec.kind = GenKind::random;
    } else if (kind == "partition") {
      spec.kind = GenKind::partition;
    } else {
      throw std::invalid_argument("unknown generator kind '" + kind + "'");
    }
  }
  range("n", spec.jobs);
  range("m", spec.machines);
  range("N", spec.capacity);
  range("d", spec.due_date);
  range("sizes", spec.item_size);
  if (doc.contains("weights")) {
    const auto& w = doc.at("weights");
    if (!w.is_array() || w.size() != 3) throw std::invalid_argument("weights must be [small, big, huge]");
    spec.small_weight = w[0].get<int>();
    spec.big_weight = w[1].get<int>();
    spec.huge_weight = w[2].get<int>();
  }
  if (doc.contains("class_eps")) spec.class_eps = parse_rational(doc.at("class_eps").get<std::string>());
  if (doc.contains("distinct_big")) spec.distinct_big = doc.at("distinct_big").get<int>();
  if (doc.contains("answer")) {
    const auto answer = doc.at("answer").get<std::string>();
    if (answer == "yes") {
      spec.answer = PartitionAnswer::yes;
    } else if (answer == "no") {
      spec.answer = PartitionAnswer::no;
    } else if (answer == "any") {
      spec.answer = PartitionAnswer::any;
    } else {
      throw std::invalid_argument("unknown partition answer '" + answer + "'");
    }
  }
  if (doc.contains("seed")) spec.seed = doc.at("seed").get<std::uint64_t>();
  validate_spec(spec);
  return spec;
}

}  // namespace latework
