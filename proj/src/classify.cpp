#include "latework/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace latework {

void require_eps(const Rational& eps) {
  if (sgn(eps) <= 0 || eps > Rational(1, 3)) {
    throw std::invalid_argument("eps must lie in (0, 1/3], got " + to_string(eps));
  }
}

int class_bound(const Rational& eps) {
  if (sgn(eps) <= 0 || eps >= 1) throw std::invalid_argument("eps must lie in (0, 1)");
  const Rational limit = 1 / (eps * eps);
  const Rational step = 1 + eps;
  // Count k >= 0 with (1+eps)^k <= 1/eps^2.
  int count = 0;
  for (Rational power = 1; power <= limit; power *= step) ++count;
  return count;
}

RoundingGrid build_grid(Time due_date, const Rational& eps, RoundingMode mode) {
  if (due_date < 1) throw std::invalid_argument("due date must be positive");
  if (sgn(eps) <= 0 || eps >= 1) throw std::invalid_argument("eps must lie in (0, 1)");
  RoundingGrid grid;
  grid.mode = mode;
  const Rational step = 1 + eps;
  Rational point = eps * eps * from_time(due_date);
  if (mode == RoundingMode::down) {
    // The k = 0 point is kept even when it reaches d (only possible for d = 1).
    grid.values.push_back(ceil_to_time(point));
    for (point *= step;; point *= step) {
      const Time v = ceil_to_time(point);
      if (v >= due_date) break;
      if (v != grid.values.back()) grid.values.push_back(v);
    }
  } else {
    for (;; point *= step) {
      const Time v = floor_to_time(point);
      if (v > 0 && (grid.values.empty() || v != grid.values.back())) grid.values.push_back(v);
      if (v >= due_date) break;
    }
  }
  return grid;
}

Time round_job(Time p, const RoundingGrid& grid) {
  const auto& v = grid.values;
  if (grid.mode == RoundingMode::down) {
    auto it = std::upper_bound(v.begin(), v.end(), p);
    if (it == v.begin()) throw std::domain_error("no grid value <= " + std::to_string(p));
    return *std::prev(it);
  }
  auto it = std::lower_bound(v.begin(), v.end(), p);
  if (it == v.end()) throw std::domain_error("no grid value >= " + std::to_string(p));
  return *it;
}

JobClasses classify_jobs(const Instance& inst, const Rational& eps, RoundingMode mode) {
  require_eps(eps);
  JobClasses classes;
  classes.eps = eps;
  const Time d = inst.due_date();
  const Rational big_threshold = eps * eps * from_time(d);
  classes.grid = build_grid(d, eps, mode);
  classes.big_classes.resize(classes.grid.values.size());
  for (std::size_t h = 0; h < classes.grid.values.size(); ++h) {
    classes.big_classes[h].rounded = classes.grid.values[h];
  }

  for (const auto& job : inst.jobs()) {
    if (job.p >= d) {
      classes.huge.push_back(job.id);
    } else if (from_time(job.p) >= big_threshold) {
      classes.big.push_back(job.id);
      const Time rounded = round_job(job.p, classes.grid);
      const auto& values = classes.grid.values;
      const auto h = static_cast<std::size_t>(
          std::lower_bound(values.begin(), values.end(), rounded) - values.begin());
      classes.big_classes[h].jobs.push_back(job.id);
    } else {
      classes.small.push_back(job.id);
    }
  }
  for (auto& cls : classes.big_classes) {
    std::stable_sort(cls.jobs.begin(), cls.jobs.end(),
                     [&](JobId a, JobId b) { return inst.p(a) > inst.p(b); });
  }
  return classes;
}

GuardLimits GuardLimits::from_environment() {
  GuardLimits limits;
  const char* raw = std::getenv("LATEWORK_GUARD");
  if (raw == nullptr || *raw == '\0') return limits;
  const std::string text(raw);
  auto parse = [&](const std::string& part) -> std::size_t {
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part.size() || part.empty() || value == 0) {
      throw std::invalid_argument("LATEWORK_GUARD must be '<n>' or '<assignments>,<layouts>'");
    }
    return static_cast<std::size_t>(value);
  };
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    limits.max_assignments = limits.max_layouts = parse(text);
  } else {
    limits.max_assignments = parse(text.substr(0, comma));
    limits.max_layouts = parse(text.substr(comma + 1));
  }
  return limits;
}

bool is_feasible_assignment(const Assignment& a, const JobClasses& classes, const Instance& inst) {
  if (a.gamma.size() != classes.big_classes.size()) return false;
  long count = 0;
  Time start = 0;
  for (std::size_t h = 0; h < a.gamma.size(); ++h) {
    if (a.gamma[h] < 0) return false;
    for (int k = 0; k < a.gamma[h]; ++k) {
      if (start >= inst.due_date()) return false;
      start += classes.big_classes[h].rounded;
      ++count;
    }
  }
  return count <= inst.capacity();
}

bool is_feasible_layout(const Layout& layout, const std::vector<Assignment>& assignments,
                        const JobClasses& classes, const Instance& inst) {
  if (layout.t.size() != assignments.size()) return false;
  const long free_machines = inst.machines() - static_cast<long>(classes.huge.size());
  long used = 0;
  for (int t : layout.t) {
    if (t < 0) return false;
    used += t;
  }
  if (used > free_machines) return false;
  for (std::size_t h = 0; h < classes.big_classes.size(); ++h) {
    long demand = 0;
    for (std::size_t i = 0; i < assignments.size(); ++i) {
      demand += static_cast<long>(layout.t[i]) * assignments[i].gamma[h];
    }
    if (demand > static_cast<long>(classes.big_classes[h].jobs.size())) return false;
  }
  return true;
}

std::vector<Assignment> enumerate_assignments(const JobClasses& classes, const Instance& inst,
                                              const GuardLimits& limits) {
  const std::size_t k = classes.big_classes.size();
  std::vector<Assignment> out;
  Assignment current{std::vector<int>(k, 0)};

  // Classes are visited in increasing rounded size, so each newly added job
  // starts at the running total of the jobs already chosen.
  auto recurse = [&](auto&& self, std::size_t h, int used, Time total) -> void {
    if (h == k) {
      if (out.size() >= limits.max_assignments) {
        throw EnumerationGuardError("more than " + std::to_string(limits.max_assignments) +
                                    " feasible assignments; instance too rich for this eps");
      }
      out.push_back(current);
      return;
    }
    const int available = static_cast<int>(classes.big_classes[h].jobs.size());
    const Time size = classes.big_classes[h].rounded;
    Time running = total;
    for (int g = 0;; ++g) {
      current.gamma[h] = g;
      self(self, h + 1, used + g, running);
      if (g == available || used + g == inst.capacity() || running >= inst.due_date()) break;
      running += size;
    }
    current.gamma[h] = 0;
  };
  recurse(recurse, 0, 0, 0);
  return out;
}

std::size_t for_each_layout(const std::vector<Assignment>& assignments, const JobClasses& classes,
                            const Instance& inst, const GuardLimits& limits,
                            const std::function<void(const Layout&)>& visit) {
  const long free_machines =
      std::max<long>(0, inst.machines() - static_cast<long>(classes.huge.size()));
  const std::size_t k = classes.big_classes.size();
  std::vector<long> budget(k);
  for (std::size_t h = 0; h < k; ++h) budget[h] = static_cast<long>(classes.big_classes[h].jobs.size());

  Layout current{std::vector<int>(assignments.size(), 0)};
  std::size_t visited = 0;

  auto recurse = [&](auto&& self, std::size_t i, long remaining) -> void {
    if (i == assignments.size()) {
      if (visited >= limits.max_layouts) {
        throw EnumerationGuardError("more than " + std::to_string(limits.max_layouts) +
                                    " feasible layouts; instance too rich for this eps");
      }
      ++visited;
      visit(current);
      return;
    }
    const auto& gamma = assignments[i].gamma;
    for (int t = 0;; ++t) {
      current.t[i] = t;
      self(self, i + 1, remaining - t);
      if (t == remaining) break;
      bool fits = true;
      for (std::size_t h = 0; h < k && fits; ++h) fits = gamma[h] <= budget[h];
      if (!fits) break;
      for (std::size_t h = 0; h < k; ++h) budget[h] -= gamma[h];
    }
    // Undo the budget consumed by the t copies taken at this level.
    const int taken = current.t[i];
    for (std::size_t h = 0; h < k; ++h) budget[h] += static_cast<long>(taken) * gamma[h];
    current.t[i] = 0;
  };
  recurse(recurse, 0, free_machines);
  return visited;
}

std::vector<Layout> enumerate_layouts(const std::vector<Assignment>& assignments, const JobClasses& classes,
                                      const Instance& inst, const GuardLimits& limits) {
  std::vector<Layout> out;
  for_each_layout(assignments, classes, inst, limits, [&](const Layout& l) { out.push_back(l); });
  return out;
}

}  // namespace latework
