#include "csr/solver.hpp"

#include <algorithm>
#include <string>

namespace csr {

namespace {

/// k^n if it fits under limit+1, else limit+1.
long long profile_count_capped(int k, int n, long long limit) {
  long long count = 1;
  for (int i = 0; i < n; ++i) {
    if (count > limit / k) return limit + 1;
    count *= k;
  }
  return count;
}

void check_budget(const Instance& inst, long long budget, const char* op) {
  const long long total =
      profile_count_capped(inst.resource_count, inst.graph.node_count(), budget);
  if (total > budget)
    throw budget_exceeded(std::string(op) + ": k^n exceeds enumeration budget of " +
                          std::to_string(budget));
}

}  // namespace

std::optional<Deviation> find_deviation(const Instance& inst, const Allocation& alloc) {
  validate_allocation(inst, alloc);
  const int n = inst.graph.node_count();
  Allocation scratch = alloc;
  for (NodeId i = 0; i < n; ++i) {
    const long long current = player_cost(inst, alloc, i);
    for (ResourceId o = 0; o < inst.resource_count; ++o) {
      if (o == alloc[i]) continue;
      scratch[i] = o;
      const long long cost = player_cost(inst, scratch, i);
      scratch[i] = alloc[i];
      if (cost < current) return Deviation{i, o, current - cost};
    }
  }
  return std::nullopt;
}

bool is_nash(const Instance& inst, const Allocation& alloc) {
  return !find_deviation(inst, alloc).has_value();
}

bool next_profile(Allocation& alloc, int k) {
  for (auto it = alloc.rbegin(); it != alloc.rend(); ++it) {
    if (*it + 1 < k) {
      ++*it;
      return true;
    }
    *it = 0;
  }
  return false;
}

OptimalSearch brute_force_optimal(const Instance& inst, long long budget) {
  check_budget(inst, budget, "brute_force_optimal");
  Allocation profile(inst.graph.node_count(), 0);
  OptimalSearch best{profile, social_cost(inst, profile)};
  while (next_profile(profile, inst.resource_count)) {
    const long long cost = social_cost(inst, profile);
    if (cost < best.cost) {
      best.cost = cost;
      best.profile = profile;  // lexicographic order makes the first hit lex-smallest
    }
  }
  return best;
}

std::vector<Allocation> optimal_profiles(const Instance& inst, long long budget) {
  check_budget(inst, budget, "optimal_profiles");
  Allocation profile(inst.graph.node_count(), 0);
  std::vector<Allocation> minimizers{profile};
  long long best = social_cost(inst, profile);
  while (next_profile(profile, inst.resource_count)) {
    const long long cost = social_cost(inst, profile);
    if (cost > best) continue;
    if (cost < best) {
      best = cost;
      minimizers.clear();
    }
    minimizers.push_back(profile);
  }
  return minimizers;
}

NashEnumeration enumerate_nash(const Instance& inst, long long budget, bool keep_profiles) {
  check_budget(inst, budget, "enumerate_nash");
  NashEnumeration result;
  Allocation profile(inst.graph.node_count(), 0);
  do {
    if (!is_nash(inst, profile)) continue;
    const long long cost = social_cost(inst, profile);
    if (result.count == 0) {
      result.min_cost = result.max_cost = cost;
    } else {
      result.min_cost = std::min(result.min_cost, cost);
      result.max_cost = std::max(result.max_cost, cost);
    }
    ++result.count;
    if (keep_profiles) result.profiles.push_back(profile);
  } while (next_profile(profile, inst.resource_count));
  return result;
}

EquilibriumReport price_of_anarchy(const Instance& inst, long long budget) {
  const OptimalSearch optimal = brute_force_optimal(inst, budget);
  const NashEnumeration nash = enumerate_nash(inst, budget, /*keep_profiles=*/false);
  EquilibriumReport report;
  report.optimal_cost = optimal.cost;
  report.optimal_profile = optimal.profile;
  report.ne_count = nash.count;
  report.ne_min_cost = nash.min_cost;
  report.ne_max_cost = nash.max_cost;
  report.poa = optimal.cost > 0
                   ? static_cast<double>(nash.max_cost) / static_cast<double>(optimal.cost)
                   : 1.0;
  return report;
}

}  // namespace csr
