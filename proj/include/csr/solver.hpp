#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "csr/game.hpp"

namespace csr {

/// Thrown when an enumeration would exceed its cost-evaluation budget.
class budget_exceeded : public std::runtime_error {
 public:
  explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr long long kDefaultEnumerationBudget = 10'000'000;

/// A strictly improving unilateral switch found at a profile.
struct Deviation {
  NodeId player = 0;
  ResourceId resource = 0;
  long long cost_gain = 0;

  bool operator==(const Deviation&) const = default;
};

/// The witness with the lowest player id, then lowest resource id, if the
/// profile is not a pure Nash equilibrium.
std::optional<Deviation> find_deviation(const Instance& inst, const Allocation& alloc);

/// No player has a unilateral resource switch strictly lowering her cost.
bool is_nash(const Instance& inst, const Allocation& alloc);

/// Advances `alloc` to the lexicographically next profile over k resources;
/// false once the last profile (all k-1) wraps around.
bool next_profile(Allocation& alloc, int k);

struct OptimalSearch {
  Allocation profile;  // lexicographically smallest minimizer
  long long cost = 0;
};

/// Exact minimum social cost over all k^n profiles. Throws budget_exceeded
/// when k^n > budget.
OptimalSearch brute_force_optimal(const Instance& inst,
                                  long long budget = kDefaultEnumerationBudget);

/// Every social-cost minimizer, in lexicographic order.
std::vector<Allocation> optimal_profiles(const Instance& inst,
                                         long long budget = kDefaultEnumerationBudget);

struct NashEnumeration {
  std::vector<Allocation> profiles;  // lexicographic order; empty if !keep_profiles
  long long count = 0;
  long long min_cost = 0;
  long long max_cost = 0;
};

/// All pure Nash equilibria by exhaustive deviation checks.
NashEnumeration enumerate_nash(const Instance& inst,
                               long long budget = kDefaultEnumerationBudget,
                               bool keep_profiles = true);

/// Exact ground truth for one instance. Pure equilibria always exist here, so
/// ne_count >= 1; poa = ne_max_cost / optimal_cost, or 1 when the optimum
/// costs nothing.
struct EquilibriumReport {
  long long optimal_cost = 0;
  Allocation optimal_profile;
  long long ne_count = 0;
  long long ne_min_cost = 0;
  long long ne_max_cost = 0;
  double poa = 1.0;
};

EquilibriumReport price_of_anarchy(const Instance& inst,
                                   long long budget = kDefaultEnumerationBudget);

}  // namespace csr
