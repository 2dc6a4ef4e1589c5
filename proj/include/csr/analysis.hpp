#pragma once

#include <cstdint>
#include <random>

#include "csr/game.hpp"
#include "csr/solver.hpp"

namespace csr {

/// Closed-form upper bound on the optimal social cost, from assigning every
/// node an independent uniform resource:
///   n(2k-1) + k(k-1) * sum_i (1 - 1/k)^(d_i),   d_i the vertex degrees.
double random_allocation_cost_bound(const Graph& graph, int k);

/// Exact expected social cost of the independent uniform assignment, by the
/// tail formula k * sum_i sum_{r=1}^{D+1} (1 - 1/k)^(|B(i,r-1)|). Missing
/// resources contribute exactly D+1, matching the cost convention.
double expected_uniform_cost(const Graph& graph, int k);

/// The same tail series extended down to r = 0, which adds a constant n*k.
/// Also sits below random_allocation_cost_bound; kept for cross-checking.
double expected_uniform_cost_series_from_zero(const Graph& graph, int k);

/// Comparison of an exact value or Monte Carlo estimate against the
/// closed-form bound. satisfied means exact_or_estimate <= bound_value, with
/// 3 * standard_error slack when the estimate is sampled.
struct BoundReport {
  double bound_value = 0.0;
  double exact_or_estimate = 0.0;
  long long samples = 0;      // 0 for exact values
  double standard_error = 0.0;
  bool satisfied = false;
};

BoundReport exact_uniform_cost_report(const Instance& inst);

/// One independent uniform draw of a full profile.
Allocation uniform_random_allocation(const Instance& inst, std::mt19937_64& rng);

/// Sample mean and standard error of the social cost under independent
/// uniform assignment; deterministic given the seed.
BoundReport monte_carlo_uniform_cost(const Instance& inst, long long samples,
                                     std::uint64_t seed);

/// social_cost(alloc) / optimal cost, with the optimum found by enumeration;
/// 1 when the optimum costs nothing.
double approximation_ratio(const Instance& inst, const Allocation& alloc,
                           long long budget = kDefaultEnumerationBudget);

/// The two canonical labelings of the two-layer poa_example family and their
/// closed-form costs. The equilibrium labeling puts resource k-1 on the whole
/// bottom clique and spreads resources 0..k-2 over the top in groups of m;
/// the optimal labeling gives the bottom nodes distinct resources 0..k-2 and
/// resource k-1 to every top node.
struct PoaFamilyForms {
  long long ne_cost = 0;
  long long optimal_cost = 0;
  double ratio = 1.0;  // ne_cost / optimal_cost = 2 - (m+k-1)/((m+1)(k-1))
  Allocation ne_profile;
  Allocation optimal_profile;
};

PoaFamilyForms poa_example_closed_forms(int m, int k);

/// True iff every brute-force optimal allocation on a tree instance is a pure
/// Nash equilibrium. Throws std::invalid_argument on non-trees.
bool tree_optima_are_nash(const Instance& inst, long long budget = kDefaultEnumerationBudget);

}  // namespace csr
