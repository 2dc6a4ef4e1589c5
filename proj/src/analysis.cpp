#include "csr/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "csr/rng.hpp"

namespace csr {

namespace {

void check_resource_count(int k) {
  if (k < 1) throw std::invalid_argument("analysis: resource count must be >= 1");
}

}  // namespace

double random_allocation_cost_bound(const Graph& graph, int k) {
  check_resource_count(k);
  const int n = graph.node_count();
  const double miss = 1.0 - 1.0 / k;
  double degree_sum = 0.0;
  for (NodeId i = 0; i < n; ++i) degree_sum += std::pow(miss, graph.degree(i));
  return static_cast<double>(n) * (2.0 * k - 1.0) +
         static_cast<double>(k) * (k - 1.0) * degree_sum;
}

double expected_uniform_cost(const Graph& graph, int k) {
  check_resource_count(k);
  if (k == 1) return 0.0;
  const int n = graph.node_count();
  const double miss = 1.0 - 1.0 / k;
  double total = 0.0;
  for (NodeId i = 0; i < n; ++i)
    for (int r = 1; r <= graph.diameter() + 1; ++r)
      total += std::pow(miss, graph.ball_size(i, r - 1));
  return k * total;
}

double expected_uniform_cost_series_from_zero(const Graph& graph, int k) {
  check_resource_count(k);
  return expected_uniform_cost(graph, k) +
         static_cast<double>(graph.node_count()) * static_cast<double>(k);
}

BoundReport exact_uniform_cost_report(const Instance& inst) {
  BoundReport report;
  report.bound_value = random_allocation_cost_bound(inst.graph, inst.resource_count);
  report.exact_or_estimate = expected_uniform_cost(inst.graph, inst.resource_count);
  report.samples = 0;
  report.standard_error = 0.0;
  report.satisfied = report.exact_or_estimate <= report.bound_value;
  return report;
}

Allocation uniform_random_allocation(const Instance& inst, std::mt19937_64& rng) {
  Allocation alloc(inst.graph.node_count());
  for (auto& holding : alloc)
    holding = static_cast<ResourceId>(uniform_below(rng, inst.resource_count));
  return alloc;
}

BoundReport monte_carlo_uniform_cost(const Instance& inst, long long samples,
                                     std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("monte_carlo: samples must be >= 1");
  auto rng = make_rng(seed);
  // Streaming mean/variance (Welford) keeps the merge exact for any shard plan
  // that replays the same draw order.
  double mean = 0.0;
  double m2 = 0.0;
  for (long long s = 0; s < samples; ++s) {
    const double cost =
        static_cast<double>(social_cost(inst, uniform_random_allocation(inst, rng)));
    const double delta = cost - mean;
    mean += delta / static_cast<double>(s + 1);
    m2 += delta * (cost - mean);
  }
  BoundReport report;
  report.bound_value = random_allocation_cost_bound(inst.graph, inst.resource_count);
  report.exact_or_estimate = mean;
  report.samples = samples;
  report.standard_error =
      samples > 1 ? std::sqrt(m2 / static_cast<double>(samples - 1) /
                              static_cast<double>(samples))
                  : 0.0;
  report.satisfied = mean <= report.bound_value + 3.0 * report.standard_error;
  return report;
}

double approximation_ratio(const Instance& inst, const Allocation& alloc, long long budget) {
  const long long cost = social_cost(inst, alloc);
  const long long optimal = brute_force_optimal(inst, budget).cost;
  if (optimal == 0) return 1.0;
  return static_cast<double>(cost) / static_cast<double>(optimal);
}

PoaFamilyForms poa_example_closed_forms(int m, int k) {
  if (m < 1 || k < 2) throw std::invalid_argument("poa_example: need m >= 1 and k >= 2");
  const int bottom = k - 1;
  const int n = (m + 1) * (k - 1);
  PoaFamilyForms forms;
  forms.ne_cost = static_cast<long long>(m) * (k - 1) * (2 * k - 3) +
                  static_cast<long long>(k - 1) * (k - 1);
  forms.optimal_cost = static_cast<long long>(m + 1) * (k - 1) * (k - 1);
  forms.ratio = 2.0 - static_cast<double>(m + k - 1) /
                          (static_cast<double>(m + 1) * (k - 1));

  forms.ne_profile.assign(n, k - 1);
  for (int t = bottom; t < n; ++t) forms.ne_profile[t] = (t - bottom) / m;

  forms.optimal_profile.assign(n, k - 1);
  for (int b = 0; b < bottom; ++b) forms.optimal_profile[b] = b;
  return forms;
}

bool tree_optima_are_nash(const Instance& inst, long long budget) {
  if (!inst.graph.is_tree())
    throw std::invalid_argument("tree_optima_are_nash: graph is not a tree");
  for (const Allocation& optimum : optimal_profiles(inst, budget))
    if (!is_nash(inst, optimum)) return false;
  return true;
}

}  // namespace csr
