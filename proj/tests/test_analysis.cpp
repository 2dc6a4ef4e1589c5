#include <cmath>
#include <vector>

#include "doctest.h"

#include "csr/analysis.hpp"
#include "csr/game.hpp"
#include "csr/graph.hpp"
#include "csr/solver.hpp"
#include "test_helpers.hpp"

using csr::Allocation;
using csr::Instance;

TEST_CASE("closed-form bound on hand-checked graphs") {
  // n(2k-1) + k(k-1) sum_i (1-1/k)^deg(i).
  CHECK(csr::random_allocation_cost_bound(csr::make_path(3), 2) ==
        doctest::Approx(11.5));  // 9 + 2*(1/2 + 1/4 + 1/2)
  CHECK(csr::random_allocation_cost_bound(csr::make_path(2), 2) == doctest::Approx(8.0));
  CHECK(csr::random_allocation_cost_bound(csr::make_clique(4), 3) ==
        doctest::Approx(4.0 * 5.0 + 6.0 * 4.0 * std::pow(2.0 / 3.0, 3)));
  CHECK_THROWS_AS(csr::random_allocation_cost_bound(csr::make_path(3), 0),
                  std::invalid_argument);
}

TEST_CASE("expected uniform cost on hand-checked graphs") {
  // P3, k=2: averaging social cost over all 8 profiles gives 40/8 = 5.
  CHECK(csr::expected_uniform_cost(csr::make_path(3), 2) == doctest::Approx(5.0));
  // K2, k=2: profiles cost 4,2,2,4 -> mean 3.
  CHECK(csr::expected_uniform_cost(csr::make_path(2), 2) == doctest::Approx(3.0));
  CHECK(csr::expected_uniform_cost(csr::make_cycle(5), 1) == doctest::Approx(0.0));
}

TEST_CASE("expected uniform cost equals the brute-force profile average") {
  for (int index = 0; index < 16; ++index) {
    const csr::Graph g = testutil::property_graph(index);
    if (g.node_count() > 10) continue;
    const int k = 2 + index % 2;
    const Instance inst(g, k);
    const auto d = testutil::oracle_distances(g.node_count(), g.edges());
    const int diameter = testutil::oracle_diameter(d);

    long double total = 0.0L;
    long long profiles = 0;
    Allocation profile(g.node_count(), 0);
    do {
      total += testutil::oracle_social_cost(d, profile, k, diameter);
      ++profiles;
    } while (csr::next_profile(profile, k));

    CAPTURE(index);
    const double average = static_cast<double>(total / profiles);
    CHECK(csr::expected_uniform_cost(g, k) == doctest::Approx(average).epsilon(1e-9));
  }
}

TEST_CASE("expected cost sits under the closed-form bound") {
  for (int index = 0; index < 24; ++index) {
    const csr::Graph g = testutil::property_graph(index);
    for (int k : {2, 3, 5}) {
      CAPTURE(index);
      CAPTURE(k);
      const double exact = csr::expected_uniform_cost(g, k);
      const double bound = csr::random_allocation_cost_bound(g, k);
      CHECK(exact <= bound);
      // The r=0 extension adds exactly n*k and still fits under the bound.
      const double extended = csr::expected_uniform_cost_series_from_zero(g, k);
      CHECK(extended == doctest::Approx(exact + g.node_count() * k));
      CHECK(extended <= bound + 1e-9);
    }
  }
}

TEST_CASE("exact report wires the bound and expectation together") {
  const Instance inst(csr::make_path(3), 2);
  const auto report = csr::exact_uniform_cost_report(inst);
  CHECK(report.bound_value == doctest::Approx(11.5));
  CHECK(report.exact_or_estimate == doctest::Approx(5.0));
  CHECK(report.samples == 0);
  CHECK(report.standard_error == 0.0);
  CHECK(report.satisfied);
}

TEST_CASE("monte carlo estimate is deterministic and brackets the exact value") {
  const Instance inst(csr::make_gnp_connected(12, 0.4, 17), 3);
  const auto a = csr::monte_carlo_uniform_cost(inst, 20000, 99);
  const auto b = csr::monte_carlo_uniform_cost(inst, 20000, 99);
  CHECK(a.exact_or_estimate == b.exact_or_estimate);
  CHECK(a.standard_error == b.standard_error);
  CHECK(a.samples == 20000);
  CHECK(a.standard_error > 0.0);

  const double exact = csr::expected_uniform_cost(inst.graph, inst.resource_count);
  CHECK(std::abs(a.exact_or_estimate - exact) <= 5.0 * a.standard_error);
  CHECK(a.satisfied);

  CHECK_THROWS_AS(csr::monte_carlo_uniform_cost(inst, 0, 1), std::invalid_argument);
}

TEST_CASE("uniform draws hit every resource with roughly equal frequency") {
  const Instance inst(csr::make_path(4), 3);
  auto rng = csr::make_rng(5);
  std::vector<long long> counts(3, 0);
  const int draws = 30000;
  for (int s = 0; s < draws; ++s)
    for (int holding : csr::uniform_random_allocation(inst, rng)) ++counts[holding];
  for (long long c : counts) {
    // 4*30000 draws over 3 resources; 40000 expected, generous 5-sigma band.
    CHECK(c > 39000);
    CHECK(c < 41000);
  }
}

TEST_CASE("approximation ratio against the enumerated optimum") {
  const Instance inst(csr::make_path(3), 2);
  CHECK(csr::approximation_ratio(inst, {0, 1, 0}) == doctest::Approx(1.0));
  CHECK(csr::approximation_ratio(inst, {0, 0, 0}) == doctest::Approx(3.0));

  const Instance free_game(csr::make_path(3), 1);
  CHECK(csr::approximation_ratio(free_game, {0, 0, 0}) == doctest::Approx(1.0));
}

TEST_CASE("two-layer family closed forms at hand-checked sizes") {
  const auto tiny = csr::poa_example_closed_forms(1, 2);
  CHECK(tiny.ne_cost == 2);
  CHECK(tiny.optimal_cost == 2);
  CHECK(tiny.ratio == doctest::Approx(1.0));
  CHECK(tiny.ne_profile == Allocation{1, 0});
  CHECK(tiny.optimal_profile == Allocation{0, 1});

  const auto mid = csr::poa_example_closed_forms(2, 3);
  CHECK(mid.ne_cost == 16);
  CHECK(mid.optimal_cost == 12);
  CHECK(mid.ratio == doctest::Approx(4.0 / 3.0));
  CHECK(mid.ne_profile == Allocation{2, 2, 0, 0, 1, 1});
  CHECK(mid.optimal_profile == Allocation{0, 1, 2, 2, 2, 2});

  const auto large = csr::poa_example_closed_forms(10, 10);
  CHECK(large.ratio == doctest::Approx(2.0 - 19.0 / 99.0));
  CHECK(large.ne_cost == 10 * 9 * 17 + 81);
  CHECK(large.optimal_cost == 11 * 81);

  CHECK_THROWS_AS(csr::poa_example_closed_forms(0, 2), std::invalid_argument);
}

TEST_CASE("two-layer labelings verify as equilibrium and optimum") {
  for (const auto& [m, k] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 3}, {1, 4}}) {
    CAPTURE(m);
    CAPTURE(k);
    const Instance inst(csr::make_poa_example(m, k), k);
    const auto forms = csr::poa_example_closed_forms(m, k);

    CHECK(csr::social_cost(inst, forms.ne_profile) == forms.ne_cost);
    CHECK(csr::is_nash(inst, forms.ne_profile));
    CHECK(csr::social_cost(inst, forms.optimal_profile) == forms.optimal_cost);
    CHECK(csr::brute_force_optimal(inst).cost == forms.optimal_cost);

    // The family's equilibrium pins the anarchy ratio from below; 3 caps it.
    const auto report = csr::price_of_anarchy(inst);
    CHECK(report.poa >= forms.ratio - 1e-9);
    CHECK(report.poa <= 3.0);
  }
}

TEST_CASE("optimal allocations on trees are equilibria, and the check is tree-only") {
  CHECK(csr::tree_optima_are_nash(Instance(csr::make_path(3), 2)));
  CHECK(csr::tree_optima_are_nash(Instance(csr::make_star(6), 3)));
  CHECK(csr::tree_optima_are_nash(Instance(csr::make_random_tree(8, 21), 2)));
  CHECK_THROWS_AS(csr::tree_optima_are_nash(Instance(csr::make_cycle(4), 2)),
                  std::invalid_argument);
}
