#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "csr/game.hpp"

namespace csr {

/// One applied update: who moved, between which resources, and how the
/// mover's radius and cost changed. cost_gain = C_i(before) - C_i(after) and
/// is strictly positive for every least-best-response move.
struct Move {
  NodeId player = 0;
  ResourceId old_resource = 0;
  ResourceId new_resource = 0;
  int old_radius = 0;
  int new_radius = 0;
  long long cost_gain = 0;

  bool operator==(const Move&) const = default;
};

struct TraceStep {
  int index = 0;
  Move move;
  double potential_after = 0.0;
  long long social_cost_after = 0;

  bool operator==(const TraceStep&) const = default;
};

/// Ordered record of a dynamics run. terminated means no eligible mover
/// remained; false means the step cap cut the run short.
struct Trace {
  std::vector<TraceStep> steps;
  bool terminated = false;

  int steps_taken() const { return static_cast<int>(steps.size()); }
  bool operator==(const Trace&) const = default;
};

struct DynamicsResult {
  Allocation final_allocation;
  Trace trace;
};

/// Default epsilon for the radius-growth dynamics (and for the potential
/// column of least-best-response traces).
inline constexpr double kDefaultEpsilon = 2.718281828459045235360287471352662498;

/// Node i's strictly improving best response, if any: the resource switch
/// minimizing her resulting cost, kept only when strictly below the current
/// cost. Ties broken by larger resulting radius, then smaller resource id.
std::optional<Move> improving_best_response(const Instance& inst, const Allocation& alloc,
                                            NodeId i);

/// Step cap the least-best-response runner uses when none is given:
/// 3n^3 * min(k-1, D) + D.
long long default_lbr_max_steps(const Instance& inst);

/// Least best response: repeatedly pick, among players with a strictly
/// improving best response, one of minimum radius (ties to the smaller node
/// id) and apply her best response. Stops at a pure Nash equilibrium
/// (terminated = true) or after max_steps moves. max_steps < 0 selects the
/// default cap. Trace potentials are recorded at epsilon = e.
DynamicsResult run_lbr(const Instance& inst, Allocation initial, long long max_steps = -1);

/// Resources node i may switch to under the radius-growth rule: o != P_i
/// whose prospective radius rho(o) (distance to the nearest other holder of
/// o, or D when there is none) satisfies rho(o) >= epsilon * r_i and grows
/// the radius. Requires epsilon > 1.
std::vector<ResourceId> ebr_candidates(const Instance& inst, const Allocation& alloc, NodeId i,
                                       double epsilon);

/// Step cap the epsilon-best-response runner uses when none is given:
/// ceil(4 n^2 D^(log_eps n)), clamped to 10^15.
long long default_ebr_max_steps(const Instance& inst, double epsilon);

/// How run_ebr picks among eligible movers. least_radius (the default)
/// mirrors the least-best-response discipline and is deterministic;
/// seeded_random exists for robustness experiments.
enum class EbrSelection { least_radius, seeded_random };

/// Epsilon-best-response: while some node has a nonempty candidate set, pick
/// an eligible node (minimum radius, ties to smaller id, unless
/// seeded_random), and let her adopt the candidate minimizing her resulting
/// cost (ties: larger resulting radius, then smaller resource id).
DynamicsResult run_ebr(const Instance& inst, Allocation initial, double epsilon,
                       long long max_steps = -1,
                       EbrSelection selection = EbrSelection::least_radius,
                       std::uint64_t selection_seed = 0);

/// Radius potential sum_i r_i^(-log_eps n); positive, at most n, and
/// non-increasing along epsilon-best-response runs.
double radius_potential(const Instance& inst, const Allocation& alloc, double epsilon);

}  // namespace csr
