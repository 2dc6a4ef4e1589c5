#include "csr/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "csr/rng.hpp"

namespace csr {

namespace {

void require_epsilon(double epsilon) {
  if (!(epsilon > 1.0)) throw std::invalid_argument("dynamics: epsilon must be > 1");
}

/// Distance from i to the nearest node other than i holding o; D if none.
/// This is i's radius after switching to o.
int prospective_radius(const Instance& inst, const Allocation& alloc, NodeId i, ResourceId o) {
  const Graph& g = inst.graph;
  int best = g.diameter();
  const int n = g.node_count();
  for (NodeId j = 0; j < n; ++j)
    if (j != i && alloc[j] == o) best = std::min(best, g.dist(i, j));
  return best;
}

long long cost_after_switch(const Instance& inst, Allocation& alloc, NodeId i, ResourceId o) {
  const ResourceId saved = alloc[i];
  alloc[i] = o;
  long long cost = player_cost(inst, alloc, i);
  alloc[i] = saved;
  return cost;
}

Move make_move(const Instance& inst, const Allocation& alloc, NodeId i, ResourceId target,
               long long current_cost, long long target_cost) {
  Move move;
  move.player = i;
  move.old_resource = alloc[i];
  move.new_resource = target;
  move.old_radius = radius(inst, alloc, i);
  move.new_radius = prospective_radius(inst, alloc, i, target);
  move.cost_gain = current_cost - target_cost;
  return move;
}

}  // namespace

std::optional<Move> improving_best_response(const Instance& inst, const Allocation& alloc,
                                            NodeId i) {
  validate_allocation(inst, alloc);
  const long long current = player_cost(inst, alloc, i);
  Allocation scratch = alloc;
  ResourceId best = -1;
  long long best_cost = current;
  int best_radius = -1;
  for (ResourceId o = 0; o < inst.resource_count; ++o) {
    if (o == alloc[i]) continue;
    const long long cost = cost_after_switch(inst, scratch, i, o);
    if (cost > best_cost) continue;
    const int rad = prospective_radius(inst, alloc, i, o);
    // Strictly better cost wins; equal cost wins only over an already-chosen
    // alternative with a smaller radius (ids ascend, so earlier id keeps ties).
    if (cost < best_cost || (best != -1 && rad > best_radius)) {
      best = o;
      best_cost = cost;
      best_radius = rad;
    }
  }
  if (best == -1 || best_cost >= current) return std::nullopt;
  return make_move(inst, alloc, i, best, current, best_cost);
}

long long default_lbr_max_steps(const Instance& inst) {
  const long long n = inst.graph.node_count();
  const long long cap = std::min<long long>(inst.resource_count - 1, inst.graph.diameter());
  return 3 * n * n * n * cap + inst.graph.diameter();
}

long long default_ebr_max_steps(const Instance& inst, double epsilon) {
  const double n = inst.graph.node_count();
  const double d = std::max(1, inst.graph.diameter());
  const double exponent = n > 1.0 ? std::log(n) / std::log(epsilon) : 0.0;
  const double bound = std::ceil(4.0 * n * n * std::pow(d, exponent));
  const double clamp = 1e15;
  return static_cast<long long>(std::min(bound, clamp));
}

double radius_potential(const Instance& inst, const Allocation& alloc, double epsilon) {
  require_epsilon(epsilon);
  validate_allocation(inst, alloc);
  const int n = inst.graph.node_count();
  const double exponent = n > 1 ? std::log(static_cast<double>(n)) / std::log(epsilon) : 0.0;
  double total = 0.0;
  for (NodeId i = 0; i < n; ++i)
    total += std::pow(static_cast<double>(radius(inst, alloc, i)), -exponent);
  return total;
}

namespace {

struct StepRecorder {
  const Instance& inst;
  double epsilon;
  Trace trace;

  void record(const Allocation& after, const Move& move) {
    TraceStep step;
    step.index = trace.steps_taken();
    step.move = move;
    step.potential_after = radius_potential(inst, after, epsilon);
    step.social_cost_after = social_cost(inst, after);
    trace.steps.push_back(step);
  }
};

}  // namespace

DynamicsResult run_lbr(const Instance& inst, Allocation initial, long long max_steps) {
  validate_allocation(inst, initial);
  if (max_steps < 0) max_steps = default_lbr_max_steps(inst);
  const int n = inst.graph.node_count();
  StepRecorder recorder{inst, kDefaultEpsilon, {}};
  Allocation current = std::move(initial);

  while (true) {
    NodeId chosen = -1;
    int chosen_radius = 0;
    std::optional<Move> chosen_move;
    for (NodeId i = 0; i < n; ++i) {
      auto move = improving_best_response(inst, current, i);
      if (!move) continue;
      const int r = move->old_radius;
      if (chosen == -1 || r < chosen_radius) {
        chosen = i;
        chosen_radius = r;
        chosen_move = move;
      }
    }
    if (chosen == -1) {
      recorder.trace.terminated = true;
      break;
    }
    if (recorder.trace.steps_taken() >= max_steps) break;  // cap hit, improver remains
    current[chosen] = chosen_move->new_resource;
    recorder.record(current, *chosen_move);
  }
  return {std::move(current), std::move(recorder.trace)};
}

std::vector<ResourceId> ebr_candidates(const Instance& inst, const Allocation& alloc, NodeId i,
                                       double epsilon) {
  require_epsilon(epsilon);
  validate_allocation(inst, alloc);
  const int own_radius = radius(inst, alloc, i);
  const double threshold = epsilon * own_radius;
  std::vector<ResourceId> candidates;
  for (ResourceId o = 0; o < inst.resource_count; ++o) {
    if (o == alloc[i]) continue;
    const int rho = prospective_radius(inst, alloc, i, o);
    // rho > own_radius only matters when own_radius = 0 (single-node graph),
    // where the threshold alone would admit no-growth switches forever.
    if (rho >= threshold && rho > own_radius) candidates.push_back(o);
  }
  return candidates;
}

DynamicsResult run_ebr(const Instance& inst, Allocation initial, double epsilon,
                       long long max_steps, EbrSelection selection,
                       std::uint64_t selection_seed) {
  require_epsilon(epsilon);
  validate_allocation(inst, initial);
  if (max_steps < 0) max_steps = default_ebr_max_steps(inst, epsilon);
  const int n = inst.graph.node_count();
  StepRecorder recorder{inst, epsilon, {}};
  Allocation current = std::move(initial);
  auto rng = make_rng(selection_seed);

  while (true) {
    std::vector<std::pair<NodeId, ResourceId>> eligible;  // node, placeholder
    for (NodeId i = 0; i < n; ++i) {
      auto candidates = ebr_candidates(inst, current, i, epsilon);
      if (!candidates.empty()) eligible.emplace_back(i, candidates.front());
    }
    if (eligible.empty()) {
      recorder.trace.terminated = true;
      break;
    }
    if (recorder.trace.steps_taken() >= max_steps) break;

    NodeId mover = -1;
    if (selection == EbrSelection::seeded_random) {
      mover = eligible[uniform_below(rng, eligible.size())].first;
    } else {
      int best_radius = 0;
      for (const auto& [i, unused] : eligible) {
        const int r = radius(inst, current, i);
        if (mover == -1 || r < best_radius) {
          mover = i;
          best_radius = r;
        }
      }
    }

    // Best response within the candidate set: minimum resulting cost, ties to
    // larger resulting radius, then smaller resource id.
    const auto candidates = ebr_candidates(inst, current, mover, epsilon);
    Allocation scratch = current;
    const long long current_cost = player_cost(inst, current, mover);
    ResourceId best = -1;
    long long best_cost = 0;
    int best_radius = -1;
    for (ResourceId o : candidates) {
      const long long cost = cost_after_switch(inst, scratch, mover, o);
      const int rad = prospective_radius(inst, current, mover, o);
      if (best == -1 || cost < best_cost || (cost == best_cost && rad > best_radius)) {
        best = o;
        best_cost = cost;
        best_radius = rad;
      }
    }
    Move move = make_move(inst, current, mover, best, current_cost, best_cost);
    current[mover] = best;
    recorder.record(current, move);
  }
  return {std::move(current), std::move(recorder.trace)};
}

}  // namespace csr
