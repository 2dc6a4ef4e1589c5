#include "csr/game.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace csr {

Instance::Instance(Graph g, int k) : graph(std::move(g)), resource_count(k) {
  if (k < 1) throw std::invalid_argument("instance: resource count must be >= 1");
}

void validate_allocation(const Instance& inst, const Allocation& alloc) {
  if (static_cast<int>(alloc.size()) != inst.graph.node_count())
    throw std::invalid_argument("allocation: length " + std::to_string(alloc.size()) +
                                " does not match node count " +
                                std::to_string(inst.graph.node_count()));
  for (ResourceId o : alloc)
    if (o < 0 || o >= inst.resource_count)
      throw std::invalid_argument("allocation: resource id " + std::to_string(o) +
                                  " out of range 0.." + std::to_string(inst.resource_count - 1));
}

namespace {

void check_node_id(const Instance& inst, NodeId i) {
  if (i < 0 || i >= inst.graph.node_count())
    throw std::invalid_argument("game: node " + std::to_string(i) + " out of range");
}

void check_resource_id(const Instance& inst, ResourceId o) {
  if (o < 0 || o >= inst.resource_count)
    throw std::invalid_argument("game: resource " + std::to_string(o) + " out of range");
}

void check_length(const Instance& inst, const Allocation& alloc) {
  if (static_cast<int>(alloc.size()) != inst.graph.node_count())
    throw std::invalid_argument("allocation: wrong length");
}

}  // namespace

int nearest_holder_distance(const Instance& inst, const Allocation& alloc, NodeId i,
                            ResourceId o) {
  check_node_id(inst, i);
  check_resource_id(inst, o);
  check_length(inst, alloc);
  const Graph& g = inst.graph;
  int best = g.diameter() + 1;  // missing-resource sentinel
  const int n = g.node_count();
  for (NodeId j = 0; j < n; ++j)
    if (alloc[j] == o) best = std::min(best, g.dist(i, j));
  return best;
}

long long player_cost(const Instance& inst, const Allocation& alloc, NodeId i) {
  check_node_id(inst, i);
  check_length(inst, alloc);
  long long total = 0;
  for (ResourceId o = 0; o < inst.resource_count; ++o)
    if (o != alloc[i]) total += nearest_holder_distance(inst, alloc, i, o);
  return total;
}

long long social_cost(const Instance& inst, const Allocation& alloc) {
  validate_allocation(inst, alloc);
  const Graph& g = inst.graph;
  const int n = g.node_count();
  const int k = inst.resource_count;
  const int missing = g.diameter() + 1;
  // Per-resource nearest-holder distances in one sweep over holders, then one
  // pass summing everything except each node's own resource.
  std::vector<int> nearest(static_cast<size_t>(k) * n, missing);
  for (NodeId j = 0; j < n; ++j) {
    int* row = nearest.data() + static_cast<size_t>(alloc[j]) * n;
    for (NodeId i = 0; i < n; ++i) row[i] = std::min(row[i], g.dist(i, j));
  }
  long long total = 0;
  for (ResourceId o = 0; o < k; ++o) {
    const int* row = nearest.data() + static_cast<size_t>(o) * n;
    for (NodeId i = 0; i < n; ++i)
      if (alloc[i] != o) total += row[i];
  }
  return total;
}

int radius(const Instance& inst, const Allocation& alloc, NodeId i) {
  check_node_id(inst, i);
  check_length(inst, alloc);
  const Graph& g = inst.graph;
  int best = g.diameter();  // lone-copy convention
  const int n = g.node_count();
  for (NodeId j = 0; j < n; ++j)
    if (j != i && alloc[j] == alloc[i]) best = std::min(best, g.dist(i, j));
  return best;
}

int resource_radius(const Instance& inst, const Allocation& alloc, NodeId i) {
  check_node_id(inst, i);
  // Equals the largest nearest-holder distance over all resources, including
  // the one i holds (distance 0); the D+1 sentinel propagates for missing
  // resources.
  int worst = 0;
  for (ResourceId o = 0; o < inst.resource_count; ++o)
    worst = std::max(worst, nearest_holder_distance(inst, alloc, i, o));
  return worst;
}

}  // namespace csr
