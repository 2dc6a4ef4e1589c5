#pragma once

#include <vector>

#include "csr/graph.hpp"

namespace csr {

using ResourceId = int;

/// One resource id per node; the strategy profile of the game.
using Allocation = std::vector<ResourceId>;

/// Immutable game definition: the network plus the number of resource types.
/// Each node caches exactly one resource and pays the summed hop distance to
/// the nearest copy of every other resource; a resource held by nobody costs
/// D+1 per node.
struct Instance {
  Graph graph;
  int resource_count;  // k >= 1

  Instance(Graph g, int k);

  int node_count() const { return graph.node_count(); }

  /// k > n means some resource can never be placed; allowed (costs stay
  /// well-defined under the D+1 rule) but worth a warning upstream.
  bool resources_exceed_nodes() const { return resource_count > graph.node_count(); }
};

/// Throws std::invalid_argument unless `alloc` has length n with every entry
/// in 0..k-1.
void validate_allocation(const Instance& inst, const Allocation& alloc);

/// Distance from node i to the nearest holder of resource o (0 if i holds it
/// herself); D+1 when nobody holds o.
int nearest_holder_distance(const Instance& inst, const Allocation& alloc, NodeId i,
                            ResourceId o);

/// Sum of nearest-holder distances over all resources other than the one node
/// i holds. At most (k-1)*(D+1).
long long player_cost(const Instance& inst, const Allocation& alloc, NodeId i);

long long social_cost(const Instance& inst, const Allocation& alloc);

/// Distance from node i to the nearest *other* node holding the same
/// resource; D when i holds the lone copy.
int radius(const Instance& inst, const Allocation& alloc, NodeId i);

/// Smallest g >= 0 such that every resource appears in B(i, g); D+1 when some
/// resource is missing from the whole profile.
int resource_radius(const Instance& inst, const Allocation& alloc, NodeId i);

}  // namespace csr
