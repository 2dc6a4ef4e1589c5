#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace csr {

using NodeId = int;
using Edge = std::pair<NodeId, NodeId>;  // stored normalized (min, max)

/// Undirected connected simple graph with cached all-pairs hop distances.
///
/// Nodes are dense integers 0..n-1. Construction runs one BFS per node and
/// rejects disconnected inputs, so every distance query is a table lookup and
/// always finite. Immutable after construction; safe to share across threads.
class Graph {
 public:
  /// Throws std::invalid_argument on self-loops, duplicate edges, endpoints
  /// out of range, n < 1, or a disconnected graph.
  Graph(int n, std::vector<Edge> edges);

  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<NodeId>& neighbors(NodeId i) const;

  int dist(NodeId i, NodeId j) const { return dist_[static_cast<size_t>(i) * n_ + j]; }
  int diameter() const { return diameter_; }
  int degree(NodeId i) const;
  int min_degree() const { return min_degree_; }
  int max_degree() const { return max_degree_; }

  /// Members of B(i, r) = { x : dist(i,x) <= r }, ascending node id.
  /// Empty for r < 0; just {i} for r = 0.
  std::vector<NodeId> ball(NodeId center, int radius) const;
  int ball_size(NodeId center, int radius) const;

  /// Tree iff it has exactly n-1 edges (connectivity is guaranteed).
  bool is_tree() const { return static_cast<int>(edges_.size()) == n_ - 1; }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  void check_node(NodeId i) const;

  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<int> dist_;  // flat n*n
  std::vector<int> degrees_;
  int diameter_ = 0;
  int min_degree_ = 0;
  int max_degree_ = 0;
};

// ---- Instance-family generators ------------------------------------------
// All are deterministic; the seeded ones produce identical graphs for equal
// seeds.

Graph make_path(int n);
Graph make_cycle(int n);   // n >= 3
Graph make_clique(int n);
Graph make_star(int n);    // node 0 is the hub
Graph make_random_tree(int n, std::uint64_t seed);
Graph make_gnp_connected(int n, double p, std::uint64_t seed, int max_retries = 100);

/// Two-layer worst-case family: bottom nodes 0..k-2 form a clique, top nodes
/// k-1..n-1 form an independent set, every top node is adjacent to every
/// bottom node; n = (m+1)(k-1). Requires m >= 1, k >= 2.
Graph make_poa_example(int m, int k);

/// Decodes a Pruefer sequence (entries in 0..n-1, n = seq.size() + 2) into the
/// corresponding labeled tree. The map is a bijection onto labeled trees.
Graph tree_from_pruefer(const std::vector<int>& sequence);

/// Uniform family dispatch used by the CLI and bench configs.
struct FamilySpec {
  std::string family;  // path, cycle, clique, star, random_tree, gnp_connected, poa_example
  int n = 0;
  int m = 0;           // poa_example only
  int k = 0;           // poa_example only (also the game's resource count)
  double p = 0.0;      // gnp_connected only
  std::uint64_t seed = 0;
  int max_retries = 100;
};

Graph generate(const FamilySpec& spec);

}  // namespace csr
