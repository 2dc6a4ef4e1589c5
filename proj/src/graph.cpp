#include "csr/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "csr/rng.hpp"

namespace csr {

namespace {

std::string node_pair_str(NodeId a, NodeId b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 1) throw std::invalid_argument("graph: node count must be >= 1");
  for (auto& [a, b] : edges) {
    if (a == b) throw std::invalid_argument("graph: self-loop at node " + std::to_string(a));
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw std::invalid_argument("graph: edge endpoint out of range " + node_pair_str(a, b));
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("graph: duplicate edge");
  edges_ = std::move(edges);

  adjacency_.assign(n_, {});
  for (const auto& [a, b] : edges_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());

  degrees_.resize(n_);
  for (NodeId i = 0; i < n_; ++i) degrees_[i] = static_cast<int>(adjacency_[i].size());
  min_degree_ = *std::min_element(degrees_.begin(), degrees_.end());
  max_degree_ = *std::max_element(degrees_.begin(), degrees_.end());

  // One BFS per node fills the distance table.
  dist_.assign(static_cast<size_t>(n_) * n_, -1);
  std::deque<NodeId> queue;
  for (NodeId src = 0; src < n_; ++src) {
    int* row = dist_.data() + static_cast<size_t>(src) * n_;
    row[src] = 0;
    queue.clear();
    queue.push_back(src);
    while (!queue.empty()) {
      NodeId u = queue.front();
      queue.pop_front();
      for (NodeId v : adjacency_[u]) {
        if (row[v] < 0) {
          row[v] = row[u] + 1;
          queue.push_back(v);
        }
      }
    }
    for (NodeId j = 0; j < n_; ++j) {
      if (row[j] < 0)
        throw std::invalid_argument("graph: disconnected (no path between " +
                                    std::to_string(src) + " and " + std::to_string(j) + ")");
      diameter_ = std::max(diameter_, row[j]);
    }
  }
}

void Graph::check_node(NodeId i) const {
  if (i < 0 || i >= n_)
    throw std::invalid_argument("graph: node " + std::to_string(i) + " out of range");
}

const std::vector<NodeId>& Graph::neighbors(NodeId i) const {
  check_node(i);
  return adjacency_[i];
}

int Graph::degree(NodeId i) const {
  check_node(i);
  return degrees_[i];
}

std::vector<NodeId> Graph::ball(NodeId center, int radius) const {
  check_node(center);
  std::vector<NodeId> members;
  if (radius < 0) return members;
  const int* row = dist_.data() + static_cast<size_t>(center) * n_;
  for (NodeId j = 0; j < n_; ++j)
    if (row[j] <= radius) members.push_back(j);
  return members;
}

int Graph::ball_size(NodeId center, int radius) const {
  check_node(center);
  if (radius < 0) return 0;
  const int* row = dist_.data() + static_cast<size_t>(center) * n_;
  int count = 0;
  for (NodeId j = 0; j < n_; ++j)
    if (row[j] <= radius) ++count;
  return count;
}

Graph make_path(int n) {
  if (n < 1) throw std::invalid_argument("path: n must be >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return Graph(n, std::move(edges));
}

Graph make_clique(int n) {
  if (n < 1) throw std::invalid_argument("clique: n must be >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph make_star(int n) {
  if (n < 1) throw std::invalid_argument("star: n must be >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph(n, std::move(edges));
}

Graph tree_from_pruefer(const std::vector<int>& sequence) {
  const int n = static_cast<int>(sequence.size()) + 2;
  for (int v : sequence)
    if (v < 0 || v >= n) throw std::invalid_argument("pruefer: entry out of range");
  std::vector<int> degree(n, 1);
  for (int v : sequence) ++degree[v];
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  // Standard decode: join the smallest current leaf to the next sequence
  // entry. `ptr` moves only forward; a vertex that drops to degree 1 below
  // ptr is consumed immediately as `leaf`, so nothing is skipped.
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int v : sequence) {
    edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return Graph(n, std::move(edges));
}

Graph make_random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_tree: n must be >= 1");
  if (n == 1) return Graph(1, {});
  if (n == 2) return Graph(2, {{0, 1}});
  auto rng = make_rng(seed);
  std::vector<int> sequence(n - 2);
  for (int& v : sequence) v = static_cast<int>(uniform_below(rng, n));
  return tree_from_pruefer(sequence);
}

Graph make_gnp_connected(int n, double p, std::uint64_t seed, int max_retries) {
  if (n < 1) throw std::invalid_argument("gnp_connected: n must be >= 1");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("gnp_connected: p must be in [0,1]");
  if (max_retries < 1) throw std::invalid_argument("gnp_connected: max_retries must be >= 1");
  auto rng = make_rng(seed);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (uniform_unit(rng) < p) edges.emplace_back(i, j);
    try {
      return Graph(n, std::move(edges));
    } catch (const std::invalid_argument&) {
      // disconnected draw; resample
    }
  }
  throw std::runtime_error("gnp_connected: no connected sample within " +
                           std::to_string(max_retries) + " retries");
}

Graph make_poa_example(int m, int k) {
  if (m < 1 || k < 2) throw std::invalid_argument("poa_example: need m >= 1 and k >= 2");
  const int bottom = k - 1;
  const int n = (m + 1) * (k - 1);
  std::vector<Edge> edges;
  for (int i = 0; i < bottom; ++i)
    for (int j = i + 1; j < bottom; ++j) edges.emplace_back(i, j);
  for (int t = bottom; t < n; ++t)
    for (int b = 0; b < bottom; ++b) edges.emplace_back(b, t);
  return Graph(n, std::move(edges));
}

Graph generate(const FamilySpec& spec) {
  if (spec.family == "path") return make_path(spec.n);
  if (spec.family == "cycle") return make_cycle(spec.n);
  if (spec.family == "clique") return make_clique(spec.n);
  if (spec.family == "star") return make_star(spec.n);
  if (spec.family == "random_tree") return make_random_tree(spec.n, spec.seed);
  if (spec.family == "gnp_connected")
    return make_gnp_connected(spec.n, spec.p, spec.seed, spec.max_retries);
  if (spec.family == "poa_example") return make_poa_example(spec.m, spec.k);
  throw std::invalid_argument("generate: unknown family '" + spec.family + "'");
}

}  // namespace csr
