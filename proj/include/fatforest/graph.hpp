#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <utility>
#include <vector>

#include "fatforest/face.hpp"

namespace fatforest {

/// Simple undirected graph on vertices {1..n}. No self-loops; edges are
/// unordered pairs. Immutable in spirit: build once, then share freely.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const { return n_; }

  /// Adds {u, v}; throws std::invalid_argument on self-loops or labels
  /// outside 1..n. Adding an existing edge is a no-op.
  void add_edge(int u, int v);

  bool has_edge(int u, int v) const;
  int degree(int v) const;

  /// All edges as pairs (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;
  std::size_t edge_count() const;

  /// Neighbors of v as a bitset of size n + 1 (bit index = vertex label).
  const boost::dynamic_bitset<>& adjacency_row(int v) const;

  std::vector<int> neighbors(int v) const;

  bool is_clique(const Face& f) const;

  bool operator==(const Graph& other) const;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<boost::dynamic_bitset<>> adj_;  // adj_[v], v in 1..n
};

/// Complement graph: {u,v} is an edge iff it is not one in g.
Graph complement_graph(const Graph& g);

}  // namespace fatforest
