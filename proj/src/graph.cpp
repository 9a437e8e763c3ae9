#include "fatforest/graph.hpp"

#include <stdexcept>
#include <string>

namespace fatforest {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
  adj_.assign(static_cast<std::size_t>(n) + 1,
              boost::dynamic_bitset<>(static_cast<std::size_t>(n) + 1));
}

void Graph::check_vertex(int v) const {
  if (v < 1 || v > n_) {
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " outside 1.." + std::to_string(n_));
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  }
  adj_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
  adj_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
}

bool Graph::has_edge(int u, int v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_ || u == v) return false;
  return adj_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v));
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[static_cast<std::size_t>(v)].count());
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n_; ++u) {
    for (int v = u + 1; v <= n_; ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (int v = 1; v <= n_; ++v) {
    total += adj_[static_cast<std::size_t>(v)].count();
  }
  return total / 2;
}

const boost::dynamic_bitset<>& Graph::adjacency_row(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  const auto& row = adj_[static_cast<std::size_t>(v)];
  for (auto b = row.find_first(); b != boost::dynamic_bitset<>::npos;
       b = row.find_next(b)) {
    out.push_back(static_cast<int>(b));
  }
  return out;
}

bool Graph::is_clique(const Face& f) const {
  const auto& vs = f.verts();
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      if (!has_edge(vs[a], vs[b])) return false;
    }
  }
  return true;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && adj_ == other.adj_;
}

Graph complement_graph(const Graph& g) {
  Graph out(g.n());
  for (int u = 1; u <= g.n(); ++u) {
    for (int v = u + 1; v <= g.n(); ++v) {
      if (!g.has_edge(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

}  // namespace fatforest
