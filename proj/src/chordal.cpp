#include "fatforest/chordal.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace fatforest {

namespace {

// MCS visit sequence: repeatedly pick the unvisited vertex with the most
// visited neighbors. The *reverse* of this sequence is the elimination
// order, so breaking weight ties toward the largest label here puts the
// smallest labels first in the returned order.
std::vector<int> mcs_visit_sequence(const Graph& g) {
  const int n = g.n();
  std::vector<int> weight(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> seq;
  seq.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = n; v >= 1; --v) {
      if (!visited[static_cast<std::size_t>(v)] &&
          (best == -1 || weight[static_cast<std::size_t>(v)] >
                             weight[static_cast<std::size_t>(best)])) {
        best = v;
      }
    }
    visited[static_cast<std::size_t>(best)] = 1;
    seq.push_back(best);
    for (int u : g.neighbors(best)) {
      if (!visited[static_cast<std::size_t>(u)]) {
        ++weight[static_cast<std::size_t>(u)];
      }
    }
  }
  return seq;
}

// Positions of each vertex in an order (0-based); -1 for absent labels.
std::vector<int> positions_of(const EliminationOrder& order, int n) {
  std::vector<int> pos(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  }
  return pos;
}

// First vertex (in order) whose later neighbors are not a clique, together
// with a witnessing non-adjacent pair. Returns {-1,...} if none.
struct PeoFailure {
  int v = -1;
  int x = -1;
  int y = -1;
};

PeoFailure find_peo_failure(const Graph& g, const EliminationOrder& order) {
  const int n = g.n();
  std::vector<int> pos = positions_of(order, n);
  for (int idx = 0; idx < n; ++idx) {
    const int v = order[static_cast<std::size_t>(idx)];
    std::vector<int> later;
    for (int u : g.neighbors(v)) {
      if (pos[static_cast<std::size_t>(u)] > idx) later.push_back(u);
    }
    for (std::size_t a = 0; a < later.size(); ++a) {
      for (std::size_t b = a + 1; b < later.size(); ++b) {
        if (!g.has_edge(later[a], later[b])) return {v, later[a], later[b]};
      }
    }
  }
  return {};
}

// Shortest x..y path in g avoiding v and N(v) \ {x, y}; closing it through v
// gives a chordless cycle. Empty when x and y are disconnected there.
std::vector<int> chordless_cycle_through(const Graph& g, int v, int x, int y) {
  const int n = g.n();
  std::vector<char> blocked(static_cast<std::size_t>(n) + 1, 0);
  blocked[static_cast<std::size_t>(v)] = 1;
  for (int u : g.neighbors(v)) {
    if (u != x && u != y) blocked[static_cast<std::size_t>(u)] = 1;
  }
  std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
  std::deque<int> queue{x};
  parent[static_cast<std::size_t>(x)] = x;
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    if (cur == y) {
      std::vector<int> path;
      for (int w = y; w != x; w = parent[static_cast<std::size_t>(w)]) {
        path.push_back(w);
      }
      path.push_back(x);
      path.push_back(v);
      std::reverse(path.begin(), path.end());  // v, x, ..., y
      return path;
    }
    for (int u : g.neighbors(cur)) {
      if (!blocked[static_cast<std::size_t>(u)] &&
          !parent[static_cast<std::size_t>(u)]) {
        parent[static_cast<std::size_t>(u)] = cur;
        queue.push_back(u);
      }
    }
  }
  return {};
}

std::vector<int> find_chordless_cycle(const Graph& g, const PeoFailure& hint) {
  if (hint.v != -1) {
    auto cycle = chordless_cycle_through(g, hint.v, hint.x, hint.y);
    if (!cycle.empty()) return cycle;
  }
  // Any chordless cycle c1..ck admits the triple (c2; c1, c3), so scanning
  // all of them must succeed on a non-chordal graph.
  for (int v = 1; v <= g.n(); ++v) {
    std::vector<int> nbrs = g.neighbors(v);
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
      for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
        if (g.has_edge(nbrs[a], nbrs[b])) continue;
        auto cycle = chordless_cycle_through(g, v, nbrs[a], nbrs[b]);
        if (!cycle.empty()) return cycle;
      }
    }
  }
  throw std::logic_error("no chordless cycle found in a non-chordal graph");
}

// Maximal cliques of a chordal graph in MCS discovery order: a visited
// vertex whose already-visited neighborhood equals the clique discovered
// last extends it; anything else starts a new clique. The discovery order
// has the running intersection property.
std::vector<Face> clique_discovery_order(const Graph& g,
                                         const EliminationOrder& order) {
  std::vector<int> visit(order.rbegin(), order.rend());
  std::vector<char> visited(static_cast<std::size_t>(g.n()) + 1, 0);
  std::vector<Face> cliques;
  for (int v : visit) {
    std::vector<int> prior;
    for (int u : g.neighbors(v)) {
      if (visited[static_cast<std::size_t>(u)]) prior.push_back(u);
    }
    Face prior_face{std::move(prior)};
    if (!cliques.empty() && prior_face == cliques.back()) {
      cliques.back() = cliques.back().with_vertex(v);
    } else {
      cliques.push_back(prior_face.with_vertex(v));
    }
    visited[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t a = 0; a < cliques.size(); ++a) {
    if (!g.is_clique(cliques[a])) {
      throw std::logic_error("discovered set is not a clique");
    }
    for (std::size_t b = 0; b < cliques.size(); ++b) {
      if (a != b && cliques[a].subset_of(cliques[b])) {
        throw std::logic_error("discovered cliques are not incomparable");
      }
    }
  }
  return cliques;
}

// Shrinks a non-face clique to an inclusion-minimal non-face (still a
// clique, since subsets of cliques are cliques).
Face minimal_missing_face(const SimplicialComplex& c, Face k) {
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (int u : k.verts()) {
      std::vector<int> sub;
      for (int x : k.verts()) {
        if (x != u) sub.push_back(x);
      }
      Face candidate{std::move(sub)};
      if (!c.is_face(candidate)) {
        k = std::move(candidate);
        shrunk = true;
        break;
      }
    }
  }
  return k;
}

}  // namespace

EliminationOrder mcs_order(const Graph& g) {
  std::vector<int> seq = mcs_visit_sequence(g);
  std::reverse(seq.begin(), seq.end());
  return seq;
}

bool is_perfect_elimination(const Graph& g, const EliminationOrder& order) {
  if (static_cast<int>(order.size()) != g.n()) {
    throw std::invalid_argument("order size differs from vertex count");
  }
  std::vector<int> pos = positions_of(order, g.n());
  for (int v = 1; v <= g.n(); ++v) {
    if (pos[static_cast<std::size_t>(v)] < 0) {
      throw std::invalid_argument("order is not a permutation of 1..n");
    }
  }
  return find_peo_failure(g, order).v == -1;
}

ChordalityResult check_chordal(const Graph& g) {
  ChordalityResult result;
  result.order = mcs_order(g);
  PeoFailure failure = find_peo_failure(g, result.order);
  if (failure.v == -1) {
    result.chordal = true;
    return result;
  }
  result.chordal = false;
  result.chordless_cycle = find_chordless_cycle(g, failure);
  return result;
}

bool is_chordal(const Graph& g) { return check_chordal(g).chordal; }

std::vector<Face> maximal_cliques_chordal(const Graph& g) {
  ChordalityResult cr = check_chordal(g);
  if (!cr.chordal) {
    throw NotChordalError("graph is not chordal", cr.chordless_cycle);
  }
  std::vector<Face> cliques = clique_discovery_order(g, cr.order);
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

int FatForestDecomposition::max_dim() const {
  int d = -1;
  for (int x : dims) d = std::max(d, x);
  return d;
}

int FatForestDecomposition::min_attach_dim() const {
  if (attach_dims.empty()) {
    throw std::logic_error("single-facet decomposition has no attachments");
  }
  return *std::min_element(attach_dims.begin(), attach_dims.end());
}

SimplicialComplex FatForestDecomposition::complex() const {
  return SimplicialComplex::from_facets(n, facets);
}

FatForestDecomposition fat_forest_decomposition(const SimplicialComplex& c) {
  const bool no_facets =
      c.is_void() || c.is_empty_complex() ||
      (c.rep() == SimplicialComplex::Rep::kFlagView && c.n() == 0);
  if (no_facets) {
    if (c.n() == 0 && !c.is_void()) {
      throw NotFatForestError(
          "no facet of dimension >= 0 (ground set is empty)",
          FatForestObstruction::kNoFacets);
    }
    // The clique complex of the 1-skeleton contains every singleton (and the
    // empty face), so these are not flag complexes.
    Face missing = c.is_void() ? Face::empty() : Face{1};
    throw NotFatForestError(
        "complex is not the clique complex of its 1-skeleton (missing face " +
            missing.str() + ")",
        FatForestObstruction::kNotFlag, {}, missing.verts());
  }

  const Graph skeleton = one_skeleton(c);
  ChordalityResult cr = check_chordal(skeleton);
  if (!cr.chordal) {
    throw NotFatForestError("1-skeleton is not chordal",
                            FatForestObstruction::kNotChordal,
                            cr.chordless_cycle);
  }

  std::vector<Face> cliques = clique_discovery_order(skeleton, cr.order);

  if (c.rep() == SimplicialComplex::Rep::kFacetList) {
    std::vector<Face> sorted = cliques;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != c.facet_list()) {
      // Some maximal clique is not a face (every facet is a clique of the
      // skeleton, so a mismatch can only be in this direction).
      for (const Face& k : sorted) {
        if (!c.is_face(k)) {
          Face missing = minimal_missing_face(c, k);
          throw NotFatForestError(
              "complex is not the clique complex of its 1-skeleton "
              "(missing face " +
                  missing.str() + ")",
              FatForestObstruction::kNotFlag, {}, missing.verts());
        }
      }
      throw std::logic_error("facet/clique mismatch without missing face");
    }
  }

  FatForestDecomposition out;
  out.n = c.n();
  out.facets = std::move(cliques);
  int covered = 0;
  Face running;
  for (std::size_t j = 0; j < out.facets.size(); ++j) {
    const Face& k = out.facets[j];
    out.dims.push_back(k.dim());
    Face meet = face_intersection(k, running);
    if (j > 0) {
      int parent = -1;
      if (!meet.is_empty()) {
        for (std::size_t i = 0; i < j; ++i) {
          if (meet.subset_of(out.facets[i])) {
            parent = static_cast<int>(i);
            break;
          }
        }
        if (parent == -1) {
          throw std::logic_error("attachment is not a face of the union");
        }
      }
      out.attach_dims.push_back(meet.dim());
      out.parents.push_back(parent);
    }
    covered += static_cast<int>(k.size() - meet.size());
    running = face_union(running, k);
  }
  if (covered != out.n) {
    throw std::logic_error("decomposition does not cover the ground set");
  }
  return out;
}

bool is_fat_forest(const SimplicialComplex& c) {
  try {
    fat_forest_decomposition(c);
    return true;
  } catch (const NotFatForestError&) {
    return false;
  }
}

SimplicialComplex facetize(const SimplicialComplex& c) {
  if (c.rep() == SimplicialComplex::Rep::kFacetList) return c;
  return SimplicialComplex::from_facets(c.n(),
                                        maximal_cliques_chordal(c.graph()));
}

bool is_chordless_cycle(const Graph& g, const std::vector<int>& cycle) {
  const std::size_t len = cycle.size();
  if (len < 4) return false;
  std::vector<int> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return false;
  }
  for (std::size_t a = 0; a < len; ++a) {
    for (std::size_t b = a + 1; b < len; ++b) {
      const bool consecutive = (b == a + 1) || (a == 0 && b == len - 1);
      if (g.has_edge(cycle[a], cycle[b]) != consecutive) return false;
    }
  }
  return true;
}

}  // namespace fatforest
