#pragma once

#include <vector>

#include "fatforest/complex.hpp"
#include "fatforest/errors.hpp"
#include "fatforest/face.hpp"
#include "fatforest/graph.hpp"

namespace fatforest {

/// A permutation of 1..n; order[i] is eliminated at step i.
using EliminationOrder = std::vector<int>;

/// Maximum cardinality search. The returned order is a perfect elimination
/// order iff g is chordal. Deterministic: on weight ties the vertex
/// eliminated earlier is the one with the smaller label (the edgeless graph
/// yields the identity order).
EliminationOrder mcs_order(const Graph& g);

/// True iff for every vertex, its neighbors later in the order form a clique.
bool is_perfect_elimination(const Graph& g, const EliminationOrder& order);

struct ChordalityResult {
  bool chordal = false;
  EliminationOrder order;            // MCS order (a PEO when chordal)
  std::vector<int> chordless_cycle;  // length >= 4, cyclic, when not chordal
};

ChordalityResult check_chordal(const Graph& g);
bool is_chordal(const Graph& g);

/// The inclusion-maximal cliques of a chordal graph (at most n of them),
/// read off the MCS order, sorted lexicographically.
/// Throws NotChordalError with a chordless-cycle certificate otherwise.
std::vector<Face> maximal_cliques_chordal(const Graph& g);

/// A fat-forest decomposition: facets F_1..F_k in an order where each
/// F_j meets the union of its predecessors in a single simplex (a face of
/// some earlier facet). attach_dims[j-1] = dim of that simplex for facet j
/// (j >= 2, -1 starts a new component); parents[j-1] = index of the earliest
/// earlier facet containing it (-1 for a new component).
struct FatForestDecomposition {
  int n = 0;
  std::vector<Face> facets;
  std::vector<int> dims;         // dims[i] = |F_i| - 1
  std::vector<int> attach_dims;  // size k - 1, entry j-1 is r_j
  std::vector<int> parents;      // size k - 1

  std::size_t facet_count() const { return facets.size(); }
  int max_dim() const;
  /// min over attach_dims; for a single facet there is no attachment and the
  /// ring is a polynomial ring (callers special-case k = 1).
  int min_attach_dim() const;

  SimplicialComplex complex() const;
};

/// Orders the facets of c as a fat forest (clique-tree discovery order of the
/// chordal 1-skeleton; the running intersection property makes every
/// attachment a single simplex). Throws NotFatForestError when the
/// 1-skeleton is not chordal (chordless-cycle certificate) or c is not the
/// clique complex of its 1-skeleton (missing-clique-face certificate).
FatForestDecomposition fat_forest_decomposition(const SimplicialComplex& c);

/// True iff fat_forest_decomposition succeeds. Equivalently, the
/// Stanley-Reisner ring of c has a 2-linear resolution.
bool is_fat_forest(const SimplicialComplex& c);

/// Facet-list form of any complex; flag views are materialized through the
/// chordal maximal-clique enumeration (throws NotChordalError on non-chordal
/// flag views).
SimplicialComplex facetize(const SimplicialComplex& c);

/// Test helper contract: true iff cycle is a chordless cycle of g with
/// length >= 4 (consecutive vertices adjacent, the rest non-adjacent).
bool is_chordless_cycle(const Graph& g, const std::vector<int>& cycle);

}  // namespace fatforest
