#pragma once

#include <cstddef>
#include <vector>

#include "fatforest/face.hpp"
#include "fatforest/graph.hpp"

namespace fatforest {

/// Default cap on explicit face enumeration (overridable per call; the CLI
/// maps FATFOREST_BUDGET_FACES onto it).
inline constexpr std::size_t kDefaultFaceBudget = std::size_t{1} << 20;

/// An abstract simplicial complex on the ground set {1..n}, held either as an
/// explicit facet list or as the flag (clique) complex of a graph.
///
/// The ground-set size n is always explicit and never inferred from the
/// facets, so vertices not covered by any face survive round-trips (their
/// variables are the degree-one generators of the Stanley-Reisner ideal).
///
/// Two degenerate values are distinct: the void complex (no faces at all,
/// empty facet list) and the empty complex { {} } (facet list containing only
/// the empty face). Reduced homology tells them apart and Alexander duality
/// swaps the full simplex with the void complex.
class SimplicialComplex {
 public:
  enum class Rep { kFacetList, kFlagView };

  /// Builds a facet-list complex. Non-maximal input faces are dropped, the
  /// rest sorted lexicographically. Throws std::invalid_argument on labels
  /// outside 1..n.
  static SimplicialComplex from_facets(int n, std::vector<Face> facets);
  static SimplicialComplex void_complex(int n);
  static SimplicialComplex empty_complex(int n);
  static SimplicialComplex full_simplex(int n);
  /// Flag view: faces are exactly the cliques of g (including the empty
  /// clique and all singletons). Membership queries never enumerate facets.
  static SimplicialComplex flag_view(Graph g);

  Rep rep() const { return rep_; }
  int n() const { return n_; }

  bool is_void() const;
  bool is_empty_complex() const;

  bool is_face(const Face& f) const;

  /// Facet list; only valid for Rep::kFacetList (use chordal facetize() to
  /// materialize a flag view). Throws std::logic_error otherwise.
  const std::vector<Face>& facet_list() const;
  bool has_facet_list() const { return rep_ == Rep::kFacetList; }

  /// Underlying graph of a flag view. Throws std::logic_error otherwise.
  const Graph& graph() const;

  /// Max face dimension; facet-list representation only.
  int dim() const;

  bool operator==(const SimplicialComplex& other) const;

 private:
  SimplicialComplex() = default;

  Rep rep_ = Rep::kFacetList;
  int n_ = 0;
  std::vector<Face> facets_;  // kFacetList
  Graph graph_;               // kFlagView
};

/// 1-skeleton: edges are the 2-element faces.
Graph one_skeleton(const SimplicialComplex& c);

/// Clique complex of g (flag view).
SimplicialComplex flag_complex(const Graph& g);

/// Faces contained in w, relabeled 1..|w| by the order-preserving map.
SimplicialComplex induced_subcomplex(const SimplicialComplex& c,
                                     const std::vector<int>& w);

/// All faces (the empty face included for nonvoid complexes), sorted by
/// (dimension, lex). Throws TooLargeError past max_faces.
std::vector<Face> enumerate_faces(const SimplicialComplex& c,
                                  std::size_t max_faces = kDefaultFaceBudget);

/// Inclusion-minimal non-faces, sorted lexicographically. Uncovered vertices
/// appear as singletons; the void complex yields { {} }. These index the
/// minimal generators of the Stanley-Reisner ideal.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& c,
                                   std::size_t max_faces = kDefaultFaceBudget);

/// Alexander dual: facets are the complements of the minimal non-faces;
/// satisfies F in dual <=> complement(F) not a face of c.
SimplicialComplex alexander_dual(const SimplicialComplex& c,
                                 std::size_t max_faces = kDefaultFaceBudget);

}  // namespace fatforest
