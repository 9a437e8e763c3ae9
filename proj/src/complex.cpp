#include "fatforest/complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "fatforest/errors.hpp"

namespace fatforest {

namespace {

// Keeps only inclusion-maximal faces, sorted lexicographically.
std::vector<Face> maximalize(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Face> out;
  for (const Face& f : faces) {
    bool dominated = false;
    for (const Face& g : faces) {
      if (f.size() < g.size() && f.subset_of(g)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(f);
  }
  return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int n,
                                                 std::vector<Face> facets) {
  if (n < 0) throw std::invalid_argument("ground-set size must be >= 0");
  for (const Face& f : facets) {
    if (f.max_vertex() > n) {
      throw std::invalid_argument("facet " + f.str() + " exceeds ground set " +
                                  std::to_string(n));
    }
  }
  SimplicialComplex c;
  c.rep_ = Rep::kFacetList;
  c.n_ = n;
  c.facets_ = maximalize(std::move(facets));
  return c;
}

SimplicialComplex SimplicialComplex::void_complex(int n) {
  return from_facets(n, {});
}

SimplicialComplex SimplicialComplex::empty_complex(int n) {
  return from_facets(n, {Face::empty()});
}

SimplicialComplex SimplicialComplex::full_simplex(int n) {
  std::vector<int> all;
  for (int v = 1; v <= n; ++v) all.push_back(v);
  return from_facets(n, {Face(std::move(all))});
}

SimplicialComplex SimplicialComplex::flag_view(Graph g) {
  SimplicialComplex c;
  c.rep_ = Rep::kFlagView;
  c.n_ = g.n();
  c.graph_ = std::move(g);
  return c;
}

bool SimplicialComplex::is_void() const {
  return rep_ == Rep::kFacetList && facets_.empty();
}

bool SimplicialComplex::is_empty_complex() const {
  return rep_ == Rep::kFacetList && facets_.size() == 1 &&
         facets_.front().is_empty();
}

bool SimplicialComplex::is_face(const Face& f) const {
  if (f.max_vertex() > n_) return false;
  if (rep_ == Rep::kFlagView) return graph_.is_clique(f);
  for (const Face& facet : facets_) {
    if (f.subset_of(facet)) return true;
  }
  return false;
}

const std::vector<Face>& SimplicialComplex::facet_list() const {
  if (rep_ != Rep::kFacetList) {
    throw std::logic_error("facet_list() on a flag view; use facetize()");
  }
  return facets_;
}

const Graph& SimplicialComplex::graph() const {
  if (rep_ != Rep::kFlagView) {
    throw std::logic_error("graph() on a facet-list complex");
  }
  return graph_;
}

int SimplicialComplex::dim() const {
  if (rep_ != Rep::kFacetList) {
    throw std::logic_error("dim() on a flag view; use facetize()");
  }
  int d = -2;  // void
  for (const Face& f : facets_) d = std::max(d, f.dim());
  return d;
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
  if (n_ != other.n_ || rep_ != other.rep_) return false;
  if (rep_ == Rep::kFacetList) return facets_ == other.facets_;
  return graph_ == other.graph_;
}

Graph one_skeleton(const SimplicialComplex& c) {
  if (c.rep() == SimplicialComplex::Rep::kFlagView) return c.graph();
  Graph g(c.n());
  for (const Face& facet : c.facet_list()) {
    const auto& vs = facet.verts();
    for (std::size_t a = 0; a < vs.size(); ++a) {
      for (std::size_t b = a + 1; b < vs.size(); ++b) {
        g.add_edge(vs[a], vs[b]);
      }
    }
  }
  return g;
}

SimplicialComplex flag_complex(const Graph& g) {
  return SimplicialComplex::flag_view(g);
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& c,
                                     const std::vector<int>& w) {
  std::vector<int> keep = w;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (!keep.empty() && (keep.front() < 1 || keep.back() > c.n())) {
    throw std::invalid_argument("vertex set not contained in the ground set");
  }
  const int m = static_cast<int>(keep.size());
  // order-preserving relabeling old -> 1..m
  std::vector<int> new_label(static_cast<std::size_t>(c.n()) + 1, 0);
  for (int i = 0; i < m; ++i) {
    new_label[static_cast<std::size_t>(keep[i])] = i + 1;
  }

  if (c.rep() == SimplicialComplex::Rep::kFlagView) {
    Graph g(m);
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        if (c.graph().has_edge(keep[a], keep[b])) g.add_edge(a + 1, b + 1);
      }
    }
    return SimplicialComplex::flag_view(std::move(g));
  }

  Face w_face(keep);
  std::vector<Face> restricted;
  for (const Face& facet : c.facet_list()) {
    Face cut = face_intersection(facet, w_face);
    std::vector<int> relabeled;
    relabeled.reserve(cut.size());
    for (int v : cut.verts()) {
      relabeled.push_back(new_label[static_cast<std::size_t>(v)]);
    }
    restricted.emplace_back(std::move(relabeled));
  }
  return SimplicialComplex::from_facets(m, std::move(restricted));
}

std::vector<Face> enumerate_faces(const SimplicialComplex& c,
                                  std::size_t max_faces) {
  std::vector<Face> all;
  if (c.is_void()) return all;
  std::vector<Face> level{Face::empty()};
  all.push_back(Face::empty());
  while (!level.empty()) {
    std::vector<Face> next;
    for (const Face& f : level) {
      for (int v = f.max_vertex() + 1; v <= c.n(); ++v) {
        Face g = f.with_vertex(v);
        if (c.is_face(g)) {
          if (all.size() + next.size() >= max_faces) {
            throw TooLargeError("face enumeration exceeds budget of " +
                                std::to_string(max_faces) + " faces");
          }
          next.push_back(std::move(g));
        }
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return all;
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& c,
                                   std::size_t max_faces) {
  if (c.is_void()) return {Face::empty()};

  if (c.rep() == SimplicialComplex::Rep::kFlagView) {
    // Cliques miss nothing below dimension 1, so the minimal non-faces are
    // exactly the non-edges.
    std::vector<Face> out;
    for (int u = 1; u <= c.n(); ++u) {
      for (int v = u + 1; v <= c.n(); ++v) {
        if (!c.graph().has_edge(u, v)) out.push_back(Face{u, v});
      }
    }
    return out;
  }

  std::vector<Face> faces = enumerate_faces(c, max_faces);
  std::set<Face> face_set(faces.begin(), faces.end());
  std::set<Face> found;
  for (const Face& f : faces) {
    for (int v = 1; v <= c.n(); ++v) {
      if (f.contains(v)) continue;
      Face candidate = f.with_vertex(v);
      if (face_set.count(candidate)) continue;
      bool minimal = true;
      for (int u : candidate.verts()) {
        std::vector<int> sub;
        for (int x : candidate.verts()) {
          if (x != u) sub.push_back(x);
        }
        if (!face_set.count(Face(std::move(sub)))) {
          minimal = false;
          break;
        }
      }
      if (minimal) found.insert(std::move(candidate));
    }
  }
  return {found.begin(), found.end()};
}

SimplicialComplex alexander_dual(const SimplicialComplex& c,
                                 std::size_t max_faces) {
  std::vector<Face> dual_facets;
  for (const Face& nf : minimal_nonfaces(c, max_faces)) {
    dual_facets.push_back(face_complement(nf, c.n()));
  }
  return SimplicialComplex::from_facets(c.n(), std::move(dual_facets));
}

}  // namespace fatforest
