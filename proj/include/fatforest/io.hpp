#pragma once

#include <iosfwd>
#include <string>

#include "fatforest/complex.hpp"
#include "fatforest/graph.hpp"

namespace fatforest {

// Edge-list format: one "u v" pair per line, 1-indexed; '#' starts a comment;
// an optional first line "n=<int>" fixes the vertex count (default: the
// largest label seen).
Graph parse_edge_stream(std::istream& in, const std::string& source = "<edges>");
Graph parse_edge_file(const std::string& path);

// Facet-list format: optional first line "n=<int>"; each non-comment line is
// one facet as space-separated labels; a line holding only "-" is the empty
// face (the empty complex is "n=<int>" plus that line); no facet lines at all
// is the void complex.
SimplicialComplex parse_facet_stream(std::istream& in,
                                     const std::string& source = "<facets>");
SimplicialComplex parse_facet_file(const std::string& path);

std::string facet_file_text(const SimplicialComplex& c);
std::string edge_file_text(const Graph& g);

}  // namespace fatforest
