#pragma once

#include <cstdint>
#include <vector>

#include "fatforest/betti_table.hpp"
#include "fatforest/complex.hpp"

namespace fatforest {

/// Coefficient field for homology ranks: a prime field GF(p) or the exact
/// rationals. Defaults to GF(2).
struct FieldSpec {
  enum class Kind { kPrime, kRational };
  Kind kind = Kind::kPrime;
  std::uint32_t p = 2;

  static FieldSpec gf(std::uint32_t p);  // throws std::invalid_argument if not prime
  static FieldSpec gf2() { return FieldSpec{}; }
  static FieldSpec rational() { return FieldSpec{Kind::kRational, 0}; }

  bool operator==(const FieldSpec&) const = default;
};

struct OracleBudget {
  int max_n = 16;  // Hochster enumerates 2^n induced subcomplexes
  std::size_t max_faces = kDefaultFaceBudget;
};

/// Sparse boundary matrix of the chain complex: rows indexed by (q-1)-faces,
/// columns by q-faces, entries +-1. cols[c] lists (row, sign).
struct BoundaryMatrix {
  int q = 0;
  std::size_t rows = 0;
  std::vector<std::vector<std::pair<int, int>>> cols;
};

/// Boundary matrices for q = 0..dim(c) over the integers.
std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& c,
                                              const OracleBudget& budget = {});

/// Reduced homology dimensions over the chosen field; index 0 of the result
/// holds dim H~_{-1}, index q + 1 holds dim H~_q. The empty complex { {} }
/// has H~_{-1} = 1; the void complex has zero homology everywhere. Ranks are
/// exact (modular elimination over GF(p), fraction-free over Q).
std::vector<long long> reduced_homology_dims(const SimplicialComplex& c,
                                             const FieldSpec& field = {},
                                             const OracleBudget& budget = {});

/// Full graded Betti table of the Stanley-Reisner ring via Hochster's
/// formula: beta_{i,j} = sum over |W| = j of dim H~_{j-i-1}(c|_W).
/// Brute force over all 2^n induced subcomplexes (TooLargeError past the
/// budget); cone subcomplexes are skipped (acyclic). threads > 1 partitions
/// the subset range; the final table does not depend on the partitioning.
BettiTable hochster_betti_table(const SimplicialComplex& c,
                                const FieldSpec& field = {},
                                const OracleBudget& budget = {},
                                int threads = 1);

}  // namespace fatforest
