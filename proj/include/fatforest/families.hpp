#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fatforest/chordal.hpp"
#include "fatforest/complex.hpp"
#include "fatforest/ints.hpp"

namespace fatforest {

/// A weakly decreasing tableau lambda_1 >= ... >= lambda_m >= 1 indexing a
/// bipartite (Ferrers) edge ideal.
class Tableau {
 public:
  explicit Tableau(std::vector<int> rows);  // throws InvalidTableauError

  int row_count() const { return static_cast<int>(rows_.size()); }
  int width() const { return rows_.front(); }  // lambda_1
  const std::vector<int>& rows() const { return rows_; }

  /// Run-length form mu_1^{l_1}, ..., mu_k^{l_k} with mu strictly decreasing.
  std::vector<std::pair<int, int>> runs() const;

  static Tableau rectangle(int width, int row_count);  // width^row_count
  static Tableau staircase(int n);                     // (n, n-1, ..., 1)
  static Tableau hook(int n, int m);                   // (n, 1^{m-1})

  std::string str() const;

  bool operator==(const Tableau&) const = default;

 private:
  std::vector<int> rows_;
};

// --- complete multipartite graphs -----------------------------------------

/// Disjoint union of full simplices of sizes parts[0..s-1] on sum(parts)
/// consecutive labels: the complex of the edge ring of K_{n_1,...,n_s}.
SimplicialComplex multipartite_complex(const std::vector<int>& parts);

/// beta_{i,i+1} of the edge ring of K_{n_1,...,n_s}:
/// (s-1) C(N,i+1) - sum_j C(N-n_j, i+1), N = sum of parts.
Int betti_multipartite(const std::vector<int>& parts, int i);

/// Same number as the nested binomial sum
/// sum_{l=2..s} (l-1) sum_{j_1<...<j_l} sum_{a_1+...+a_l=i+1, a>=1}
///   C(n_{j_1},a_1)...C(n_{j_l},a_l).
Int jacques_multipartite(const std::vector<int>& parts, int i);

// --- squarefree lexicographic segments ------------------------------------

/// Complex of L(a,b) (all squarefree quadrics >= x_a x_b) on ground set b:
/// facets {1},...,{a},{a+1..b}.
SimplicialComplex lexsegment_complex(int a, int b);

/// a C(b,i+1) - a C(b-1,i+1) - C(a,i+1).
Int betti_lex(int a, int b, int i);

/// Generator-indexed form: sum_{k=0}^{a-1} (k+1) C(k,i-1)
/// + a sum_{k=a}^{b-2} C(k,i-1). Matches betti_lex for a < b; the split
/// overcounts at a = b (its first sum reaches a column past the ground set).
Int lex_rhs_sum(int a, int b, int i);

/// Complex of the final segment F(a,b) (quadrics <= x_a x_b) on ground set n:
/// facets {1..a-1, i} for b <= i <= n and {1..a, j} for a+1 <= j <= b-1
/// (plus the maximal face {1..a} in the degenerate case b = a+1).
SimplicialComplex final_segment_complex(int a, int b, int n);

// --- Ferrers ideals --------------------------------------------------------

/// Independence complex of the Ferrers bipartite graph of t: the x-block is
/// labels 1..m, the y-block m+1..m+lambda_1; one facet per distinct row
/// value plus the all-y facet. Always a fat forest.
SimplicialComplex ferrers_complex(const Tableau& t);

/// Human-readable names for ferrers_complex labels: "x1".."xm","y1"..
std::vector<std::string> ferrers_labels(const Tableau& t);

/// Closed-form beta_i of the Ferrers edge ring:
/// sum_{j=1}^m C(lambda_j + j - 1, i) - C(m, i+1).
Int corso_nagel_betti(const Tableau& t, int i);

// --- three blocks -----------------------------------------------------------

/// Facets [x_2..x_m, y_2..y_n, z_2..z_o], [x_1..x_m], [y_1..y_n], [z_1..z_o]
/// on m+n+o vertices; requires m, n, o >= 2.
SimplicialComplex three_block_complex(int m, int n, int o);

/// C(m+n+1,i+1)+C(m+o+1,i+1)+C(n+o+1,i+1)
/// -C(m+n,i+1)-C(m+o,i+1)-C(n+o,i+1)-C(3,i+1)
/// (the series expansion forces the minus sign on C(n+o,i+1)).
Int betti_three_block(int m, int n, int o, int i);

/// Closed form for the hook tableau (n, 1^{m-1}):
/// C(n+1,i+1)+C(m+1,i+1)-C(n,i+1)-C(m,i+1)-C(2,i+1).
Int betti_hook(int m, int n, int i);

// --- uniform forests --------------------------------------------------------

/// A (d, r)-forest: k facets of dimension d, every attachment of dimension r.
struct UniformForestSpec {
  int d = 0;
  int r = -1;
  int k = 1;
  /// Vertex count k(d-r) + r + 1.
  int n() const { return k * (d - r) + r + 1; }
};

/// Canonical labeling: F_1 = {1..d+1}; each later facet reuses {1..r+1} and
/// adds d-r fresh labels. Throws InvalidSpecError unless d >= 0,
/// -1 <= r < d, k >= 1.
FatForestDecomposition uniform_forest(const UniformForestSpec& spec);

/// (k-1) C(k(d-r), i+1) - k C((k-1)(d-r), i+1).
Int betti_uniform(const UniformForestSpec& spec, int i);

// --- deterministic generators ----------------------------------------------

/// Random fat forest built by the recursive definition: each facet glues to a
/// proper sub-simplex of an earlier facet (or starts a new component) and
/// adds fresh vertices. Deterministic per seed.
FatForestDecomposition random_fat_forest(int max_k, int max_d,
                                         std::uint64_t seed);

/// Erdos-Renyi style G(n, edge_prob), deterministic per seed.
Graph random_graph(int n, double edge_prob, std::uint64_t seed);

// --- identity verification ---------------------------------------------------

struct IdentityMismatch {
  std::string family;
  std::string params;
  int i = 0;
  Int lhs;
  Int rhs;
  std::string lhs_name;
  std::string rhs_name;
};

struct IdentityReport {
  std::string family;
  long long cases_checked = 0;
  std::vector<IdentityMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Integer bounds for verify_identity, keyed by parameter name; every family
/// has defaults matching its documented range.
struct ParamRanges {
  std::map<std::string, int> bounds;
  int get(const std::string& key, int fallback) const;
};

/// Known families: bipartite-jacques, multipartite-jacques,
/// bipartite-corso-nagel, lexsegment, ferrers-vs-pipeline, staircase,
/// n-one-block, three-block, uniform, negative-control (a deliberately false
/// identity used as a self-test fixture).
std::vector<std::string> identity_families();

/// Evaluates both sides of the family's identity exactly over the whole
/// parameter range and reports every mismatch (sorted by parameters).
/// Throws UnknownFamilyError for unknown names.
IdentityReport verify_identity(const std::string& family,
                               const ParamRanges& ranges = {});

}  // namespace fatforest
