#include "fatforest/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "fatforest/errors.hpp"

namespace fatforest {

namespace {

constexpr int kMaskWidth = 31;

int bit_index(std::uint32_t single_bit_mask) {
  return std::countr_zero(single_bit_mask);
}

// Bitmask view of a complex, 0-based bit v-1 <-> vertex v. n <= 31.
struct MaskComplex {
  int n = 0;
  bool flag = false;
  std::vector<std::uint32_t> facets;  // facet rep: maximal faces
  std::vector<std::uint32_t> adj;     // flag rep: adj[v] neighbor bits
};

MaskComplex to_masks(const SimplicialComplex& c) {
  if (c.n() > kMaskWidth) {
    throw TooLargeError("oracle supports at most " +
                        std::to_string(kMaskWidth) + " vertices, got " +
                        std::to_string(c.n()));
  }
  MaskComplex mc;
  mc.n = c.n();
  if (c.rep() == SimplicialComplex::Rep::kFlagView) {
    mc.flag = true;
    mc.adj.assign(static_cast<std::size_t>(mc.n), 0);
    for (int v = 1; v <= mc.n; ++v) {
      std::uint32_t row = 0;
      for (int u : c.graph().neighbors(v)) {
        row |= std::uint32_t(1) << (u - 1);
      }
      mc.adj[static_cast<std::size_t>(v - 1)] = row;
    }
  } else {
    for (const Face& f : c.facet_list()) {
      std::uint32_t m = 0;
      for (int v : f.verts()) m |= std::uint32_t(1) << (v - 1);
      mc.facets.push_back(m);
    }
  }
  return mc;
}

// Maximal faces of the restriction to W (facet rep only).
std::vector<std::uint32_t> restricted_facets(const MaskComplex& mc,
                                             std::uint32_t W) {
  std::vector<std::uint32_t> cut;
  cut.reserve(mc.facets.size());
  for (std::uint32_t f : mc.facets) cut.push_back(f & W);
  std::sort(cut.begin(), cut.end());
  cut.erase(std::unique(cut.begin(), cut.end()), cut.end());
  std::vector<std::uint32_t> out;
  for (std::uint32_t a : cut) {
    bool dominated = false;
    for (std::uint32_t b : cut) {
      if (a != b && (a & ~b) == 0) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(a);
  }
  return out;
}

// Faces of the restriction to W, grouped by dimension: levels[q + 1] holds
// the q-faces. Extension over the facet list runs on 64-bit cover masks
// (which facets contain the face) so each step is O(1) when there are at
// most 64 facets.
struct FaceLevels {
  std::vector<std::vector<std::uint32_t>> levels;
};

FaceLevels enumerate_levels(const MaskComplex& mc,
                            const std::vector<std::uint32_t>& rfacets,
                            std::uint32_t W, std::size_t max_faces) {
  FaceLevels out;
  if (!mc.flag && rfacets.empty()) return out;  // void restriction
  std::size_t total = 1;
  out.levels.push_back({0});  // the empty face

  const bool covers = !mc.flag && rfacets.size() <= 64;
  std::vector<std::uint64_t> vertex_cover;  // facets containing each vertex
  if (covers) {
    vertex_cover.assign(static_cast<std::size_t>(mc.n), 0);
    for (std::size_t fi = 0; fi < rfacets.size(); ++fi) {
      std::uint32_t f = rfacets[fi];
      while (f) {
        int v = bit_index(f & (~f + 1));
        f &= f - 1;
        vertex_cover[static_cast<std::size_t>(v)] |= std::uint64_t(1) << fi;
      }
    }
  }

  std::vector<std::uint32_t> frontier{0};
  std::vector<std::uint64_t> frontier_cover;
  if (covers) frontier_cover.assign(1, ~std::uint64_t(0));

  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    std::vector<std::uint64_t> next_cover;
    for (std::size_t idx = 0; idx < frontier.size(); ++idx) {
      const std::uint32_t m = frontier[idx];
      const int lowest =
          m == 0 ? 0 : bit_index(std::uint32_t(std::bit_floor(m))) + 1;
      for (int v = lowest; v < mc.n; ++v) {
        const std::uint32_t bit = std::uint32_t(1) << v;
        if (!(W & bit)) continue;
        bool ok;
        std::uint64_t cover = 0;
        if (mc.flag) {
          ok = (m & ~mc.adj[static_cast<std::size_t>(v)]) == 0;
        } else if (covers) {
          cover = frontier_cover[idx] & vertex_cover[static_cast<std::size_t>(v)];
          ok = cover != 0;
        } else {
          const std::uint32_t g = m | bit;
          ok = false;
          for (std::uint32_t f : rfacets) {
            if ((g & ~f) == 0) {
              ok = true;
              break;
            }
          }
        }
        if (!ok) continue;
        if (++total > max_faces) {
          throw TooLargeError("face enumeration exceeds budget of " +
                              std::to_string(max_faces) + " faces");
        }
        next.push_back(m | bit);
        if (covers) next_cover.push_back(cover);
      }
    }
    if (next.empty()) break;
    out.levels.push_back(next);
    frontier = std::move(next);
    frontier_cover = std::move(next_cover);
  }
  for (auto& level : out.levels) std::sort(level.begin(), level.end());
  return out;
}

// --- exact rank engines ------------------------------------------------------

using SparseCols = std::vector<std::vector<std::pair<int, int>>>;

// Boundary columns of level q faces against sorted level q-1 faces.
SparseCols boundary_cols(const std::vector<std::uint32_t>& rows,
                         const std::vector<std::uint32_t>& cols) {
  SparseCols out(cols.size());
  for (std::size_t ci = 0; ci < cols.size(); ++ci) {
    std::uint32_t m = cols[ci];
    int position = 0;
    std::uint32_t rem = m;
    while (rem) {
      const std::uint32_t bit = rem & (~rem + 1);
      rem &= rem - 1;
      const std::uint32_t sub = m ^ bit;
      const auto it = std::lower_bound(rows.begin(), rows.end(), sub);
      const int row = static_cast<int>(it - rows.begin());
      out[ci].push_back({row, position % 2 == 0 ? 1 : -1});
      ++position;
    }
  }
  return out;
}

long long rank_gf2(std::size_t n_rows, const SparseCols& cols) {
  const std::size_t words = (n_rows + 63) / 64;
  std::vector<std::vector<std::uint64_t>> pivot_vecs;
  std::vector<std::size_t> pivot_rows;
  std::vector<std::uint64_t> v;
  for (const auto& col : cols) {
    v.assign(words, 0);
    for (const auto& [row, sign] : col) {
      (void)sign;
      v[static_cast<std::size_t>(row) / 64] ^=
          std::uint64_t(1) << (static_cast<std::size_t>(row) % 64);
    }
    for (std::size_t p = 0; p < pivot_vecs.size(); ++p) {
      const std::size_t r = pivot_rows[p];
      if (v[r / 64] >> (r % 64) & 1) {
        const auto& pv = pivot_vecs[p];
        for (std::size_t w = 0; w < words; ++w) v[w] ^= pv[w];
      }
    }
    std::size_t lead = n_rows;
    for (std::size_t w = 0; w < words; ++w) {
      if (v[w]) {
        lead = w * 64 + static_cast<std::size_t>(std::countr_zero(v[w]));
        break;
      }
    }
    if (lead < n_rows) {
      pivot_rows.push_back(lead);
      pivot_vecs.push_back(v);
    }
  }
  return static_cast<long long>(pivot_vecs.size());
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  std::int64_t acc = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) acc = acc * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return acc;
}

long long rank_gfp(std::size_t n_rows, const SparseCols& cols,
                   std::int64_t p) {
  std::vector<std::vector<std::int64_t>> pivot_vecs;  // normalized to 1 at pivot
  std::vector<std::size_t> pivot_rows;
  std::vector<std::int64_t> v;
  for (const auto& col : cols) {
    v.assign(n_rows, 0);
    for (const auto& [row, sign] : col) {
      v[static_cast<std::size_t>(row)] = sign == 1 ? 1 : p - 1;
    }
    for (std::size_t piv = 0; piv < pivot_vecs.size(); ++piv) {
      const std::size_t r = pivot_rows[piv];
      if (v[r] == 0) continue;
      const std::int64_t факт = v[r];
      const auto& pv = pivot_vecs[piv];
      for (std::size_t i = 0; i < n_rows; ++i) {
        if (pv[i]) v[i] = (v[i] - факт * pv[i]) % p;
      }
    }
    std::size_t lead = n_rows;
    for (std::size_t i = 0; i < n_rows; ++i) {
      if (v[i] % p != 0) {
        lead = i;
        break;
      }
    }
    if (lead < n_rows) {
      std::int64_t inv = pow_mod(((v[lead] % p) + p) % p, p - 2, p);
      for (std::size_t i = 0; i < n_rows; ++i) {
        v[i] = ((v[i] % p) * inv % p + p) % p;
      }
      pivot_rows.push_back(lead);
      pivot_vecs.push_back(v);
    }
  }
  return static_cast<long long>(pivot_vecs.size());
}

// Fraction-free column elimination over the integers (= rank over Q):
// eliminate with v <- v*piv - pv*v[r], then strip the content. Boundary
// matrices are +-1 so nearly every pivot is a unit and entries stay small.
long long rank_rational(std::size_t n_rows, const SparseCols& cols) {
  using boost::multiprecision::gcd;
  std::vector<std::vector<Int>> pivot_vecs;
  std::vector<std::size_t> pivot_rows;
  std::vector<Int> v;
  for (const auto& col : cols) {
    v.assign(n_rows, Int(0));
    for (const auto& [row, sign] : col) {
      v[static_cast<std::size_t>(row)] = sign;
    }
    for (std::size_t piv = 0; piv < pivot_vecs.size(); ++piv) {
      const std::size_t r = pivot_rows[piv];
      if (v[r] == 0) continue;
      const auto& pv = pivot_vecs[piv];
      const Int scale = pv[r];
      const Int hit = v[r];
      for (std::size_t i = 0; i < n_rows; ++i) {
        v[i] = v[i] * scale - pv[i] * hit;
      }
      Int content(0);
      for (const Int& x : v) {
        if (x != 0) content = gcd(content, abs(x));
        if (content == 1) break;
      }
      if (content > 1) {
        for (Int& x : v) x /= content;
      }
    }
    // Prefer a unit pivot so later eliminations stay multiplication-free.
    std::size_t lead = n_rows;
    for (std::size_t i = 0; i < n_rows; ++i) {
      if (v[i] == 0) continue;
      if (lead == n_rows || abs(v[i]) < abs(v[lead])) lead = i;
      if (abs(v[i]) == 1) break;
    }
    if (lead < n_rows) {
      pivot_rows.push_back(lead);
      pivot_vecs.push_back(std::move(v));
    }
  }
  return static_cast<long long>(pivot_vecs.size());
}

long long boundary_rank(const std::vector<std::uint32_t>& rows,
                        const std::vector<std::uint32_t>& cols,
                        const FieldSpec& field) {
  if (rows.empty() || cols.empty()) return 0;
  SparseCols sparse = boundary_cols(rows, cols);
  if (field.kind == FieldSpec::Kind::kRational) {
    return rank_rational(rows.size(), sparse);
  }
  if (field.p == 2) return rank_gf2(rows.size(), sparse);
  return rank_gfp(rows.size(), sparse, static_cast<std::int64_t>(field.p));
}

// dim H~_q for q = -1 .. top; index q + 1.
std::vector<long long> homology_of_levels(const FaceLevels& fl,
                                          const FieldSpec& field) {
  const std::size_t depth = fl.levels.size();
  if (depth == 0) return {0};  // void restriction
  std::vector<long long> ranks(depth + 1, 0);  // ranks[q+1] = rank of d_q
  for (std::size_t q = 1; q < depth; ++q) {
    ranks[q + 1] = boundary_rank(fl.levels[q - 1], fl.levels[q], field);
  }
  std::vector<long long> dims(depth, 0);
  for (std::size_t q = 0; q < depth; ++q) {
    const long long faces = static_cast<long long>(fl.levels[q].size());
    const long long below = ranks[q + 1];
    const long long above = q + 2 <= depth ? ranks[q + 2] : 0;
    dims[q] = faces - below - above;
  }
  return dims;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

bool has_cone_vertex(const MaskComplex& mc,
                     const std::vector<std::uint32_t>& rfacets,
                     std::uint32_t W) {
  if (mc.flag) {
    std::uint32_t rem = W;
    while (rem) {
      const std::uint32_t bit = rem & (~rem + 1);
      rem &= rem - 1;
      const int v = bit_index(bit);
      if ((W & ~bit & ~mc.adj[static_cast<std::size_t>(v)]) == 0 &&
          (W & ~bit) != 0) {
        return true;
      }
    }
    return false;
  }
  std::uint32_t common = ~std::uint32_t(0);
  for (std::uint32_t f : rfacets) common &= f;
  return common != 0;
}

}  // namespace

FieldSpec FieldSpec::gf(std::uint32_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                " is not prime");
  }
  return FieldSpec{Kind::kPrime, p};
}

std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& c,
                                              const OracleBudget& budget) {
  MaskComplex mc = to_masks(c);
  const std::uint32_t full =
      mc.n == 0 ? 0 : (std::uint32_t(1) << mc.n) - 1;
  std::vector<std::uint32_t> rfacets =
      mc.flag ? std::vector<std::uint32_t>{} : mc.facets;
  FaceLevels fl = enumerate_levels(mc, rfacets, full, budget.max_faces);
  std::vector<BoundaryMatrix> out;
  for (std::size_t q = 1; q < fl.levels.size(); ++q) {
    BoundaryMatrix b;
    b.q = static_cast<int>(q) - 1;
    b.rows = fl.levels[q - 1].size();
    b.cols = boundary_cols(fl.levels[q - 1], fl.levels[q]);
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<long long> reduced_homology_dims(const SimplicialComplex& c,
                                             const FieldSpec& field,
                                             const OracleBudget& budget) {
  MaskComplex mc = to_masks(c);
  const std::uint32_t full =
      mc.n == 0 ? 0 : (std::uint32_t(1) << mc.n) - 1;
  std::vector<std::uint32_t> rfacets =
      mc.flag ? std::vector<std::uint32_t>{} : mc.facets;
  FaceLevels fl = enumerate_levels(mc, rfacets, full, budget.max_faces);
  return homology_of_levels(fl, field);
}

BettiTable hochster_betti_table(const SimplicialComplex& c,
                                const FieldSpec& field,
                                const OracleBudget& budget, int threads) {
  if (c.n() > budget.max_n) {
    throw TooLargeError("hochster budget allows n <= " +
                        std::to_string(budget.max_n) + ", got " +
                        std::to_string(c.n()));
  }
  MaskComplex mc = to_masks(c);
  const std::uint32_t subsets =
      mc.n == 0 ? 1 : (std::uint32_t(1) << mc.n);

  auto scan = [&](std::uint32_t begin, std::uint32_t step) {
    BettiTable local;
    for (std::uint32_t W = begin; W < subsets; W += step) {
      std::vector<std::uint32_t> rfacets;
      if (!mc.flag) {
        rfacets = restricted_facets(mc, W);
        if (rfacets.empty()) continue;  // void restriction, no homology
      }
      if (has_cone_vertex(mc, rfacets, W)) continue;  // cones are acyclic
      FaceLevels fl = enumerate_levels(mc, rfacets, W, budget.max_faces);
      std::vector<long long> dims = homology_of_levels(fl, field);
      const int j = std::popcount(W);
      for (std::size_t qi = 0; qi < dims.size(); ++qi) {
        if (dims[qi] == 0) continue;
        const int q = static_cast<int>(qi) - 1;
        const int i = j - q - 1;
        if (i >= 0) local.add(i, j, Int(dims[qi]));
      }
    }
    return local;
  };

  threads = std::max(1, std::min(threads, 64));
  if (threads == 1 || subsets < 1024) return scan(0, 1);

  std::vector<BettiTable> partial(static_cast<std::size_t>(threads));
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_lock;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t]() {
      try {
        partial[static_cast<std::size_t>(t)] =
            scan(static_cast<std::uint32_t>(t),
                 static_cast<std::uint32_t>(threads));
      } catch (...) {
        std::lock_guard<std::mutex> guard(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  BettiTable table;
  for (const BettiTable& part : partial) {
    for (const auto& [key, value] : part.entries()) {
      table.add(key.first, key.second, value);
    }
  }
  return table;
}

}  // namespace fatforest
