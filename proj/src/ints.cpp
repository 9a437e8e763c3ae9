#include "fatforest/ints.hpp"

#include <vector>

namespace fatforest {

namespace {

// Row cache only up to this n; above it the multiplicative form is cheaper
// than filling a quadratic triangle.
constexpr long kPascalCap = 4096;

const Int& pascal_entry(long n, long k) {
  thread_local std::vector<std::vector<Int>> rows{{Int(1)}};
  while (static_cast<long>(rows.size()) <= n) {
    const auto& prev = rows.back();
    std::vector<Int> row(prev.size() + 1, Int(1));
    for (std::size_t j = 1; j + 1 < row.size(); ++j) {
      row[j] = prev[j - 1] + prev[j];
    }
    rows.push_back(std::move(row));
  }
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace

Int binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return Int(0);
  if (k > n - k) k = n - k;
  if (k == 0) return Int(1);
  if (n <= kPascalCap) return pascal_entry(n, k);
  Int result(1);
  for (long i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;  // exact at every step
  }
  return result;
}

}  // namespace fatforest
