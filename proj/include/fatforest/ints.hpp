#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fatforest {

/// Exact arbitrary-precision integer used for all polynomial coefficients,
/// Betti numbers and closed-form binomial expressions.
using Int = boost::multiprecision::cpp_int;

/// Binomial coefficient C(n, k), exact. Returns 0 for k < 0, k > n or n < 0;
/// C(n, 0) = 1. Small n go through a cached Pascal triangle, very large n
/// through the exact multiplicative product.
Int binomial(long n, long k);

}  // namespace fatforest
