#pragma once

#include <vector>

#include "fatforest/betti_table.hpp"
#include "fatforest/chordal.hpp"
#include "fatforest/ints.hpp"

namespace fatforest {

struct SeriesTerm {
  Int coeff;
  int expo = 0;  // the term is coeff / (1-t)^expo
  bool operator==(const SeriesTerm&) const = default;
};

/// A signed sum of terms c/(1-t)^e. Normalized: equal exponents combined,
/// zero coefficients dropped, exponents strictly decreasing.
class SeriesTermSum {
 public:
  SeriesTermSum() = default;
  static SeriesTermSum from_terms(std::vector<SeriesTerm> terms);

  const std::vector<SeriesTerm>& terms() const { return terms_; }
  bool operator==(const SeriesTermSum&) const = default;

 private:
  std::vector<SeriesTerm> terms_;
};

/// Hilbert series of the Stanley-Reisner ring of a fat forest:
/// +1/(1-t)^(d_i+1) per facet, -1/(1-t)^(r_j+1) per attachment.
SeriesTermSum hilbert_series(const FatForestDecomposition& d);

/// Numerator p(t) of the series written over (1-t)^denom_exponent, dense
/// exact integer coefficients (trailing zeros trimmed).
class NumeratorPoly {
 public:
  NumeratorPoly() = default;
  NumeratorPoly(std::vector<Int> coeffs, int denom_exponent);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Int& coeff(int power) const;  // 0 outside the stored range
  const std::vector<Int>& coeffs() const { return coeffs_; }
  int denom_exponent() const { return denom_exponent_; }

  Int eval(const Int& t) const;

  bool operator==(const NumeratorPoly&) const = default;

 private:
  std::vector<Int> coeffs_;
  int denom_exponent_ = 0;
};

/// Rewrites a term sum over the common denominator (1-t)^n:
/// p(t) = sum c * (1-t)^(n-e). Throws ExponentOverflowError if some e > n.
NumeratorPoly numerator(const SeriesTermSum& s, int n);

/// Extracts the linear Betti numbers from a numerator of the shape
/// 1 - b_{1,2} t^2 + b_{2,3} t^3 - ...: beta_{i,i+1} = (-1)^i [t^(i+1)] p.
/// The result includes beta_{0,0} = 1. Throws NotTwoLinearShapeError when
/// p(0) != 1, the t^1 coefficient is nonzero, or any extracted value is
/// negative.
BettiTable betti_from_numerator(const NumeratorPoly& p);

/// beta_{i,i+1} for i = 1..projdim as a dense vector (empty for the
/// polynomial ring).
std::vector<Int> linear_betti_vector(const BettiTable& t);

struct RingProfile {
  int depth = 0;
  int projdim = 0;
  int krull_dim = 0;
  bool cohen_macaulay = false;
  bool operator==(const RingProfile&) const = default;
};

/// depth = min r_i + 2, projdim = n - depth, dim = max d_i + 1,
/// CM iff all d_i equal some d and all r_i = d - 1. A single facet is a
/// polynomial ring: depth = dim = n, projdim = 0, CM.
RingProfile ring_profile(const FatForestDecomposition& d);

/// Convenience: betti_from_numerator(numerator(hilbert_series(d), d.n)).
BettiTable pipeline_betti(const FatForestDecomposition& d);

}  // namespace fatforest
