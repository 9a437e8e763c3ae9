#include "fatforest/series.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "fatforest/errors.hpp"

namespace fatforest {

SeriesTermSum SeriesTermSum::from_terms(std::vector<SeriesTerm> terms) {
  std::map<int, Int> by_expo;
  for (const SeriesTerm& t : terms) {
    if (t.expo < 0) throw std::invalid_argument("series exponent must be >= 0");
    by_expo[t.expo] += t.coeff;
  }
  SeriesTermSum out;
  for (auto it = by_expo.rbegin(); it != by_expo.rend(); ++it) {
    if (it->second != 0) out.terms_.push_back({it->second, it->first});
  }
  return out;
}

SeriesTermSum hilbert_series(const FatForestDecomposition& d) {
  std::vector<SeriesTerm> terms;
  for (int di : d.dims) terms.push_back({Int(1), di + 1});
  for (int rj : d.attach_dims) terms.push_back({Int(-1), rj + 1});
  return SeriesTermSum::from_terms(std::move(terms));
}

NumeratorPoly::NumeratorPoly(std::vector<Int> coeffs, int denom_exponent)
    : coeffs_(std::move(coeffs)), denom_exponent_(denom_exponent) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& NumeratorPoly::coeff(int power) const {
  static const Int zero(0);
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[static_cast<std::size_t>(power)];
}

Int NumeratorPoly::eval(const Int& t) const {
  Int acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

NumeratorPoly numerator(const SeriesTermSum& s, int n) {
  std::vector<Int> coeffs(static_cast<std::size_t>(n) + 1, Int(0));
  for (const SeriesTerm& term : s.terms()) {
    if (term.expo > n) {
      throw ExponentOverflowError(
          "term 1/(1-t)^" + std::to_string(term.expo) +
          " does not fit over (1-t)^" + std::to_string(n));
    }
    const int e = n - term.expo;  // contributes coeff * (1-t)^e
    for (int j = 0; j <= e; ++j) {
      Int c = term.coeff * binomial(e, j);
      if (j % 2 != 0) c = -c;
      coeffs[static_cast<std::size_t>(j)] += c;
    }
  }
  return NumeratorPoly(std::move(coeffs), n);
}

BettiTable betti_from_numerator(const NumeratorPoly& p) {
  if (p.coeff(0) != 1) {
    throw NotTwoLinearShapeError("numerator constant term is not 1");
  }
  if (p.coeff(1) != 0) {
    throw NotTwoLinearShapeError("numerator has a nonzero t^1 coefficient");
  }
  BettiTable table;
  table.set(0, 0, Int(1));
  for (int i = 1; i + 1 <= p.degree(); ++i) {
    Int value = p.coeff(i + 1);
    if (i % 2 != 0) value = -value;
    if (value < 0) {
      throw NotTwoLinearShapeError("negative extracted value at i = " +
                                   std::to_string(i));
    }
    table.set(i, i + 1, value);
  }
  return table;
}

std::vector<Int> linear_betti_vector(const BettiTable& t) {
  int projdim = 0;
  for (const auto& [key, value] : t.entries()) {
    (void)value;
    projdim = std::max(projdim, key.first);
  }
  std::vector<Int> out;
  for (int i = 1; i <= projdim; ++i) out.push_back(t.get(i, i + 1));
  return out;
}

RingProfile ring_profile(const FatForestDecomposition& d) {
  RingProfile p;
  p.krull_dim = d.max_dim() + 1;
  if (d.facet_count() == 1) {
    // Polynomial ring: no attachments, depth equals the dimension.
    p.depth = d.n;
    p.projdim = 0;
    p.cohen_macaulay = true;
    return p;
  }
  const int min_r = d.min_attach_dim();
  p.depth = min_r + 2;
  p.projdim = d.n - p.depth;
  const int dmax = d.max_dim();
  p.cohen_macaulay = true;
  for (int di : d.dims) {
    if (di != dmax) p.cohen_macaulay = false;
  }
  for (int rj : d.attach_dims) {
    if (rj != dmax - 1) p.cohen_macaulay = false;
  }
  return p;
}

BettiTable pipeline_betti(const FatForestDecomposition& d) {
  return betti_from_numerator(numerator(hilbert_series(d), d.n));
}

}  // namespace fatforest
