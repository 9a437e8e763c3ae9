#pragma once

#include <map>
#include <utility>

#include "fatforest/ints.hpp"

namespace fatforest {

/// Graded Betti numbers of S/I: (homological degree i, internal degree j) ->
/// dim Tor_{i,j}. Zero entries are never stored, so tables compare as maps.
/// Convention: the nonzero ring contributes beta_{0,0} = 1.
class BettiTable {
 public:
  void add(int i, int j, const Int& value);
  void set(int i, int j, const Int& value);
  Int get(int i, int j) const;

  const std::map<std::pair<int, int>, Int>& entries() const {
    return entries_;
  }
  bool empty() const { return entries_.empty(); }

  bool operator==(const BettiTable&) const = default;

 private:
  std::map<std::pair<int, int>, Int> entries_;
};

/// True iff beta_{i,j} = 0 whenever i >= 1 and j != i + 1.
bool is_two_linear(const BettiTable& t);

struct HomologicalProfile {
  int projdim = -1;     // max i with a nonzero entry (-1 for the zero table)
  int regularity = -1;  // max j - i over nonzero entries
};

HomologicalProfile homological_profile(const BettiTable& t);

struct LinearResolutionVerdict {
  bool linear = false;
  int degree = 0;  // common generator degree t when linear
};

/// Linear resolution test for S/I tables: all generators in one degree t and
/// every beta_{i,j} (i >= 1) concentrated at j = i + t - 1. The polynomial
/// ring (no i >= 1 entries) counts as linear with degree 0.
LinearResolutionVerdict linear_resolution_verdict(const BettiTable& t);

}  // namespace fatforest
