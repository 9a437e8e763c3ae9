#include "fatforest/betti_table.hpp"

#include <algorithm>

namespace fatforest {

void BettiTable::add(int i, int j, const Int& value) {
  if (value == 0) return;
  auto key = std::make_pair(i, j);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    entries_.emplace(key, value);
  } else {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  }
}

void BettiTable::set(int i, int j, const Int& value) {
  auto key = std::make_pair(i, j);
  if (value == 0) {
    entries_.erase(key);
  } else {
    entries_[key] = value;
  }
}

Int BettiTable::get(int i, int j) const {
  auto it = entries_.find(std::make_pair(i, j));
  return it == entries_.end() ? Int(0) : it->second;
}

bool is_two_linear(const BettiTable& t) {
  for (const auto& [key, value] : t.entries()) {
    (void)value;
    if (key.first >= 1 && key.second != key.first + 1) return false;
  }
  return true;
}

HomologicalProfile homological_profile(const BettiTable& t) {
  HomologicalProfile p;
  for (const auto& [key, value] : t.entries()) {
    (void)value;
    p.projdim = std::max(p.projdim, key.first);
    p.regularity = std::max(p.regularity, key.second - key.first);
  }
  return p;
}

LinearResolutionVerdict linear_resolution_verdict(const BettiTable& t) {
  int degree = -1;
  for (const auto& [key, value] : t.entries()) {
    (void)value;
    if (key.first == 1) {
      if (degree != -1 && degree != key.second) return {false, 0};
      degree = key.second;
    }
  }
  if (degree == -1) return {true, 0};  // no generators: polynomial ring
  for (const auto& [key, value] : t.entries()) {
    (void)value;
    if (key.first >= 1 && key.second != key.first + degree - 1) {
      return {false, 0};
    }
  }
  return {true, degree};
}

}  // namespace fatforest
