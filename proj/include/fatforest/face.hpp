#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fatforest {

/// A face: a sorted set of 1-based vertex labels. The empty face has
/// dimension -1.
class Face {
 public:
  Face() = default;

  explicit Face(std::vector<int> verts) : verts_(std::move(verts)) {
    std::sort(verts_.begin(), verts_.end());
    verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
    if (!verts_.empty() && verts_.front() < 1) {
      throw std::invalid_argument("face vertices must be >= 1");
    }
  }

  Face(std::initializer_list<int> verts) : Face(std::vector<int>(verts)) {}

  static Face empty() { return Face{}; }

  const std::vector<int>& verts() const { return verts_; }
  std::size_t size() const { return verts_.size(); }
  int dim() const { return static_cast<int>(verts_.size()) - 1; }
  bool is_empty() const { return verts_.empty(); }
  int max_vertex() const { return verts_.empty() ? 0 : verts_.back(); }

  bool contains(int v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
  }

  bool subset_of(const Face& other) const {
    return std::includes(other.verts_.begin(), other.verts_.end(),
                         verts_.begin(), verts_.end());
  }

  Face with_vertex(int v) const {
    std::vector<int> out = verts_;
    auto it = std::lower_bound(out.begin(), out.end(), v);
    if (it == out.end() || *it != v) out.insert(it, v);
    Face f;
    f.verts_ = std::move(out);
    return f;
  }

  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < verts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(verts_[i]);
    }
    s += "}";
    return s;
  }

  bool operator==(const Face&) const = default;
  auto operator<=>(const Face&) const = default;

 private:
  std::vector<int> verts_;
};

inline Face face_union(const Face& a, const Face& b) {
  std::vector<int> out;
  std::set_union(a.verts().begin(), a.verts().end(), b.verts().begin(),
                 b.verts().end(), std::back_inserter(out));
  return Face(std::move(out));
}

inline Face face_intersection(const Face& a, const Face& b) {
  std::vector<int> out;
  std::set_intersection(a.verts().begin(), a.verts().end(), b.verts().begin(),
                        b.verts().end(), std::back_inserter(out));
  return Face(std::move(out));
}

/// Complement of a face inside the ground set {1..n}.
inline Face face_complement(const Face& a, int n) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n) - a.size());
  for (int v = 1; v <= n; ++v) {
    if (!a.contains(v)) out.push_back(v);
  }
  return Face(std::move(out));
}

}  // namespace fatforest
