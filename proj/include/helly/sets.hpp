#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace helly {

// Vertices are dense integers 0..n-1. Vertex sets are sorted, duplicate-free
// vectors; all set algebra below assumes that representation.
using VertexSet = std::vector<int>;

inline VertexSet setIntersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline void setIntersectInPlace(VertexSet& a, const VertexSet& b) {
  auto w = a.begin();
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      *w++ = *ia++;
      ++ib;
    }
  }
  a.erase(w, a.end());
}

inline VertexSet setUnion(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

inline VertexSet setDifference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

inline bool isSubset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool setContains(const VertexSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline bool setsDisjoint(const VertexSet& a, const VertexSet& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib)
      ++ia;
    else if (*ib < *ia)
      ++ib;
    else
      return false;
  }
  return true;
}

inline VertexSet sortedUnique(VertexSet v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// C(n,k) with saturation at UINT64_MAX; used for resource-budget predictions.
inline std::uint64_t binomialSat(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    std::uint64_t f = n - k + i;
    if (r > UINT64_MAX / f) return UINT64_MAX;
    r = r * f / i;
  }
  return r;
}

// Visits all k-subsets of {0..n-1} in lexicographic order.
template <typename F>
void forEachSubset(int n, int k, F&& visit) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(static_cast<const std::vector<int>&>(idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace helly
