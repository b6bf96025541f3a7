#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "ddom/graph.hpp"

namespace ddom {

using VertexPair = std::pair<VertexId, VertexId>;

/// Unordered pairs stored as (smaller id, larger id), sorted and unique.
using PairSet = std::vector<VertexPair>;

inline PairSet normalize(PairSet pairs) {
  for (auto& [v, w] : pairs)
    if (w < v) std::swap(v, w);
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

inline bool contains(const PairSet& set, VertexId v, VertexId w) {
  if (w < v) std::swap(v, w);
  return std::binary_search(set.begin(), set.end(), VertexPair{v, w});
}

}  // namespace ddom
