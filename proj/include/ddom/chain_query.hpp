#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ddom/dominator_chain.hpp"
#include "ddom/pairs.hpp"

namespace ddom {

struct MatchingVector {
  VertexId owner = kNoVertex;
  std::vector<VertexId> partners;
};

namespace detail {

struct NoTick {
  constexpr void operator()() const noexcept {}
};

/// The whole query: straight-line comparisons, no iteration. `tick` is
/// invoked once per comparison so tests can bound the count.
template <class Tick>
bool accepts(const ChainEntry& v, const ChainEntry& w, Tick&& tick) {
  tick();
  if (v.segment < 0) return false;
  tick();
  if (v.segment != w.segment) return false;
  tick();
  if (v.side == w.side) return false;
  tick();
  if (w.index < v.min) return false;
  tick();
  return w.index <= v.max;
}

}  // namespace detail

/// True iff {v, w} is a double-vertex dominator of the chain's source.
inline bool is_double_dominator(const DominatorChain& c, VertexId v, VertexId w) {
  const ChainEntry* ev = c.entry(v);
  const ChainEntry* ew = c.entry(w);
  if (!ev || !ew) return false;
  return detail::accepts(*ev, *ew, detail::NoTick{});
}

/// Partners of v in chain order; empty for unlisted vertices.
MatchingVector matching_vector(const DominatorChain& c, VertexId v);

/// Every pair once, as (left vertex, right vertex), in chain order.
std::vector<VertexPair> enumerate_all(const DominatorChain& c);

/// enumerate_all, normalized.
PairSet pair_set(const DominatorChain& c);

/// (L[1], R[1]) of the first non-empty segment.
std::optional<VertexPair> immediate_double_dominator(const DominatorChain& c);

struct VertexCluster {
  std::vector<VertexId> left;
  std::vector<VertexId> right;
};

/// Complementary cluster pairs of every segment, in chain order.
std::vector<VertexCluster> clusters(const DominatorChain& c);

class PairSetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Chain over a name table rebuilt from an explicit pair set.
struct PairSetChain {
  std::vector<std::string> names;  // vertex id -> name, sorted
  DominatorChain chain;            // one segment; source and root are kNoVertex
};

/// Assembles a single-segment chain whose enumeration is exactly `pairs`.
/// Each connected component becomes one cluster; components are ordered by
/// their smallest name, and the left side of a component is the side holding
/// that name. Throws PairSetError when no staircase ordering exists.
PairSetChain chain_from_pair_set(const std::vector<std::pair<std::string, std::string>>& pairs);

}  // namespace ddom
