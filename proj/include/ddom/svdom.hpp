#pragma once

#include <optional>
#include <vector>

#include "ddom/graph.hpp"

namespace ddom {

/// Immediate single-vertex dominators with respect to the graph root.
///
/// Dominance runs along paths toward the root, so this is the classical
/// dominator tree of the edge-reversed graph entered at the root. Vertices
/// that cannot reach the root have no parent.
class DominatorTree {
 public:
  DominatorTree() = default;
  DominatorTree(VertexId root, std::vector<VertexId> idom) : root_(root), idom_(std::move(idom)) {}

  VertexId root() const noexcept { return root_; }
  std::size_t size() const noexcept { return idom_.size(); }

  /// Parent in the tree; empty for the root and for vertices not reaching it.
  std::optional<VertexId> idom(VertexId v) const {
    if (v >= idom_.size() || idom_[v] == kNoVertex) return std::nullopt;
    return idom_[v];
  }
  bool reaches_root(VertexId v) const { return v == root_ || (v < idom_.size() && idom_[v] != kNoVertex); }

  /// Walks parent links; true when a dominates b (reflexive).
  bool dominates(VertexId a, VertexId b) const;

 private:
  VertexId root_ = kNoVertex;
  std::vector<VertexId> idom_;
};

/// Semi-NCA over the reversed graph.
DominatorTree compute_dominator_tree(const Graph& g);

/// The parent path (u, idom(u), ..., root). Throws std::invalid_argument when
/// u does not reach the root.
std::vector<VertexId> single_dominator_chain(const DominatorTree& t, VertexId u);

}  // namespace ddom
