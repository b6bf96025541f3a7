#pragma once

#include <span>
#include <vector>

#include "ddom/graph.hpp"

namespace ddom {

/// Up to three internally vertex-disjoint paths between two vertices.
///
/// Unit vertex capacities are modelled by splitting every vertex into an
/// in-half and an out-half joined by a capacity-1 arc. Augmenting paths are
/// searched depth-first in the residual graph, so a later path may reroute
/// flow committed by an earlier one. Scratch state is reset through a list
/// of touched vertices, which keeps repeated calls on small regions of a
/// large graph proportional to the region size.
class DisjointPathFinder {
 public:
  explicit DisjointPathFinder(const Graph& g);

  /// `live` restricts the search to vertices flagged non-zero; pass an empty
  /// span to allow every vertex. Every returned path runs src -> sink.
  std::vector<Path> find(VertexId src, VertexId sink, unsigned k, std::span<const std::uint8_t> live = {});

 private:
  bool augment(VertexId src, VertexId sink, std::span<const std::uint8_t> live);
  void touch(VertexId v);
  void reset_visits();
  void reset_all();

  const Graph* g_;
  std::vector<std::uint8_t> edge_flow_;
  std::vector<std::uint8_t> through_;   // in-half -> out-half arc saturated
  std::vector<std::uint8_t> visited_;   // bit 0: in-half, bit 1: out-half
  std::vector<std::uint8_t> touched_flag_;
  std::vector<VertexId> touched_;
  std::vector<std::uint32_t> flow_edges_;
};

/// Returns min(k, maximum) disjoint paths; k must be in [1, 3].
/// Throws std::invalid_argument when src == sink, when k is out of range,
/// or when src does not reach sink.
std::vector<Path> find_disjoint_paths(const Graph& g, VertexId src, VertexId sink, unsigned k);

}  // namespace ddom
