#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ddom/graph.hpp"
#include "ddom/pairs.hpp"

namespace ddom::oracle {

// Reference semantics by plain depth-first search. Meant for graphs of a
// few dozen vertices; nothing here is tuned.

/// True iff some path a -> b avoids every vertex of `excluded`.
bool reaches_excluding(const Graph& g, VertexId a, VertexId b, std::span<const VertexId> excluded);

/// Every vertex of b is in a, or every path from it to `sink` meets a.
bool dominates(const Graph& g, std::span<const VertexId> a, std::span<const VertexId> b, VertexId sink);

/// Strict single-vertex dominators of u with respect to the root, sorted.
std::vector<VertexId> single(const Graph& g, VertexId u);

/// All double-vertex dominators of u with respect to `sink` (the root by default).
PairSet double_vertex(const Graph& g, VertexId u, VertexId sink = kNoVertex);

/// Maximum number (capped at 3) of internally disjoint src -> sink paths, by exhaustive search.
unsigned max_disjoint_paths(const Graph& g, VertexId src, VertexId sink);

/// Seeded layered DAG on n >= 2 vertices named v0..v{n-1}. Vertex 0 is the
/// only fanin-free vertex and vertex n-1 is the root; every vertex lies on a
/// path between them. Each vertex pair in increasing layers is joined with
/// probability edge_density.
Graph random_dag(std::size_t n, double edge_density, std::uint64_t seed);

/// Large sparse layered DAG: a source feeding the first layer, `layers`
/// layers of `width` vertices each sending `fanout` edges into the next two
/// layers, and a root fed by the last layer. Used for scaling runs.
Graph layered_dag(std::size_t layers, std::size_t width, unsigned fanout, std::uint64_t seed);

/// AIG-shaped circuit: `inputs` primary inputs, then `layers` layers of
/// `width` two-input gates drawing fanins from the two preceding layers.
/// Gates of the last layer and gates left without fanout are outputs, all
/// feeding a virtual root.
Graph random_circuit(std::size_t inputs, std::size_t layers, std::size_t width, std::uint64_t seed);

}  // namespace ddom::oracle
