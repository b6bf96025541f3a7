#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ddom/dominator_chain.hpp"
#include "ddom/pairs.hpp"
#include "ddom/stats.hpp"

namespace ddom {

/// For every pair of a pair set, the vertices it dominates with respect to
/// a sink (a pair dominates its own members).
struct DominanceTable {
  PairSet pairs;
  std::vector<std::vector<std::uint8_t>> dominated;  // [pair][vertex]

  DominanceTable(const Graph& g, PairSet pairs, VertexId sink);
  /// pairs[a] dominates pairs[b].
  bool dominates(std::size_t a, std::size_t b) const;
  std::size_t index_of(VertexId v, VertexId w) const;  // pairs.size() when absent
};

/// Independent checks of one (graph, source) instance. Each returns a
/// description of the first violation, or nothing.
namespace checks {

using Failure = std::optional<std::string>;

Failure single_chain(const Graph& g, const DominatorChain& c);
Failure pair_set(const Graph& g, const PairSet& computed, const PairSet& expected);
Failure immediate_pair(const Graph& g, const DominatorChain& c, const DominanceTable& t);
/// Staircases, window symmetry, suffix/prefix overlap of matching vectors,
/// cluster partition, and segment locality of the expected pairs.
Failure structure(const Graph& g, const DominatorChain& c, const PairSet& expected);
/// Partial-order laws and the shared-vertex and swap laws on the table.
Failure lemmas(const Graph& g, const DominanceTable& t);
/// Segments with three disjoint paths are empty, and so is the reference
/// pair set between their terminals. Counts such segments into `guarded`.
Failure three_path_guard(const Graph& g, const DominatorChain& c, std::size_t* guarded = nullptr);
/// The constant-time query agrees with enumeration on every vertex pair.
Failure query_agreement(const Graph& g, const DominatorChain& c);

}  // namespace checks

/// Graph `index` of the seeded verification corpus: between 3 and
/// max_vertices vertices, densities cycling through 0.1 .. 0.5.
Graph corpus_graph(std::uint64_t seed, std::size_t index, std::size_t max_vertices);

struct VerifyOptions {
  std::size_t graphs = 200;
  std::size_t max_vertices = 40;
  std::uint64_t seed = 7;
  /// Drops one pair from each non-empty computed set; exercises the failure path.
  bool inject_fault = false;
  Execution exec = Execution::parallel;
};

struct Counterexample {
  std::size_t graph_index = 0;
  std::string graph_text;  // .dag form
  std::string source;
  std::string check;
  std::string detail;
};

struct VerifyReport {
  std::size_t graphs = 0;
  std::size_t sources = 0;
  std::size_t pairs = 0;
  std::optional<Counterexample> failure;  // the lowest failing graph index
  bool passed() const noexcept { return !failure; }
};

/// Runs every check for each listed source (all non-root vertices reaching
/// the root when `sources` is empty).
std::optional<Counterexample> verify_instance(const Graph& g, std::span<const VertexId> sources, bool inject_fault,
                                              std::size_t* pair_total = nullptr);

VerifyReport verify_corpus(const VerifyOptions& opt);

}  // namespace ddom
