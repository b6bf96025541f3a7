#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ddom/flowpaths.hpp"
#include "ddom/graph.hpp"
#include "ddom/svdom.hpp"

namespace ddom {

/// A listed vertex with its window [min, max] of 1-based partner indices in
/// the opposite list. During the sweep the window holds path positions
/// instead; convert_min_max rewrites it.
struct ChainVertex {
  VertexId vertex = kNoVertex;
  std::uint32_t min = 0;
  std::uint32_t max = 0;
  bool operator==(const ChainVertex&) const = default;
};

/// Inclusive 1-based ranges of a complementary cluster pair.
struct Cluster {
  std::uint32_t l_first = 0, l_last = 0;
  std::uint32_t r_first = 0, r_last = 0;
  bool operator==(const Cluster&) const = default;
};

/// Double-vertex dominators of `source` with respect to `sink`, where sink is
/// the immediate dominator of source.
struct SegmentChain {
  VertexId source = kNoVertex;
  VertexId sink = kNoVertex;
  std::vector<ChainVertex> left;
  std::vector<ChainVertex> right;
  std::vector<Cluster> clusters;

  bool empty() const noexcept { return left.empty(); }
  std::size_t pair_count() const;
};

enum class Side : std::uint8_t { left, right };

/// Lookup record of one vertex. segment < 0 means the vertex is unlisted.
struct ChainEntry {
  std::int32_t segment = -1;
  Side side = Side::left;
  std::uint32_t index = 0;
  std::uint32_t min = 0;
  std::uint32_t max = 0;
};

struct DominatorChain {
  VertexId source = kNoVertex;
  VertexId root = kNoVertex;
  std::vector<VertexId> single_chain;   // source first, root last
  std::vector<SegmentChain> segments;   // segments[i] spans single_chain[i] -> single_chain[i + 1]
  std::vector<ChainEntry> entries;      // one per graph vertex

  /// Rebuilds `entries` from `segments` for a vertex id space of size n.
  void index_entries(std::size_t n);
  const ChainEntry* entry(VertexId v) const { return v < entries.size() ? &entries[v] : nullptr; }
  std::size_t pair_count() const;
};

/// Sweep state shared by find_reachable and assign_min_max. Path positions
/// are 1-based; a zero position means "not on the path".
struct SweepScratch {
  explicit SweepScratch(std::size_t num_vertices);

  /// Records positions of `self` and `other` and clears marks and globals.
  void bind(const Path& self, const Path& other);
  /// Undoes bind; cost proportional to the bound paths and marked vertices.
  void unbind();

  std::vector<std::uint32_t> pos_self, pos_other;
  std::vector<std::uint8_t> marked;
  std::vector<VertexId> marked_list;
  std::vector<VertexId> stack;
  const Path* self = nullptr;
  const Path* other = nullptr;
  std::uint32_t reached_self = 0, reached_other = 1;
  std::uint32_t new_reached_self = 0, new_reached_other = 1;
  std::uint32_t last_prime = 0;
};

/// Per-position results for one path, indexed 1..|P|; slot 0 is the
/// "no prime ancestor" sentinel of the prime links.
struct PathFields {
  std::vector<std::uint32_t> min;    // opposite-path position lower bound; |other| for non-primes
  std::vector<std::uint32_t> max;    // opposite-path position upper bound
  std::vector<std::uint32_t> link;   // prime: next prime position; non-prime: previous prime position
  std::vector<std::uint8_t> prime;

  void reset(std::size_t path_size, std::uint32_t default_max);
};

/// Depth-first search from x over vertices off both bound paths. Updates the
/// new_reached globals with the largest positions hit on either path; the
/// sink counts as the last position of both. Off-path vertices are marked and
/// never expanded twice; vertices with live[v] == 0 are ignored.
void find_reachable(const Graph& g, VertexId x, SweepScratch& s, std::span<const std::uint8_t> live);

/// One direction of the min/max sweep: fills f1.min, f1.prime, f1.link and
/// f2.max. f1 and f2 must be reset to the path sizes beforehand.
void assign_min_max(const Graph& g, const Path& p1, const Path& p2, PathFields& f1, PathFields& f2, SweepScratch& s,
                    std::span<const std::uint8_t> live);

/// Non-terminal vertices of p1 with a non-empty prime-snapped window over p2,
/// in path order. Windows are p2 positions.
std::vector<ChainVertex> construct_vector(const Path& p1, const Path& p2, const PathFields& f1, const PathFields& f2);

/// Rewrites windows from positions on `opposite` to indices in `opposite_list`.
void convert_min_max(std::vector<ChainVertex>& list, const Path& opposite, std::span<const ChainVertex> opposite_list);

/// Maximal complementary cluster pairs of converted L/R lists.
std::vector<Cluster> construct_clusters(std::span<const ChainVertex> left, std::span<const ChainVertex> right);

/// Reusable workspace for many sources of one graph. The dominator tree is
/// computed once; per-call work is proportional to the region between the
/// source and the root.
class ChainBuilder {
 public:
  explicit ChainBuilder(const Graph& g);
  ChainBuilder(const Graph& g, DominatorTree tree);

  const Graph& graph() const noexcept { return *g_; }
  const DominatorTree& tree() const noexcept { return tree_; }

  /// Throws std::invalid_argument when u is the root or does not reach it.
  DominatorChain build(VertexId u);

  /// Segment with the live set "reaches the root".
  SegmentChain segment(VertexId src, VertexId sink);

  /// Last disjoint paths found by segment(); exposed for diagnostics.
  const std::vector<Path>& last_paths() const noexcept { return paths_; }

 private:
  friend SegmentChain segment_chain(const Graph&, VertexId, VertexId);
  SegmentChain run_segment(VertexId src, VertexId sink, std::span<const std::uint8_t> live);

  const Graph* g_;
  DominatorTree tree_;
  std::vector<std::uint8_t> live_;
  DisjointPathFinder finder_;
  SweepScratch scratch_;
  PathFields f1_, f2_;
  std::vector<Path> paths_;
};

/// Throws std::invalid_argument when src does not reach sink or when sink is
/// not the immediate dominator of src.
SegmentChain segment_chain(const Graph& g, VertexId src, VertexId sink);

/// Throws std::invalid_argument when u is the root or does not reach it.
DominatorChain dominator_chain(const Graph& g, VertexId u);

}  // namespace ddom
