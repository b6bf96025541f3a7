#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace ddom {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

enum class VertexKind : std::uint8_t { input, gate, output, virtual_root };

std::string_view to_string(VertexKind kind);
std::optional<VertexKind> parse_vertex_kind(std::string_view text);

class GraphError : public std::runtime_error {
 public:
  enum class Code { cycle, duplicate_edge, duplicate_vertex, missing_root, invalid_vertex, invalid_argument };

  GraphError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const noexcept { return code_; }

 private:
  Code code_;
};

/// Immutable single-sink DAG with dense vertex ids.
///
/// Adjacency is stored as two CSR arrays. Every fanout edge has an id equal
/// to its slot in the fanout array; fanin slots carry that id as well so
/// per-edge state can be indexed from either direction.
class Graph {
 public:
  class Builder;

  Graph() = default;

  std::size_t num_vertices() const noexcept { return kinds_.size(); }
  std::size_t num_edges() const noexcept { return fanout_targets_.size(); }

  std::span<const VertexId> fanout(VertexId v) const {
    return {fanout_targets_.data() + fanout_offsets_[v], fanout_targets_.data() + fanout_offsets_[v + 1]};
  }
  std::span<const VertexId> fanin(VertexId v) const {
    return {fanin_sources_.data() + fanin_offsets_[v], fanin_sources_.data() + fanin_offsets_[v + 1]};
  }
  /// Edge id of the first fanout edge of v; fanout(v)[k] has id first_fanout_edge(v) + k.
  std::uint32_t first_fanout_edge(VertexId v) const { return fanout_offsets_[v]; }
  /// Edge ids matching fanin(v) element by element.
  std::span<const std::uint32_t> fanin_edge_ids(VertexId v) const {
    return {fanin_edge_ids_.data() + fanin_offsets_[v], fanin_edge_ids_.data() + fanin_offsets_[v + 1]};
  }

  VertexId root() const noexcept { return root_; }
  VertexKind kind(VertexId v) const { return kinds_[v]; }
  const std::string& name(VertexId v) const { return names_[v]; }
  std::span<const std::string> names() const noexcept { return names_; }
  std::optional<VertexId> find(std::string_view name) const;

  /// Designated primary outputs; a graph always has at least its root here.
  std::span<const VertexId> outputs() const noexcept { return outputs_; }

  std::span<const VertexId> topological_order() const noexcept { return topo_order_; }
  std::uint32_t topological_rank(VertexId v) const { return topo_rank_[v]; }

  bool valid(VertexId v) const noexcept { return v < num_vertices(); }

 private:
  std::vector<std::uint32_t> fanout_offsets_{0};
  std::vector<VertexId> fanout_targets_;
  std::vector<std::uint32_t> fanin_offsets_{0};
  std::vector<VertexId> fanin_sources_;
  std::vector<std::uint32_t> fanin_edge_ids_;
  std::vector<VertexKind> kinds_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> by_name_;
  std::vector<VertexId> outputs_;
  std::vector<VertexId> topo_order_;
  std::vector<std::uint32_t> topo_rank_;
  VertexId root_ = kNoVertex;
};

class Graph::Builder {
 public:
  /// Adds a vertex; an empty name is replaced by "v<id>". Throws on duplicate names.
  VertexId add_vertex(std::string name, VertexKind kind = VertexKind::gate);
  /// Throws GraphError on unknown endpoints or a repeated edge.
  void add_edge(VertexId from, VertexId to);
  /// Like add_edge but silently ignores a repeated edge.
  bool add_edge_if_absent(VertexId from, VertexId to);
  void set_root(VertexId v);
  void add_output(VertexId v);
  void set_kind(VertexId v, VertexKind kind);

  std::size_t num_vertices() const noexcept { return kinds_.size(); }
  bool has_fanin(VertexId v) const { return fanin_count_[v] != 0; }
  std::optional<VertexId> find(std::string_view name) const;

  /// Validates acyclicity and the root; throws GraphError.
  Graph build() &&;

 private:
  std::vector<std::vector<VertexId>> fanout_;
  std::vector<std::uint32_t> fanin_count_;
  std::vector<VertexKind> kinds_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> by_name_;
  std::unordered_set<std::uint64_t> edges_;
  std::vector<VertexId> outputs_;
  VertexId root_ = kNoVertex;
};

/// Vertex ids in an order where every edge points forward.
std::span<const VertexId> topological_order(const Graph& g);

/// Kahn's algorithm over raw adjacency; empty result when a cycle exists.
std::vector<VertexId> topological_sort(std::span<const std::vector<VertexId>> fanout);

/// Vertices that can reach `target` (including target itself).
std::vector<std::uint8_t> reaches(const Graph& g, VertexId target);

/// Primary inputs: vertices tagged input; if none are tagged, the fanin-free vertices.
std::vector<VertexId> primary_inputs(const Graph& g);

struct MergedGraph {
  Graph graph;
  VertexId vertex;
};

/// Adds a vertex whose fanout is the union of the fanouts of `sources`.
MergedGraph merge_sources(const Graph& g, std::span<const VertexId> sources);

/// Adds a vertex feeding every vertex of `targets`.
MergedGraph add_fake_source(const Graph& g, std::span<const VertexId> targets);

/// Subgraph induced by the transitive fanin of `out`, rooted at `out`.
/// Relative vertex order, names and kinds are preserved.
Graph extract_cone(const Graph& g, VertexId out);

/// Ordered vertex sequence joined by edges.
struct Path {
  std::vector<VertexId> vertices;

  std::size_t size() const noexcept { return vertices.size(); }
  VertexId source() const { return vertices.front(); }
  VertexId sink() const { return vertices.back(); }
  std::span<const VertexId> non_terminals() const {
    if (vertices.size() < 2) return {};
    return std::span<const VertexId>(vertices).subspan(1, vertices.size() - 2);
  }
  bool operator==(const Path&) const = default;
};

/// True when consecutive vertices are edges and no vertex repeats.
bool is_valid_path(const Graph& g, const Path& p);
/// Disjoint means the non-terminal vertex sets do not intersect.
bool disjoint(const Path& a, const Path& b);
/// Requires a.sink() == b.source().
Path concatenate(const Path& a, const Path& b);
Path prefix(const Path& p, std::size_t k);
Path suffix(const Path& p, std::size_t k);

}  // namespace ddom
