#include "ddom/graph.hpp"

#include <algorithm>
#include <string>

namespace ddom {

namespace {

std::uint64_t edge_key(VertexId from, VertexId to) {
  return (static_cast<std::uint64_t>(from) << 32) | to;
}

std::string fresh_name(const Graph& g, std::string base) {
  std::string name = base;
  for (int k = 1; g.find(name); ++k) name = base + std::to_string(k);
  return name;
}

Graph::Builder copy_into_builder(const Graph& g) {
  Graph::Builder b;
  for (VertexId v = 0; v < g.num_vertices(); ++v) b.add_vertex(g.name(v), g.kind(v));
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    for (VertexId w : g.fanout(v)) b.add_edge(v, w);
  for (VertexId o : g.outputs()) b.add_output(o);
  b.set_root(g.root());
  return b;
}

}  // namespace

std::string_view to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::input: return "input";
    case VertexKind::gate: return "gate";
    case VertexKind::output: return "output";
    case VertexKind::virtual_root: return "virtual";
  }
  return "gate";
}

std::optional<VertexKind> parse_vertex_kind(std::string_view text) {
  if (text == "input") return VertexKind::input;
  if (text == "gate") return VertexKind::gate;
  if (text == "output") return VertexKind::output;
  if (text == "virtual") return VertexKind::virtual_root;
  return std::nullopt;
}

std::optional<VertexId> Graph::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::Builder::add_vertex(std::string name, VertexKind kind) {
  const auto id = static_cast<VertexId>(kinds_.size());
  if (name.empty()) name = "v" + std::to_string(id);
  if (!by_name_.emplace(name, id).second)
    throw GraphError(GraphError::Code::duplicate_vertex, "duplicate vertex '" + name + "'");
  names_.push_back(std::move(name));
  kinds_.push_back(kind);
  fanout_.emplace_back();
  fanin_count_.push_back(0);
  return id;
}

void Graph::Builder::add_edge(VertexId from, VertexId to) {
  if (!add_edge_if_absent(from, to))
    throw GraphError(GraphError::Code::duplicate_edge,
                     "duplicate edge '" + names_[from] + "' -> '" + names_[to] + "'");
}

bool Graph::Builder::add_edge_if_absent(VertexId from, VertexId to) {
  if (from >= kinds_.size() || to >= kinds_.size())
    throw GraphError(GraphError::Code::invalid_vertex, "edge endpoint out of range");
  if (!edges_.insert(edge_key(from, to)).second) return false;
  fanout_[from].push_back(to);
  ++fanin_count_[to];
  return true;
}

void Graph::Builder::set_root(VertexId v) {
  if (v >= kinds_.size()) throw GraphError(GraphError::Code::invalid_vertex, "root out of range");
  root_ = v;
}

void Graph::Builder::add_output(VertexId v) {
  if (v >= kinds_.size()) throw GraphError(GraphError::Code::invalid_vertex, "output out of range");
  if (std::find(outputs_.begin(), outputs_.end(), v) == outputs_.end()) outputs_.push_back(v);
}

void Graph::Builder::set_kind(VertexId v, VertexKind kind) { kinds_.at(v) = kind; }

std::optional<VertexId> Graph::Builder::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

Graph Graph::Builder::build() && {
  if (root_ == kNoVertex) throw GraphError(GraphError::Code::missing_root, "graph has no root");
  auto order = topological_sort(fanout_);
  if (order.size() != kinds_.size()) throw GraphError(GraphError::Code::cycle, "graph contains a cycle");

  Graph g;
  const std::size_t n = kinds_.size();
  g.fanout_offsets_.assign(n + 1, 0);
  g.fanin_offsets_.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) {
    g.fanout_offsets_[v + 1] = g.fanout_offsets_[v] + static_cast<std::uint32_t>(fanout_[v].size());
    g.fanin_offsets_[v + 1] = g.fanin_offsets_[v] + fanin_count_[v];
  }
  const std::size_t m = g.fanout_offsets_[n];
  g.fanout_targets_.reserve(m);
  g.fanin_sources_.resize(m);
  g.fanin_edge_ids_.resize(m);
  std::vector<std::uint32_t> fill(g.fanin_offsets_.begin(), g.fanin_offsets_.end() - 1);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : fanout_[v]) {
      const auto id = static_cast<std::uint32_t>(g.fanout_targets_.size());
      g.fanout_targets_.push_back(w);
      g.fanin_sources_[fill[w]] = v;
      g.fanin_edge_ids_[fill[w]] = id;
      ++fill[w];
    }
  }

  g.kinds_ = std::move(kinds_);
  g.names_ = std::move(names_);
  g.by_name_ = std::move(by_name_);
  g.root_ = root_;
  g.outputs_ = outputs_.empty() ? std::vector<VertexId>{root_} : std::move(outputs_);
  g.topo_rank_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) g.topo_rank_[order[i]] = i;
  g.topo_order_ = std::move(order);
  return g;
}

std::span<const VertexId> topological_order(const Graph& g) { return g.topological_order(); }

std::vector<VertexId> topological_sort(std::span<const std::vector<VertexId>> fanout) {
  const std::size_t n = fanout.size();
  std::vector<std::uint32_t> indegree(n, 0);
  for (const auto& outs : fanout)
    for (VertexId w : outs) ++indegree[w];
  std::vector<VertexId> order;
  order.reserve(n);
  for (VertexId v = 0; v < n; ++v)
    if (indegree[v] == 0) order.push_back(v);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (VertexId w : fanout[order[head]])
      if (--indegree[w] == 0) order.push_back(w);
  }
  if (order.size() != n) order.clear();
  return order;
}

std::vector<std::uint8_t> reaches(const Graph& g, VertexId target) {
  std::vector<std::uint8_t> seen(g.num_vertices(), 0);
  std::vector<VertexId> stack{target};
  seen[target] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId p : g.fanin(v)) {
      if (!seen[p]) {
        seen[p] = 1;
        stack.push_back(p);
      }
    }
  }
  return seen;
}

std::vector<VertexId> primary_inputs(const Graph& g) {
  std::vector<VertexId> inputs;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (g.kind(v) == VertexKind::input) inputs.push_back(v);
  if (!inputs.empty()) return inputs;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (g.fanin(v).empty() && v != g.root() && g.kind(v) != VertexKind::virtual_root) inputs.push_back(v);
  return inputs;
}

MergedGraph merge_sources(const Graph& g, std::span<const VertexId> sources) {
  if (sources.empty()) throw GraphError(GraphError::Code::invalid_argument, "merge_sources: empty source set");
  for (VertexId s : sources) {
    if (!g.valid(s)) throw GraphError(GraphError::Code::invalid_vertex, "merge_sources: vertex out of range");
    if (s == g.root()) throw GraphError(GraphError::Code::invalid_argument, "merge_sources: root in source set");
  }
  auto b = copy_into_builder(g);
  const VertexId merged = b.add_vertex(fresh_name(g, "@merged"), VertexKind::gate);
  for (VertexId s : sources)
    for (VertexId w : g.fanout(s)) b.add_edge_if_absent(merged, w);
  return {std::move(b).build(), merged};
}

MergedGraph add_fake_source(const Graph& g, std::span<const VertexId> targets) {
  if (targets.empty()) throw GraphError(GraphError::Code::invalid_argument, "add_fake_source: empty vertex set");
  auto b = copy_into_builder(g);
  const VertexId fake = b.add_vertex(fresh_name(g, "@fake"), VertexKind::gate);
  for (VertexId t : targets) {
    if (!g.valid(t)) throw GraphError(GraphError::Code::invalid_vertex, "add_fake_source: vertex out of range");
    b.add_edge_if_absent(fake, t);
  }
  return {std::move(b).build(), fake};
}

Graph extract_cone(const Graph& g, VertexId out) {
  if (!g.valid(out)) throw GraphError(GraphError::Code::invalid_vertex, "extract_cone: vertex out of range");
  const auto in_cone = reaches(g, out);
  std::vector<VertexId> remap(g.num_vertices(), kNoVertex);
  Graph::Builder b;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (in_cone[v]) remap[v] = b.add_vertex(g.name(v), g.kind(v));
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!in_cone[v]) continue;
    for (VertexId w : g.fanout(v))
      if (in_cone[w]) b.add_edge(remap[v], remap[w]);
  }
  b.set_root(remap[out]);
  b.add_output(remap[out]);
  return std::move(b).build();
}

bool is_valid_path(const Graph& g, const Path& p) {
  if (p.vertices.empty()) return false;
  std::unordered_set<VertexId> seen;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const VertexId v = p.vertices[i];
    if (!g.valid(v) || !seen.insert(v).second) return false;
    if (i + 1 < p.size()) {
      auto outs = g.fanout(v);
      if (std::find(outs.begin(), outs.end(), p.vertices[i + 1]) == outs.end()) return false;
    }
  }
  return true;
}

bool disjoint(const Path& a, const Path& b) {
  auto inner_a = a.non_terminals();
  std::unordered_set<VertexId> members(inner_a.begin(), inner_a.end());
  for (VertexId v : b.non_terminals())
    if (members.count(v)) return false;
  return true;
}

Path concatenate(const Path& a, const Path& b) {
  if (a.vertices.empty() || b.vertices.empty() || a.sink() != b.source())
    throw std::invalid_argument("concatenate: sink of the first path must be the source of the second");
  Path out = a;
  out.vertices.insert(out.vertices.end(), b.vertices.begin() + 1, b.vertices.end());
  return out;
}

Path prefix(const Path& p, std::size_t k) {
  if (k < 1 || k >= p.size()) throw std::out_of_range("prefix length must be in [1, |P|)");
  return Path{{p.vertices.begin(), p.vertices.begin() + static_cast<std::ptrdiff_t>(k)}};
}

Path suffix(const Path& p, std::size_t k) {
  if (k <= 1 || k > p.size()) throw std::out_of_range("suffix length must be in (1, |P|]");
  return Path{{p.vertices.end() - static_cast<std::ptrdiff_t>(k), p.vertices.end()}};
}

}  // namespace ddom
