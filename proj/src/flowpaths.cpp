#include "ddom/flowpaths.hpp"

#include <stdexcept>

namespace ddom {

namespace {

constexpr std::uint8_t kInHalf = 1;
constexpr std::uint8_t kOutHalf = 2;

enum class Arc : std::uint8_t { start, edge_forward, edge_backward, split_forward, split_backward };

struct Frame {
  VertexId v;
  bool out_half;
  std::uint32_t slot;
  Arc entered_by;
  std::uint32_t edge;  // edge id for edge arcs
};

}  // namespace

DisjointPathFinder::DisjointPathFinder(const Graph& g)
    : g_(&g),
      edge_flow_(g.num_edges(), 0),
      through_(g.num_vertices(), 0),
      visited_(g.num_vertices(), 0),
      touched_flag_(g.num_vertices(), 0) {}

void DisjointPathFinder::touch(VertexId v) {
  if (!touched_flag_[v]) {
    touched_flag_[v] = 1;
    touched_.push_back(v);
  }
}

void DisjointPathFinder::reset_visits() {
  for (VertexId v : touched_) visited_[v] = 0;
}

void DisjointPathFinder::reset_all() {
  for (VertexId v : touched_) {
    visited_[v] = 0;
    through_[v] = 0;
    touched_flag_[v] = 0;
  }
  touched_.clear();
  for (std::uint32_t e : flow_edges_) edge_flow_[e] = 0;
  flow_edges_.clear();
}

bool DisjointPathFinder::augment(VertexId src, VertexId sink, std::span<const std::uint8_t> live) {
  const Graph& g = *g_;
  auto allowed = [&](VertexId v) { return live.empty() || live[v] || v == sink; };

  std::vector<Frame> stack;
  stack.push_back({src, true, 0, Arc::start, 0});
  touch(src);
  visited_[src] |= kOutHalf;

  auto enter = [&](VertexId v, bool out_half, Arc arc, std::uint32_t edge) {
    const std::uint8_t bit = out_half ? kOutHalf : kInHalf;
    if (visited_[v] & bit) return false;
    touch(v);
    visited_[v] |= bit;
    stack.push_back({v, out_half, 0, arc, edge});
    return true;
  };

  bool found = false;
  while (!stack.empty() && !found) {
    Frame& top = stack.back();
    const VertexId v = top.v;
    if (top.out_half) {
      auto outs = g.fanout(v);
      if (top.slot < outs.size()) {
        const std::uint32_t k = top.slot++;
        const std::uint32_t e = g.first_fanout_edge(v) + k;
        const VertexId w = outs[k];
        if (edge_flow_[e] || !allowed(w)) continue;
        if (enter(w, false, Arc::edge_forward, e) && w == sink) found = true;
        continue;
      }
      if (top.slot == outs.size()) {
        ++top.slot;
        if (v != src && through_[v]) enter(v, false, Arc::split_backward, 0);
        continue;
      }
    } else {
      if (top.slot == 0) {
        ++top.slot;
        if (!through_[v]) enter(v, true, Arc::split_forward, 0);
        continue;
      }
      auto ins = g.fanin(v);
      auto ids = g.fanin_edge_ids(v);
      if (top.slot - 1 < ins.size()) {
        const std::uint32_t k = top.slot++ - 1;
        if (edge_flow_[ids[k]]) enter(ins[k], true, Arc::edge_backward, ids[k]);
        continue;
      }
    }
    stack.pop_back();
  }
  reset_visits();
  if (!found) return false;

  for (const Frame& f : stack) {
    switch (f.entered_by) {
      case Arc::start: break;
      case Arc::edge_forward:
        edge_flow_[f.edge] = 1;
        flow_edges_.push_back(f.edge);
        break;
      case Arc::edge_backward: edge_flow_[f.edge] = 0; break;
      case Arc::split_forward: through_[f.v] = 1; break;
      case Arc::split_backward: through_[f.v] = 0; break;
    }
  }
  return true;
}

std::vector<Path> DisjointPathFinder::find(VertexId src, VertexId sink, unsigned k, std::span<const std::uint8_t> live) {
  reset_all();
  unsigned flow = 0;
  while (flow < k && augment(src, sink, live)) ++flow;

  const Graph& g = *g_;
  std::vector<Path> paths;
  auto outs = g.fanout(src);
  for (std::uint32_t i = 0; i < outs.size(); ++i) {
    if (!edge_flow_[g.first_fanout_edge(src) + i]) continue;
    Path p{{src, outs[i]}};
    while (p.sink() != sink) {
      const VertexId v = p.sink();
      auto next = g.fanout(v);
      for (std::uint32_t j = 0; j < next.size(); ++j) {
        if (edge_flow_[g.first_fanout_edge(v) + j]) {
          p.vertices.push_back(next[j]);
          break;
        }
      }
    }
    paths.push_back(std::move(p));
  }
  return paths;
}

std::vector<Path> find_disjoint_paths(const Graph& g, VertexId src, VertexId sink, unsigned k) {
  if (!g.valid(src) || !g.valid(sink)) throw std::invalid_argument("find_disjoint_paths: vertex out of range");
  if (src == sink) throw std::invalid_argument("find_disjoint_paths: source equals sink");
  if (k < 1 || k > 3) throw std::invalid_argument("find_disjoint_paths: k must be in [1, 3]");
  const auto live = reaches(g, sink);
  if (!live[src]) throw std::invalid_argument("find_disjoint_paths: source does not reach sink");
  DisjointPathFinder finder(g);
  return finder.find(src, sink, k, live);
}

}  // namespace ddom
