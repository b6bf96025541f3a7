#include "ddom/dominator_chain.hpp"

#include <algorithm>
#include <stdexcept>

namespace ddom {

std::size_t SegmentChain::pair_count() const {
  std::size_t n = 0;
  for (const auto& v : left) n += v.max - v.min + 1;
  return n;
}

void DominatorChain::index_entries(std::size_t n) {
  entries.assign(n, ChainEntry{});
  for (std::size_t s = 0; s < segments.size(); ++s) {
    auto fill = [&](const std::vector<ChainVertex>& list, Side side) {
      for (std::uint32_t k = 0; k < list.size(); ++k)
        entries[list[k].vertex] = {static_cast<std::int32_t>(s), side, k + 1, list[k].min, list[k].max};
    };
    fill(segments[s].left, Side::left);
    fill(segments[s].right, Side::right);
  }
}

std::size_t DominatorChain::pair_count() const {
  std::size_t n = 0;
  for (const auto& s : segments) n += s.pair_count();
  return n;
}

SweepScratch::SweepScratch(std::size_t num_vertices)
    : pos_self(num_vertices, 0), pos_other(num_vertices, 0), marked(num_vertices, 0) {}

void SweepScratch::bind(const Path& p_self, const Path& p_other) {
  unbind();
  self = &p_self;
  other = &p_other;
  // Terminals are shared; leave them off the position tables so the search
  // handles the sink explicitly and never treats the source as a target.
  for (std::uint32_t k = 2; k < p_self.size(); ++k) pos_self[p_self.vertices[k - 1]] = k;
  for (std::uint32_t k = 2; k < p_other.size(); ++k) pos_other[p_other.vertices[k - 1]] = k;
  reached_self = new_reached_self = 0;
  reached_other = new_reached_other = 1;
  last_prime = 0;
}

void SweepScratch::unbind() {
  if (self) {
    for (VertexId v : self->vertices) pos_self[v] = 0;
    for (VertexId v : other->vertices) pos_other[v] = 0;
  }
  for (VertexId v : marked_list) marked[v] = 0;
  marked_list.clear();
  self = other = nullptr;
}

void PathFields::reset(std::size_t path_size, std::uint32_t default_max) {
  min.assign(path_size + 1, 0);
  max.assign(path_size + 1, default_max);
  link.assign(path_size + 1, 0);
  prime.assign(path_size + 1, 0);
}

void find_reachable(const Graph& g, VertexId x, SweepScratch& s, std::span<const std::uint8_t> live) {
  const VertexId sink = s.self->sink();
  const auto self_end = static_cast<std::uint32_t>(s.self->size());
  const auto other_end = static_cast<std::uint32_t>(s.other->size());
  s.stack.clear();
  s.stack.push_back(x);
  while (!s.stack.empty()) {
    const VertexId v = s.stack.back();
    s.stack.pop_back();
    for (VertexId y : g.fanout(v)) {
      if (y == sink) {
        s.new_reached_self = self_end;
        s.new_reached_other = other_end;
      } else if (s.pos_self[y]) {
        s.new_reached_self = std::max(s.new_reached_self, s.pos_self[y]);
      } else if (s.pos_other[y]) {
        s.new_reached_other = std::max(s.new_reached_other, s.pos_other[y]);
      } else if (!s.marked[y] && (live.empty() || live[y])) {
        s.marked[y] = 1;
        s.marked_list.push_back(y);
        s.stack.push_back(y);
      }
    }
  }
}

void assign_min_max(const Graph& g, const Path& p1, const Path& p2, PathFields& f1, PathFields& f2, SweepScratch& s,
                    std::span<const std::uint8_t> live) {
  s.bind(p1, p2);
  const auto a = static_cast<std::uint32_t>(p1.size());
  const auto b = static_cast<std::uint32_t>(p2.size());
  for (std::uint32_t i = 1; i < a; ++i) {
    if (s.reached_self > i) {
      f1.min[i] = b;
      f1.prime[i] = 0;
      f1.link[i] = s.last_prime;
    } else {
      f1.min[i] = s.reached_other;
      f1.prime[i] = 1;
      f1.link[s.last_prime] = i;
      s.last_prime = i;
    }
    find_reachable(g, p1.vertices[i - 1], s, live);
    s.reached_self = std::max(s.reached_self, s.new_reached_self);
    // No progress on p2 leaves every max field untouched; later positions
    // still need their min fields, so the sweep continues.
    if (s.new_reached_other <= s.reached_other) continue;
    for (std::uint32_t j = s.reached_other; j < s.new_reached_other; ++j) f2.max[j] = i;
    s.reached_other = s.new_reached_other;
  }
  f1.link[s.last_prime] = a;
  s.unbind();
}

std::vector<ChainVertex> construct_vector(const Path& p1, const Path& p2, const PathFields& f1, const PathFields& f2) {
  const auto a = static_cast<std::uint32_t>(p1.size());
  const auto b = static_cast<std::uint32_t>(p2.size());
  auto is_prime = [&](std::uint32_t j) { return j == b || f2.prime[j]; };
  std::vector<ChainVertex> out;
  for (std::uint32_t i = 2; i < a; ++i) {
    if (!f1.prime[i]) continue;
    std::uint32_t lo = std::max<std::uint32_t>(f1.min[i], 2);
    std::uint32_t hi = std::min<std::uint32_t>(f1.max[i], b - 1);
    if (lo > hi) continue;
    if (!is_prime(lo)) lo = f2.link[f2.link[lo]];  // closest prime descendant
    if (!is_prime(hi)) hi = f2.link[hi];           // closest prime ancestor
    if (lo <= hi) out.push_back({p1.vertices[i - 1], lo, hi});
  }
  return out;
}

void convert_min_max(std::vector<ChainVertex>& list, const Path& opposite, std::span<const ChainVertex> opposite_list) {
  std::vector<std::uint32_t> index_at(opposite.size() + 1, 0);
  std::uint32_t k = 0;
  for (std::uint32_t pos = 1; pos <= opposite.size() && k < opposite_list.size(); ++pos)
    if (opposite.vertices[pos - 1] == opposite_list[k].vertex) index_at[pos] = ++k;
  for (auto& v : list) {
    v.min = index_at[v.min];
    v.max = index_at[v.max];
  }
}

std::vector<Cluster> construct_clusters(std::span<const ChainVertex> left, std::span<const ChainVertex> right) {
  std::vector<Cluster> clusters;
  std::uint32_t begin_l = 1, begin_r = 1;
  while (begin_l <= left.size()) {
    std::uint32_t end_l = begin_l;
    std::uint32_t end_r = left[end_l - 1].max;
    for (;;) {
      const std::uint32_t next_l = right[end_r - 1].max;
      if (next_l == end_l) break;
      end_l = next_l;
      const std::uint32_t next_r = left[end_l - 1].max;
      if (next_r == end_r) break;
      end_r = next_r;
    }
    clusters.push_back({begin_l, end_l, begin_r, end_r});
    begin_l = end_l + 1;
    begin_r = end_r + 1;
  }
  return clusters;
}

ChainBuilder::ChainBuilder(const Graph& g) : ChainBuilder(g, compute_dominator_tree(g)) {}

ChainBuilder::ChainBuilder(const Graph& g, DominatorTree tree)
    : g_(&g), tree_(std::move(tree)), live_(g.num_vertices(), 0), finder_(g), scratch_(g.num_vertices()) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) live_[v] = tree_.reaches_root(v);
}

SegmentChain ChainBuilder::segment(VertexId src, VertexId sink) { return run_segment(src, sink, live_); }

SegmentChain ChainBuilder::run_segment(VertexId src, VertexId sink, std::span<const std::uint8_t> live) {
  SegmentChain seg;
  seg.source = src;
  seg.sink = sink;
  paths_ = finder_.find(src, sink, 3, live);
  if (paths_.empty()) throw std::invalid_argument("segment source does not reach its sink");
  if (paths_.size() < 2) {
    if (paths_[0].size() == 2) return seg;  // the edge src -> sink is the only route
    throw std::invalid_argument("segment sink is not the immediate dominator of its source");
  }
  if (paths_.size() == 3) return seg;
  if (paths_[0].size() == 2 || paths_[1].size() == 2) return seg;

  const Graph& g = *g_;
  if (g.topological_rank(paths_[1].vertices[1]) < g.topological_rank(paths_[0].vertices[1])) std::swap(paths_[0], paths_[1]);
  const Path& p1 = paths_[0];
  const Path& p2 = paths_[1];
  const auto a = static_cast<std::uint32_t>(p1.size());
  const auto b = static_cast<std::uint32_t>(p2.size());

  f1_.reset(a, b);
  f2_.reset(b, a);
  assign_min_max(g, p1, p2, f1_, f2_, scratch_, live);
  assign_min_max(g, p2, p1, f2_, f1_, scratch_, live);
  seg.left = construct_vector(p1, p2, f1_, f2_);
  seg.right = construct_vector(p2, p1, f2_, f1_);
  convert_min_max(seg.left, p2, seg.right);
  convert_min_max(seg.right, p1, seg.left);
  seg.clusters = construct_clusters(seg.left, seg.right);
  return seg;
}

DominatorChain ChainBuilder::build(VertexId u) {
  if (!g_->valid(u)) throw std::invalid_argument("source vertex out of range");
  if (u == g_->root()) throw std::invalid_argument("source is the root");
  DominatorChain chain;
  chain.source = u;
  chain.root = g_->root();
  chain.single_chain = single_dominator_chain(tree_, u);
  for (std::size_t k = 0; k + 1 < chain.single_chain.size(); ++k)
    chain.segments.push_back(run_segment(chain.single_chain[k], chain.single_chain[k + 1], live_));
  chain.index_entries(g_->num_vertices());
  return chain;
}

SegmentChain segment_chain(const Graph& g, VertexId src, VertexId sink) {
  if (!g.valid(src) || !g.valid(sink) || src == sink) throw std::invalid_argument("invalid segment terminals");
  const auto live = reaches(g, sink);
  if (!live[src]) throw std::invalid_argument("segment source does not reach its sink");
  ChainBuilder builder(g, DominatorTree{});
  return builder.run_segment(src, sink, live);
}

DominatorChain dominator_chain(const Graph& g, VertexId u) {
  ChainBuilder builder(g);
  return builder.build(u);
}

}  // namespace ddom
