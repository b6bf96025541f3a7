#include "ddom/chain_query.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace ddom {

MatchingVector matching_vector(const DominatorChain& c, VertexId v) {
  MatchingVector mv{v, {}};
  const ChainEntry* e = c.entry(v);
  if (!e || e->segment < 0) return mv;
  const SegmentChain& seg = c.segments[e->segment];
  const auto& opposite = e->side == Side::left ? seg.right : seg.left;
  for (std::uint32_t k = e->min; k <= e->max; ++k) mv.partners.push_back(opposite[k - 1].vertex);
  return mv;
}

std::vector<VertexPair> enumerate_all(const DominatorChain& c) {
  std::vector<VertexPair> out;
  for (const auto& seg : c.segments)
    for (const auto& v : seg.left)
      for (std::uint32_t k = v.min; k <= v.max; ++k) out.emplace_back(v.vertex, seg.right[k - 1].vertex);
  return out;
}

PairSet pair_set(const DominatorChain& c) { return normalize(enumerate_all(c)); }

std::optional<VertexPair> immediate_double_dominator(const DominatorChain& c) {
  for (const auto& seg : c.segments)
    if (!seg.empty()) return VertexPair{seg.left.front().vertex, seg.right.front().vertex};
  return std::nullopt;
}

std::vector<VertexCluster> clusters(const DominatorChain& c) {
  std::vector<VertexCluster> out;
  for (const auto& seg : c.segments) {
    for (const auto& cl : seg.clusters) {
      VertexCluster vc;
      for (std::uint32_t k = cl.l_first; k <= cl.l_last; ++k) vc.left.push_back(seg.left[k - 1].vertex);
      for (std::uint32_t k = cl.r_first; k <= cl.r_last; ++k) vc.right.push_back(seg.right[k - 1].vertex);
      out.push_back(std::move(vc));
    }
  }
  return out;
}

namespace {

using Adjacency = std::vector<std::vector<VertexId>>;

// Windows of `rows` over `cols` (both in chosen order); empty result when
// some row's partners are not contiguous or the windows are not staircases.
std::optional<std::vector<ChainVertex>> windows_if_staircase(const Adjacency& adj, const std::vector<VertexId>& rows,
                                                             const std::vector<std::uint32_t>& col_index) {
  std::vector<ChainVertex> out;
  for (VertexId v : rows) {
    std::uint32_t lo = UINT32_MAX, hi = 0;
    for (VertexId w : adj[v]) {
      lo = std::min(lo, col_index[w]);
      hi = std::max(hi, col_index[w]);
    }
    if (hi - lo + 1 != adj[v].size()) return std::nullopt;
    if (!out.empty() && (lo < out.back().min || hi < out.back().max)) return std::nullopt;
    out.push_back({v, lo, hi});
  }
  return out;
}

struct ComponentOrder {
  std::vector<VertexId> left, right;
};

// Breadth-first layering from `start`; each layer is ordered by where its
// members attach to the previous layer, then by how far they extend into the
// next one.
ComponentOrder layered_order(const Adjacency& adj, VertexId start, std::vector<std::int32_t>& dist,
                             const std::vector<VertexId>& members) {
  for (VertexId v : members) dist[v] = -1;
  std::vector<std::vector<VertexId>> layers{{start}};
  dist[start] = 0;
  while (true) {
    std::vector<VertexId> next;
    for (VertexId v : layers.back())
      for (VertexId w : adj[v])
        if (dist[w] < 0) {
          dist[w] = static_cast<std::int32_t>(layers.size());
          next.push_back(w);
        }
    if (next.empty()) break;
    layers.push_back(std::move(next));
  }

  std::vector<std::uint32_t> pos(adj.size(), 0);
  for (VertexId v : layers[0]) pos[v] = 0;
  for (std::size_t k = 1; k < layers.size(); ++k) {
    using Key = std::tuple<std::uint32_t, std::uint32_t, std::size_t, VertexId>;
    std::vector<Key> keys;
    for (VertexId v : layers[k]) {
      std::uint32_t first = UINT32_MAX, last = 0;
      std::size_t forward = 0;
      for (VertexId w : adj[v]) {
        if (dist[w] == static_cast<std::int32_t>(k) - 1) {
          first = std::min(first, pos[w]);
          last = std::max(last, pos[w]);
        } else if (dist[w] == static_cast<std::int32_t>(k) + 1) {
          ++forward;
        }
      }
      keys.emplace_back(first, last, forward, v);
    }
    std::sort(keys.begin(), keys.end());
    for (std::size_t i = 0; i < keys.size(); ++i) {
      layers[k][i] = std::get<3>(keys[i]);
      pos[layers[k][i]] = static_cast<std::uint32_t>(i);
    }
  }

  ComponentOrder order;
  for (std::size_t k = 0; k < layers.size(); ++k)
    for (VertexId v : layers[k]) (k % 2 == 0 ? order.left : order.right).push_back(v);
  return order;
}

}  // namespace

PairSetChain chain_from_pair_set(const std::vector<std::pair<std::string, std::string>>& pairs) {
  PairSetChain result;
  std::map<std::string, VertexId> id_of;
  for (const auto& [a, b] : pairs) {
    if (a == b) throw PairSetError("pair set contains the self pair {" + a + "," + a + "}");
    id_of.emplace(a, 0);
    id_of.emplace(b, 0);
  }
  for (auto& [name, id] : id_of) {
    id = static_cast<VertexId>(result.names.size());
    result.names.push_back(name);
  }
  const std::size_t n = result.names.size();
  Adjacency adj(n);
  PairSet set;
  for (const auto& [a, b] : pairs) set.emplace_back(id_of[a], id_of[b]);
  set = normalize(std::move(set));
  for (const auto& [v, w] : set) {
    adj[v].push_back(w);
    adj[w].push_back(v);
  }

  // Components in order of their smallest id, which is also the smallest name.
  std::vector<std::int32_t> colour(n, -1), dist(n, -1);
  SegmentChain seg;
  for (VertexId seed = 0; seed < n; ++seed) {
    if (colour[seed] >= 0) continue;
    std::vector<VertexId> members{seed};
    colour[seed] = 0;
    for (std::size_t k = 0; k < members.size(); ++k)
      for (VertexId w : adj[members[k]]) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[members[k]];
          members.push_back(w);
        } else if (colour[w] == colour[members[k]]) {
          throw PairSetError("pair set is not bipartite around '" + result.names[w] + "'");
        }
      }
    std::sort(members.begin(), members.end());

    std::optional<ComponentOrder> found;
    std::vector<ChainVertex> left_windows, right_windows;
    std::vector<std::uint32_t> index(n, 0);
    for (VertexId start : members) {
      if (colour[start] != 0) continue;
      ComponentOrder order = layered_order(adj, start, dist, members);
      for (std::uint32_t k = 0; k < order.left.size(); ++k) index[order.left[k]] = k + 1;
      for (std::uint32_t k = 0; k < order.right.size(); ++k) index[order.right[k]] = k + 1;
      auto lw = windows_if_staircase(adj, order.left, index);
      auto rw = windows_if_staircase(adj, order.right, index);
      if (lw && rw) {
        left_windows = std::move(*lw);
        right_windows = std::move(*rw);
        found = std::move(order);
        break;
      }
    }
    if (!found) throw PairSetError("no staircase ordering exists for the component of '" + result.names[seed] + "'");

    const auto l_off = static_cast<std::uint32_t>(seg.left.size());
    const auto r_off = static_cast<std::uint32_t>(seg.right.size());
    for (auto v : left_windows) seg.left.push_back({v.vertex, v.min + r_off, v.max + r_off});
    for (auto v : right_windows) seg.right.push_back({v.vertex, v.min + l_off, v.max + l_off});
  }
  seg.clusters = construct_clusters(seg.left, seg.right);

  DominatorChain& chain = result.chain;
  if (!seg.empty()) chain.segments.push_back(std::move(seg));
  chain.index_entries(n);
  return result;
}

}  // namespace ddom
