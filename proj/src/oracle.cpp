#include "ddom/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ddom::oracle {

namespace {

// DFS from a to b over unblocked vertices; optionally ignores the edge a -> b.
bool reach(const Graph& g, VertexId a, VertexId b, const std::vector<std::uint8_t>& blocked, bool skip_direct = false) {
  if (a == b) return true;
  std::vector<std::uint8_t> seen(g.num_vertices(), 0);
  std::vector<VertexId> stack{a};
  seen[a] = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.fanout(v)) {
      if (skip_direct && v == a && w == b) continue;
      if (w == b) return true;
      if (seen[w] || blocked[w]) continue;
      seen[w] = 1;
      stack.push_back(w);
    }
  }
  return false;
}

std::vector<std::uint8_t> mask_of(const Graph& g, std::span<const VertexId> vs) {
  std::vector<std::uint8_t> m(g.num_vertices(), 0);
  for (VertexId v : vs) m[v] = 1;
  return m;
}

}  // namespace

bool reaches_excluding(const Graph& g, VertexId a, VertexId b, std::span<const VertexId> excluded) {
  auto blocked = mask_of(g, excluded);
  if (blocked[a] || blocked[b]) return false;
  return reach(g, a, b, blocked);
}

bool dominates(const Graph& g, std::span<const VertexId> a, std::span<const VertexId> b, VertexId sink) {
  for (VertexId v : b) {
    if (std::find(a.begin(), a.end(), v) != a.end()) continue;
    if (std::find(a.begin(), a.end(), sink) != a.end()) continue;
    if (reaches_excluding(g, v, sink, a)) return false;
  }
  return true;
}

namespace {

std::vector<VertexId> singles_wrt(const Graph& g, VertexId u, VertexId sink) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (v == u || v == sink) continue;
    const VertexId x[] = {v};
    if (!reaches_excluding(g, u, sink, x)) out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<VertexId> single(const Graph& g, VertexId u) {
  std::vector<std::uint8_t> none(g.num_vertices(), 0);
  if (u == g.root() || !reach(g, u, g.root(), none)) return {};
  return singles_wrt(g, u, g.root());
}

PairSet double_vertex(const Graph& g, VertexId u, VertexId sink) {
  if (sink == kNoVertex) sink = g.root();
  std::vector<std::uint8_t> none(g.num_vertices(), 0);
  if (u == sink || !reach(g, u, sink, none)) return {};

  // Candidates lie on some u -> sink path and are not single dominators.
  const auto to_sink = reaches(g, sink);
  std::vector<std::uint8_t> from_u(g.num_vertices(), 0);
  std::vector<VertexId> stack{u};
  from_u[u] = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.fanout(v))
      if (!from_u[w]) {
        from_u[w] = 1;
        stack.push_back(w);
      }
  }
  const auto singles = singles_wrt(g, u, sink);
  std::vector<VertexId> cand;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (v != u && v != sink && from_u[v] && to_sink[v] && !std::binary_search(singles.begin(), singles.end(), v))
      cand.push_back(v);

  PairSet out;
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (std::size_t j = i + 1; j < cand.size(); ++j) {
      const VertexId x[] = {cand[i], cand[j]};
      if (!reaches_excluding(g, u, sink, x)) out.emplace_back(cand[i], cand[j]);
    }
  return normalize(std::move(out));
}

unsigned max_disjoint_paths(const Graph& g, VertexId src, VertexId sink) {
  std::vector<std::uint8_t> blocked(g.num_vertices(), 0);
  if (!reach(g, src, sink, blocked)) return 0;
  const auto outs = g.fanout(src);
  const bool direct = std::find(outs.begin(), outs.end(), sink) != outs.end();

  // Menger: the answer is the smallest separating vertex set, plus one for
  // a direct edge that no vertex removal can cut.
  std::vector<VertexId> inner;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (v != src && v != sink) inner.push_back(v);
  auto separated = [&] { return !reach(g, src, sink, blocked, direct); };
  unsigned cut = 3;
  if (separated()) {
    cut = 0;
  } else {
    for (std::size_t i = 0; i < inner.size() && cut > 1; ++i) {
      blocked[inner[i]] = 1;
      if (separated()) cut = 1;
      for (std::size_t j = i + 1; j < inner.size() && cut > 2; ++j) {
        blocked[inner[j]] = 1;
        if (separated()) cut = 2;
        blocked[inner[j]] = 0;
      }
      blocked[inner[i]] = 0;
    }
  }
  return std::min(3u, cut + (direct ? 1u : 0u));
}

Graph random_dag(std::size_t n, double edge_density, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_dag needs at least two vertices");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  // Layer of each vertex; 0 holds only the source, the last only the root.
  std::vector<std::size_t> layer(n, 0);
  std::size_t current = 0, left_in_layer = 0;
  for (std::size_t v = 1; v + 1 < n; ++v) {
    if (left_in_layer == 0) {
      ++current;
      left_in_layer = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    }
    layer[v] = current;
    --left_in_layer;
  }
  layer[n - 1] = current + 1;

  Graph::Builder b;
  for (std::size_t v = 0; v < n; ++v)
    b.add_vertex("", v == 0 ? VertexKind::input : (v + 1 == n ? VertexKind::output : VertexKind::gate));
  std::vector<std::uint8_t> has_out(n, 0), has_in(n, 0);
  auto connect = [&](std::size_t x, std::size_t y) {
    b.add_edge(static_cast<VertexId>(x), static_cast<VertexId>(y));
    has_out[x] = has_in[y] = 1;
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (layer[x] < layer[y] && coin(rng) < edge_density) connect(x, y);
  for (std::size_t y = 1; y < n; ++y) {
    if (has_in[y]) continue;
    std::size_t earlier = 0;
    while (earlier < n && layer[earlier] < layer[y]) ++earlier;
    connect(std::uniform_int_distribution<std::size_t>(0, earlier - 1)(rng), y);
  }
  for (std::size_t x = 0; x + 1 < n; ++x) {
    if (has_out[x]) continue;
    std::size_t later = x + 1;
    while (layer[later] == layer[x]) ++later;
    const std::size_t y = std::uniform_int_distribution<std::size_t>(later, n - 1)(rng);
    connect(x, y);
  }
  b.set_root(static_cast<VertexId>(n - 1));
  return std::move(b).build();
}

Graph layered_dag(std::size_t layers, std::size_t width, unsigned fanout, std::uint64_t seed) {
  if (layers == 0 || width == 0 || fanout == 0) throw std::invalid_argument("layered_dag needs a non-empty shape");
  std::mt19937_64 rng(seed);
  const std::size_t n = layers * width + 2;
  const VertexId source = 0;
  const auto root = static_cast<VertexId>(n - 1);
  auto at = [&](std::size_t l, std::size_t k) { return static_cast<VertexId>(1 + l * width + k); };

  Graph::Builder b;
  for (std::size_t v = 0; v < n; ++v)
    b.add_vertex("", v == 0 ? VertexKind::input : (v + 1 == n ? VertexKind::output : VertexKind::gate));
  std::vector<std::uint8_t> has_in(n, 0);
  for (std::size_t k = 0; k < width; ++k) {
    b.add_edge(source, at(0, k));
    has_in[at(0, k)] = 1;
  }
  for (std::size_t l = 0; l + 1 < layers; ++l) {
    const std::size_t span = std::min<std::size_t>(2, layers - 1 - l) * width;
    std::uniform_int_distribution<std::size_t> pick(0, span - 1);
    for (std::size_t k = 0; k < width; ++k) {
      for (unsigned e = 0; e < fanout; ++e) {
        const std::size_t off = pick(rng);
        const VertexId y = at(l + 1 + off / width, off % width);
        if (b.add_edge_if_absent(at(l, k), y)) has_in[y] = 1;
      }
    }
  }
  for (std::size_t k = 0; k < width; ++k) b.add_edge(at(layers - 1, k), root);
  // Orphans of the random wiring hang off the previous layer.
  for (std::size_t l = 1; l < layers; ++l)
    for (std::size_t k = 0; k < width; ++k)
      if (!has_in[at(l, k)]) b.add_edge_if_absent(at(l - 1, k), at(l, k));
  b.set_root(root);
  return std::move(b).build();
}

Graph random_circuit(std::size_t inputs, std::size_t layers, std::size_t width, std::uint64_t seed) {
  if (inputs < 2 || layers == 0 || width == 0) throw std::invalid_argument("random_circuit needs two inputs and a gate layer");
  std::mt19937_64 rng(seed);
  Graph::Builder b;
  std::vector<std::vector<VertexId>> level{{}};
  for (std::size_t k = 0; k < inputs; ++k) level[0].push_back(b.add_vertex("i" + std::to_string(k), VertexKind::input));
  std::vector<std::uint8_t> has_out(inputs + layers * width, 0);
  for (std::size_t l = 1; l <= layers; ++l) {
    std::vector<VertexId> pool = level[l - 1];
    if (l >= 2) pool.insert(pool.end(), level[l - 2].begin(), level[l - 2].end());
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    level.emplace_back();
    for (std::size_t k = 0; k < width; ++k) {
      const VertexId g = b.add_vertex("g" + std::to_string(l) + "_" + std::to_string(k), VertexKind::gate);
      const VertexId x = pool[pick(rng)];
      VertexId y = pool[pick(rng)];
      while (pool.size() > 1 && y == x) y = pool[pick(rng)];
      b.add_edge(x, g);
      b.add_edge_if_absent(y, g);
      has_out[x] = has_out[y] = 1;
      level.back().push_back(g);
    }
  }
  const VertexId root = b.add_vertex("@root", VertexKind::virtual_root);
  for (VertexId v = static_cast<VertexId>(inputs); v < root; ++v)
    if (!has_out[v] || v >= root - width) {
      b.add_output(v);
      b.add_edge(v, root);
    }
  b.set_root(root);
  return std::move(b).build();
}

}  // namespace ddom::oracle
