#include "ddom/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ddom/chain_query.hpp"
#include "ddom/io.hpp"
#include "ddom/oracle.hpp"

namespace ddom {

namespace {

std::string pair_name(const Graph& g, VertexId v, VertexId w) { return "{" + g.name(v) + "," + g.name(w) + "}"; }

// Vertices that reach `sink` without entering a blocked vertex.
std::vector<std::uint8_t> reach_avoiding(const Graph& g, VertexId sink, VertexId x, VertexId y) {
  std::vector<std::uint8_t> seen(g.num_vertices(), 0);
  std::vector<VertexId> stack{sink};
  seen[sink] = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId p : g.fanin(v)) {
      if (seen[p] || p == x || p == y) continue;
      seen[p] = 1;
      stack.push_back(p);
    }
  }
  return seen;
}

std::vector<std::uint8_t> reachable_from(const Graph& g, VertexId src) {
  std::vector<std::uint8_t> seen(g.num_vertices(), 0);
  std::vector<VertexId> stack{src};
  seen[src] = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.fanout(v))
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return seen;
}

}  // namespace

DominanceTable::DominanceTable(const Graph& g, PairSet p, VertexId sink) : pairs(std::move(p)) {
  dominated.reserve(pairs.size());
  for (const auto& [v, w] : pairs) {
    auto escape = reach_avoiding(g, sink, v, w);
    for (auto& x : escape) x = !x;
    escape[v] = escape[w] = 1;
    dominated.push_back(std::move(escape));
  }
}

bool DominanceTable::dominates(std::size_t a, std::size_t b) const {
  return dominated[a][pairs[b].first] && dominated[a][pairs[b].second];
}

std::size_t DominanceTable::index_of(VertexId v, VertexId w) const {
  if (w < v) std::swap(v, w);
  auto it = std::lower_bound(pairs.begin(), pairs.end(), VertexPair{v, w});
  return it != pairs.end() && *it == VertexPair{v, w} ? static_cast<std::size_t>(it - pairs.begin()) : pairs.size();
}

namespace checks {

Failure single_chain(const Graph& g, const DominatorChain& c) {
  if (c.single_chain.empty() || c.single_chain.front() != c.source || c.single_chain.back() != g.root())
    return "single chain does not run from the source to the root";
  std::vector<VertexId> inner(c.single_chain.begin() + 1, c.single_chain.end() - 1);
  std::sort(inner.begin(), inner.end());
  const auto expected = oracle::single(g, c.source);
  if (inner != expected) {
    std::ostringstream os;
    os << "single dominators differ: computed " << inner.size() << ", reference " << expected.size();
    return os.str();
  }
  return std::nullopt;
}

Failure pair_set(const Graph& g, const PairSet& computed, const PairSet& expected) {
  for (const auto& [v, w] : expected)
    if (!contains(computed, v, w)) return "missing pair " + pair_name(g, v, w);
  for (const auto& [v, w] : computed)
    if (!contains(expected, v, w)) return "spurious pair " + pair_name(g, v, w);
  return std::nullopt;
}

Failure immediate_pair(const Graph& g, const DominatorChain& c, const DominanceTable& t) {
  const auto imm = immediate_double_dominator(c);
  if (t.pairs.empty()) return imm ? Failure("immediate pair reported for an empty set") : std::nullopt;
  std::vector<std::size_t> minimal;
  for (std::size_t p = 0; p < t.pairs.size(); ++p) {
    bool below_all = true;
    for (std::size_t q = 0; q < t.pairs.size() && below_all; ++q) below_all = t.dominates(q, p);
    if (below_all) minimal.push_back(p);
  }
  if (minimal.size() != 1) return "expected one pair dominated by all others, found " + std::to_string(minimal.size());
  if (!imm) return "no immediate pair reported";
  const auto& want = t.pairs[minimal[0]];
  if (t.index_of(imm->first, imm->second) != minimal[0])
    return "immediate pair " + pair_name(g, imm->first, imm->second) + " differs from " +
           pair_name(g, want.first, want.second);
  return std::nullopt;
}

namespace {

Failure staircase(const std::vector<ChainVertex>& list, std::size_t opposite_size, const char* side) {
  for (std::size_t k = 0; k < list.size(); ++k) {
    const auto& v = list[k];
    if (v.min < 1 || v.min > v.max || v.max > opposite_size) return std::string(side) + " window out of range";
    if (k && (v.min < list[k - 1].min || v.max < list[k - 1].max)) return std::string(side) + " windows are not a staircase";
  }
  return std::nullopt;
}

// Common elements of a and b, in a's order, must be a suffix of one and a
// prefix of the other.
bool overlap_law(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  std::vector<VertexId> common;
  for (VertexId x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) common.push_back(x);
  if (common.empty()) return true;
  auto is_prefix = [&](const std::vector<VertexId>& v) { return std::equal(common.begin(), common.end(), v.begin()); };
  auto is_suffix = [&](const std::vector<VertexId>& v) {
    return std::equal(common.begin(), common.end(), v.end() - static_cast<std::ptrdiff_t>(common.size()));
  };
  return (is_suffix(a) && is_prefix(b)) || (is_prefix(a) && is_suffix(b));
}

}  // namespace

Failure structure(const Graph& g, const DominatorChain& c, const PairSet& expected) {
  std::size_t listed = 0;
  std::vector<std::vector<std::uint8_t>> spans;
  for (std::size_t s = 0; s < c.segments.size(); ++s) {
    const auto& seg = c.segments[s];
    listed += seg.left.size() + seg.right.size();
    if (auto f = staircase(seg.left, seg.right.size(), "left")) return f;
    if (auto f = staircase(seg.right, seg.left.size(), "right")) return f;

    for (std::uint32_t i = 1; i <= seg.left.size(); ++i)
      for (std::uint32_t j = 1; j <= seg.right.size(); ++j) {
        const auto& v = seg.left[i - 1];
        const auto& w = seg.right[j - 1];
        if ((v.min <= j && j <= v.max) != (w.min <= i && i <= w.max))
          return "window symmetry fails for " + pair_name(g, v.vertex, w.vertex);
      }

    for (const auto* side : {&seg.left, &seg.right}) {
      for (std::size_t x = 0; x < side->size(); ++x)
        for (std::size_t y = x + 1; y < side->size(); ++y) {
          const auto mx = matching_vector(c, (*side)[x].vertex).partners;
          const auto my = matching_vector(c, (*side)[y].vertex).partners;
          if (!overlap_law(mx, my))
            return "matching vectors of " + g.name((*side)[x].vertex) + " and " + g.name((*side)[y].vertex) +
                   " overlap outside a suffix/prefix";
        }
    }

    std::uint32_t next_l = 1, next_r = 1;
    for (const auto& cl : seg.clusters) {
      if (cl.l_first != next_l || cl.r_first != next_r || cl.l_last < cl.l_first || cl.r_last < cl.r_first)
        return "clusters do not partition the segment";
      for (std::uint32_t k = cl.l_first; k <= cl.l_last; ++k)
        if (seg.left[k - 1].min < cl.r_first || seg.left[k - 1].max > cl.r_last) return "window crosses a cluster";
      for (std::uint32_t k = cl.r_first; k <= cl.r_last; ++k)
        if (seg.right[k - 1].min < cl.l_first || seg.right[k - 1].max > cl.l_last) return "window crosses a cluster";
      next_l = cl.l_last + 1;
      next_r = cl.r_last + 1;
    }
    if (next_l != seg.left.size() + 1 || next_r != seg.right.size() + 1) return "clusters do not cover the segment";

    auto span = reachable_from(g, seg.source);
    const auto to_sink = reaches(g, seg.sink);
    for (VertexId v = 0; v < g.num_vertices(); ++v) span[v] = span[v] && to_sink[v];
    span[seg.source] = span[seg.sink] = 0;
    for (const auto* side : {&seg.left, &seg.right})
      for (const auto& v : *side)
        if (!span[v.vertex]) return "listed vertex " + g.name(v.vertex) + " lies outside its segment";
    spans.push_back(std::move(span));
  }
  if (listed > g.num_vertices()) return "chain lists more vertices than the graph has";

  for (const auto& [v, w] : expected) {
    bool local = false;
    for (const auto& span : spans) local = local || (span[v] && span[w]);
    if (!local) return "reference pair " + pair_name(g, v, w) + " straddles a single dominator";
  }
  return std::nullopt;
}

Failure lemmas(const Graph& g, const DominanceTable& t) {
  const std::size_t k = t.pairs.size();
  auto name = [&](std::size_t p) { return pair_name(g, t.pairs[p].first, t.pairs[p].second); };
  for (std::size_t a = 0; a < k; ++a) {
    if (!t.dominates(a, a)) return "reflexivity fails for " + name(a);
    for (std::size_t b = 0; b < k; ++b) {
      if (a != b && t.dominates(a, b) && t.dominates(b, a)) return "antisymmetry fails for " + name(a) + ", " + name(b);
      if (!t.dominates(a, b)) continue;
      for (std::size_t c = 0; c < k; ++c)
        if (t.dominates(b, c) && !t.dominates(a, c))
          return "transitivity fails for " + name(a) + ", " + name(b) + ", " + name(c);
    }
  }

  auto dom_v = [&](std::size_t p, VertexId x) { return t.dominated[p][x] != 0; };
  auto has = [&](VertexId x, VertexId y) { return t.index_of(x, y) < k; };
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      const auto [a1, a2] = t.pairs[a];
      const auto [b1, b2] = t.pairs[b];
      const VertexId as[2][2] = {{a1, a2}, {a2, a1}};
      const VertexId bs[2][2] = {{b1, b2}, {b2, b1}};
      const bool shared = a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2;
      if (shared) {
        // Name them {v1,v2} and {v2,v3}.
        const VertexId v2 = (a1 == b1 || a1 == b2) ? a1 : a2;
        const VertexId v1 = v2 == a1 ? a2 : a1;
        const VertexId v3 = v2 == b1 ? b2 : b1;
        if (!dom_v(a, v3) && !dom_v(b, v1)) return "shared-vertex law fails for " + name(a) + ", " + name(b);
        continue;
      }
      for (const auto& o1 : as)
        for (const auto& o2 : bs) {
          const VertexId v1 = o1[0], v2 = o1[1], v3 = o2[0], v4 = o2[1];
          for (int swap = 0; swap < 2; ++swap) {
            // Pair A = {v1,v2} (index pa), pair B = {v3,v4} (index pb).
            const std::size_t pa = swap ? b : a, pb = swap ? a : b;
            const VertexId x1 = swap ? v3 : v1, x2 = swap ? v4 : v2, x3 = swap ? v1 : v3, x4 = swap ? v2 : v4;
            if (dom_v(pb, x1) || dom_v(pa, x4)) continue;
            if (!has(x1, x4) || !has(x2, x3)) return "swap law fails for " + name(a) + ", " + name(b);
            if (!dom_v(pb, x2) || !dom_v(pa, x3)) return "cross-dominance law fails for " + name(a) + ", " + name(b);
          }
        }
    }
  return std::nullopt;
}

Failure three_path_guard(const Graph& g, const DominatorChain& c, std::size_t* guarded) {
  for (const auto& seg : c.segments) {
    if (find_disjoint_paths(g, seg.source, seg.sink, 3).size() < 3) continue;
    if (guarded) ++*guarded;
    if (!seg.empty()) return "segment " + g.name(seg.source) + " -> " + g.name(seg.sink) + " has three paths but pairs";
    if (!oracle::double_vertex(g, seg.source, seg.sink).empty())
      return "reference finds pairs in segment " + g.name(seg.source) + " -> " + g.name(seg.sink);
  }
  return std::nullopt;
}

Failure query_agreement(const Graph& g, const DominatorChain& c) {
  const PairSet listed = ddom::pair_set(c);
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    for (VertexId w = 0; w < g.num_vertices(); ++w) {
      const bool q = is_double_dominator(c, v, w);
      if (q != contains(listed, v, w) || (v == w && q)) return "query disagrees with enumeration on " + pair_name(g, v, w);
    }
  return std::nullopt;
}

}  // namespace checks

Graph corpus_graph(std::uint64_t seed, std::size_t index, std::size_t max_vertices) {
  if (max_vertices < 3) max_vertices = 3;
  // splitmix64 step so neighbouring indices give unrelated graphs.
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + index + 1;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  const std::size_t n = 3 + static_cast<std::size_t>(z % (max_vertices - 2));
  const double density = 0.1 + 0.1 * static_cast<double>(index % 5);
  return oracle::random_dag(n, density, z);
}

std::optional<Counterexample> verify_instance(const Graph& g, std::span<const VertexId> sources, bool inject_fault,
                                              std::size_t* pair_total) {
  std::vector<VertexId> all;
  if (sources.empty()) {
    const auto live = reaches(g, g.root());
    for (VertexId v = 0; v < g.num_vertices(); ++v)
      if (v != g.root() && live[v]) all.push_back(v);
    sources = all;
  }
  ChainBuilder builder(g);
  for (VertexId u : sources) {
    auto fail = [&](const char* check, std::string detail) {
      return Counterexample{0, serialize_edge_list(g), g.name(u), check, std::move(detail)};
    };
    try {
      const DominatorChain c = builder.build(u);
      const PairSet expected = oracle::double_vertex(g, u);
      PairSet computed = pair_set(c);
      if (inject_fault && !computed.empty()) computed.pop_back();
      if (pair_total) *pair_total += expected.size();
      const DominanceTable table(g, expected, g.root());
      if (auto f = checks::single_chain(g, c)) return fail("single-chain", *f);
      if (auto f = checks::pair_set(g, computed, expected)) return fail("pair-set", *f);
      if (auto f = checks::immediate_pair(g, c, table)) return fail("immediate-pair", *f);
      if (auto f = checks::structure(g, c, expected)) return fail("structure", *f);
      if (auto f = checks::lemmas(g, table)) return fail("lemmas", *f);
      if (auto f = checks::three_path_guard(g, c)) return fail("three-path-guard", *f);
      if (auto f = checks::query_agreement(g, c)) return fail("query", *f);
    } catch (const std::exception& e) {
      return fail("exception", e.what());
    }
  }
  return std::nullopt;
}

VerifyReport verify_corpus(const VerifyOptions& opt) {
  std::vector<std::optional<Counterexample>> failures(opt.graphs);
  std::vector<std::size_t> sources(opt.graphs, 0), pairs(opt.graphs, 0);
  auto run = [&](std::size_t k) {
    const Graph g = corpus_graph(opt.seed, k, opt.max_vertices);
    sources[k] = g.num_vertices() - 1;
    failures[k] = verify_instance(g, {}, opt.inject_fault, &pairs[k]);
    if (failures[k]) failures[k]->graph_index = k;
  };
  if (opt.exec == Execution::serial) {
    for (std::size_t k = 0; k < opt.graphs; ++k) run(k);
  } else {
    const auto count = static_cast<std::int64_t>(opt.graphs);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t k = 0; k < count; ++k) run(static_cast<std::size_t>(k));
  }

  VerifyReport report;
  report.graphs = opt.graphs;
  for (std::size_t k = 0; k < opt.graphs; ++k) {
    report.sources += sources[k];
    report.pairs += pairs[k];
    if (!report.failure && failures[k]) report.failure = failures[k];
  }
  return report;
}

}  // namespace ddom
