#include <algorithm>
#include <iterator>

#include "ddom/chain_query.hpp"
#include "ddom/dominator_chain.hpp"
#include "ddom/oracle.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace ddom;
using fixtures::id;

namespace {

Path path(const Graph& g, std::initializer_list<const char*> names) {
  Path p;
  for (const char* n : names) p.vertices.push_back(id(g, n));
  return p;
}

std::vector<std::string> listed(const Graph& g, const std::vector<ChainVertex>& list) {
  std::vector<std::string> out;
  for (const auto& cv : list) out.push_back(g.name(cv.vertex));
  return out;
}

struct Sweep {
  PathFields f1, f2;
};

Sweep sweep(const Graph& g, const Path& p1, const Path& p2) {
  SweepScratch s(g.num_vertices());
  const auto a = static_cast<std::uint32_t>(p1.size());
  const auto b = static_cast<std::uint32_t>(p2.size());
  Sweep r;
  r.f1.reset(a, b);
  r.f2.reset(b, a);
  assign_min_max(g, p1, p2, r.f1, r.f2, s, {});
  assign_min_max(g, p2, p1, r.f2, r.f1, s, {});
  return r;
}

// v_i (1-based position) is prime when no path disjoint from both paths
// leads from an earlier vertex of p1 to a later one.
bool brute_prime(const Graph& g, const Path& p1, const Path& p2, std::size_t i) {
  std::vector<VertexId> blocked(p2.non_terminals().begin(), p2.non_terminals().end());
  for (std::size_t k = 1; k + 1 < p1.size(); ++k) blocked.push_back(p1.vertices[k]);
  for (std::size_t x = 0; x + 1 < i; ++x)
    for (std::size_t y = i; y < p1.size(); ++y) {
      const VertexId from = p1.vertices[x], to = p1.vertices[y];
      for (VertexId next : g.fanout(from)) {
        if (next == to) {
          if (y != x + 1) return false;
          continue;
        }
        if (std::find(blocked.begin(), blocked.end(), next) != blocked.end()) continue;
        std::vector<VertexId> excl;
        std::copy_if(blocked.begin(), blocked.end(), std::back_inserter(excl), [&](VertexId v) { return v != to; });
        if (oracle::reaches_excluding(g, next, to, excl)) return false;
      }
    }
  return true;
}

}  // namespace

TEST_CASE("assign_min_max: bypassed vertex is not prime") {
  const Graph g = fixtures::load(fixtures::kSkip);
  const Path p1 = path(g, {"u", "a1", "a2", "a3", "r"});
  const Path p2 = path(g, {"u", "b", "r"});
  const Sweep s = sweep(g, p1, p2);
  CHECK(s.f1.prime[2] == 1);
  CHECK(s.f1.prime[3] == 0);
  CHECK(s.f1.min[3] == p2.size());
  CHECK(s.f1.prime[4] == 1);
  for (std::size_t i = 2; i <= 4; ++i) CHECK((s.f1.prime[i] != 0) == brute_prime(g, p1, p2, i));
}

TEST_CASE("assign_min_max: primes agree with path enumeration") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const Graph g = oracle::random_dag(5 + seed % 14, 0.3, seed);
    const auto paths = find_disjoint_paths(g, 0, g.root(), 3);
    if (paths.size() != 2 || paths[0].size() == 2 || paths[1].size() == 2) continue;
    const Sweep s = sweep(g, paths[0], paths[1]);
    for (std::size_t i = 2; i < paths[0].size(); ++i)
      CHECK((s.f1.prime[i] != 0) == brute_prime(g, paths[0], paths[1], i));
    for (std::size_t j = 2; j < paths[1].size(); ++j)
      CHECK((s.f2.prime[j] != 0) == brute_prime(g, paths[1], paths[0], j));
  }
}

TEST_CASE("find_reachable") {
  const Graph skip = fixtures::load(fixtures::kSkip);
  const Path s1 = path(skip, {"u", "a1", "a2", "a3", "r"});
  const Path s2 = path(skip, {"u", "b", "r"});
  SweepScratch s(skip.num_vertices());
  s.bind(s1, s2);
  find_reachable(skip, id(skip, "a1"), s, {});
  CHECK(s.new_reached_self == 4);
  s.unbind();

  const Graph d = fixtures::load(fixtures::kDiamond);
  const Path d1 = path(d, {"u", "a", "r"});
  const Path d2 = path(d, {"u", "b", "r"});
  SweepScratch sd(d.num_vertices());
  sd.bind(d1, d2);
  find_reachable(d, id(d, "a"), sd, {});
  CHECK(sd.new_reached_self == d1.size());  // only the sink sentinel
  CHECK(sd.new_reached_other == d2.size());
  CHECK(sd.marked_list.empty());
  sd.unbind();

  const Graph l = fixtures::load(fixtures::kLadder);
  const Path l1 = path(l, {"u", "a1", "a2", "r"});
  const Path l2 = path(l, {"u", "b1", "b2", "r"});
  SweepScratch sl(l.num_vertices());
  sl.bind(l1, l2);
  find_reachable(l, id(l, "a1"), sl, {});
  CHECK(sl.new_reached_other == 3);
  sl.unbind();

  // Off-path vertices are marked once and the detour is followed.
  const Graph h = parse_edge_list("v u\nv a1\nv a2\nv b\nv x\nv r\ne u a1\ne a1 a2\ne a2 r\ne u b\ne b r\ne a1 x\ne x r\nroot r\n");
  const Path h1 = path(h, {"u", "a1", "a2", "r"});
  const Path h2 = path(h, {"u", "b", "r"});
  SweepScratch sh(h.num_vertices());
  sh.bind(h1, h2);
  find_reachable(h, id(h, "a1"), sh, {});
  CHECK(sh.marked_list == std::vector<VertexId>{id(h, "x")});
  CHECK(sh.new_reached_other == h2.size());
}

TEST_CASE("construct_vector and convert_min_max") {
  const Graph g = fixtures::load(fixtures::kSkip);
  const Path p1 = path(g, {"u", "a1", "a2", "a3", "r"});
  const Path p2 = path(g, {"u", "b", "r"});
  const Sweep s = sweep(g, p1, p2);
  auto left = construct_vector(p1, p2, s.f1, s.f2);
  auto right = construct_vector(p2, p1, s.f2, s.f1);
  CHECK(listed(g, left) == std::vector<std::string>{"a1", "a3"});
  CHECK(listed(g, right) == std::vector<std::string>{"b"});
  REQUIRE(right.size() == 1);
  CHECK(right[0].min == 2);  // a1's position
  CHECK(right[0].max == 4);  // a3's position
  convert_min_max(right, p1, left);
  CHECK(right[0] == ChainVertex{id(g, "b"), 1, 2});

  const Graph l = fixtures::load(fixtures::kLadder);
  const Path l1 = path(l, {"u", "a1", "a2", "r"});
  const Path l2 = path(l, {"u", "b1", "b2", "r"});
  const Sweep sl = sweep(l, l1, l2);
  auto ll = construct_vector(l1, l2, sl.f1, sl.f2);
  auto lr = construct_vector(l2, l1, sl.f2, sl.f1);
  REQUIRE(ll.size() == 2);
  CHECK(ll[0].min == 2);
  CHECK(ll[0].max == 3);
  convert_min_max(ll, l2, lr);
  convert_min_max(lr, l1, ll);
  CHECK(ll[0] == ChainVertex{id(l, "a1"), 1, 2});
  CHECK(ll[1] == ChainVertex{id(l, "a2"), 2, 2});
  CHECK(listed(l, lr) == std::vector<std::string>{"b1", "b2"});

  // A singleton window stays a single index.
  const Graph d = fixtures::load(fixtures::kDiamond);
  const Path d1 = path(d, {"u", "a", "r"});
  const Path d2 = path(d, {"u", "b", "r"});
  const Sweep sd = sweep(d, d1, d2);
  auto dl = construct_vector(d1, d2, sd.f1, sd.f2);
  auto dr = construct_vector(d2, d1, sd.f2, sd.f1);
  convert_min_max(dl, d2, dr);
  CHECK(dl == std::vector<ChainVertex>{{id(d, "a"), 1, 1}});
}

TEST_CASE("construct_clusters") {
  // Matching vectors of the worked example, as chain indices.
  const std::vector<ChainVertex> left{{0, 1, 3}, {1, 2, 3}, {2, 2, 4}, {3, 5, 6}, {4, 5, 6}};
  const std::vector<ChainVertex> right{{5, 1, 1}, {6, 1, 3}, {7, 1, 3}, {8, 3, 3}, {9, 4, 5}, {10, 4, 5}};
  CHECK(construct_clusters(left, right) == std::vector<Cluster>{{1, 3, 1, 4}, {4, 5, 5, 6}});

  const std::vector<ChainVertex> ll{{0, 1, 2}, {1, 2, 2}};
  const std::vector<ChainVertex> lr{{2, 1, 1}, {3, 1, 2}};
  CHECK(construct_clusters(ll, lr) == std::vector<Cluster>{{1, 2, 1, 2}});

  CHECK(construct_clusters({}, {}).empty());
}

TEST_CASE("segment_chain") {
  const Graph t = fixtures::load(fixtures::kTripleFan);
  CHECK(segment_chain(t, id(t, "u"), t.root()).empty());

  const Graph l = fixtures::load(fixtures::kLadder);
  const SegmentChain sl = segment_chain(l, id(l, "u"), l.root());
  CHECK(listed(l, sl.left) == std::vector<std::string>{"a1", "a2"});
  CHECK(listed(l, sl.right) == std::vector<std::string>{"b1", "b2"});
  CHECK(sl.pair_count() == 3);

  const Graph d = fixtures::load(fixtures::kDiamond);
  const SegmentChain sd = segment_chain(d, id(d, "u"), d.root());
  CHECK(sd.pair_count() == 1);
  CHECK(sd.clusters == std::vector<Cluster>{{1, 1, 1, 1}});

  const Graph sdg = fixtures::load(fixtures::kSeriesDiamond);
  CHECK_THROWS_AS(segment_chain(sdg, id(sdg, "u"), sdg.root()), std::invalid_argument);
  CHECK_THROWS_AS(segment_chain(d, d.root(), id(d, "u")), std::invalid_argument);
}

TEST_CASE("dominator_chain") {
  const Graph sd = fixtures::load(fixtures::kSeriesDiamond);
  const DominatorChain c = dominator_chain(sd, id(sd, "u"));
  CHECK(fixtures::names(sd, c.single_chain) == std::vector<std::string>{"u", "m", "r"});
  REQUIRE(c.segments.size() == 2);
  CHECK(listed(sd, c.segments[0].left) == std::vector<std::string>{"a"});
  CHECK(listed(sd, c.segments[0].right) == std::vector<std::string>{"b"});
  CHECK(listed(sd, c.segments[1].left) == std::vector<std::string>{"c"});
  CHECK(listed(sd, c.segments[1].right) == std::vector<std::string>{"d"});
  CHECK(pair_set(c) == fixtures::named_pairs(sd, {{"a", "b"}, {"c", "d"}}));

  const Graph d = fixtures::load(fixtures::kDiamond);
  const DominatorChain cd = dominator_chain(d, id(d, "u"));
  CHECK(cd.single_chain.size() == 2);
  CHECK(cd.segments.size() == 1);
  CHECK(pair_set(cd) == fixtures::named_pairs(d, {{"a", "b"}}));

  const Graph ch = fixtures::load(fixtures::kChain);
  const DominatorChain cc = dominator_chain(ch, id(ch, "u"));
  CHECK(cc.single_chain.size() == 3);
  CHECK(cc.segments.size() == 2);
  CHECK(cc.segments[0].empty());
  CHECK(cc.segments[1].empty());
  CHECK(cc.pair_count() == 0);

  CHECK_THROWS_AS(dominator_chain(d, d.root()), std::invalid_argument);
  const Graph dangling = parse_edge_list("v u\nv x\nv r\ne u r\ne u x\nroot r\n");
  CHECK_THROWS_AS(dominator_chain(dangling, id(dangling, "x")), std::invalid_argument);
}

TEST_CASE("oracle equivalence, locality and linear size on random DAGs") {
  std::size_t nonempty = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Graph g = oracle::random_dag(3 + seed % 38, 0.1 + 0.1 * static_cast<double>(seed % 5), seed);
    ChainBuilder builder(g);
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
      if (u == g.root()) continue;
      const DominatorChain c = builder.build(u);
      const PairSet expected = oracle::double_vertex(g, u);
      CHECK(pair_set(c) == expected);
      nonempty += !expected.empty();
      std::size_t listed_total = 0;
      for (std::size_t s = 0; s < c.segments.size(); ++s) {
        listed_total += c.segments[s].left.size() + c.segments[s].right.size();
        CHECK(c.segments[s].source == c.single_chain[s]);
        CHECK(c.segments[s].sink == c.single_chain[s + 1]);
      }
      CHECK(listed_total <= g.num_vertices());
    }
  }
  CHECK(nonempty > 200);
}

TEST_CASE("determinism") {
  const Graph g = oracle::random_dag(40, 0.2, 5);
  const Graph h = parse_edge_list(serialize_edge_list(g));
  for (VertexId u = 0; u + 1 < g.num_vertices(); ++u) {
    const DominatorChain a = dominator_chain(g, u);
    const DominatorChain b = dominator_chain(h, u);
    CHECK(a.single_chain == b.single_chain);
    REQUIRE(a.segments.size() == b.segments.size());
    for (std::size_t s = 0; s < a.segments.size(); ++s) {
      CHECK(a.segments[s].left == b.segments[s].left);
      CHECK(a.segments[s].right == b.segments[s].right);
      CHECK(a.segments[s].clusters == b.segments[s].clusters);
    }
  }
}
