#include <algorithm>

#include "ddom/oracle.hpp"
#include "ddom/svdom.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace ddom;
using fixtures::id;

TEST_CASE("compute_dominator_tree: small graphs") {
  const Graph chain = fixtures::load(fixtures::kChain);
  const DominatorTree tc = compute_dominator_tree(chain);
  CHECK(tc.idom(id(chain, "u")) == id(chain, "a"));
  CHECK(tc.idom(id(chain, "a")) == id(chain, "r"));
  CHECK_FALSE(tc.idom(chain.root()));

  const Graph d = fixtures::load(fixtures::kDiamond);
  const DominatorTree td = compute_dominator_tree(d);
  for (const char* v : {"u", "a", "b"}) CHECK(td.idom(id(d, v)) == d.root());
}

TEST_CASE("compute_dominator_tree: n dominates e, p dominates h") {
  const Graph g = fixtures::load(fixtures::kTwoLevel);
  const DominatorTree t = compute_dominator_tree(g);
  CHECK(t.idom(id(g, "e")) == id(g, "n"));
  CHECK(t.idom(id(g, "h")) == id(g, "p"));
  CHECK(t.dominates(id(g, "n"), id(g, "e")));
  CHECK(t.dominates(id(g, "p"), id(g, "h")));
  CHECK_FALSE(t.dominates(id(g, "n"), id(g, "h")));
}

TEST_CASE("single_dominator_chain") {
  const Graph d = fixtures::load(fixtures::kDiamond);
  CHECK(single_dominator_chain(compute_dominator_tree(d), id(d, "u")) == std::vector<VertexId>{id(d, "u"), d.root()});
  const Graph c = fixtures::load(fixtures::kChain);
  CHECK(fixtures::names(c, single_dominator_chain(compute_dominator_tree(c), id(c, "u"))) ==
        std::vector<std::string>{"u", "a", "r"});
  const Graph sd = fixtures::load(fixtures::kSeriesDiamond);
  CHECK(fixtures::names(sd, single_dominator_chain(compute_dominator_tree(sd), id(sd, "u"))) ==
        std::vector<std::string>{"u", "m", "r"});
  CHECK(oracle::single(sd, id(sd, "u")) == std::vector<VertexId>{id(sd, "m")});

  const Graph dangling = parse_edge_list("v u\nv x\nv r\ne u r\ne u x\nroot r\n");
  CHECK_THROWS_AS(single_dominator_chain(compute_dominator_tree(dangling), id(dangling, "x")), std::invalid_argument);
}

TEST_CASE("oracle agreement on random DAGs") {
  std::size_t checked = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Graph g = oracle::random_dag(3 + seed % 38, 0.1 + 0.1 * static_cast<double>(seed % 5), seed);
    const DominatorTree t = compute_dominator_tree(g);
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
      if (u == g.root()) continue;
      const auto chain = single_dominator_chain(t, u);
      std::vector<VertexId> inner(chain.begin() + 1, chain.end() - 1);
      std::sort(inner.begin(), inner.end());
      const auto expected = oracle::single(g, u);
      CHECK(inner == expected);
      // The immediate dominator is dominated by every other single dominator.
      if (!expected.empty()) {
        const VertexId im = chain[1];
        for (VertexId s : expected) {
          const VertexId a[] = {s}, b[] = {im};
          CHECK(oracle::dominates(g, a, b, g.root()));
        }
      }
      ++checked;
    }
  }
  CHECK(checked > 1000);
}
