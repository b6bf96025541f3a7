#include <map>
#include <set>

#include "ddom/io.hpp"
#include "ddom/oracle.hpp"
#include "ddom/stats.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace ddom;

namespace {

// The same counting rules evaluated with the brute-force oracle.
CircuitStats oracle_stats(const Graph& g) {
  CircuitStats st;
  st.inputs = primary_inputs(g).size();
  st.outputs = g.outputs().size();
  for (VertexId v = 0; v < g.num_vertices(); ++v) st.gates += g.kind(v) == VertexKind::gate;
  for (VertexId out : g.outputs()) {
    const Graph cone = extract_cone(g, out);
    std::set<VertexId> singles;
    std::map<VertexPair, std::size_t> pairs;
    for (VertexId in : primary_inputs(cone)) {
      if (in == cone.root()) continue;
      for (VertexId s : oracle::single(cone, in)) singles.insert(s);
      for (const auto& p : oracle::double_vertex(cone, in)) ++pairs[p];
    }
    st.single_doms += singles.size();
    st.double_doms += pairs.size();
    for (const auto& [p, n] : pairs) st.useful_double_doms += n >= 3;
  }
  return st;
}

}  // namespace

TEST_CASE("stats: small graphs") {
  const CircuitStats d = circuit_stats(fixtures::load(fixtures::kDiamond));
  CHECK(d.inputs == 1);
  CHECK(d.outputs == 1);
  CHECK(d.single_doms == 0);
  CHECK(d.double_doms == 1);
  CHECK(d.useful_double_doms == 0);

  const CircuitStats sd = circuit_stats(fixtures::load(fixtures::kSeriesDiamond));
  CHECK(sd.single_doms == 1);
  CHECK(sd.double_doms == 2);
}

TEST_CASE("stats: a tree of AND gates has no double dominators") {
  // ((i0 & i1) & i2)
  const Graph g = parse_aiger_ascii("aag 5 3 0 1 2\n2\n4\n6\n10\n8 2 4\n10 8 6\n");
  const CircuitStats st = circuit_stats(g);
  CHECK(st.inputs == 3);
  CHECK(st.gates == 2);
  CHECK(st.double_doms == 0);
  CHECK(st.single_doms == 1);
  CHECK(st == oracle_stats(g));
}

TEST_CASE("stats: a pair shared by three inputs is useful") {
  const Graph g = parse_edge_list(
      "v i0 input\nv i1 input\nv i2 input\nv x\nv a\nv b\nv r output\n"
      "e i0 x\ne i1 x\ne i2 x\ne x a\ne x b\ne a r\ne b r\nroot r\n");
  const CircuitStats st = circuit_stats(g);
  CHECK(st.double_doms == 1);
  CHECK(st.useful_double_doms == 1);
  CHECK(st.single_doms == 1);
  CHECK(st == oracle_stats(g));
}

TEST_CASE("stats: serial, parallel and oracle agree on random circuits") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const Graph g = oracle::random_circuit(4 + seed % 5, 3 + seed % 4, 4 + seed % 3, seed);
    const CircuitStats serial = circuit_stats(g, Execution::serial);
    CHECK(serial == circuit_stats(g, Execution::parallel));
    CHECK(serial == oracle_stats(g));
  }
}
