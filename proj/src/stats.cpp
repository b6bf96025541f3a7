#include "ddom/stats.hpp"

#include <algorithm>
#include <map>

#include "ddom/chain_query.hpp"
#include "ddom/dominator_chain.hpp"

namespace ddom {

namespace {

struct InputResult {
  std::vector<VertexId> singles;
  PairSet pairs;
};

InputResult analyse(ChainBuilder& builder, VertexId input) {
  const DominatorChain c = builder.build(input);
  InputResult r;
  r.singles.assign(c.single_chain.begin() + 1, c.single_chain.end() - 1);
  r.pairs = pair_set(c);
  return r;
}

}  // namespace

CircuitStats circuit_stats(const Graph& g, Execution exec) {
  CircuitStats st;
  st.inputs = primary_inputs(g).size();
  st.outputs = g.outputs().size();
  for (VertexId v = 0; v < g.num_vertices(); ++v) st.gates += g.kind(v) == VertexKind::gate;

  for (VertexId out : g.outputs()) {
    const Graph cone = extract_cone(g, out);
    std::vector<VertexId> inputs;
    for (VertexId v : primary_inputs(cone))
      if (v != cone.root()) inputs.push_back(v);
    const DominatorTree tree = compute_dominator_tree(cone);
    std::vector<InputResult> results(inputs.size());

    if (exec == Execution::serial) {
      ChainBuilder builder(cone, tree);
      for (std::size_t k = 0; k < inputs.size(); ++k) results[k] = analyse(builder, inputs[k]);
    } else {
      const auto count = static_cast<std::int64_t>(inputs.size());
#pragma omp parallel
      {
        ChainBuilder builder(cone, tree);
#pragma omp for schedule(dynamic, 4)
        for (std::int64_t k = 0; k < count; ++k) results[k] = analyse(builder, inputs[k]);
      }
    }

    std::vector<std::uint8_t> single_seen(cone.num_vertices(), 0);
    std::map<VertexPair, std::size_t> dominated_inputs;
    for (const auto& r : results) {
      for (VertexId v : r.singles) single_seen[v] = 1;
      for (const auto& p : r.pairs) ++dominated_inputs[p];
    }
    st.single_doms += static_cast<std::size_t>(std::count(single_seen.begin(), single_seen.end(), 1));
    st.double_doms += dominated_inputs.size();
    for (const auto& [pair, n] : dominated_inputs) st.useful_double_doms += n >= 3;
  }
  return st;
}

}  // namespace ddom
