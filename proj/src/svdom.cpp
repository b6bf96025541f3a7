#include "ddom/svdom.hpp"

#include <stdexcept>
#include <utility>

namespace ddom {

bool DominatorTree::dominates(VertexId a, VertexId b) const {
  if (!reaches_root(b)) return false;
  for (VertexId v = b;; v = idom_[v]) {
    if (v == a) return true;
    if (v == root_) return false;
  }
}

DominatorTree compute_dominator_tree(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const VertexId root = g.root();

  // Preorder numbering of the reversed graph (successors are fanins);
  // numbers are 1-based, 0 marks unvisited.
  std::vector<std::uint32_t> number(n, 0);
  std::vector<VertexId> vertex_at{kNoVertex};
  std::vector<std::uint32_t> parent{0};
  vertex_at.reserve(n + 1);
  parent.reserve(n + 1);
  {
    std::vector<std::pair<VertexId, std::uint32_t>> stack;  // vertex, next fanin slot
    number[root] = 1;
    vertex_at.push_back(root);
    parent.push_back(0);
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto& [v, slot] = stack.back();
      auto preds = g.fanin(v);
      if (slot == preds.size()) {
        stack.pop_back();
        continue;
      }
      const VertexId w = preds[slot++];
      if (number[w]) continue;
      number[w] = static_cast<std::uint32_t>(vertex_at.size());
      parent.push_back(number[v]);
      vertex_at.push_back(w);
      stack.emplace_back(w, 0);
    }
  }
  const auto count = static_cast<std::uint32_t>(vertex_at.size() - 1);

  std::vector<std::uint32_t> semi(count + 1), label(count + 1), ancestor(count + 1, 0), idom(count + 1, 0);
  for (std::uint32_t i = 0; i <= count; ++i) semi[i] = label[i] = i;

  // Path compression over the link forest; iterative to survive long chains.
  std::vector<std::uint32_t> path;
  auto eval = [&](std::uint32_t v) {
    if (ancestor[v] == 0) return v;
    path.clear();
    for (std::uint32_t x = v; ancestor[ancestor[x]] != 0; x = ancestor[x]) path.push_back(x);
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      const std::uint32_t x = *it;
      const std::uint32_t a = ancestor[x];
      if (semi[label[a]] < semi[label[x]]) label[x] = label[a];
      ancestor[x] = ancestor[a];
    }
    return label[v];
  };

  for (std::uint32_t i = count; i >= 2; --i) {
    // Predecessors in the reversed graph are fanouts.
    for (VertexId p : g.fanout(vertex_at[i])) {
      const std::uint32_t j = number[p];
      if (j == 0) continue;
      const std::uint32_t u = eval(j);
      if (semi[u] < semi[i]) semi[i] = semi[u];
    }
    ancestor[i] = parent[i];
  }
  for (std::uint32_t i = 2; i <= count; ++i) {
    std::uint32_t d = parent[i];
    while (d > semi[i]) d = idom[d];
    idom[i] = d;
  }

  std::vector<VertexId> result(n, kNoVertex);
  for (std::uint32_t i = 2; i <= count; ++i) result[vertex_at[i]] = vertex_at[idom[i]];
  return DominatorTree(root, std::move(result));
}

std::vector<VertexId> single_dominator_chain(const DominatorTree& t, VertexId u) {
  if (!t.reaches_root(u)) throw std::invalid_argument("vertex does not reach the root");
  std::vector<VertexId> chain{u};
  while (chain.back() != t.root()) chain.push_back(*t.idom(chain.back()));
  return chain;
}

}  // namespace ddom
