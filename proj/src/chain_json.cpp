#include "ddom/chain_json.hpp"

#include <sstream>

#include "json.hpp"

namespace ddom {

using nlohmann::ordered_json;

namespace {

ordered_json name_or_null(VertexId v, std::span<const std::string> names) {
  return v == kNoVertex ? ordered_json(nullptr) : ordered_json(names[v]);
}

ordered_json names_of(const std::vector<ChainVertex>& list, std::span<const std::string> names) {
  auto out = ordered_json::array();
  for (const auto& v : list) out.push_back(names[v.vertex]);
  return out;
}

}  // namespace

std::string chain_json(const DominatorChain& c, std::span<const std::string> names) {
  ordered_json j;
  j["source"] = name_or_null(c.source, names);
  j["root"] = name_or_null(c.root, names);
  auto single = ordered_json::array();
  for (VertexId v : c.single_chain) single.push_back(names[v]);
  j["single_chain"] = std::move(single);

  auto segments = ordered_json::array();
  for (const auto& seg : c.segments) {
    ordered_json s;
    s["left"] = names_of(seg.left, names);
    s["right"] = names_of(seg.right, names);
    auto windows = ordered_json::object();
    for (const auto* side : {&seg.left, &seg.right})
      for (const auto& v : *side) windows[names[v.vertex]] = {{"min", v.min}, {"max", v.max}};
    s["windows"] = std::move(windows);
    auto clusters = ordered_json::array();
    for (const auto& cl : seg.clusters) {
      auto l = ordered_json::array(), r = ordered_json::array();
      for (auto k = cl.l_first; k <= cl.l_last; ++k) l.push_back(names[seg.left[k - 1].vertex]);
      for (auto k = cl.r_first; k <= cl.r_last; ++k) r.push_back(names[seg.right[k - 1].vertex]);
      clusters.push_back({{"l", std::move(l)}, {"r", std::move(r)}});
    }
    s["clusters"] = std::move(clusters);
    segments.push_back(std::move(s));
  }
  j["segments"] = std::move(segments);
  j["pair_count"] = c.pair_count();
  return j.dump(2) + "\n";
}

std::string chain_text(const DominatorChain& c, std::span<const std::string> names) {
  std::ostringstream out;
  auto name = [&](VertexId v) { return v == kNoVertex ? std::string("-") : names[v]; };
  out << "source " << name(c.source) << "\nroot " << name(c.root) << "\nsingle_chain";
  for (VertexId v : c.single_chain) out << ' ' << names[v];
  out << '\n';
  for (const auto& seg : c.segments) {
    out << "segment " << name(seg.source) << " -> " << name(seg.sink) << '\n';
    if (seg.empty()) continue;
    for (const auto& [label, list] : {std::pair{"left ", &seg.left}, std::pair{"right", &seg.right}}) {
      out << "  " << label;
      for (const auto& v : *list) out << ' ' << names[v.vertex] << '[' << v.min << ',' << v.max << ']';
      out << '\n';
    }
    for (const auto& cl : seg.clusters) {
      out << "  cluster (";
      for (auto k = cl.l_first; k <= cl.l_last; ++k) out << (k == cl.l_first ? "" : ",") << names[seg.left[k - 1].vertex];
      out << ") (";
      for (auto k = cl.r_first; k <= cl.r_last; ++k) out << (k == cl.r_first ? "" : ",") << names[seg.right[k - 1].vertex];
      out << ")\n";
    }
  }
  out << "pairs " << c.pair_count() << '\n';
  return out.str();
}

}  // namespace ddom
