#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ddom/graph.hpp"
#include "ddom/io.hpp"
#include "ddom/pairs.hpp"

namespace fixtures {

inline const char* const kDiamond = R"(v u
v a
v b
v r
e u a
e u b
e a r
e b r
root r
)";

inline const char* const kChain = "v u\nv a\nv r\ne u a\ne a r\nroot r\n";

inline const char* const kTripleFan = R"(v u
v a
v b
v c
v r
e u a
e u b
e u c
e a r
e b r
e c r
root r
)";

// Two rungs with one cross edge a1 -> b2.
inline const char* const kLadder = R"(v u
v a1
v a2
v b1
v b2
v r
e u a1
e u b1
e a1 a2
e b1 b2
e a1 b2
e a2 r
e b2 r
root r
)";

// a1 -> a3 bypasses a2.
inline const char* const kSkip = R"(v u
v a1
v a2
v a3
v b
v r
e u a1
e a1 a2
e a2 a3
e a3 r
e u b
e b r
e a1 a3
root r
)";

// Two diamonds in series joined at m.
inline const char* const kSeriesDiamond = R"(v u
v a
v b
v m
v c
v d
v r
e u a
e u b
e a m
e b m
e m c
e m d
e c r
e d r
root r
)";

// Two sources feeding shared reconvergent logic:
// n dominates e, p dominates h, f dominates g.
inline const char* const kTwoLevel = R"(v a
v b
v c
v d
v e
v g
v h
v i
v j
v k
v l
v m
v f
v n
v p
v out
e a b
e b e
e b h
e c g
e d h
e e j
e e k
e g k
e g l
e j n
e k f
e l f
e f n
e h p
e n out
e p out
e i l
e m p
root out
)";

// The twelve pairs of the worked cluster example.
inline std::vector<std::pair<std::string, std::string>> worked_example_pairs() {
  return {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"e", "c"}, {"e", "d"}, {"h", "c"},
          {"h", "d"}, {"h", "g"}, {"k", "l"}, {"m", "l"}, {"k", "n"}, {"m", "n"}};
}

inline ddom::Graph load(const char* text) { return ddom::parse_edge_list(text); }

inline ddom::VertexId id(const ddom::Graph& g, const std::string& name) { return *g.find(name); }

inline ddom::PairSet named_pairs(const ddom::Graph& g, const std::vector<std::pair<std::string, std::string>>& pairs) {
  ddom::PairSet out;
  for (const auto& [a, b] : pairs) out.emplace_back(id(g, a), id(g, b));
  return ddom::normalize(std::move(out));
}

inline std::vector<std::string> names(const ddom::Graph& g, const std::vector<ddom::VertexId>& vs) {
  std::vector<std::string> out;
  for (auto v : vs) out.push_back(g.name(v));
  return out;
}

}  // namespace fixtures
