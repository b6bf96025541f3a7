#pragma once

#include <cstddef>

#include "ddom/graph.hpp"

namespace ddom {

/// Circuit-level dominator counts. Every output cone is analysed on its own;
/// within a cone a dominator shared by several inputs is counted once, and
/// the per-cone counts are summed.
struct CircuitStats {
  std::size_t inputs = 0;
  std::size_t outputs = 0;
  std::size_t gates = 0;
  std::size_t single_doms = 0;         // excluding each input and the cone root
  std::size_t double_doms = 0;         // distinct pairs
  std::size_t useful_double_doms = 0;  // pairs dominating at least three inputs
  bool operator==(const CircuitStats&) const = default;
};

enum class Execution { serial, parallel };

/// The parallel path splits each cone's inputs across OpenMP threads and
/// merges in input order, so both paths return identical results.
CircuitStats circuit_stats(const Graph& g, Execution exec = Execution::parallel);

}  // namespace ddom
