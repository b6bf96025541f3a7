#pragma once

#include <span>
#include <string>

#include "ddom/dominator_chain.hpp"

namespace ddom {

/// Pretty-printed JSON (two-space indent, fixed key order):
/// {source, root, single_chain, segments: [{left, right, windows, clusters}], pair_count}.
/// `names` maps vertex ids to names; kNoVertex terminals become null.
std::string chain_json(const DominatorChain& c, std::span<const std::string> names);

/// Line-oriented human-readable rendering of the same content.
std::string chain_text(const DominatorChain& c, std::span<const std::string> names);

}  // namespace ddom
