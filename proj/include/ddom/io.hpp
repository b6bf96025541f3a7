#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ddom/graph.hpp"

namespace ddom {

class ParseError : public std::runtime_error {
 public:
  enum class Code { syntax, undeclared_vertex, duplicate, missing_root, cycle, header, latches, literal_range, io };

  /// line is 1-based; 0 when the problem is not tied to one line.
  ParseError(Code code, std::size_t line, const std::string& message);

  Code code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Code code_;
  std::size_t line_;
};

/// Parses the line-oriented .dag format:
///
///   # comment
///   v <name> [input|gate|output|virtual]
///   e <src> <dst>
///   root <name>
///
/// A vertex declared without a kind becomes `input` when it has no fanin and
/// `gate` otherwise. Vertices tagged `output` become the designated outputs.
Graph parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list; kinds are always written explicitly.
std::string serialize_edge_list(const Graph& g);

/// Parses a combinational AIGER ASCII file (`aag M I L O A`, L = 0).
///
/// One vertex per variable (named by its variable index, or by the symbol
/// table entry when present). Literal polarity is discarded: dominance is a
/// purely structural property, so an inverter on an edge does not change it.
/// A single output becomes the root; several outputs feed an appended
/// virtual root. Structurally repeated fanins (e.g. AND(x, !x)) collapse to
/// one edge.
Graph parse_aiger_ascii(std::string_view text);

/// Reads a file and dispatches on content: `aag` header selects AIGER.
Graph read_graph_file(const std::filesystem::path& path);

}  // namespace ddom
