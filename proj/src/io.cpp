#include "ddom/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace ddom {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    f(line_no, text.substr(pos, end - pos));
    pos = end + 1;
  }
}

std::string message_at(std::size_t line, const std::string& what) {
  return line ? "line " + std::to_string(line) + ": " + what : what;
}

bool parse_unsigned(std::string_view word, std::uint64_t& out) {
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), out);
  return ec == std::errc() && ptr == word.data() + word.size();
}

}  // namespace

ParseError::ParseError(Code code, std::size_t line, const std::string& message)
    : std::runtime_error(message_at(line, message)), code_(code), line_(line) {}

Graph parse_edge_list(std::string_view text) {
  Graph::Builder b;
  std::vector<bool> explicit_kind;
  std::optional<VertexId> root;
  std::size_t root_line = 0;

  for_each_line(text, [&](std::size_t line, std::string_view raw) {
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const auto words = split_words(raw);
    if (words.empty()) return;
    const std::string_view cmd = words[0];

    auto lookup = [&](std::string_view name) {
      auto id = b.find(name);
      if (!id) throw ParseError(ParseError::Code::undeclared_vertex, line, "undeclared vertex '" + std::string(name) + "'");
      return *id;
    };

    if (cmd == "v") {
      if (words.size() < 2 || words.size() > 3)
        throw ParseError(ParseError::Code::syntax, line, "expected 'v <name> [kind]'");
      VertexKind kind = VertexKind::gate;
      if (words.size() == 3) {
        auto parsed = parse_vertex_kind(words[2]);
        if (!parsed) throw ParseError(ParseError::Code::syntax, line, "unknown vertex kind '" + std::string(words[2]) + "'");
        kind = *parsed;
      }
      if (b.find(words[1]))
        throw ParseError(ParseError::Code::duplicate, line, "vertex '" + std::string(words[1]) + "' declared twice");
      const VertexId id = b.add_vertex(std::string(words[1]), kind);
      explicit_kind.push_back(words.size() == 3);
      if (kind == VertexKind::output) b.add_output(id);
    } else if (cmd == "e") {
      if (words.size() != 3) throw ParseError(ParseError::Code::syntax, line, "expected 'e <src> <dst>'");
      const VertexId from = lookup(words[1]);
      const VertexId to = lookup(words[2]);
      if (!b.add_edge_if_absent(from, to))
        throw ParseError(ParseError::Code::duplicate, line,
                         "duplicate edge '" + std::string(words[1]) + "' -> '" + std::string(words[2]) + "'");
    } else if (cmd == "root") {
      if (words.size() != 2) throw ParseError(ParseError::Code::syntax, line, "expected 'root <name>'");
      if (root) throw ParseError(ParseError::Code::duplicate, line, "root declared twice");
      root = lookup(words[1]);
      root_line = line;
    } else {
      throw ParseError(ParseError::Code::syntax, line, "unknown statement '" + std::string(cmd) + "'");
    }
  });

  if (!root) throw ParseError(ParseError::Code::missing_root, 0, "missing 'root' statement");
  for (VertexId v = 0; v < b.num_vertices(); ++v)
    if (!explicit_kind[v]) b.set_kind(v, b.has_fanin(v) ? VertexKind::gate : VertexKind::input);
  b.set_root(*root);
  try {
    return std::move(b).build();
  } catch (const GraphError& e) {
    if (e.code() == GraphError::Code::cycle) throw ParseError(ParseError::Code::cycle, 0, "graph contains a cycle");
    throw ParseError(ParseError::Code::syntax, root_line, e.what());
  }
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) out << "v " << g.name(v) << ' ' << to_string(g.kind(v)) << '\n';
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    for (VertexId w : g.fanout(v)) out << "e " << g.name(v) << ' ' << g.name(w) << '\n';
  out << "root " << g.name(g.root()) << '\n';
  return out.str();
}

Graph parse_aiger_ascii(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  for_each_line(text, [&](std::size_t no, std::string_view line) { lines.emplace_back(no, line); });

  auto header = lines.empty() ? std::vector<std::string_view>{} : split_words(lines[0].second);
  if (header.size() < 6 || header[0] != "aag")
    throw ParseError(ParseError::Code::header, 1, "expected header 'aag M I L O A'");
  std::uint64_t h[5];
  for (int k = 0; k < 5; ++k)
    if (!parse_unsigned(header[k + 1], h[k])) throw ParseError(ParseError::Code::header, 1, "malformed header field");
  const std::uint64_t max_var = h[0], num_inputs = h[1], num_latches = h[2], num_outputs = h[3], num_ands = h[4];
  if (num_latches != 0) throw ParseError(ParseError::Code::latches, 1, "sequential AIGER (L != 0) is not supported");
  if (num_outputs == 0) throw ParseError(ParseError::Code::header, 1, "AIGER file declares no outputs");
  if (num_inputs + num_ands > max_var) throw ParseError(ParseError::Code::header, 1, "M < I + A");
  if (lines.size() < 1 + num_inputs + num_outputs + num_ands)
    throw ParseError(ParseError::Code::syntax, lines.size(), "unexpected end of file");

  std::size_t cursor = 1;
  auto read_literals = [&](std::size_t count) {
    const auto& [no, line] = lines[cursor++];
    auto words = split_words(line);
    if (words.size() != count) throw ParseError(ParseError::Code::syntax, no, "wrong number of literals");
    std::vector<std::uint64_t> lits(count);
    for (std::size_t k = 0; k < count; ++k) {
      if (!parse_unsigned(words[k], lits[k])) throw ParseError(ParseError::Code::syntax, no, "malformed literal");
      if (lits[k] / 2 > max_var) throw ParseError(ParseError::Code::literal_range, no, "literal out of range");
    }
    return std::pair{no, lits};
  };

  std::vector<std::uint64_t> input_vars, output_vars;
  std::vector<std::array<std::uint64_t, 3>> ands;
  for (std::uint64_t k = 0; k < num_inputs; ++k) {
    auto [no, lits] = read_literals(1);
    if (lits[0] < 2 || lits[0] % 2) throw ParseError(ParseError::Code::syntax, no, "input must be a positive variable literal");
    input_vars.push_back(lits[0] / 2);
  }
  for (std::uint64_t k = 0; k < num_outputs; ++k) output_vars.push_back(read_literals(1).second[0] / 2);
  for (std::uint64_t k = 0; k < num_ands; ++k) {
    auto [no, lits] = read_literals(3);
    if (lits[0] < 2 || lits[0] % 2) throw ParseError(ParseError::Code::syntax, no, "AND output must be a positive variable literal");
    ands.push_back({lits[0] / 2, lits[1] / 2, lits[2] / 2});
  }

  // Symbol table: i<k> name / o<k> name; stop at the comment section.
  std::vector<std::string> input_names(num_inputs), output_names(num_outputs);
  for (; cursor < lines.size(); ++cursor) {
    std::string_view line = lines[cursor].second;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line == "c") break;
    if (line.size() < 2 || (line[0] != 'i' && line[0] != 'o')) continue;
    const auto space = line.find(' ');
    std::uint64_t pos = 0;
    if (space == std::string_view::npos || !parse_unsigned(line.substr(1, space - 1), pos)) continue;
    auto& table = line[0] == 'i' ? input_names : output_names;
    if (pos < table.size()) table[pos] = std::string(line.substr(space + 1));
  }

  Graph::Builder b;
  std::vector<VertexId> vertex_of(max_var + 1, kNoVertex);
  std::vector<VertexKind> kind_of(max_var + 1, VertexKind::gate);
  std::vector<std::string> name_of(max_var + 1);
  for (std::uint64_t k = 0; k < num_inputs; ++k) {
    kind_of[input_vars[k]] = VertexKind::input;
    name_of[input_vars[k]] = input_names[k];
  }
  auto unique = [&](std::string name) {
    for (auto& c : name)
      if (c == ' ' || c == '\t' || c == '#') c = '_';
    while (b.find(name)) name += '\'';
    return name;
  };
  for (std::uint64_t var = 1; var <= max_var; ++var)
    vertex_of[var] = b.add_vertex(unique(name_of[var].empty() ? std::to_string(var) : name_of[var]), kind_of[var]);
  auto vertex = [&](std::uint64_t var) {
    if (vertex_of[var] == kNoVertex) vertex_of[var] = b.add_vertex(unique("0"), VertexKind::gate);  // constant
    return vertex_of[var];
  };
  for (const auto& [out, lhs, rhs] : ands) {
    b.add_edge_if_absent(vertex(lhs), vertex(out));
    b.add_edge_if_absent(vertex(rhs), vertex(out));
  }
  for (std::uint64_t var : output_vars) b.add_output(vertex(var));
  if (num_outputs == 1) {
    b.set_root(vertex(output_vars[0]));
  } else {
    const VertexId root = b.add_vertex(unique("@root"), VertexKind::virtual_root);
    for (std::uint64_t var : output_vars) b.add_edge_if_absent(vertex(var), root);
    b.set_root(root);
  }
  try {
    return std::move(b).build();
  } catch (const GraphError& e) {
    throw ParseError(e.code() == GraphError::Code::cycle ? ParseError::Code::cycle : ParseError::Code::syntax, 0, e.what());
  }
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(ParseError::Code::io, 0, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (text.rfind("aag", 0) == 0) return parse_aiger_ascii(text);
  return parse_edge_list(text);
}

}  // namespace ddom
