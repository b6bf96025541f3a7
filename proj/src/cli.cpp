#include "ddom/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ddom/chain_json.hpp"
#include "ddom/chain_query.hpp"
#include "ddom/io.hpp"
#include "ddom/stats.hpp"
#include "ddom/verify.hpp"

namespace ddom {

namespace {

constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitVertex = 3;
constexpr int kExitMismatch = 4;

struct VertexError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

VertexId lookup(const Graph& g, const std::string& name) {
  auto v = g.find(name);
  if (!v) throw VertexError("unknown vertex '" + name + "'");
  return *v;
}

DominatorChain chain_for(const Graph& g, const std::string& source) {
  const VertexId u = lookup(g, source);
  if (u == g.root()) throw VertexError("source '" + source + "' is the root");
  ChainBuilder builder(g);
  if (!builder.tree().reaches_root(u)) throw VertexError("source '" + source + "' does not reach the root");
  return builder.build(u);
}

std::vector<std::pair<std::string, std::string>> read_pairs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(ParseError::Code::io, 0, "cannot open '" + path + "'");
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string a, b, extra;
    if (!(words >> a)) continue;
    if (!(words >> b) || (words >> extra)) throw ParseError(ParseError::Code::syntax, no, "expected '<vertex> <vertex>'");
    pairs.emplace_back(a, b);
  }
  return pairs;
}

std::vector<std::string> names_of(const Graph& g) { return {g.names().begin(), g.names().end()}; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Single- and double-vertex dominators of single-sink DAGs", "ddom"};
  app.require_subcommand(1);

  std::string graph_file, pairs_file, source, format = "json";
  auto* chain = app.add_subcommand("chain", "Print the dominator chain of a source vertex");
  auto* chain_graph = chain->add_option("--graph", graph_file, "Input graph (.dag or .aag)");
  auto* chain_pairs = chain->add_option("--pairs", pairs_file, "Build the chain from an explicit pair list")->group("");
  chain_graph->excludes(chain_pairs);
  chain_pairs->excludes(chain_graph);
  chain->add_option("--source", source, "Source vertex name");
  chain->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string v_name, w_name;
  auto* query = app.add_subcommand("query", "Test whether {V,W} is a double-vertex dominator of the source");
  query->add_option("--graph", graph_file, "Input graph")->required();
  query->add_option("--source", source, "Source vertex name")->required();
  query->add_option("V", v_name)->required();
  query->add_option("W", w_name)->required();

  bool serial = false;
  auto* stats = app.add_subcommand("stats", "Per-circuit dominator statistics over all output cones");
  stats->add_option("--graph", graph_file, "Input graph")->required();
  stats->add_flag("--serial", serial, "Use the single-threaded reference path");

  VerifyOptions vopt;
  std::size_t random_graphs = 0;
  auto* verify = app.add_subcommand("verify", "Compare the algorithm with the brute-force reference");
  auto* verify_random = verify->add_option("--random", random_graphs, "Number of random graphs");
  verify->add_option("--max-vertices", vopt.max_vertices, "Vertex bound for random graphs")->check(CLI::Range(3, 200));
  verify->add_option("--seed", vopt.seed, "Corpus seed");
  auto* verify_graph = verify->add_option("--graph", graph_file, "Verify a single graph instead");
  verify->add_option("--source", source, "Restrict --graph verification to one source");
  verify->add_flag("--inject-fault", vopt.inject_fault)->group("");
  verify->add_flag("--serial", serial, "Use the single-threaded reference path");
  verify_random->excludes(verify_graph);
  verify_graph->excludes(verify_random);

  auto* idom = app.add_subcommand("idom", "Print the immediate dominator of every vertex reaching the root");
  idom->add_option("--graph", graph_file, "Input graph")->required();

  std::vector<std::string> argv_store{"ddom"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (chain->parsed()) {
      if (!pairs_file.empty()) {
        const PairSetChain pc = chain_from_pair_set(read_pairs(pairs_file));
        out << (format == "json" ? chain_json(pc.chain, pc.names) : chain_text(pc.chain, pc.names));
        return 0;
      }
      if (graph_file.empty() || source.empty()) {
        err << "chain: --graph and --source are required (or --pairs)\n";
        return kExitInput;
      }
      const Graph g = read_graph_file(graph_file);
      const DominatorChain c = chain_for(g, source);
      const auto names = names_of(g);
      out << (format == "json" ? chain_json(c, names) : chain_text(c, names));
      return 0;
    }
    if (query->parsed()) {
      const Graph g = read_graph_file(graph_file);
      const DominatorChain c = chain_for(g, source);
      const bool yes = is_double_dominator(c, lookup(g, v_name), lookup(g, w_name));
      out << (yes ? "true" : "false") << '\n';
      return yes ? 0 : kExitFalse;
    }
    if (stats->parsed()) {
      const Graph g = read_graph_file(graph_file);
      const CircuitStats s = circuit_stats(g, serial ? Execution::serial : Execution::parallel);
      const char* heads[] = {"inputs", "outputs", "gates", "1-doms", "2-doms", "useful-2-doms"};
      const std::size_t vals[] = {s.inputs, s.outputs, s.gates, s.single_doms, s.double_doms, s.useful_double_doms};
      for (const char* h : heads) out << std::setw(14) << h;
      out << '\n';
      for (std::size_t v : vals) out << std::setw(14) << v;
      out << '\n';
      return 0;
    }
    if (verify->parsed()) {
      std::optional<Counterexample> failure;
      if (!graph_file.empty()) {
        const Graph g = read_graph_file(graph_file);
        std::vector<VertexId> sources;
        if (!source.empty()) {
          const VertexId u = lookup(g, source);
          if (u == g.root() || !reaches(g, g.root())[u]) throw VertexError("source '" + source + "' does not reach the root");
          sources.push_back(u);
        }
        std::size_t pairs = 0;
        failure = verify_instance(g, sources, vopt.inject_fault, &pairs);
        out << "graphs 1 pairs " << pairs << '\n';
      } else {
        if (random_graphs == 0) {
          err << "verify: give --random N or --graph FILE\n";
          return kExitInput;
        }
        vopt.graphs = random_graphs;
        vopt.exec = serial ? Execution::serial : Execution::parallel;
        const VerifyReport r = verify_corpus(vopt);
        out << "graphs " << r.graphs << " sources " << r.sources << " pairs " << r.pairs << '\n';
        failure = r.failure;
      }
      if (!failure) {
        out << "PASS\n";
        return 0;
      }
      out << "FAIL " << failure->check << ": " << failure->detail << '\n'
          << "graph " << failure->graph_index << " source " << failure->source << '\n'
          << "# counterexample\n"
          << failure->graph_text;
      return kExitMismatch;
    }
    if (idom->parsed()) {
      const Graph g = read_graph_file(graph_file);
      const DominatorTree t = compute_dominator_tree(g);
      for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (auto p = t.idom(v)) out << g.name(v) << ": " << g.name(*p) << '\n';
      return 0;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const PairSetError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const VertexError& e) {
    err << "error: " << e.what() << '\n';
    return kExitVertex;
  }
  return kExitInput;
}

}  // namespace ddom
