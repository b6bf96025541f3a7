// Serial vs OpenMP statistics on generated circuits, and per-call scaling of
// dominator_chain on layered DAGs.

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <vector>

#include "CLI11.hpp"
#include "ddom/dominator_chain.hpp"
#include "ddom/oracle.hpp"
#include "ddom/stats.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
double median_seconds(int runs, F&& f) {
  std::vector<double> t;
  for (int r = 0; r < runs; ++r) {
    const auto start = Clock::now();
    f();
    t.push_back(std::chrono::duration<double>(Clock::now() - start).count());
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ddom benchmarks"};
  int runs = 5;
  std::size_t width = 64, layers = 40;
  app.add_option("--runs", runs, "Repetitions per measurement (median reported)")->check(CLI::PositiveNumber);
  app.add_option("--width", width, "Gates per layer of the stats circuit");
  app.add_option("--layers", layers, "Gate layers of the stats circuit");
  CLI11_PARSE(app, argc, argv);

  std::printf("threads %d\n\n", omp_get_max_threads());

  const ddom::Graph circuit = ddom::oracle::random_circuit(width, layers, width, 2024);
  ddom::CircuitStats serial_stats, parallel_stats;
  const double t_serial = median_seconds(runs, [&] { serial_stats = ddom::circuit_stats(circuit, ddom::Execution::serial); });
  const double t_parallel =
      median_seconds(runs, [&] { parallel_stats = ddom::circuit_stats(circuit, ddom::Execution::parallel); });
  std::printf("stats on %zu vertices, %zu edges, %zu outputs\n", circuit.num_vertices(), circuit.num_edges(),
              circuit.outputs().size());
  std::printf("  serial    %9.4f s\n  parallel  %9.4f s  (speedup %.2fx, results %s)\n\n", t_serial, t_parallel,
              t_serial / t_parallel, serial_stats == parallel_stats ? "identical" : "DIFFER");

  std::printf("dominator_chain scaling (median of %d)\n", runs);
  std::printf("%10s %10s %12s %8s\n", "edges", "vertices", "seconds", "ratio");
  double previous = 0;
  for (std::size_t target : {25'000u, 50'000u, 100'000u, 200'000u}) {
    const std::size_t w = 50;
    const ddom::Graph g = ddom::oracle::layered_dag(target / (3 * w), w, 3, target);
    const double t = median_seconds(runs, [&] { (void)ddom::dominator_chain(g, 0); });
    std::printf("%10zu %10zu %12.5f %8s\n", g.num_edges(), g.num_vertices(), t,
                previous > 0 ? std::to_string(t / previous).substr(0, 5).c_str() : "-");
    previous = t;
  }
  return serial_stats == parallel_stats ? 0 : 1;
}
