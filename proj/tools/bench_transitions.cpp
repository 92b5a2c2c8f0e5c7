// Compares the OpenMP transition-graph build against the serial reference
// and checks that both produce the same graph.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "badc/double_cycle.hpp"
#include "badc/dynamics.hpp"

namespace {

template <class F>
double time_ms(F&& f, int repeat) {
  using clock = std::chrono::steady_clock;
  double best = 1e300;
  for (int r = 0; r < repeat; ++r) {
    const auto t0 = clock::now();
    f();
    const auto t1 = clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transition-graph build benchmark"};
  std::string kind = "negative";
  int n = 12;
  int m = 10;
  int repeat = 3;
  app.add_option("--kind", kind, "positive, mixed or negative");
  app.add_option("-n", n, "left cycle size");
  app.add_option("-m", m, "right cycle size");
  app.add_option("--repeat", repeat, "repetitions, best time kept");
  CLI11_PARSE(app, argc, argv);

  const badc::DoubleCycle dc =
      badc::build_canonical(badc::kind_from_string(kind), n, m);
  std::printf("kind=%s n=%d m=%d: %u configurations\n", kind.c_str(), n, m,
              1u << dc.size());
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP: compiled out\n");
#endif

  badc::TransitionGraph serial;
  badc::TransitionGraph parallel;
  const double t_serial =
      time_ms([&] { serial = badc::build_graph_serial(dc.net); }, repeat);
  const double t_parallel =
      time_ms([&] { parallel = badc::build_graph(dc.net); }, repeat);

  if (!(serial == parallel)) {
    std::printf("MISMATCH between serial and parallel builds\n");
    return 1;
  }
  const double t_analyze = time_ms([&] { badc::analyze(parallel); }, repeat);

  std::printf("edges: %zu\n", serial.edge_count());
  std::printf("serial build:   %9.3f ms\n", t_serial);
  std::printf("parallel build: %9.3f ms  (speedup %.2fx)\n", t_parallel,
              t_serial / t_parallel);
  std::printf("analyze:        %9.3f ms\n", t_analyze);
  std::printf("builds agree\n");
  return 0;
}
