// Compares the single-threaded reference engines against the OpenMP ones on
// the heavier desk-scale workloads. Build and run:
//   cmake --build build && build/benchmarks/radio_bench

#include <chrono>
#include <cstdio>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "radio/report.hpp"
#include "radio/search.hpp"

using namespace radio;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void bench_prove(const char* name, const DistanceFamily& fam, int k, long l,
                 std::uint64_t node_budget) {
  SearchConfig config;
  config.max_prefix = 40;
  config.node_budget = node_budget;
  config.time_budget = std::chrono::milliseconds(600'000);

  auto t0 = Clock::now();
  ProofOutcome serial = prove_lower_serial(fam, k, l, config);
  double serial_s = seconds_since(t0);

  config.threads = 1;
  t0 = Clock::now();
  ProofOutcome one = prove_lower(fam, k, l, config);
  double one_s = seconds_since(t0);

  config.threads = 0;
  t0 = Clock::now();
  ProofOutcome par = prove_lower(fam, k, l, config);
  double par_s = seconds_since(t0);

  const char* verdict = serial.proven() ? "proven" : "inconclusive";
  bool complete = serial.reason != ProofOutcome::Reason::BudgetExhausted &&
                  par.reason != ProofOutcome::Reason::BudgetExhausted;
  if (one.nodes != par.nodes ||
      (complete && (serial.proven() != par.proven() || serial.nodes != par.nodes)))
    verdict = "MISMATCH";

  std::printf("%-22s l=%2ld  %-12s %9.1fM nodes  serial %7.3fs  1-thr %7.3fs  omp %7.3fs  speedup %.2fx\n",
              name, l, verdict, serial.nodes / 1e6, serial_s, one_s, par_s,
              par_s > 0 ? serial_s / par_s : 0.0);
}

void bench_grid() {
  GridRequest request;
  request.cell_budget_seconds = 0;  // analytic bounds + certified patterns

  auto run_with = [&](int threads) {
#ifdef _OPENMP
    omp_set_num_threads(threads);
#else
    (void)threads;
#endif
    auto t0 = Clock::now();
    GridReport report = run_grid(request, embedded_reference());
    double s = seconds_since(t0);
    std::printf("grid 184 cells, %d thread(s): %.3fs, conflicts=%d\n", threads, s,
                report.conflicts());
    return s;
  };
  double one = run_with(1);
#ifdef _OPENMP
  int max_threads = omp_get_num_procs();
#else
  int max_threads = 1;
#endif
  double par = run_with(max_threads);
  std::printf("grid speedup: %.2fx\n", one / par);
#ifdef _OPENMP
  omp_set_num_threads(max_threads);
#endif
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP: %d processors\n\n", omp_get_num_procs());
#else
  std::printf("OpenMP: disabled\n\n");
#endif

  bench_prove("D(1,3) k=4", DistanceFamily::one_and_t(3), 4, 23, 1000000000ULL);
  bench_prove("D(2,3) k=4", DistanceFamily::two_consecutive(3), 4, 27, 1000000000ULL);
  bench_prove("D(2,3) k=5", DistanceFamily::two_consecutive(3), 5, 39, 1000000000ULL);
  std::printf("\n");
  bench_grid();
  return 0;
}
