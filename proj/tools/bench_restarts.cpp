// Times the multi-start entanglement-maximization kernel, serial vs
// OpenMP, on the TILES complement, and checks the reports agree exactly.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "umeb/verifier.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using Clock = std::chrono::steady_clock;

int main(int argc, char** argv) {
  int restarts = argc > 1 ? std::atoi(argv[1]) : 400;
  if (restarts < 1) restarts = 400;

  const umeb::OperatorSubspace complement = umeb::complement_of(umeb::tiles_umeb());
  umeb::OptimizerConfig cfg;
  cfg.restarts = restarts;
  cfg.seed = 1;

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif

  const auto t0 = Clock::now();
  const auto serial = umeb::max_entanglement_in_subspace(
      complement, cfg, umeb::ExecutionPolicy::serial);
  const auto t1 = Clock::now();
  const auto parallel = umeb::max_entanglement_in_subspace(
      complement, cfg, umeb::ExecutionPolicy::parallel);
  const auto t2 = Clock::now();

  const double serial_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  const double parallel_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
  std::printf("restarts: %d\n", restarts);
  std::printf("serial:   %8.1f ms  best_value %.12f\n", serial_ms, serial.best_value);
  std::printf("parallel: %8.1f ms  best_value %.12f\n", parallel_ms, parallel.best_value);
  std::printf("speedup:  %.2fx\n", serial_ms / parallel_ms);

  const bool same = serial.best_value == parallel.best_value &&
                    serial.converged_restarts == parallel.converged_restarts &&
                    (serial.best_state.amplitudes - parallel.best_state.amplitudes).norm() == 0.0;
  std::printf("reports identical: %s\n", same ? "yes" : "NO");
  return same ? 0 : 1;
}
