// Benchmark comparing the OpenMP kernels against their serial references:
// Monte Carlo density sampling and the unique-factorization sweep.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "repkit/chartab.hpp"
#include "repkit/density.hpp"
#include "repkit/liealg.hpp"

using namespace repkit;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (compiled without OpenMP)\n");
#endif

  // Sampling kernel.
  GroupPtr g = FiniteGroup::dihedral(12);
  auto table = character_table(g);
  ComponentModel model = ComponentModel::make(
      g, Subgroup::from_elements(g, g->derived_elements()), table[0] + table[2], table[1] + table[2]);
  const long long samples = 20000000;

  auto t0 = std::chrono::steady_clock::now();
  SampleResult serial = sample_density_serial(model, samples, 42);
  double serial_ms = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  SampleResult parallel = sample_density(model, samples, 42);
  double parallel_ms = ms_since(t0);

  std::printf("sampling   %lld draws   serial %8.1f ms   parallel %8.1f ms   speedup %.2fx\n",
              samples, serial_ms, parallel_ms, serial_ms / parallel_ms);
  if (serial.hits != parallel.hits) {
    std::printf("MISMATCH: serial hits %lld vs parallel hits %lld\n", serial.hits,
                parallel.hits);
    return 1;
  }

  // Factorization sweep kernel.
  const auto& c2 = liealg::AlgebraData::get("C2");
  t0 = std::chrono::steady_clock::now();
  auto rs = liealg::check_unique_factorization_serial(c2, 2, 2);
  double sweep_serial_ms = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  auto rp = liealg::check_unique_factorization(c2, 2, 2);
  double sweep_parallel_ms = ms_since(t0);

  std::printf("sweep C2   %lld tuples      serial %8.1f ms   parallel %8.1f ms   speedup %.2fx\n",
              rs.tuples_checked, sweep_serial_ms, sweep_parallel_ms,
              sweep_serial_ms / sweep_parallel_ms);
  if (rs.counterexamples.size() != rp.counterexamples.size() ||
      rs.tuples_checked != rp.tuples_checked) {
    std::printf("MISMATCH: serial and parallel sweeps disagree\n");
    return 1;
  }
  std::printf("serial and parallel results identical\n");
  return 0;
}
