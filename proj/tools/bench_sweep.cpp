// Timing comparison of the serial reference grid loop against the OpenMP
// path, on a pair-interaction R sweep.
#include <chrono>
#include <cmath>
#include <cstdio>

#include "accelqed/pair.hpp"
#include "accelqed/sweep.hpp"

using namespace accelqed;

int main() {
  const auto alpha = atom::hydrogen_lorentz();
  const double k0 = 1.5503e16 / core::codata().c;
  const std::size_t n = 4096;
  std::function<double(std::size_t)> fn = [&](std::size_t i) {
    const double f = static_cast<double>(i) / (n - 1);
    const double R = 1e-3 / k0 * std::pow(1e6, f);  // near to far zone
    pair::PairConfig pc{R, 1.34e13, 1e-3, alpha, alpha};
    return pair::total_interaction(pc).total;
  };

  auto time_it = [&](sweep::Execution exec) {
    const auto t0 = std::chrono::steady_clock::now();
    auto rows = sweep::run_grid<double>(n, fn, exec);
    const auto t1 = std::chrono::steady_clock::now();
    double checksum = 0.0;
    for (double v : rows) checksum += v;
    return std::pair<double, double>(
        std::chrono::duration<double, std::milli>(t1 - t0).count(), checksum);
  };

  const auto [t_serial, sum_serial] = time_it(sweep::Execution::serial);
  const auto [t_parallel, sum_parallel] = time_it(sweep::Execution::parallel);
  std::printf("grid points: %zu\n", n);
#ifdef _OPENMP
  std::printf("threads:  %d\n", omp_get_max_threads());
#else
  std::printf("threads:  1 (no OpenMP)\n");
#endif
  std::printf("serial:   %8.1f ms  (checksum %.17g)\n", t_serial, sum_serial);
  std::printf("parallel: %8.1f ms  (checksum %.17g)\n", t_parallel, sum_parallel);
  std::printf("speedup:  %.2fx\n", t_serial / t_parallel);
  if (sum_serial != sum_parallel) {
    std::printf("MISMATCH: parallel rows differ from serial reference\n");
    return 1;
  }
  return 0;
}
