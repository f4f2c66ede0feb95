#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace accelqed::sweep {

enum class Execution { serial, parallel };

// Evaluate fn over [0, n) into a vector kept in index order. Grid points are
// independent and fn must be pure, so the parallel path gives bit-identical
// rows to the serial reference. Exceptions from workers are rethrown after
// the loop completes.
template <typename Row>
std::vector<Row> run_grid(std::size_t n, const std::function<Row(std::size_t)>& fn,
                          Execution exec, int threads = 0) {
  std::vector<Row> rows(n);
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) rows[i] = fn(i);
    return rows;
  }
#ifdef _OPENMP
  std::exception_ptr error;
  if (threads > 0) omp_set_num_threads(threads);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    try {
      rows[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
#else
  (void)threads;
  for (std::size_t i = 0; i < n; ++i) rows[i] = fn(i);
#endif
  return rows;
}

}  // namespace accelqed::sweep
