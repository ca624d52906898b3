#pragma once

#include <cstddef>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace advot {

// Runs body(i) for i in [0, n). Iterations must be independent; each writes
// its own output slot so the result is identical to the serial order.
template <class F>
inline void parallel_rows(std::size_t n, F&& body) {
#if defined(_OPENMP)
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
    body(static_cast<std::size_t>(i));
#else
  for (std::size_t i = 0; i < n; ++i) body(i);
#endif
}

inline int thread_count() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace advot
