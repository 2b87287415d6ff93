#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace declab {

enum class Exec { Serial, OpenMP };

// Runs body(i) for i in [0, n). Bodies used with Exec::OpenMP must write only
// to their own output slot so the result is independent of the thread count.
template <typename F>
void parallel_for(Exec exec, int n, F&& body) {
  if (exec == Exec::OpenMP) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int i = 0; i < n; ++i) body(i);
  } else {
    for (int i = 0; i < n; ++i) body(i);
  }
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// n <= 0 leaves the runtime default in place.
inline void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

}  // namespace declab
