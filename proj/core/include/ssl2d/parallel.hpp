#ifndef SSL2D_PARALLEL_HPP
#define SSL2D_PARALLEL_HPP

#include <algorithm>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ssl2d {

// Thread cap. All parallel loops in the library produce bit-identical
// results for a fixed thread count; force_single_thread() makes runs
// independent of the host configuration as well.
inline void set_thread_count(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

inline int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void force_single_thread() { set_thread_count(1); }

// Honors SSL2D_THREADS when set; returns the resulting cap.
inline int configure_threads_from_env() {
  const char* env = std::getenv("SSL2D_THREADS");
  if (env != nullptr) {
    int n = std::atoi(env);
    if (n > 0) set_thread_count(n);
  }
  return thread_count();
}

}  // namespace ssl2d

#endif  // SSL2D_PARALLEL_HPP
