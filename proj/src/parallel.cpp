#include "metric/parallel.hpp"

#include <atomic>

namespace metric::parallel {

namespace {
std::atomic<int> g_max_threads{0};
}

void set_max_threads(int n) { g_max_threads.store(n < 0 ? 0 : n); }

int max_threads() {
  int cap = g_max_threads.load();
#ifdef _OPENMP
  int hw = omp_get_max_threads();
  if (cap == 0) return hw;
  return cap < hw ? cap : hw;
#else
  return 1;
#endif
}

}  // namespace metric::parallel
