#include "metric/reference.hpp"

#include <algorithm>
#include <cstdlib>

#include "metric/engine.hpp"
#include "metric/errors.hpp"
#include "metric/parallel.hpp"

namespace metric {

std::size_t apsp_capacity() {
  if (const char* env = std::getenv("METRIC_ENGINE_MAX_N")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 5000;
}

ExactMetric exact_apsp(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > apsp_capacity())
    throw CapacityError("exact_apsp: " + std::to_string(n) + " vertices exceeds the guard (" +
                        std::to_string(apsp_capacity()) + "); set METRIC_ENGINE_MAX_N to raise");
  ExactMetric m;
  m.n = n;
  m.dist.assign(n * n, kInfDist);
  int threads = parallel::max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
  for (std::size_t s = 0; s < n; ++s) {
    SsspResult r = sssp(g, static_cast<VertexId>(s));
    std::copy(r.dist.begin(), r.dist.end(), m.dist.begin() + s * n);
  }
  return m;
}

std::vector<double> exact_eccentricities(const ExactMetric& m) {
  std::vector<double> ecc(m.n, 0.0);
  for (std::size_t v = 0; v < m.n; ++v) {
    for (std::size_t u = 0; u < m.n; ++u) {
      double d = m.dist[v * m.n + u];
      if (d == kInfDist) throw InfiniteDiameterError();
      ecc[v] = std::max(ecc[v], d);
    }
  }
  return ecc;
}

double exact_diameter(const ExactMetric& m) {
  double best = 0.0;
  for (double e : exact_eccentricities(m)) best = std::max(best, e);
  return best;
}

double exact_radius(const ExactMetric& m) {
  double best = kInfDist;
  for (double e : exact_eccentricities(m)) best = std::min(best, e);
  return m.n == 0 ? 0.0 : best;
}

}  // namespace metric
