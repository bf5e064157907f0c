#pragma once

#include <cstddef>
#include <vector>

#include "metric/graph.hpp"

namespace metric {

/// Exact all-pairs distances; the brute-force oracle for tests and the
/// acceptance suite. Never used on an approximate code path.
struct ExactMetric {
  std::size_t n = 0;
  std::vector<double> dist;  // row-major n x n, kInfDist when unreachable
  double operator()(VertexId u, VertexId v) const { return dist[u * n + v]; }
};

// n Dijkstra runs, one row per source (parallel across rows). Default
// capacity guard 5000 vertices; override with METRIC_ENGINE_MAX_N.
ExactMetric exact_apsp(const WeightedGraph& g);

std::size_t apsp_capacity();

// Row maxima, their max, their min. Any infinite entry raises the
// infinite-diameter signal.
std::vector<double> exact_eccentricities(const ExactMetric& m);
double exact_diameter(const ExactMetric& m);
double exact_radius(const ExactMetric& m);

}  // namespace metric
