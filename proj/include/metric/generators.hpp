#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "metric/graph.hpp"

namespace metric {

/// splitmix64: same seed, same stream, on every platform.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0,1) with 53 random bits
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

enum class GraphFamily { kGrid, kGridApex, kPath, kStar, kRandomPlanarish };

struct WeightSpec {
  bool unit = true;
  double lo = 1.0;
  double hi = 1.0;
  static WeightSpec units() { return {}; }
  static WeightSpec uniform(double lo, double hi) { return {false, lo, hi}; }
};

struct GenSpec {
  GraphFamily family = GraphFamily::kGrid;
  std::uint32_t rows = 1;      // grid families
  std::uint32_t cols = 1;      // grid families
  std::uint32_t length = 1;    // path / star size
  std::uint32_t apex_count = 1;
  double delete_fraction = 0.1;  // random_planarish
  WeightSpec weights;
  std::uint64_t seed = 0;
};

struct GeneratedGraph {
  WeightedGraph graph;
  std::vector<VertexId> apices;  // nonempty only for grid_apex
};

// Deterministic families. Non-unit weights are drawn as multiples of 1/1024
// so that path-length arithmetic stays exact in doubles.
GeneratedGraph generate(const GenSpec& spec);

GraphFamily parse_family(const std::string& name);
WeightSpec parse_weights(const std::string& text);  // "unit" or "uniform:LO:HI"

}  // namespace metric
