#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "metric/clustering.hpp"
#include "metric/engine.hpp"
#include "metric/graph.hpp"

namespace metric {

struct DeltaAnswer {
  bool far = false;   // d_G(u,v) > delta_cap, concluded without a distance
  double value = 0.0  ;
};

/// Fixed-threshold additive oracle: clustering at delta = eps*cap/4, one
/// engine per populated layer interval of radius p = ceil(4/eps). For pairs
/// with d <= cap the answer lies in [d, d + eps*cap/2]; pairs whose layers
/// are more than p apart are FAR.
class DeltaOracle {
 public:
  static DeltaOracle build(const WeightedGraph& g, double eps, double delta_cap);

  DeltaAnswer query(VertexId u, VertexId v) const;

  double delta_cap() const { return delta_cap_; }
  double eps() const { return eps_; }
  std::uint32_t p() const { return p_; }
  const Clustering& clustering() const { return clustering_; }
  std::size_t interval_count() const { return oracles_.size(); }
  std::size_t sum_interval_vertices() const { return sum_interval_vertices_; }

 private:
  double delta_cap_ = 0.0;
  double eps_ = 0.0;
  std::uint32_t p_ = 0;
  Clustering clustering_;
  std::size_t sum_interval_vertices_ = 0;

  struct IntervalOracle {
    LayerInterval interval;
    InducedSubgraph sub;
    EngineOracle engine;
  };
  std::vector<IntervalOracle> oracles_;
  std::map<std::uint32_t, std::size_t> by_center_;  // clipped center layer -> index
};

/// Stack of DeltaOracles at doubling thresholds; answers multiplicative
/// (1+eps) distance queries on a connected graph.
class ScaledOracle {
 public:
  static ScaledOracle build(const WeightedGraph& g, double eps);

  // Minimum over all non-FAR level answers; with early_exit, stops at the
  // first non-FAR level from the smallest threshold up (still never an
  // underestimate; the default matches the layered construction).
  double query(VertexId u, VertexId v, bool early_exit = false) const;

  double eps() const { return eps_; }
  double min_weight() const { return w_min_; }
  double stretch() const { return stretch_; }
  std::size_t level_count() const { return levels_.size(); }
  const DeltaOracle& level(std::size_t i) const { return levels_[i]; }

 private:
  double eps_ = 0.0;
  double w_min_ = 0.0;
  double stretch_ = 0.0;
  std::vector<DeltaOracle> levels_;  // Delta = w_min * 2^i, i = 1..l
};

}  // namespace metric
