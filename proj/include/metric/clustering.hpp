#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "metric/graph.hpp"

namespace metric {

/// Partition of V(G) into connected clusters of radius <= delta around their
/// centers, plus a layer number per cluster derived from root distance.
struct Clustering {
  double delta = 0.0;
  VertexId root = 0;
  std::vector<std::uint32_t> cluster_of;  // per vertex
  std::vector<VertexId> center;           // per cluster
  std::vector<std::uint32_t> layer;       // per cluster

  std::uint32_t cluster_count() const { return static_cast<std::uint32_t>(center.size()); }
  std::uint32_t layer_of_vertex(VertexId v) const { return layer[cluster_of[v]]; }
  std::uint32_t max_layer() const;
  std::vector<std::vector<VertexId>> members() const;
};

// Largest j >= 0 with j*step <= value; exact with respect to the floating
// predicate, not the rounded division.
std::uint32_t layer_index(double value, double step);

// Shortest-path tree from vertex 0, layers floor(d/delta), clusters by
// contracting same-layer tree edges; the center of a cluster is its unique
// vertex whose tree parent sits in a lower layer (or the root).
Clustering build_clustering(const WeightedGraph& g, double delta);

// Contraction of g by the clustering's partition; layers live in `c`.
SimpleGraph cluster_graph(const WeightedGraph& g, const Clustering& c);

struct LayerInterval {
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;
  bool contains(std::uint32_t x) const { return lo <= x && x <= hi; }
};

// Interval [max(layer)-p, min(layer)+p] clipped at 0; empty optional when the
// layer gap exceeds p (caller must treat the pair as further than p*delta).
std::optional<LayerInterval> distance_interval(std::uint32_t layer_u, std::uint32_t layer_v,
                                               std::uint32_t p);

// Induced subgraph on the vertices whose cluster layer lies in the interval.
InducedSubgraph interval_subgraph(const WeightedGraph& g, const Clustering& c,
                                  LayerInterval interval);

/// Clustering restricted to an interval subgraph: same clusters (those whose
/// layer is inside the interval), vertex and cluster ids renumbered densely.
struct RestrictedClustering {
  Clustering clustering;                     // over the subgraph's local ids
  std::vector<std::uint32_t> cluster_to_global;  // local cluster -> original cluster
};

RestrictedClustering restrict_clustering(const Clustering& c, const InducedSubgraph& sub);

}  // namespace metric
