#include "metric/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "metric/errors.hpp"

namespace metric {

std::uint32_t Clustering::max_layer() const {
  std::uint32_t m = 0;
  for (std::uint32_t l : layer) m = std::max(m, l);
  return m;
}

std::vector<std::vector<VertexId>> Clustering::members() const {
  std::vector<std::vector<VertexId>> out(cluster_count());
  for (VertexId v = 0; v < cluster_of.size(); ++v) out[cluster_of[v]].push_back(v);
  return out;
}

std::uint32_t layer_index(double value, double step) {
  if (!(step > 0.0)) throw DomainError("layer_index: step must be positive");
  if (value < 0.0) throw DomainError("layer_index: negative value");
  double q = std::floor(value / step);
  auto j = static_cast<std::uint64_t>(std::max(q, 0.0));
  while (static_cast<double>(j + 1) * step <= value) ++j;
  while (j > 0 && static_cast<double>(j) * step > value) --j;
  return static_cast<std::uint32_t>(j);
}

Clustering build_clustering(const WeightedGraph& g, double delta) {
  if (!(delta > 0.0)) throw DomainError("build_clustering: delta must be positive");
  const std::size_t n = g.vertex_count();
  if (n == 0) throw DomainError("build_clustering: empty graph");

  Clustering c;
  c.delta = delta;
  c.root = 0;
  SsspResult tree = sssp(g, c.root);
  for (double d : tree.dist)
    if (d == kInfDist) throw DomainError("build_clustering: graph is disconnected");

  std::vector<std::uint32_t> vlayer(n);
  for (VertexId v = 0; v < n; ++v) vlayer[v] = layer_index(tree.dist[v], delta);

  // Settle order: parents precede children (strictly smaller distance) and
  // the scan is deterministic.
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    if (tree.dist[a] != tree.dist[b]) return tree.dist[a] < tree.dist[b];
    return a < b;
  });

  c.cluster_of.assign(n, 0);
  for (VertexId v : order) {
    VertexId p = tree.parent[v];
    if (v != c.root && vlayer[v] == vlayer[p]) {
      c.cluster_of[v] = c.cluster_of[p];
    } else {
      c.cluster_of[v] = c.cluster_count();
      c.center.push_back(v);
      c.layer.push_back(vlayer[v]);
    }
  }
  return c;
}

SimpleGraph cluster_graph(const WeightedGraph& g, const Clustering& c) {
  if (c.cluster_of.size() != g.vertex_count())
    throw DomainError("cluster_graph: clustering was not built from this graph");
  return contract(g, c.cluster_of, c.cluster_count());
}

std::optional<LayerInterval> distance_interval(std::uint32_t layer_u, std::uint32_t layer_v,
                                               std::uint32_t p) {
  std::uint32_t a = std::min(layer_u, layer_v);
  std::uint32_t b = std::max(layer_u, layer_v);
  if (b - a > p) return std::nullopt;
  LayerInterval iv;
  iv.lo = (b >= p) ? b - p : 0;  // clip at 0: layers are naturals
  iv.hi = a + p;
  return iv;
}

InducedSubgraph interval_subgraph(const WeightedGraph& g, const Clustering& c,
                                  LayerInterval interval) {
  std::vector<VertexId> keep;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (interval.contains(c.layer_of_vertex(v))) keep.push_back(v);
  return induced_subgraph(g, std::move(keep));
}

RestrictedClustering restrict_clustering(const Clustering& c, const InducedSubgraph& sub) {
  RestrictedClustering out;
  out.clustering.delta = c.delta;

  // Clusters are layer-homogeneous, so a cluster is either fully inside the
  // subgraph or fully outside; renumber the surviving ones densely.
  std::vector<std::uint32_t> new_id(c.cluster_count(), UINT32_MAX);
  for (VertexId lv = 0; lv < sub.to_global.size(); ++lv) {
    std::uint32_t old_cluster = c.cluster_of[sub.to_global[lv]];
    if (new_id[old_cluster] == UINT32_MAX) {
      new_id[old_cluster] = static_cast<std::uint32_t>(out.cluster_to_global.size());
      out.cluster_to_global.push_back(old_cluster);
    }
  }
  out.clustering.cluster_of.resize(sub.to_global.size());
  for (VertexId lv = 0; lv < sub.to_global.size(); ++lv)
    out.clustering.cluster_of[lv] = new_id[c.cluster_of[sub.to_global[lv]]];

  out.clustering.center.resize(out.cluster_to_global.size());
  out.clustering.layer.resize(out.cluster_to_global.size());
  for (std::uint32_t i = 0; i < out.cluster_to_global.size(); ++i) {
    std::uint32_t old_cluster = out.cluster_to_global[i];
    VertexId local_center = sub.to_local(c.center[old_cluster]);
    internal_check(local_center != kNoVertex,
                   "restrict_clustering: cluster center missing from subgraph");
    out.clustering.center[i] = local_center;
    out.clustering.layer[i] = c.layer[old_cluster];
  }
  out.clustering.root = 0;  // layers still refer to the original root
  return out;
}

}  // namespace metric
