#include "metric/scaled_oracle.hpp"

#include <algorithm>
#include <cmath>

#include "metric/errors.hpp"
#include "metric/parallel.hpp"
#include "metric/treewidth.hpp"

namespace metric {

DeltaOracle DeltaOracle::build(const WeightedGraph& g, double eps, double delta_cap) {
  if (!(eps > 0.0) || !(delta_cap > 0.0))
    throw DomainError("delta oracle: eps and delta_cap must be positive");

  DeltaOracle d;
  d.eps_ = eps;
  d.delta_cap_ = delta_cap;
  d.p_ = static_cast<std::uint32_t>(std::ceil(4.0 / eps));
  double delta = eps * delta_cap / 4.0;
  d.clustering_ = build_clustering(g, delta);

  const std::uint32_t top = d.clustering_.max_layer();
  // One oracle per populated clipped interval [max(0,b-p), min(top,b+p)];
  // a query asks for the interval centered at the larger of the two layers,
  // so populated centers suffice.
  std::vector<char> populated(top + 1, 0);
  for (std::uint32_t l : d.clustering_.layer) populated[l] = 1;

  std::vector<std::uint32_t> centers;
  for (std::uint32_t b = 0; b <= top; ++b)
    if (populated[b]) centers.push_back(b);

  std::vector<LayerInterval> todo;
  for (std::uint32_t b : centers) {
    LayerInterval iv{b >= d.p_ ? b - d.p_ : 0, std::min(top, b + d.p_)};
    if (!todo.empty() && todo.back().lo == iv.lo && todo.back().hi == iv.hi) {
      d.by_center_[b] = d.oracles_.size() + todo.size() - 1;
      continue;
    }
    d.by_center_[b] = todo.size();
    todo.push_back(iv);
  }

  d.oracles_.resize(todo.size());
  int threads = parallel::max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
  for (std::size_t i = 0; i < todo.size(); ++i) {
    IntervalOracle io;
    io.interval = todo[i];
    io.sub = interval_subgraph(g, d.clustering_, io.interval);
    RestrictedClustering rc = restrict_clustering(d.clustering_, io.sub);
    SimpleGraph h = cluster_graph(io.sub.graph, rc.clustering);
    BalancedDecomposition bd = balance_binary(heuristic_decomposition(h));
    EngineBuildOptions opt;
    opt.with_coresets = false;  // interval subgraphs may be disconnected
    io.engine = EngineOracle::build(io.sub.graph, std::move(rc.clustering), std::move(bd), opt);
    d.oracles_[i] = std::move(io);
  }

  d.sum_interval_vertices_ = 0;
  for (const auto& io : d.oracles_) d.sum_interval_vertices_ += io.sub.to_global.size();
  internal_check(d.sum_interval_vertices_ <=
                     static_cast<std::size_t>(2 * d.p_ + 1) * g.vertex_count(),
                 "delta oracle: interval subgraphs exceed (2p+1)*n vertices");
  return d;
}

DeltaAnswer DeltaOracle::query(VertexId u, VertexId v) const {
  if (u == v) return {false, 0.0};
  std::uint32_t lu = clustering_.layer_of_vertex(u);
  std::uint32_t lv = clustering_.layer_of_vertex(v);
  std::uint32_t gap = lu > lv ? lu - lv : lv - lu;
  if (gap > p_) return {true, 0.0};  // layer Lipschitz: d > p*delta >= cap

  auto it = by_center_.find(std::max(lu, lv));
  internal_check(it != by_center_.end(), "delta oracle: missing interval oracle");
  const IntervalOracle& io = oracles_[it->second];
  VertexId su = io.sub.to_local(u);
  VertexId sv = io.sub.to_local(v);
  internal_check(su != kNoVertex && sv != kNoVertex,
                 "delta oracle: query vertices outside their interval");
  double x = io.engine.apx_dist(su, sv);
  if (x == kInfDist) return {true, 0.0};  // d <= cap would make G^I connect them
  return {false, x};
}

ScaledOracle ScaledOracle::build(const WeightedGraph& g, double eps) {
  if (!(eps > 0.0)) throw DomainError("scaled oracle: eps must be positive");
  ScaledOracle s;
  s.eps_ = eps;
  if (g.vertex_count() <= 1) return s;

  double w_min = kInfDist;
  for (const Edge& e : g.edges()) w_min = std::min(w_min, e.w);
  if (w_min == kInfDist) throw DomainError("scaled oracle: graph has no edges");
  s.w_min_ = w_min;

  SsspResult from0 = sssp(g, 0);
  double ecc0 = 0.0;
  for (double d : from0.dist) {
    if (d == kInfDist) throw InfiniteDiameterError();
    ecc0 = std::max(ecc0, d);
  }
  // The minimum positive distance equals w_min (any two-edge path is longer),
  // and 2*ecc bounds the diameter, so the level thresholds w_min * 2^i for
  // i in [1, ceil(log2 W)] cover every distance.
  s.stretch_ = 2.0 * ecc0 / w_min;
  auto levels = static_cast<std::uint32_t>(std::ceil(std::log2(s.stretch_)));
  for (std::uint32_t i = 1; i <= levels; ++i)
    s.levels_.push_back(DeltaOracle::build(g, eps, w_min * std::ldexp(1.0, i)));
  return s;
}

double ScaledOracle::query(VertexId u, VertexId v, bool early_exit) const {
  if (u == v) return 0.0;
  double best = kInfDist;
  for (const DeltaOracle& level : levels_) {
    DeltaAnswer a = level.query(u, v);
    if (a.far) continue;
    best = std::min(best, a.value);
    if (early_exit) break;
  }
  return best;
}

}  // namespace metric
