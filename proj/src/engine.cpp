#include "metric/engine.hpp"

#include <algorithm>
#include <cmath>

#include "metric/coreset.hpp"
#include "metric/parallel.hpp"

namespace metric {

namespace {

// Dijkstra from `source` restricted to the vertices of `members` (sorted);
// output indexed by position in `members`. Local binary heap over local ids.
std::vector<double> restricted_sssp(const WeightedGraph& g, const std::vector<VertexId>& members,
                                    VertexId source_local) {
  const std::size_t m = members.size();
  std::vector<double> dist(m, kInfDist);
  dist[source_local] = 0.0;
  auto local_of = [&members](VertexId global) -> VertexId {
    auto it = std::lower_bound(members.begin(), members.end(), global);
    if (it == members.end() || *it != global) return kNoVertex;
    return static_cast<VertexId>(it - members.begin());
  };
  using Item = std::pair<double, VertexId>;
  std::vector<Item> heap;
  heap.push_back({0.0, source_local});
  auto cmp = std::greater<Item>();
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), cmp);
    auto [d, lu] = heap.back();
    heap.pop_back();
    if (d != dist[lu]) continue;
    VertexId u = members[lu];
    auto nbr = g.neighbors(u);
    auto wts = g.weights(u);
    for (std::size_t i = 0; i < nbr.size(); ++i) {
      VertexId lv = local_of(nbr[i]);
      if (lv == kNoVertex) continue;
      double nd = d + wts[i];
      if (nd < dist[lv]) {
        dist[lv] = nd;
        heap.push_back({nd, lv});
        std::push_heap(heap.begin(), heap.end(), cmp);
      }
    }
  }
  return dist;
}

}  // namespace

std::size_t EngineOracle::coreset_size_max() const {
  std::size_t m = 0;
  for (const auto& cs : coresets_) m = std::max(m, cs.members.size());
  return m;
}

std::size_t EngineOracle::coreset_size_total() const {
  std::size_t m = 0;
  for (const auto& cs : coresets_) m += cs.members.size();
  return m;
}

EngineOracle EngineOracle::build(WeightedGraph g, Clustering c, BalancedDecomposition bd,
                                 EngineBuildOptions opt) {
  if (c.cluster_of.size() != g.vertex_count())
    throw DomainError("build_engine: clustering does not match the graph");
  const std::uint32_t n_clusters = c.cluster_count();
  {
    std::vector<char> seen(n_clusters, 0);
    for (const auto& bag : bd.bags)
      for (std::uint32_t i : bag) {
        if (i >= n_clusters)
          throw DomainError("build_engine: decomposition bag mentions unknown cluster");
        seen[i] = 1;
      }
    for (std::uint32_t i = 0; i < n_clusters; ++i)
      if (!seen[i])
        throw DomainError("build_engine: decomposition is not over this cluster graph");
  }

  EngineOracle o;
  o.graph_ = std::move(g);
  o.clustering_ = std::move(c);
  o.decomp_ = std::move(bd);
  o.with_coresets_ = opt.with_coresets;
  const std::size_t n = o.graph_.vertex_count();
  const std::size_t nodes = o.decomp_.node_count();

  // Depth order (root first) and node depths.
  o.node_depth_.assign(nodes, 0);
  o.depth_order_.clear();
  o.depth_order_.reserve(nodes);
  o.depth_order_.push_back(o.decomp_.root);
  for (std::size_t q = 0; q < o.depth_order_.size(); ++q) {
    std::int32_t t = o.depth_order_[q];
    for (std::int32_t ch : o.decomp_.children[t]) {
      o.node_depth_[ch] = o.node_depth_[t] + 1;
      o.depth_order_.push_back(ch);
    }
  }

  // loc: shallowest node whose bag holds the cluster (top-down scan).
  o.loc_.assign(n_clusters, -1);
  o.located_.assign(nodes, {});
  for (std::int32_t t : o.depth_order_)
    for (std::uint32_t i : o.decomp_.bags[t])
      if (o.loc_[i] < 0) {
        o.loc_[i] = t;
        o.located_[t].push_back(i);
      }
  for (auto& v : o.located_) std::sort(v.begin(), v.end());

  // V_t bottom-up: own located members merged with the children's sets.
  auto cluster_members = o.clustering_.members();
  o.vt_.assign(nodes, {});
  for (auto it = o.depth_order_.rbegin(); it != o.depth_order_.rend(); ++it) {
    std::int32_t t = *it;
    std::vector<VertexId> own;
    for (std::uint32_t i : o.located_[t])
      own.insert(own.end(), cluster_members[i].begin(), cluster_members[i].end());
    std::sort(own.begin(), own.end());
    std::vector<VertexId> acc = std::move(own);
    for (std::int32_t ch : o.decomp_.children[t]) {
      std::vector<VertexId> merged;
      merged.reserve(acc.size() + o.vt_[ch].size());
      std::merge(acc.begin(), acc.end(), o.vt_[ch].begin(), o.vt_[ch].end(),
                 std::back_inserter(merged));
      acc = std::move(merged);
    }
    o.vt_[t] = std::move(acc);
  }
  internal_check(o.vt_[o.decomp_.root].size() == n, "build_engine: V_root misses vertices");

  o.sum_vt_ = 0;
  for (const auto& vt : o.vt_) o.sum_vt_ += vt.size();
  internal_check(
      o.sum_vt_ <= static_cast<std::size_t>(o.decomp_.depth_value + 1) * std::max<std::size_t>(n, 1),
      "build_engine: sum |V_t| exceeds (depth+1)*n");

  // Ancestor slots per vertex, filled top-down.
  o.slots_.assign(n, {});
  for (std::int32_t t : o.depth_order_) {
    const auto& vt = o.vt_[t];
    for (VertexId x = 0; x < vt.size(); ++x)
      o.slots_[vt[x]].push_back({t, x});
  }

  // inner-dist: one restricted Dijkstra per valid (t, i) pair.
  o.inner_.assign(nodes, {});
  int threads = parallel::max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
  for (std::size_t q = 0; q < nodes; ++q) {
    std::int32_t t = o.depth_order_[q];
    const auto& vt = o.vt_[t];
    auto& rows = o.inner_[t];
    rows.resize(o.located_[t].size());
    for (std::size_t k = 0; k < o.located_[t].size(); ++k) {
      VertexId center = o.clustering_.center[o.located_[t][k]];
      auto it = std::lower_bound(vt.begin(), vt.end(), center);
      internal_check(it != vt.end() && *it == center, "build_engine: center outside V_t");
      rows[k] = restricted_sssp(o.graph_, vt, static_cast<VertexId>(it - vt.begin()));
    }
  }

  o.coresets_.assign(nodes, {});
  if (opt.with_coresets) {
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
    for (std::size_t q = 0; q < nodes; ++q) {
      std::int32_t t = o.depth_order_[q];
      if (t != o.decomp_.root) o.build_coreset_for_node(t);
    }
  }
  return o;
}

// (10*delta)-additive core-set of V_t with respect to the centers of the
// parent bag: approximate tuples via the oracle (error 2*delta), then the
// greedy cover with delta' = 2*delta.
void EngineOracle::build_coreset_for_node(std::int32_t t) {
  const auto& vt = vt_[t];
  NodeCoreset& cs = coresets_[t];
  const auto& terminals = decomp_.bags[decomp_.parent[t]];  // sorted cluster ids
  cs.k = terminals.size();
  if (vt.empty()) return;

  const std::size_t k = terminals.size();
  const std::size_t m = vt.size();
  // column-major candidate minimization, then transposed for the greedy scan
  std::vector<std::vector<double>> col(k, std::vector<double>(m, kInfDist));

  const int my_depth = node_depth_[decomp_.parent[t]];
  std::vector<double> rowvals(m);
  for (int d = 0; d <= my_depth; ++d) {
    std::int32_t t3 = slots_[vt[0]][d].node;  // ancestor of t at depth d
    for (std::size_t kk = 0; kk < located_[t3].size(); ++kk) {
      const auto& row = inner_[t3][kk];
      for (std::size_t x = 0; x < m; ++x) rowvals[x] = row[slots_[vt[x]][d].local];
      for (std::size_t j = 0; j < k; ++j) {
        VertexId center = clustering_.center[terminals[j]];
        // candidate applies when t3 is an ancestor-or-self of loc(terminal)
        if (node_depth_[loc_[terminals[j]]] < d) continue;
        double addend = row[slots_[center][d].local];
        if (addend == kInfDist) continue;
        auto& out = col[j];
        for (std::size_t x = 0; x < m; ++x) {
          double cand = rowvals[x] + addend;
          if (cand < out[x]) out[x] = cand;
        }
      }
    }
  }

  std::vector<DistanceTuple> tuples(m, DistanceTuple(k));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t x = 0; x < m; ++x) tuples[x][j] = col[j][x];

  CoreSet greedy = greedy_coreset(tuples, 2.0 * clustering_.delta);
  cs.members.reserve(greedy.members.size());
  cs.tuples.reserve(greedy.members.size() * k);
  for (std::size_t idx : greedy.members) {
    cs.members.push_back(vt[idx]);
    cs.tuples.insert(cs.tuples.end(), tuples[idx].begin(), tuples[idx].end());
  }
}

double EngineOracle::apx_dist(VertexId u, VertexId v) const {
  std::size_t ignored = 0;
  return apx_dist_counted(u, v, ignored);
}

double EngineOracle::apx_dist_counted(VertexId u, VertexId v, std::size_t& pairs_inspected) const {
  pairs_inspected = 0;
  if (u >= graph_.vertex_count() || v >= graph_.vertex_count())
    throw DomainError("apx_dist: vertex out of range");
  if (u == v) return 0.0;
  const auto& su = slots_[u];
  const auto& sv = slots_[v];
  std::size_t common = std::min(su.size(), sv.size());
  while (common > 0 && su[common - 1].node != sv[common - 1].node) --common;
  double best = kInfDist;
  for (std::size_t d = 0; d < common; ++d) {
    const auto& rows = inner_[su[d].node];
    for (const auto& row : rows) {
      ++pairs_inspected;
      double cand = row[su[d].local] + row[sv[d].local];
      if (cand < best) best = cand;
    }
  }
  return best;
}

EccentricityEstimate EngineOracle::eccentricity(VertexId v) const {
  if (v >= graph_.vertex_count()) throw DomainError("eccentricity: vertex out of range");
  internal_check(with_coresets_, "eccentricity: oracle built without core-sets");
  const auto& path = slots_[v];  // root .. loc(v)
  const std::uint32_t my_cluster = clustering_.cluster_of[v];
  const std::int32_t t_loc = path.back().node;

  // apx_dist(v, center(i)) for every cluster i appearing in a bag on the
  // root path; such clusters are exactly those located on the path.
  std::vector<double> center_apx(clustering_.cluster_count(), kInfDist);
  for (std::size_t d = 0; d < path.size(); ++d) {
    for (std::size_t kk = 0; kk < located_[path[d].node].size(); ++kk) {
      std::uint32_t i = located_[path[d].node][kk];
      VertexId center = clustering_.center[i];
      const auto& scenter = slots_[center];
      double best = kInfDist;
      for (std::size_t d3 = 0; d3 <= d; ++d3) {
        const auto& rows = inner_[path[d3].node];
        for (const auto& row : rows) {
          double cand = row[path[d3].local] + row[scenter[d3].local];
          if (cand < best) best = cand;
        }
      }
      center_apx[i] = best;
    }
  }

  EccentricityEstimate est;
  est.vertex = v;
  est.value = -1.0;
  est.witness = v;
  auto offer = [&est](double value, VertexId witness) {
    if (value == kInfDist) return;
    if (value > est.value || (value == est.value && witness < est.witness)) {
      est.value = value;
      est.witness = witness;
    }
  };

  // Case 1: the farthest vertex's cluster is located on the root path.
  for (std::size_t d = 0; d < path.size(); ++d)
    for (std::uint32_t i : located_[path[d].node]) offer(center_apx[i], clustering_.center[i]);

  // Case 2: it is located below loc(v); scan the core-sets of loc(v)'s
  // children against the center of v's own cluster. The cached tuples are
  // with respect to bag(loc(v)), which contains v's cluster.
  const auto& my_bag = decomp_.bags[t_loc];
  auto jt = std::lower_bound(my_bag.begin(), my_bag.end(), my_cluster);
  internal_check(jt != my_bag.end() && *jt == my_cluster,
                 "eccentricity: own cluster missing from loc bag");
  std::size_t j_self = static_cast<std::size_t>(jt - my_bag.begin());
  for (std::int32_t ch : decomp_.children[t_loc]) {
    const NodeCoreset& cs = coresets_[ch];
    for (std::size_t x = 0; x < cs.members.size(); ++x)
      offer(cs.tuples[x * cs.k + j_self], cs.members[x]);
  }

  // Case 3: it is located in a sibling subtree of some strict ancestor
  // t-hat; combine v's distances to the bag centers of t-hat with the cached
  // core-set tuples of the sibling child.
  for (std::size_t d = 0; d + 1 < path.size(); ++d) {
    std::int32_t t_hat = path[d].node;
    std::int32_t toward_v = path[d + 1].node;
    const auto& bag = decomp_.bags[t_hat];
    for (std::int32_t t2 : decomp_.children[t_hat]) {
      if (t2 == toward_v) continue;
      const NodeCoreset& cs = coresets_[t2];
      internal_check(cs.k == bag.size(), "eccentricity: core-set tuple arity mismatch");
      for (std::size_t x = 0; x < cs.members.size(); ++x) {
        double best = kInfDist;
        for (std::size_t j = 0; j < cs.k; ++j) {
          double via = center_apx[bag[j]];
          double cand = via + cs.tuples[x * cs.k + j];
          if (cand < best) best = cand;
        }
        offer(best, cs.members[x]);
      }
    }
  }

  internal_check(est.value >= 0.0, "eccentricity: no candidate produced a finite value");
  return est;
}

EngineOracle build_engine_pipeline(const WeightedGraph& g, double delta, EngineBuildOptions opt) {
  Clustering c = build_clustering(g, delta);
  SimpleGraph h = cluster_graph(g, c);
  TreeDecomposition td = heuristic_decomposition(h);
  BalancedDecomposition bd = balance_binary(td);
  return EngineOracle::build(g, std::move(c), std::move(bd), opt);
}

EccPipelineResult all_eccentricities(const WeightedGraph& g, double eps) {
  if (!(eps > 0.0)) throw DomainError("all_eccentricities: eps must be positive");
  const std::size_t n = g.vertex_count();
  if (n == 0) throw DomainError("all_eccentricities: empty graph");

  EccPipelineResult res;
  if (n == 1) {
    res.estimates = {{0, 0.0, 0}};
    res.clusters = 1;
    return res;
  }

  SsspResult from0 = sssp(g, 0);
  double source_ecc = 0.0;
  for (double d : from0.dist) {
    if (d == kInfDist) throw InfiniteDiameterError();
    source_ecc = std::max(source_ecc, d);
  }
  res.source_ecc = source_ecc;
  res.delta = eps * source_ecc / 16.0;

  Clustering c = build_clustering(g, res.delta);
  SimpleGraph h = cluster_graph(g, c);
  TreeDecomposition td = heuristic_decomposition(h);
  res.heuristic_width = td.width();
  BalancedDecomposition bd = balance_binary(td);
  res.balanced_width = bd.width();
  res.depth = bd.depth_value;
  res.decomposition_nodes = bd.node_count();
  res.clusters = c.cluster_count();

  EngineOracle oracle = EngineOracle::build(g, std::move(c), std::move(bd));
  res.sum_vt = oracle.sum_vt();
  res.coreset_max = oracle.coreset_size_max();

  res.estimates.resize(n);
  int threads = parallel::max_threads();
  if (threads > 1) {
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (std::size_t v = 0; v < n; ++v)
      res.estimates[v] = oracle.eccentricity(static_cast<VertexId>(v));
  } else {
    // serial reference path, kept for testing and benchmarking
    for (std::size_t v = 0; v < n; ++v)
      res.estimates[v] = oracle.eccentricity(static_cast<VertexId>(v));
  }

  res.diameter = 0.0;
  res.radius = kInfDist;
  for (const auto& e : res.estimates) {
    res.diameter = std::max(res.diameter, e.value);
    res.radius = std::min(res.radius, e.value);
  }
  return res;
}

double approx_diameter(const WeightedGraph& g, double eps) {
  return all_eccentricities(g, eps).diameter;
}

double approx_radius(const WeightedGraph& g, double eps) {
  return all_eccentricities(g, eps).radius;
}

}  // namespace metric
