#pragma once

#include <cstdint>
#include <vector>

#include "metric/clustering.hpp"
#include "metric/errors.hpp"
#include "metric/graph.hpp"
#include "metric/treewidth.hpp"

namespace metric {

class InfiniteDiameterError : public DomainError {
 public:
  InfiniteDiameterError() : DomainError("diameter is infinite: graph is disconnected") {}
};

struct EccentricityEstimate {
  VertexId vertex = 0;
  double value = 0.0;
  VertexId witness = 0;
};

struct EngineBuildOptions {
  // Per-node core-sets are needed only for eccentricity queries; the
  // distance-only oracles skip them (the interval subgraphs may be
  // disconnected, where approximate tuples would contain infinities).
  bool with_coresets = true;
};

/// Additive distance and eccentricity oracle over a balanced decomposition of
/// the cluster graph: per-node inner-distance tables indexed by valid triples
/// (t = loc(i), cluster i, vertex of V_t), plus per-node core-sets of V_t with
/// respect to the parent bag's centers. Immutable after build; all queries
/// are safe to run concurrently.
class EngineOracle {
 public:
  static EngineOracle build(WeightedGraph g, Clustering c, BalancedDecomposition bd,
                            EngineBuildOptions opt = {});

  // Claim-style additive query: min of inner_dist[t,i,u] + inner_dist[t,i,v]
  // over nodes t ancestral to both locations and clusters located at t.
  // Always in [d_G(u,v), d_G(u,v) + 2*delta]; infinity iff u,v disconnected.
  double apx_dist(VertexId u, VertexId v) const;
  double apx_dist_counted(VertexId u, VertexId v, std::size_t& pairs_inspected) const;

  // Three-case eccentricity estimate (ancestor centers, child-subtree
  // core-sets, sibling core-sets at each strict ancestor); value within
  // 16*delta of ecc(v) and d(v, witness) >= ecc(v) - 16*delta. Requires a
  // connected graph and core-sets built.
  EccentricityEstimate eccentricity(VertexId v) const;

  double delta() const { return clustering_.delta; }
  const WeightedGraph& graph() const { return graph_; }
  const Clustering& clustering() const { return clustering_; }
  const BalancedDecomposition& decomposition() const { return decomp_; }

  std::size_t sum_vt() const { return sum_vt_; }
  std::size_t coreset_size_max() const;
  std::size_t coreset_size_total() const;
  bool has_coresets() const { return with_coresets_; }

 private:
  WeightedGraph graph_;
  Clustering clustering_;
  BalancedDecomposition decomp_;
  bool with_coresets_ = false;

  std::vector<std::int32_t> loc_;                     // cluster -> node
  std::vector<std::vector<std::uint32_t>> located_;   // node -> clusters with loc == node
  std::vector<std::vector<VertexId>> vt_;             // node -> V_t, sorted
  std::vector<int> node_depth_;
  std::vector<std::int32_t> depth_order_;             // nodes, root first
  std::size_t sum_vt_ = 0;

  // inner_[t][k][x]: distance from center of located_[t][k] to vt_[t][x]
  // inside G[V_t]
  std::vector<std::vector<std::vector<double>>> inner_;

  struct Slot {
    std::int32_t node;
    VertexId local;
  };
  // slots_[v][d]: node at depth d on the root-to-loc(v) path and v's dense
  // index inside its V_t
  std::vector<std::vector<Slot>> slots_;

  struct NodeCoreset {
    std::vector<VertexId> members;        // global vertex ids
    std::vector<double> tuples;           // row-major |members| x k
    std::size_t k = 0;                    // = |bag(parent(t))|
  };
  std::vector<NodeCoreset> coresets_;  // per node; empty at the root

  void build_coreset_for_node(std::int32_t t);
};

/// Everything the Theorem-1-style driver produced, for reports and tests.
struct EccPipelineResult {
  std::vector<EccentricityEstimate> estimates;
  double source_ecc = 0.0;  // exact ecc of vertex 0
  double delta = 0.0;       // eps * source_ecc / 16
  double diameter = 0.0;    // max estimate
  double radius = 0.0;      // min estimate
  std::uint32_t clusters = 0;
  int heuristic_width = 0;
  int balanced_width = 0;
  int depth = 0;
  std::size_t decomposition_nodes = 0;
  std::size_t sum_vt = 0;
  std::size_t coreset_max = 0;
};

// Clustering at the given delta, min-fill decomposition of the cluster graph,
// balancing, engine build. Graph must be connected.
EngineOracle build_engine_pipeline(const WeightedGraph& g, double delta,
                                   EngineBuildOptions opt = {});

// delta = eps * ecc(vertex 0) / 16, then one eccentricity query per vertex
// (parallel across vertices). Guarantees |estimate - ecc| <= eps * diam(G).
EccPipelineResult all_eccentricities(const WeightedGraph& g, double eps);

double approx_diameter(const WeightedGraph& g, double eps);
double approx_radius(const WeightedGraph& g, double eps);

}  // namespace metric
