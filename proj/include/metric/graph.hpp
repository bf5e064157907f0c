#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace metric {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr double kInfDist = std::numeric_limits<double>::infinity();

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  double w = 0.0;
};

/// Immutable undirected graph with strictly positive edge weights, stored as
/// a CSR over both directions. Safe for concurrent reads after construction.
class WeightedGraph {
 public:
  WeightedGraph() : offsets_(1, 0) {}

  // Validates: ids in range, no self-loops, no duplicate pairs, weights
  // strictly positive and finite.
  static WeightedGraph from_edges(std::size_t vertex_count, const std::vector<Edge>& edges);

  std::size_t vertex_count() const { return offsets_.size() - 1; }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::span<const double> weights(VertexId v) const {
    return {weights_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  const std::vector<std::size_t>& csr_offsets() const { return offsets_; }
  const std::vector<VertexId>& csr_neighbors() const { return neighbors_; }
  const std::vector<double>& csr_weights() const { return weights_; }

  // Every undirected edge once, (u < v), sorted lexicographically.
  std::vector<Edge> edges() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> neighbors_;
  std::vector<double> weights_;
  std::size_t edge_count_ = 0;
};

/// Unweighted simple graph (CSR, both directions); used for cluster graphs
/// and as input to the tree-decomposition heuristics.
class SimpleGraph {
 public:
  SimpleGraph() : offsets_(1, 0) {}
  static SimpleGraph from_edges(std::size_t vertex_count,
                                std::vector<std::pair<VertexId, VertexId>> edges);

  std::size_t vertex_count() const { return offsets_.size() - 1; }
  std::size_t edge_count() const { return neighbors_.size() / 2; }
  std::span<const VertexId> neighbors(VertexId v) const {
    return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(VertexId u, VertexId v) const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> neighbors_;
};

struct SsspResult {
  VertexId source = 0;
  std::vector<double> dist;      // kInfDist when unreachable
  std::vector<VertexId> parent;  // kNoVertex for source and unreachable
};

// Binary-heap Dijkstra. Equal keys pop in vertex-id order; parents are set on
// strict improvement only, so the shortest-path tree is deterministic.
SsspResult sssp(const WeightedGraph& g, VertexId source);

struct LoadedGraph {
  WeightedGraph graph;
  // original_ids[dense] = id as it appeared in the file. Identity when every
  // id in the file was already < n.
  std::vector<std::uint64_t> original_ids;
  bool remapped = false;
};

// Edge-list text: '#' comments, header "p <n> <m>", then m lines "u v w".
LoadedGraph load_graph(std::istream& in);
LoadedGraph load_graph_file(const std::string& path);
std::string dump_graph(const WeightedGraph& g);

// Contract each block of a partition to one vertex. Every block must induce
// a connected subgraph; output has no self-loops or parallel edges.
SimpleGraph contract(const WeightedGraph& g, const std::vector<std::uint32_t>& block_of,
                     std::uint32_t block_count);

struct InducedSubgraph {
  WeightedGraph graph;
  std::vector<VertexId> to_global;  // local -> global, ascending
  VertexId to_local(VertexId global) const;  // kNoVertex when absent
};

// Subgraph induced by `vertices` (need not be sorted; duplicates rejected).
InducedSubgraph induced_subgraph(const WeightedGraph& g, std::vector<VertexId> vertices);

// Maximal connected vertex sets, ordered by smallest contained vertex id.
std::vector<std::vector<VertexId>> connected_components(const WeightedGraph& g);

}  // namespace metric
