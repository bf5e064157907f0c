#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "metric/graph.hpp"

namespace metric {

/// Rooted tree decomposition. Bags are sorted vertex-id lists.
struct TreeDecomposition {
  std::int32_t root = 0;
  std::vector<std::int32_t> parent;  // -1 for the root
  std::vector<std::vector<std::int32_t>> children;
  std::vector<std::vector<std::uint32_t>> bags;

  std::size_t node_count() const { return bags.size(); }
  // max bag size - 1; -1 for the degenerate all-empty decomposition
  int width() const;
  int depth() const;  // edges on the longest root-to-leaf path
};

struct BalancedDecomposition : TreeDecomposition {
  int depth_value = 0;
};

struct DecompositionCheck {
  bool ok = true;
  std::string violation;  // axiom + witness when !ok
};

// Greedy min-fill elimination; ties by min degree, then min vertex id.
// Valid for any input graph (including disconnected); no width guarantee.
TreeDecomposition heuristic_decomposition(const SimpleGraph& h);

// Checks the two decomposition axioms plus rooted-tree shape; on failure
// names the violated axiom and a witness vertex or edge.
DecompositionCheck validate_decomposition(const SimpleGraph& h, const TreeDecomposition& td);

// Recursive centroid splitting. Guarantees, asserted on every call:
//   - every node has at most 2 children
//   - depth <= 4*ceil(log2(node_count+1)) + 4
//   - width(out)+1 <= 4*(width(in)+1)
//   - node_count(out) <= 4*node_count(in) + 4
BalancedDecomposition balance_binary(const TreeDecomposition& td);

}  // namespace metric
