#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "metric/graph.hpp"

namespace metric {

struct ApexInput {
  WeightedGraph graph;
  std::vector<VertexId> apices;  // the deletion set A; G - A is minor-free
};

/// Output of the diameter-preserving reduction. When `diam_exceeds` is set
/// the other fields are empty. Otherwise:
///   - diam(G') >= diam(G)
///   - diam(G) <= D implies diam(G') <= (1+eps)*D
///   - every component of G' - A has strong diameter <= 8*(2/eps)^c*D
struct ReductionResult {
  bool diam_exceeds = false;
  WeightedGraph reduced;            // G'
  std::vector<VertexId> apex_set;   // A' (same vertices as the input A)
  std::vector<Edge> added_edges;    // apex shortcut edges (weight = distance)
  std::vector<Edge> removed_edges;  // F: edges of G-A touching the far set Z
};

// The Lemma-7 pipeline: drop >2D edges, SSSP from each apex (verdict if any
// distance exceeds D), insert apex shortcut edges, signatures at step
// eps*D/2, representatives of relevant signatures, per-representative SSSP in
// G-A (verdict on a >2D same-signature hit), far set Z, F = G-A edges
// touching Z, G' = G minus F. Deterministic: representatives are the
// smallest-id vertex per signature.
ReductionResult diam_reduction(const ApexInput& input, double D, double eps);

enum class StepVerdict { kDiamExceedsD, kDiamAtMost };

// Either diam(G) > D or diam(G) <= (1+eps)*D: reduction at eps/3, then the
// clustering/decomposition/eccentricity pipeline on G' at delta = eps*D/48
// with apex singleton clusters inserted into every bag.
StepVerdict apx_step(const ApexInput& input, double D, double eps);

struct ApexDiameterResult {
  double estimate = 0.0;
  double source_ecc = 0.0;  // D0
  std::size_t steps = 0;
  std::vector<std::string> verdict_log;  // one line per tested threshold
};

// Scan D_0 < D_1 < ... < D_k = 2*D_0 (k = ceil(1/eps)) until a step reports
// DIAM_AT_MOST; the returned threshold is a (1+eps)-approximation of the
// diameter. An empty apex set is routed to the plain eccentricity driver.
ApexDiameterResult apex_diameter(const ApexInput& input, double eps);

}  // namespace metric
