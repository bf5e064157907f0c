#pragma once

#include <cstdint>
#include <vector>

#include "metric/graph.hpp"

namespace metric {

using DistanceTuple = std::vector<double>;

double linf_distance(const DistanceTuple& a, const DistanceTuple& b);

struct CoreSet {
  std::vector<std::size_t> members;  // indices into the element universe
  double guarantee = 0.0;            // the certified additive bound (5*delta)
};

// Greedy l_inf cover over perturbed tuples: scan elements in index order and
// keep one unless an existing member is within 3*delta. When every input
// tuple is within delta of the exact tuple, the output is a (5*delta)-additive
// core-set; that premise is the caller's and is checked offline by
// verify_coreset.
CoreSet greedy_coreset(const std::vector<DistanceTuple>& tuples, double delta);

struct CoreSetCheck {
  bool pass = true;
  std::size_t worst_element = 0;
  double worst_gap = 0.0;
};

// Test oracle: every element must be within `bound` in l_inf of some member's
// exact tuple; reports the element with the largest gap.
CoreSetCheck verify_coreset(const std::vector<DistanceTuple>& exact_tuples,
                            const std::vector<std::size_t>& members, double bound);

/// Deduplicated family of subsets over a ground set of size <= 64, each set a
/// bit mask.
struct SetSystem {
  std::uint32_t ground_size = 0;
  std::vector<std::uint64_t> sets;
};

// Threshold-difference set system: ground set [1,k-1] x M, and for each
// vertex v the set {(i, m) : d(v, s[i]) - d(v, s[0]) <= m}. Exact distances,
// desk scale only.
SetSystem lp_hat_system(const WeightedGraph& g, const std::vector<VertexId>& terminals,
                        const std::vector<double>& thresholds);

// Exact VC dimension by enumerating candidate shattered subsets in increasing
// size with early exit. Ground sets above 20 are refused.
std::uint32_t vc_dimension(const SetSystem& f);

// Sauer-Shelah right-hand side: sum_{i<=d} C(m, i).
std::uint64_t sauer_shelah_bound(std::uint32_t m, std::uint32_t d);

}  // namespace metric
