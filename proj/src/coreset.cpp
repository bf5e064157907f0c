#include "metric/coreset.hpp"

#include <algorithm>
#include <cmath>

#include "metric/errors.hpp"

namespace metric {

double linf_distance(const DistanceTuple& a, const DistanceTuple& b) {
  internal_check(a.size() == b.size(), "linf_distance: tuple length mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

CoreSet greedy_coreset(const std::vector<DistanceTuple>& tuples, double delta) {
  if (!(delta > 0.0)) throw DomainError("greedy_coreset: delta must be positive");
  CoreSet out;
  out.guarantee = 5.0 * delta;
  const double threshold = 3.0 * delta;
  for (std::size_t v = 0; v < tuples.size(); ++v) {
    bool covered = false;
    for (std::size_t u : out.members)
      if (linf_distance(tuples[v], tuples[u]) <= threshold) {
        covered = true;
        break;
      }
    if (!covered) out.members.push_back(v);
  }
  return out;
}

CoreSetCheck verify_coreset(const std::vector<DistanceTuple>& exact_tuples,
                            const std::vector<std::size_t>& members, double bound) {
  CoreSetCheck res;
  if (exact_tuples.empty()) return res;
  if (members.empty()) {
    res.pass = false;
    res.worst_gap = kInfDist;
    return res;
  }
  for (std::size_t v = 0; v < exact_tuples.size(); ++v) {
    double best = kInfDist;
    for (std::size_t u : members) best = std::min(best, linf_distance(exact_tuples[v], exact_tuples[u]));
    if (best > res.worst_gap) {
      res.worst_gap = best;
      res.worst_element = v;
    }
  }
  res.pass = res.worst_gap <= bound;
  return res;
}

SetSystem lp_hat_system(const WeightedGraph& g, const std::vector<VertexId>& terminals,
                        const std::vector<double>& thresholds) {
  if (terminals.empty()) throw DomainError("lp_hat_system: need at least one terminal");
  const std::size_t k = terminals.size();
  const std::size_t ground = (k - 1) * thresholds.size();
  if (ground > 64) throw CapacityError("lp_hat_system: ground set larger than 64");

  std::vector<std::vector<double>> dist(k);
  for (std::size_t i = 0; i < k; ++i) dist[i] = sssp(g, terminals[i]).dist;

  SetSystem f;
  f.ground_size = static_cast<std::uint32_t>(ground);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::uint64_t mask = 0;
    std::size_t bit = 0;
    for (std::size_t i = 1; i < k; ++i)
      for (double m : thresholds) {
        if (dist[i][v] - dist[0][v] <= m) mask |= std::uint64_t{1} << bit;
        ++bit;
      }
    f.sets.push_back(mask);
  }
  std::sort(f.sets.begin(), f.sets.end());
  f.sets.erase(std::unique(f.sets.begin(), f.sets.end()), f.sets.end());
  return f;
}

namespace {

// Is `subset` (mask over ground elements) shattered by the family?
bool shattered(const std::vector<std::uint64_t>& sets, std::uint64_t subset,
               std::uint32_t subset_size) {
  std::vector<std::uint64_t> traces;
  traces.reserve(sets.size());
  for (std::uint64_t s : sets) traces.push_back(s & subset);
  std::sort(traces.begin(), traces.end());
  traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
  return traces.size() == (std::uint64_t{1} << subset_size);
}

// Enumerate all size-d subsets of [0,m); return true if any is shattered.
bool any_shattered(const std::vector<std::uint64_t>& sets, std::uint32_t m, std::uint32_t d) {
  if (d == 0) return !sets.empty();
  std::vector<std::uint32_t> idx(d);
  for (std::uint32_t i = 0; i < d; ++i) idx[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (std::uint32_t i : idx) mask |= std::uint64_t{1} << i;
    if (shattered(sets, mask, d)) return true;
    std::int32_t pos = static_cast<std::int32_t>(d) - 1;
    while (pos >= 0 && idx[pos] == m - d + pos) --pos;
    if (pos < 0) return false;
    ++idx[pos];
    for (std::uint32_t i = pos + 1; i < d; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace

std::uint32_t vc_dimension(const SetSystem& f) {
  if (f.ground_size > 20) throw CapacityError("vc_dimension: ground set larger than 20");
  if (f.sets.empty()) return 0;
  // Shattering is downward closed, so stop at the first size that fails.
  for (std::uint32_t d = 1; d <= f.ground_size; ++d)
    if (!any_shattered(f.sets, f.ground_size, d)) return d - 1;
  return f.ground_size;
}

std::uint64_t sauer_shelah_bound(std::uint32_t m, std::uint32_t d) {
  std::uint64_t total = 0;
  for (std::uint32_t i = 0; i <= d && i <= m; ++i) {
    std::uint64_t c = 1;
    for (std::uint32_t j = 0; j < i; ++j) c = c * (m - j) / (j + 1);
    total += c;
  }
  return total;
}

}  // namespace metric
