#include "metric/generators.hpp"

#include <algorithm>
#include <cmath>

#include "metric/errors.hpp"

namespace metric {

namespace {

double draw_weight(const WeightSpec& w, SplitMix64& rng) {
  if (w.unit) return 1.0;
  // dyadic grid of 1/1024 keeps sums of weights exactly representable
  double span = w.hi - w.lo;
  double q = std::floor(rng.unit() * span * 1024.0) / 1024.0;
  double value = w.lo + q;
  if (!(value > 0.0)) throw DomainError("generate: weights must stay positive");
  return value;
}

void validate(const WeightSpec& w) {
  if (!w.unit && (!(w.lo > 0.0) || w.hi < w.lo))
    throw DomainError("generate: weight range must satisfy 0 < lo <= hi");
}

std::vector<Edge> grid_edges(std::uint32_t rows, std::uint32_t cols, const WeightSpec& w,
                             SplitMix64& rng) {
  std::vector<Edge> edges;
  auto id = [cols](std::uint32_t r, std::uint32_t c) { return r * cols + c; };
  for (std::uint32_t r = 0; r < rows; ++r)
    for (std::uint32_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1), draw_weight(w, rng)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c), draw_weight(w, rng)});
    }
  return edges;
}

bool connected_if_removed(std::size_t n, const std::vector<Edge>& edges, std::size_t skip) {
  std::vector<std::vector<VertexId>> adj(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i == skip) continue;
    adj[edges[i].u].push_back(edges[i].v);
    adj[edges[i].v].push_back(edges[i].u);
  }
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t count = 0;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    ++count;
    for (VertexId v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
  }
  return count == n;
}

}  // namespace

GeneratedGraph generate(const GenSpec& spec) {
  validate(spec.weights);
  SplitMix64 rng(spec.seed);
  GeneratedGraph out;

  switch (spec.family) {
    case GraphFamily::kGrid: {
      if (spec.rows < 1 || spec.cols < 1) throw DomainError("generate: grid needs rows,cols >= 1");
      auto edges = grid_edges(spec.rows, spec.cols, spec.weights, rng);
      out.graph = WeightedGraph::from_edges(std::size_t{spec.rows} * spec.cols, edges);
      return out;
    }
    case GraphFamily::kGridApex: {
      if (spec.rows < 1 || spec.cols < 1) throw DomainError("generate: grid needs rows,cols >= 1");
      if (spec.apex_count < 1) throw DomainError("generate: grid_apex needs apex_count >= 1");
      std::size_t base = std::size_t{spec.rows} * spec.cols;
      auto edges = grid_edges(spec.rows, spec.cols, spec.weights, rng);
      for (std::uint32_t a = 0; a < spec.apex_count; ++a) {
        auto apex = static_cast<VertexId>(base + a);
        out.apices.push_back(apex);
        // seeded random attachment set, never empty
        std::vector<VertexId> targets;
        for (VertexId v = 0; v < base; ++v)
          if (rng.unit() < 0.25) targets.push_back(v);
        if (targets.empty()) targets.push_back(static_cast<VertexId>(rng.below(base)));
        for (VertexId v : targets) edges.push_back({apex, v, draw_weight(spec.weights, rng)});
      }
      out.graph = WeightedGraph::from_edges(base + spec.apex_count, edges);
      return out;
    }
    case GraphFamily::kPath: {
      if (spec.length < 1) throw DomainError("generate: path needs length >= 1");
      std::vector<Edge> edges;
      for (VertexId v = 0; v + 1 < spec.length; ++v)
        edges.push_back({v, v + 1, draw_weight(spec.weights, rng)});
      out.graph = WeightedGraph::from_edges(spec.length, edges);
      return out;
    }
    case GraphFamily::kStar: {
      if (spec.length < 1) throw DomainError("generate: star needs length >= 1");
      std::vector<Edge> edges;
      for (VertexId v = 1; v < spec.length; ++v)
        edges.push_back({0, v, draw_weight(spec.weights, rng)});
      out.graph = WeightedGraph::from_edges(spec.length, edges);
      return out;
    }
    case GraphFamily::kRandomPlanarish: {
      if (spec.rows < 1 || spec.cols < 1) throw DomainError("generate: grid needs rows,cols >= 1");
      if (!(spec.delete_fraction >= 0.0 && spec.delete_fraction < 1.0))
        throw DomainError("generate: delete_fraction must be in [0,1)");
      std::size_t n = std::size_t{spec.rows} * spec.cols;
      auto edges = grid_edges(spec.rows, spec.cols, spec.weights, rng);
      // delete a seeded fraction of edges, skipping any whose removal would
      // disconnect the graph; subgraph of a grid stays planar
      std::vector<Edge> result = edges;
      for (std::size_t i = 0; i < result.size();) {
        if (rng.unit() < spec.delete_fraction && connected_if_removed(n, result, i)) {
          result.erase(result.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
          ++i;
        }
      }
      out.graph = WeightedGraph::from_edges(n, result);
      return out;
    }
  }
  throw DomainError("generate: unknown family");
}

GraphFamily parse_family(const std::string& name) {
  if (name == "grid") return GraphFamily::kGrid;
  if (name == "grid_apex") return GraphFamily::kGridApex;
  if (name == "path") return GraphFamily::kPath;
  if (name == "star") return GraphFamily::kStar;
  if (name == "random_planarish") return GraphFamily::kRandomPlanarish;
  throw DomainError("unknown graph family: " + name);
}

WeightSpec parse_weights(const std::string& text) {
  if (text == "unit") return WeightSpec::units();
  if (text.rfind("uniform:", 0) == 0) {
    auto rest = text.substr(8);
    auto colon = rest.find(':');
    if (colon != std::string::npos) {
      try {
        double lo = std::stod(rest.substr(0, colon));
        double hi = std::stod(rest.substr(colon + 1));
        return WeightSpec::uniform(lo, hi);
      } catch (const std::exception&) {
      }
    }
  }
  throw DomainError("weight spec must be 'unit' or 'uniform:LO:HI': " + text);
}

}  // namespace metric
