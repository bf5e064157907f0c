#include "metric/graph.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <fstream>
#include <istream>
#include <queue>
#include <sstream>

#include "metric/errors.hpp"

namespace metric {

WeightedGraph WeightedGraph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n)
      throw DomainError("edge endpoint " + std::to_string(std::max(e.u, e.v)) +
                        " out of range (n=" + std::to_string(n) + ")");
    if (e.u == e.v) throw DomainError("self-loop at vertex " + std::to_string(e.u));
    if (!(e.w > 0.0) || !std::isfinite(e.w))
      throw DomainError("nonpositive or non-finite weight on edge " + std::to_string(e.u) +
                        "-" + std::to_string(e.v));
  }
  std::vector<std::pair<VertexId, VertexId>> keys(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i)
    keys[i] = {std::min(edges[i].u, edges[i].v), std::max(edges[i].u, edges[i].v)};
  {
    auto sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end())
      throw DomainError("duplicate edge " + std::to_string(dup->first) + "-" +
                        std::to_string(dup->second));
  }

  WeightedGraph g;
  g.edge_count_ = edges.size();
  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : edges) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.neighbors_.resize(2 * edges.size());
  g.weights_.resize(2 * edges.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    g.neighbors_[cursor[e.u]] = e.v;
    g.weights_[cursor[e.u]++] = e.w;
    g.neighbors_[cursor[e.v]] = e.u;
    g.weights_[cursor[e.v]++] = e.w;
  }
  // Sort each adjacency list by neighbor id for deterministic iteration.
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t lo = g.offsets_[v], hi = g.offsets_[v + 1];
    std::vector<std::pair<VertexId, double>> row;
    row.reserve(hi - lo);
    for (std::size_t i = lo; i < hi; ++i) row.emplace_back(g.neighbors_[i], g.weights_[i]);
    std::sort(row.begin(), row.end());
    for (std::size_t i = lo; i < hi; ++i) {
      g.neighbors_[i] = row[i - lo].first;
      g.weights_[i] = row[i - lo].second;
    }
  }
  return g;
}

std::vector<Edge> WeightedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < vertex_count(); ++u) {
    auto nbr = neighbors(u);
    auto wts = weights(u);
    for (std::size_t i = 0; i < nbr.size(); ++i)
      if (u < nbr[i]) out.push_back({u, nbr[i], wts[i]});
  }
  return out;
}

SimpleGraph SimpleGraph::from_edges(std::size_t n,
                                    std::vector<std::pair<VertexId, VertexId>> edges) {
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n) throw DomainError("simple-graph edge endpoint out of range");
    if (u == v) throw DomainError("simple-graph self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  SimpleGraph g;
  g.offsets_.assign(n + 1, 0);
  for (auto [u, v] : edges) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.neighbors_.resize(2 * edges.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : edges) {
    g.neighbors_[cursor[u]++] = v;
    g.neighbors_[cursor[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v)
    std::sort(g.neighbors_.begin() + g.offsets_[v], g.neighbors_.begin() + g.offsets_[v + 1]);
  return g;
}

bool SimpleGraph::has_edge(VertexId u, VertexId v) const {
  auto nbr = neighbors(u);
  return std::binary_search(nbr.begin(), nbr.end(), v);
}

SsspResult sssp(const WeightedGraph& g, VertexId source) {
  const std::size_t n = g.vertex_count();
  if (source >= n) throw DomainError("sssp source out of range");
  SsspResult r;
  r.source = source;
  r.dist.assign(n, kInfDist);
  r.parent.assign(n, kNoVertex);
  r.dist[source] = 0.0;

  using Item = std::pair<double, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  heap.push({0.0, source});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d != r.dist[u]) continue;  // stale entry
    auto nbr = g.neighbors(u);
    auto wts = g.weights(u);
    for (std::size_t i = 0; i < nbr.size(); ++i) {
      VertexId v = nbr[i];
      double nd = d + wts[i];
      if (nd < r.dist[v]) {
        r.dist[v] = nd;
        r.parent[v] = u;
        heap.push({nd, v});
      }
    }
  }
  return r;
}

namespace {

bool parse_u64(std::string_view tok, std::uint64_t& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size();
}

bool parse_double(std::string_view tok, double& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

LoadedGraph load_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::uint64_t n = 0, m = 0;
  struct RawEdge {
    std::uint64_t u, v;
    double w;
    std::size_t line;
  };
  std::vector<RawEdge> raw;

  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (!have_header) {
      if (toks[0] != "p" || toks.size() != 3 || !parse_u64(toks[1], n) || !parse_u64(toks[2], m))
        throw ParseError("expected header 'p <n> <m>'", lineno);
      have_header = true;
      raw.reserve(m);
      continue;
    }
    std::uint64_t u, v;
    double w;
    if (toks.size() != 3 || !parse_u64(toks[0], u) || !parse_u64(toks[1], v) ||
        !parse_double(toks[2], w))
      throw ParseError("expected edge line 'u v w'", lineno);
    raw.push_back({u, v, w, lineno});
  }
  if (!have_header) throw ParseError("missing header 'p <n> <m>'", lineno == 0 ? 1 : lineno);
  if (raw.size() != m)
    throw DomainError("header declared " + std::to_string(m) + " edges, file has " +
                      std::to_string(raw.size()));

  LoadedGraph out;
  bool all_in_range = true;
  for (const RawEdge& e : raw)
    if (e.u >= n || e.v >= n) all_in_range = false;

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  if (all_in_range) {
    out.remapped = false;
    out.original_ids.resize(n);
    for (std::uint64_t i = 0; i < n; ++i) out.original_ids[i] = i;
    for (const RawEdge& e : raw) {
      if (e.u == e.v) throw ParseError("self-loop", e.line);
      if (!(e.w > 0.0)) throw ParseError("nonpositive weight", e.line);
      edges.push_back({static_cast<VertexId>(e.u), static_cast<VertexId>(e.v), e.w});
    }
  } else {
    // Arbitrary ids: map sorted distinct ids to a dense 0-based range.
    std::vector<std::uint64_t> ids;
    ids.reserve(2 * raw.size());
    for (const RawEdge& e : raw) {
      ids.push_back(e.u);
      ids.push_back(e.v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.size() > n)
      throw DomainError("file uses " + std::to_string(ids.size()) +
                        " distinct vertex ids but header declares n=" + std::to_string(n));
    out.remapped = true;
    out.original_ids = ids;
    out.original_ids.resize(n, std::numeric_limits<std::uint64_t>::max());
    auto dense = [&ids](std::uint64_t id) {
      return static_cast<VertexId>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
    };
    for (const RawEdge& e : raw) {
      if (e.u == e.v) throw ParseError("self-loop", e.line);
      if (!(e.w > 0.0)) throw ParseError("nonpositive weight", e.line);
      edges.push_back({dense(e.u), dense(e.v), e.w});
    }
  }
  out.graph = WeightedGraph::from_edges(n, edges);
  return out;
}

LoadedGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open graph file: " + path);
  return load_graph(in);
}

std::string dump_graph(const WeightedGraph& g) {
  std::ostringstream os;
  os << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
  os.precision(17);
  for (const Edge& e : g.edges()) os << e.u << " " << e.v << " " << e.w << "\n";
  return os.str();
}

SimpleGraph contract(const WeightedGraph& g, const std::vector<std::uint32_t>& block_of,
                     std::uint32_t block_count) {
  const std::size_t n = g.vertex_count();
  if (block_of.size() != n) throw DomainError("contract: partition size mismatch");
  for (std::uint32_t b : block_of)
    if (b >= block_count) throw DomainError("contract: block id out of range");

  // Each block must induce a connected subgraph (Def. 2 style contraction).
  std::vector<VertexId> seed(block_count, kNoVertex);
  std::vector<std::size_t> size(block_count, 0);
  for (VertexId v = 0; v < n; ++v) {
    ++size[block_of[v]];
    if (seed[block_of[v]] == kNoVertex) seed[block_of[v]] = v;
  }
  std::vector<std::size_t> reached(block_count, 0);
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack;
  for (std::uint32_t b = 0; b < block_count; ++b) {
    if (seed[b] == kNoVertex) continue;
    stack.assign(1, seed[b]);
    seen[seed[b]] = 1;
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      ++reached[b];
      for (VertexId w : g.neighbors(u))
        if (!seen[w] && block_of[w] == b) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    if (reached[b] != size[b])
      throw DomainError("contract: block " + std::to_string(b) + " is disconnected");
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v : g.neighbors(u))
      if (u < v && block_of[u] != block_of[v]) edges.emplace_back(block_of[u], block_of[v]);
  return SimpleGraph::from_edges(block_count, std::move(edges));
}

VertexId InducedSubgraph::to_local(VertexId global) const {
  auto it = std::lower_bound(to_global.begin(), to_global.end(), global);
  if (it == to_global.end() || *it != global) return kNoVertex;
  return static_cast<VertexId>(it - to_global.begin());
}

InducedSubgraph induced_subgraph(const WeightedGraph& g, std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw DomainError("induced_subgraph: duplicate vertex in selection");
  for (VertexId v : vertices)
    if (v >= g.vertex_count()) throw DomainError("induced_subgraph: vertex out of range");

  InducedSubgraph out;
  out.to_global = std::move(vertices);
  std::vector<Edge> edges;
  for (VertexId lu = 0; lu < out.to_global.size(); ++lu) {
    VertexId u = out.to_global[lu];
    auto nbr = g.neighbors(u);
    auto wts = g.weights(u);
    for (std::size_t i = 0; i < nbr.size(); ++i) {
      if (nbr[i] <= u) continue;
      VertexId lv = out.to_local(nbr[i]);
      if (lv != kNoVertex) edges.push_back({lu, lv, wts[i]});
    }
  }
  out.graph = WeightedGraph::from_edges(out.to_global.size(), edges);
  return out;
}

std::vector<std::vector<VertexId>> connected_components(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<VertexId>> comps;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp;
    stack.assign(1, s);
    seen[s] = 1;
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (VertexId v : g.neighbors(u))
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace metric
