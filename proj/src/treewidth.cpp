#include "metric/treewidth.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

#include "metric/errors.hpp"

namespace metric {

int TreeDecomposition::width() const {
  std::size_t m = 0;
  for (const auto& b : bags) m = std::max(m, b.size());
  return static_cast<int>(m) - 1;
}

int TreeDecomposition::depth() const {
  // children lists are acyclic by construction; iterative DFS
  std::vector<std::pair<std::int32_t, int>> stack{{root, 0}};
  int best = 0;
  while (!stack.empty()) {
    auto [t, d] = stack.back();
    stack.pop_back();
    best = std::max(best, d);
    for (std::int32_t ch : children[t]) stack.push_back({ch, d + 1});
  }
  return best;
}

// ---------------------------------------------------------------------------
// Greedy min-fill elimination
// ---------------------------------------------------------------------------

namespace {

std::uint64_t fill_of(const std::vector<std::set<std::uint32_t>>& adj, std::uint32_t v) {
  std::uint64_t fill = 0;
  const auto& nv = adj[v];
  for (auto it = nv.begin(); it != nv.end(); ++it) {
    auto jt = it;
    for (++jt; jt != nv.end(); ++jt)
      if (!adj[*it].count(*jt)) ++fill;
  }
  return fill;
}

}  // namespace

TreeDecomposition heuristic_decomposition(const SimpleGraph& h) {
  const std::size_t n = h.vertex_count();
  TreeDecomposition td;
  if (n == 0) {
    td.root = 0;
    td.parent = {-1};
    td.children = {{}};
    td.bags = {{}};
    return td;
  }

  std::vector<std::set<std::uint32_t>> adj(n);
  for (std::uint32_t v = 0; v < n; ++v)
    for (VertexId u : h.neighbors(v)) adj[v].insert(u);

  // Order key: (fill, degree, id). Kept in a set; affected keys recomputed
  // after each elimination.
  using Key = std::tuple<std::uint64_t, std::size_t, std::uint32_t>;
  std::vector<Key> key(n);
  std::set<Key> queue;
  for (std::uint32_t v = 0; v < n; ++v) {
    key[v] = {fill_of(adj, v), adj[v].size(), v};
    queue.insert(key[v]);
  }

  std::vector<std::uint32_t> elim_order;
  elim_order.reserve(n);
  std::vector<std::uint32_t> elim_pos(n, 0);
  std::vector<std::vector<std::uint32_t>> elim_bag(n);

  for (std::size_t step = 0; step < n; ++step) {
    std::uint32_t v = std::get<2>(*queue.begin());
    queue.erase(queue.begin());
    elim_pos[v] = static_cast<std::uint32_t>(step);
    elim_order.push_back(v);
    elim_bag[v].assign(adj[v].begin(), adj[v].end());
    elim_bag[v].push_back(v);
    std::sort(elim_bag[v].begin(), elim_bag[v].end());

    std::vector<std::uint32_t> nbrs(adj[v].begin(), adj[v].end());
    std::set<std::uint32_t> affected;
    for (std::uint32_t a : nbrs) {
      adj[a].erase(v);
      affected.insert(a);
    }
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j)
        if (adj[nbrs[i]].insert(nbrs[j]).second) {
          adj[nbrs[j]].insert(nbrs[i]);
          // a new edge changes the fill count of common neighbors too
          for (std::uint32_t c : adj[nbrs[i]])
            if (c != nbrs[j] && adj[nbrs[j]].count(c)) affected.insert(c);
        }
    adj[v].clear();
    for (std::uint32_t a : affected) {
      queue.erase(key[a]);
      key[a] = {fill_of(adj, a), adj[a].size(), a};
      queue.insert(key[a]);
    }
  }

  // One node per eliminated vertex; attach to the node of the next-eliminated
  // bag member. Components yield separate roots, linked under the last one.
  td.parent.assign(n, -1);
  td.children.assign(n, {});
  td.bags.resize(n);
  std::vector<std::int32_t> node_of(n);
  for (std::uint32_t i = 0; i < n; ++i) node_of[elim_order[i]] = static_cast<std::int32_t>(i);
  std::vector<std::int32_t> roots;
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint32_t v = elim_order[i];
    td.bags[i] = elim_bag[v];
    std::uint32_t next = UINT32_MAX;
    for (std::uint32_t x : elim_bag[v])
      if (x != v && (next == UINT32_MAX || elim_pos[x] < elim_pos[next])) next = x;
    if (next == UINT32_MAX) {
      roots.push_back(static_cast<std::int32_t>(i));
    } else {
      td.parent[i] = node_of[next];
      td.children[node_of[next]].push_back(static_cast<std::int32_t>(i));
    }
  }
  td.root = roots.back();
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    td.parent[roots[i]] = td.root;
    td.children[td.root].push_back(roots[i]);
  }
  return td;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

DecompositionCheck validate_decomposition(const SimpleGraph& h, const TreeDecomposition& td) {
  DecompositionCheck res;
  auto fail = [&res](std::string msg) {
    res.ok = false;
    res.violation = std::move(msg);
    return res;
  };

  const std::size_t nodes = td.node_count();
  if (nodes == 0 || td.parent.size() != nodes || td.children.size() != nodes)
    return fail("tree-shape: inconsistent node arrays");
  std::size_t root_count = 0;
  for (std::size_t t = 0; t < nodes; ++t)
    if (td.parent[t] < 0) ++root_count;
  if (root_count != 1) return fail("tree-shape: expected exactly one root");
  if (td.root < 0 || static_cast<std::size_t>(td.root) >= nodes || td.parent[td.root] >= 0)
    return fail("tree-shape: root index invalid");
  std::vector<char> reach(nodes, 0);
  std::vector<std::int32_t> stack{td.root};
  reach[td.root] = 1;
  std::size_t seen = 0;
  while (!stack.empty()) {
    std::int32_t t = stack.back();
    stack.pop_back();
    ++seen;
    for (std::int32_t ch : td.children[t]) {
      if (ch < 0 || static_cast<std::size_t>(ch) >= nodes || td.parent[ch] != t || reach[ch])
        return fail("tree-shape: parent/children mismatch at node " + std::to_string(ch));
      reach[ch] = 1;
      stack.push_back(ch);
    }
  }
  if (seen != nodes) return fail("tree-shape: tree is not connected");

  const std::size_t n = h.vertex_count();
  std::vector<std::vector<std::int32_t>> holding(n);
  for (std::size_t t = 0; t < nodes; ++t)
    for (std::uint32_t x : td.bags[t]) {
      if (x >= n) return fail("bags: vertex id " + std::to_string(x) + " out of range");
      holding[x].push_back(static_cast<std::int32_t>(t));
    }

  // Axiom 1: nonempty connected trace per vertex.
  std::vector<char> in_trace(nodes, 0);
  for (std::uint32_t x = 0; x < n; ++x) {
    if (holding[x].empty())
      return fail("connectedness: vertex " + std::to_string(x) + " appears in no bag");
    for (std::int32_t t : holding[x]) in_trace[t] = 1;
    std::size_t visited = 0;
    stack.assign(1, holding[x][0]);
    std::vector<std::int32_t> touched{holding[x][0]};
    in_trace[holding[x][0]] = 2;
    while (!stack.empty()) {
      std::int32_t t = stack.back();
      stack.pop_back();
      ++visited;
      auto step = [&](std::int32_t s) {
        if (s >= 0 && in_trace[s] == 1) {
          in_trace[s] = 2;
          touched.push_back(s);
          stack.push_back(s);
        }
      };
      step(td.parent[t]);
      for (std::int32_t ch : td.children[t]) step(ch);
    }
    bool connected = visited == holding[x].size();
    for (std::int32_t t : holding[x]) in_trace[t] = 0;
    for (std::int32_t t : touched) in_trace[t] = 0;
    if (!connected)
      return fail("connectedness: bags of vertex " + std::to_string(x) +
                  " induce a disconnected subtree");
  }

  // Axiom 2: every edge inside some bag.
  for (std::uint32_t u = 0; u < n; ++u)
    for (VertexId v : h.neighbors(u)) {
      if (v < u) continue;
      bool covered = false;
      for (std::int32_t t : holding[u])
        if (std::binary_search(td.bags[t].begin(), td.bags[t].end(), v)) {
          covered = true;
          break;
        }
      if (!covered)
        return fail("edge-cover: edge (" + std::to_string(u) + "," + std::to_string(v) +
                    ") is in no bag");
    }
  return res;
}

// ---------------------------------------------------------------------------
// Balancing: recursive centroid / boundary-path splitting
// ---------------------------------------------------------------------------

namespace {

struct Balancer {
  // binarized input tree
  std::vector<std::vector<std::int32_t>> adj;
  const std::vector<std::vector<std::uint32_t>>* bag = nullptr;
  std::vector<std::int32_t> bag_id;  // binarized node -> input node

  // output
  std::vector<std::int32_t> out_parent;
  std::vector<std::vector<std::int32_t>> out_children;
  std::vector<std::vector<std::uint32_t>> out_bags;

  std::vector<std::int32_t> subsize;

  std::int32_t new_node(std::vector<std::uint32_t> b, std::int32_t parent) {
    auto id = static_cast<std::int32_t>(out_bags.size());
    out_bags.push_back(std::move(b));
    out_parent.push_back(parent);
    out_children.emplace_back();
    if (parent >= 0) out_children[parent].push_back(id);
    return id;
  }

  std::vector<std::uint32_t> union_bags(const std::vector<std::int32_t>& nodes) const {
    std::vector<std::uint32_t> out;
    for (std::int32_t t : nodes)
      out.insert(out.end(), (*bag)[bag_id[t]].begin(), (*bag)[bag_id[t]].end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // Rooted DFS inside the piece: preorder, parent pointers, subtree sizes.
  void rooted_scan(std::int32_t start, const std::vector<char>& in_piece,
                   std::vector<std::int32_t>& order, std::vector<std::int32_t>& par) {
    order.clear();
    std::vector<std::int32_t> stack{start};
    par[start] = -1;
    while (!stack.empty()) {
      std::int32_t t = stack.back();
      stack.pop_back();
      order.push_back(t);
      for (std::int32_t u : adj[t])
        if (in_piece[u] && par[u] == -2) {
          par[u] = t;
          stack.push_back(u);
        }
    }
    for (std::int32_t t : order) subsize[t] = 1;
    for (auto it = order.rbegin(); it != order.rend(); ++it)
      if (par[*it] >= 0) subsize[par[*it]] += subsize[*it];
  }

  // Centroid of the piece containing `any`: all components of piece \ {c}
  // have size <= |piece|/2. Ties by node index.
  std::int32_t centroid(std::int32_t any, const std::vector<char>& in_piece,
                        std::int32_t piece_n) {
    std::vector<std::int32_t> order;
    std::vector<std::int32_t> par(adj.size(), -2);
    rooted_scan(any, in_piece, order, par);
    std::int32_t best = any;
    std::int32_t best_max = piece_n;
    for (std::int32_t t : order) {
      std::int32_t mx = piece_n - subsize[t];
      for (std::int32_t u : adj[t])
        if (in_piece[u] && par[u] == t) mx = std::max(mx, subsize[u]);
      if (mx < best_max || (mx == best_max && t < best)) {
        best_max = mx;
        best = t;
      }
    }
    return best;
  }

  // Node on the b1-b2 path minimizing the larger of the two boundary-side
  // component sizes; the minimum is guaranteed to be <= |piece|/2.
  std::int32_t path_split(std::int32_t b1, std::int32_t b2, const std::vector<char>& in_piece,
                          std::int32_t piece_n) {
    std::vector<std::int32_t> order;
    std::vector<std::int32_t> par(adj.size(), -2);
    rooted_scan(b1, in_piece, order, par);
    std::vector<std::int32_t> path;
    for (std::int32_t t = b2; t != -1; t = par[t]) path.push_back(t);
    std::reverse(path.begin(), path.end());  // path[0] == b1

    std::int32_t best = path[0];
    std::int32_t best_max = piece_n + 1;
    for (std::size_t i = 0; i < path.size(); ++i) {
      std::int32_t side1 = piece_n - subsize[path[i]];
      std::int32_t side2 = (i + 1 < path.size()) ? subsize[path[i + 1]] : 0;
      std::int32_t mx = std::max(side1, side2);
      if (mx < best_max || (mx == best_max && path[i] < best)) {
        best_max = mx;
        best = path[i];
      }
    }
    internal_check(2 * best_max <= piece_n, "balance_binary: no balanced path split point");
    return best;
  }

  // Builds the balanced subtree for `piece` with boundary nodes `bounds`
  // (deduplicated, size <= 2) and attaches it under `out_attach`.
  void build(std::vector<std::int32_t> piece, std::vector<std::int32_t> bounds,
             std::int32_t out_attach) {
    internal_check(bounds.size() <= 2, "balance_binary: more than two boundary nodes");
    if (piece.size() <= 2) {
      new_node(union_bags(piece), out_attach);
      return;
    }

    std::vector<char> in_piece(adj.size(), 0);
    for (std::int32_t t : piece) in_piece[t] = 1;
    auto piece_n = static_cast<std::int32_t>(piece.size());

    std::int32_t c;
    if (bounds.size() < 2) {
      c = centroid(piece[0], in_piece, piece_n);
    } else {
      // The boundary-side components after this split have size <= |piece|/2
      // and at most two boundary nodes each; hanging components carry a
      // single boundary node and get a centroid split next.
      c = path_split(bounds[0], bounds[1], in_piece, piece_n);
    }

    std::vector<std::int32_t> head_nodes{c};
    for (std::int32_t b : bounds)
      if (b != c) head_nodes.push_back(b);
    std::int32_t head = new_node(union_bags(head_nodes), out_attach);

    // components of piece \ {c}, each with its boundary set
    in_piece[c] = 0;
    std::vector<std::vector<std::int32_t>> comps;
    std::vector<char> comp_seen(adj.size(), 0);
    for (std::int32_t entry : adj[c]) {
      if (!in_piece[entry] || comp_seen[entry]) continue;
      std::vector<std::int32_t> comp;
      std::vector<std::int32_t> stack{entry};
      comp_seen[entry] = 1;
      while (!stack.empty()) {
        std::int32_t t = stack.back();
        stack.pop_back();
        comp.push_back(t);
        for (std::int32_t u : adj[t])
          if (in_piece[u] && !comp_seen[u]) {
            comp_seen[u] = 1;
            stack.push_back(u);
          }
      }
      comps.push_back(std::move(comp));
    }

    // Binary fan-out: at most 3 components since the binarized tree has
    // maximum degree 3; a third child goes under an auxiliary copy.
    std::vector<std::int32_t> attach_at(comps.size(), head);
    if (comps.size() > 2) {
      internal_check(comps.size() == 3, "balance_binary: degree exceeds 3 after binarization");
      std::int32_t aux = new_node(out_bags[head], head);
      attach_at[1] = aux;
      attach_at[2] = aux;
    }

    for (std::size_t k = 0; k < comps.size(); ++k) {
      std::vector<char> in_comp(adj.size(), 0);
      for (std::int32_t t : comps[k]) in_comp[t] = 1;
      std::vector<std::int32_t> child_bounds;
      for (std::int32_t b : bounds)
        if (b != c && in_comp[b]) child_bounds.push_back(b);
      for (std::int32_t u : adj[c])
        if (in_comp[u] &&
            std::find(child_bounds.begin(), child_bounds.end(), u) == child_bounds.end())
          child_bounds.push_back(u);
      build(std::move(comps[k]), std::move(child_bounds), attach_at[k]);
    }
  }
};

}  // namespace

BalancedDecomposition balance_binary(const TreeDecomposition& td) {
  const std::size_t n_in = td.node_count();
  internal_check(n_in >= 1, "balance_binary: empty decomposition");

  Balancer bal;
  bal.bag = &td.bags;

  // Binarize: nodes with more than 2 children become chains of duplicates,
  // so every binarized node has degree <= 3.
  std::vector<std::int32_t> rep(n_in);
  for (std::size_t t = 0; t < n_in; ++t) {
    rep[t] = static_cast<std::int32_t>(bal.adj.size());
    bal.adj.emplace_back();
    bal.bag_id.push_back(static_cast<std::int32_t>(t));
  }
  auto link = [&bal](std::int32_t a, std::int32_t b) {
    bal.adj[a].push_back(b);
    bal.adj[b].push_back(a);
  };
  for (std::size_t t = 0; t < n_in; ++t) {
    const auto& kids = td.children[t];
    std::int32_t hang = rep[t];
    for (std::size_t k = 0; k < kids.size(); ++k) {
      bool last = (k + 1 == kids.size());
      if (k < 1 || last) {
        link(hang, rep[kids[k]]);
      } else {
        auto dup = static_cast<std::int32_t>(bal.adj.size());
        bal.adj.emplace_back();
        bal.bag_id.push_back(static_cast<std::int32_t>(t));
        link(hang, dup);
        link(dup, rep[kids[k]]);
        hang = dup;
      }
    }
  }

  bal.subsize.assign(bal.adj.size(), 0);
  std::vector<std::int32_t> all(bal.adj.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<std::int32_t>(i);
  bal.build(std::move(all), {}, -1);

  BalancedDecomposition out;
  out.root = 0;
  out.parent = std::move(bal.out_parent);
  out.children = std::move(bal.out_children);
  out.bags = std::move(bal.out_bags);
  out.depth_value = out.depth();

  for (const auto& kids : out.children)
    internal_check(kids.size() <= 2, "balance_binary: node with more than two children");
  double log_term = std::ceil(std::log2(static_cast<double>(out.node_count()) + 1.0));
  internal_check(out.depth_value <= 4 * static_cast<int>(log_term) + 4,
                 "balance_binary: depth bound violated");
  internal_check(out.width() + 1 <= 4 * (td.width() + 1),
                 "balance_binary: width blow-up bound violated");
  internal_check(out.node_count() <= 4 * n_in + 4,
                 "balance_binary: node count bound violated");
  return out;
}

}  // namespace metric
