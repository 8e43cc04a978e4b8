#pragma once

// Finite simple graphs on at most 64 vertices. Each vertex's neighbourhood is
// one 64-bit word, so vertex sets are plain machine words throughout.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edgebetti/error.hpp"

namespace edgebetti {

__extension__ using u128 = unsigned __int128;

inline constexpr int max_vertices = 64;

class VertexSet {
 public:
  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) bits_ |= bit(v);
  }

  // {0, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int first() const { return std::countr_zero(bits_); }
  constexpr int last() const { return 63 - std::countl_zero(bits_); }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | bit(v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~bit(v)); }

  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr auto operator<=>(const VertexSet&) const = default;

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

class Graph {
 public:
  Graph() = default;

  // Edgeless graph on n vertices.
  explicit Graph(int n) : n_(check_order(n)), adj_(static_cast<std::size_t>(n), 0) {}

  // Validates symmetry, absence of loops and that neighbourhoods fit in n.
  Graph(int n, std::vector<std::uint64_t> adjacency) : n_(check_order(n)), adj_(std::move(adjacency)) {
    if (static_cast<int>(adj_.size()) != n_) throw input_error("adjacency size does not match vertex count");
    const auto all = VertexSet::range(n_).bits();
    for (int v = 0; v < n_; ++v) {
      if (adj_[v] & ~all) throw input_error("neighbour index out of range");
      if ((adj_[v] >> v) & 1U) throw input_error("graph has a loop");
      for (int u : VertexSet(adj_[v]))
        if (!((adj_[u] >> v) & 1U)) throw input_error("adjacency is not symmetric");
    }
  }

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges) {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(check_order(n)), 0);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) throw input_error("edge endpoint out of range");
      if (u == v) throw input_error("graph has a loop");
      adj[u] |= VertexSet::bit(v);
      adj[v] |= VertexSet::bit(u);
    }
    return trusted(n, std::move(adj));
  }
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
  }

  // Caller guarantees the adjacency invariants; used on hot paths.
  static Graph trusted(int n, std::vector<std::uint64_t> adjacency) {
    Graph g;
    g.n_ = n;
    g.adj_ = std::move(adjacency);
    return g;
  }

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(int v) const { return VertexSet(adj_[check_vertex(v)]); }
  std::uint64_t row(int v) const { return adj_[v]; }
  std::span<const std::uint64_t> rows() const { return adj_; }
  bool adjacent(int u, int v) const { return (adj_[check_vertex(u)] >> check_vertex(v)) & 1U; }
  int degree(int v) const { return std::popcount(adj_[check_vertex(v)]); }

  int max_degree() const {
    int d = 0;
    for (auto r : adj_) d = std::max(d, std::popcount(r));
    return d;
  }

  int edge_count() const {
    int twice = 0;
    for (auto r : adj_) twice += std::popcount(r);
    return twice / 2;
  }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v : VertexSet(adj_[u] & ~VertexSet::range(u + 1).bits())) out.emplace_back(u, v);
    return out;
  }

  std::vector<int> degree_sequence() const {
    std::vector<int> d;
    d.reserve(adj_.size());
    for (auto r : adj_) d.push_back(std::popcount(r));
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
  }

  Graph with_edge(int u, int v) const {
    if (u == v) throw input_error("graph has a loop");
    auto adj = adj_;
    adj[check_vertex(u)] |= VertexSet::bit(check_vertex(v));
    adj[v] |= VertexSet::bit(u);
    return trusted(n_, std::move(adj));
  }

  Graph without_edge(int u, int v) const {
    auto adj = adj_;
    adj[check_vertex(u)] &= ~VertexSet::bit(check_vertex(v));
    adj[v] &= ~VertexSet::bit(u);
    return trusted(n_, std::move(adj));
  }

  // Labeled equality; use canonical_form for isomorphism.
  bool operator==(const Graph&) const = default;

 private:
  static int check_order(int n) {
    if (n < 0) throw input_error("negative vertex count");
    if (n > max_vertices) throw capacity_error("graphs are limited to 64 vertices");
    return n;
  }
  int check_vertex(int v) const {
    if (v < 0 || v >= n_) throw input_error("vertex index " + std::to_string(v) + " out of range");
    return v;
  }

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

// Subgraph induced by u, relabeled 0..|u|-1 in increasing vertex order.
inline Graph induced_subgraph(const Graph& g, VertexSet u) {
  if (!u.subset_of(g.vertices())) throw input_error("vertex set is not contained in the graph");
  std::vector<int> position(static_cast<std::size_t>(g.order()), -1);
  int k = 0;
  for (int v : u) position[v] = k++;
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(k), 0);
  for (int v : u)
    for (int w : VertexSet(g.row(v)) & u) adj[position[v]] |= VertexSet::bit(position[w]);
  return Graph::trusted(k, std::move(adj));
}

inline Graph delete_vertex(const Graph& g, int v) { return induced_subgraph(g, g.vertices().without(v)); }

inline Graph complement(const Graph& g) {
  const int n = g.order();
  const auto all = VertexSet::range(n).bits();
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) adj[v] = ~g.row(v) & all & ~VertexSet::bit(v);
  return Graph::trusted(n, std::move(adj));
}

inline Graph disjoint_union(std::span<const Graph> parts) {
  int total = 0;
  for (const auto& p : parts) total += p.order();
  if (total > max_vertices) throw capacity_error("disjoint union exceeds 64 vertices");
  std::vector<std::uint64_t> adj;
  adj.reserve(static_cast<std::size_t>(total));
  int offset = 0;
  for (const auto& p : parts) {
    for (int v = 0; v < p.order(); ++v) adj.push_back(p.row(v) << offset);
    offset += p.order();
  }
  return Graph::trusted(total, std::move(adj));
}

inline Graph disjoint_union(std::initializer_list<Graph> parts) {
  return disjoint_union(std::span<const Graph>(parts.begin(), parts.size()));
}

// Replaces v by h; every vertex of h inherits the neighbours of v. The vertices of
// f - v keep their relative order and come first, followed by those of h.
inline Graph substitution(const Graph& f, int v, const Graph& h) {
  if (v < 0 || v >= f.order()) throw input_error("substituted vertex out of range");
  const int total = f.order() - 1 + h.order();
  if (total > max_vertices) throw capacity_error("substitution exceeds 64 vertices");
  const int base = f.order() - 1;
  const auto old_nbrs = f.neighbors(v);
  auto relabel = [v](int u) { return u < v ? u : u - 1; };
  const std::uint64_t h_block = VertexSet::range(h.order()).bits() << base;

  std::vector<std::uint64_t> adj(static_cast<std::size_t>(total), 0);
  for (int u = 0; u < f.order(); ++u) {
    if (u == v) continue;
    std::uint64_t row = 0;
    for (int w : f.neighbors(u).without(v)) row |= VertexSet::bit(relabel(w));
    if (old_nbrs.contains(u)) row |= h_block;
    adj[relabel(u)] = row;
  }
  std::uint64_t outside = 0;
  for (int w : old_nbrs) outside |= VertexSet::bit(relabel(w));
  for (int x = 0; x < h.order(); ++x) adj[base + x] = (h.row(x) << base) | outside;
  return Graph::trusted(total, std::move(adj));
}

inline bool is_clique(const Graph& g, VertexSet s) {
  for (int v : s)
    if (!s.without(v).subset_of(g.neighbors(v))) return false;
  return true;
}

inline bool is_independent(const Graph& g, VertexSet s) {
  for (int v : s)
    if (!(g.neighbors(v) & s).empty()) return false;
  return true;
}

namespace detail {

// Branch and bound with greedy-colouring bounds (Tomita style) on bitsets.
inline void expand_clique(const Graph& g, VertexSet current, VertexSet candidates, VertexSet& best) {
  // Greedy colour classes give an upper bound for each candidate prefix.
  std::vector<int> order;
  std::vector<int> bound;
  VertexSet uncoloured = candidates;
  int colour = 0;
  while (!uncoloured.empty()) {
    ++colour;
    VertexSet avail = uncoloured;
    while (!avail.empty()) {
      int v = avail.first();
      avail = avail - g.neighbors(v);
      avail = avail.without(v);
      uncoloured = uncoloured.without(v);
      order.push_back(v);
      bound.push_back(colour);
    }
  }
  for (int k = static_cast<int>(order.size()) - 1; k >= 0; --k) {
    if (current.size() + bound[k] <= best.size()) return;
    int v = order[k];
    auto next = current.with(v);
    auto next_candidates = candidates & g.neighbors(v);
    if (next_candidates.empty()) {
      if (next.size() > best.size()) best = next;
    } else {
      expand_clique(g, next, next_candidates, best);
    }
    candidates = candidates.without(v);
  }
}

}  // namespace detail

inline VertexSet maximum_clique(const Graph& g) {
  VertexSet best;
  if (g.order() > 0) detail::expand_clique(g, VertexSet{}, g.vertices(), best);
  return best;
}

inline int clique_number(const Graph& g) { return maximum_clique(g).size(); }
inline int independence_number(const Graph& g) { return clique_number(complement(g)); }

// Largest order of a clique or independent set.
inline int homogeneous_set_size(const Graph& g) { return std::max(clique_number(g), independence_number(g)); }

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  VertexSet seen{0};
  VertexSet frontier{0};
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next = next | g.neighbors(v);
    frontier = next - seen;
    seen = seen | next;
  }
  return seen == g.vertices();
}

inline int component_count(const Graph& g) {
  int count = 0;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    VertexSet seen{left.first()};
    VertexSet frontier = seen;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next = next | g.neighbors(v);
      frontier = next - seen;
      seen = seen | next;
    }
    left = left - seen;
    ++count;
  }
  return count;
}

inline bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.edge_count() == g.order() - 1 && is_connected(g);
}

// Length of a shortest cycle, 0 for forests.
inline int girth(const Graph& g) {
  int best = 0;
  for (int s = 0; s < g.order(); ++s) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> parent(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> queue{s};
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          int len = dist[u] + dist[w] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

// Named families.

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete_graph(int n) { return complement(Graph(n)); }

inline Graph path_graph(int n) {
  if (n < 1) throw input_error("path needs at least one vertex");
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw input_error("cycle needs at least three vertices");
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, e);
}

// Disjoint union of cliques of the given orders.
inline Graph cluster_of(std::span<const int> parts) {
  std::vector<Graph> cliques;
  for (int a : parts) {
    if (a < 1) throw input_error("clique orders must be positive");
    cliques.push_back(complete_graph(std::min(a, max_vertices + 1)));
  }
  return disjoint_union(cliques);
}

inline Graph complete_multipartite(std::span<const int> parts) { return complement(cluster_of(parts)); }

// c disjoint edges.
inline Graph matching_graph(int c) {
  if (c < 0) throw input_error("matching size must be non-negative");
  if (2 * c > max_vertices) throw capacity_error("matching exceeds 64 vertices");
  std::vector<std::pair<int, int>> e;
  for (int k = 0; k < c; ++k) e.emplace_back(2 * k, 2 * k + 1);
  return Graph::from_edges(2 * c, e);
}

// Point-line incidence graph of the Fano plane; points 0..6, lines 7..13 with
// line i = {i, i+1, i+3} mod 7.
inline Graph heawood_graph() {
  std::vector<std::pair<int, int>> e;
  for (int line = 0; line < 7; ++line)
    for (int shift : {0, 1, 3}) e.emplace_back((line + shift) % 7, 7 + line);
  return Graph::from_edges(14, e);
}

// Family names accepted by the CLI: complete, path, cycle, empty, matching,
// multipartite, cluster, heawood.
inline Graph named(std::string_view family, std::span<const int> params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw input_error(std::string(family) + " expects " + std::to_string(k) + " parameter(s)");
  };
  if (family == "complete" || family == "K") {
    need(1);
    return complete_graph(params[0]);
  }
  if (family == "path" || family == "P") {
    need(1);
    return path_graph(params[0]);
  }
  if (family == "cycle" || family == "C") {
    need(1);
    return cycle_graph(params[0]);
  }
  if (family == "empty" || family == "E") {
    need(1);
    return empty_graph(params[0]);
  }
  if (family == "matching" || family == "M") {
    need(1);
    return matching_graph(params[0]);
  }
  if (family == "multipartite") {
    if (params.empty()) throw input_error("multipartite needs part orders");
    return complete_multipartite(params);
  }
  if (family == "cluster") {
    if (params.empty()) throw input_error("cluster needs clique orders");
    return cluster_of(params);
  }
  if (family == "heawood") {
    need(0);
    return heawood_graph();
  }
  throw input_error("unknown graph family '" + std::string(family) + "'");
}

}  // namespace edgebetti
