#pragma once

// Isomorph-free generation of unlabeled graphs and trees, and G(n, 1/2) sampling.
//
// Graphs on n vertices are generated from the representatives on n-1 vertices by
// canonical augmentation: a child P + v is kept iff deleting the canonically last
// vertex of the child gives a graph isomorphic to P (i.e. P is the child's
// canonical parent). Children of one parent that are isomorphic are merged
// locally, so each parent is an independent unit of work.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "edgebetti/canonical.hpp"
#include "edgebetti/graph.hpp"

namespace edgebetti {

inline constexpr int max_exhaustive_order = 9;
inline constexpr int max_tree_order = 12;
inline constexpr int max_sample_order = 32;

// Children of one parent in generation order (neighbour masks of the new vertex
// counted upwards), canonically relabeled.
inline std::vector<Graph> canonical_children(const Graph& parent) {
  const int m = parent.order();
  const int n = m + 1;
  const auto parent_form = canonical_form(parent);
  std::set<CanonicalForm> seen;
  std::vector<Graph> out;
  const std::uint64_t limit = std::uint64_t{1} << m;
  for (std::uint64_t nbrs = 0; nbrs < limit; ++nbrs) {
    std::vector<std::uint64_t> adj(parent.rows().begin(), parent.rows().end());
    adj.push_back(nbrs);
    for (int u : VertexSet(nbrs)) adj[u] |= VertexSet::bit(m);
    auto child = Graph::trusted(n, std::move(adj));
    auto lab = canonical_labeling(child);
    const int last = lab.order.back();
    if (last != m) {
      if (child.degree(last) != child.degree(m)) continue;
      if (canonical_form(delete_vertex(child, last)) != parent_form) continue;
    }
    if (seen.insert(lab.form).second) out.push_back(lab.form.graph());
  }
  return out;
}

namespace detail {

inline void run_parallel(std::size_t count, int jobs, const std::function<void(std::size_t)>& work) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t k = 0; k < count; ++k) work(k);
    return;
  }
  std::vector<std::thread> pool;
  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t k = w; k < count; k += workers) work(k);
    });
  for (auto& t : pool) t.join();
}

inline void check_exhaustive_order(int n) {
  if (n < 1 || n > max_exhaustive_order)
    throw capacity_error("exhaustive enumeration supports 1 <= n <= 9, got " + std::to_string(n));
}

}  // namespace detail

inline const std::vector<Graph>& unlabeled_graphs(int n, int jobs = 1);

// Representatives whose parent (on n-1 vertices) has index congruent to `part`
// modulo `parts`. Concatenating parts 0..parts-1 in parent order reproduces
// enumerate_unlabeled(n); each part is deterministic on its own.
inline std::vector<Graph> enumerate_partition(int n, int part, int parts, int jobs = 1) {
  detail::check_exhaustive_order(n);
  if (parts < 1 || part < 0 || part >= parts) throw input_error("invalid partition index");
  if (n == 1) return part == 0 ? std::vector<Graph>{Graph(1)} : std::vector<Graph>{};
  const auto& parents = unlabeled_graphs(n - 1, jobs);
  std::vector<std::size_t> mine;
  for (std::size_t k = static_cast<std::size_t>(part); k < parents.size(); k += static_cast<std::size_t>(parts))
    mine.push_back(k);
  std::vector<std::vector<Graph>> buckets(mine.size());
  detail::run_parallel(mine.size(), jobs, [&](std::size_t k) { buckets[k] = canonical_children(parents[mine[k]]); });
  std::vector<Graph> out;
  for (auto& b : buckets)
    for (auto& g : b) out.push_back(std::move(g));
  return out;
}

// One canonical representative per isomorphism class on n vertices, in generation
// order. Results are independent of `jobs`.
inline std::vector<Graph> enumerate_unlabeled(int n, int jobs = 1) {
  detail::check_exhaustive_order(n);
  if (n == 1) return {Graph(1)};
  const auto& parents = unlabeled_graphs(n - 1, jobs);
  std::vector<std::vector<Graph>> buckets(parents.size());
  detail::run_parallel(parents.size(), jobs, [&](std::size_t k) { buckets[k] = canonical_children(parents[k]); });
  std::vector<Graph> out;
  for (auto& b : buckets)
    for (auto& g : b) out.push_back(std::move(g));
  return out;
}

// Process-wide cache of enumerate_unlabeled; references stay valid.
inline const std::vector<Graph>& unlabeled_graphs(int n, int jobs) {
  detail::check_exhaustive_order(n);
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<std::vector<Graph>>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  auto computed = std::make_unique<std::vector<Graph>>(enumerate_unlabeled(n, jobs));
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::move(computed));
  return *it->second;
}

namespace detail {

// Canonical string of the rooted subtree at v (parent p), AHU style.
inline std::string rooted_code(const Graph& t, int v, int p) {
  std::vector<std::string> kids;
  for (int w : t.neighbors(v))
    if (w != p) kids.push_back(rooted_code(t, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& k : kids) s += k;
  return s + ")";
}

inline Graph tree_from_levels(const std::vector<int>& level) {
  const int n = static_cast<int>(level.size());
  std::vector<std::pair<int, int>> edges;
  std::vector<int> last_at(static_cast<std::size_t>(n), -1);
  for (int k = 0; k < n; ++k) {
    if (level[k] > 0) edges.emplace_back(last_at[level[k] - 1], k);
    last_at[level[k]] = k;
  }
  return Graph::from_edges(n, edges);
}

inline std::vector<int> centroids(const Graph& t) {
  const int n = t.order();
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    int biggest = 0;
    for (int w : t.neighbors(v)) {
      // size of the component of t - v containing w
      VertexSet seen{v, w};
      VertexSet frontier{w};
      while (!frontier.empty()) {
        VertexSet next;
        for (int x : frontier) next = next | t.neighbors(x);
        frontier = next - seen;
        seen = seen | next;
      }
      biggest = std::max(biggest, seen.size() - 1);
    }
    if (2 * biggest <= n) out.push_back(v);
  }
  return out;
}

}  // namespace detail

// One representative per unlabeled tree. Rooted trees are produced as canonical
// level sequences (Beyer-Hedetniemi successor); a rooted tree is kept only when
// its root is a centroid, and for bicentroidal trees only from the side whose
// rooted code is not smaller.
inline std::vector<Graph> enumerate_trees(int n) {
  if (n < 1 || n > max_tree_order)
    throw capacity_error("tree enumeration supports 1 <= n <= 12, got " + std::to_string(n));
  std::vector<int> level(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) level[k] = k;
  std::vector<Graph> out;
  for (;;) {
    auto t = detail::tree_from_levels(level);
    auto cents = detail::centroids(t);
    bool keep = std::find(cents.begin(), cents.end(), 0) != cents.end();
    if (keep && cents.size() == 2) {
      const int other = cents[0] == 0 ? cents[1] : cents[0];
      keep = detail::rooted_code(t, 0, other) >= detail::rooted_code(t, other, 0);
    }
    if (keep) out.push_back(t);

    int p = n - 1;
    while (p > 0 && level[p] <= 1) --p;
    if (p == 0) break;
    int q = p - 1;
    while (level[q] != level[p] - 1) --q;
    const int gap = p - q;
    for (int k = p; k < n; ++k) level[k] = level[k - gap];
  }
  return out;
}

// Uniform labeled G(n, 1/2): each pair is an edge with probability 1/2, taken
// from raw mt19937_64 bits so the sequence is identical on every platform.
inline std::vector<Graph> sample_graphs(int n, int count, std::uint64_t seed) {
  if (n < 0 || n > max_sample_order) throw capacity_error("sampling supports n <= 32");
  if (count < 0) throw input_error("sample count must be non-negative");
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int s = 0; s < count; ++s) {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    std::uint64_t word = 0;
    int left = 0;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        if (left == 0) {
          word = rng();
          left = 64;
        }
        if (word & 1U) {
          adj[i] |= VertexSet::bit(j);
          adj[j] |= VertexSet::bit(i);
        }
        word >>= 1;
        --left;
      }
    }
    out.push_back(Graph::trusted(n, std::move(adj)));
  }
  return out;
}

}  // namespace edgebetti
