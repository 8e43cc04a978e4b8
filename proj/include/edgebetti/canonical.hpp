#pragma once

// Canonical labeling by individualization-refinement: equitable refinement of an
// ordered partition, depth-first search over individualized vertices, pruning by
// automorphisms discovered at equivalent leaves. The canonical form is the
// minimum relabeled adjacency over the explored leaves; pruning only removes
// subtrees that are automorphic images of explored ones, so the minimum does not
// depend on the input labeling.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <vector>

#include "edgebetti/graph.hpp"

namespace edgebetti {

// Two graphs have equal forms iff they are isomorphic. Ordered by (n, rows).
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint64_t> rows;

  auto operator<=>(const CanonicalForm&) const = default;
  bool operator==(const CanonicalForm&) const = default;

  Graph graph() const { return Graph::trusted(n, rows); }
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(f.n);
    for (auto r : f.rows) {
      h ^= r + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

struct CanonicalLabeling {
  std::vector<int> order;  // order[k] is the vertex placed at canonical position k
  CanonicalForm form;
  std::vector<std::vector<int>> generators;  // automorphisms found during the search
  // |Aut(g)|, or 0 if it does not fit in 64 bits.
  std::uint64_t automorphism_count = 1;
};

namespace detail {

using Cells = std::vector<std::uint64_t>;

// Refines to the coarsest equitable partition below `cells`. Sub-cells are ordered
// by neighbour count into the splitter, so the result depends only on the ordered
// partition, never on vertex names.
inline void refine(std::span<const std::uint64_t> adj, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t w = 0; w < cells.size(); ++w) {
      const std::uint64_t splitter = cells[w];
      for (std::size_t x = 0; x < cells.size(); ++x) {
        const std::uint64_t cell = cells[x];
        if (std::has_single_bit(cell)) continue;
        int lo = 65;
        int hi = -1;
        for (int v : VertexSet(cell)) {
          int c = std::popcount(adj[v] & splitter);
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        }
        if (lo == hi) continue;
        std::uint64_t groups[65] = {};
        for (int v : VertexSet(cell)) groups[std::popcount(adj[v] & splitter)] |= VertexSet::bit(v);
        std::vector<std::uint64_t> pieces;
        for (int c = lo; c <= hi; ++c)
          if (groups[c]) pieces.push_back(groups[c]);
        cells[x] = pieces[0];
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x) + 1, pieces.begin() + 1, pieces.end());
        x += pieces.size() - 1;
        changed = true;
      }
    }
  }
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : adj_(g.rows().begin(), g.rows().end()), n_(g.order()) {}

  CanonicalLabeling run() {
    CanonicalLabeling out;
    if (n_ == 0) return out;
    Cells cells{VertexSet::range(n_).bits()};
    refine(adj_, cells);
    search(cells);
    out.order = best_lab_;
    out.form = CanonicalForm{n_, best_cert_};
    out.automorphism_count = group_size();
    out.generators = std::move(gens_);
    return out;
  }

 private:
  static constexpr int no_jump = -1;

  std::vector<std::uint64_t> certificate(const std::vector<int>& lab) const {
    std::vector<int> pos(static_cast<std::size_t>(n_));
    for (int k = 0; k < n_; ++k) pos[lab[k]] = k;
    std::vector<std::uint64_t> cert(static_cast<std::size_t>(n_), 0);
    for (int k = 0; k < n_; ++k)
      for (int w : VertexSet(adj_[lab[k]])) cert[k] |= VertexSet::bit(pos[w]);
    return cert;
  }

  // Automorphism sending from[k] to to[k].
  std::vector<int> mapping(const std::vector<int>& from, const std::vector<int>& to) const {
    std::vector<int> perm(static_cast<std::size_t>(n_));
    for (int k = 0; k < n_; ++k) perm[from[k]] = to[k];
    return perm;
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return static_cast<int>(k);
  }

  int find(std::vector<int>& parent, int x) const {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  // Orbit representatives under the generators fixing `prefix` pointwise.
  std::vector<int> orbits_fixing(std::span<const int> prefix) const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& gen : gens_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int v) { return gen[v] == v; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(parent, v);
        int b = find(parent, gen[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(parent, v);
    return parent;
  }

  int leaf(const Cells& cells) {
    std::vector<int> lab(static_cast<std::size_t>(n_));
    for (int k = 0; k < n_; ++k) lab[k] = std::countr_zero(cells[k]);
    auto cert = certificate(lab);
    if (first_lab_.empty()) {
      first_lab_ = best_lab_ = lab;
      first_cert_ = best_cert_ = std::move(cert);
      first_path_ = best_path_ = path_;
      return no_jump;
    }
    if (cert == first_cert_) {
      gens_.push_back(mapping(first_lab_, lab));
      return common_prefix(path_, first_path_);
    }
    if (cert == best_cert_) {
      gens_.push_back(mapping(best_lab_, lab));
      return common_prefix(path_, best_path_);
    }
    if (cert < best_cert_) {
      best_lab_ = std::move(lab);
      best_cert_ = std::move(cert);
      best_path_ = path_;
    }
    return no_jump;
  }

  int search(const Cells& cells) {
    if (static_cast<int>(cells.size()) == n_) return leaf(cells);
    const int depth = static_cast<int>(path_.size());
    std::size_t target = 0;
    while (std::has_single_bit(cells[target])) ++target;

    std::vector<int> explored;
    for (int v : VertexSet(cells[target])) {
      if (!explored.empty() && !gens_.empty()) {
        auto orbit = orbits_fixing(path_);
        bool pruned = std::any_of(explored.begin(), explored.end(), [&](int u) { return orbit[u] == orbit[v]; });
        if (pruned) continue;
      }
      Cells child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
      child.push_back(VertexSet::bit(v));
      child.push_back(cells[target] & ~VertexSet::bit(v));
      child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());
      refine(adj_, child);

      path_.push_back(v);
      int jump = search(child);
      path_.pop_back();
      explored.push_back(v);
      if (jump != no_jump && jump < depth) return jump;
    }
    return no_jump;
  }

  // Orbit-stabilizer along the first path.
  std::uint64_t group_size() const {
    std::uint64_t size = 1;
    for (std::size_t k = 0; k < first_path_.size(); ++k) {
      auto orbit = orbits_fixing(std::span<const int>(first_path_.data(), k));
      std::uint64_t count = 0;
      for (int v = 0; v < n_; ++v) count += orbit[v] == orbit[first_path_[k]];
      if (size > UINT64_MAX / count) return 0;
      size *= count;
    }
    return size;
  }

  std::vector<std::uint64_t> adj_;
  int n_;
  std::vector<int> path_;
  std::vector<int> first_path_, best_path_;
  std::vector<int> first_lab_, best_lab_;
  std::vector<std::uint64_t> first_cert_, best_cert_;
  std::vector<std::vector<int>> gens_;
};

}  // namespace detail

inline CanonicalLabeling canonical_labeling(const Graph& g) { return detail::CanonicalSearch(g).run(); }

inline CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

// The canonical representative: g relabeled by its canonical order.
inline Graph canonical_graph(const Graph& g) { return canonical_form(g).graph(); }

inline std::uint64_t automorphism_count(const Graph& g) { return canonical_labeling(g).automorphism_count; }

inline bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  return canonical_form(a) == canonical_form(b);
}

namespace detail {

inline bool extend_embedding(const Graph& g, const Graph& h, const std::vector<int>& order, std::vector<int>& image,
                             VertexSet used, std::size_t k) {
  if (k == order.size()) return true;
  const int hv = order[k];
  VertexSet cand = g.vertices() - used;
  for (std::size_t i = 0; i < k; ++i) {
    if (h.adjacent(hv, order[i]))
      cand = cand & g.neighbors(image[i]);
    else
      cand = cand - g.neighbors(image[i]);
  }
  const int need = h.degree(hv);
  for (int x : cand) {
    if (g.degree(x) < need) continue;
    image[k] = x;
    if (extend_embedding(g, h, order, image, used.with(x), k + 1)) return true;
  }
  return false;
}

}  // namespace detail

// True iff some vertex subset of g induces a copy of h. Backtracking over
// vertex-by-vertex embeddings; candidates are intersected with the
// neighbourhoods (or non-neighbourhoods) of already placed images and filtered
// by degree.
inline bool contains_induced(const Graph& g, const Graph& h) {
  if (h.order() == 0) return true;
  if (h.order() > g.order() || h.edge_count() > g.edge_count()) return false;
  if (h.max_degree() > g.max_degree()) return false;

  // Place high-degree vertices first, then those most connected to the placed ones.
  std::vector<int> order;
  VertexSet placed;
  while (placed.size() < h.order()) {
    int best = -1;
    int best_key = -1;
    for (int v : h.vertices() - placed) {
      int key = 100 * (h.neighbors(v) & placed).size() + h.degree(v);
      if (key > best_key) {
        best_key = key;
        best = v;
      }
    }
    order.push_back(best);
    placed = placed.with(best);
  }
  std::vector<int> image(order.size(), -1);
  return detail::extend_embedding(g, h, order, image, VertexSet{}, 0);
}

}  // namespace edgebetti
