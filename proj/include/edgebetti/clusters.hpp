#pragma once

// k-clusters (disjoint unions of cliques), the parabolic ones, their Dyck-path
// bijection, and the complement-of-cycle-and-tree constructions.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "edgebetti/betti.hpp"
#include "edgebetti/error.hpp"
#include "edgebetti/graph.hpp"
#include "edgebetti/homology.hpp"

namespace edgebetti {

class ClusterSpec {
 public:
  ClusterSpec() = default;
  explicit ClusterSpec(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int a : parts_)
      if (a < 1) throw input_error("cluster parts must be positive");
    std::sort(parts_.begin(), parts_.end());
  }

  const std::vector<int>& parts() const { return parts_; }
  int k() const { return static_cast<int>(parts_.size()); }
  int order() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  bool is_parabolic() const {
    if (k() < 2 || parts_[0] != 2) return false;
    for (int i = 1; i < k(); ++i)
      if (parts_[i] < 2 || parts_[i] > i + 1) return false;
    return true;
  }

  std::string to_string() const {
    std::string s = "c(";
    for (int i = 0; i < k(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + ")";
  }

  auto operator<=>(const ClusterSpec&) const = default;

 private:
  std::vector<int> parts_;
};

inline constexpr int max_parabolic_k = 12;

// Parabolic k-clusters in lexicographic order of their sorted parts.
inline std::vector<ClusterSpec> parabolic_clusters(int k) {
  if (k < 2) throw input_error("parabolic clusters need k >= 2");
  if (k > max_parabolic_k) throw capacity_error("parabolic clusters are listed for k <= 12");
  std::vector<ClusterSpec> out;
  std::vector<int> parts(static_cast<std::size_t>(k), 2);
  // parts[i] ranges over [parts[i-1], i+1] with parts[0] = parts[1] = 2
  auto extend = [&](auto&& self, int i) -> void {
    if (i == k) {
      out.emplace_back(parts);
      return;
    }
    for (int a = std::max(2, parts[i - 1]); a <= i + 1; ++a) {
      parts[i] = a;
      self(self, i + 1);
    }
  };
  extend(extend, 1);
  return out;
}

// Lattice path of R (right) and U (up) steps that never has more U than R in a prefix.
class DyckPath {
 public:
  DyckPath() = default;
  explicit DyckPath(std::string steps) : steps_(std::move(steps)) {
    int height = 0;
    for (char c : steps_) {
      if (c == 'R')
        ++height;
      else if (c == 'U')
        --height;
      else
        throw input_error("Dyck path steps are R and U");
      if (height < 0) throw input_error("Dyck path crosses the diagonal");
    }
    if (height != 0) throw input_error("Dyck path is not balanced");
  }

  const std::string& steps() const { return steps_; }
  int semilength() const { return static_cast<int>(steps_.size() / 2); }

  // Column heights: entry i (1-based, i = 1..m) is 1 + the number of U steps
  // before the i-th R; entry 0 is 0.
  std::vector<int> heights() const {
    std::vector<int> h{0};
    int ups = 0;
    for (char c : steps_) {
      if (c == 'U') ++ups;
      else h.push_back(ups + 1);
    }
    return h;
  }

  auto operator<=>(const DyckPath&) const = default;

 private:
  std::string steps_;
};

inline std::vector<DyckPath> dyck_paths(int m) {
  if (m < 0 || m > 15) throw capacity_error("Dyck paths are listed for semilength <= 15");
  std::vector<DyckPath> out;
  std::string cur;
  auto walk = [&](auto&& self, int r, int u) -> void {
    if (r == m && u == m) {
      out.emplace_back(cur);
      return;
    }
    if (r < m) {
      cur.push_back('R');
      self(self, r + 1, u);
      cur.pop_back();
    }
    if (u < r) {
      cur.push_back('U');
      self(self, r, u + 1);
      cur.pop_back();
    }
  };
  walk(walk, 0, 0);
  return out;
}

// Heights h_0 = a_1 - 2 = 0 and h_i = a_{i+1} - 1 drawn as a monotone path in a
// (k-1) x (k-1) square: before the i-th R step the path has risen to h_i - 1.
inline DyckPath cluster_to_dyck(const ClusterSpec& spec) {
  if (!spec.is_parabolic()) throw input_error(spec.to_string() + " is not parabolic");
  const auto& a = spec.parts();
  std::string steps;
  int risen = 0;
  for (int i = 1; i < spec.k(); ++i) {
    const int target = a[i] - 2;
    steps.append(static_cast<std::size_t>(target - risen), 'U');
    risen = target;
    steps.push_back('R');
  }
  steps.append(static_cast<std::size_t>(spec.k() - 1 - risen), 'U');
  return DyckPath(steps);
}

inline ClusterSpec dyck_to_cluster(const DyckPath& path) {
  const int m = path.semilength();
  if (m < 1) throw input_error("parabolic clusters correspond to Dyck paths of semilength >= 1");
  std::vector<int> parts{2};
  int ups = 0;
  for (char c : path.steps()) {
    if (c == 'U') ++ups;
    else parts.push_back(ups + 2);
  }
  ClusterSpec spec(parts);
  if (!spec.is_parabolic()) throw invariant_error("Dyck path decoded to a non-parabolic cluster");
  return spec;
}

inline std::uint64_t catalan(int n) {
  if (n < 0) throw input_error("Catalan numbers need n >= 0");
  if (n > 30) throw capacity_error("Catalan numbers are computed for n <= 30");
  u128 c = 1;
  for (int k = 1; k <= n; ++k) c = c * static_cast<unsigned>(2 * (2 * k - 1)) / static_cast<unsigned>(k + 1);
  return static_cast<std::uint64_t>(c);
}

inline Graph cluster_graph(const ClusterSpec& spec) {
  if (spec.order() > max_vertices) throw capacity_error("cluster exceeds 64 vertices");
  return cluster_of(spec.parts());
}

inline constexpr int max_construction_order = 20;

// complement(C_a + T) + M_c, with C_a on vertices 0..a-1, T next, then the matching.
inline Graph section6_graph(int a, const Graph& tree, int c) {
  if (a < 3) throw input_error("cycle length must be at least 3");
  if (c < 0) throw input_error("matching size must be non-negative");
  if (tree.order() > 0 && !is_tree(tree)) throw input_error("second argument must be a tree");
  if (a + tree.order() + 2 * c > max_construction_order)
    throw capacity_error("construction limited to 20 vertices");
  return disjoint_union({complement(disjoint_union({cycle_graph(a), tree})), matching_graph(c)});
}

struct RowPatternShape {
  int a = 0;
  int b = 0;
  int c = 0;
};

inline RowPatternShape row_pattern_shape(int r, int i, int n) {
  if (r < 3) throw input_error("row must be at least 3");
  if (i < 2 * r - 4) throw input_error("column must satisfy i >= 2r - 4");
  if (n < i + r - 4) throw input_error("order must satisfy n >= i + r - 4");
  return {i - 2 * r + 7, n - i + r - 4, r - 3};
}

inline Graph row_pattern_graph(int r, int i, int n, const Graph& tree) {
  const auto shape = row_pattern_shape(r, i, n);
  if (tree.order() != shape.b)
    throw input_error("tree must have n - i + r - 4 = " + std::to_string(shape.b) + " vertices");
  return section6_graph(shape.a, tree, shape.c);
}

// Brute force over every induced subgraph H of section6_graph(a, tree, c):
//   (1) each m in [a+2c, a+b+2c] has some H on m vertices with dim H~_{c+1} = 1,
//   (2) every H on fewer than a+2c vertices has H~_{c+1} = 0,
//   (3) every H has H~_{c+i} = 0 for i > 1.
struct SpecialConstructionCheck {
  int a = 0;
  int b = 0;
  int c = 0;
  bool part1 = true;
  bool part2 = true;
  bool part3 = true;
  std::vector<int> orders_missing_part1;  // m values without a witness
};

inline SpecialConstructionCheck check_special_construction(int a, const Graph& tree, int c, FieldSpec field = {}) {
  const Graph g = section6_graph(a, tree, c);
  SpecialConstructionCheck out{a, tree.order(), c, true, true, true, {}};
  const int n = g.order();
  std::vector<char> witnessed(static_cast<std::size_t>(n + 1), 0);
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
    const VertexSet set(w);
    const int m = set.size();
    const auto profile = reduced_homology(independence_complex(induced_subgraph(g, set)), field);
    const auto top = profile.at(c + 1);
    if (top == 1) witnessed[m] = 1;
    if (m < a + 2 * c && top != 0) out.part2 = false;
    for (auto [d, v] : profile.dims)
      if (d > c + 1 && v != 0) out.part3 = false;
  }
  for (int m = a + 2 * c; m <= a + out.b + 2 * c; ++m)
    if (!witnessed[m]) {
      out.part1 = false;
      out.orders_missing_part1.push_back(m);
    }
  return out;
}

// Row r of the Betti table of row_pattern_graph(r, i, n, tree):
//   (1) beta_{j,r+j} > 0 for i < j <= n - r,
//   (2) beta_{j,r+j} = 0 for j <= i,
//   (3) rows beyond r vanish.
// Also records whether the rows before r vanish, the other reading of (3).
struct RowPatternCheck {
  int r = 0;
  int i = 0;
  int n = 0;
  BettiTable table;
  bool conclusion1 = true;
  bool conclusion2 = true;
  bool rows_above_zero = true;  // j - i > r
  bool rows_below_zero = true;  // j - i < r
};

inline RowPatternCheck check_row_pattern(int r, int i, int n, const Graph& tree, FieldSpec field = {}, int jobs = 1) {
  const Graph g = row_pattern_graph(r, i, n, tree);
  RowPatternCheck out{r, i, n, betti_table(g, field, jobs)};
  for (int j = 0; j <= n - r; ++j) {
    const auto v = out.table.at(j, r + j);
    if (j > i && v == 0) out.conclusion1 = false;
    if (j <= i && v != 0) out.conclusion2 = false;
  }
  for (auto [ij, v] : out.table.entries()) {
    if (ij.second - ij.first > r) out.rows_above_zero = false;
    if (ij.second - ij.first < r) out.rows_below_zero = false;
  }
  return out;
}

}  // namespace edgebetti
