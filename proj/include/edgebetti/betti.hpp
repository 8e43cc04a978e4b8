#pragma once

// Graded Betti numbers of edge ideals via Hochster's formula:
//   beta_{i,j}(I_G) = sum over j-subsets W of dim H~_{j-i-2}(Ind(G[W])).
// Row r of a table holds the entries with j - i = r.

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "edgebetti/enumeration.hpp"
#include "edgebetti/graph.hpp"
#include "edgebetti/homology.hpp"

namespace edgebetti {

inline constexpr int max_table_order = 16;

namespace detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw capacity_error("Betti number overflows 64 bits");
  return out;
}

// Ind(G[W]) is a cone, hence acyclic, when W has a vertex with no neighbour in W.
inline bool has_isolated_vertex(const Graph& g, VertexSet w) {
  for (int v : w)
    if ((g.neighbors(v) & w).empty()) return true;
  return false;
}

// Next subset of the same size (Gosper), 0 once exhausted below `n` bits.
inline std::uint64_t next_same_size(std::uint64_t x, int n) {
  const std::uint64_t c = x & -x;
  const std::uint64_t r = x + c;
  if (r == 0) return 0;
  const std::uint64_t next = (((r ^ x) >> 2) / c) | r;
  if (n < 64 && (next >> n)) return 0;
  return next;
}

}  // namespace detail

class BettiTable {
 public:
  BettiTable() = default;
  BettiTable(int n, FieldSpec field) : n_(n), field_(field) {}

  int vertex_count() const { return n_; }
  FieldSpec field() const { return field_; }
  const std::map<std::pair<int, int>, std::uint64_t>& entries() const { return entries_; }

  std::uint64_t at(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
  }

  void add(int i, int j, std::uint64_t v) {
    if (v == 0) return;
    auto& slot = entries_[{i, j}];
    slot = detail::checked_add(slot, v);
  }

  bool empty() const { return entries_.empty(); }

  // Entries of row r ordered by column i.
  std::vector<std::pair<int, std::uint64_t>> row(int r) const {
    std::vector<std::pair<int, std::uint64_t>> out;
    for (auto [ij, v] : entries_)
      if (ij.second - ij.first == r) out.emplace_back(ij.first, v);
    return out;
  }

  std::optional<int> top_row() const {
    std::optional<int> r;
    for (auto [ij, v] : entries_) r = std::max(r.value_or(ij.second - ij.first), ij.second - ij.first);
    return r;
  }

  // Rows j - i downwards, columns i across; zeros shown as '.'.
  std::string grid() const {
    std::ostringstream out;
    if (entries_.empty()) {
      out << "(zero ideal)\n";
      return out.str();
    }
    int lo_row = 1 << 30;
    int hi_row = 0;
    int hi_col = 0;
    std::size_t width = 1;
    for (auto [ij, v] : entries_) {
      lo_row = std::min(lo_row, ij.second - ij.first);
      hi_row = std::max(hi_row, ij.second - ij.first);
      hi_col = std::max(hi_col, ij.first);
      width = std::max(width, std::to_string(v).size());
    }
    width = std::max(width, std::to_string(hi_col).size()) + 1;
    out << std::setw(4) << "";
    for (int i = 0; i <= hi_col; ++i) out << std::setw(static_cast<int>(width)) << i;
    out << '\n';
    for (int r = lo_row; r <= hi_row; ++r) {
      out << std::setw(3) << r << ':';
      for (int i = 0; i <= hi_col; ++i) {
        auto v = at(i, i + r);
        out << std::setw(static_cast<int>(width)) << (v ? std::to_string(v) : ".");
      }
      out << '\n';
    }
    return out.str();
  }

  bool operator==(const BettiTable&) const = default;

 private:
  int n_ = 0;
  FieldSpec field_;
  std::map<std::pair<int, int>, std::uint64_t> entries_;
};

// Contribution of a single W: dim H~_d(Ind(G[W])).
inline std::int64_t hochster_term(const Graph& g, VertexSet w, int d, FieldSpec field = {}) {
  if (d < -1) return 0;
  if (w.empty()) return d == -1 ? 1 : 0;
  if (detail::has_isolated_vertex(g, w)) return 0;
  auto band = independence_complex_band(g, w, std::max(d - 1, -1), d + 1);
  return homology_in_degree(band, d, field);
}

inline std::uint64_t hochster_entry(const Graph& g, int i, int j, FieldSpec field = {}, int jobs = 1) {
  const int n = g.order();
  if (i < 0 || j < 0 || j > n) return 0;
  const int d = j - i - 2;
  if (d < -1) return 0;

  // Split the j-subsets by their smallest vertex so workers get disjoint ranges.
  std::vector<std::uint64_t> partial(static_cast<std::size_t>(n), 0);
  detail::run_parallel(static_cast<std::size_t>(n), jobs, [&](std::size_t lowest) {
    const int low = static_cast<int>(lowest);
    if (n - low < j) return;
    const std::uint64_t head = VertexSet::bit(low);
    const int rest_bits = n - low - 1;
    std::uint64_t total = 0;
    if (j == 1) {
      total = static_cast<std::uint64_t>(std::max<std::int64_t>(0, hochster_term(g, VertexSet(head), d, field)));
    } else {
      std::uint64_t rest = (std::uint64_t{1} << (j - 1)) - 1;
      for (; rest; rest = detail::next_same_size(rest, rest_bits)) {
        const VertexSet w(head | (rest << (low + 1)));
        total = detail::checked_add(total, static_cast<std::uint64_t>(hochster_term(g, w, d, field)));
      }
    }
    partial[lowest] = total;
  });
  std::uint64_t sum = 0;
  for (auto v : partial) sum = detail::checked_add(sum, v);
  return sum;
}

// Every non-zero entry, one reduced homology computation per induced subgraph.
inline BettiTable betti_table(const Graph& g, FieldSpec field = {}, int jobs = 1) {
  const int n = g.order();
  if (n > max_table_order)
    throw capacity_error("full Betti tables support n <= 16, got " + std::to_string(n) +
                         "; query single entries instead");
  const std::uint64_t total = std::uint64_t{1} << n;
  const auto chunks = static_cast<std::size_t>(std::max(1, std::min(jobs, 64)) * 8);
  std::vector<BettiTable> partial(chunks, BettiTable(n, field));
  detail::run_parallel(chunks, jobs, [&](std::size_t c) {
    for (std::uint64_t w = c + 1; w < total; w += chunks) {
      const VertexSet set(w);
      if (detail::has_isolated_vertex(g, set)) continue;
      const auto sub = induced_subgraph(g, set);
      const auto profile = reduced_homology(independence_complex(sub), field);
      for (auto [d, dim] : profile.dims) partial[c].add(set.size() - d - 2, set.size(), static_cast<std::uint64_t>(dim));
    }
  });
  BettiTable out(n, field);
  for (const auto& part : partial)
    for (auto [ij, v] : part.entries()) out.add(ij.first, ij.second, v);
  return out;
}

// max{ j - i : beta_{i,j} != 0 }.
inline int regularity(const Graph& g, FieldSpec field = {}, int jobs = 1) {
  if (g.edge_count() == 0) throw undefined_regularity_error("regularity of the zero ideal is undefined");
  return *betti_table(g, field, jobs).top_row();
}

struct ParabolicIndex {
  int r = 3;
  int p = 0;
  constexpr int i() const { return r - 2 + p; }
  constexpr int j() const { return 2 * (r - 1) + p; }
  constexpr bool operator==(const ParabolicIndex&) const = default;
};

// Number of columns past the diagonal in the parabolic window of row r.
constexpr int parabolic_width(int r) { return r < 4 ? 0 : (r - 2) * (r - 3) / 2; }

inline std::vector<ParabolicIndex> parabolic_indices(int r) {
  if (r < 3) throw input_error("parabolic rows start at r = 3");
  std::vector<ParabolicIndex> out;
  for (int p = 0; p <= parabolic_width(r); ++p) out.push_back({r, p});
  return out;
}

inline std::optional<ParabolicIndex> parabolic_at(int i, int j) {
  const int r = j - i;
  if (r < 3) return std::nullopt;
  const int p = i - (r - 2);
  if (p < 0 || p > parabolic_width(r)) return std::nullopt;
  return ParabolicIndex{r, p};
}

inline bool is_parabolic(int i, int j) { return parabolic_at(i, j).has_value(); }

}  // namespace edgebetti
