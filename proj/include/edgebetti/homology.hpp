#pragma once

// Independence complexes and reduced simplicial homology over GF(p).
//
// Faces are vertex bitsets. A complex stores a contiguous band of dimensions
// [first_dim, last_dim]; a full complex starts at -1 (the empty face) and is not
// truncated above. Truncated bands are what per-entry Hochster queries build.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "edgebetti/error.hpp"
#include "edgebetti/graph.hpp"

namespace edgebetti {

class FieldSpec {
 public:
  constexpr FieldSpec() = default;
  explicit FieldSpec(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (1U << 31)) throw input_error("field characteristic must satisfy 2 <= p < 2^31");
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
      if (p % d == 0) throw input_error("field characteristic " + std::to_string(p) + " is not prime");
  }
  constexpr std::uint32_t characteristic() const { return p_; }
  constexpr bool operator==(const FieldSpec&) const = default;

 private:
  std::uint32_t p_ = 2;
};

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // layers[k] lists the faces of dimension first_dim + k. Faces are sorted and
  // deduplicated here. `truncated_top` marks that faces above the last layer exist
  // but were not generated.
  SimplicialComplex(int vertex_count, int first_dim, std::vector<std::vector<std::uint64_t>> layers,
                    bool truncated_top = false)
      : n_(vertex_count), first_dim_(first_dim), layers_(std::move(layers)), truncated_top_(truncated_top) {
    if (first_dim_ < -1) throw input_error("faces have dimension >= -1");
    for (std::size_t k = 0; k < layers_.size(); ++k) {
      auto& layer = layers_[k];
      std::sort(layer.begin(), layer.end());
      layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
      const int size = first_dim_ + static_cast<int>(k) + 1;
      for (auto f : layer)
        if (std::popcount(f) != size) throw input_error("face size does not match its layer dimension");
    }
  }

  int vertex_count() const { return n_; }
  int first_dim() const { return first_dim_; }
  int last_dim() const { return first_dim_ + static_cast<int>(layers_.size()) - 1; }
  bool truncated_top() const { return truncated_top_; }
  bool complete() const { return first_dim_ == -1 && !truncated_top_; }

  // Whether the faces of dimension d are known (possibly known to be none).
  bool knows(int d) const { return d >= first_dim_ && (d <= last_dim() || !truncated_top_); }

  const std::vector<std::uint64_t>& faces(int d) const {
    static const std::vector<std::uint64_t> none;
    if (!knows(d)) throw input_error("faces of dimension " + std::to_string(d) + " were not generated");
    if (d > last_dim()) return none;
    return layers_[static_cast<std::size_t>(d - first_dim_)];
  }

  // f_{-1}, f_0, ... for a complete complex, trailing zeros dropped.
  std::vector<std::int64_t> f_vector() const {
    std::vector<std::int64_t> f;
    for (const auto& layer : layers_) f.push_back(static_cast<std::int64_t>(layer.size()));
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
  }

  // Every codimension-one face of a face in a known band is present.
  bool downward_closed() const {
    for (int d = std::max(first_dim_ + 1, 0); d <= last_dim(); ++d) {
      const auto& lower = faces(d - 1);
      for (auto f : faces(d))
        for (int v : VertexSet(f))
          if (!std::binary_search(lower.begin(), lower.end(), f & ~VertexSet::bit(v))) return false;
    }
    return true;
  }

 private:
  int n_ = 0;
  int first_dim_ = -1;
  std::vector<std::vector<std::uint64_t>> layers_;
  bool truncated_top_ = false;
};

// Reduced Betti numbers of the complex: dims[i] = dim H~_i. Zero entries omitted.
struct HomologyProfile {
  std::map<int, std::int64_t> dims;

  std::int64_t at(int i) const {
    auto it = dims.find(i);
    return it == dims.end() ? 0 : it->second;
  }
  bool acyclic() const { return dims.empty(); }
  bool operator==(const HomologyProfile&) const = default;
};

namespace detail {

// Independent sets of g inside w with sizes in [lo, hi], bucketed by size; also
// reports whether some independent set of size hi + 1 exists.
inline void collect_independent(const Graph& g, VertexSet w, int lo, int hi,
                                std::vector<std::vector<std::uint64_t>>& by_size, bool& larger_exists) {
  by_size.assign(static_cast<std::size_t>(hi + 1), {});
  larger_exists = false;
  // stack of (face, allowed extension vertices)
  struct Frame {
    std::uint64_t face;
    std::uint64_t allowed;
  };
  std::vector<Frame> stack{{0, w.bits()}};
  while (!stack.empty()) {
    auto [face, allowed] = stack.back();
    stack.pop_back();
    const int size = std::popcount(face);
    if (size >= lo) by_size[size].push_back(face);
    if (size == hi) {
      if (allowed) larger_exists = true;
      continue;
    }
    while (allowed) {
      const int v = std::countr_zero(allowed);
      allowed &= allowed - 1;
      // only larger vertices extend, so every set appears once
      stack.push_back({face | VertexSet::bit(v), allowed & ~g.row(v)});
    }
  }
}

inline int rank_mod2(std::vector<std::vector<std::uint64_t>>& rows, std::size_t width_words) {
  std::vector<std::vector<std::uint64_t>> pivots;  // reduced rows, keyed by leading bit
  std::map<int, std::size_t> by_lead;
  int rank = 0;
  for (auto& row : rows) {
    for (;;) {
      int lead = -1;
      for (std::size_t k = width_words; k-- > 0;)
        if (row[k]) {
          lead = static_cast<int>(k * 64) + 63 - std::countl_zero(row[k]);
          break;
        }
      if (lead < 0) break;
      auto it = by_lead.find(lead);
      if (it == by_lead.end()) {
        by_lead.emplace(lead, pivots.size());
        pivots.push_back(std::move(row));
        ++rank;
        break;
      }
      const auto& p = pivots[it->second];
      for (std::size_t k = 0; k < width_words; ++k) row[k] ^= p[k];
    }
  }
  return rank;
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline int rank_mod_p(std::vector<std::vector<std::uint32_t>>& m, std::uint32_t p) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  int rank = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const std::uint64_t inv = pow_mod(m[r][c], p - 2, p);
    for (std::size_t k = c; k < cols; ++k) m[r][k] = static_cast<std::uint32_t>(m[r][k] * inv % p);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      const std::uint64_t factor = m[i][c];
      if (!factor) continue;
      for (std::size_t k = c; k < cols; ++k) {
        const std::uint64_t sub = factor * m[r][k] % p;
        m[i][k] = static_cast<std::uint32_t>((m[i][k] + p - sub) % p);
      }
    }
    ++r;
    ++rank;
  }
  return rank;
}

// Rank of the boundary map from dimension d to dimension d - 1, signs (-1)^k for
// dropping the k-th smallest vertex.
inline int boundary_rank(const SimplicialComplex& c, int d, FieldSpec field) {
  if (d < 0) return 0;
  const auto& upper = c.faces(d);
  const auto& lower = c.faces(d - 1);
  if (upper.empty() || lower.empty()) {
    if (!upper.empty()) throw invariant_error("complex is not downward closed");
    return 0;
  }
  auto column = [&](std::uint64_t face) -> std::size_t {
    auto it = std::lower_bound(lower.begin(), lower.end(), face);
    if (it == lower.end() || *it != face) throw invariant_error("complex is not downward closed");
    return static_cast<std::size_t>(it - lower.begin());
  };
  const std::uint32_t p = field.characteristic();
  if (p == 2) {
    const std::size_t words = (lower.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(upper.size(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t r = 0; r < upper.size(); ++r)
      for (int v : VertexSet(upper[r])) {
        auto col = column(upper[r] & ~VertexSet::bit(v));
        rows[r][col / 64] |= std::uint64_t{1} << (col % 64);
      }
    return rank_mod2(rows, words);
  }
  std::vector<std::vector<std::uint32_t>> rows(upper.size(), std::vector<std::uint32_t>(lower.size(), 0));
  for (std::size_t r = 0; r < upper.size(); ++r) {
    int k = 0;
    for (int v : VertexSet(upper[r])) {
      auto col = column(upper[r] & ~VertexSet::bit(v));
      rows[r][col] = (k % 2 == 0) ? 1 : p - 1;
      ++k;
    }
  }
  return rank_mod_p(rows, p);
}

}  // namespace detail

// All independent sets of g, the empty set included.
inline SimplicialComplex independence_complex(const Graph& g) {
  std::vector<std::vector<std::uint64_t>> by_size;
  bool larger = false;
  detail::collect_independent(g, g.vertices(), 0, g.order(), by_size, larger);
  while (by_size.size() > 1 && by_size.back().empty()) by_size.pop_back();
  return SimplicialComplex(g.order(), -1, std::move(by_size), false);
}

// Band [lo_dim, hi_dim] of Ind(g[w]), faces labeled by the host vertices.
inline SimplicialComplex independence_complex_band(const Graph& g, VertexSet w, int lo_dim, int hi_dim) {
  if (lo_dim < -1 || hi_dim < lo_dim) throw input_error("invalid dimension band");
  if (!w.subset_of(g.vertices())) throw input_error("vertex set is not contained in the graph");
  std::vector<std::vector<std::uint64_t>> by_size;
  bool larger = false;
  const int hi_size = std::min(hi_dim + 1, w.size());
  if (lo_dim + 1 > hi_size) return SimplicialComplex(g.order(), lo_dim, {}, false);
  detail::collect_independent(g, w, lo_dim + 1, hi_size, by_size, larger);
  std::vector<std::vector<std::uint64_t>> layers(by_size.begin() + lo_dim + 1, by_size.end());
  return SimplicialComplex(g.order(), lo_dim, std::move(layers), larger);
}

inline HomologyProfile reduced_homology(const SimplicialComplex& c, FieldSpec field = {}) {
  if (!c.complete()) throw input_error("reduced_homology needs a complete complex; use homology_in_degree");
  if (!c.downward_closed()) throw invariant_error("complex is not downward closed");
  HomologyProfile out;
  int rank_below = 0;  // rank of the boundary out of dimension d
  for (int d = -1; d <= c.last_dim(); ++d) {
    const int rank_above = detail::boundary_rank(c, d + 1, field);
    const auto dim = static_cast<std::int64_t>(c.faces(d).size()) - rank_below - rank_above;
    if (dim != 0) out.dims[d] = dim;
    rank_below = rank_above;
  }
  return out;
}

// dim H~_i from the faces of dimensions i-1, i, i+1 alone.
inline std::int64_t homology_in_degree(const SimplicialComplex& c, int i, FieldSpec field = {}) {
  if (i < -1) return 0;
  if (!c.knows(i) || !c.knows(i + 1) || (i >= 0 && !c.knows(i - 1)))
    throw input_error("homology in degree " + std::to_string(i) + " needs faces of dimensions i-1..i+1");
  const auto& faces = c.faces(i);
  if (faces.empty()) return 0;
  const int below = detail::boundary_rank(c, i, field);
  const int above = detail::boundary_rank(c, i + 1, field);
  return static_cast<std::int64_t>(faces.size()) - below - above;
}

// Sum over d of (-1)^d f_d, including the empty face.
inline std::int64_t reduced_euler_characteristic(const SimplicialComplex& c) {
  std::int64_t chi = 0;
  for (int d = c.first_dim(); d <= c.last_dim(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(c.faces(d).size());
  return chi;
}

inline std::int64_t euler_characteristic(const HomologyProfile& h) {
  std::int64_t chi = 0;
  for (auto [d, v] : h.dims) chi += ((d % 2 + 2) % 2 == 0 ? 1 : -1) * v;
  return chi;
}

}  // namespace edgebetti
