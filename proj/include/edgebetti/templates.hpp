#pragma once

// (s,t)-templates: vertex partitions into s cliques and t independent sets
// (classes may be empty). Coloring numbers, residue families F(H,s,t), the
// families P(n,F) of F-free graphs, and a finite-horizon criticality check.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "edgebetti/canonical.hpp"
#include "edgebetti/enumeration.hpp"
#include "edgebetti/graph.hpp"

namespace edgebetti {

struct CoverCertificate {
  int s = 0;
  int t = 0;
  // assignment[v] in [0, s+t); classes below s are cliques, the rest independent.
  std::vector<int> assignment;

  bool verify(const Graph& g) const {
    if (s < 0 || t < 0 || static_cast<int>(assignment.size()) != g.order()) return false;
    std::vector<VertexSet> classes(static_cast<std::size_t>(s + t));
    for (int v = 0; v < g.order(); ++v) {
      const int c = assignment[v];
      if (c < 0 || c >= s + t) return false;
      classes[c] = classes[c].with(v);
    }
    for (int c = 0; c < s + t; ++c) {
      const bool ok = c < s ? is_clique(g, classes[c]) : is_independent(g, classes[c]);
      if (!ok) return false;
    }
    return true;
  }
};

namespace detail {

class CoverSearch {
 public:
  CoverSearch(const Graph& g, VertexSet w, int s, int t) : g_(g), s_(s), t_(t) {
    order_ = w.to_vector();
    // high degree first: those constrain clique classes fastest
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return (g.neighbors(a) & w).size() > (g.neighbors(b) & w).size(); });
    members_.assign(static_cast<std::size_t>(s + t), VertexSet{});
    allowed_.assign(static_cast<std::size_t>(s + t), w);
    assignment_.assign(static_cast<std::size_t>(g.order()), -1);
  }

  bool run() { return place(0); }
  const std::vector<int>& assignment() const { return assignment_; }

 private:
  bool feasible(std::size_t k) const {
    // every unplaced vertex still fits into some class
    VertexSet rest;
    for (std::size_t m = k; m < order_.size(); ++m) rest = rest.with(order_[m]);
    VertexSet room;
    for (const auto& a : allowed_) room = room | a;
    return rest.subset_of(room);
  }

  bool place(std::size_t k) {
    if (k == order_.size()) return true;
    if (!feasible(k)) return false;
    const int v = order_[k];
    bool tried_empty_clique = false;
    bool tried_empty_indep = false;
    for (int c = 0; c < s_ + t_; ++c) {
      if (!allowed_[c].contains(v)) continue;
      const bool clique = c < s_;
      if (members_[c].empty()) {
        // empty classes of one type are interchangeable
        bool& tried = clique ? tried_empty_clique : tried_empty_indep;
        if (tried) continue;
        tried = true;
      }
      const VertexSet saved_allowed = allowed_[c];
      const VertexSet saved_members = members_[c];
      members_[c] = members_[c].with(v);
      allowed_[c] = (clique ? (allowed_[c] & g_.neighbors(v)) : (allowed_[c] - g_.neighbors(v))).without(v);
      assignment_[v] = c;
      if (place(k + 1)) return true;
      members_[c] = saved_members;
      allowed_[c] = saved_allowed;
      assignment_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  int s_;
  int t_;
  std::vector<int> order_;
  std::vector<VertexSet> members_;
  std::vector<VertexSet> allowed_;
  std::vector<int> assignment_;
};

inline void check_pair(int s, int t) {
  if (s < 0 || t < 0) throw input_error("template parameters s, t must be non-negative");
}

}  // namespace detail

// Whether g[w] is an (s,t)-template.
inline bool is_template_within(const Graph& g, VertexSet w, int s, int t) {
  detail::check_pair(s, t);
  if (w.empty()) return true;
  if (s + t == 0) return false;
  if (s + t >= w.size()) return true;
  return detail::CoverSearch(g, w, s, t).run();
}

inline std::optional<CoverCertificate> cover(const Graph& g, int s, int t) {
  detail::check_pair(s, t);
  if (g.order() == 0) return CoverCertificate{s, t, {}};
  if (s + t == 0) return std::nullopt;
  detail::CoverSearch search(g, g.vertices(), s, t);
  if (!search.run()) return std::nullopt;
  return CoverCertificate{s, t, search.assignment()};
}

inline bool is_template(const Graph& g, int s, int t) { return is_template_within(g, g.vertices(), s, t); }

struct ColoringNumber {
  int value = 0;
  std::vector<std::pair<int, int>> witnessing;  // (s, t) with s + t = value - 1, s descending
};

inline ColoringNumber coloring_number(const Graph& g) {
  ColoringNumber out;
  // s + t = n always covers, so the loop ends by k = n.
  for (int k = 0;; ++k) {
    std::vector<std::pair<int, int>> failing;
    for (int s = k; s >= 0; --s)
      if (!is_template(g, s, k - s)) failing.emplace_back(s, k - s);
    if (failing.empty()) {
      out.value = k;
      return out;
    }
    out.witnessing = std::move(failing);
  }
}

struct ResidueFamily {
  Graph h;
  int s = 0;
  int t = 0;
  // Canonical representatives, sorted by canonical form.
  std::vector<Graph> members;

  bool contains_empty() const {
    return std::any_of(members.begin(), members.end(), [](const Graph& g) { return g.order() == 0; });
  }
};

// Keeps the graphs not strictly containing another one; input must be deduplicated.
inline std::vector<Graph> minimal_under_containment(std::vector<Graph> graphs) {
  std::vector<Graph> out;
  for (std::size_t a = 0; a < graphs.size(); ++a) {
    bool minimal = true;
    for (std::size_t b = 0; b < graphs.size() && minimal; ++b) {
      if (a == b || graphs[b].order() > graphs[a].order()) continue;
      if (graphs[b].order() == graphs[a].order() && graphs[b].edge_count() == graphs[a].edge_count()) continue;
      if (contains_induced(graphs[a], graphs[b])) minimal = false;
    }
    if (minimal) out.push_back(graphs[a]);
  }
  return out;
}

// Minimal graphs h - U over vertex sets U inducing an (s,t)-template. Template sets
// are closed under taking subsets, so only maximal U can yield minimal residues.
inline ResidueFamily residue_family(const Graph& h, int s, int t) {
  detail::check_pair(s, t);
  const int n = h.order();
  if (n > 20) throw capacity_error("residue families support |H| <= 20");
  ResidueFamily out{h, s, t, {}};
  const std::uint64_t full = VertexSet::range(n).bits();
  std::vector<char> tpl(std::size_t{1} << n, 0);
  std::set<CanonicalForm> residues;
  for (std::uint64_t u = full + 1; u-- > 0;) {
    bool superset_template = false;
    bool is_maximal_candidate = true;
    for (int v : VertexSet(full & ~u))
      if (tpl[u | VertexSet::bit(v)]) {
        superset_template = true;
        break;
      }
    if (superset_template) {
      tpl[u] = 1;
      is_maximal_candidate = false;
    } else {
      tpl[u] = is_template_within(h, VertexSet(u), s, t) ? 1 : 0;
    }
    if (tpl[u] && is_maximal_candidate) residues.insert(canonical_form(induced_subgraph(h, VertexSet(full & ~u))));
  }
  std::vector<Graph> candidates;
  for (const auto& f : residues) candidates.push_back(f.graph());
  out.members = minimal_under_containment(std::move(candidates));
  return out;
}

// Unlabeled n-vertex graphs containing no member of `family` as an induced subgraph.
inline std::vector<Graph> p_family(int n, const std::vector<Graph>& family, int jobs = 1) {
  const auto& all = unlabeled_graphs(n, jobs);
  for (const auto& f : family)
    if (f.order() == 0) return {};
  std::vector<char> keep(all.size(), 0);
  detail::run_parallel(all.size(), jobs, [&](std::size_t k) {
    keep[k] = std::none_of(family.begin(), family.end(), [&](const Graph& f) { return contains_induced(all[k], f); });
  });
  std::vector<Graph> out;
  for (std::size_t k = 0; k < all.size(); ++k)
    if (keep[k]) out.push_back(all[k]);
  return out;
}

// Distinct isomorphism classes of F-free graphs among `count` samples of G(n, 1/2).
inline std::vector<Graph> p_family_sampled(int n, const std::vector<Graph>& family, int count, std::uint64_t seed) {
  std::set<CanonicalForm> found;
  for (const auto& g : sample_graphs(n, count, seed)) {
    bool free = std::none_of(family.begin(), family.end(), [&](const Graph& f) { return contains_induced(g, f); });
    if (free) found.insert(canonical_form(g));
  }
  std::vector<Graph> out;
  for (const auto& f : found) out.push_back(f.graph());
  return out;
}

enum class Verdict { critical, not_critical, inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::critical:
      return "CRITICAL";
    case Verdict::not_critical:
      return "NOT_CRITICAL";
    default:
      return "INCONCLUSIVE";
  }
}

struct FamilyTrace {
  int s = 0;
  int t = 0;
  std::vector<Graph> family;
  // per n in the window: |P(n, family)| and which of K_n / empty_n are members
  struct Point {
    int n = 0;
    std::size_t count = 0;
    bool has_complete = false;
    bool has_empty = false;
  };
  std::vector<Point> points;
};

struct CriticalityReport {
  Verdict verdict = Verdict::inconclusive;
  ColoringNumber coloring;
  int n_min = 0;
  int n_max = 0;
  std::vector<FamilyTrace> traces;
};

inline constexpr int max_critical_source_order = 16;

// Finite-horizon reading of criticality: inspects P(n, F(h,s,t)) for s + t =
// chi_c(h) - 2 over a window of at least three orders ending at n_max.
inline CriticalityReport is_critical_desk(const Graph& h, int n_max, int jobs = 1) {
  if (h.order() > max_critical_source_order)
    throw capacity_error("criticality checks support |H| <= 16");
  if (n_max < 3 || n_max > max_exhaustive_order) throw capacity_error("criticality checks need 3 <= n_max <= 9");
  CriticalityReport out;
  out.coloring = coloring_number(h);
  out.n_max = n_max;
  out.n_min = std::max(1, std::min(h.order(), n_max - 2));
  const int level = out.coloring.value - 2;
  if (level < 0) {
    out.verdict = Verdict::critical;  // no pairs to inspect
    return out;
  }
  for (int s = level; s >= 0; --s) {
    FamilyTrace trace;
    trace.s = s;
    trace.t = level - s;
    trace.family = residue_family(h, s, level - s).members;
    for (int n = out.n_min; n <= n_max; ++n) {
      auto members = p_family(n, trace.family, jobs);
      FamilyTrace::Point pt{n, members.size(), false, false};
      const auto k_form = canonical_form(complete_graph(n));
      const auto e_form = canonical_form(empty_graph(n));
      for (const auto& g : members) {
        const auto f = canonical_form(g);
        pt.has_complete |= f == k_form;
        pt.has_empty |= f == e_form;
      }
      trace.points.push_back(pt);
    }
    out.traces.push_back(std::move(trace));
  }

  bool growth = false;
  bool all_stable = true;
  for (const auto& tr : out.traces) {
    const auto last = tr.points.end() - 3;
    const auto& tip = tr.points.back();
    bool nondecreasing = true;
    for (auto it = last; it + 1 != tr.points.end(); ++it) nondecreasing &= (it + 1)->count >= it->count;
    if (tip.count > 2 && nondecreasing) growth = true;
    for (auto it = last; it != tr.points.end(); ++it) {
      const std::size_t named_members = static_cast<std::size_t>(it->has_complete) + (it->has_empty ? 1U : 0U);
      // K_1 is also empty_1, so compare counts only when the shapes are distinguishable
      const bool only_named = it->n == 1 ? it->count <= 1 : it->count == named_members;
      const bool same_shape = it->has_complete == tip.has_complete && it->has_empty == tip.has_empty;
      if (!only_named || it->count > 2 || !same_shape) all_stable = false;
    }
  }
  out.verdict = growth ? Verdict::not_critical : (all_stable ? Verdict::critical : Verdict::inconclusive);
  return out;
}

}  // namespace edgebetti
