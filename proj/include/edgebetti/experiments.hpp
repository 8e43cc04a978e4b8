#pragma once

// Finite-n censuses over all unlabeled graphs: vanishing parabolic Betti numbers
// against cluster-freeness and templates, regularity distributions, induced
// matchings, cluster containment in templates, homogeneous sets and the
// single-edge meta-graph.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "edgebetti/betti.hpp"
#include "edgebetti/canonical.hpp"
#include "edgebetti/clusters.hpp"
#include "edgebetti/enumeration.hpp"
#include "edgebetti/graph.hpp"
#include "edgebetti/templates.hpp"

namespace edgebetti {

// Non-negative fraction kept in lowest terms.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Ratio of(std::uint64_t num, std::uint64_t den) {
    if (den == 0) return {0, 0};  // undefined: nothing to average over
    const auto g = std::gcd(num, den);
    return {num / (g ? g : 1), den / (g ? g : 1)};
  }
  bool defined() const { return den != 0; }
  double value() const { return den ? static_cast<double>(num) / static_cast<double>(den) : 0.0; }
  std::string to_string() const {
    if (!den) return "undefined";
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
  // a/b >= c/d for defined ratios
  bool at_least(const Ratio& o) const {
    return static_cast<u128>(num) * o.den >= static_cast<u128>(o.num) * den;
  }
  bool operator==(const Ratio&) const = default;
};

namespace detail {

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

// Number of labeled graphs in the isomorphism class of g.
inline std::uint64_t labeled_weight(const Graph& g) { return factorial(g.order()) / automorphism_count(g); }

inline void check_census_order(int n, int limit) {
  if (n < 1 || n > limit) throw capacity_error("census supports 1 <= n <= " + std::to_string(limit));
}

}  // namespace detail

// The cluster whose absence a vanishing beta on row r, offset p, forces: the first
// parabolic (r-1)-cluster on 2(r-1)+p vertices.
inline std::vector<ClusterSpec> census_clusters(int r, int p) {
  const auto idx = parabolic_indices(r);
  if (p < 0 || p >= static_cast<int>(idx.size())) throw input_error("offset p outside the parabolic window of row r");
  std::vector<ClusterSpec> out;
  for (auto& c : parabolic_clusters(r - 1))
    if (c.order() == 2 * (r - 1) + p) out.push_back(c);
  if (out.empty()) throw invariant_error("no parabolic cluster of the required order");
  return out;
}

struct CensusOptions {
  bool all_clusters = false;  // H(n) = free of every cluster of the order, not just the first
  FieldSpec field;
  int jobs = 1;
};

struct CensusRow {
  int n = 0;
  int r = 0;
  int p = 0;
  std::string clusters;
  // unlabeled class counts
  std::uint64_t all = 0, vanishing = 0, cluster_free = 0, templates = 0;
  // labeled counts (sum of n!/|Aut|)
  std::uint64_t all_labeled = 0, vanishing_labeled = 0, cluster_free_labeled = 0, templates_labeled = 0;
  std::uint64_t template_not_vanishing = 0;  // T \ B, must be 0
  std::uint64_t vanishing_not_free = 0;      // B \ H, must be 0

  Ratio b_over_t() const { return Ratio::of(vanishing, templates); }
  Ratio h_over_t() const { return Ratio::of(cluster_free, templates); }
  Ratio b_over_t_labeled() const { return Ratio::of(vanishing_labeled, templates_labeled); }
  Ratio h_over_t_labeled() const { return Ratio::of(cluster_free_labeled, templates_labeled); }
  bool operator==(const CensusRow&) const = default;
};

inline CensusRow census_row(int r, int p, int n, const CensusOptions& opt = {}) {
  detail::check_census_order(n, max_exhaustive_order);
  const ParabolicIndex ij{r, p};
  auto specs = census_clusters(r, p);
  if (!opt.all_clusters) specs.resize(1);
  std::vector<Graph> forbidden;
  CensusRow row;
  row.n = n;
  row.r = r;
  row.p = p;
  for (const auto& c : specs) {
    forbidden.push_back(cluster_graph(c));
    row.clusters += (row.clusters.empty() ? "" : " ") + c.to_string();
  }
  const auto& graphs = unlabeled_graphs(n, opt.jobs);
  struct Flags {
    bool b, h, t;
    std::uint64_t w;
  };
  std::vector<Flags> flags(graphs.size());
  detail::run_parallel(graphs.size(), opt.jobs, [&](std::size_t k) {
    const auto& g = graphs[k];
    flags[k].b = hochster_entry(g, ij.i(), ij.j(), opt.field) == 0;
    flags[k].h = std::none_of(forbidden.begin(), forbidden.end(), [&](const Graph& c) { return contains_induced(g, c); });
    flags[k].t = is_template(g, r - 2, 1);
    flags[k].w = detail::labeled_weight(g);
  });
  for (const auto& f : flags) {
    row.all += 1;
    row.all_labeled += f.w;
    if (f.b) row.vanishing += 1, row.vanishing_labeled += f.w;
    if (f.h) row.cluster_free += 1, row.cluster_free_labeled += f.w;
    if (f.t) row.templates += 1, row.templates_labeled += f.w;
    if (f.t && !f.b) row.template_not_vanishing += 1;
    if (f.b && !f.h) row.vanishing_not_free += 1;
  }
  return row;
}

inline std::vector<CensusRow> census(int r, int p, int n_min, int n_max, const CensusOptions& opt = {}) {
  if (n_min > n_max) throw input_error("empty n range");
  std::vector<CensusRow> out;
  for (int n = n_min; n <= n_max; ++n) out.push_back(census_row(r, p, n, opt));
  return out;
}

inline const char* census_csv_header() {
  return "n,r,p,clusters,A,B,H,T,A_labeled,B_labeled,H_labeled,T_labeled,B_over_T,H_over_T,"
         "B_over_T_labeled,H_over_T_labeled,T_not_B,B_not_H";
}

inline std::string census_csv_line(const CensusRow& c) {
  std::ostringstream s;
  s.precision(6);
  s << std::fixed << c.n << ',' << c.r << ',' << c.p << ",\"" << c.clusters << "\"," << c.all << ',' << c.vanishing << ','
    << c.cluster_free << ',' << c.templates << ',' << c.all_labeled << ',' << c.vanishing_labeled << ','
    << c.cluster_free_labeled << ',' << c.templates_labeled << ',' << c.b_over_t().value() << ','
    << c.h_over_t().value() << ',' << c.b_over_t_labeled().value() << ',' << c.h_over_t_labeled().value() << ','
    << c.template_not_vanishing << ',' << c.vanishing_not_free;
  return s.str();
}

// Long format for plotting: one (n, series, value) triple per line.
inline void write_ratio_long_csv(std::ostream& out, const std::vector<CensusRow>& rows) {
  out << "n,r,p,series,value\n";
  out.precision(6);
  out << std::fixed;
  for (const auto& c : rows) {
    out << c.n << ',' << c.r << ',' << c.p << ",B_over_T," << c.b_over_t().value() << '\n';
    out << c.n << ',' << c.r << ',' << c.p << ",H_over_T," << c.h_over_t().value() << '\n';
    out << c.n << ',' << c.r << ',' << c.p << ",B_over_T_labeled," << c.b_over_t_labeled().value() << '\n';
    out << c.n << ',' << c.r << ',' << c.p << ",H_over_T_labeled," << c.h_over_t_labeled().value() << '\n';
  }
}

struct RegularityCensus {
  int r = 0;
  int p = 0;
  int n = 0;
  std::map<int, std::uint64_t> histogram;  // regularity -> classes in B(n) with edges
  std::uint64_t considered = 0;            // classes in B(n) with at least one edge
  // classes whose parabolic entries on rows 3..r-1 are all non-zero
  std::uint64_t upper_rows_nonzero = 0;
  std::uint64_t templates = 0;             // (r-2,1)-templates among the considered
  std::uint64_t templates_over_bound = 0;  // of those, reg > r-1 (must be 0)

  Ratio fraction_at(int reg) const {
    auto it = histogram.find(reg);
    return Ratio::of(it == histogram.end() ? 0 : it->second, considered);
  }
  Ratio fraction_upper_rows_nonzero() const { return Ratio::of(upper_rows_nonzero, considered); }
};

inline RegularityCensus regularity_census(int r, int p, int n, FieldSpec field = {}, int jobs = 1) {
  detail::check_census_order(n, 8);
  const ParabolicIndex ij{r, p};
  if (p < 0 || p > parabolic_width(r)) throw input_error("offset p outside the parabolic window of row r");
  const auto& graphs = unlabeled_graphs(n, jobs);
  struct Item {
    bool use = false;
    int reg = 0;
    bool upper = true;
    bool tpl = false;
  };
  std::vector<Item> items(graphs.size());
  detail::run_parallel(graphs.size(), jobs, [&](std::size_t k) {
    const auto& g = graphs[k];
    if (g.edge_count() == 0) return;
    const auto table = betti_table(g, field);
    if (table.at(ij.i(), ij.j()) != 0) return;
    auto& it = items[k];
    it.use = true;
    it.reg = *table.top_row();
    for (int row = 3; row < r; ++row)
      for (const auto& q : parabolic_indices(row))
        if (table.at(q.i(), q.j()) == 0) it.upper = false;
    it.tpl = is_template(g, r - 2, 1);
  });
  RegularityCensus out;
  out.r = r;
  out.p = p;
  out.n = n;
  for (const auto& it : items) {
    if (!it.use) continue;
    out.considered += 1;
    out.histogram[it.reg] += 1;
    if (it.upper) out.upper_rows_nonzero += 1;
    if (it.tpl) {
      out.templates += 1;
      if (it.reg > r - 1) out.templates_over_bound += 1;
    }
  }
  return out;
}

using EdgeList = std::vector<std::pair<int, int>>;

inline bool is_induced_matching(const Graph& g, const EdgeList& m) {
  VertexSet used;
  for (auto [u, v] : m) {
    if (!g.adjacent(u, v) || used.contains(u) || used.contains(v)) return false;
    used = used.with(u).with(v);
  }
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      auto [u, v] = m[a];
      auto [x, y] = m[b];
      if (g.adjacent(u, x) || g.adjacent(u, y) || g.adjacent(v, x) || g.adjacent(v, y)) return false;
    }
  return true;
}

// Repeatedly take the first black edge, then turn red every edge meeting a
// vertex of the closed neighbourhood of its endpoints.
inline EdgeList greedy_induced_matching(const Graph& g) {
  EdgeList chosen;
  VertexSet red_touch;  // edges with an endpoint here are red
  for (auto [u, v] : g.edges()) {
    if (red_touch.contains(u) || red_touch.contains(v)) continue;
    chosen.emplace_back(u, v);
    red_touch = red_touch | g.neighbors(u) | g.neighbors(v);
    red_touch = red_touch.with(u).with(v);
  }
  return chosen;
}

namespace detail {

inline int max_induced_matching_in(const Graph& g, VertexSet alive) {
  // drop vertices with no neighbour left; they cannot be matched
  int u = -1;
  for (int v : alive)
    if (!(g.neighbors(v) & alive).empty()) {
      u = v;
      break;
    }
  if (u < 0) return 0;
  int best = max_induced_matching_in(g, alive.without(u));
  for (int w : g.neighbors(u) & alive) {
    const VertexSet removed = (g.neighbors(u) | g.neighbors(w)).with(u).with(w);
    best = std::max(best, 1 + max_induced_matching_in(g, alive - removed));
  }
  return best;
}

}  // namespace detail

// iota(g): the largest induced matching, by exhaustive branching on the lowest
// vertex that still has a neighbour (unmatched, or matched to one of them).
inline int max_induced_matching(const Graph& g) { return detail::max_induced_matching_in(g, g.vertices()); }

struct MatchingAverage {
  int k = 0;
  int n = 0;
  std::uint64_t classes = 0;
  std::uint64_t labeled = 0;
  Ratio unlabeled_average;
  Ratio labeled_average;
  Ratio bound;  // (n-1) / (4 (k-2)^2)

  bool unlabeled_meets_bound() const { return unlabeled_average.at_least(bound); }
  bool labeled_meets_bound() const { return labeled_average.at_least(bound); }
};

// Average iota over graphs with beta_{k-2,k} = 0, per class and per labeled graph.
inline MatchingAverage matching_average(int k, int n, FieldSpec field = {}, int jobs = 1) {
  if (k < 3) throw input_error("matching averages need k >= 3");
  detail::check_census_order(n, 8);
  const auto& graphs = unlabeled_graphs(n, jobs);
  std::vector<std::pair<int, std::uint64_t>> data(graphs.size(), {-1, 0});
  detail::run_parallel(graphs.size(), jobs, [&](std::size_t q) {
    if (hochster_entry(graphs[q], k - 2, k, field) != 0) return;
    data[q] = {max_induced_matching(graphs[q]), detail::labeled_weight(graphs[q])};
  });
  MatchingAverage out;
  out.k = k;
  out.n = n;
  std::uint64_t sum = 0;
  std::uint64_t sum_labeled = 0;
  for (auto [iota, w] : data) {
    if (iota < 0) continue;
    out.classes += 1;
    out.labeled += w;
    sum += static_cast<std::uint64_t>(iota);
    sum_labeled += static_cast<std::uint64_t>(iota) * w;
  }
  out.unlabeled_average = Ratio::of(sum, out.classes);
  out.labeled_average = Ratio::of(sum_labeled, out.labeled);
  out.bound = Ratio::of(static_cast<std::uint64_t>(n - 1), static_cast<std::uint64_t>(4 * (k - 2) * (k - 2)));
  return out;
}

struct ContainmentFraction {
  int d = 0;
  int n = 0;
  std::uint64_t templates = 0;
  std::uint64_t containing = 0;
  std::uint64_t templates_labeled = 0;
  std::uint64_t containing_labeled = 0;
  Ratio fraction() const { return Ratio::of(containing, templates); }
  Ratio fraction_labeled() const { return Ratio::of(containing_labeled, templates_labeled); }
};

// Among (d,1)-templates on n vertices, those containing every parabolic
// k-cluster with 2 <= k <= d as an induced subgraph.
inline ContainmentFraction template_cluster_containment(int d, int n, int jobs = 1) {
  if (d < 1 || d > 3) throw capacity_error("cluster containment supports 1 <= d <= 3");
  detail::check_census_order(n, 8);
  std::vector<Graph> clusters;
  for (int k = 2; k <= d; ++k)
    for (const auto& c : parabolic_clusters(k)) clusters.push_back(cluster_graph(c));
  const auto& graphs = unlabeled_graphs(n, jobs);
  std::vector<std::pair<int, std::uint64_t>> flags(graphs.size(), {-1, 0});
  detail::run_parallel(graphs.size(), jobs, [&](std::size_t q) {
    const auto& g = graphs[q];
    if (!is_template(g, d, 1)) return;
    const bool all = std::all_of(clusters.begin(), clusters.end(), [&](const Graph& c) { return contains_induced(g, c); });
    flags[q] = {all ? 1 : 0, detail::labeled_weight(g)};
  });
  ContainmentFraction out{d, n};
  for (auto [f, w] : flags) {
    if (f < 0) continue;
    out.templates += 1;
    out.templates_labeled += w;
    if (f) out.containing += 1, out.containing_labeled += w;
  }
  return out;
}

struct MetaGraphReport {
  int n = 0;
  int s = 0;
  int t = 0;
  std::uint64_t classes = 0;
  std::uint64_t meta_edges = 0;
  std::uint64_t template_classes = 0;
  std::uint64_t template_components = 0;
  bool parity_bipartite = true;  // every meta-edge joins edge counts differing by one
  // templates with s >= 1 and a missing edge but no templated one-edge addition
  std::uint64_t stuck_templates = 0;

  bool connected() const { return template_components <= 1; }
};

inline MetaGraphReport metagraph_connectivity(int n, int s, int t, int jobs = 1) {
  detail::check_pair(s, t);
  detail::check_census_order(n, 7);
  const auto& graphs = unlabeled_graphs(n, jobs);
  std::map<CanonicalForm, std::size_t> index;
  for (std::size_t k = 0; k < graphs.size(); ++k) index.emplace(canonical_form(graphs[k]), k);

  std::vector<std::vector<std::size_t>> up(graphs.size());  // classes reached by adding one edge
  std::vector<char> tpl(graphs.size(), 0);
  detail::run_parallel(graphs.size(), jobs, [&](std::size_t k) {
    const auto& g = graphs[k];
    tpl[k] = is_template(g, s, t) ? 1 : 0;
    std::vector<std::size_t> targets;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!g.adjacent(u, v)) targets.push_back(index.at(canonical_form(g.with_edge(u, v))));
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    up[k] = std::move(targets);
  });

  MetaGraphReport out{n, s, t, graphs.size()};
  std::vector<std::size_t> parent(graphs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const int full = n * (n - 1) / 2;
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    bool extendable = false;
    for (auto m : up[k]) {
      out.meta_edges += 1;
      if (graphs[m].edge_count() != graphs[k].edge_count() + 1) out.parity_bipartite = false;
      if (tpl[k] && tpl[m]) {
        extendable = true;
        auto a = find(k);
        auto b = find(m);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    if (tpl[k]) {
      out.template_classes += 1;
      if (s >= 1 && graphs[k].edge_count() < full && !extendable) out.stuck_templates += 1;
    }
  }
  for (std::size_t k = 0; k < graphs.size(); ++k)
    if (tpl[k] && find(k) == k) out.template_components += 1;
  return out;
}

struct HomogeneousCensus {
  int r = 0;
  int p = 0;
  int n = 0;
  int threshold = 0;  // ceil(n / (r-1))
  std::uint64_t vanishing = 0;
  std::uint64_t satisfying = 0;
  std::uint64_t vanishing_labeled = 0;
  std::uint64_t satisfying_labeled = 0;
  Ratio fraction() const { return Ratio::of(satisfying, vanishing); }
  Ratio fraction_labeled() const { return Ratio::of(satisfying_labeled, vanishing_labeled); }
};

inline HomogeneousCensus homogeneous_census(int r, int p, int n, FieldSpec field = {}, int jobs = 1) {
  detail::check_census_order(n, 8);
  if (p < 0 || p > parabolic_width(r) || r < 3) throw input_error("(r, p) outside the parabolic window");
  const ParabolicIndex ij{r, p};
  const auto& graphs = unlabeled_graphs(n, jobs);
  HomogeneousCensus out{r, p, n, (n + r - 2) / (r - 1)};
  std::vector<std::pair<int, std::uint64_t>> flags(graphs.size(), {-1, 0});
  detail::run_parallel(graphs.size(), jobs, [&](std::size_t q) {
    const auto& g = graphs[q];
    if (hochster_entry(g, ij.i(), ij.j(), field) != 0) return;
    flags[q] = {homogeneous_set_size(g) >= out.threshold ? 1 : 0, detail::labeled_weight(g)};
  });
  for (auto [f, w] : flags) {
    if (f < 0) continue;
    out.vanishing += 1;
    out.vanishing_labeled += w;
    if (f) out.satisfying += 1, out.satisfying_labeled += w;
  }
  return out;
}

}  // namespace edgebetti
