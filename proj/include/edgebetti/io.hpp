#pragma once

// JSON views of the result types. Graphs appear as graph6 strings.

#include <string>
#include <vector>

#include "edgebetti/betti.hpp"
#include "edgebetti/clusters.hpp"
#include "edgebetti/experiments.hpp"
#include "edgebetti/graph6.hpp"
#include "edgebetti/homology.hpp"
#include "edgebetti/templates.hpp"
#include "json.hpp"

namespace edgebetti {

using json = nlohmann::ordered_json;

inline constexpr int json_schema_version = 1;

inline json graphs_json(const std::vector<Graph>& graphs) {
  json out = json::array();
  for (const auto& g : graphs) out.push_back(to_graph6(g));
  return out;
}

inline json to_json(const BettiTable& t) {
  json entries = json::array();
  for (auto [ij, v] : t.entries()) entries.push_back({ij.first, ij.second, v});
  return {{"field", t.field().characteristic()}, {"n", t.vertex_count()}, {"entries", entries}};
}

inline BettiTable betti_table_from_json(const json& j) {
  BettiTable t(j.at("n").get<int>(), FieldSpec(j.at("field").get<std::uint32_t>()));
  for (const auto& e : j.at("entries")) t.add(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<std::uint64_t>());
  return t;
}

inline json to_json(const HomologyProfile& h) {
  json dims = json::object();
  for (auto [d, v] : h.dims) dims[std::to_string(d)] = v;
  return dims;
}

inline json to_json(const CoverCertificate& c) {
  json classes = json::array();
  for (int k = 0; k < c.s + c.t; ++k) {
    json members = json::array();
    for (std::size_t v = 0; v < c.assignment.size(); ++v)
      if (c.assignment[v] == k) members.push_back(v);
    classes.push_back({{"kind", k < c.s ? "clique" : "independent"}, {"vertices", members}});
  }
  return {{"s", c.s}, {"t", c.t}, {"assignment", c.assignment}, {"classes", classes}};
}

inline json pairs_json(const std::vector<std::pair<int, int>>& pairs) {
  json out = json::array();
  for (auto [s, t] : pairs) out.push_back({s, t});
  return out;
}

inline json to_json(const ColoringNumber& c) {
  return {{"coloring_number", c.value}, {"witnessing", pairs_json(c.witnessing)}};
}

inline json to_json(const ResidueFamily& f) {
  return {{"graph", to_graph6(f.h)}, {"s", f.s}, {"t", f.t}, {"members", graphs_json(f.members)}};
}

inline json to_json(const CriticalityReport& r) {
  json traces = json::array();
  for (const auto& tr : r.traces) {
    json points = json::array();
    for (const auto& p : tr.points)
      points.push_back({{"n", p.n}, {"count", p.count}, {"complete", p.has_complete}, {"empty", p.has_empty}});
    traces.push_back({{"s", tr.s}, {"t", tr.t}, {"family", graphs_json(tr.family)}, {"points", points}});
  }
  return {{"verdict", to_string(r.verdict)},
          {"kind", "desk verdict"},
          {"coloring", to_json(r.coloring)},
          {"n_min", r.n_min},
          {"n_max", r.n_max},
          {"families", traces}};
}

inline json to_json(const ClusterSpec& c) { return c.parts(); }

inline json to_json(const CensusRow& c) {
  return {{"n", c.n},
          {"r", c.r},
          {"p", c.p},
          {"clusters", c.clusters},
          {"A", c.all},
          {"B", c.vanishing},
          {"H", c.cluster_free},
          {"T", c.templates},
          {"A_labeled", c.all_labeled},
          {"B_labeled", c.vanishing_labeled},
          {"H_labeled", c.cluster_free_labeled},
          {"T_labeled", c.templates_labeled},
          {"B_over_T", c.b_over_t().to_string()},
          {"H_over_T", c.h_over_t().to_string()},
          {"B_over_T_labeled", c.b_over_t_labeled().to_string()},
          {"H_over_T_labeled", c.h_over_t_labeled().to_string()},
          {"T_not_B", c.template_not_vanishing},
          {"B_not_H", c.vanishing_not_free}};
}

inline json to_json(const MetaGraphReport& m) {
  return {{"n", m.n},
          {"s", m.s},
          {"t", m.t},
          {"classes", m.classes},
          {"meta_edges", m.meta_edges},
          {"template_classes", m.template_classes},
          {"template_components", m.template_components},
          {"connected", m.connected()},
          {"parity_bipartite", m.parity_bipartite},
          {"stuck_templates", m.stuck_templates}};
}

inline json to_json(const MatchingAverage& m) {
  return {{"k", m.k},
          {"n", m.n},
          {"classes", m.classes},
          {"labeled", m.labeled},
          {"average", m.unlabeled_average.to_string()},
          {"average_labeled", m.labeled_average.to_string()},
          {"bound", m.bound.to_string()},
          {"meets_bound", m.unlabeled_meets_bound()},
          {"meets_bound_labeled", m.labeled_meets_bound()}};
}

}  // namespace edgebetti
