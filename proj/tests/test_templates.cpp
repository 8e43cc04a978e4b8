#include <catch2/catch_amalgamated.hpp>

#include "edgebetti/canonical.hpp"
#include "edgebetti/clusters.hpp"
#include "edgebetti/enumeration.hpp"
#include "edgebetti/templates.hpp"
#include "oracles.hpp"

using namespace edgebetti;

namespace {

using Pairs = std::vector<std::pair<int, int>>;

Graph bowtie() { return Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }
Graph triangle_with_tail() { return Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}}); }
Graph k3_k2() { return disjoint_union({complete_graph(3), complete_graph(2)}); }
Graph p3_p2() { return disjoint_union({path_graph(3), path_graph(2)}); }

// Members up to isomorphism.
bool same_family(const std::vector<Graph>& got, const std::vector<Graph>& want) {
  if (got.size() != want.size()) return false;
  for (const auto& w : want)
    if (std::none_of(got.begin(), got.end(), [&](const Graph& g) { return are_isomorphic(g, w); })) return false;
  return true;
}

}  // namespace

TEST_CASE("covers of P5", "[templates]") {
  const auto p5 = path_graph(5);
  CHECK_FALSE(cover(p5, 2, 0).has_value());
  const auto c = cover(p5, 2, 1);
  REQUIRE(c.has_value());
  CHECK(c->verify(p5));
  for (const auto& g : unlabeled_graphs(6)) REQUIRE(cover(g, 6, 0).has_value());
  CHECK_THROWS_AS(cover(p5, -1, 2), input_error);
}

TEST_CASE("certificates verify independently", "[templates]") {
  const auto c5 = cycle_graph(5);
  CoverCertificate bad{1, 1, {0, 0, 1, 1, 1}};
  CHECK_FALSE(bad.verify(c5));  // {2,3,4} is not independent
  CoverCertificate good{2, 1, {0, 0, 1, 1, 2}};
  CHECK(good.verify(c5));
  CoverCertificate short_assignment{2, 1, {0, 0, 1}};
  CHECK_FALSE(short_assignment.verify(c5));

  for (int n = 1; n <= 6; ++n)
    for (const auto& g : unlabeled_graphs(n))
      for (int s = 0; s <= 3; ++s)
        for (int t = 0; s + t <= 3; ++t) {
          const auto c = cover(g, s, t);
          REQUIRE(c.has_value() == oracle::brute_template(g, s, t));
          if (c) REQUIRE(c->verify(g));
        }
}

TEST_CASE("template duality under complement", "[templates]") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : unlabeled_graphs(n)) {
      const auto gbar = complement(g);
      for (int s = 0; s <= 3; ++s)
        for (int t = 0; s + t <= 3; ++t) REQUIRE(is_template(g, s, t) == is_template(gbar, t, s));
    }
}

TEST_CASE("monotonicity of covering pairs", "[templates]") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : unlabeled_graphs(n))
      for (int s = 0; s <= 4; ++s)
        for (int t = 0; s + t <= 4; ++t)
          if (cover(g, s, t)) {
            REQUIRE(cover(g, s + 1, t).has_value());
            REQUIRE(cover(g, s, t + 1).has_value());
          }
}

TEST_CASE("coloring numbers", "[templates]") {
  const auto c5 = coloring_number(cycle_graph(5));
  CHECK(c5.value == 3);
  CHECK(c5.witnessing == Pairs{{2, 0}, {1, 1}, {0, 2}});
  const auto c7 = coloring_number(cycle_graph(7));
  CHECK(c7.value == 4);
  CHECK(c7.witnessing == Pairs{{3, 0}, {2, 1}});
  for (int k = 2; k <= 5; ++k)
    for (const auto& spec : parabolic_clusters(k)) {
      const auto c = coloring_number(cluster_graph(spec));
      INFO(spec.to_string());
      CHECK(c.value == k + 1);
      CHECK(c.witnessing == Pairs{{k - 1, 1}});
    }
  CHECK(coloring_number(p3_p2()).witnessing == Pairs{{2, 0}, {1, 1}});
  CHECK(coloring_number(triangle_with_tail()).witnessing == Pairs{{1, 1}, {0, 2}});
  CHECK(coloring_number(path_graph(5)).witnessing == Pairs{{2, 0}, {1, 1}});
}

TEST_CASE("coloring number against brute force", "[templates]") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : unlabeled_graphs(n)) {
      const auto c = coloring_number(g);
      for (int k = 0; k < c.value; ++k) {
        bool all = true;
        for (int s = 0; s <= k; ++s) all = all && oracle::brute_template(g, s, k - s);
        REQUIRE_FALSE(all);
      }
      Pairs failing;
      for (int s = c.value - 1; s >= 0; --s) {
        REQUIRE(oracle::brute_template(g, s, c.value - s));
        if (!oracle::brute_template(g, s, c.value - 1 - s)) failing.emplace_back(s, c.value - 1 - s);
      }
      REQUIRE(c.witnessing == failing);
    }
}

TEST_CASE("residue families", "[templates]") {
  const auto f = residue_family(path_graph(5), 1, 0);
  CHECK(same_family(f.members, {path_graph(3), disjoint_union({path_graph(2), Graph(1)})}));

  const auto c7 = cycle_graph(7);
  CHECK(same_family(residue_family(c7, 2, 0).members, {path_graph(3), disjoint_union({path_graph(2), Graph(1)})}));
  CHECK(same_family(residue_family(c7, 1, 1).members, {Graph(2)}));
  CHECK(same_family(residue_family(c7, 0, 2).members, {Graph(1)}));

  const auto whole = residue_family(path_graph(4), 1, 1);
  REQUIRE(whole.members.size() == 1);
  CHECK(whole.contains_empty());
}

TEST_CASE("residue families are antichains of true residues", "[templates]") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& h : unlabeled_graphs(n))
      for (int s = 0; s <= 2; ++s)
        for (int t = 0; s + t <= 2; ++t) {
          const auto fam = residue_family(h, s, t);
          for (std::size_t a = 0; a < fam.members.size(); ++a) {
            const auto& m = fam.members[a];
            // realized as H - U for some template-inducing U
            bool realized = false;
            for (std::uint64_t u = 0; u < (std::uint64_t{1} << n) && !realized; ++u) {
              const VertexSet used(u);
              if (!oracle::brute_template(induced_subgraph(h, used), s, t)) continue;
              realized = oracle::brute_isomorphic(induced_subgraph(h, h.vertices() - used), m);
            }
            REQUIRE(realized);
            for (std::size_t b = 0; b < fam.members.size(); ++b)
              if (a != b) REQUIRE_FALSE(contains_induced(m, fam.members[b]));
          }
        }
}

TEST_CASE("forbidden families", "[templates]") {
  for (int n = 1; n <= 7; ++n) {
    const auto no_edge = p_family(n, {complete_graph(2)});
    REQUIRE(no_edge.size() == 1);
    CHECK(no_edge[0].edge_count() == 0);
    const auto no_gap = p_family(n, {Graph(2)});
    REQUIRE(no_gap.size() == 1);
    CHECK(no_gap[0].edge_count() == n * (n - 1) / 2);
    CHECK(p_family(n, {Graph(0)}).empty());
  }
  const auto seven = p_family(7, residue_family(cycle_graph(7), 2, 0).members);
  REQUIRE(seven.size() == 2);
  CHECK(seven[0].edge_count() + seven[1].edge_count() == 21);
  CHECK(p_family(6, {}, 2).size() == 156);
  CHECK_THROWS_AS(p_family(10, {complete_graph(2)}), capacity_error);
}

TEST_CASE("criticality verdicts", "[templates]") {
  CHECK(is_critical_desk(cycle_graph(5), 8).verdict == Verdict::not_critical);
  CHECK(is_critical_desk(cycle_graph(7), 8).verdict == Verdict::critical);
  CHECK(is_critical_desk(p3_p2(), 8).verdict == Verdict::critical);
  CHECK(is_critical_desk(triangle_with_tail(), 8).verdict == Verdict::critical);
  CHECK(is_critical_desk(path_graph(5), 8).verdict == Verdict::critical);
  CHECK(is_critical_desk(bowtie(), 8).verdict == Verdict::not_critical);
  CHECK(is_critical_desk(k3_k2(), 8).verdict == Verdict::not_critical);
  CHECK(std::string(to_string(Verdict::inconclusive)) == "INCONCLUSIVE");
  CHECK_THROWS_AS(is_critical_desk(cycle_graph(5), 10), capacity_error);

  const auto report = is_critical_desk(cycle_graph(7), 8);
  CHECK(report.n_max == 8);
  CHECK(report.traces.size() == 3);  // s + t = 2
  for (const auto& tr : report.traces) CHECK(tr.points.back().count <= 2);
}

TEST_CASE("criticality does not depend on the worker count", "[templates]") {
  const auto a = is_critical_desk(cycle_graph(5), 7, 1);
  const auto b = is_critical_desk(cycle_graph(5), 7, 4);
  REQUIRE(a.traces.size() == b.traces.size());
  for (std::size_t k = 0; k < a.traces.size(); ++k)
    for (std::size_t m = 0; m < a.traces[k].points.size(); ++m)
      CHECK(a.traces[k].points[m].count == b.traces[k].points[m].count);
}
