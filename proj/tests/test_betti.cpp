#include <catch2/catch_amalgamated.hpp>

#include "edgebetti/betti.hpp"
#include "edgebetti/clusters.hpp"
#include "edgebetti/enumeration.hpp"
#include "edgebetti/experiments.hpp"
#include "edgebetti/templates.hpp"
#include "oracles.hpp"

using namespace edgebetti;

TEST_CASE("single entries", "[betti]") {
  const auto k2k2 = disjoint_union({complete_graph(2), complete_graph(2)});
  CHECK(hochster_entry(k2k2, 1, 4) == 1);
  CHECK(oracle::betti(k2k2, 1, 4) == 1);
  CHECK(hochster_entry(k2k2, 0, 2) == 2);
  CHECK(hochster_entry(k2k2, 5, 2) == 0);   // out of range
  CHECK(hochster_entry(k2k2, -1, 9) == 0);  // out of range

  const auto hbar = complement(heawood_graph());
  CHECK(hochster_entry(hbar, 3, 6) == 28);
  CHECK(hochster_entry(hbar, 2, 5) == 0);
}

TEST_CASE("tables match the Hochster oracle", "[betti]") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : unlabeled_graphs(n)) {
      const auto t = betti_table(g);
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) REQUIRE(static_cast<long long>(t.at(i, j)) == oracle::betti(g, i, j));
    }
}

TEST_CASE("full tables match per-entry evaluation", "[betti]") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : unlabeled_graphs(n)) {
      const auto t = betti_table(g);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j <= n; ++j) REQUIRE(t.at(i, j) == hochster_entry(g, i, j));
    }
}

TEST_CASE("vanishing regions", "[betti]") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : unlabeled_graphs(n)) {
      const auto t = betti_table(g);
      for (auto [ij, v] : t.entries()) {
        const auto [i, j] = ij;
        // zeros sit to the left of the main diagonal beta_{i,2i+2}
        REQUIRE(j <= 2 * i + 2);
        REQUIRE(j - i >= 2);
        REQUIRE(j <= n);
      }
    }
  for (const auto& g : unlabeled_graphs(6))
    for (int i = 0; i <= 2; ++i)
      for (int j = 2 * i + 3; j <= 6; ++j) REQUIRE(hochster_entry(g, i, j) == 0);
  // the opposite side is not empty: P3 has beta_{1,3} = 1
  CHECK(hochster_entry(path_graph(3), 1, 3) == 1);
}

TEST_CASE("tables are independent of the worker count and field", "[betti]") {
  const auto hbar = complement(heawood_graph());
  CHECK(betti_table(hbar, FieldSpec(2), 1) == betti_table(hbar, FieldSpec(2), 4));
  CHECK(hochster_entry(hbar, 3, 6, FieldSpec(2), 3) == 28);
  for (const auto& g : unlabeled_graphs(7)) {
    const auto a = betti_table(g, FieldSpec(2));
    const auto b = betti_table(g, FieldSpec(3));
    REQUIRE(a.entries() == b.entries());
  }
}

TEST_CASE("the complement of the Heawood graph", "[betti]") {
  const auto t = betti_table(complement(heawood_graph()));
  const std::vector<std::uint64_t> row2{70, 476, 1617, 3388, 4648, 4184, 2394, 826, 161, 14};
  const std::vector<std::uint64_t> row3{28, 224, 777, 1442, 1547, 994, 385, 84, 8};
  for (std::size_t k = 0; k < row2.size(); ++k) CHECK(t.at(static_cast<int>(k), static_cast<int>(k) + 2) == row2[k]);
  for (std::size_t k = 0; k < row3.size(); ++k) CHECK(t.at(static_cast<int>(k) + 3, static_cast<int>(k) + 6) == row3[k]);
  CHECK(t.top_row() == 3);
  CHECK(t.row(2).size() == row2.size());
  CHECK(t.row(3).size() == row3.size());
  CHECK(regularity(complement(heawood_graph())) == 3);
}

TEST_CASE("empty graphs have an empty table", "[betti]") {
  for (int n = 0; n <= 5; ++n) {
    const auto t = betti_table(Graph(n));
    CHECK(t.empty());
    CHECK(t.grid() == "(zero ideal)\n");
    CHECK_THROWS_AS(regularity(Graph(n)), undefined_regularity_error);
  }
  CHECK_THROWS_AS(betti_table(Graph(17)), capacity_error);
}

TEST_CASE("regularity examples", "[betti]") {
  for (int n = 2; n <= 6; ++n) CHECK(regularity(complete_graph(n)) == 2);
  for (int e = 1; e <= 4; ++e) CHECK(regularity(matching_graph(e)) == e + 1);
}

TEST_CASE("regularity is at least the greedy matching plus one", "[betti][experiments]") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& g : unlabeled_graphs(n)) {
      if (g.edge_count() == 0) continue;
      const int e = static_cast<int>(greedy_induced_matching(g).size());
      REQUIRE(regularity(g) >= e + 1);
      REQUIRE(regularity(g) >= max_induced_matching(g) + 1);
    }
}

TEST_CASE("grid layout", "[betti]") {
  const auto grid = betti_table(cycle_graph(5)).grid();
  CHECK(grid == "     0 1 2\n  2: 5 5 .\n  3: . . 1\n");
}

TEST_CASE("parabolic windows", "[betti]") {
  CHECK(parabolic_indices(3) == std::vector<ParabolicIndex>{{3, 0}});
  const auto r4 = parabolic_indices(4);
  REQUIRE(r4.size() == 2);
  CHECK((r4[0].i() == 2 && r4[0].j() == 6));
  CHECK((r4[1].i() == 3 && r4[1].j() == 7));
  const auto r5 = parabolic_indices(5);
  REQUIRE(r5.size() == 4);
  CHECK((r5[0].i() == 3 && r5[0].j() == 8));
  CHECK((r5[3].i() == 6 && r5[3].j() == 11));
  CHECK_THROWS_AS(parabolic_indices(2), input_error);

  CHECK(is_parabolic(1, 4));
  CHECK(parabolic_at(1, 4) == ParabolicIndex{3, 0});
  CHECK_FALSE(is_parabolic(2, 5));
  CHECK(parabolic_at(6, 11) == ParabolicIndex{5, 3});

  for (int r = 3; r <= 9; ++r)
    for (const auto& idx : parabolic_indices(r)) REQUIRE(parabolic_at(idx.i(), idx.j()) == idx);
}

TEST_CASE("vanishing parabolic entries forbid the cluster", "[betti][clusters]") {
  // every cluster with parts >= 2 and at most 8 vertices
  std::vector<std::vector<int>> specs;
  auto extend = [&](auto&& self, std::vector<int> parts, int total) -> void {
    if (parts.size() >= 2) specs.push_back(parts);
    for (int a = parts.empty() ? 2 : parts.back(); total + a <= 8; ++a) {
      parts.push_back(a);
      self(self, parts, total + a);
      parts.pop_back();
    }
  };
  extend(extend, {}, 0);
  for (int n = 4; n <= 8; ++n)
    for (const auto& g : unlabeled_graphs(n)) {
      const auto t = betti_table(g);
      for (const auto& parts : specs) {
        const int k = static_cast<int>(parts.size());
        const int p = std::accumulate(parts.begin(), parts.end(), 0) - 2 * k;
        if (t.at(k - 1 + p, 2 * k + p) != 0) continue;
        REQUIRE_FALSE(contains_induced(g, cluster_of(parts)));
      }
    }
}

TEST_CASE("(d,1)-templates have small regularity", "[betti][templates]") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& g : unlabeled_graphs(n)) {
      if (g.edge_count() == 0) continue;
      for (int d = 1; d <= 2; ++d)
        if (is_template(g, d, 1)) REQUIRE(regularity(g) <= d + 1);
    }
}
