#include <catch2/catch_amalgamated.hpp>

#include "edgebetti/clusters.hpp"
#include "edgebetti/enumeration.hpp"
#include "edgebetti/homology.hpp"
#include "oracles.hpp"

using namespace edgebetti;

namespace {

HomologyProfile profile(const Graph& g, std::uint32_t p = 2) {
  return reduced_homology(independence_complex(g), FieldSpec(p));
}

// Oracle dims as a profile.
HomologyProfile oracle_profile(const Graph& g, long long p = 2) {
  HomologyProfile out;
  const auto dims = oracle::reduced_homology(g, p);
  for (std::size_t k = 0; k < dims.size(); ++k)
    if (dims[k]) out.dims[static_cast<int>(k) - 1] = dims[k];
  return out;
}

}  // namespace

TEST_CASE("field descriptor", "[homology]") {
  CHECK(FieldSpec().characteristic() == 2);
  CHECK(FieldSpec(2147483647U).characteristic() == 2147483647U);
  CHECK_THROWS_AS(FieldSpec(4), input_error);
  CHECK_THROWS_AS(FieldSpec(1), input_error);
}

TEST_CASE("independence complexes", "[homology]") {
  const auto k2k2 = disjoint_union({complete_graph(2), complete_graph(2)});
  CHECK(independence_complex(k2k2).f_vector() == std::vector<std::int64_t>{1, 4, 4});
  CHECK(independence_complex(complete_graph(5)).f_vector() == std::vector<std::int64_t>{1, 5});
  CHECK(independence_complex(complement(heawood_graph())).f_vector() == std::vector<std::int64_t>{1, 14, 21});
  for (const auto& g : unlabeled_graphs(6)) REQUIRE(independence_complex(g).downward_closed());
}

TEST_CASE("reduced homology examples", "[homology]") {
  const auto k2k2 = disjoint_union({complete_graph(2), complete_graph(2)});
  CHECK(profile(k2k2).dims == std::map<int, std::int64_t>{{1, 1}});
  CHECK(profile(complete_graph(4)).dims == std::map<int, std::int64_t>{{0, 3}});
  CHECK(profile(Graph(0)).dims == std::map<int, std::int64_t>{{-1, 1}});
  CHECK(profile(Graph(3)).acyclic());  // a simplex

  const std::vector<int> parts{2, 2, 3};
  const auto fat = profile(cluster_of(parts));
  CHECK(fat.dims.size() == 1);
  CHECK(fat.at(2) == 2);  // (2-1)(2-1)(3-1)
}

TEST_CASE("homology agrees with the rank oracle", "[homology]") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : unlabeled_graphs(n)) {
      REQUIRE(profile(g) == oracle_profile(g));
      REQUIRE(profile(g, 3) == oracle_profile(g, 3));
    }
}

TEST_CASE("single degrees from a band", "[homology]") {
  const auto c5bar = complement(cycle_graph(5));
  CHECK(homology_in_degree(independence_complex_band(c5bar, c5bar.vertices(), 0, 2), 1) == 1);
  CHECK(homology_in_degree(independence_complex(path_graph(2)), -1) == 0);
  for (const auto& t : enumerate_trees(5)) {
    const auto g = complement(t);
    CHECK(homology_in_degree(independence_complex_band(g, g.vertices(), 0, 2), 1) == 0);
  }
  // band versus full complex on every graph of order 6
  for (const auto& g : unlabeled_graphs(6)) {
    const auto full = profile(g);
    for (int d = -1; d <= 4; ++d) {
      const auto band = independence_complex_band(g, g.vertices(), std::max(d - 1, -1), d + 1);
      REQUIRE(homology_in_degree(band, d) == full.at(d));
    }
  }
  const auto band = independence_complex_band(cycle_graph(6), cycle_graph(6).vertices(), 1, 2);
  CHECK_THROWS_AS(homology_in_degree(band, 0), input_error);
  CHECK_THROWS_AS(reduced_homology(band), input_error);
}

TEST_CASE("non-closed complexes are rejected", "[homology]") {
  // a triangle without its edges
  SimplicialComplex broken(3, -1, {{0}, {1, 2, 4}, {}, {7}});
  CHECK_FALSE(broken.downward_closed());
  CHECK_THROWS_AS(reduced_homology(broken), invariant_error);
}

TEST_CASE("Euler-Poincare identity", "[homology]") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : unlabeled_graphs(n)) {
      const auto c = independence_complex(g);
      REQUIRE(euler_characteristic(reduced_homology(c)) == reduced_euler_characteristic(c));
      REQUIRE(euler_characteristic(reduced_homology(c, FieldSpec(3))) == reduced_euler_characteristic(c));
    }
}

TEST_CASE("fat matchings have homology in one degree", "[homology][clusters]") {
  for (int k = 2; k <= 5; ++k)
    for (const auto& spec : parabolic_clusters(k))
      for (std::uint32_t p : {2U, 3U}) {
        const auto h = profile(cluster_graph(spec), p);
        REQUIRE(h.dims.size() == 1);
        REQUIRE(h.dims.begin()->first == k - 1);
        std::int64_t expected = 1;
        for (int a : spec.parts()) expected *= a - 1;
        REQUIRE(h.dims.begin()->second == expected);
      }
}

TEST_CASE("adding a disjoint edge suspends the complex", "[homology]") {
  const auto k2 = complete_graph(2);
  for (int n = 1; n <= 6; ++n)
    for (const auto& f : unlabeled_graphs(n)) {
      const auto base = profile(f);
      const auto susp = profile(disjoint_union({f, k2}));
      HomologyProfile shifted;
      for (auto [d, v] : base.dims) shifted.dims[d + 1] = v;
      REQUIRE(susp == shifted);
    }
}

TEST_CASE("degree zero of a complement counts components", "[homology]") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& f : unlabeled_graphs(n)) REQUIRE(profile(complement(f)).at(0) == component_count(f) - 1);
}

TEST_CASE("GF(2) and GF(3) agree on all small graphs", "[homology]") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& g : unlabeled_graphs(n)) REQUIRE(profile(g, 2) == profile(g, 3));
}
