#include <gtest/gtest.h>

#include "cyclepack/enumerate.hpp"
#include "cyclepack/extremal.hpp"
#include "cyclepack/packing.hpp"
#include "oracles.hpp"

using namespace cyclepack;

TEST(VerifyCyclePacking, Examples) {
  const Graph k6 = make_complete(6);
  EXPECT_TRUE(verify_cycle_packing(k6, {{{0, 1, 2}, {3, 4, 5}}}));
  EXPECT_FALSE(verify_cycle_packing(k6, {{{0, 1, 2}, {2, 3, 4}}}));
  EXPECT_FALSE(verify_cycle_packing(make_cycle(5), {{{0, 1, 2}}}));
  EXPECT_FALSE(verify_cycle_packing(k6, {{{0, 1}}}));
  EXPECT_FALSE(verify_cycle_packing(k6, {{{0, 1, 9}}}));
  EXPECT_FALSE(verify_cycle_packing(k6, {{{0, 1, 0}}}));
  EXPECT_TRUE(verify_cycle_packing(k6, {}));
}

TEST(FindDisjointCycles, K6HasTwoTriangles) {
  const Graph k6 = make_complete(6);
  EXPECT_TRUE(oracle::has_disjoint_triangles_bruteforce(k6, 2));
  const SearchResult r = find_disjoint_cycles(k6, 2);
  ASSERT_EQ(r.status, SearchStatus::kFound);
  EXPECT_EQ(r.packing.size(), 2u);
  EXPECT_TRUE(verify_cycle_packing(k6, r.packing));
  for (const Cycle& c : r.packing.cycles) EXPECT_EQ(c.size(), 3u);
}

TEST(FindDisjointCycles, G0HasOnlyKMinusOne) {
  for (int k = 2; k <= 3; ++k) {
    const Graph g = generate({Family::kG0, k});
    EXPECT_EQ(find_disjoint_cycles(g, static_cast<std::size_t>(k)).status,
              SearchStatus::kNotExist);
    EXPECT_EQ(find_disjoint_cycles(g, static_cast<std::size_t>(k - 1)).status,
              SearchStatus::kFound);
  }
}

TEST(FindDisjointCycles, ZeroCyclesIsTrivial) {
  const SearchResult r = find_disjoint_cycles(make_path(4), 0);
  EXPECT_EQ(r.status, SearchStatus::kFound);
  EXPECT_TRUE(r.packing.cycles.empty());
  EXPECT_EQ(find_disjoint_cycles(Graph(0), 0).status, SearchStatus::kFound);
}

TEST(FindDisjointCycles, BudgetIsAResult) {
  const Graph g = sample_gnp(60, 0.5, 3);
  SearchOptions opts;
  opts.node_budget = 1;
  opts.heuristic_first = false;
  EXPECT_EQ(find_disjoint_cycles(g, 19, opts).status, SearchStatus::kExhausted);
}

TEST(FindDisjointCycles, RejectsOversizedGraphs) {
  EXPECT_THROW(find_disjoint_cycles(make_cycle(65), 1), std::invalid_argument);
}

TEST(FindDisjointCycles, AgreesWithOracleOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph g = sample_gnp(7 + seed % 4, 0.25 + 0.05 * static_cast<double>(seed % 6), seed);
    const std::size_t c = oracle::cycle_packing_number(g);
    for (std::size_t k = 1; k <= c + 1; ++k) {
      for (bool heuristic : {true, false}) {
        SearchOptions opts;
        opts.heuristic_first = heuristic;
        const SearchResult r = find_disjoint_cycles(g, k, opts);
        if (k <= c) {
          ASSERT_EQ(r.status, SearchStatus::kFound) << "seed " << seed << " k " << k;
          EXPECT_EQ(r.packing.size(), k);
          EXPECT_TRUE(verify_cycle_packing(g, r.packing));
        } else {
          EXPECT_EQ(r.status, SearchStatus::kNotExist) << "seed " << seed << " k " << k;
        }
      }
    }
  }
}

TEST(MaxCyclePacking, Examples) {
  EXPECT_EQ(max_cycle_packing(make_complete(5)), 1u);
  EXPECT_EQ(max_cycle_packing(join(make_empty(1), make_cycle(6))), 1u);
  const Graph kky = join(disjoint_union(make_complete(3), make_complete(3)), make_empty(3));
  EXPECT_EQ(max_cycle_packing(kky), 2u);
  EXPECT_EQ(oracle::cycle_packing_number(kky), 2u);
  EXPECT_EQ(max_cycle_packing(Graph(0)), 0u);
  EXPECT_EQ(max_cycle_packing(make_path(7)), 0u);
}

TEST(MaxCyclePacking, CertificateMatchesValue) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = sample_gnp(12, 0.3, seed);
    const MaxPacking m = maximum_cycle_packing(g);
    EXPECT_EQ(m.certificate.size(), m.value);
    EXPECT_TRUE(verify_cycle_packing(g, m.certificate));
  }
}

TEST(MaxCyclePacking, ExactLimit) {
  EXPECT_THROW(max_cycle_packing(make_cycle(41)), ExactLimitExceeded);
  ExactOptions opts;
  opts.exact_limit = 50;
  EXPECT_EQ(max_cycle_packing(make_cycle(41), opts), 1u);
}

TEST(MaxCyclePacking, ExhaustiveN5AgainstOracle) {
  for (std::uint64_t mask = 0; mask < (1U << 10); ++mask) {
    const Graph g = graph_from_mask(5, mask);
    ASSERT_EQ(max_cycle_packing(g), oracle::cycle_packing_number(g)) << mask;
  }
}

TEST(MaxTrianglePacking, Examples) {
  EXPECT_EQ(max_triangle_packing(make_complete(6)).size(), 2u);
  EXPECT_EQ(max_triangle_packing(make_complete(8)).size(), 2u);
  EXPECT_EQ(max_triangle_packing(make_complete(9)).size(), 3u);
  EXPECT_EQ(max_triangle_packing(make_complete_bipartite(4, 4)).size(), 0u);
  // Good filter: K_4 has degrees 3 = 2k-1 at k = 2, so nothing is good.
  const Graph two_k4 = disjoint_union(make_complete(4), make_complete(4));
  EXPECT_EQ(max_triangle_packing(two_k4, TriangleFilter::kGood, 2).size(), 0u);
  EXPECT_EQ(max_triangle_packing(two_k4, TriangleFilter::kLowDegree, 2).size(), 2u);
  EXPECT_THROW(max_triangle_packing(two_k4, TriangleFilter::kGood, 1), std::invalid_argument);
}

TEST(MaxTrianglePacking, AgreesWithOracle) {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const Graph g = sample_gnp(6 + seed % 7, 0.5, seed);
    const TrianglePacking all = max_triangle_packing(g);
    EXPECT_TRUE(verify_triangle_packing(g, all));
    EXPECT_EQ(all.size(), oracle::triangle_packing_number(g)) << seed;
    for (int k = 2; k <= 3; ++k) {
      const TrianglePacking good = max_triangle_packing(g, TriangleFilter::kGood, k);
      EXPECT_EQ(good.size(), oracle::good_triangle_packing_number(g, k)) << seed;
    }
  }
}

TEST(ListTriangles, FiltersByDegree) {
  const Graph g = generate({Family::kG0, 2});
  // x = 5 has degree 2 but lies in no triangle, so there are no good ones.
  EXPECT_TRUE(list_triangles(g, TriangleFilter::kGood, 2).empty());
  EXPECT_FALSE(list_triangles(g).empty());
}

TEST(ShortestCycle, FindsGirth) {
  EXPECT_EQ(shortest_cycle(make_cycle(7), full_mask(7))->size(), 7u);
  EXPECT_EQ(shortest_cycle(make_complete_bipartite(3, 3), full_mask(6))->size(), 4u);
  EXPECT_FALSE(shortest_cycle(make_path(5), full_mask(5)).has_value());
}

TEST(NormalizeCycle, CanonicalForm) {
  EXPECT_EQ(normalize_cycle({3, 1, 2}), (Cycle{1, 2, 3}));
  EXPECT_EQ(normalize_cycle({2, 1, 3}), (Cycle{1, 2, 3}));
  EXPECT_EQ(normalize_cycle({4, 0, 3, 1}), (Cycle{0, 3, 1, 4}));
  EXPECT_EQ(normalize_cycle({0, 4, 1, 3}), (Cycle{0, 3, 1, 4}));
}
