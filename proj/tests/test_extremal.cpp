#include <gtest/gtest.h>

#include "cyclepack/classify.hpp"
#include "cyclepack/extremal.hpp"
#include "cyclepack/packing.hpp"
#include "oracles.hpp"

using namespace cyclepack;

namespace {

std::size_t choose2(std::size_t n) { return n * (n - 1) / 2; }

// Every spec in the consistency grid: k in {2, 3}, at most 14 vertices.
std::vector<FamilySpec> grid() {
  std::vector<FamilySpec> out;
  for (int k = 2; k <= 3; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    out.push_back({Family::kG0, k});
    out.push_back({Family::kG1, k});
    out.push_back({Family::kKkyException, k});
    for (std::size_t n = 3 * kk; n <= 14; ++n) out.push_back({Family::kCliqueMinus, k, n});
    for (std::size_t n = 4 * kk; n <= 14; ++n) out.push_back({Family::kBipartiteSharp, k, n});
    for (std::size_t n = 4; n <= 14; ++n) out.push_back({Family::kWheel, k, n});
    for (std::size_t m = 3; m <= 13; ++m) out.push_back({Family::kSk, k, 0, m});
    for (std::size_t n = 0; n <= 14; ++n) out.push_back({Family::kComplete, k, n});
    for (std::size_t n = 3; n <= 14; ++n) out.push_back({Family::kCycle, k, n});
    for (std::size_t a = 1; a <= 7; ++a) {
      for (std::size_t b = 1; b <= 7; ++b) out.push_back({Family::kCompleteBipartite, k, a, b});
    }
  }
  return out;
}

std::string label(const FamilySpec& s) {
  return std::string(family_name(s.family)) + " k=" + std::to_string(s.k) +
         " n=" + std::to_string(s.n) + " m=" + std::to_string(s.m);
}

}  // namespace

TEST(Generate, G0EdgeCount) {
  for (std::size_t k = 2; k <= 5; ++k) {
    const Graph g = generate({Family::kG0, static_cast<int>(k)});
    EXPECT_EQ(g.order(), 3 * k);
    EXPECT_EQ(g.size(), choose2(3 * k - 1) - choose2(k) + k);
  }
  EXPECT_EQ(generate({Family::kG0, 2}).size(), 11u);
}

TEST(Generate, G0Numbering) {
  const Graph g = generate({Family::kG0, 3});
  const Vertex x = 8;
  EXPECT_EQ(g.neighbor_list(x), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_FALSE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(0, 3));
  EXPECT_TRUE(g.has_edge(3, 7));
}

TEST(Generate, G1LeavesAppended) {
  const Graph g = generate({Family::kG1, 2});
  EXPECT_EQ(g.order(), 8u);
  EXPECT_EQ(g.neighbor_list(6), (std::vector<Vertex>{5}));
  EXPECT_EQ(g.neighbor_list(7), (std::vector<Vertex>{5}));
}

TEST(Generate, Wheel) {
  const Graph w = generate({Family::kWheel, 2, 7});
  EXPECT_EQ(w.degree(0), 6u);
  for (Vertex v = 1; v < 7; ++v) EXPECT_EQ(w.degree(v), 3u);
  EXPECT_TRUE(w.has_edge(1, 6));
}

TEST(Generate, Sk5) {
  const Graph g = generate({Family::kSk, 2, 0, 5});
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(g.size(), choose2(5) - 1 + 2);
  EXPECT_EQ(g.size(), 11u);
  EXPECT_EQ(g.neighbor_list(5), (std::vector<Vertex>{0, 1}));
  EXPECT_TRUE(is_sk5(g));
}

TEST(Generate, KkyException) {
  const Graph g = generate({Family::kKkyException, 3});
  EXPECT_EQ(g.order(), 9u);
  EXPECT_EQ(g.size(), oracle::kky_edges(3, 3));
  for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(g.degree(v), 5u);
  for (Vertex v = 6; v < 9; ++v) EXPECT_EQ(g.degree(v), 6u);
}

TEST(Generate, CliqueMinusDegrees) {
  const Graph g = generate({Family::kCliqueMinus, 2, 9});
  for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(g.degree(v), 3u);
  for (Vertex v = 6; v < 9; ++v) EXPECT_EQ(g.degree(v), 8u);
  EXPECT_EQ(g.min_degree(), 3u);
}

TEST(Generate, ParameterRanges) {
  EXPECT_THROW(generate({Family::kCliqueMinus, 2, 5}), std::invalid_argument);
  EXPECT_THROW(generate({Family::kBipartiteSharp, 3, 11}), std::invalid_argument);
  EXPECT_THROW(generate({Family::kWheel, 2, 3}), std::invalid_argument);
  EXPECT_THROW(generate({Family::kSk, 2, 0, 2}), std::invalid_argument);
  EXPECT_THROW(generate({Family::kCycle, 2, 2}), std::invalid_argument);
  EXPECT_THROW(generate({Family::kG0, 1}), std::invalid_argument);
  EXPECT_THROW(expected_profile({Family::kG1, 1}), std::invalid_argument);
}

TEST(Generate, NamesRoundTrip) {
  for (Family f : all_families()) EXPECT_EQ(parse_family(family_name(f)), f);
  EXPECT_EQ(all_families().size(), 10u);
  EXPECT_THROW(parse_family("petersen"), std::invalid_argument);
}

TEST(ExpectedProfile, PaperValues) {
  const ExpectedProfile g1 = expected_profile({Family::kG1, 2});
  EXPECT_EQ(g1.n, 8u);
  EXPECT_EQ(g1.h_minus_ell, 4);
  EXPECT_EQ(g1.c_exact, 1u);
  const ExpectedProfile g0 = expected_profile({Family::kG0, 3});
  EXPECT_EQ(g0.n, 9u);
  EXPECT_EQ(g0.h_minus_ell, 7);
  EXPECT_EQ(g0.c_exact, 2u);
  const ExpectedProfile kky = expected_profile({Family::kKkyException, 3});
  EXPECT_EQ(kky.n, 9u);
  EXPECT_EQ(kky.h_minus_ell, 3);
  EXPECT_EQ(kky.c_exact, 2u);
  EXPECT_FALSE(expected_profile({Family::kKkyException, 2}).c_exact.has_value());
  const ExpectedProfile cm = expected_profile({Family::kCliqueMinus, 3, 9});
  EXPECT_EQ(cm.min_degree, 5u);
  EXPECT_EQ(cm.c_exact, 2u);
}

TEST(ExpectedProfile, MatchesClassifyAndExactPacking) {
  for (const FamilySpec& spec : grid()) {
    const Graph g = generate(spec);
    const ExpectedProfile p = expected_profile(spec);
    const int k = spec.k;
    EXPECT_EQ(g.order(), p.n) << label(spec);
    EXPECT_EQ(count_degrees(g, k).gap(), p.h_minus_ell) << label(spec);
    if (p.min_degree) EXPECT_EQ(g.min_degree(), *p.min_degree) << label(spec);
    const std::size_t c = max_cycle_packing(g);
    if (p.c_exact) EXPECT_EQ(c, *p.c_exact) << label(spec);
    if (g.order() <= 12) EXPECT_EQ(c, oracle::cycle_packing_number(g)) << label(spec);
  }
}

TEST(ExpectedProfile, SharpBipartiteHasKMinusOneCycles) {
  for (int k = 2; k <= 3; ++k) {
    for (std::size_t n = 4 * static_cast<std::size_t>(k); n <= 16; ++n) {
      const Graph g = generate({Family::kBipartiteSharp, k, n});
      EXPECT_EQ(max_cycle_packing(g), static_cast<std::size_t>(k - 1));
      EXPECT_EQ(count_degrees(g, k).gap(), 2 * k - 1);
    }
  }
}

TEST(ExpectedProfile, G1CoreIsG0) {
  for (int k = 2; k <= 4; ++k) {
    const Core c = two_core(generate({Family::kG1, k}));
    EXPECT_EQ(c.graph, generate({Family::kG0, k}));
    EXPECT_EQ(c.removed.size(), static_cast<std::size_t>(k));
  }
}
