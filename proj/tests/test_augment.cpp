#include <gtest/gtest.h>

#include "cyclepack/augment.hpp"
#include "cyclepack/enumerate.hpp"
#include "cyclepack/extremal.hpp"
#include "oracles.hpp"

using namespace cyclepack;

namespace {

// z=0, p=1, q=2 form C; w=3 sees all of C; x=4, y=5 close the triangle xyz.
Graph one_step_graph() {
  return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {3, 1}, {3, 2}, {4, 5}, {4, 0}, {5, 0}});
}

// C_1 = {a,b,c} = {0,1,2}, C_2 = {z,p,q} = {3,4,5}, a sees C_2, w = 6 sees
// C_1, x = 7, y = 8.
Graph two_step_graph() {
  return Graph(9, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {0, 4}, {0, 5},
                   {6, 0}, {6, 1}, {6, 2}, {7, 8}, {7, 3}, {8, 3}});
}

std::size_t shared(const Triangle& a, const Triangle& b) {
  std::size_t c = 0;
  for (Vertex u : a) {
    for (Vertex v : b) c += u == v ? 1 : 0;
  }
  return c;
}

}  // namespace

TEST(AuxDigraph, SingleArcWithWitness) {
  const Graph g(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {0, 4}, {0, 5}});
  const AuxDigraph h = build_aux_digraph(g, {{{0, 1, 2}, {3, 4, 5}}});
  ASSERT_EQ(h.arcs.size(), 1u);
  EXPECT_EQ(h.arcs[0], (AuxDigraph::Arc{0, 1, 0}));
  EXPECT_TRUE(h.has_arc(0, 1));
  EXPECT_FALSE(h.has_arc(1, 0));
}

TEST(AuxDigraph, CompleteGraphBothWays) {
  const AuxDigraph h = build_aux_digraph(make_complete(6), {{{0, 1, 2}, {3, 4, 5}}});
  ASSERT_EQ(h.arcs.size(), 2u);
  EXPECT_EQ(h.witness(0, 1), Vertex{0});
  EXPECT_EQ(h.witness(1, 0), Vertex{3});
}

TEST(AuxDigraph, FewCrossEdgesNoArcs) {
  const Graph g(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {0, 4}, {1, 5},
                    {2, 5}});
  EXPECT_TRUE(build_aux_digraph(g, {{{0, 1, 2}, {3, 4, 5}}}).arcs.empty());
}

TEST(AuxDigraph, InvalidPackingIsAnError) {
  EXPECT_THROW(build_aux_digraph(make_cycle(5), {{{0, 1, 2}}}), std::invalid_argument);
}

TEST(AuxDigraph, MatchesDefinitionOnRandomPackings) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = sample_gnp(15, 0.5, seed);
    const TrianglePacking p = max_triangle_packing(g);
    const AuxDigraph h = build_aux_digraph(g, p);
    for (std::size_t c = 0; c < p.size(); ++c) {
      for (std::size_t d = 0; d < p.size(); ++d) {
        std::optional<Vertex> lowest;
        if (c != d) {
          for (Vertex v : p.triangles[c]) {
            const auto& t = p.triangles[d];
            if (g.has_edge(v, t[0]) && g.has_edge(v, t[1]) && g.has_edge(v, t[2])) {
              lowest = v;
              break;
            }
          }
        }
        EXPECT_EQ(h.witness(c, d), lowest);
      }
    }
  }
}

TEST(ReachableSources, Examples) {
  AuxDigraph h;
  h.node_count = 3;
  h.arcs = {{0, 1, 0}};
  EXPECT_EQ(reachable_sources(h, 1), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(reachable_sources(h, 0), (std::vector<std::size_t>{0}));
  h.arcs.clear();
  EXPECT_EQ(reachable_sources(h, 0), (std::vector<std::size_t>{0}));
  h.arcs = {{0, 1, 0}, {1, 2, 3}};
  EXPECT_EQ(reachable_sources(h, 2), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(AttachmentHeavy, Examples) {
  EXPECT_EQ(attachment_heavy_vertices(make_complete(5), VertexSet(5, {0, 1, 2}), 1),
            VertexSet(5, {3, 4}));
  for (Vertex s = 0; s < 6; ++s) {
    const VertexSet x(6, {s, static_cast<Vertex>((s + 1) % 6), static_cast<Vertex>((s + 2) % 6)});
    EXPECT_TRUE(attachment_heavy_vertices(make_cycle(6), x, 1).empty());
    // Each outside vertex of C_6 sees at most one vertex of three consecutive ones.
    for (Vertex v = 0; v < 6; ++v) {
      if (!x.contains(v)) EXPECT_LE(make_cycle(6).degree_into(v, x), 1u);
    }
  }
  EXPECT_TRUE(attachment_heavy_vertices(make_complete_bipartite(1, 5), VertexSet(6), 0).empty());
  EXPECT_THROW(attachment_heavy_vertices(make_complete(5), VertexSet(5, {0, 1}), 1),
               std::invalid_argument);
}

TEST(RotateAugment, OneStep) {
  const Graph g = one_step_graph();
  RotationPlan plan;
  plan.path = {0};
  plan.w = 3;
  plan.x = 4;
  plan.y = 5;
  plan.z = 0;
  const TrianglePacking out = rotate_augment(g, {{{0, 1, 2}}}, plan);
  EXPECT_EQ(out.triangles, (std::vector<Triangle>{{1, 2, 3}, {0, 4, 5}}));
  EXPECT_TRUE(verify_triangle_packing(g, out));
}

TEST(RotateAugment, TwoSteps) {
  const Graph g = two_step_graph();
  RotationPlan plan;
  plan.path = {0, 1};
  plan.pivots = {0};
  plan.w = 6;
  plan.x = 7;
  plan.y = 8;
  plan.z = 3;
  const TrianglePacking out = rotate_augment(g, {{{0, 1, 2}, {3, 4, 5}}}, plan);
  EXPECT_EQ(out.triangles, (std::vector<Triangle>{{1, 2, 6}, {0, 4, 5}, {3, 7, 8}}));
  EXPECT_TRUE(verify_triangle_packing(g, out));
}

TEST(RotateAugment, MalformedPlans) {
  const Graph g = one_step_graph();
  const TrianglePacking s{{{0, 1, 2}}};
  RotationPlan plan;
  plan.path = {0};
  plan.w = 1;  // inside X
  plan.x = 4;
  plan.y = 5;
  plan.z = 0;
  EXPECT_THROW(rotate_augment(g, s, plan), std::invalid_argument);
  plan.w = 3;
  plan.z = 1;  // 4-1 is not an edge
  EXPECT_THROW(rotate_augment(g, s, plan), std::invalid_argument);
  plan.z = 0;
  plan.pivots = {2};  // one pivot too many
  EXPECT_THROW(rotate_augment(g, s, plan), std::invalid_argument);
  plan.pivots.clear();
  plan.path = {};
  EXPECT_THROW(rotate_augment(g, s, plan), std::invalid_argument);
}

TEST(RotateAugment, ErrorNamesTheTriple) {
  const Graph g = two_step_graph();
  RotationPlan plan;
  plan.path = {0, 1};
  plan.pivots = {1};  // 1 does not see {3,4,5}
  plan.w = 6;
  plan.x = 7;
  plan.y = 8;
  plan.z = 3;
  try {
    rotate_augment(g, {{{0, 1, 2}, {3, 4, 5}}}, plan);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("{3,4,5}"), std::string::npos) << e.what();
  }
}

TEST(RotateAugment, RandomPlansShiftByOneVertex) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const oracle::RotationInstance inst = oracle::random_rotation_instance(seed);
    const TrianglePacking out = rotate_augment(inst.graph, inst.packing, inst.plan);
    ASSERT_EQ(out.size(), inst.packing.size() + 1);
    EXPECT_TRUE(verify_triangle_packing(inst.graph, out));
    std::vector<bool> on_path(inst.packing.size(), false);
    for (std::size_t c : inst.plan.path) {
      on_path[c] = true;
      EXPECT_EQ(shared(out.triangles[c], inst.packing.triangles[c]), 2u);
    }
    for (std::size_t c = 0; c < inst.packing.size(); ++c) {
      if (!on_path[c]) EXPECT_EQ(out.triangles[c], inst.packing.triangles[c]);
    }
    EXPECT_EQ(out.triangles.back(), make_triangle(inst.plan.x, inst.plan.y, inst.plan.z));
  }
}

TEST(GrowGoodPacking, Examples) {
  EXPECT_EQ(grow_good_packing(generate({Family::kG0, 2}), 2).size(), 0u);
  const Graph two_k4 = disjoint_union(make_complete(4), make_complete(4));
  EXPECT_EQ(grow_good_packing(two_k4, 2).size(), 0u);
  GrowStats stats;
  const TrianglePacking p = grow_good_packing(one_step_graph(), 3, {}, &stats);
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(stats.rotations, 1u);
  EXPECT_TRUE(all_good(one_step_graph(), p, 3));
  EXPECT_THROW(grow_good_packing(two_k4, 1), std::invalid_argument);
}

TEST(GrowGoodPacking, AlwaysValidAndGood) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = sample_gnp(10 + seed % 20, 0.3, seed);
    for (int k = 2; k <= 4; ++k) {
      const TrianglePacking p = grow_good_packing(g, k);
      EXPECT_TRUE(verify_triangle_packing(g, p));
      EXPECT_TRUE(all_good(g, p, k));
      EXPECT_FALSE(find_rotation(g, p, k).has_value());
    }
  }
}

TEST(GrowGoodPacking, ExactModeMatchesBruteForce) {
  GrowOptions opts;
  opts.exact = true;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph g = sample_gnp(6 + seed % 4, 0.5, seed);
    for (int k = 2; k <= 3; ++k) {
      const TrianglePacking p = grow_good_packing(g, k, opts);
      EXPECT_EQ(p.size(), oracle::good_triangle_packing_number(g, k));
      EXPECT_TRUE(all_good(g, p, k));
    }
  }
}
