#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cyclepack/augment.hpp"
#include "cyclepack/graph.hpp"
#include "cyclepack/packing.hpp"

// Reference implementations that share no code with the library's search
// engines. All of them are exponential and meant for n <= 10.
namespace oracle {

using cyclepack::Graph;

/// ham[mask] is true iff the induced subgraph on mask has a Hamiltonian
/// cycle (|mask| >= 3). Held-Karp over paths that start at the lowest vertex.
std::vector<bool> hamiltonian_subsets(const Graph& g);

/// c(G) by dynamic programming over vertex subsets.
std::size_t cycle_packing_number(const Graph& g);

/// Maximum number of disjoint triangles among those accepted by `keep`,
/// by dynamic programming over vertex subsets. keep_good uses degree <= 2k-2.
std::size_t triangle_packing_number(const Graph& g);
std::size_t good_triangle_packing_number(const Graph& g, int k);

/// Whether g contains k disjoint triangles, trying every split of the
/// vertices (n <= 9).
bool has_disjoint_triangles_bruteforce(const Graph& g, std::size_t k);

/// Edge count of 2K_a ∨ complement(K_b): 2 C(a,2) + 2a b.
std::size_t kky_edges(std::size_t a, std::size_t b);

/// A random graph with a triangle packing and a rotation plan that meets
/// every precondition of rotate_augment, plus random extra edges.
struct RotationInstance {
  Graph graph;
  cyclepack::TrianglePacking packing;
  cyclepack::RotationPlan plan;
};
RotationInstance random_rotation_instance(std::uint64_t seed);

/// |G| >= 16k + 3i and h - ell >= 3k - i, counted straight from degrees.
bool induction_hypothesis(const Graph& g, int k, int i);

/// A random (G, k, i) satisfying induction_hypothesis, built from a
/// degree-targeted core plus isolated vertices, leaf bundles, pendant paths
/// and degree-2 vertices hanging off edges, so every rule gets exercised.
struct ReductionInstance {
  Graph graph;
  int k = 2;
  int i = 0;
};
ReductionInstance random_reduction_instance(std::uint64_t seed);

}  // namespace oracle
