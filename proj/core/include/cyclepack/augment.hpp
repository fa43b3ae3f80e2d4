#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cyclepack/graph.hpp"
#include "cyclepack/packing.hpp"

namespace cyclepack {

/// Digraph on the triangles of a packing: arc C -> D iff some vertex of C is
/// adjacent to all three vertices of D. Nodes are indices into the packing.
struct AuxDigraph {
  struct Arc {
    std::size_t from = 0;
    std::size_t to = 0;
    /// Lowest-id v in `from` with ‖v, to‖ = 3.
    Vertex witness = 0;

    bool operator==(const Arc&) const = default;
  };

  std::size_t node_count = 0;
  /// Sorted by (from, to).
  std::vector<Arc> arcs;

  bool has_arc(std::size_t from, std::size_t to) const;
  std::optional<Vertex> witness(std::size_t from, std::size_t to) const;
  std::vector<std::size_t> successors(std::size_t from) const;
};

/// Throws std::invalid_argument if `packing` is not a valid triangle packing.
AuxDigraph build_aux_digraph(const Graph& g, const TrianglePacking& packing);

/// All nodes with a directed path to `target`, including target; sorted.
std::vector<std::size_t> reachable_sources(const AuxDigraph& h, std::size_t target);

/// Vertices v outside X with ‖v, X‖ >= 2t + 1. Requires |X| = 3t.
VertexSet attachment_heavy_vertices(const Graph& g, const VertexSet& x, std::size_t t);

/// One augmenting rotation along a path D = C_1, ..., C_j = C of the aux
/// digraph. pivots[i] lies in path[i] and sees all of path[i+1]; w sees all
/// of path[0]; the new triangle is x y z with z in path.back().
struct RotationPlan {
  std::vector<std::size_t> path;
  std::vector<Vertex> pivots;
  Vertex w = 0;
  Vertex x = 0;
  Vertex y = 0;
  Vertex z = 0;
};

/// Applies the rotation. Each path triangle keeps its slot in the packing
/// and the triangle xyz is appended, so the result has |S| + 1 triangles.
///   j = 1:  C_1' = C_1 - z + w
///   j >= 2: C_1' = C_1 - x_1 + w, C_i' = C_i - x_i + x_{i-1},
///           C_j' = C_j - z + x_{j-1}
/// Throws std::invalid_argument naming the first offending triple if the
/// plan does not fit the packing. Whether x is low is not checked here.
TrianglePacking rotate_augment(const Graph& g, const TrianglePacking& packing,
                               const RotationPlan& plan);

/// First rotation (x low and outside the packing, lowest ids first, shortest
/// path) whose result has every triangle good. Rotations that would leave a
/// triangle without a low vertex are skipped and counted in *rejected.
std::optional<RotationPlan> find_rotation(const Graph& g, const TrianglePacking& packing, int k,
                                          std::size_t* rejected = nullptr);

struct GrowOptions {
  /// Use the exact maximum good-triangle packing instead.
  bool exact = false;
  ExactOptions exact_options;
};

struct GrowStats {
  std::size_t greedy = 0;
  std::size_t rotations = 0;
  std::size_t rejected_rotations = 0;
};

/// Greedy good triangles, then augment by rotation until neither a disjoint
/// good triangle nor a goodness-preserving rotation exists. Requires k >= 2.
TrianglePacking grow_good_packing(const Graph& g, int k, const GrowOptions& opts = {},
                                  GrowStats* stats = nullptr);

/// True iff every triangle contains a vertex of degree <= 2k-2.
bool all_good(const Graph& g, const TrianglePacking& packing, int k);

}  // namespace cyclepack
