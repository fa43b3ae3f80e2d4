#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace cyclepack {

using Vertex = std::uint32_t;

/// Sentinel used in renumbering maps for vertices that no longer exist.
inline constexpr Vertex kRemoved = std::numeric_limits<Vertex>::max();

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Dynamic bitset over the vertex ids 0..universe-1 of one graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  std::size_t universe() const noexcept { return universe_; }
  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  std::vector<Vertex> members() const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  bool intersects(const VertexSet& other) const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  bool operator==(const VertexSet&) const = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

class GraphBuilder;

/// Simple undirected graph on vertices 0..order()-1.
///
/// Adjacency is stored as one bit row per vertex, so edge queries are O(1)
/// and neighbourhood intersections are word-parallel. Graphs are values:
/// once built they never change, and every surgery below returns a new graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  /// Throws std::invalid_argument on self-loops, duplicates or ids >= n.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges);

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }
  bool empty() const noexcept { return n_ == 0; }

  bool has_edge(Vertex u, Vertex v) const noexcept {
    return u < n_ && v < n_ && ((row_ptr(u)[v >> 6] >> (v & 63)) & 1U) != 0;
  }
  std::size_t degree(Vertex v) const;
  std::size_t min_degree() const;
  std::size_t max_degree() const;
  std::vector<std::size_t> degrees() const;

  VertexSet neighbors(Vertex v) const;
  std::vector<Vertex> neighbor_list(Vertex v) const;
  /// Neighbourhood as a single machine word; requires order() <= 64.
  std::uint64_t row64(Vertex v) const;

  /// ‖v, U‖: number of neighbours of v inside U.
  std::size_t degree_into(Vertex v, const VertexSet& set) const;
  /// ‖U, U'‖ for disjoint U and U'.
  std::size_t edges_between(const VertexSet& a, const VertexSet& b) const;

  /// All edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const noexcept {
    return n_ == other.n_ && m_ == other.m_ && bits_ == other.bits_;
  }

 private:
  friend class GraphBuilder;

  const std::uint64_t* row_ptr(Vertex v) const noexcept {
    return bits_.data() + static_cast<std::size_t>(v) * words_;
  }

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Mutable staging area for a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);
  explicit GraphBuilder(Graph g);

  std::size_t order() const noexcept { return g_.n_; }
  /// Returns false if the edge was already present.
  bool add_edge(Vertex u, Vertex v);
  bool remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const noexcept { return g_.has_edge(u, v); }

  Graph build() && { return std::move(g_); }
  const Graph& peek() const noexcept { return g_; }

 private:
  void check_pair(Vertex u, Vertex v) const;
  std::uint64_t* row_ptr(Vertex v) noexcept {
    return g_.bits_.data() + static_cast<std::size_t>(v) * g_.words_;
  }

  Graph g_;
};

struct Surgery {
  Graph graph;
  /// Old id -> new id, kRemoved for deleted vertices.
  std::vector<Vertex> old_to_new;
};

struct Contraction {
  Graph graph;
  /// Id of the merged vertex v_xy in the new graph.
  Vertex merged = 0;
  /// Total map: both endpoints map to `merged`.
  std::vector<Vertex> old_to_new;
};

struct Core {
  Graph graph;
  /// Deleted vertices (original ids) in deletion order.
  std::vector<Vertex> removed;
  std::vector<Vertex> old_to_new;
};

/// G / uv. The smaller endpoint keeps its position and becomes v_xy; the
/// larger one is removed and later ids shift down by one.
Contraction contract_edge(const Graph& g, Vertex u, Vertex v);

/// 2-core by iterative deletion of vertices of degree at most 1; vertices
/// are processed lowest id first.
Core two_core(const Graph& g);

/// Induced subgraph on V \ removed, keeping relative vertex order.
Surgery delete_vertices(const Graph& g, const VertexSet& removed);
Graph delete_edge(const Graph& g, Vertex u, Vertex v);

/// G ∨ H: vertices of g come first, those of h are shifted by |g|.
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

Graph make_empty(std::size_t n);
Graph make_complete(std::size_t n);
Graph make_path(std::size_t n);
Graph make_cycle(std::size_t n);
Graph make_complete_bipartite(std::size_t a, std::size_t b);

/// Vertex-set bitmask helpers for graphs with at most 64 vertices.
using Mask = std::uint64_t;

inline constexpr Mask bit(Vertex v) noexcept { return Mask{1} << v; }
inline int popcount(Mask m) noexcept { return std::popcount(m); }
inline Vertex lowest(Mask m) noexcept {
  return static_cast<Vertex>(std::countr_zero(m));
}
inline constexpr Mask full_mask(std::size_t n) noexcept {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

}  // namespace cyclepack
