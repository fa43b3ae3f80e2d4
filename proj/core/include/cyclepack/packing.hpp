#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "cyclepack/graph.hpp"

namespace cyclepack {

using Cycle = std::vector<Vertex>;

/// Vertex-disjoint cycles, each given as its vertex sequence (length >= 3).
struct CyclePacking {
  std::vector<Cycle> cycles;

  std::size_t size() const noexcept { return cycles.size(); }
  bool operator==(const CyclePacking&) const = default;
};

/// Sorted vertex triple.
using Triangle = std::array<Vertex, 3>;

Triangle make_triangle(Vertex a, Vertex b, Vertex c);

struct TrianglePacking {
  std::vector<Triangle> triangles;

  std::size_t size() const noexcept { return triangles.size(); }
  /// X = union of all triangles, as a set over 0..n-1.
  VertexSet vertex_union(std::size_t n) const;
  CyclePacking as_cycles() const;
  bool operator==(const TrianglePacking&) const = default;
};

/// Checks that every sequence is a cycle of g and that cycles are disjoint.
/// Linear in the total certificate length.
bool verify_cycle_packing(const Graph& g, const CyclePacking& p);
bool verify_triangle_packing(const Graph& g, const TrianglePacking& p);

/// Rotates a cycle so its minimum vertex comes first and picks the
/// lexicographically smaller direction.
Cycle normalize_cycle(Cycle c);
/// Normalizes every cycle and sorts the packing by first vertex.
CyclePacking normalize_packing(CyclePacking p);

/// Raised when a complete search runs out of its node budget.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted() : std::runtime_error("node budget exhausted") {}
};

/// Graph order exceeds the configured exact limit.
class ExactLimitExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Largest graph the bit-parallel search engine accepts.
inline constexpr std::size_t kMaxSearchOrder = 64;

struct ExactOptions {
  std::size_t exact_limit = 40;
  std::uint64_t node_budget = 10'000'000;
};

struct SearchOptions {
  std::uint64_t node_budget = 10'000'000;
  /// Greedy good-triangle packing and greedy shortest cycles before the
  /// exact search.
  bool heuristic_first = true;
};

enum class SearchStatus { kFound, kNotExist, kExhausted };

std::string_view status_name(SearchStatus s);

struct SearchResult {
  SearchStatus status = SearchStatus::kExhausted;
  CyclePacking packing;
  std::uint64_t nodes = 0;
};

/// k vertex-disjoint cycles in g, or a proof that none exist.
///
/// kNotExist is only returned after a complete exact search. The exact search
/// branches on a minimum-degree vertex v of the current 2-core: either v lies
/// on one of the induced cycles through it (shortest first) or v is deleted.
/// Requires order() <= kMaxSearchOrder.
SearchResult find_disjoint_cycles(const Graph& g, std::size_t k, const SearchOptions& opts = {});

/// Exact branch and bound only (no heuristic), over the vertices in `avail`.
SearchResult exact_disjoint_cycles(const Graph& g, std::size_t k, Mask avail,
                                   std::uint64_t node_budget);

/// Greedy shortest-cycle extraction, up to `limit` cycles.
CyclePacking greedy_cycle_packing(const Graph& g, std::size_t limit, Mask avail);
CyclePacking greedy_cycle_packing(const Graph& g, std::size_t limit);

/// Shortest cycle inside `avail` (ties: fewer total degree, then lowest ids).
std::optional<Cycle> shortest_cycle(const Graph& g, Mask avail);

struct MaxPacking {
  std::size_t value = 0;
  CyclePacking certificate;
};

/// c(G) with a certificate. Throws ExactLimitExceeded above opts.exact_limit
/// and BudgetExhausted if any single search hits the node budget.
MaxPacking maximum_cycle_packing(const Graph& g, const ExactOptions& opts = {});
std::size_t max_cycle_packing(const Graph& g, const ExactOptions& opts = {});

enum class TriangleFilter {
  kAll,
  kGood,       // contains a vertex of degree <= 2k-2
  kLowDegree,  // all three vertices have degree <= 2k
};

/// Triangles of g passing the filter, sorted lexicographically.
std::vector<Triangle> list_triangles(const Graph& g, TriangleFilter filter = TriangleFilter::kAll,
                                     int k = 2);

/// Maximum-cardinality disjoint set of filtered triangles (complete search).
/// Filters other than kAll require k >= 2.
TrianglePacking max_triangle_packing(const Graph& g, TriangleFilter filter = TriangleFilter::kAll,
                                     int k = 2, const ExactOptions& opts = {});

/// t(G).
std::size_t triangle_packing_number(const Graph& g, const ExactOptions& opts = {});

}  // namespace cyclepack
