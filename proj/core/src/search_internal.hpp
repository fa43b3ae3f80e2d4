#pragma once

#include <array>
#include <cstddef>

#include "cyclepack/graph.hpp"
#include "cyclepack/packing.hpp"

namespace cyclepack::detail {

struct Adjacency {
  explicit Adjacency(const Graph& g);

  std::size_t n = 0;
  std::array<Mask, kMaxSearchOrder> row{};
};

/// 2-core of the subgraph induced by `avail`.
Mask core_of(const Adjacency& adj, Mask avail);
std::size_t component_count(const Adjacency& adj, Mask avail);
/// min(|core|/3, cyclomatic number); bounds the number of disjoint cycles.
std::size_t cycle_upper_bound(const Adjacency& adj, Mask core);

}  // namespace cyclepack::detail
