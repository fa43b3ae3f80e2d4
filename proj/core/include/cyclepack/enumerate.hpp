#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "cyclepack/graph.hpp"

namespace cyclepack {

enum class EnumerationMode {
  /// Every labeled graph on n vertices, n = n_min..n_max; within one n the
  /// index is the edge-subset mask over the lexicographic edge order.
  kExhaustive,
  /// G(n, p) samples.
  kRandom,
  /// Random start graph, then edge moves toward a degree target.
  kDegreeTargeted,
};

std::string_view mode_name(EnumerationMode m);
/// Throws std::invalid_argument on unknown names.
EnumerationMode parse_mode(std::string_view name);

inline constexpr std::size_t kMaxExhaustiveOrder = 7;

/// What the degree-targeted sampler climbs toward.
struct SamplerTarget {
  int k = 2;
  long long min_gap = 0;       // h_k - ell_k
  std::size_t min_degree = 0;  // delta
};

struct EnumerationSpec {
  EnumerationMode mode = EnumerationMode::kExhaustive;
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  /// Random modes: number of samples; n is drawn uniformly from [n_min, n_max].
  std::uint64_t count = 0;
  double edge_probability = 0.5;
  std::optional<SamplerTarget> target;
  std::uint64_t seed = 0;
};

/// Throws std::invalid_argument for n_min > n_max, exhaustive orders above
/// kMaxExhaustiveOrder, probabilities outside [0, 1] or a degree-targeted spec
/// without a target.
void validate(const EnumerationSpec& spec);

/// Number of graphs the spec describes.
std::uint64_t enumeration_size(const EnumerationSpec& spec);

/// The graph at a position in [0, enumeration_size). Random modes derive an
/// independent generator from (seed, index), so any index range can be
/// produced on its own.
Graph graph_at(const EnumerationSpec& spec, std::uint64_t index);

/// Labeled graph on n vertices from an edge-subset mask (n <= 11).
Graph graph_from_mask(std::size_t n, std::uint64_t mask);

std::uint64_t splitmix64(std::uint64_t x);

/// Degree-targeted sample: deficit is max(0, min_gap - (h - ell)) plus the
/// total shortfall of degrees below min_degree. Runs about 50 n^2 moves at
/// most; the result may still miss the target.
Graph sample_degree_targeted(std::size_t n, const SamplerTarget& target, std::uint64_t seed);

Graph sample_gnp(std::size_t n, double p, std::uint64_t seed);

}  // namespace cyclepack
