#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cyclepack/classify.hpp"
#include "cyclepack/harness.hpp"
#include "cyclepack/packing.hpp"
#include "cyclepack/reduce.hpp"

namespace cyclepack {

/// Summary numbers for one graph at one k.
struct Analysis {
  int k = 2;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t delta = 0;
  std::size_t h = 0;
  std::size_t ell = 0;
  long long h_minus_ell = 0;
  std::size_t two_core_size = 0;
  /// Size of the greedy-plus-rotation good-triangle packing.
  std::size_t good_triangle_packing = 0;
  /// Exact values; empty above the exact limit or when the budget runs out.
  std::optional<std::size_t> t;
  std::size_t c_lower = 0;
  std::optional<std::size_t> c_exact;
};

Analysis analyze_graph(const Graph& g, int k, const ExactOptions& exact = {});

// JSON documents, pretty-printed with two-space indentation and a trailing
// newline. Key order is fixed.
/// verdicts, when given, are appended under "verdicts".
std::string to_json(const Analysis& a, const std::vector<HypothesisVerdict>& verdicts = {});
std::string to_json(const HypothesisVerdict& v);
std::string to_json(const VerificationReport& r);
/// {"status", "k", "cycles", "nodes"}; cycles only when found.
std::string to_json(const SearchResult& r, std::size_t k);

}  // namespace cyclepack
