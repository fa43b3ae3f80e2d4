#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "cyclepack/graph.hpp"
#include "cyclepack/packing.hpp"

namespace cyclepack {

/// Degree classification of a graph for a fixed k >= 2.
///
/// high = H_k = {v : d(v) >= 2k}, low = L_k = {v : d(v) <= 2k-2}. Every other
/// vertex has degree exactly 2k-1. strata maps each occurring degree i to V^i.
struct DegreeProfile {
  int k = 2;
  VertexSet high;
  VertexSet low;
  std::size_t h = 0;
  std::size_t ell = 0;
  std::map<std::size_t, VertexSet> strata;

  long long gap() const noexcept {
    return static_cast<long long>(h) - static_cast<long long>(ell);
  }
  /// |V^{2k-1}|.
  std::size_t critical() const;
  /// V^{<=d} and V^{>=d}.
  VertexSet at_most(std::size_t d) const;
  VertexSet at_least(std::size_t d) const;
};

/// Throws std::invalid_argument for k < 2.
DegreeProfile classify(const Graph& g, int k);

/// Counts only; the allocation-free path used by the enumeration harness.
struct DegreeCounts {
  std::size_t n = 0;
  std::size_t h = 0;
  std::size_t ell = 0;
  std::size_t min_degree = 0;

  long long gap() const noexcept {
    return static_cast<long long>(h) - static_cast<long long>(ell);
  }
};
DegreeCounts count_degrees(const Graph& g, int k);

/// Degree hypotheses of the cycle-packing theorems the harness checks.
enum class Hypothesis {
  kCorradiHajnal,  // CH: |G| >= 3k and delta >= 2k
  kDiracErdos,     // DE: k >= 3 and h - l >= k^2 + 2k - 4
  kGap3k,          // H3K: h - l >= 3k
  kMain2k,         // MAIN2K: |G| >= 19k and h - l >= 2k
  kInduct,         // INDUCT(i): i <= k, |G| >= 16k + 3i and h >= l + 3k - i
  kGap2kPlusT,     // T2KPLUST: |G| >= 3k and h - l >= 2k + t(G)
  kNoLowVertices,  // COR9: |G| >= 3k, h >= 2k and delta >= 2k - 1
  kOneTriangle,    // ONETRI: k >= 3, t(G) <= 1 and h - l >= 2k
  kTwoCore,        // LEM10: h_2 - l_2 >= 4, |2-core| >= 6, 2-core not SK_5
};

std::string_view hypothesis_name(Hypothesis id);
/// Throws std::invalid_argument on unknown names.
Hypothesis parse_hypothesis(std::string_view name);
/// Number of disjoint cycles the theorem promises: 2 for LEM10, else k.
int promised_cycles(Hypothesis id, int k);

/// One conjunct of a hypothesis: `value op bound`.
struct Witness {
  std::string name;
  long long value = 0;
  long long bound = 0;
  std::string op = ">=";

  bool satisfied() const;
};

/// holds is the conjunction of all conjuncts. witness is the first failing
/// conjunct, or the last one evaluated when everything holds.
struct HypothesisVerdict {
  Hypothesis id = Hypothesis::kCorradiHajnal;
  int k = 2;
  int i = 0;
  bool holds = false;
  Witness witness;
};

/// i is read only by kInduct, which requires i <= k; non-positive i is
/// accepted. Throws std::invalid_argument for k < 2 or i > k under kInduct.
HypothesisVerdict check_hypothesis(const Graph& g, Hypothesis id, int k, int i = 0,
                                   const ExactOptions& exact = {});

/// ell <= |G|/2 - k. Requires h - ell >= 2k (std::invalid_argument otherwise).
bool low_fraction_bound(const Graph& g, int k);

/// Brute-force isomorphism test against SK_5 (6 vertices).
bool is_sk5(const Graph& g);

}  // namespace cyclepack
