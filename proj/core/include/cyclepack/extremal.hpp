#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclepack/graph.hpp"

namespace cyclepack {

enum class Family {
  kCliqueMinus,        // K_n - E(K_{n-2k+1})
  kG0,                 // K_{3k-1} minus the edges inside S, |S| = k, plus x joined to S
  kG1,                 // G_0(k) plus k leaves at x
  kBipartiteSharp,     // K_{n-2k+1, 2k-1}
  kKkyException,       // 2K_k ∨ complement of K_k
  kWheel,              // hub joined to C_{n-1}
  kSk,                 // K_m with one edge subdivided
  kComplete,           // K_n
  kCompleteBipartite,  // K_{n,m}
  kCycle,              // C_n
};

std::string_view family_name(Family f);
/// Throws std::invalid_argument on unknown names.
Family parse_family(std::string_view name);
std::vector<Family> all_families();

/// Which of k, n, m a family reads.
struct FamilyParams {
  bool k = false;
  bool n = false;
  bool m = false;
};
FamilyParams family_params(Family f);

struct FamilySpec {
  Family family = Family::kComplete;
  int k = 2;
  std::size_t n = 0;
  std::size_t m = 0;
};

/// Canonical numbering:
///   clique_minus     0..n-2k independent, n-2k+1..n-1 universal
///   g0               K part 0..3k-2 with S = 0..k-1, x = 3k-1
///   g1               g0, then leaves 3k..4k-1 at x
///   bipartite_sharp  side of size n-2k+1 is 0..n-2k, the 2k-1 side follows
///   kky_exception    cliques 0..k-1 and k..2k-1, independent set 2k..3k-1
///   wheel            hub 0, rim 1..n-1 in cyclic order
///   sk               K_m on 0..m-1 with edge 0-1 replaced by the path 0-m-1
///   complete_bipartite  side n first, then side m
/// Throws std::invalid_argument for parameters out of range.
Graph generate(const FamilySpec& spec);

struct ExpectedProfile {
  std::size_t n = 0;
  long long h_minus_ell = 0;
  /// Exact c(G) when the construction pins it down.
  std::optional<std::size_t> c_exact;
  /// Minimum degree, when it is part of the family's claim.
  std::optional<std::size_t> min_degree;
  std::string notes;
};

/// Claimed (n, h - ell, c) for the family; h - ell is taken at spec.k (k = 2
/// for families without k).
ExpectedProfile expected_profile(const FamilySpec& spec);

}  // namespace cyclepack
