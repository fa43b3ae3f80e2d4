#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cyclepack/classify.hpp"
#include "cyclepack/enumerate.hpp"
#include "cyclepack/graph.hpp"
#include "cyclepack/reduce.hpp"

namespace cyclepack {

struct HarnessOptions {
  std::size_t jobs = 1;
  /// Parameter i of INDUCT.
  int i = 0;
  SolveOptions solve;
  /// Used for t(G) inside hypotheses.
  ExactOptions exact;
};

struct Counterexample {
  std::uint64_t index = 0;
  Graph graph;
  /// Last conjunct of the (holding) hypothesis.
  Witness witness;
};

/// Outcome of running one predicate over an enumeration. Wall time is kept
/// out of the value-level fields so reports compare byte for byte.
struct VerificationReport {
  std::string theorem;
  int k = 2;
  int i = 0;
  int promised = 2;
  EnumerationSpec spec;
  std::uint64_t tested = 0;
  std::uint64_t hypothesis_holds = 0;
  std::uint64_t packed = 0;
  /// Hypothesis held but the search ran out of budget.
  std::vector<std::uint64_t> undecided;
  std::vector<Counterexample> counterexamples;
  double wall_seconds = 0.0;
};

/// The sampler target matching a hypothesis: the h - ell and delta
/// conjuncts it imposes (t(G) and 2-core conditions are left to rejection).
SamplerTarget default_target(Hypothesis id, int k, int i = 0);

/// For every enumerated graph where the hypothesis holds, look for the
/// promised number of disjoint cycles with solve_with_reduction. A NotExist
/// is a counterexample only after it re-verifies from the serialized graph.
/// Work is split into contiguous index ranges over opts.jobs threads; the
/// report does not depend on the number of jobs. A degree-targeted spec
/// without a target gets default_target(id, k, opts.i).
VerificationReport verify_theorem(Hypothesis id, int k, EnumerationSpec spec,
                                  const HarnessOptions& opts = {});

/// Searches 4k+1 <= |G| <= 19k-1 for graphs with h - ell >= 2k and fewer than
/// k disjoint cycles. [spec.n_min, spec.n_max] must lie inside that window;
/// an empty range yields an empty report.
VerificationReport hunt_gap(int k, EnumerationSpec spec, const HarnessOptions& opts = {});

}  // namespace cyclepack
