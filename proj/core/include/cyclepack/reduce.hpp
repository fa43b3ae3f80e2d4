#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclepack/graph.hpp"
#include "cyclepack/packing.hpp"

namespace cyclepack {

/// Constant in the order bound |G| >= alpha*k + 3i of the induction hypothesis.
inline constexpr int kAlpha = 16;

/// Instance-shrinking rules, tried in this order.
enum class Rule {
  kIsolated,     // R1_ISOLATED: delete an isolated vertex, i -= 1
  kLeaves,       // F3_LEAVES: delete the leaves hanging off one vertex
  kSpecialEdge,  // R3_SPECIAL_EDGE: delete an edge inside L ∪ V^{>=2k+1}
  kContract,     // R4_CONTRACT: contract a triangle-free edge at a low vertex
  kTriangles,    // R5_TRIANGLES: delete a lightly attached good-triangle packing
};

std::string_view rule_name(Rule r);

/// One applied rule. Vertex ids in the parameters refer to the graph the
/// rule was applied to.
///   R1: vertices = {v}
///   F3: vertices = {v, leaf, leaf, ...}
///   R3: vertices = {u, v}, the deleted edge
///   R4: vertices = {x, y}, x low
///   R5: triangles = the deleted packing
struct ReductionRecord {
  Rule rule = Rule::kIsolated;
  std::vector<Vertex> vertices;
  std::vector<Triangle> triangles;
  /// Pre-step id -> post-step id (kRemoved for deleted vertices).
  std::vector<Vertex> old_to_new;
  int dk = 0;
  int di = 0;
  int k_after = 0;
  int i_after = 0;
  std::size_t n_after = 0;
  std::size_t m_after = 0;
};

/// "v=3", "x=2 y=5", "triangles={0,1,2};{3,4,5}" and so on.
std::string describe_params(const ReductionRecord& r);

struct ReductionTrace {
  Graph original;
  std::vector<ReductionRecord> records;
};

struct ReductionState {
  Graph graph;
  int k = 2;
  int i = 0;
  ReductionTrace trace;
};

/// Starts a trace at g. Throws std::invalid_argument unless k >= 2 and i <= k.
ReductionState make_state(Graph g, int k, int i);

enum class StepOutcome {
  kApplied,
  kNoRuleApplies,
  /// The first applicable rule would push i below -3k and was refused.
  kStuck,
};

std::string_view outcome_name(StepOutcome o);

/// Applies the first applicable rule (lowest ids first within a rule) and
/// appends its record. On kNoRuleApplies and kStuck the state is unchanged.
StepOutcome reduce_step(ReductionState& st);

struct ReduceSummary {
  StepOutcome last = StepOutcome::kNoRuleApplies;
  std::size_t steps = 0;
  /// max_steps reached before a fixed point.
  bool step_limit = false;
};

/// Repeats reduce_step until no rule applies, a rule is refused, or
/// max_steps is reached. Throws std::logic_error if (k, i, |G| + ‖G‖) fails
/// to decrease lexicographically on some step.
ReduceSummary reduce_fully(ReductionState& st, std::size_t max_steps = 1'000'000);

/// Graphs before every record, then the final graph: result[j] is the input
/// of records[j]. Throws std::logic_error if a record does not reproduce.
std::vector<Graph> replay(const ReductionTrace& trace);

/// Lifts a packing of the final graph to the original graph. R5 records
/// contribute their triangles. Throws std::invalid_argument if p is not valid
/// in the final graph.
CyclePacking lift_packing(const ReductionTrace& trace, const CyclePacking& p);

/// Minimal-counterexample properties that are not rewrite rules. Purely
/// informational for arbitrary instances.
struct MinimalityReport {
  bool k_at_least_3 = true;
  /// First good triangle (then greedy prefix) with fewer than two
  /// attachment-heavy outside vertices, ignoring the k - |T| >= 2 guard.
  std::optional<TrianglePacking> light_packing;
};

MinimalityReport check_minimality(const Graph& g, int k);

struct SolveOptions {
  SearchOptions search;
  std::size_t max_steps = 1'000'000;
};

struct SolveResult {
  SearchResult search;
  ReductionTrace trace;
  ReduceSummary reduction;
  /// NotExist on the reduced instance was re-checked on the original graph.
  bool rechecked_original = false;
};

/// Reduce with (k, i = k), search the reduced instance for k' cycles and lift.
/// A NotExist on the reduced instance is never trusted: the original graph is
/// searched instead. Requires k >= 2 and order() <= kMaxSearchOrder.
SolveResult solve_with_reduction(const Graph& g, int k, const SolveOptions& opts = {});

}  // namespace cyclepack
