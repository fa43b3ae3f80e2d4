#include "cyclepack/harness.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <stdexcept>
#include <thread>

#include "cyclepack/edge_list.hpp"

namespace cyclepack {

namespace {

using Predicate = std::function<HypothesisVerdict(const Graph&)>;

struct Shard {
  std::uint64_t tested = 0;
  std::uint64_t holds = 0;
  std::uint64_t packed = 0;
  std::vector<std::uint64_t> undecided;
  std::vector<Counterexample> counterexamples;
};

enum class Recheck { kConfirmed, kRefuted, kUndecided };

Recheck recheck(const Graph& g, const Predicate& pred, std::size_t promised,
                std::uint64_t budget) {
  const Graph h = parse_edge_list(serialize_edge_list(g));
  if (!(h == g)) throw std::logic_error("edge-list round trip changed the graph");
  if (!pred(h).holds) return Recheck::kRefuted;
  const SearchResult r = exact_disjoint_cycles(h, promised, full_mask(h.order()), budget);
  switch (r.status) {
    case SearchStatus::kNotExist:
      return Recheck::kConfirmed;
    case SearchStatus::kFound:
      return Recheck::kRefuted;
    case SearchStatus::kExhausted:
      break;
  }
  return Recheck::kUndecided;
}

Shard run_shard(const EnumerationSpec& spec, std::uint64_t lo, std::uint64_t hi,
                const Predicate& pred, int promised, const HarnessOptions& opts) {
  Shard s;
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    const Graph g = graph_at(spec, idx);
    ++s.tested;
    HypothesisVerdict verdict;
    try {
      verdict = pred(g);
    } catch (const ExactLimitExceeded&) {
      s.undecided.push_back(idx);
      continue;
    } catch (const BudgetExhausted&) {
      s.undecided.push_back(idx);
      continue;
    }
    if (!verdict.holds) continue;
    ++s.holds;
    const SolveResult r = solve_with_reduction(g, promised, opts.solve);
    switch (r.search.status) {
      case SearchStatus::kFound:
        ++s.packed;
        break;
      case SearchStatus::kExhausted:
        s.undecided.push_back(idx);
        break;
      case SearchStatus::kNotExist:
        switch (recheck(g, pred, static_cast<std::size_t>(promised),
                        opts.solve.search.node_budget)) {
          case Recheck::kConfirmed:
            s.counterexamples.push_back({idx, g, verdict.witness});
            break;
          case Recheck::kUndecided:
            s.undecided.push_back(idx);
            break;
          case Recheck::kRefuted:
            throw std::logic_error("solver and re-verification disagree at index " +
                                   std::to_string(idx));
        }
        break;
    }
  }
  return s;
}

VerificationReport run(VerificationReport report, const Predicate& pred,
                       const HarnessOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t total = enumeration_size(report.spec);
  const std::uint64_t jobs = std::max<std::uint64_t>(1, std::min<std::uint64_t>(opts.jobs, total));

  std::vector<Shard> shards(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  const auto work = [&](std::uint64_t j) {
    const std::uint64_t lo = total * j / jobs;
    const std::uint64_t hi = total * (j + 1) / jobs;
    try {
      shards[j] = run_shard(report.spec, lo, hi, pred, report.promised, opts);
    } catch (...) {
      errors[j] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::uint64_t j = 0; j < jobs; ++j) threads.emplace_back(work, j);
    for (auto& t : threads) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  for (Shard& s : shards) {
    report.tested += s.tested;
    report.hypothesis_holds += s.holds;
    report.packed += s.packed;
    report.undecided.insert(report.undecided.end(), s.undecided.begin(), s.undecided.end());
    for (Counterexample& c : s.counterexamples) report.counterexamples.push_back(std::move(c));
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

void check_order(const EnumerationSpec& spec) {
  if (spec.n_max > kMaxSearchOrder) {
    throw std::invalid_argument("graphs above " + std::to_string(kMaxSearchOrder) +
                                " vertices are beyond the search engine");
  }
}

}  // namespace

SamplerTarget default_target(Hypothesis id, int k, int i) {
  const long long K = k;
  SamplerTarget t;
  t.k = k;
  switch (id) {
    case Hypothesis::kCorradiHajnal:
      t.min_degree = static_cast<std::size_t>(2 * k);
      break;
    case Hypothesis::kDiracErdos:
      t.min_gap = K * K + 2 * K - 4;
      break;
    case Hypothesis::kGap3k:
      t.min_gap = 3 * K;
      break;
    case Hypothesis::kInduct:
      t.min_gap = 3 * K - i;
      break;
    case Hypothesis::kNoLowVertices:
      t.min_gap = 2 * K;
      t.min_degree = static_cast<std::size_t>(2 * k - 1);
      break;
    case Hypothesis::kMain2k:
    case Hypothesis::kGap2kPlusT:
    case Hypothesis::kOneTriangle:
      t.min_gap = 2 * K;
      break;
    case Hypothesis::kTwoCore:
      t.k = 2;
      t.min_gap = 4;
      break;
  }
  return t;
}

VerificationReport verify_theorem(Hypothesis id, int k, EnumerationSpec spec,
                                  const HarnessOptions& opts) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (id == Hypothesis::kInduct && opts.i > k) {
    throw std::invalid_argument("INDUCT requires i <= k");
  }
  if (spec.mode == EnumerationMode::kDegreeTargeted && !spec.target) {
    spec.target = default_target(id, k, opts.i);
  }
  validate(spec);
  check_order(spec);

  VerificationReport report;
  report.theorem = std::string(hypothesis_name(id));
  report.k = k;
  report.i = id == Hypothesis::kInduct ? opts.i : 0;
  report.promised = promised_cycles(id, k);
  report.spec = spec;
  const Predicate pred = [&](const Graph& g) {
    return check_hypothesis(g, id, k, report.i, opts.exact);
  };
  return run(std::move(report), pred, opts);
}

VerificationReport hunt_gap(int k, EnumerationSpec spec, const HarnessOptions& opts) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (spec.mode == EnumerationMode::kDegreeTargeted && !spec.target) {
    spec.target = SamplerTarget{k, 2LL * k, 0};
  }
  VerificationReport report;
  report.theorem = "GAP";
  report.k = k;
  report.promised = k;
  report.spec = spec;
  if (spec.n_min > spec.n_max) return report;

  const auto lo = static_cast<std::size_t>(4 * k + 1);
  const auto hi = static_cast<std::size_t>(19 * k - 1);
  if (spec.n_min < lo || spec.n_max > hi) {
    throw std::invalid_argument("order range [" + std::to_string(spec.n_min) + ", " +
                                std::to_string(spec.n_max) + "] is outside [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  validate(spec);
  check_order(spec);

  const Predicate pred = [k](const Graph& g) {
    const DegreeCounts c = count_degrees(g, k);
    HypothesisVerdict v;
    v.id = Hypothesis::kMain2k;
    v.k = k;
    v.witness = {"h_minus_ell", c.gap(), 2LL * k, ">="};
    v.holds = v.witness.satisfied();
    return v;
  };
  return run(std::move(report), pred, opts);
}

}  // namespace cyclepack
