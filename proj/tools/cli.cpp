#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "cyclepack/classify.hpp"
#include "cyclepack/edge_list.hpp"
#include "cyclepack/extremal.hpp"
#include "cyclepack/harness.hpp"
#include "cyclepack/reduce.hpp"
#include "cyclepack/report.hpp"

namespace cyclepack::cli {

namespace {

struct Config {
  std::size_t exact_limit = 40;
  std::uint64_t node_budget = 10'000'000;
  std::size_t jobs = 1;
  std::optional<std::uint64_t> seed;
  std::string output_dir = "counterexamples";

  ExactOptions exact() const { return {exact_limit, node_budget}; }
  SolveOptions solve() const {
    SolveOptions o;
    o.search.node_budget = node_budget;
    return o;
  }
};

void add_budget_options(CLI::App& sub, Config& cfg) {
  sub.add_option("--exact-limit", cfg.exact_limit, "Largest order for exact c(G) and t(G)")
      ->check(CLI::Range(std::size_t{3}, kMaxSearchOrder));
  sub.add_option("--budget", cfg.node_budget, "Search node budget")->check(CLI::PositiveNumber);
}

void add_run_options(CLI::App& sub, Config& cfg) {
  add_budget_options(sub, cfg);
  sub.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sub.add_option("--seed", cfg.seed, "Master seed (required)");
  sub.add_option("--out-dir", cfg.output_dir, "Directory for counterexample edge lists");
}

void require_seed(const Config& cfg) {
  if (!cfg.seed) throw std::invalid_argument("--seed is required");
}

void write_counterexamples(const VerificationReport& r, const Config& cfg, std::ostream& err) {
  if (r.counterexamples.empty()) return;
  std::filesystem::create_directories(cfg.output_dir);
  for (const Counterexample& c : r.counterexamples) {
    const auto path = std::filesystem::path(cfg.output_dir) /
                      (r.theorem + "_k" + std::to_string(r.k) + "_" + std::to_string(c.index) +
                       ".txt");
    write_edge_list_file(path, c.graph);
    err << "counterexample written to " << path.string() << '\n';
  }
}

std::string reduction_line(const ReductionRecord& r) {
  return std::string(rule_name(r.rule)) + " " + describe_params(r) +
         " k=" + std::to_string(r.k_after) + " i=" + std::to_string(r.i_after) +
         " n=" + std::to_string(r.n_after) + " m=" + std::to_string(r.m_after);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vertex-disjoint cycle packing under degree conditions", "cyclepack"};
  app.require_subcommand(1);
  Config cfg;

  std::string file;
  int k = 2;
  int i = 0;
  bool have_i = false;

  auto* analyze = app.add_subcommand("analyze", "Degree profile, 2-core and packing numbers");
  std::vector<std::string> checks;
  analyze->add_option("file", file, "Edge-list file")->required();
  analyze->add_option("--k", k, "k >= 2")->required();
  analyze->add_option("--check", checks, "Also evaluate these hypotheses");
  analyze->add_option("--i", i, "i for INDUCT");
  add_budget_options(*analyze, cfg);

  auto* pack = app.add_subcommand("pack", "Find k disjoint cycles");
  bool exact_only = false;
  bool no_reduce = false;
  pack->add_option("file", file, "Edge-list file")->required();
  pack->add_option("--k", k, "Number of cycles")->required();
  pack->add_flag("--exact", exact_only, "Skip the heuristic and search exactly");
  pack->add_flag("--no-reduce", no_reduce, "Search the input graph without reductions");
  add_budget_options(*pack, cfg);

  auto* generate = app.add_subcommand("generate", "Write an extremal construction");
  std::string family;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string output;
  generate->add_option("family", family, "Family name")->required();
  generate->add_option("--k", k, "k");
  generate->add_option("--n", n, "n");
  generate->add_option("--m", m, "m");
  generate->add_option("-o,--output", output, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check a theorem over an enumeration");
  std::string theorem;
  std::size_t max_n = 0;
  std::optional<std::size_t> min_n;
  std::optional<std::uint64_t> samples;
  std::string mode;
  double p = 0.5;
  verify->add_option("theorem", theorem, "Hypothesis id")->required();
  verify->add_option("--k", k, "k")->required();
  verify->add_option("--max-n", max_n, "Largest order")->required();
  verify->add_option("--min-n", min_n, "Smallest order");
  verify->add_option("--samples", samples, "Random samples (switches to sampling)");
  verify->add_option("--mode", mode, "exhaustive, random or degree_targeted");
  verify->add_option("--p", p, "Edge probability for random mode");
  verify->add_option("--i", i, "i for INDUCT");
  add_run_options(*verify, cfg);

  auto* reduce = app.add_subcommand("reduce", "Apply reduction rules and print the trace");
  std::size_t max_steps = 1'000'000;
  reduce->add_option("file", file, "Edge-list file")->required();
  reduce->add_option("--k", k, "k >= 2")->required();
  reduce->add_option("--i", i, "Initial i (default k)");
  reduce->add_option("--max-steps", max_steps, "Step limit");

  auto* hunt = app.add_subcommand("hunt", "Look for small graphs with h - l >= 2k and c < k");
  hunt->add_option("--k", k, "k")->required();
  hunt->add_option("--min-n", min_n, "Smallest order (default 4k+1)");
  hunt->add_option("--max-n", max_n, "Largest order")->required();
  hunt->add_option("--samples", samples, "Samples")->required();
  add_run_options(*hunt, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  have_i = (analyze->parsed() && analyze->count("--i") > 0) ||
           (reduce->parsed() && reduce->count("--i") > 0) ||
           (verify->parsed() && verify->count("--i") > 0);

  try {
    if (analyze->parsed()) {
      const Graph g = read_edge_list_file(file);
      std::vector<HypothesisVerdict> verdicts;
      for (const auto& name : checks) {
        verdicts.push_back(check_hypothesis(g, parse_hypothesis(name), k, i, cfg.exact()));
      }
      out << to_json(analyze_graph(g, k, cfg.exact()), verdicts);
      return kOk;
    }

    if (pack->parsed()) {
      const Graph g = read_edge_list_file(file);
      if (k < 0) throw std::invalid_argument("k must be non-negative");
      SearchOptions search;
      search.node_budget = cfg.node_budget;
      search.heuristic_first = !exact_only;
      SearchResult r;
      if (no_reduce || k < 2) {
        r = find_disjoint_cycles(g, static_cast<std::size_t>(k), search);
      } else {
        SolveOptions opts;
        opts.search = search;
        const SolveResult s = solve_with_reduction(g, k, opts);
        r = s.search;
        err << "reduction: " << s.trace.records.size() << " step(s), "
            << outcome_name(s.reduction.last) << '\n';
      }
      if (r.status == SearchStatus::kFound && !verify_cycle_packing(g, r.packing)) {
        throw std::logic_error("certificate failed verification");
      }
      out << to_json(r, static_cast<std::size_t>(k));
      switch (r.status) {
        case SearchStatus::kFound:
          return kOk;
        case SearchStatus::kNotExist:
          return kNotExist;
        case SearchStatus::kExhausted:
          return kExhausted;
      }
    }

    if (generate->parsed()) {
      FamilySpec spec;
      spec.family = parse_family(family);
      spec.k = k;
      spec.n = n;
      spec.m = m;
      const Graph g = cyclepack::generate(spec);
      if (output.empty()) {
        out << serialize_edge_list(g);
      } else {
        write_edge_list_file(output, g);
      }
      return kOk;
    }

    if (verify->parsed()) {
      require_seed(cfg);
      const Hypothesis id = parse_hypothesis(theorem);
      EnumerationSpec spec;
      spec.seed = *cfg.seed;
      if (!mode.empty()) {
        spec.mode = parse_mode(mode);
      } else {
        spec.mode = samples ? EnumerationMode::kDegreeTargeted : EnumerationMode::kExhaustive;
      }
      spec.n_max = max_n;
      spec.n_min = min_n.value_or(spec.mode == EnumerationMode::kExhaustive ? 0 : max_n);
      spec.count = samples.value_or(0);
      spec.edge_probability = p;
      HarnessOptions opts;
      opts.jobs = cfg.jobs;
      opts.i = i;
      opts.solve = cfg.solve();
      opts.exact = cfg.exact();
      const VerificationReport r = verify_theorem(id, k, spec, opts);
      out << to_json(r);
      err << "wall time: " << r.wall_seconds << " s\n";
      write_counterexamples(r, cfg, err);
      return kOk;
    }

    if (reduce->parsed()) {
      ReductionState st = make_state(read_edge_list_file(file), k, have_i ? i : k);
      const MinimalityReport mr = check_minimality(st.graph, k);
      if (!mr.k_at_least_3) err << "note: k < 3\n";
      if (mr.light_packing) {
        err << "note: good-triangle packing of size " << mr.light_packing->size()
            << " has fewer than two attachment-heavy vertices\n";
      }
      const ReduceSummary summary = reduce_fully(st, max_steps);
      for (const ReductionRecord& r : st.trace.records) out << reduction_line(r) << '\n';
      out << "status=" << (summary.step_limit ? "step_limit" : outcome_name(summary.last))
          << " steps=" << summary.steps << " k=" << st.k << " i=" << st.i
          << " n=" << st.graph.order() << " m=" << st.graph.size() << '\n';
      return kOk;
    }

    if (hunt->parsed()) {
      require_seed(cfg);
      EnumerationSpec spec;
      spec.mode = EnumerationMode::kDegreeTargeted;
      spec.seed = *cfg.seed;
      spec.n_min = min_n.value_or(static_cast<std::size_t>(std::max(4 * k + 1, 0)));
      spec.n_max = max_n;
      spec.count = *samples;
      HarnessOptions opts;
      opts.jobs = cfg.jobs;
      opts.solve = cfg.solve();
      opts.exact = cfg.exact();
      const VerificationReport r = hunt_gap(k, spec, opts);
      out << to_json(r);
      err << "wall time: " << r.wall_seconds << " s\n";
      write_counterexamples(r, cfg, err);
      return kOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace cyclepack::cli
