#include "cyclepack/report.hpp"

#include <algorithm>

#include <json.hpp>

#include "cyclepack/augment.hpp"

namespace cyclepack {

using ordered_json = nlohmann::ordered_json;

Analysis analyze_graph(const Graph& g, int k, const ExactOptions& exact) {
  Analysis a;
  const DegreeCounts counts = count_degrees(g, k);
  a.k = k;
  a.n = g.order();
  a.m = g.size();
  a.delta = counts.min_degree;
  a.h = counts.h;
  a.ell = counts.ell;
  a.h_minus_ell = counts.gap();
  a.two_core_size = two_core(g).graph.order();
  a.good_triangle_packing = grow_good_packing(g, k).size();
  if (g.order() <= kMaxSearchOrder) {
    a.c_lower = std::max(a.good_triangle_packing, greedy_cycle_packing(g, g.order() / 3).size());
  }
  try {
    a.t = triangle_packing_number(g, exact);
  } catch (const ExactLimitExceeded&) {
  } catch (const BudgetExhausted&) {
  }
  try {
    a.c_exact = max_cycle_packing(g, exact);
    a.c_lower = *a.c_exact;
  } catch (const ExactLimitExceeded&) {
  } catch (const BudgetExhausted&) {
  }
  return a;
}

namespace {

template <typename T>
ordered_json optional_json(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json witness_json(const Witness& w) {
  return {{"name", w.name}, {"value", w.value}, {"bound", w.bound}, {"op", w.op}};
}

ordered_json verdict_json(const HypothesisVerdict& v) {
  ordered_json j;
  j["hypothesis"] = hypothesis_name(v.id);
  j["k"] = v.k;
  j["i"] = v.i;
  j["holds"] = v.holds;
  j["witness"] = witness_json(v.witness);
  return j;
}

ordered_json spec_json(const EnumerationSpec& s) {
  ordered_json j;
  j["mode"] = mode_name(s.mode);
  j["n_min"] = s.n_min;
  j["n_max"] = s.n_max;
  if (s.mode != EnumerationMode::kExhaustive) {
    j["samples"] = s.count;
    j["seed"] = s.seed;
  }
  if (s.mode == EnumerationMode::kRandom) j["edge_probability"] = s.edge_probability;
  if (s.mode == EnumerationMode::kDegreeTargeted && s.target) {
    j["target"] = {{"k", s.target->k},
                   {"min_gap", s.target->min_gap},
                   {"min_degree", s.target->min_degree}};
  }
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string to_json(const Analysis& a, const std::vector<HypothesisVerdict>& verdicts) {
  ordered_json j;
  j["k"] = a.k;
  j["n"] = a.n;
  j["m"] = a.m;
  j["delta"] = a.delta;
  j["h"] = a.h;
  j["ell"] = a.ell;
  j["h_minus_ell"] = a.h_minus_ell;
  j["two_core_size"] = a.two_core_size;
  j["good_triangle_packing"] = a.good_triangle_packing;
  j["t"] = optional_json(a.t);
  j["c_lower"] = a.c_lower;
  j["c_exact"] = optional_json(a.c_exact);
  if (!verdicts.empty()) {
    ordered_json list = ordered_json::array();
    for (const auto& v : verdicts) list.push_back(verdict_json(v));
    j["verdicts"] = list;
  }
  return dump(j);
}

std::string to_json(const HypothesisVerdict& v) { return dump(verdict_json(v)); }

std::string to_json(const VerificationReport& r) {
  ordered_json j;
  j["theorem"] = r.theorem;
  j["k"] = r.k;
  j["i"] = r.i;
  j["promised_cycles"] = r.promised;
  j["enumeration"] = spec_json(r.spec);
  j["tested"] = r.tested;
  j["hypothesis_holds"] = r.hypothesis_holds;
  j["packed"] = r.packed;
  j["undecided"] = r.undecided;
  ordered_json cex = ordered_json::array();
  for (const Counterexample& c : r.counterexamples) {
    ordered_json edges = ordered_json::array();
    for (const Edge& e : c.graph.edges()) edges.push_back({e.u, e.v});
    cex.push_back({{"index", c.index},
                   {"n", c.graph.order()},
                   {"m", c.graph.size()},
                   {"edges", edges},
                   {"witness", witness_json(c.witness)}});
  }
  j["counterexamples"] = cex;
  return dump(j);
}

std::string to_json(const SearchResult& r, std::size_t k) {
  ordered_json j;
  j["status"] = status_name(r.status);
  j["k"] = k;
  if (r.status == SearchStatus::kFound) j["cycles"] = r.packing.cycles;
  j["nodes"] = r.nodes;
  return dump(j);
}

}  // namespace cyclepack
