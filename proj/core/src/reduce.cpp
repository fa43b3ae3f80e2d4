#include "cyclepack/reduce.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "cyclepack/augment.hpp"

namespace cyclepack {

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::kIsolated:
      return "R1_ISOLATED";
    case Rule::kLeaves:
      return "F3_LEAVES";
    case Rule::kSpecialEdge:
      return "R3_SPECIAL_EDGE";
    case Rule::kContract:
      return "R4_CONTRACT";
    case Rule::kTriangles:
      return "R5_TRIANGLES";
  }
  return "?";
}

std::string_view outcome_name(StepOutcome o) {
  switch (o) {
    case StepOutcome::kApplied:
      return "applied";
    case StepOutcome::kNoRuleApplies:
      return "fixed_point";
    case StepOutcome::kStuck:
      return "stuck";
  }
  return "?";
}

std::string describe_params(const ReductionRecord& r) {
  std::ostringstream out;
  switch (r.rule) {
    case Rule::kIsolated:
      out << "v=" << r.vertices.at(0);
      break;
    case Rule::kLeaves:
      out << "v=" << r.vertices.at(0) << " leaves=";
      for (std::size_t j = 1; j < r.vertices.size(); ++j) {
        out << (j > 1 ? "," : "") << r.vertices[j];
      }
      break;
    case Rule::kSpecialEdge:
      out << "edge=" << r.vertices.at(0) << '-' << r.vertices.at(1);
      break;
    case Rule::kContract:
      out << "x=" << r.vertices.at(0) << " y=" << r.vertices.at(1);
      break;
    case Rule::kTriangles:
      out << "triangles=";
      for (std::size_t j = 0; j < r.triangles.size(); ++j) {
        const Triangle& t = r.triangles[j];
        out << (j > 0 ? ";" : "") << '{' << t[0] << ',' << t[1] << ',' << t[2] << '}';
      }
      break;
  }
  return out.str();
}

ReductionState make_state(Graph g, int k, int i) {
  if (k < 2) throw std::invalid_argument("k must be at least 2, got " + std::to_string(k));
  if (i > k) {
    throw std::invalid_argument("i must not exceed k (i=" + std::to_string(i) +
                                ", k=" + std::to_string(k) + ")");
  }
  ReductionState st;
  st.trace.original = g;
  st.graph = std::move(g);
  st.k = k;
  st.i = i;
  return st;
}

namespace {

struct Candidate {
  ReductionRecord record;
  Graph next;
};

std::vector<Vertex> identity_map(std::size_t n) {
  std::vector<Vertex> m(n);
  std::iota(m.begin(), m.end(), Vertex{0});
  return m;
}

Candidate deletion(const Graph& g, Rule rule, const VertexSet& doomed) {
  Surgery s = delete_vertices(g, doomed);
  Candidate c;
  c.record.rule = rule;
  c.record.old_to_new = std::move(s.old_to_new);
  c.next = std::move(s.graph);
  return c;
}

std::optional<Candidate> try_isolated(const Graph& g, const std::vector<std::size_t>& deg) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (deg[v] != 0) continue;
    Candidate c = deletion(g, Rule::kIsolated, VertexSet(g.order(), {v}));
    c.record.vertices = {v};
    c.record.di = -1;
    return c;
  }
  return std::nullopt;
}

// Leaf deletion is limited to d(v) <= 2k: for a higher-degree v, losing the
// leaves can move v from H to L without the matching credit on i.
std::optional<Candidate> try_leaves(const Graph& g, const std::vector<std::size_t>& deg, int k) {
  const auto two_k = static_cast<std::size_t>(2 * k);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (deg[v] > two_k) continue;
    std::vector<Vertex> leaves;
    for (Vertex u : g.neighbor_list(v)) {
      if (deg[u] == 1) leaves.push_back(u);
    }
    const bool fires = leaves.size() >= 3 || (leaves.size() == 2 && deg[v] == two_k - 1);
    if (!fires) continue;
    Candidate c = deletion(g, Rule::kLeaves, VertexSet(g.order(), leaves));
    c.record.vertices.push_back(v);
    c.record.vertices.insert(c.record.vertices.end(), leaves.begin(), leaves.end());
    c.record.di = -(static_cast<int>(leaves.size()) - 1 - (deg[v] == two_k ? 1 : 0));
    return c;
  }
  return std::nullopt;
}

std::optional<Candidate> try_special_edge(const Graph& g, const std::vector<std::size_t>& deg,
                                          int k) {
  const auto special = [&](Vertex v) {
    return deg[v] + 2 <= static_cast<std::size_t>(2 * k) ||
           deg[v] >= static_cast<std::size_t>(2 * k + 1);
  };
  for (Vertex u = 0; u < g.order(); ++u) {
    if (!special(u)) continue;
    for (Vertex v : g.neighbor_list(u)) {
      if (v <= u || !special(v)) continue;
      Candidate c;
      c.record.rule = Rule::kSpecialEdge;
      c.record.vertices = {u, v};
      c.record.old_to_new = identity_map(g.order());
      c.next = delete_edge(g, u, v);
      return c;
    }
  }
  return std::nullopt;
}

std::optional<Candidate> try_contract(const Graph& g, const std::vector<std::size_t>& deg, int k) {
  for (Vertex x = 0; x < g.order(); ++x) {
    if (deg[x] < 2 || deg[x] + 2 > static_cast<std::size_t>(2 * k)) continue;
    const VertexSet nx = g.neighbors(x);
    for (Vertex y : g.neighbor_list(x)) {
      if (nx.intersects(g.neighbors(y))) continue;
      Contraction ct = contract_edge(g, x, y);
      Candidate c;
      c.record.rule = Rule::kContract;
      c.record.vertices = {x, y};
      c.record.old_to_new = std::move(ct.old_to_new);
      c.record.di = -1;
      c.next = std::move(ct.graph);
      return c;
    }
  }
  return std::nullopt;
}

bool lightly_attached(const Graph& g, const TrianglePacking& p) {
  return attachment_heavy_vertices(g, p.vertex_union(g.order()), p.size()).size() < 2;
}

// Single good triangles in lexicographic order, then prefixes of the greedy
// lexicographic packing, up to max_size triangles.
std::optional<TrianglePacking> find_light_packing(const Graph& g, int k, std::size_t max_size) {
  if (max_size == 0) return std::nullopt;
  const std::vector<Triangle> good = list_triangles(g, TriangleFilter::kGood, k);
  for (const Triangle& t : good) {
    TrianglePacking p{{t}};
    if (lightly_attached(g, p)) return p;
  }
  TrianglePacking prefix;
  VertexSet used(g.order());
  for (const Triangle& t : good) {
    if (prefix.size() >= max_size) break;
    if (used.contains(t[0]) || used.contains(t[1]) || used.contains(t[2])) continue;
    prefix.triangles.push_back(t);
    for (Vertex v : t) used.insert(v);
    if (prefix.size() >= 2 && lightly_attached(g, prefix)) return prefix;
  }
  return std::nullopt;
}

std::optional<Candidate> try_triangles(const Graph& g, int k) {
  const std::optional<TrianglePacking> light =
      find_light_packing(g, k, k >= 2 ? static_cast<std::size_t>(k - 2) : 0);
  if (!light) return std::nullopt;
  Candidate c = deletion(g, Rule::kTriangles, light->vertex_union(g.order()));
  c.record.triangles = light->triangles;
  c.record.dk = -static_cast<int>(light->size());
  c.record.di = c.record.dk;
  return c;
}

std::optional<Candidate> first_applicable(const Graph& g, int k) {
  const std::vector<std::size_t> deg = g.degrees();
  if (auto c = try_isolated(g, deg)) return c;
  if (auto c = try_leaves(g, deg, k)) return c;
  if (auto c = try_special_edge(g, deg, k)) return c;
  if (auto c = try_contract(g, deg, k)) return c;
  return try_triangles(g, k);
}

Graph apply_record(const Graph& g, const ReductionRecord& r) {
  switch (r.rule) {
    case Rule::kIsolated:
    case Rule::kLeaves: {
      VertexSet doomed(g.order());
      for (std::size_t j = r.rule == Rule::kLeaves ? 1 : 0; j < r.vertices.size(); ++j) {
        doomed.insert(r.vertices[j]);
      }
      return delete_vertices(g, doomed).graph;
    }
    case Rule::kSpecialEdge:
      return delete_edge(g, r.vertices.at(0), r.vertices.at(1));
    case Rule::kContract:
      return contract_edge(g, r.vertices.at(0), r.vertices.at(1)).graph;
    case Rule::kTriangles:
      return delete_vertices(g, TrianglePacking{r.triangles}.vertex_union(g.order())).graph;
  }
  throw std::logic_error("unknown rule");
}

}  // namespace

StepOutcome reduce_step(ReductionState& st) {
  std::optional<Candidate> c = first_applicable(st.graph, st.k);
  if (!c) return StepOutcome::kNoRuleApplies;
  const int k_after = st.k + c->record.dk;
  const int i_after = st.i + c->record.di;
  if (i_after < -3 * k_after) return StepOutcome::kStuck;

  c->record.k_after = k_after;
  c->record.i_after = i_after;
  c->record.n_after = c->next.order();
  c->record.m_after = c->next.size();
  st.graph = std::move(c->next);
  st.k = k_after;
  st.i = i_after;
  st.trace.records.push_back(std::move(c->record));
  return StepOutcome::kApplied;
}

ReduceSummary reduce_fully(ReductionState& st, std::size_t max_steps) {
  ReduceSummary summary;
  while (summary.steps < max_steps) {
    const auto before = std::make_tuple(st.k, st.i, st.graph.order() + st.graph.size());
    summary.last = reduce_step(st);
    if (summary.last != StepOutcome::kApplied) return summary;
    ++summary.steps;
    const auto after = std::make_tuple(st.k, st.i, st.graph.order() + st.graph.size());
    if (!(after < before)) {
      throw std::logic_error(std::string("sigma did not decrease after ") +
                             std::string(rule_name(st.trace.records.back().rule)));
    }
  }
  summary.step_limit = true;
  return summary;
}

std::vector<Graph> replay(const ReductionTrace& trace) {
  std::vector<Graph> graphs{trace.original};
  graphs.reserve(trace.records.size() + 1);
  for (const ReductionRecord& r : trace.records) {
    Graph next = apply_record(graphs.back(), r);
    if (next.order() != r.n_after || next.size() != r.m_after ||
        r.old_to_new.size() != graphs.back().order()) {
      throw std::logic_error(std::string("record ") + std::string(rule_name(r.rule)) +
                             " does not reproduce");
    }
    graphs.push_back(std::move(next));
  }
  return graphs;
}

CyclePacking lift_packing(const ReductionTrace& trace, const CyclePacking& p) {
  const std::vector<Graph> graphs = replay(trace);
  if (!verify_cycle_packing(graphs.back(), p)) {
    throw std::invalid_argument("packing is not valid in the reduced graph");
  }
  CyclePacking cur = p;
  for (std::size_t j = trace.records.size(); j-- > 0;) {
    const ReductionRecord& r = trace.records[j];
    const Graph& pre = graphs[j];
    std::vector<Vertex> new_to_old(graphs[j + 1].order(), kRemoved);
    Vertex merged = kRemoved;
    if (r.rule == Rule::kContract) merged = r.old_to_new[r.vertices[0]];
    for (Vertex v = 0; v < r.old_to_new.size(); ++v) {
      const Vertex w = r.old_to_new[v];
      if (w != kRemoved && w != merged) new_to_old[w] = v;
    }

    CyclePacking next;
    for (const Cycle& c : cur.cycles) {
      Cycle lifted;
      for (std::size_t pos = 0; pos < c.size(); ++pos) {
        if (c[pos] != merged) {
          lifted.push_back(new_to_old[c[pos]]);
          continue;
        }
        const Vertex a = new_to_old[c[(pos + c.size() - 1) % c.size()]];
        const Vertex b = new_to_old[c[(pos + 1) % c.size()]];
        const Vertex x = r.vertices[0];
        const Vertex y = r.vertices[1];
        if (pre.has_edge(a, x) && pre.has_edge(x, b)) {
          lifted.push_back(x);
        } else if (pre.has_edge(a, y) && pre.has_edge(y, b)) {
          lifted.push_back(y);
        } else if (pre.has_edge(a, x) && pre.has_edge(y, b)) {
          lifted.push_back(x);
          lifted.push_back(y);
        } else {
          lifted.push_back(y);
          lifted.push_back(x);
        }
      }
      next.cycles.push_back(std::move(lifted));
    }
    for (const Triangle& t : r.triangles) next.cycles.push_back({t[0], t[1], t[2]});
    if (!verify_cycle_packing(pre, next)) {
      throw std::logic_error(std::string("lifting through ") + std::string(rule_name(r.rule)) +
                             " produced an invalid packing");
    }
    cur = std::move(next);
  }
  return cur;
}

MinimalityReport check_minimality(const Graph& g, int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  MinimalityReport report;
  report.k_at_least_3 = k >= 3;
  report.light_packing = find_light_packing(g, k, g.order() / 3);
  return report;
}

SolveResult solve_with_reduction(const Graph& g, int k, const SolveOptions& opts) {
  ReductionState st = make_state(g, k, k);
  SolveResult out;
  out.reduction = reduce_fully(st, opts.max_steps);
  out.trace = std::move(st.trace);

  SearchResult reduced =
      find_disjoint_cycles(st.graph, static_cast<std::size_t>(st.k), opts.search);
  switch (reduced.status) {
    case SearchStatus::kFound: {
      CyclePacking lifted = lift_packing(out.trace, reduced.packing);
      lifted.cycles.resize(static_cast<std::size_t>(k));
      if (!verify_cycle_packing(g, lifted)) {
        throw std::logic_error("lifted certificate failed verification");
      }
      out.search.status = SearchStatus::kFound;
      out.search.packing = normalize_packing(std::move(lifted));
      out.search.nodes = reduced.nodes;
      break;
    }
    case SearchStatus::kNotExist: {
      out.rechecked_original = true;
      out.search = find_disjoint_cycles(g, static_cast<std::size_t>(k), opts.search);
      out.search.nodes += reduced.nodes;
      break;
    }
    case SearchStatus::kExhausted:
      out.search = std::move(reduced);
      break;
  }
  return out;
}

}  // namespace cyclepack
