#include "cyclepack/extremal.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace cyclepack {

namespace {

struct FamilyEntry {
  Family family;
  std::string_view name;
  FamilyParams params;
};

constexpr std::array<FamilyEntry, 10> kFamilies{{
    {Family::kCliqueMinus, "clique_minus", {true, true, false}},
    {Family::kG0, "g0", {true, false, false}},
    {Family::kG1, "g1", {true, false, false}},
    {Family::kBipartiteSharp, "bipartite_sharp", {true, true, false}},
    {Family::kKkyException, "kky_exception", {true, false, false}},
    {Family::kWheel, "wheel", {false, true, false}},
    {Family::kSk, "sk", {false, false, true}},
    {Family::kComplete, "complete", {false, true, false}},
    {Family::kCompleteBipartite, "complete_bipartite", {false, true, true}},
    {Family::kCycle, "cycle", {false, true, false}},
}};

const FamilyEntry& entry(Family f) {
  for (const auto& e : kFamilies) {
    if (e.family == f) return e;
  }
  throw std::invalid_argument("unknown family");
}

[[noreturn]] void bad(const FamilySpec& spec, const std::string& why) {
  throw std::invalid_argument(std::string(family_name(spec.family)) + ": " + why);
}

void check(const FamilySpec& spec) {
  const FamilyParams p = entry(spec.family).params;
  if (p.k && spec.k < 2) bad(spec, "k must be at least 2");
  const auto k = static_cast<std::size_t>(std::max(spec.k, 0));
  switch (spec.family) {
    case Family::kCliqueMinus:
      if (spec.n < 3 * k) bad(spec, "requires n >= 3k");
      break;
    case Family::kBipartiteSharp:
      if (spec.n < 4 * k) bad(spec, "requires n >= 4k");
      break;
    case Family::kWheel:
      if (spec.n < 4) bad(spec, "requires n >= 4");
      break;
    case Family::kSk:
      if (spec.m < 3) bad(spec, "requires m >= 3");
      break;
    case Family::kCycle:
      if (spec.n < 3) bad(spec, "requires n >= 3");
      break;
    default:
      break;
  }
}

// Degree multiset as (count, degree) pairs.
using DegreeTable = std::vector<std::pair<std::size_t, std::size_t>>;

DegreeTable degree_table(const FamilySpec& spec) {
  const auto k = static_cast<std::size_t>(spec.k);
  const std::size_t n = spec.n;
  switch (spec.family) {
    case Family::kCliqueMinus:
      return {{n - 2 * k + 1, 2 * k - 1}, {2 * k - 1, n - 1}};
    case Family::kG0:
      return {{k, 2 * k}, {2 * k - 1, 3 * k - 2}, {1, k}};
    case Family::kG1:
      return {{k, 2 * k}, {2 * k - 1, 3 * k - 2}, {1, 2 * k}, {k, 1}};
    case Family::kBipartiteSharp:
      return {{n - 2 * k + 1, 2 * k - 1}, {2 * k - 1, n - 2 * k + 1}};
    case Family::kKkyException:
      return {{2 * k, 2 * k - 1}, {k, 2 * k}};
    case Family::kWheel:
      return {{1, n - 1}, {n - 1, 3}};
    case Family::kSk:
      return {{spec.m, spec.m - 1}, {1, 2}};
    case Family::kComplete:
      return {{n, n == 0 ? 0 : n - 1}};
    case Family::kCompleteBipartite:
      return {{n, spec.m}, {spec.m, n}};
    case Family::kCycle:
      return {{n, 2}};
  }
  return {};
}

}  // namespace

std::string_view family_name(Family f) { return entry(f).name; }

Family parse_family(std::string_view name) {
  for (const auto& e : kFamilies) {
    if (e.name == name) return e.family;
  }
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::vector<Family> all_families() {
  std::vector<Family> out;
  for (const auto& e : kFamilies) out.push_back(e.family);
  return out;
}

FamilyParams family_params(Family f) { return entry(f).params; }

Graph generate(const FamilySpec& spec) {
  check(spec);
  const auto k = static_cast<Vertex>(std::max(spec.k, 0));
  const auto n = static_cast<Vertex>(spec.n);
  switch (spec.family) {
    case Family::kCliqueMinus: {
      GraphBuilder b(n);
      const Vertex first_universal = n - 2 * k + 1;
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = std::max(u + 1, first_universal); v < n; ++v) b.add_edge(u, v);
      }
      return std::move(b).build();
    }
    case Family::kG0:
    case Family::kG1: {
      const Vertex x = 3 * k - 1;
      GraphBuilder b(spec.family == Family::kG0 ? 3 * k : 4 * k);
      for (Vertex u = 0; u < x; ++u) {
        for (Vertex v = u + 1; v < x; ++v) {
          if (v >= k) b.add_edge(u, v);
        }
      }
      for (Vertex s = 0; s < k; ++s) b.add_edge(s, x);
      if (spec.family == Family::kG1) {
        for (Vertex leaf = 3 * k; leaf < 4 * k; ++leaf) b.add_edge(x, leaf);
      }
      return std::move(b).build();
    }
    case Family::kBipartiteSharp:
      return make_complete_bipartite(n - 2 * k + 1, 2 * k - 1);
    case Family::kKkyException:
      return join(disjoint_union(make_complete(k), make_complete(k)), make_empty(k));
    case Family::kWheel:
      return join(make_empty(1), make_cycle(n - 1));
    case Family::kSk: {
      const auto m = static_cast<Vertex>(spec.m);
      GraphBuilder b(make_complete(m + 1));
      for (Vertex v = 2; v < m; ++v) b.remove_edge(v, m);
      b.remove_edge(0, 1);
      return std::move(b).build();
    }
    case Family::kComplete:
      return make_complete(n);
    case Family::kCompleteBipartite:
      return make_complete_bipartite(n, spec.m);
    case Family::kCycle:
      return make_cycle(n);
  }
  throw std::invalid_argument("unknown family");
}

ExpectedProfile expected_profile(const FamilySpec& spec) {
  check(spec);
  const int k = entry(spec.family).params.k ? spec.k : std::max(spec.k, 2);
  const auto kk = static_cast<std::size_t>(k);
  ExpectedProfile p;
  std::size_t min_degree = 0;
  bool first = true;
  long long gap = 0;
  for (const auto& [count, degree] : degree_table(spec)) {
    if (count == 0) continue;
    p.n += count;
    min_degree = first ? degree : std::min(min_degree, degree);
    first = false;
    if (degree >= 2 * kk) gap += static_cast<long long>(count);
    if (degree + 2 <= 2 * kk) gap -= static_cast<long long>(count);
  }
  p.h_minus_ell = gap;
  if (!first) p.min_degree = min_degree;

  switch (spec.family) {
    case Family::kCliqueMinus:
      p.c_exact = kk - 1;
      p.notes = "delta = 2k-1; every cycle needs two of the 2k-1 universal vertices";
      break;
    case Family::kG0:
      p.c_exact = kk - 1;
      p.notes = "x lies in no triangle";
      break;
    case Family::kG1:
      p.c_exact = kk - 1;
      p.notes = "2-core is g0";
      break;
    case Family::kBipartiteSharp:
      p.c_exact = kk - 1;
      p.notes = "every cycle uses two vertices of the (2k-1)-side";
      break;
    case Family::kKkyException:
      if (k % 2 == 1) {
        p.c_exact = kk - 1;
        p.notes = "exceptional graph for odd k";
      } else {
        p.notes = "even k: not exceptional, c unconstrained";
      }
      break;
    case Family::kWheel:
      p.c_exact = 1;
      p.notes = "every cycle avoiding the hub is the whole rim";
      break;
    case Family::kSk:
      p.c_exact = spec.m / 3;
      p.notes = "the subdivision vertex lies only on cycles of length >= 4";
      break;
    case Family::kComplete:
      p.c_exact = spec.n / 3;
      break;
    case Family::kCompleteBipartite:
      p.c_exact = std::min(spec.n, spec.m) / 2;
      p.notes = "every cycle uses two vertices of each side";
      break;
    case Family::kCycle:
      p.c_exact = 1;
      break;
  }
  return p;
}

}  // namespace cyclepack
