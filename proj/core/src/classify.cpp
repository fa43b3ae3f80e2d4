#include "cyclepack/classify.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclepack {

namespace {

void require_k(int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2, got " + std::to_string(k));
}

long long ll(std::size_t v) { return static_cast<long long>(v); }

}  // namespace

std::size_t DegreeProfile::critical() const {
  const auto it = strata.find(static_cast<std::size_t>(2 * k - 1));
  return it == strata.end() ? 0 : it->second.size();
}

VertexSet DegreeProfile::at_most(std::size_t d) const {
  VertexSet out(high.universe());
  for (const auto& [deg, set] : strata) {
    if (deg <= d) out |= set;
  }
  return out;
}

VertexSet DegreeProfile::at_least(std::size_t d) const {
  VertexSet out(high.universe());
  for (const auto& [deg, set] : strata) {
    if (deg >= d) out |= set;
  }
  return out;
}

DegreeProfile classify(const Graph& g, int k) {
  require_k(k);
  const std::size_t n = g.order();
  DegreeProfile p;
  p.k = k;
  p.high = VertexSet(n);
  p.low = VertexSet(n);
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t d = g.degree(v);
    auto [it, inserted] = p.strata.try_emplace(d, n);
    it->second.insert(v);
    if (ll(d) >= 2LL * k) {
      p.high.insert(v);
      ++p.h;
    } else if (ll(d) <= 2LL * k - 2) {
      p.low.insert(v);
      ++p.ell;
    }
  }
  return p;
}

DegreeCounts count_degrees(const Graph& g, int k) {
  require_k(k);
  DegreeCounts c;
  c.n = g.order();
  c.min_degree = c.n == 0 ? 0 : c.n;
  for (Vertex v = 0; v < c.n; ++v) {
    const std::size_t d = g.degree(v);
    c.min_degree = std::min(c.min_degree, d);
    if (ll(d) >= 2LL * k) {
      ++c.h;
    } else if (ll(d) <= 2LL * k - 2) {
      ++c.ell;
    }
  }
  return c;
}

namespace {

struct NamedHypothesis {
  Hypothesis id;
  std::string_view name;
};

constexpr std::array<NamedHypothesis, 9> kNames{{
    {Hypothesis::kCorradiHajnal, "CH"},
    {Hypothesis::kDiracErdos, "DE"},
    {Hypothesis::kGap3k, "H3K"},
    {Hypothesis::kMain2k, "MAIN2K"},
    {Hypothesis::kInduct, "INDUCT"},
    {Hypothesis::kGap2kPlusT, "T2KPLUST"},
    {Hypothesis::kNoLowVertices, "COR9"},
    {Hypothesis::kOneTriangle, "ONETRI"},
    {Hypothesis::kTwoCore, "LEM10"},
}};

}  // namespace

std::string_view hypothesis_name(Hypothesis id) {
  for (const auto& e : kNames) {
    if (e.id == id) return e.name;
  }
  return "?";
}

Hypothesis parse_hypothesis(std::string_view name) {
  for (const auto& e : kNames) {
    if (e.name == name) return e.id;
  }
  throw std::invalid_argument("unknown hypothesis '" + std::string(name) + "'");
}

int promised_cycles(Hypothesis id, int k) { return id == Hypothesis::kTwoCore ? 2 : k; }

bool Witness::satisfied() const {
  if (op == ">=") return value >= bound;
  if (op == "<=") return value <= bound;
  if (op == "==") return value == bound;
  throw std::logic_error("unknown witness relation " + op);
}

namespace {

// Evaluates conjuncts lazily in order; stops at the first failure.
class Conjunction {
 public:
  explicit Conjunction(HypothesisVerdict& v) : verdict_(v) { verdict_.holds = true; }

  template <typename ValueFn>
  Conjunction& require(std::string name, ValueFn&& value, long long bound,
                       std::string op = ">=") {
    if (!verdict_.holds) return *this;
    Witness w{std::move(name), value(), bound, std::move(op)};
    verdict_.holds = w.satisfied();
    verdict_.witness = std::move(w);
    return *this;
  }

 private:
  HypothesisVerdict& verdict_;
};

}  // namespace

HypothesisVerdict check_hypothesis(const Graph& g, Hypothesis id, int k, int i,
                                   const ExactOptions& exact) {
  require_k(k);
  if (id == Hypothesis::kInduct && i > k) {
    throw std::invalid_argument("INDUCT requires i <= k (i=" + std::to_string(i) +
                                ", k=" + std::to_string(k) + ")");
  }
  HypothesisVerdict verdict;
  verdict.id = id;
  verdict.k = k;
  verdict.i = i;

  const long long K = k;
  const long long n = ll(g.order());
  const DegreeCounts counts = count_degrees(g, k);
  const auto gap = [&] { return counts.gap(); };
  const auto order = [&] { return n; };
  const auto t = [&] { return ll(triangle_packing_number(g, exact)); };

  Conjunction c(verdict);
  switch (id) {
    case Hypothesis::kCorradiHajnal:
      c.require("n", order, 3 * K).require("delta", [&] { return ll(counts.min_degree); }, 2 * K);
      break;
    case Hypothesis::kDiracErdos:
      c.require("k", [&] { return K; }, 3).require("h_minus_ell", gap, K * K + 2 * K - 4);
      break;
    case Hypothesis::kGap3k:
      c.require("h_minus_ell", gap, 3 * K);
      break;
    case Hypothesis::kMain2k:
      c.require("n", order, 19 * K).require("h_minus_ell", gap, 2 * K);
      break;
    case Hypothesis::kInduct:
      c.require("n", order, 16 * K + 3LL * i).require("h_minus_ell", gap, 3 * K - i);
      break;
    case Hypothesis::kGap2kPlusT:
      // h - l >= 2k first, so t(G) is only computed when it can matter.
      c.require("n", order, 3 * K)
          .require("h_minus_ell", gap, 2 * K)
          .require("h_minus_ell_minus_t", [&] { return gap() - t(); }, 2 * K);
      break;
    case Hypothesis::kNoLowVertices:
      c.require("n", order, 3 * K)
          .require("h", [&] { return ll(counts.h); }, 2 * K)
          .require("delta", [&] { return ll(counts.min_degree); }, 2 * K - 1);
      break;
    case Hypothesis::kOneTriangle:
      c.require("k", [&] { return K; }, 3)
          .require("h_minus_ell", gap, 2 * K)
          .require("t", t, 1, "<=");
      break;
    case Hypothesis::kTwoCore: {
      const DegreeCounts two = count_degrees(g, 2);
      Core core;
      bool have_core = false;
      const auto get_core = [&]() -> const Core& {
        if (!have_core) {
          core = two_core(g);
          have_core = true;
        }
        return core;
      };
      c.require("h2_minus_ell2", [&] { return two.gap(); }, 4)
          .require("two_core_order", [&] { return ll(get_core().graph.order()); }, 6)
          .require("two_core_is_sk5", [&] { return get_core().graph.order() == 6 &&
                                                          is_sk5(get_core().graph)
                                                      ? 1LL
                                                      : 0LL; },
                   0, "==");
      break;
    }
  }
  return verdict;
}

bool low_fraction_bound(const Graph& g, int k) {
  const DegreeCounts c = count_degrees(g, k);
  if (c.gap() < 2LL * k) {
    throw std::invalid_argument("low_fraction_bound requires h - ell >= 2k (h - ell = " +
                                std::to_string(c.gap()) + ", 2k = " + std::to_string(2 * k) +
                                ")");
  }
  // ell <= n/2 - k, kept in integers.
  return 2 * ll(c.ell) <= ll(c.n) - 2LL * k;
}

bool is_sk5(const Graph& g) {
  if (g.order() != 6 || g.size() != 11) return false;
  // SK_5: K_5 on 0..4 with edge 0-1 subdivided by vertex 5.
  GraphBuilder b(6);
  for (Vertex u = 0; u < 5; ++u) {
    for (Vertex v = u + 1; v < 5; ++v) {
      if (!(u == 0 && v == 1)) b.add_edge(u, v);
    }
  }
  b.add_edge(0, 5);
  b.add_edge(1, 5);
  const Graph sk = std::move(b).build();

  std::array<Vertex, 6> perm{0, 1, 2, 3, 4, 5};
  do {
    bool same = true;
    for (Vertex u = 0; u < 6 && same; ++u) {
      for (Vertex v = u + 1; v < 6; ++v) {
        if (sk.has_edge(u, v) != g.has_edge(perm[u], perm[v])) {
          same = false;
          break;
        }
      }
    }
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace cyclepack
