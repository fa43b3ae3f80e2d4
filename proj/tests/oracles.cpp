#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>

#include "cyclepack/enumerate.hpp"

namespace oracle {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> rows(const Graph& g) {
  if (g.order() > 20) throw std::invalid_argument("oracle limited to 20 vertices");
  std::vector<Mask> r(g.order(), 0);
  for (const auto& e : g.edges()) {
    r[e.u] |= Mask{1} << e.v;
    r[e.v] |= Mask{1} << e.u;
  }
  return r;
}

std::size_t subset_dp(std::size_t n, const std::function<void(Mask, std::vector<int>&)>& fill) {
  std::vector<int> best(std::size_t{1} << n, -1);
  best[0] = 0;
  for (Mask mask = 1; mask < (Mask{1} << n); ++mask) fill(mask, best);
  return static_cast<std::size_t>(best[(std::size_t{1} << n) - 1]);
}

}  // namespace

std::vector<bool> hamiltonian_subsets(const Graph& g) {
  const std::size_t n = g.order();
  const std::vector<Mask> adj = rows(g);
  const std::size_t full = std::size_t{1} << n;
  // path[mask] = set of end vertices v such that a path from lowest(mask) to v
  // visits exactly mask.
  std::vector<Mask> path(full, 0);
  std::vector<bool> ham(full, false);
  for (std::size_t v = 0; v < n; ++v) path[std::size_t{1} << v] = Mask{1} << v;
  for (std::size_t mask = 1; mask < full; ++mask) {
    const Mask ends = path[mask];
    if (ends == 0) continue;
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    if (std::popcount(mask) >= 3 && (ends & adj[low]) != 0) ham[mask] = true;
    for (std::size_t v = 0; v < n; ++v) {
      if (!((ends >> v) & 1U)) continue;
      Mask ext = adj[v] & ~static_cast<Mask>(mask);
      // Only vertices above the start keep it the lowest.
      ext &= ~((Mask{1} << (low + 1)) - 1);
      while (ext != 0) {
        const int w = std::countr_zero(ext);
        ext &= ext - 1;
        path[mask | (std::size_t{1} << w)] |= Mask{1} << w;
      }
    }
  }
  return ham;
}

std::size_t cycle_packing_number(const Graph& g) {
  const std::size_t n = g.order();
  const std::vector<bool> ham = hamiltonian_subsets(g);
  return subset_dp(n, [&](Mask mask, std::vector<int>& best) {
    const int low = std::countr_zero(mask);
    const Mask rest = mask & (mask - 1);
    int value = best[rest];
    // Cycles through the lowest vertex: subsets of mask that contain it.
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
      const Mask s = sub | (Mask{1} << low);
      if (ham[s]) value = std::max(value, 1 + best[mask & ~s]);
      if (sub == 0) break;
    }
    best[mask] = value;
  });
}

namespace {

std::size_t triangle_dp(const Graph& g, const std::function<bool(int, int, int)>& keep) {
  const std::size_t n = g.order();
  const std::vector<Mask> adj = rows(g);
  return subset_dp(n, [&](Mask mask, std::vector<int>& best) {
    const int a = std::countr_zero(mask);
    const Mask rest = mask & (mask - 1);
    int value = best[rest];
    Mask nb = adj[a] & rest;
    while (nb != 0) {
      const int b = std::countr_zero(nb);
      nb &= nb - 1;
      Mask common = adj[a] & adj[b] & rest & ~((Mask{1} << (b + 1)) - 1);
      while (common != 0) {
        const int c = std::countr_zero(common);
        common &= common - 1;
        if (!keep(a, b, c)) continue;
        const Mask t = (Mask{1} << a) | (Mask{1} << b) | (Mask{1} << c);
        value = std::max(value, 1 + best[mask & ~t]);
      }
    }
    best[mask] = value;
  });
}

}  // namespace

std::size_t triangle_packing_number(const Graph& g) {
  return triangle_dp(g, [](int, int, int) { return true; });
}

std::size_t good_triangle_packing_number(const Graph& g, int k) {
  const auto low = static_cast<std::size_t>(2 * k - 2);
  return triangle_dp(g, [&](int a, int b, int c) {
    return g.degree(static_cast<cyclepack::Vertex>(a)) <= low ||
           g.degree(static_cast<cyclepack::Vertex>(b)) <= low ||
           g.degree(static_cast<cyclepack::Vertex>(c)) <= low;
  });
}

bool has_disjoint_triangles_bruteforce(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  if (3 * k > n) return false;
  std::vector<cyclepack::Vertex> perm(n);
  for (std::size_t v = 0; v < n; ++v) perm[v] = static_cast<cyclepack::Vertex>(v);
  do {
    bool ok = true;
    for (std::size_t t = 0; t < k && ok; ++t) {
      const auto a = perm[3 * t];
      const auto b = perm[3 * t + 1];
      const auto c = perm[3 * t + 2];
      ok = g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::size_t kky_edges(std::size_t a, std::size_t b) { return a * (a - 1) + 2 * a * b; }

RotationInstance random_rotation_instance(std::uint64_t seed) {
  using cyclepack::Vertex;
  std::mt19937_64 rng(seed);
  const auto below = [&](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };

  const std::size_t s = 1 + below(5);
  const std::size_t j = 1 + below(s);
  const std::size_t extra = below(4);
  const std::size_t n = 3 * s + 3 + extra;  // triangles, w, x, y, spare vertices

  std::vector<Vertex> ids(n);
  std::iota(ids.begin(), ids.end(), Vertex{0});
  std::shuffle(ids.begin(), ids.end(), rng);

  cyclepack::GraphBuilder b(n);
  RotationInstance inst;
  for (std::size_t t = 0; t < s; ++t) {
    const Vertex a = ids[3 * t];
    const Vertex c = ids[3 * t + 1];
    const Vertex d = ids[3 * t + 2];
    b.add_edge(a, c);
    b.add_edge(a, d);
    b.add_edge(c, d);
    inst.packing.triangles.push_back(cyclepack::make_triangle(a, c, d));
  }
  const Vertex w = ids[3 * s];
  const Vertex x = ids[3 * s + 1];
  const Vertex y = ids[3 * s + 2];

  std::vector<std::size_t> order(s);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  inst.plan.path.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(j));
  const auto& tris = inst.packing.triangles;
  for (std::size_t i = 0; i + 1 < j; ++i) {
    const Vertex pivot = tris[inst.plan.path[i]][below(3)];
    inst.plan.pivots.push_back(pivot);
    for (Vertex v : tris[inst.plan.path[i + 1]]) b.add_edge(pivot, v);
  }
  for (Vertex v : tris[inst.plan.path.front()]) b.add_edge(w, v);
  const Vertex z = tris[inst.plan.path.back()][below(3)];
  b.add_edge(x, y);
  b.add_edge(x, z);
  b.add_edge(y, z);
  inst.plan.w = w;
  inst.plan.x = x;
  inst.plan.y = y;
  inst.plan.z = z;

  // Noise never removes an edge, so the plan stays valid.
  const std::size_t noise = below(2 * n);
  for (std::size_t e = 0; e < noise; ++e) {
    const auto u = static_cast<Vertex>(below(n));
    const auto v = static_cast<Vertex>(below(n));
    if (u != v) b.add_edge(u, v);
  }
  inst.graph = std::move(b).build();
  return inst;
}

namespace {

std::pair<int, int> high_low(const Graph& g, int k) {
  int h = 0;
  int ell = 0;
  for (cyclepack::Vertex v = 0; v < g.order(); ++v) {
    const auto d = static_cast<int>(g.degree(v));
    h += d >= 2 * k ? 1 : 0;
    ell += d <= 2 * k - 2 ? 1 : 0;
  }
  return {h, ell};
}

}  // namespace

bool induction_hypothesis(const Graph& g, int k, int i) {
  const auto [h, ell] = high_low(g, k);
  return static_cast<int>(g.order()) >= 16 * k + 3 * i && h - ell >= 3 * k - i;
}

ReductionInstance random_reduction_instance(std::uint64_t seed) {
  using cyclepack::Vertex;
  for (std::uint64_t attempt = 0;; ++attempt) {
    std::mt19937_64 rng(cyclepack::splitmix64(seed * 1000 + attempt));
    const auto below = [&](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };
    const int k = 2 + static_cast<int>(below(3));
    const std::size_t core_n = 7 * static_cast<std::size_t>(k) + below(20);
    const cyclepack::SamplerTarget target{k, 3 * k + 4, 0};
    cyclepack::GraphBuilder b(core_n);
    if (below(2) == 0) {
      b = cyclepack::GraphBuilder(cyclepack::sample_degree_targeted(core_n, target, rng()));
    } else {
      // Union of k random Hamiltonian cycles: degrees at most 2k, so the
      // triangle rule is reachable.
      std::vector<Vertex> perm(core_n);
      std::iota(perm.begin(), perm.end(), Vertex{0});
      for (int c = 0; c < k; ++c) {
        std::shuffle(perm.begin(), perm.end(), rng);
        for (std::size_t p = 0; p < core_n; ++p) b.add_edge(perm[p], perm[(p + 1) % core_n]);
      }
    }

    std::vector<std::pair<Vertex, Vertex>> extra;
    std::size_t n = core_n;
    const auto fresh = [&]() { return static_cast<Vertex>(n++); };
    const std::size_t gadgets = below(5);
    for (std::size_t t = 0; t < gadgets; ++t) {
      const auto anchor = static_cast<Vertex>(below(core_n));
      switch (below(5)) {
        case 0:
          fresh();
          break;
        case 1: {
          const std::size_t leaves = 2 + below(2);
          for (std::size_t l = 0; l < leaves; ++l) extra.emplace_back(anchor, fresh());
          break;
        }
        case 2: {
          Vertex prev = anchor;
          const std::size_t len = 1 + below(3);
          for (std::size_t l = 0; l < len; ++l) {
            const Vertex v = fresh();
            extra.emplace_back(prev, v);
            prev = v;
          }
          break;
        }
        case 3: {
          // Good triangle x u v with d(x) = 2 and d(u) = d(v) = 2k.
          const Vertex x = fresh();
          const Vertex u = fresh();
          const Vertex v = fresh();
          extra.emplace_back(x, u);
          extra.emplace_back(x, v);
          extra.emplace_back(u, v);
          for (const Vertex end : {u, v}) {
            for (int e = 0; e + 2 < 2 * k; ++e) {
              extra.emplace_back(end, static_cast<Vertex>(below(core_n)));
            }
          }
          break;
        }
        default: {
          const std::vector<Vertex> nb = b.peek().neighbor_list(anchor);
          if (nb.empty()) break;
          const Vertex v = fresh();
          extra.emplace_back(v, anchor);
          extra.emplace_back(v, nb[below(nb.size())]);
          break;
        }
      }
    }
    cyclepack::GraphBuilder full(n);
    for (const cyclepack::Edge& e : b.peek().edges()) full.add_edge(e.u, e.v);
    for (const auto& [u, v] : extra) full.add_edge(u, v);
    Graph g = std::move(full).build();

    const auto [h, ell] = high_low(g, k);
    const int lo = std::max(-3 * k, 3 * k - (h - ell));
    const int hi = std::min(k, static_cast<int>(std::floor((static_cast<double>(n) - 16 * k) / 3)));
    if (lo > hi) continue;
    const int i = below(2) == 0 ? hi : lo + static_cast<int>(below(static_cast<std::size_t>(hi - lo + 1)));
    return {std::move(g), k, i};
  }
}

}  // namespace oracle
