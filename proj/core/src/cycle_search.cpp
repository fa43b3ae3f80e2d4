#include <algorithm>
#include <array>
#include <string>
#include <unordered_set>

#include "cyclepack/packing.hpp"
#include "search_internal.hpp"

namespace cyclepack {
namespace detail {

Adjacency::Adjacency(const Graph& g) : n(g.order()) {
  if (n > kMaxSearchOrder) {
    throw std::invalid_argument("search engine supports at most " +
                                std::to_string(kMaxSearchOrder) + " vertices, got " +
                                std::to_string(n));
  }
  for (Vertex v = 0; v < n; ++v) row[v] = g.row64(v);
}

Mask core_of(const Adjacency& adj, Mask avail) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Mask m = avail; m != 0; m &= m - 1) {
      const Vertex v = lowest(m);
      if (popcount(adj.row[v] & avail) <= 1) {
        avail &= ~bit(v);
        changed = true;
      }
    }
  }
  return avail;
}

std::size_t component_count(const Adjacency& adj, Mask avail) {
  std::size_t count = 0;
  while (avail != 0) {
    Mask frontier = bit(lowest(avail));
    Mask seen = frontier;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask m = frontier; m != 0; m &= m - 1) next |= adj.row[lowest(m)];
      next &= avail & ~seen;
      seen |= next;
      frontier = next;
    }
    avail &= ~seen;
    ++count;
  }
  return count;
}

std::size_t cycle_upper_bound(const Adjacency& adj, Mask core) {
  const auto order = static_cast<std::size_t>(popcount(core));
  std::size_t twice_edges = 0;
  for (Mask m = core; m != 0; m &= m - 1) {
    twice_edges += static_cast<std::size_t>(popcount(adj.row[lowest(m)] & core));
  }
  // Disjoint cycles are independent in the cycle space.
  const std::size_t cyclomatic = twice_edges / 2 + component_count(adj, core) - order;
  return std::min(order / 3, cyclomatic);
}

}  // namespace detail

namespace {

using detail::Adjacency;

struct StateKey {
  Mask mask;
  std::size_t k;
  bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& s) const noexcept {
    std::uint64_t x = s.mask ^ (static_cast<std::uint64_t>(s.k) * 0x9E3779B97F4A7C15ULL);
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};

constexpr std::size_t kMemoCap = 1U << 22;

class ExactSearch {
 public:
  ExactSearch(const Adjacency& adj, std::uint64_t budget) : adj_(adj), budget_(budget) {}

  bool search(Mask avail, std::size_t k) {
    tick();
    if (k == 0) return true;
    const Mask core = detail::core_of(adj_, avail);
    const auto order = static_cast<std::size_t>(popcount(core));
    if (order < 3 * k) return false;
    if (detail::cycle_upper_bound(adj_, core) < k) return false;
    if (failed_.contains({core, k})) return false;

    // Minimum degree inside the core, lowest id on ties.
    Vertex pivot = lowest(core);
    int best_degree = popcount(adj_.row[pivot] & core);
    for (Mask m = core & (core - 1); m != 0; m &= m - 1) {
      const Vertex v = lowest(m);
      const int d = popcount(adj_.row[v] & core);
      if (d < best_degree) {
        best_degree = d;
        pivot = v;
      }
    }

    std::vector<Cycle> through;
    induced_cycles(pivot, core, order - 3 * (k - 1), through);
    std::stable_sort(through.begin(), through.end(), [](const Cycle& a, const Cycle& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    for (const Cycle& c : through) {
      Mask used = 0;
      for (Vertex v : c) used |= bit(v);
      if (search(core & ~used, k - 1)) {
        found.push_back(c);
        return true;
      }
    }
    if (search(core & ~bit(pivot), k)) return true;

    if (failed_.size() < kMemoCap) failed_.insert({core, k});
    return false;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

  std::vector<Cycle> found;

 private:
  void tick() {
    if (++nodes_ > budget_) throw BudgetExhausted();
  }

  // Induced cycles through `start` inside `avail` of length <= max_len. Each
  // cycle is reported once, oriented so its second vertex is smaller than
  // its last.
  void induced_cycles(Vertex start, Mask avail, std::size_t max_len, std::vector<Cycle>& out) {
    if (max_len < 3) return;
    Cycle path{start};
    extend(start, path, bit(start), avail, max_len, out);
  }

  void extend(Vertex start, Cycle& path, Mask on_path, Mask avail, std::size_t max_len,
              std::vector<Cycle>& out) {
    tick();
    const Vertex last = path.back();
    const Mask interior = on_path & ~bit(start) & ~bit(last);
    for (Mask cand = adj_.row[last] & avail & ~on_path; cand != 0; cand &= cand - 1) {
      const Vertex u = lowest(cand);
      if ((adj_.row[u] & interior) != 0) continue;
      if (path.size() >= 2 && (adj_.row[u] & bit(start)) != 0) {
        if (u > path[1] && path.size() + 1 <= max_len) {
          path.push_back(u);
          out.push_back(path);
          path.pop_back();
        }
        continue;
      }
      if (path.size() + 2 > max_len) continue;
      path.push_back(u);
      extend(start, path, on_path | bit(u), avail, max_len, out);
      path.pop_back();
    }
  }

  const Adjacency& adj_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::unordered_set<StateKey, StateKeyHash> failed_;
};

struct CycleScore {
  std::size_t length;
  std::size_t degree_sum;
  Cycle cycle;

  bool operator<(const CycleScore& o) const {
    if (length != o.length) return length < o.length;
    if (degree_sum != o.degree_sum) return degree_sum < o.degree_sum;
    return cycle < o.cycle;
  }
};

}  // namespace

SearchResult exact_disjoint_cycles(const Graph& g, std::size_t k, Mask avail,
                                   std::uint64_t node_budget) {
  const Adjacency adj(g);
  avail &= full_mask(g.order());
  ExactSearch search(adj, node_budget);
  SearchResult result;
  try {
    if (search.search(avail, k)) {
      result.status = SearchStatus::kFound;
      result.packing.cycles = search.found;
      result.packing = normalize_packing(std::move(result.packing));
    } else {
      result.status = SearchStatus::kNotExist;
    }
  } catch (const BudgetExhausted&) {
    result.status = SearchStatus::kExhausted;
  }
  result.nodes = search.nodes();
  return result;
}

std::optional<Cycle> shortest_cycle(const Graph& g, Mask avail) {
  const Adjacency adj(g);
  avail = detail::core_of(adj, avail & full_mask(g.order()));
  std::optional<CycleScore> best;

  std::array<int, kMaxSearchOrder> dist{};
  std::array<Vertex, kMaxSearchOrder> parent{};
  std::vector<Vertex> queue;
  queue.reserve(kMaxSearchOrder);

  for (Mask sources = avail; sources != 0; sources &= sources - 1) {
    const Vertex s = lowest(sources);
    dist.fill(-1);
    dist[s] = 0;
    parent[s] = s;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      if (best && static_cast<std::size_t>(2 * dist[u] + 1) > best->length) break;
      for (Mask nb = adj.row[u] & avail; nb != 0; nb &= nb - 1) {
        const Vertex w = lowest(nb);
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
          continue;
        }
        if (w == parent[u] || dist[w] < dist[u] || (dist[w] == dist[u] && w < u)) continue;
        // Non-tree edge u-w; it closes a cycle through s iff the two tree
        // paths meet only at s.
        Mask left = 0;
        Cycle up;
        for (Vertex x = u; x != s; x = parent[x]) {
          left |= bit(x);
          up.push_back(x);
        }
        Mask right = 0;
        Cycle down;
        for (Vertex x = w; x != s; x = parent[x]) {
          right |= bit(x);
          down.push_back(x);
        }
        if ((left & right) != 0) continue;
        Cycle cycle{s};
        cycle.insert(cycle.end(), up.rbegin(), up.rend());
        cycle.insert(cycle.end(), down.begin(), down.end());
        std::size_t degree_sum = 0;
        for (Vertex x : cycle) degree_sum += static_cast<std::size_t>(popcount(adj.row[x] & avail));
        CycleScore score{cycle.size(), degree_sum, normalize_cycle(std::move(cycle))};
        if (!best || score < *best) best = std::move(score);
      }
    }
  }
  if (!best) return std::nullopt;
  return std::move(best->cycle);
}

CyclePacking greedy_cycle_packing(const Graph& g, std::size_t limit, Mask avail) {
  CyclePacking out;
  avail &= full_mask(g.order());
  while (out.size() < limit) {
    auto c = shortest_cycle(g, avail);
    if (!c) break;
    for (Vertex v : *c) avail &= ~bit(v);
    out.cycles.push_back(std::move(*c));
  }
  return normalize_packing(std::move(out));
}

CyclePacking greedy_cycle_packing(const Graph& g, std::size_t limit) {
  return greedy_cycle_packing(g, limit, full_mask(g.order()));
}

}  // namespace cyclepack
