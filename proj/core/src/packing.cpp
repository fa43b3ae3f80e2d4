#include "cyclepack/packing.hpp"

#include <algorithm>
#include <string>

#include "cyclepack/augment.hpp"
#include "search_internal.hpp"

namespace cyclepack {

Triangle make_triangle(Vertex a, Vertex b, Vertex c) {
  Triangle t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

VertexSet TrianglePacking::vertex_union(std::size_t n) const {
  VertexSet out(n);
  for (const Triangle& t : triangles) {
    for (Vertex v : t) out.insert(v);
  }
  return out;
}

CyclePacking TrianglePacking::as_cycles() const {
  CyclePacking out;
  for (const Triangle& t : triangles) out.cycles.push_back({t[0], t[1], t[2]});
  return out;
}

bool verify_cycle_packing(const Graph& g, const CyclePacking& p) {
  std::vector<bool> used(g.order(), false);
  for (const Cycle& c : p.cycles) {
    if (c.size() < 3) return false;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Vertex v = c[i];
      if (v >= g.order() || used[v]) return false;
      used[v] = true;
      if (!g.has_edge(v, c[(i + 1) % c.size()])) return false;
    }
  }
  return true;
}

bool verify_triangle_packing(const Graph& g, const TrianglePacking& p) {
  for (const Triangle& t : p.triangles) {
    if (!std::is_sorted(t.begin(), t.end())) return false;
  }
  return verify_cycle_packing(g, p.as_cycles());
}

Cycle normalize_cycle(Cycle c) {
  if (c.size() < 2) return c;
  const auto min_it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), min_it, c.end());
  if (c.size() > 2 && c.back() < c[1]) std::reverse(c.begin() + 1, c.end());
  return c;
}

CyclePacking normalize_packing(CyclePacking p) {
  for (Cycle& c : p.cycles) c = normalize_cycle(std::move(c));
  std::sort(p.cycles.begin(), p.cycles.end());
  return p;
}

std::string_view status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound:
      return "found";
    case SearchStatus::kNotExist:
      return "not_exist";
    case SearchStatus::kExhausted:
      return "exhausted";
  }
  return "unknown";
}

namespace {

// Good triangles first, then greedy shortest cycles on what is left.
CyclePacking triangle_first_heuristic(const Graph& g, std::size_t k) {
  CyclePacking out;
  Mask avail = full_mask(g.order());
  if (k >= 2) {
    const TrianglePacking good = grow_good_packing(g, static_cast<int>(k));
    for (const Triangle& t : good.triangles) {
      if (out.size() == k) break;
      out.cycles.push_back({t[0], t[1], t[2]});
      for (Vertex v : t) avail &= ~bit(v);
    }
  }
  if (out.size() < k) {
    CyclePacking rest = greedy_cycle_packing(g, k - out.size(), avail);
    for (Cycle& c : rest.cycles) out.cycles.push_back(std::move(c));
  }
  return out;
}

}  // namespace

SearchResult find_disjoint_cycles(const Graph& g, std::size_t k, const SearchOptions& opts) {
  if (g.order() > kMaxSearchOrder) {
    throw std::invalid_argument("search engine supports at most " +
                                std::to_string(kMaxSearchOrder) + " vertices");
  }
  SearchResult result;
  if (k == 0) {
    result.status = SearchStatus::kFound;
    return result;
  }
  if (opts.heuristic_first && g.order() >= 3 * k) {
    for (int attempt = 0; attempt < 2; ++attempt) {
      CyclePacking p = attempt == 0 ? triangle_first_heuristic(g, k) : greedy_cycle_packing(g, k);
      if (p.size() >= k && verify_cycle_packing(g, p)) {
        result.status = SearchStatus::kFound;
        result.packing = normalize_packing(std::move(p));
        return result;
      }
    }
  }
  return exact_disjoint_cycles(g, k, full_mask(g.order()), opts.node_budget);
}

MaxPacking maximum_cycle_packing(const Graph& g, const ExactOptions& opts) {
  if (g.order() > opts.exact_limit || g.order() > kMaxSearchOrder) {
    throw ExactLimitExceeded("graph has " + std::to_string(g.order()) +
                             " vertices, exact limit is " + std::to_string(opts.exact_limit));
  }
  MaxPacking out;
  out.certificate = greedy_cycle_packing(g, g.order() / 3);
  out.value = out.certificate.size();
  while (true) {
    SearchResult r = exact_disjoint_cycles(g, out.value + 1, full_mask(g.order()),
                                           opts.node_budget);
    if (r.status == SearchStatus::kExhausted) throw BudgetExhausted();
    if (r.status == SearchStatus::kNotExist) break;
    out.certificate = std::move(r.packing);
    out.value = out.certificate.size();
  }
  return out;
}

std::size_t max_cycle_packing(const Graph& g, const ExactOptions& opts) {
  return maximum_cycle_packing(g, opts).value;
}

std::vector<Triangle> list_triangles(const Graph& g, TriangleFilter filter, int k) {
  if (filter != TriangleFilter::kAll && k < 2) {
    throw std::invalid_argument("triangle filters need k >= 2");
  }
  const auto low_bound = static_cast<std::size_t>(2 * k - 2);
  const auto lowdeg_bound = static_cast<std::size_t>(2 * k);
  const std::vector<std::size_t> deg = g.degrees();
  std::vector<Triangle> out;
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b : g.neighbor_list(a)) {
      if (b <= a) continue;
      for (Vertex c : g.neighbor_list(b)) {
        if (c <= b || !g.has_edge(a, c)) continue;
        bool keep = true;
        if (filter == TriangleFilter::kGood) {
          keep = deg[a] <= low_bound || deg[b] <= low_bound || deg[c] <= low_bound;
        } else if (filter == TriangleFilter::kLowDegree) {
          keep = deg[a] <= lowdeg_bound && deg[b] <= lowdeg_bound && deg[c] <= lowdeg_bound;
        }
        if (keep) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

namespace {

class TriangleSearch {
 public:
  TriangleSearch(std::vector<Mask> triangles, std::uint64_t budget)
      : tris_(std::move(triangles)), budget_(budget) {}

  std::vector<std::size_t> run() {
    std::vector<std::size_t> all(tris_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    Mask cover = 0;
    for (Mask t : tris_) cover |= t;
    ceiling_ = static_cast<std::size_t>(popcount(cover)) / 3;
    std::vector<std::size_t> current;
    recurse(~Mask{0}, all, current);
    return best_;
  }

 private:
  void recurse(Mask avail, const std::vector<std::size_t>& candidates,
               std::vector<std::size_t>& current) {
    if (++nodes_ > budget_) throw BudgetExhausted();
    if (best_.size() == ceiling_ && ceiling_ > 0) return;
    std::vector<std::size_t> live;
    Mask cover = 0;
    for (std::size_t i : candidates) {
      if ((tris_[i] & ~avail) == 0) {
        live.push_back(i);
        cover |= tris_[i];
      }
    }
    if (live.empty()) {
      if (current.size() > best_.size()) best_ = current;
      return;
    }
    if (current.size() + static_cast<std::size_t>(popcount(cover)) / 3 <= best_.size()) return;
    const Vertex v = lowest(cover);
    for (std::size_t i : live) {
      if ((tris_[i] & bit(v)) == 0) continue;
      current.push_back(i);
      recurse(avail & ~tris_[i], live, current);
      current.pop_back();
      if (best_.size() == ceiling_) return;
    }
    recurse(avail & ~bit(v), live, current);
  }

  std::vector<Mask> tris_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::size_t ceiling_ = 0;
  std::vector<std::size_t> best_;
};

}  // namespace

TrianglePacking max_triangle_packing(const Graph& g, TriangleFilter filter, int k,
                                     const ExactOptions& opts) {
  if (g.order() > opts.exact_limit || g.order() > kMaxSearchOrder) {
    throw ExactLimitExceeded("graph has " + std::to_string(g.order()) +
                             " vertices, exact limit is " + std::to_string(opts.exact_limit));
  }
  const std::vector<Triangle> tris = list_triangles(g, filter, k);
  std::vector<Mask> masks;
  masks.reserve(tris.size());
  for (const Triangle& t : tris) masks.push_back(bit(t[0]) | bit(t[1]) | bit(t[2]));
  TriangleSearch search(std::move(masks), opts.node_budget);
  TrianglePacking out;
  for (std::size_t i : search.run()) out.triangles.push_back(tris[i]);
  std::sort(out.triangles.begin(), out.triangles.end());
  return out;
}

std::size_t triangle_packing_number(const Graph& g, const ExactOptions& opts) {
  return max_triangle_packing(g, TriangleFilter::kAll, 2, opts).size();
}

}  // namespace cyclepack
