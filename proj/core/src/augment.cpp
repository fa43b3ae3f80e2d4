#include "cyclepack/augment.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cyclepack {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::string describe(const Triangle& t) {
  std::ostringstream out;
  out << '{' << t[0] << ',' << t[1] << ',' << t[2] << '}';
  return out.str();
}

std::size_t sees(const Graph& g, Vertex v, const Triangle& t) {
  return static_cast<std::size_t>(g.has_edge(v, t[0])) + g.has_edge(v, t[1]) +
         g.has_edge(v, t[2]);
}

bool contains(const Triangle& t, Vertex v) { return t[0] == v || t[1] == v || t[2] == v; }

Triangle replace(const Triangle& t, Vertex out, Vertex in) {
  Triangle r = t;
  for (Vertex& v : r) {
    if (v == out) v = in;
  }
  return make_triangle(r[0], r[1], r[2]);
}

}  // namespace

bool AuxDigraph::has_arc(std::size_t from, std::size_t to) const {
  return witness(from, to).has_value();
}

std::optional<Vertex> AuxDigraph::witness(std::size_t from, std::size_t to) const {
  const auto it = std::lower_bound(arcs.begin(), arcs.end(), std::pair{from, to},
                                   [](const Arc& a, const std::pair<std::size_t, std::size_t>& k) {
                                     return std::pair{a.from, a.to} < k;
                                   });
  if (it == arcs.end() || it->from != from || it->to != to) return std::nullopt;
  return it->witness;
}

std::vector<std::size_t> AuxDigraph::successors(std::size_t from) const {
  std::vector<std::size_t> out;
  for (const Arc& a : arcs) {
    if (a.from == from) out.push_back(a.to);
  }
  return out;
}

AuxDigraph build_aux_digraph(const Graph& g, const TrianglePacking& packing) {
  if (!verify_triangle_packing(g, packing)) {
    throw std::invalid_argument("not a packing of disjoint triangles in this graph");
  }
  AuxDigraph h;
  h.node_count = packing.size();
  for (std::size_t c = 0; c < packing.size(); ++c) {
    for (std::size_t d = 0; d < packing.size(); ++d) {
      if (c == d) continue;
      for (Vertex v : packing.triangles[c]) {
        if (sees(g, v, packing.triangles[d]) == 3) {
          h.arcs.push_back({c, d, v});
          break;
        }
      }
    }
  }
  return h;
}

std::vector<std::size_t> reachable_sources(const AuxDigraph& h, std::size_t target) {
  if (target >= h.node_count) throw std::invalid_argument("target is not a node");
  std::vector<bool> seen(h.node_count, false);
  seen[target] = true;
  std::deque<std::size_t> queue{target};
  while (!queue.empty()) {
    const std::size_t d = queue.front();
    queue.pop_front();
    for (const auto& a : h.arcs) {
      if (a.to == d && !seen[a.from]) {
        seen[a.from] = true;
        queue.push_back(a.from);
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < h.node_count; ++c) {
    if (seen[c]) out.push_back(c);
  }
  return out;
}

VertexSet attachment_heavy_vertices(const Graph& g, const VertexSet& x, std::size_t t) {
  if (x.size() != 3 * t) {
    throw std::invalid_argument("|X| = " + std::to_string(x.size()) + " but 3t = " +
                                std::to_string(3 * t));
  }
  VertexSet out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!x.contains(v) && g.degree_into(v, x) >= 2 * t + 1) out.insert(v);
  }
  return out;
}

TrianglePacking rotate_augment(const Graph& g, const TrianglePacking& packing,
                               const RotationPlan& plan) {
  const auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
  if (!verify_triangle_packing(g, packing)) fail("input is not a valid triangle packing");
  const auto& tris = packing.triangles;
  const std::size_t j = plan.path.size();
  if (j == 0) fail("rotation path is empty");
  if (plan.pivots.size() != j - 1) fail("expected one pivot per arc of the path");

  std::vector<bool> on_path(tris.size(), false);
  for (std::size_t idx : plan.path) {
    if (idx >= tris.size()) fail("path refers to triangle " + std::to_string(idx) +
                                 " outside the packing");
    if (on_path[idx]) fail("path repeats triangle " + describe(tris[idx]));
    on_path[idx] = true;
  }

  const VertexSet covered = packing.vertex_union(g.order());
  const Triangle& first = tris[plan.path.front()];
  const Triangle& last = tris[plan.path.back()];

  for (std::size_t i = 0; i + 1 < j; ++i) {
    const Triangle& from = tris[plan.path[i]];
    const Triangle& to = tris[plan.path[i + 1]];
    if (!contains(from, plan.pivots[i])) {
      fail("triangle " + describe(from) + ": pivot " + std::to_string(plan.pivots[i]) +
           " is not a vertex of it");
    }
    if (sees(g, plan.pivots[i], to) != 3) {
      fail("triangle " + describe(to) + ": pivot " + std::to_string(plan.pivots[i]) +
           " is not adjacent to all of it");
    }
  }
  if (!contains(last, plan.z)) {
    fail("triangle " + describe(last) + ": z=" + std::to_string(plan.z) + " is not a vertex of it");
  }
  if (plan.w >= g.order() || covered.contains(plan.w) || plan.w == plan.x || plan.w == plan.y) {
    fail("triangle " + describe(first) + ": w=" + std::to_string(plan.w) +
         " must lie outside the packing and differ from x and y");
  }
  if (sees(g, plan.w, first) != 3) {
    fail("triangle " + describe(first) + ": w=" + std::to_string(plan.w) +
         " is not adjacent to all of it");
  }
  if (plan.x >= g.order() || plan.y >= g.order() || covered.contains(plan.x) ||
      covered.contains(plan.y) || plan.x == plan.y) {
    fail("new triangle: x and y must be distinct vertices outside the packing");
  }
  if (!g.has_edge(plan.x, plan.y) || !g.has_edge(plan.x, plan.z) || !g.has_edge(plan.y, plan.z)) {
    fail("new triangle " + describe(make_triangle(plan.x, plan.y, plan.z)) +
         " is not a triangle of the graph");
  }

  TrianglePacking out = packing;
  if (j == 1) {
    out.triangles[plan.path[0]] = replace(first, plan.z, plan.w);
  } else {
    out.triangles[plan.path[0]] = replace(first, plan.pivots[0], plan.w);
    for (std::size_t i = 1; i + 1 < j; ++i) {
      out.triangles[plan.path[i]] =
          replace(tris[plan.path[i]], plan.pivots[i], plan.pivots[i - 1]);
    }
    out.triangles[plan.path[j - 1]] = replace(last, plan.z, plan.pivots[j - 2]);
  }
  out.triangles.push_back(make_triangle(plan.x, plan.y, plan.z));

  for (std::size_t idx : plan.path) {
    const Triangle& t = out.triangles[idx];
    if (!g.has_edge(t[0], t[1]) || !g.has_edge(t[0], t[2]) || !g.has_edge(t[1], t[2])) {
      fail("rotated triple " + describe(t) + " is not a triangle");
    }
  }
  if (!verify_triangle_packing(g, out)) {
    throw std::logic_error("rotation produced an invalid packing");
  }
  return out;
}

bool all_good(const Graph& g, const TrianglePacking& packing, int k) {
  const auto low = static_cast<std::size_t>(2 * k - 2);
  for (const Triangle& t : packing.triangles) {
    if (g.degree(t[0]) > low && g.degree(t[1]) > low && g.degree(t[2]) > low) return false;
  }
  return true;
}

namespace {

// Shortest path from `from` to `to` in h; successors are scanned in
// increasing id order.
std::vector<std::size_t> shortest_path(const AuxDigraph& h, std::size_t from, std::size_t to) {
  std::vector<std::size_t> parent(h.node_count, kNone);
  parent[from] = from;
  std::deque<std::size_t> queue{from};
  while (!queue.empty() && parent[to] == kNone) {
    const std::size_t c = queue.front();
    queue.pop_front();
    for (std::size_t d : h.successors(c)) {
      if (parent[d] == kNone) {
        parent[d] = c;
        queue.push_back(d);
      }
    }
  }
  std::vector<std::size_t> path;
  if (parent[to] == kNone) return path;
  for (std::size_t c = to; c != from; c = parent[c]) path.push_back(c);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

// Distance to `target` along arcs, for every node that reaches it.
std::vector<std::size_t> distances_to(const AuxDigraph& h, std::size_t target) {
  std::vector<std::size_t> dist(h.node_count, kNone);
  dist[target] = 0;
  std::deque<std::size_t> queue{target};
  while (!queue.empty()) {
    const std::size_t d = queue.front();
    queue.pop_front();
    for (const auto& a : h.arcs) {
      if (a.to == d && dist[a.from] == kNone) {
        dist[a.from] = dist[d] + 1;
        queue.push_back(a.from);
      }
    }
  }
  return dist;
}

}  // namespace

std::optional<RotationPlan> find_rotation(const Graph& g, const TrianglePacking& packing, int k,
                                          std::size_t* rejected) {
  if (packing.size() == 0) return std::nullopt;
  const std::size_t n = g.order();
  const auto low = static_cast<std::size_t>(2 * k - 2);
  std::vector<std::size_t> owner(n, kNone);
  for (std::size_t c = 0; c < packing.size(); ++c) {
    for (Vertex v : packing.triangles[c]) owner[v] = c;
  }
  const AuxDigraph h = build_aux_digraph(g, packing);

  for (Vertex x = 0; x < n; ++x) {
    if (owner[x] != kNone || g.degree(x) > low || g.degree(x) < 2) continue;
    for (Vertex y : g.neighbor_list(x)) {
      if (owner[y] != kNone) continue;
      for (Vertex z : g.neighbor_list(y)) {
        if (owner[z] == kNone || !g.has_edge(x, z)) continue;
        const std::size_t target = owner[z];
        const std::vector<std::size_t> dist = distances_to(h, target);
        std::vector<std::size_t> sources = reachable_sources(h, target);
        std::stable_sort(sources.begin(), sources.end(), [&](std::size_t a, std::size_t b) {
          return dist[a] < dist[b];
        });
        for (std::size_t d : sources) {
          for (Vertex w = 0; w < n; ++w) {
            if (owner[w] != kNone || w == x || w == y) continue;
            if (sees(g, w, packing.triangles[d]) != 3) continue;
            RotationPlan plan;
            plan.path = shortest_path(h, d, target);
            for (std::size_t i = 0; i + 1 < plan.path.size(); ++i) {
              plan.pivots.push_back(*h.witness(plan.path[i], plan.path[i + 1]));
            }
            plan.w = w;
            plan.x = x;
            plan.y = y;
            plan.z = z;
            if (all_good(g, rotate_augment(g, packing, plan), k)) return plan;
            if (rejected != nullptr) ++*rejected;
          }
        }
      }
    }
  }
  return std::nullopt;
}

TrianglePacking grow_good_packing(const Graph& g, int k, const GrowOptions& opts,
                                  GrowStats* stats) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (opts.exact) return max_triangle_packing(g, TriangleFilter::kGood, k, opts.exact_options);

  GrowStats local;
  GrowStats& st = stats != nullptr ? *stats : local;
  const std::vector<Triangle> good = list_triangles(g, TriangleFilter::kGood, k);
  TrianglePacking packing;
  VertexSet used(g.order());

  const auto add_disjoint = [&] {
    bool added = false;
    for (const Triangle& t : good) {
      if (used.contains(t[0]) || used.contains(t[1]) || used.contains(t[2])) continue;
      packing.triangles.push_back(t);
      for (Vertex v : t) used.insert(v);
      ++st.greedy;
      added = true;
    }
    return added;
  };

  add_disjoint();
  while (true) {
    std::optional<RotationPlan> plan = find_rotation(g, packing, k, &st.rejected_rotations);
    if (!plan) break;
    packing = rotate_augment(g, packing, *plan);
    used = packing.vertex_union(g.order());
    ++st.rotations;
    add_disjoint();
  }
  return packing;
}

}  // namespace cyclepack
