#include "cyclepack/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace cyclepack {

namespace {

std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

}  // namespace

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) {
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " outside universe of size " +
                                std::to_string(universe_));
  }
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v < universe_) words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

std::size_t VertexSet::size() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (auto w = words_[i]; w != 0; w &= w - 1) {
      out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
    }
  }
  return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  if (other.universe_ != universe_) throw std::invalid_argument("universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  if (other.universe_ != universe_) throw std::invalid_argument("universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  if (other.universe_ != universe_) throw std::invalid_argument("universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool VertexSet::intersects(const VertexSet& other) const {
  const std::size_t k = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < k; ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

// -------------------------------------------------------------------- Graph

Graph::Graph(std::size_t n) : n_(n), m_(0), words_(word_count(n)), bits_(n * words_, 0) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const Edge& e : edges) {
    if (!b.add_edge(e.u, e.v)) {
      throw std::invalid_argument("duplicate edge " + std::to_string(e.u) + " " +
                                  std::to_string(e.v));
    }
  }
  *this = std::move(b).build();
}

Graph::Graph(std::size_t n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

std::size_t Graph::degree(Vertex v) const {
  if (v >= n_) throw std::out_of_range("vertex id out of range");
  std::size_t d = 0;
  const auto* row = row_ptr(v);
  for (std::size_t i = 0; i < words_; ++i) d += static_cast<std::size_t>(std::popcount(row[i]));
  return d;
}

std::size_t Graph::min_degree() const {
  if (n_ == 0) return 0;
  std::size_t best = n_;
  for (Vertex v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(n_);
  for (Vertex v = 0; v < n_; ++v) out[v] = degree(v);
  return out;
}

VertexSet Graph::neighbors(Vertex v) const {
  if (v >= n_) throw std::out_of_range("vertex id out of range");
  VertexSet s(n_);
  const auto* row = row_ptr(v);
  for (Vertex u = 0; u < n_; ++u) {
    if ((row[u >> 6] >> (u & 63)) & 1U) s.insert(u);
  }
  return s;
}

std::vector<Vertex> Graph::neighbor_list(Vertex v) const {
  if (v >= n_) throw std::out_of_range("vertex id out of range");
  std::vector<Vertex> out;
  const auto* row = row_ptr(v);
  for (std::size_t i = 0; i < words_; ++i) {
    for (auto w = row[i]; w != 0; w &= w - 1) {
      out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
    }
  }
  return out;
}

std::uint64_t Graph::row64(Vertex v) const {
  if (n_ > 64) throw std::logic_error("row64 requires at most 64 vertices");
  if (v >= n_) throw std::out_of_range("vertex id out of range");
  return row_ptr(v)[0];
}

std::size_t Graph::degree_into(Vertex v, const VertexSet& set) const {
  if (v >= n_) throw std::out_of_range("vertex id out of range");
  const auto* row = row_ptr(v);
  const auto words = set.words();
  std::size_t d = 0;
  for (std::size_t i = 0; i < std::min(words_, words.size()); ++i) {
    d += static_cast<std::size_t>(std::popcount(row[i] & words[i]));
  }
  return d;
}

std::size_t Graph::edges_between(const VertexSet& a, const VertexSet& b) const {
  std::size_t total = 0;
  for (Vertex v : a.members()) total += degree_into(v, b);
  return total;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbor_list(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

// ------------------------------------------------------------- GraphBuilder

GraphBuilder::GraphBuilder(std::size_t n) : g_(n) {}

GraphBuilder::GraphBuilder(Graph g) : g_(std::move(g)) {}

void GraphBuilder::check_pair(Vertex u, Vertex v) const {
  if (u >= g_.n_ || v >= g_.n_) {
    throw std::invalid_argument("vertex id out of range: " + std::to_string(std::max(u, v)) +
                                " >= " + std::to_string(g_.n_));
  }
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
}

bool GraphBuilder::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  if (g_.has_edge(u, v)) return false;
  row_ptr(u)[v >> 6] |= std::uint64_t{1} << (v & 63);
  row_ptr(v)[u >> 6] |= std::uint64_t{1} << (u & 63);
  ++g_.m_;
  return true;
}

bool GraphBuilder::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  if (!g_.has_edge(u, v)) return false;
  row_ptr(u)[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  row_ptr(v)[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
  --g_.m_;
  return true;
}

// ----------------------------------------------------------------- Surgery

Contraction contract_edge(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v)) {
    throw std::invalid_argument("cannot contract non-edge " + std::to_string(u) + " " +
                                std::to_string(v));
  }
  const Vertex keep = std::min(u, v);
  const Vertex drop = std::max(u, v);
  const std::size_t n = g.order();

  Contraction out;
  out.old_to_new.resize(n);
  for (Vertex w = 0; w < n; ++w) {
    out.old_to_new[w] = w < drop ? w : w - 1;
  }
  out.old_to_new[drop] = keep;
  out.merged = keep;

  GraphBuilder b(n - 1);
  for (const Edge& e : g.edges()) {
    const Vertex a = out.old_to_new[e.u];
    const Vertex c = out.old_to_new[e.v];
    if (a != c) b.add_edge(a, c);
  }
  out.graph = std::move(b).build();
  return out;
}

Core two_core(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> deg = g.degrees();
  std::vector<bool> gone(n, false);
  Core out;

  // Sweep lowest id first; a deletion may expose lower ids again.
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < n; ++v) {
      if (gone[v] || deg[v] > 1) continue;
      gone[v] = true;
      out.removed.push_back(v);
      for (Vertex w : g.neighbor_list(v)) {
        if (!gone[w]) --deg[w];
      }
      changed = true;
      break;
    }
  }

  VertexSet removed(n, std::span<const Vertex>(out.removed));
  Surgery s = delete_vertices(g, removed);
  out.graph = std::move(s.graph);
  out.old_to_new = std::move(s.old_to_new);
  return out;
}

Surgery delete_vertices(const Graph& g, const VertexSet& removed) {
  const std::size_t n = g.order();
  Surgery out;
  out.old_to_new.assign(n, kRemoved);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed.contains(v)) out.old_to_new[v] = next++;
  }
  GraphBuilder b(next);
  for (const Edge& e : g.edges()) {
    const Vertex a = out.old_to_new[e.u];
    const Vertex c = out.old_to_new[e.v];
    if (a != kRemoved && c != kRemoved) b.add_edge(a, c);
  }
  out.graph = std::move(b).build();
  return out;
}

Graph delete_edge(const Graph& g, Vertex u, Vertex v) {
  GraphBuilder b(g);
  if (!b.remove_edge(u, v)) {
    throw std::invalid_argument("cannot delete non-edge " + std::to_string(u) + " " +
                                std::to_string(v));
  }
  return std::move(b).build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const auto shift = static_cast<Vertex>(g.order());
  GraphBuilder b(g.order() + h.order());
  for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
  for (const Edge& e : h.edges()) b.add_edge(e.u + shift, e.v + shift);
  return std::move(b).build();
}

Graph join(const Graph& g, const Graph& h) {
  const auto shift = static_cast<Vertex>(g.order());
  GraphBuilder b(disjoint_union(g, h));
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < h.order(); ++v) b.add_edge(u, v + shift);
  }
  return std::move(b).build();
}

Graph make_empty(std::size_t n) { return Graph(n); }

Graph make_complete(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return std::move(b).build();
}

Graph make_path(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

Graph make_cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return std::move(b).build();
}

Graph make_complete_bipartite(std::size_t a, std::size_t b) {
  return join(make_empty(a), make_empty(b));
}

}  // namespace cyclepack
