#include "cyclepack/enumerate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclepack {

std::string_view mode_name(EnumerationMode m) {
  switch (m) {
    case EnumerationMode::kExhaustive:
      return "exhaustive";
    case EnumerationMode::kRandom:
      return "random";
    case EnumerationMode::kDegreeTargeted:
      return "degree_targeted";
  }
  return "?";
}

EnumerationMode parse_mode(std::string_view name) {
  for (auto m : {EnumerationMode::kExhaustive, EnumerationMode::kRandom,
                 EnumerationMode::kDegreeTargeted}) {
    if (mode_name(m) == name) return m;
  }
  throw std::invalid_argument("unknown enumeration mode '" + std::string(name) + "'");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

namespace {

// mt19937_64 with hand-rolled draws; the std distributions differ between
// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t pairs(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

std::uint64_t labeled_count(std::size_t n) { return std::uint64_t{1} << pairs(n); }

std::uint64_t index_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index));
}

}  // namespace

void validate(const EnumerationSpec& spec) {
  if (spec.n_min > spec.n_max) {
    throw std::invalid_argument("n_min (" + std::to_string(spec.n_min) + ") exceeds n_max (" +
                                std::to_string(spec.n_max) + ")");
  }
  switch (spec.mode) {
    case EnumerationMode::kExhaustive:
      if (spec.n_max > kMaxExhaustiveOrder) {
        throw std::invalid_argument("n=" + std::to_string(spec.n_max) +
                                    " is too large for exhaustive enumeration (max " +
                                    std::to_string(kMaxExhaustiveOrder) + "); use random mode");
      }
      break;
    case EnumerationMode::kRandom:
      if (!(spec.edge_probability >= 0.0 && spec.edge_probability <= 1.0)) {
        throw std::invalid_argument("edge probability must lie in [0, 1]");
      }
      break;
    case EnumerationMode::kDegreeTargeted:
      if (!spec.target) throw std::invalid_argument("degree-targeted mode needs a target");
      if (spec.target->k < 2) throw std::invalid_argument("sampler target needs k >= 2");
      break;
  }
}

std::uint64_t enumeration_size(const EnumerationSpec& spec) {
  validate(spec);
  if (spec.mode != EnumerationMode::kExhaustive) return spec.count;
  std::uint64_t total = 0;
  for (std::size_t n = spec.n_min; n <= spec.n_max; ++n) total += labeled_count(n);
  return total;
}

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  if (pairs(n) > 64) throw std::invalid_argument("edge mask supports at most 11 vertices");
  GraphBuilder b(n);
  std::size_t j = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++j) {
      if ((mask >> j) & 1U) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

Graph sample_gnp(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.unit() < p) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

Graph sample_degree_targeted(std::size_t n, const SamplerTarget& target, std::uint64_t seed) {
  Rng rng(seed);
  const auto two_k = static_cast<std::size_t>(2 * target.k);
  const double avg = 1.0 + rng.unit() * static_cast<double>(two_k);
  const double p = n > 1 ? std::min(1.0, avg / static_cast<double>(n - 1)) : 0.0;
  GraphBuilder b(sample_gnp(n, p, rng.next()));
  if (n < 2) return std::move(b).build();

  std::vector<std::size_t> deg(n, 0);
  for (Vertex v = 0; v < n; ++v) deg[v] = b.peek().degree(v);

  const auto deficit = [&] {
    long long gap = 0;
    long long shortfall = 0;
    for (std::size_t d : deg) {
      if (d >= two_k) ++gap;
      if (d + 2 <= two_k) --gap;
      if (d < target.min_degree) shortfall += static_cast<long long>(target.min_degree - d);
    }
    return std::max(0LL, target.min_gap - gap) + shortfall;
  };
  const auto toggle = [&](Vertex u, Vertex v) {
    if (b.has_edge(u, v)) {
      b.remove_edge(u, v);
      --deg[u];
      --deg[v];
    } else {
      b.add_edge(u, v);
      ++deg[u];
      ++deg[v];
    }
  };

  const std::size_t wanted = std::max(two_k, target.min_degree);
  const std::uint64_t budget = 50ULL * n * n;
  long long current = deficit();
  std::vector<Vertex> pool;
  for (std::uint64_t move = 0; current > 0 && move < budget; ++move) {
    if (rng.below(4) != 0) {
      pool.clear();
      for (Vertex v = 0; v < n; ++v) {
        if (deg[v] < wanted && deg[v] + 1 < n) pool.push_back(v);
      }
      if (!pool.empty()) {
        const Vertex v = pool[rng.below(pool.size())];
        std::vector<Vertex> free;
        for (Vertex u = 0; u < n; ++u) {
          if (u != v && !b.has_edge(u, v)) free.push_back(u);
        }
        toggle(v, free[rng.below(free.size())]);
        current = deficit();
        continue;
      }
    }
    const auto u = static_cast<Vertex>(rng.below(n));
    auto v = static_cast<Vertex>(rng.below(n - 1));
    if (v >= u) ++v;
    toggle(u, v);
    const long long next = deficit();
    if (next > current) {
      toggle(u, v);
    } else {
      current = next;
    }
  }
  return std::move(b).build();
}

Graph graph_at(const EnumerationSpec& spec, std::uint64_t index) {
  if (spec.mode == EnumerationMode::kExhaustive) {
    for (std::size_t n = spec.n_min; n <= spec.n_max; ++n) {
      const std::uint64_t count = labeled_count(n);
      if (index < count) return graph_from_mask(n, index);
      index -= count;
    }
    throw std::out_of_range("enumeration index out of range");
  }
  if (index >= spec.count) throw std::out_of_range("enumeration index out of range");
  Rng rng(index_seed(spec.seed, index));
  const std::size_t n = spec.n_min + rng.below(spec.n_max - spec.n_min + 1);
  if (spec.mode == EnumerationMode::kRandom) return sample_gnp(n, spec.edge_probability, rng.next());
  return sample_degree_targeted(n, *spec.target, rng.next());
}

}  // namespace cyclepack
