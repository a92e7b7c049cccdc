#include "fptvc/generators.hpp"

#include <algorithm>
#include <unordered_set>

#include "fptvc/random.hpp"

namespace fptvc {
namespace {

std::uint64_t edge_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

// Uniform vertex in 0..n-1 other than `excluded`.
Vertex other_vertex(InstanceRng& rng, std::size_t n, Vertex excluded) {
  auto x = static_cast<Vertex>(rng.below(n - 1));
  return x >= excluded ? x + 1 : x;
}

}  // namespace

std::size_t max_planted_extra_edges(std::size_t n, std::size_t k) {
  // C-incident pairs: inside C plus between C and the rest, minus the matching.
  return k * (k - 1) / 2 + k * (n - k) - k;
}

PlantedInstance gen_planted(std::size_t n, std::size_t k, std::size_t extra_edges, std::uint64_t seed) {
  if (k == 0) throw GraphError("planted cover size must be at least 1");
  if (2 * k > n) {
    throw GraphError("planted cover size " + std::to_string(k) + " exceeds n/2 for n = " + std::to_string(n));
  }
  const std::size_t available = max_planted_extra_edges(n, k);
  if (extra_edges > available) {
    throw GraphError("requested " + std::to_string(extra_edges) + " extra edges but only " +
                     std::to_string(available) + " distinct cover-incident edges remain");
  }

  std::vector<Edge> edges;
  edges.reserve(k + extra_edges);
  std::unordered_set<std::uint64_t> present;
  present.reserve(2 * (k + extra_edges));
  for (Vertex i = 0; i < k; ++i) {
    edges.emplace_back(i, static_cast<Vertex>(k + i));
    present.insert(edge_key(i, static_cast<Vertex>(k + i)));
  }

  InstanceRng rng(seed);
  while (edges.size() < k + extra_edges) {
    auto c = static_cast<Vertex>(rng.below(k));
    Vertex other = other_vertex(rng, n, c);
    if (present.insert(edge_key(c, other)).second) edges.emplace_back(c, other);
  }

  PlantedInstance inst;
  inst.graph = Graph::from_edges(n, edges);
  inst.planted_k = k;
  inst.planted_cover.resize(k);
  for (Vertex i = 0; i < k; ++i) inst.planted_cover[i] = i;
  inst.seed = seed;
  inst.extra_edges = extra_edges;
  return inst;
}

Graph gen_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::size_t total = n < 2 ? 0 : n * (n - 1) / 2;
  if (m > total) {
    throw GraphError("G(n, m) with n = " + std::to_string(n) + " allows at most " + std::to_string(total) +
                     " edges, requested " + std::to_string(m));
  }
  // Dense requests sample the complement instead, so rejection stays cheap.
  const bool sample_complement = 2 * m > total;
  const std::size_t draws = sample_complement ? total - m : m;

  InstanceRng rng(seed);
  std::unordered_set<std::uint64_t> picked;
  picked.reserve(2 * draws);
  std::vector<Edge> chosen;
  chosen.reserve(draws);
  while (chosen.size() < draws) {
    auto u = static_cast<Vertex>(rng.below(n));
    Vertex v = other_vertex(rng, n, u);
    if (picked.insert(edge_key(u, v)).second) chosen.emplace_back(std::min(u, v), std::max(u, v));
  }
  if (!sample_complement) return Graph::from_edges(n, chosen);

  std::vector<Edge> kept;
  kept.reserve(m);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!picked.contains(edge_key(u, v))) kept.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, kept);
}

}  // namespace fptvc
