#include "fptvc/oracle.hpp"

#include <stdexcept>
#include <vector>

namespace fptvc {
namespace {

// Steps to the next larger integer with the same popcount.
std::uint64_t next_same_popcount(std::uint64_t x) {
  std::uint64_t low = x & (~x + 1);
  std::uint64_t ripple = x + low;
  return ripple | (((x ^ ripple) >> 2) / low);
}

}  // namespace

std::size_t brute_force_tau(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kOracleMaxVertices) {
    throw std::domain_error("brute_force_tau supports at most " + std::to_string(kOracleMaxVertices) +
                            " vertices, got " + std::to_string(n));
  }
  if (g.edge_count() == 0) return 0;

  std::vector<std::uint64_t> adjacency(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adjacency[u] |= std::uint64_t{1} << v;
    adjacency[v] |= std::uint64_t{1} << u;
  }
  // S covers every edge iff each vertex outside S has all its neighbors in S.
  auto covers = [&](std::uint64_t subset) {
    for (std::size_t v = 0; v < n; ++v) {
      if (!((subset >> v) & 1) && (adjacency[v] & ~subset)) return false;
    }
    return true;
  };

  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::size_t size = 1; size <= n; ++size) {
    for (std::uint64_t subset = (std::uint64_t{1} << size) - 1; subset < limit; subset = next_same_popcount(subset)) {
      if (covers(subset)) return size;
    }
  }
  return n;  // unreachable: the full vertex set covers
}

bool verify_cover(const Graph& g, std::span<const Vertex> cover) {
  std::vector<char> in_cover(g.vertex_count(), 0);
  for (Vertex v : cover) {
    if (v >= g.vertex_count()) {
      throw GraphError("cover lists vertex " + std::to_string(v) + " but the graph has " +
                       std::to_string(g.vertex_count()) + " vertices");
    }
    in_cover[v] = 1;
  }
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (in_cover[u]) continue;
    for (Vertex v : g.neighbors(u)) {
      if (!in_cover[v]) return false;
    }
  }
  return true;
}

}  // namespace fptvc
