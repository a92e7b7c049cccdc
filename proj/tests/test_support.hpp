#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fptvc/graph.hpp"

namespace fptvc::testing {

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph::from_edges(n, e);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

// Center is vertex `leaves`, leaves are 0..leaves-1.
inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < leaves; ++i) e.emplace_back(static_cast<Vertex>(leaves), i);
  return Graph::from_edges(leaves + 1, e);
}

inline Graph petersen_graph() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer cycle
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph::from_edges(10, e);
}

// Independent of the library oracle: tries every subset and keeps the
// smallest that covers all edges.
inline std::size_t exhaustive_tau(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::size_t best = n;
  const auto edges = g.edges();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    for (const auto& [u, v] : edges) {
      if (!((s >> u) & 1) && !((s >> v) & 1)) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::min<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(s)));
  }
  return best;
}

inline std::filesystem::path temp_dir() {
  std::filesystem::path dir = FPTVC_TEST_TMPDIR;
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace fptvc::testing
