#pragma once

#include <cstdint>
#include <vector>

#include "fptvc/graph.hpp"

namespace fptvc {

// A graph whose minimum vertex cover size is known by construction.
struct PlantedInstance {
  Graph graph;
  std::size_t planted_k = 0;
  std::vector<Vertex> planted_cover;  // ascending
  std::uint64_t seed = 0;
  std::size_t extra_edges = 0;
};

// Planted-matching model. The cover is C = {0..k-1}; edges (i, k+i) form a
// matching of k disjoint edges, so tau >= k. Each of the `extra_edges`
// further edges has one endpoint drawn uniformly from C and the other
// uniformly from the remaining n-1 vertices, redrawn on collision. All edges
// touch C, so tau <= k and therefore tau = k.
//
// Throws GraphError if k is 0, k > n/2, or extra_edges exceeds the number of
// distinct C-incident edges outside the matching.
PlantedInstance gen_planted(std::size_t n, std::size_t k, std::size_t extra_edges, std::uint64_t seed);

// Largest extra_edges value gen_planted accepts for (n, k).
std::size_t max_planted_extra_edges(std::size_t n, std::size_t k);

// Uniform simple graph with exactly m edges (G(n, m)). Throws GraphError if
// m > n(n-1)/2.
Graph gen_gnm(std::size_t n, std::size_t m, std::uint64_t seed);

}  // namespace fptvc
