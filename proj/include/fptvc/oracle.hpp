#pragma once

#include <cstddef>
#include <span>

#include "fptvc/graph.hpp"

namespace fptvc {

// Exhaustive-search ceiling. Cost is up to 2^n cover checks, though the
// search stops at the first cardinality that works.
inline constexpr std::size_t kOracleMaxVertices = 32;

// Minimum vertex cover size by enumerating subsets in increasing cardinality.
// Throws std::domain_error when g has more than kOracleMaxVertices vertices.
std::size_t brute_force_tau(const Graph& g);

// True iff every edge has an endpoint in `cover`. Throws GraphError on an
// id outside the graph. Repeated ids are allowed.
bool verify_cover(const Graph& g, std::span<const Vertex> cover);

}  // namespace fptvc
