#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fptvc {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Immutable undirected simple graph on vertices 0..n-1.
//
// Adjacency is stored in compressed rows with each neighbor list sorted
// ascending, so "smallest unselected neighbor" queries are a forward scan.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from an edge list. Duplicate and reversed pairs collapse.
  // Throws GraphError on a self-loop or an out-of-range id, naming the pair.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const { return offsets_.size() - 1; }
  std::size_t edge_count() const { return neighbors_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(Vertex u, Vertex v) const;

  // Edges as (min, max) pairs in ascending lexicographic order.
  std::vector<Edge> edges() const;

  // Re-checks symmetry, sortedness, absence of loops and duplicates, and
  // the edge-count identity. Returns an empty string when all hold.
  std::string check_invariants() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> neighbors_;
};

inline Graph graph_from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  return Graph::from_edges(vertex_count, edges);
}

}  // namespace fptvc
