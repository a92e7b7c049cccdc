#include "fptvc/graph.hpp"

#include <algorithm>
#include <sstream>

namespace fptvc {

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      std::ostringstream msg;
      msg << "edge (" << u << ", " << v << ") has a vertex id outside 0.."
          << (vertex_count == 0 ? std::string("(empty)") : std::to_string(vertex_count - 1));
      throw GraphError(msg.str());
    }
    if (u == v) {
      throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") is a self-loop");
    }
    canon.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

  Graph g;
  g.offsets_.assign(vertex_count + 1, 0);
  for (const auto& [u, v] : canon) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t i = 0; i < vertex_count; ++i) g.offsets_[i + 1] += g.offsets_[i];

  g.neighbors_.resize(canon.size() * 2);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // canon is sorted by (min, max): appending max to row[min] yields sorted rows
  // for the upper half, and appending min to row[max] likewise for the lower half.
  // Both halves interleave, so sort each row afterwards.
  for (const auto& [u, v] : canon) {
    g.neighbors_[fill[u]++] = v;
    g.neighbors_[fill[v]++] = u;
  }
  for (std::size_t i = 0; i < vertex_count; ++i) {
    std::sort(g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
              g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]));
  }
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= vertex_count() || v >= vertex_count()) return false;
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string Graph::check_invariants() const {
  std::size_t degree_sum = 0;
  for (Vertex u = 0; u < vertex_count(); ++u) {
    auto row = neighbors(u);
    degree_sum += row.size();
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] >= vertex_count()) return "neighbor id out of range at vertex " + std::to_string(u);
      if (row[i] == u) return "self-loop at vertex " + std::to_string(u);
      if (i > 0 && row[i - 1] >= row[i]) return "unsorted or duplicate neighbor at vertex " + std::to_string(u);
      if (!has_edge(row[i], u)) {
        return "asymmetric edge " + std::to_string(u) + "->" + std::to_string(row[i]);
      }
    }
  }
  if (degree_sum != 2 * edge_count()) return "edge count does not match degree sum";
  return {};
}

}  // namespace fptvc
