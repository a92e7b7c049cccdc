#pragma once

#include <array>
#include <chrono>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "fptvc/graph.hpp"
#include "fptvc/selected_set.hpp"

namespace fptvc {

enum class BranchStrategy {
  PaperFive,  // five-way branching on a path u-v-w
  ClassicP3,  // {v} or {u, w}
  EdgeBranch, // either endpoint of one uncovered edge
};

inline constexpr BranchStrategy kAllStrategies[] = {BranchStrategy::PaperFive, BranchStrategy::ClassicP3,
                                                    BranchStrategy::EdgeBranch};

// Short names used on the command line and in reports: paper5, p3, edge.
std::string_view strategy_name(BranchStrategy s);
std::optional<BranchStrategy> parse_strategy(std::string_view name);

struct SolveStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t max_depth = 0;  // root is depth 0
  std::uint64_t triplet_scans = 0;
  double elapsed_ms = 0.0;

  friend bool operator==(const SolveStats&, const SolveStats&) = default;
};

struct SolveResult {
  bool decision = false;
  std::optional<std::vector<Vertex>> certificate;  // sorted; present iff decision
  SolveStats stats;
  bool timed_out = false;  // decision is false and meaningless when set

  friend bool operator==(const SolveResult&, const SolveResult&) = default;
};

// Outcome of scanning the uncovered part of the graph.
struct Triplet {
  Vertex u, v, w;  // edges {u,v} and {v,w}; u < w
  friend bool operator==(const Triplet&, const Triplet&) = default;
};
struct IsolatedEdgesOnly {
  std::size_t count;
  friend bool operator==(const IsolatedEdgesOnly&, const IsolatedEdgesOnly&) = default;
};
struct NoUncoveredEdges {
  friend bool operator==(const NoUncoveredEdges&, const NoUncoveredEdges&) = default;
};
using FrontierFinding = std::variant<Triplet, IsolatedEdgesOnly, NoUncoveredEdges>;

bool has_uncovered_edge(const Graph& g, const SelectedSet& selected);

// Lowest-id unselected vertex with at least two unselected neighbors becomes
// the center v; u and w are its two smallest unselected neighbors.
FrontierFinding find_frontier(const Graph& g, const SelectedSet& selected);

// Smallest unselected vertex a with an unselected neighbor, paired with its
// smallest unselected neighbor b.
std::optional<Edge> first_uncovered_edge(const Graph& g, const SelectedSet& selected);

struct SolveOptions {
  std::optional<std::chrono::steady_clock::duration> time_limit;
  // Compares the full selected set against its frame-entry snapshot after
  // every branch is undone; throws std::logic_error on a mismatch.
  bool check_backtracking = false;
};

// One search session over a fixed graph. Owns the selected set and reuses it
// across calls; each call leaves it exactly as it found it.
class VcSolver {
 public:
  VcSolver(const Graph& g, BranchStrategy strategy, SolveOptions options = {});

  // Does g have a vertex cover of size at most k? Throws std::invalid_argument
  // for negative k.
  SolveResult decide(long long k);

  const SelectedSet& selected() const { return selected_; }
  BranchStrategy strategy() const { return strategy_; }

 private:
  enum class Outcome { Accept, Reject, Expand, Abort };
  Outcome enter_node(long long budget, std::uint64_t depth, std::array<Vertex, 3>& pivot);
  void accept_isolated_edges();

  const Graph& graph_;
  BranchStrategy strategy_;
  SolveOptions options_;
  SelectedSet selected_;
  SolveStats stats_;
  std::vector<Vertex> certificate_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

SolveResult decide_vc(const Graph& g, long long k, BranchStrategy strategy, SolveOptions options = {});

struct MinCoverResult {
  std::size_t size = 0;
  std::vector<Vertex> cover;
  SolveStats stats;  // summed over the decision probes (max_depth is the max)
};

// Probes k = L, L+1, ... from the greedy matching lower bound L until the
// first yes-answer.
MinCoverResult min_vertex_cover(const Graph& g, BranchStrategy strategy);

// Scans edges in (min, max) order, keeping each edge whose endpoints are both
// still unmatched.
std::vector<Edge> greedy_maximal_matching(const Graph& g);

}  // namespace fptvc
