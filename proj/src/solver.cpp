#include "fptvc/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace fptvc {
namespace {

// A branch adds pivot[idx[0..size)] to the selected set and spends `size`
// of the budget.
struct Branch {
  std::uint8_t size;
  std::array<std::uint8_t, 3> idx;
};

// Pivot layout: (u, v, w) for the path strategies, (a, b) for EdgeBranch.
constexpr Branch kPaperFive[] = {
    {2, {0, 1, 0}},  // u, v
    {2, {0, 2, 0}},  // u, w
    {2, {1, 2, 0}},  // v, w
    {1, {1, 0, 0}},  // v
    {3, {0, 1, 2}},  // u, v, w
};
constexpr Branch kClassicP3[] = {
    {1, {1, 0, 0}},  // v
    {2, {0, 2, 0}},  // u, w
};
constexpr Branch kEdgeBranch[] = {
    {1, {0, 0, 0}},  // a
    {1, {1, 0, 0}},  // b
};

std::span<const Branch> branches_for(BranchStrategy s) {
  switch (s) {
    case BranchStrategy::PaperFive: return kPaperFive;
    case BranchStrategy::ClassicP3: return kClassicP3;
    case BranchStrategy::EdgeBranch: return kEdgeBranch;
  }
  return {};
}

struct Frame {
  std::array<Vertex, 3> pivot;
  long long budget;
  std::uint64_t depth;
  std::size_t entry_size;  // selected-set size when the node was entered
  std::uint8_t next_branch = 0;
};

constexpr std::uint64_t kClockCheckInterval = 1024;

}  // namespace

std::string_view strategy_name(BranchStrategy s) {
  switch (s) {
    case BranchStrategy::PaperFive: return "paper5";
    case BranchStrategy::ClassicP3: return "p3";
    case BranchStrategy::EdgeBranch: return "edge";
  }
  return "?";
}

std::optional<BranchStrategy> parse_strategy(std::string_view name) {
  for (auto s : kAllStrategies) {
    if (strategy_name(s) == name) return s;
  }
  return std::nullopt;
}

bool has_uncovered_edge(const Graph& g, const SelectedSet& selected) {
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (selected.contains(u)) continue;
    for (Vertex v : g.neighbors(u)) {
      if (!selected.contains(v)) return true;
    }
  }
  return false;
}

FrontierFinding find_frontier(const Graph& g, const SelectedSet& selected) {
  std::size_t uncovered = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (selected.contains(v)) continue;
    Vertex first = 0;
    std::size_t open = 0;
    for (Vertex x : g.neighbors(v)) {
      if (selected.contains(x)) continue;
      if (open == 1) return Triplet{first, v, x};
      first = x;
      open = 1;
    }
    // v has at most one open neighbor; count each uncovered edge once.
    if (open == 1 && first > v) ++uncovered;
  }
  if (uncovered > 0) return IsolatedEdgesOnly{uncovered};
  return NoUncoveredEdges{};
}

std::optional<Edge> first_uncovered_edge(const Graph& g, const SelectedSet& selected) {
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    if (selected.contains(a)) continue;
    for (Vertex b : g.neighbors(a)) {
      if (!selected.contains(b)) return Edge{a, b};
    }
  }
  return std::nullopt;
}

VcSolver::VcSolver(const Graph& g, BranchStrategy strategy, SolveOptions options)
    : graph_(g), strategy_(strategy), options_(options), selected_(g.vertex_count()) {}

void VcSolver::accept_isolated_edges() {
  certificate_.assign(selected_.trail().begin(), selected_.trail().end());
  // Only isolated edges remain: the smaller endpoint of each is the vertex
  // whose single open neighbor has a larger id.
  for (Vertex u = 0; u < graph_.vertex_count(); ++u) {
    if (selected_.contains(u)) continue;
    for (Vertex v : graph_.neighbors(u)) {
      if (v > u && !selected_.contains(v)) {
        certificate_.push_back(u);
        break;
      }
    }
  }
}

VcSolver::Outcome VcSolver::enter_node(long long budget, std::uint64_t depth, std::array<Vertex, 3>& pivot) {
  ++stats_.nodes_expanded;
  stats_.max_depth = std::max(stats_.max_depth, depth);
  if (deadline_ && stats_.nodes_expanded % kClockCheckInterval == 0 &&
      std::chrono::steady_clock::now() >= *deadline_) {
    return Outcome::Abort;
  }

  if (budget < 0) return Outcome::Reject;

  ++stats_.triplet_scans;
  if (strategy_ == BranchStrategy::EdgeBranch) {
    auto edge = first_uncovered_edge(graph_, selected_);
    if (!edge) {
      certificate_.assign(selected_.trail().begin(), selected_.trail().end());
      return Outcome::Accept;
    }
    pivot = {edge->first, edge->second, 0};
    return Outcome::Expand;
  }

  FrontierFinding finding = find_frontier(graph_, selected_);
  if (auto* t = std::get_if<Triplet>(&finding)) {
    pivot = {t->u, t->v, t->w};
    return Outcome::Expand;
  }
  if (auto* iso = std::get_if<IsolatedEdgesOnly>(&finding)) {
    if (static_cast<long long>(iso->count) > budget) return Outcome::Reject;
    accept_isolated_edges();
    return Outcome::Accept;
  }
  certificate_.assign(selected_.trail().begin(), selected_.trail().end());
  return Outcome::Accept;
}

SolveResult VcSolver::decide(long long k) {
  if (k < 0) throw std::invalid_argument("budget k must be nonnegative, got " + std::to_string(k));

  const auto start = std::chrono::steady_clock::now();
  stats_ = {};
  certificate_.clear();
  deadline_.reset();
  if (options_.time_limit) deadline_ = start + *options_.time_limit;

  const std::span<const Branch> branches = branches_for(strategy_);
  const std::size_t entry_size = selected_.size();
  std::vector<Vertex> entry_snapshot;
  if (options_.check_backtracking) entry_snapshot.assign(selected_.trail().begin(), selected_.trail().end());

  // Explicit stack: depth may reach k + 1, far beyond a safe call depth.
  std::vector<Frame> stack;
  std::vector<std::vector<Vertex>> snapshots;  // parallel to stack when checking
  std::array<Vertex, 3> pivot{};
  bool accepted = false;
  bool aborted = false;

  switch (enter_node(k, 0, pivot)) {
    case Outcome::Accept: accepted = true; break;
    case Outcome::Reject: break;
    case Outcome::Abort: aborted = true; break;
    case Outcome::Expand:
      stack.push_back(Frame{pivot, k, 0, selected_.size()});
      if (options_.check_backtracking) snapshots.emplace_back(selected_.trail().begin(), selected_.trail().end());
      break;
  }

  while (!stack.empty()) {
    Frame& frame = stack.back();
    // Undo whatever the previous branch of this frame added.
    selected_.pop_to(frame.entry_size);
    if (options_.check_backtracking &&
        !std::ranges::equal(selected_.trail(), snapshots.back())) {
      throw std::logic_error("selected set differs from its snapshot after backtracking");
    }
    if (accepted || aborted || frame.next_branch == branches.size()) {
      stack.pop_back();
      if (options_.check_backtracking) snapshots.pop_back();
      continue;
    }

    const Branch& branch = branches[frame.next_branch++];
    for (std::uint8_t i = 0; i < branch.size; ++i) selected_.push(frame.pivot[branch.idx[i]]);
    const long long child_budget = frame.budget - branch.size;
    const std::uint64_t child_depth = frame.depth + 1;

    switch (enter_node(child_budget, child_depth, pivot)) {
      case Outcome::Accept: accepted = true; break;
      case Outcome::Reject: break;
      case Outcome::Abort: aborted = true; break;
      case Outcome::Expand:
        stack.push_back(Frame{pivot, child_budget, child_depth, selected_.size()});
        if (options_.check_backtracking) {
          snapshots.emplace_back(selected_.trail().begin(), selected_.trail().end());
        }
        break;
    }
  }
  selected_.pop_to(entry_size);
  if (options_.check_backtracking && !std::ranges::equal(selected_.trail(), entry_snapshot)) {
    throw std::logic_error("selected set not restored after decide");
  }

  SolveResult result;
  result.timed_out = aborted;
  result.decision = accepted && !aborted;
  if (result.decision) {
    std::sort(certificate_.begin(), certificate_.end());
    result.certificate = certificate_;
  }
  result.stats = stats_;
  result.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

SolveResult decide_vc(const Graph& g, long long k, BranchStrategy strategy, SolveOptions options) {
  VcSolver solver(g, strategy, options);
  return solver.decide(k);
}

std::vector<Edge> greedy_maximal_matching(const Graph& g) {
  std::vector<char> matched(g.vertex_count(), 0);
  std::vector<Edge> matching;
  for (const auto& [u, v] : g.edges()) {
    if (!matched[u] && !matched[v]) {
      matched[u] = matched[v] = 1;
      matching.emplace_back(u, v);
    }
  }
  return matching;
}

MinCoverResult min_vertex_cover(const Graph& g, BranchStrategy strategy) {
  VcSolver solver(g, strategy);
  MinCoverResult out;
  for (auto k = static_cast<long long>(greedy_maximal_matching(g).size());; ++k) {
    SolveResult r = solver.decide(k);
    out.stats.nodes_expanded += r.stats.nodes_expanded;
    out.stats.triplet_scans += r.stats.triplet_scans;
    out.stats.max_depth = std::max(out.stats.max_depth, r.stats.max_depth);
    out.stats.elapsed_ms += r.stats.elapsed_ms;
    if (r.decision) {
      out.cover = std::move(*r.certificate);
      out.size = out.cover.size();
      return out;
    }
  }
}

}  // namespace fptvc
