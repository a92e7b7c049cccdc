#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fptvc/solver.hpp"

namespace fptvc {

class BenchConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BenchConfig {
  std::vector<std::size_t> n_values{1000, 2000, 5000, 10000};
  std::vector<std::size_t> k_values{6, 8, 10, 12};
  double extra_edge_ratio = 0.5;  // extra_edges = round(ratio * n)
  std::vector<BranchStrategy> strategies{std::begin(kAllStrategies), std::end(kAllStrategies)};
  std::vector<std::uint64_t> seeds{1, 2, 3};
  std::size_t repetitions = 3;
  std::chrono::milliseconds time_limit{60'000};
  std::size_t threads = 1;  // instances solved concurrently

  // Throws BenchConfigError naming the first violated constraint.
  void validate() const;
};

// Reads `key = value` lines; `#` starts a comment. Lists are comma separated.
// Keys: n_values, k_values, extra_edge_ratio, strategies, seeds, repetitions,
// time_limit (seconds), threads. Unset keys keep their defaults.
BenchConfig parse_bench_config(std::istream& in);

struct BenchRecord {
  std::size_t n = 0;
  std::size_t k_input = 0;
  std::size_t tau = 0;  // planted cover size
  BranchStrategy strategy = BranchStrategy::PaperFive;
  std::uint64_t seed = 0;
  bool timed_out = false;
  // Empty when timed out or failed.
  std::optional<bool> decision;
  std::optional<std::uint64_t> nodes_expanded;
  std::optional<std::uint64_t> max_depth;
  std::optional<double> time_ms;  // median over repetitions
  bool certificate_verified = false;
  std::string error;  // non-empty when the instance could not be built or solved

  bool failed() const { return !error.empty(); }
};

// One record per (n, k, strategy, seed), returned in report order.
std::vector<BenchRecord> run_benchmark(const BenchConfig& cfg);

void sort_records(std::vector<BenchRecord>& records);

struct BranchingFit {
  BranchStrategy strategy;
  std::size_t n;
  double base;         // exp(slope)
  double slope;        // of ln(nodes_expanded) against k
  double intercept;
  double rms_residual; // in ln(nodes) units
  std::size_t points;
};

// Least-squares fit of ln(nodes_expanded) against k_input per (strategy, n).
// Timed-out and failed records are skipped. Throws std::invalid_argument if
// any group is left with fewer than three distinct k values.
std::vector<BranchingFit> estimate_branching_factor(const std::vector<BenchRecord>& records);

inline constexpr const char* kCsvHeader =
    "n,k_input,tau,strategy,decision,nodes_expanded,max_depth,time_ms,seed,timed_out";

std::string write_report_csv(std::vector<BenchRecord> records);
std::string write_report_table(std::vector<BenchRecord> records);

}  // namespace fptvc
