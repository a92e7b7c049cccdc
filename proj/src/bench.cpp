#include "fptvc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "fptvc/generators.hpp"
#include "fptvc/oracle.hpp"

namespace fptvc {
namespace {

std::string trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
  std::istringstream in(text);
  T value{};
  if (!(in >> value) || !(in >> std::ws).eof()) {
    throw BenchConfigError("bad value '" + text + "' for " + key);
  }
  return value;
}

template <typename T>
std::vector<T> parse_number_list(const std::string& key, const std::string& value) {
  std::vector<T> out;
  for (const auto& item : split_list(value)) out.push_back(parse_number<T>(key, item));
  return out;
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : (values[mid - 1] + values[mid]) / 2.0;
}

std::string format_ms(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

// Solves one planted instance under every configured strategy.
void run_instance(const BenchConfig& cfg, std::size_t n, std::size_t k, std::uint64_t seed,
                  std::span<BenchRecord> out) {
  const auto extra = static_cast<std::size_t>(std::llround(cfg.extra_edge_ratio * static_cast<double>(n)));
  for (std::size_t i = 0; i < cfg.strategies.size(); ++i) {
    auto& r = out[i];
    r.n = n;
    r.k_input = k;
    r.strategy = cfg.strategies[i];
    r.seed = seed;
  }

  PlantedInstance inst;
  try {
    inst = gen_planted(n, k, extra, seed);
  } catch (const std::exception& e) {
    for (auto& r : out) r.error = e.what();
    return;
  }

  SolveOptions options;
  options.time_limit = cfg.time_limit;
  for (auto& r : out) {
    r.tau = inst.planted_k;
    VcSolver solver(inst.graph, r.strategy, options);
    std::vector<double> times;
    SolveResult first;
    for (std::size_t rep = 0; rep < cfg.repetitions; ++rep) {
      SolveResult res = solver.decide(static_cast<long long>(k));
      if (res.timed_out) {
        r.timed_out = true;
        break;
      }
      times.push_back(res.stats.elapsed_ms);
      if (rep == 0) first = std::move(res);
    }
    if (r.timed_out) continue;
    r.decision = first.decision;
    r.nodes_expanded = first.stats.nodes_expanded;
    r.max_depth = first.stats.max_depth;
    r.time_ms = median(times);
    r.certificate_verified =
        first.decision && first.certificate->size() <= k && verify_cover(inst.graph, *first.certificate);
  }
}

}  // namespace

void BenchConfig::validate() const {
  if (n_values.empty() || k_values.empty()) throw BenchConfigError("n_values and k_values must be non-empty");
  if (strategies.empty()) throw BenchConfigError("at least one strategy is required");
  if (seeds.empty()) throw BenchConfigError("at least one seed is required");
  if (repetitions < 1) throw BenchConfigError("repetitions must be at least 1");
  if (threads < 1) throw BenchConfigError("threads must be at least 1");
  if (!(extra_edge_ratio >= 0.0)) throw BenchConfigError("extra_edge_ratio must be nonnegative");
  if (time_limit.count() <= 0) throw BenchConfigError("time_limit must be positive");
  for (auto n : n_values) {
    for (auto k : k_values) {
      if (k < 1 || 2 * k > n) {
        throw BenchConfigError("k = " + std::to_string(k) + " violates 1 <= k <= n/2 for n = " + std::to_string(n));
      }
    }
  }
}

BenchConfig parse_bench_config(std::istream& in) {
  BenchConfig cfg;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw BenchConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "n_values") {
      cfg.n_values = parse_number_list<std::size_t>(key, value);
    } else if (key == "k_values") {
      cfg.k_values = parse_number_list<std::size_t>(key, value);
    } else if (key == "extra_edge_ratio") {
      cfg.extra_edge_ratio = parse_number<double>(key, value);
    } else if (key == "strategies") {
      cfg.strategies.clear();
      for (const auto& name : split_list(value)) {
        auto s = parse_strategy(name);
        if (!s) throw BenchConfigError("unknown strategy '" + name + "'");
        cfg.strategies.push_back(*s);
      }
    } else if (key == "seeds") {
      cfg.seeds = parse_number_list<std::uint64_t>(key, value);
    } else if (key == "repetitions") {
      cfg.repetitions = parse_number<std::size_t>(key, value);
    } else if (key == "time_limit") {
      cfg.time_limit = std::chrono::milliseconds(std::llround(parse_number<double>(key, value) * 1000.0));
    } else if (key == "threads") {
      cfg.threads = parse_number<std::size_t>(key, value);
    } else {
      throw BenchConfigError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  return cfg;
}

std::vector<BenchRecord> run_benchmark(const BenchConfig& cfg) {
  cfg.validate();

  struct Job {
    std::size_t n, k;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (auto n : cfg.n_values) {
    for (auto k : cfg.k_values) {
      for (auto seed : cfg.seeds) jobs.push_back({n, k, seed});
    }
  }

  const std::size_t per_job = cfg.strategies.size();
  std::vector<BenchRecord> records(jobs.size() * per_job);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      run_instance(cfg, jobs[j].n, jobs[j].k, jobs[j].seed,
                   std::span<BenchRecord>(records).subspan(j * per_job, per_job));
    }
  };

  const std::size_t thread_count = std::min(cfg.threads, jobs.size());
  if (thread_count <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < thread_count; ++t) pool.emplace_back(worker);
  }
  sort_records(records);
  return records;
}

void sort_records(std::vector<BenchRecord>& records) {
  std::stable_sort(records.begin(), records.end(), [](const BenchRecord& a, const BenchRecord& b) {
    return std::tuple(a.n, a.k_input, strategy_name(a.strategy), a.seed) <
           std::tuple(b.n, b.k_input, strategy_name(b.strategy), b.seed);
  });
}

std::vector<BranchingFit> estimate_branching_factor(const std::vector<BenchRecord>& records) {
  std::map<std::pair<std::string_view, std::size_t>, std::vector<const BenchRecord*>> groups;
  for (const auto& r : records) {
    if (r.failed() || r.timed_out || !r.nodes_expanded || *r.nodes_expanded == 0) continue;
    groups[{strategy_name(r.strategy), r.n}].push_back(&r);
  }

  std::vector<BranchingFit> fits;
  for (const auto& [key, group] : groups) {
    std::set<std::size_t> distinct_k;
    for (const auto* r : group) distinct_k.insert(r->k_input);
    if (distinct_k.size() < 3) {
      throw std::invalid_argument("branching-factor fit for " + std::string(key.first) + " at n = " +
                                  std::to_string(key.second) + " needs at least 3 distinct k values, got " +
                                  std::to_string(distinct_k.size()));
    }
    const double count = static_cast<double>(group.size());
    double sx = 0, sy = 0;
    for (const auto* r : group) {
      sx += static_cast<double>(r->k_input);
      sy += std::log(static_cast<double>(*r->nodes_expanded));
    }
    const double mx = sx / count, my = sy / count;
    double sxx = 0, sxy = 0;
    for (const auto* r : group) {
      const double dx = static_cast<double>(r->k_input) - mx;
      sxx += dx * dx;
      sxy += dx * (std::log(static_cast<double>(*r->nodes_expanded)) - my);
    }
    BranchingFit fit{group.front()->strategy, key.second, 0, sxy / sxx, 0, 0, group.size()};
    fit.intercept = my - fit.slope * mx;
    fit.base = std::exp(fit.slope);
    double sq = 0;
    for (const auto* r : group) {
      const double e = std::log(static_cast<double>(*r->nodes_expanded)) -
                       (fit.intercept + fit.slope * static_cast<double>(r->k_input));
      sq += e * e;
    }
    fit.rms_residual = std::sqrt(sq / count);
    fits.push_back(fit);
  }
  return fits;
}

std::string write_report_csv(std::vector<BenchRecord> records) {
  sort_records(records);
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& r : records) {
    out += std::to_string(r.n) + ',' + std::to_string(r.k_input) + ',' + std::to_string(r.tau) + ',';
    out += strategy_name(r.strategy);
    out += ',';
    if (r.failed()) {
      out += "error";
    } else if (r.decision) {
      out += *r.decision ? "true" : "false";
    }
    out += ',';
    if (r.nodes_expanded) out += std::to_string(*r.nodes_expanded);
    out += ',';
    if (r.max_depth) out += std::to_string(*r.max_depth);
    out += ',';
    if (r.time_ms) out += format_ms(*r.time_ms);
    out += ',' + std::to_string(r.seed) + ',' + (r.timed_out ? "true" : "false") + '\n';
  }
  return out;
}

std::string write_report_table(std::vector<BenchRecord> records) {
  sort_records(records);
  // Strategy columns in the order they first appear in the canonical enum.
  std::vector<BranchStrategy> columns;
  for (auto s : kAllStrategies) {
    if (std::any_of(records.begin(), records.end(), [&](const auto& r) { return r.strategy == s; })) {
      columns.push_back(s);
    }
  }

  struct Cell {
    std::vector<double> times;
    std::vector<double> nodes;
    bool timed_out = false;
    bool failed = false;
  };
  std::map<std::pair<std::size_t, std::size_t>, std::map<BranchStrategy, Cell>> rows;
  for (const auto& r : records) {
    auto& cell = rows[{r.n, r.k_input}][r.strategy];
    if (r.failed()) cell.failed = true;
    if (r.timed_out) cell.timed_out = true;
    if (r.time_ms) cell.times.push_back(*r.time_ms);
    if (r.nodes_expanded) cell.nodes.push_back(static_cast<double>(*r.nodes_expanded));
  }

  std::ostringstream out;
  char buf[128];
  std::snprintf(buf, sizeof buf, "%8s %6s", "n", "k");
  out << buf;
  for (auto s : columns) {
    std::string name(strategy_name(s));
    std::snprintf(buf, sizeof buf, " %14s %12s", (name + " ms").c_str(), (name + " nodes").c_str());
    out << buf;
  }
  out << '\n';
  for (const auto& [nk, cells] : rows) {
    std::snprintf(buf, sizeof buf, "%8zu %6zu", nk.first, nk.second);
    out << buf;
    for (auto s : columns) {
      auto it = cells.find(s);
      std::string ms = "-", nodes = "-";
      if (it != cells.end()) {
        const Cell& c = it->second;
        if (c.failed) {
          ms = nodes = "error";
        } else if (c.timed_out) {
          ms = nodes = "timeout";
        } else if (!c.times.empty()) {
          ms = format_ms(median(c.times));
          nodes = std::to_string(static_cast<std::uint64_t>(median(c.nodes)));
        }
      }
      std::snprintf(buf, sizeof buf, " %14s %12s", ms.c_str(), nodes.c_str());
      out << buf;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace fptvc
