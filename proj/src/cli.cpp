#include "fptvc/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>

#include "fptvc/bench.hpp"
#include "fptvc/dimacs.hpp"
#include "fptvc/generators.hpp"
#include "fptvc/oracle.hpp"
#include "fptvc/result_json.hpp"
#include "fptvc/solver.hpp"

namespace fptvc {
namespace {

const std::map<std::string, BranchStrategy> kStrategyFlag{
    {"paper5", BranchStrategy::PaperFive},
    {"p3", BranchStrategy::ClassicP3},
    {"edge", BranchStrategy::EdgeBranch},
};

std::string join_ids(std::span<const Vertex> ids, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(ids[i]);
  }
  return s;
}

Graph load_graph(const std::string& path, std::ostream& err) {
  std::vector<std::string> warnings;
  Graph g = read_dimacs_file(path, &warnings);
  for (const auto& w : warnings) err << "warning: " << path << ": " << w << '\n';
  return g;
}

// Whitespace-separated 0-indexed ids; lines starting with `c` or `#` are skipped.
std::vector<Vertex> read_cover_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::vector<Vertex> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == 'c' || line[first] == '#') continue;
    std::istringstream ss(line);
    std::string token;
    while (ss >> token) {
      std::size_t used = 0;
      unsigned long long id = 0;
      try {
        id = std::stoull(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size() || token.front() == '-' || id > std::numeric_limits<Vertex>::max()) {
        throw std::runtime_error(path + ": line " + std::to_string(line_no) + ": bad vertex id '" + token + "'");
      }
      ids.push_back(static_cast<Vertex>(id));
    }
  }
  return ids;
}

void print_stats(std::ostream& out, const SolveStats& s) {
  out << "nodes_expanded: " << s.nodes_expanded << '\n'
      << "max_depth: " << s.max_depth << '\n'
      << "triplet_scans: " << s.triplet_scans << '\n'
      << "time_ms: " << std::fixed << std::setprecision(3) << s.elapsed_ms << '\n';
  out.unsetf(std::ios_base::floatfield);
}

struct Options {
  std::string graph_path;
  std::string cover_path;
  std::string output_path;
  std::string config_path;
  BranchStrategy strategy = BranchStrategy::PaperFive;
  long long k = -1;
  bool json = false;
  double time_limit_s = 0.0;
  std::size_t n = 0;
  std::size_t extra_edges = 0;
  double extra_edge_ratio = 0.0;
  std::uint64_t seed = 1;
  std::vector<std::size_t> n_values, k_values;
  std::vector<std::string> strategies;
  std::vector<std::uint64_t> seeds;
  std::size_t repetitions = 0;
  std::size_t threads = 0;
};

int cmd_decide(const Options& o, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(o.graph_path, err);
  SolveOptions so;
  if (o.time_limit_s > 0) {
    so.time_limit = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
        std::chrono::duration<double>(o.time_limit_s));
  }
  SolveResult r = decide_vc(g, o.k, o.strategy, so);
  if (o.json) {
    nlohmann::json j = r;
    j["k"] = o.k;
    j["strategy"] = strategy_name(o.strategy);
    out << j.dump() << '\n';
  } else if (r.timed_out) {
    out << "timeout\n";
  } else {
    out << (r.decision ? "true" : "false") << '\n';
    if (r.decision) out << "certificate: " << join_ids(*r.certificate) << '\n';
    print_stats(out, r.stats);
  }
  if (r.timed_out) {
    err << "error: time limit reached before a decision\n";
    return kExitError;
  }
  return r.decision ? kExitYes : kExitNo;
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(o.graph_path, err);
  MinCoverResult r = min_vertex_cover(g, o.strategy);
  if (!verify_cover(g, r.cover)) {
    err << "internal error: solver returned an invalid cover\n";
    return kExitError;
  }
  if (o.json) {
    nlohmann::json j{{"tau", r.size}, {"cover", r.cover}, {"stats", r.stats},
                     {"strategy", strategy_name(o.strategy)}};
    out << j.dump() << '\n';
  } else {
    out << r.size << '\n' << "cover: " << join_ids(r.cover) << '\n';
    print_stats(out, r.stats);
  }
  return kExitYes;
}

int cmd_gen(const Options& o, const CLI::App& sub, std::ostream& out) {
  std::size_t extra = o.extra_edges;
  if (sub.count("--extra-edge-ratio")) {
    extra = static_cast<std::size_t>(std::llround(o.extra_edge_ratio * static_cast<double>(o.n)));
  }
  PlantedInstance inst = gen_planted(o.n, static_cast<std::size_t>(o.k), extra, o.seed);
  std::ostringstream text;
  text << "c planted n=" << o.n << " k=" << inst.planted_k << " extra_edges=" << extra << " seed=" << o.seed
       << " cover=" << join_ids(inst.planted_cover, ",") << '\n'
       << write_dimacs(inst.graph);

  if (o.output_path.empty()) {
    out << text.str();
    return kExitYes;
  }
  std::ofstream file(o.output_path);
  if (!file || !(file << text.str())) throw std::runtime_error("cannot write '" + o.output_path + "'");
  nlohmann::json meta{{"n", o.n},       {"k", inst.planted_k},           {"extra_edges", extra},
                      {"seed", o.seed}, {"planted_cover", inst.planted_cover}};
  std::ofstream sidecar(o.output_path + ".json");
  if (!sidecar || !(sidecar << meta.dump(2) << '\n')) {
    throw std::runtime_error("cannot write '" + o.output_path + ".json'");
  }
  return kExitYes;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(o.graph_path, err);
  std::vector<Vertex> cover = read_cover_file(o.cover_path);
  const bool ok = verify_cover(g, cover);
  out << (ok ? "valid" : "invalid") << " cover of size " << cover.size() << '\n';
  return ok ? kExitYes : kExitNo;
}

int cmd_bench(const Options& o, const CLI::App& sub, std::ostream& out, std::ostream& err) {
  BenchConfig cfg;
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    if (!in) throw std::runtime_error("cannot open '" + o.config_path + "'");
    cfg = parse_bench_config(in);
  }
  if (!o.n_values.empty()) cfg.n_values = o.n_values;
  if (!o.k_values.empty()) cfg.k_values = o.k_values;
  if (sub.count("--extra-edge-ratio")) cfg.extra_edge_ratio = o.extra_edge_ratio;
  if (!o.strategies.empty()) {
    cfg.strategies.clear();
    for (const auto& name : o.strategies) {
      auto s = parse_strategy(name);
      if (!s) throw BenchConfigError("unknown strategy '" + name + "'");
      cfg.strategies.push_back(*s);
    }
  }
  if (!o.seeds.empty()) cfg.seeds = o.seeds;
  if (o.repetitions) cfg.repetitions = o.repetitions;
  if (o.threads) cfg.threads = o.threads;
  if (o.time_limit_s > 0) cfg.time_limit = std::chrono::milliseconds(std::llround(o.time_limit_s * 1000.0));

  auto records = run_benchmark(cfg);
  out << write_report_table(records);
  try {
    auto fits = estimate_branching_factor(records);
    out << "\nfitted branching factor (nodes ~ c * b^k):\n";
    for (const auto& f : fits) {
      out << "  " << strategy_name(f.strategy) << " n=" << f.n << " b=" << std::setprecision(4) << f.base
          << " rms_residual=" << f.rms_residual << '\n';
    }
  } catch (const std::invalid_argument&) {
    // Fewer than three k values; the fit is optional output.
  }
  for (const auto& r : records) {
    if (r.failed()) err << "warning: n=" << r.n << " k=" << r.k_input << " seed=" << r.seed << ": " << r.error << '\n';
  }

  const std::string csv = write_report_csv(records);
  if (!o.output_path.empty()) {
    std::ofstream file(o.output_path);
    if (!file || !(file << csv)) throw std::runtime_error("cannot write '" + o.output_path + "'");
  }
  return kExitYes;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact minimum vertex cover by bounded search-tree branching", "fptvc"};
  app.require_subcommand(1);
  Options o;

  auto add_strategy = [&](CLI::App* sub) {
    sub->add_option("--strategy", o.strategy, "Branching strategy: paper5 (default), p3, edge")
        ->transform(CLI::CheckedTransformer(kStrategyFlag, CLI::ignore_case));
  };

  auto* decide = app.add_subcommand("decide", "Does the graph have a vertex cover of size at most k?");
  decide->add_option("graph", o.graph_path, "DIMACS edge file")->required();
  decide->add_option("-k,--k", o.k, "Cover size budget")->required()->check(CLI::NonNegativeNumber);
  add_strategy(decide);
  decide->add_flag("--json", o.json, "Print the result as JSON");
  decide->add_option("--time-limit", o.time_limit_s, "Seconds before giving up (exit 2)");

  auto* solve = app.add_subcommand("solve", "Compute a minimum vertex cover");
  solve->add_option("graph", o.graph_path, "DIMACS edge file")->required();
  add_strategy(solve);
  solve->add_flag("--json", o.json, "Print the result as JSON");

  auto* gen = app.add_subcommand("gen", "Generate a planted instance whose minimum cover size is k");
  gen->add_option("-n,--n", o.n, "Vertex count")->required();
  gen->add_option("-k,--k", o.k, "Planted cover size")->required()->check(CLI::PositiveNumber);
  auto* extra = gen->add_option("--extra-edges", o.extra_edges, "Extra cover-incident edges");
  gen->add_option("--extra-edge-ratio", o.extra_edge_ratio, "Extra edges as a multiple of n")->excludes(extra);
  gen->add_option("--seed", o.seed, "Generator seed");
  gen->add_option("-o,--output", o.output_path, "Output DIMACS path (default: stdout)");

  auto* verify = app.add_subcommand("verify", "Check that a vertex set covers every edge");
  verify->add_option("graph", o.graph_path, "DIMACS edge file")->required();
  verify->add_option("cover", o.cover_path, "File of 0-indexed vertex ids")->required();

  auto* bench = app.add_subcommand("bench", "Time the strategies on planted instances");
  bench->add_option("--config", o.config_path, "key = value configuration file");
  bench->add_option("--n-values", o.n_values, "Vertex counts")->delimiter(',');
  bench->add_option("--k-values", o.k_values, "Planted cover sizes")->delimiter(',');
  bench->add_option("--extra-edge-ratio", o.extra_edge_ratio, "Extra edges as a multiple of n");
  bench->add_option("--strategies", o.strategies, "Strategies to compare")->delimiter(',');
  bench->add_option("--seeds", o.seeds, "Generator seeds")->delimiter(',');
  bench->add_option("--repetitions", o.repetitions, "Timed runs per record");
  bench->add_option("--threads", o.threads, "Instances solved concurrently");
  bench->add_option("--time-limit", o.time_limit_s, "Seconds per solve");
  bench->add_option("-o,--output", o.output_path, "CSV report path");

  std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitError;
  }

  try {
    if (*decide) return cmd_decide(o, out, err);
    if (*solve) return cmd_solve(o, out, err);
    if (*gen) return cmd_gen(o, *gen, out);
    if (*verify) return cmd_verify(o, out, err);
    if (*bench) return cmd_bench(o, *bench, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace fptvc
