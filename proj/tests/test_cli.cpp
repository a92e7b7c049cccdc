#include <doctest.h>

#include <fstream>
#include <sstream>

#include "fptvc/bench.hpp"
#include "fptvc/cli.hpp"
#include "fptvc/dimacs.hpp"
#include "fptvc/result_json.hpp"
#include "test_support.hpp"

using namespace fptvc;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "fptvc");
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_file(const std::string& name, const std::string& text) {
  auto path = (testing::temp_dir() / name).string();
  std::ofstream(path) << text;
  return path;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("decide") {
  auto p3 = write_file("p3.dimacs", "p edge 3 2\ne 1 2\ne 2 3\n");
  auto k3 = write_file("k3.dimacs", write_dimacs(testing::complete_graph(3)));

  auto yes = cli({"decide", p3, "--k", "1"});
  CHECK(yes.code == kExitYes);
  CHECK(first_line(yes.out) == "true");
  CHECK(yes.out.find("certificate: 1\n") != std::string::npos);
  CHECK(yes.out.find("nodes_expanded: 5\n") != std::string::npos);

  auto no = cli({"decide", k3, "--k", "1", "--strategy", "p3"});
  CHECK(no.code == kExitNo);
  CHECK(first_line(no.out) == "false");

  CHECK(cli({"decide", "/nonexistent.dimacs", "--k", "1"}).code == kExitError);
  CHECK(cli({"decide", p3}).code == kExitError);                             // --k missing
  CHECK(cli({"decide", p3, "--k", "-1"}).code == kExitError);
  CHECK(cli({"decide", p3, "--k", "1", "--strategy", "quad"}).code == kExitError);
}

TEST_CASE("decide reports parse errors with line numbers") {
  auto bad = write_file("bad.dimacs", "p edge 3 2\ne 1 2\ne 2 9\n");
  auto r = cli({"decide", bad, "--k", "1"});
  CHECK(r.code == kExitError);
  CHECK(r.err.find("line 3") != std::string::npos);
}

TEST_CASE("decide json round-trips the result") {
  auto p3 = write_file("p3j.dimacs", "p edge 3 2\ne 1 2\ne 2 3\n");
  auto r = cli({"decide", p3, "--k", "1", "--json"});
  CHECK(r.code == kExitYes);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["k"] == 1);
  CHECK(j["strategy"] == "paper5");
  auto result = j.get<SolveResult>();
  CHECK(result.decision);
  CHECK(result.certificate == std::vector<Vertex>{1});
  CHECK(result.stats.nodes_expanded == 5);
  CHECK(nlohmann::json(result).get<SolveResult>() == result);

  SolveResult no;
  no.stats.elapsed_ms = 0.1234567891;
  no.timed_out = true;
  CHECK(nlohmann::json::parse(nlohmann::json(no).dump()).get<SolveResult>() == no);
}

TEST_CASE("solve") {
  auto star = write_file("star.dimacs", write_dimacs(testing::star_graph(4)));
  auto r = cli({"solve", star});
  CHECK(r.code == kExitYes);
  CHECK(first_line(r.out) == "1");
  CHECK(r.out.find("cover: 4\n") != std::string::npos);

  auto c5 = write_file("c5.dimacs", write_dimacs(testing::cycle_graph(5)));
  CHECK(first_line(cli({"solve", c5, "--strategy", "edge"}).out) == "3");

  auto empty = write_file("empty.dimacs", "p edge 4 0\n");
  auto e = cli({"solve", empty, "--json"});
  CHECK(e.code == kExitYes);
  auto j = nlohmann::json::parse(e.out);
  CHECK(j["tau"] == 0);
  CHECK(j["cover"].empty());
}

TEST_CASE("gen then solve recovers the planted k") {
  auto path = (testing::temp_dir() / "planted.dimacs").string();
  auto g = cli({"gen", "--n", "24", "--k", "4", "--extra-edges", "30", "--seed", "11", "--output", path});
  REQUIRE(g.code == kExitYes);
  auto text = slurp(path);
  CHECK(first_line(text) == "c planted n=24 k=4 extra_edges=30 seed=11 cover=0,1,2,3");
  CHECK(parse_dimacs(text).edge_count() == 34);
  auto meta = nlohmann::json::parse(slurp(path + ".json"));
  CHECK(meta["planted_cover"] == std::vector<int>{0, 1, 2, 3});

  auto s = cli({"solve", path});
  CHECK(first_line(s.out) == "4");

  auto ratio = cli({"gen", "--n", "20", "--k", "3", "--extra-edge-ratio", "0.5"});
  CHECK(ratio.code == kExitYes);
  CHECK(first_line(ratio.out).find("extra_edges=10") != std::string::npos);

  CHECK(cli({"gen", "--n", "10", "--k", "6"}).code == kExitError);
}

TEST_CASE("verify") {
  auto k3 = write_file("k3v.dimacs", write_dimacs(testing::complete_graph(3)));
  auto good = write_file("good.cover", "c a cover\n0 1\n");
  auto short_cover = write_file("short.cover", "0\n");
  auto out_of_range = write_file("oor.cover", "0 7\n");
  auto junk = write_file("junk.cover", "0 x\n");
  CHECK(cli({"verify", k3, good}).code == kExitYes);
  CHECK(cli({"verify", k3, short_cover}).code == kExitNo);
  CHECK(cli({"verify", k3, out_of_range}).code == kExitError);
  CHECK(cli({"verify", k3, junk}).code == kExitError);
}

TEST_CASE("bench writes csv and prints the table") {
  auto csv = (testing::temp_dir() / "bench.csv").string();
  auto r = cli({"bench", "--n-values", "100,200", "--k-values", "3,4,5", "--seeds", "1", "--repetitions", "1",
                "--strategies", "paper5,edge", "--output", csv});
  CHECK(r.code == kExitYes);
  CHECK(r.out.find("paper5 ms") != std::string::npos);
  CHECK(r.out.find("fitted branching factor") != std::string::npos);
  auto text = slurp(csv);
  CHECK(first_line(text) == kCsvHeader);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 2 * 3 * 2);

  auto cfg = write_file("bench.cfg", "n_values = 50\nk_values = 2\nseeds = 1\nrepetitions = 1\n");
  CHECK(cli({"bench", "--config", cfg}).code == kExitYes);
  CHECK(cli({"bench", "--n-values", "10", "--k-values", "6"}).code == kExitError);
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == kExitError);
  CHECK(cli({"frobnicate"}).code == kExitError);
  CHECK(cli({"--help"}).code == 0);
}

}
