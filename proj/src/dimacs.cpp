#include "fptvc/dimacs.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

namespace fptvc {
namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::uint64_t parse_count(std::string_view token, std::size_t line_no, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw DimacsError(line_no, std::string("malformed ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph parse_dimacs(std::istream& in, std::vector<std::string>* warnings) {
  bool have_problem = false;
  std::uint64_t n = 0;
  std::uint64_t declared_m = 0;
  std::vector<Edge> edges;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (have_problem) throw DimacsError(line_no, "duplicate problem line");
      if (tokens.size() != 4 || tokens[1] != "edge") {
        throw DimacsError(line_no, "expected 'p edge <n> <m>'");
      }
      n = parse_count(tokens[2], line_no, "vertex count");
      declared_m = parse_count(tokens[3], line_no, "edge count");
      if (n > std::numeric_limits<Vertex>::max()) throw DimacsError(line_no, "vertex count too large");
      have_problem = true;
      edges.reserve(declared_m);
    } else if (tokens[0] == "e") {
      if (!have_problem) throw DimacsError(line_no, "edge line before problem line");
      if (tokens.size() != 3) throw DimacsError(line_no, "expected 'e <u> <v>'");
      auto u = parse_count(tokens[1], line_no, "vertex id");
      auto v = parse_count(tokens[2], line_no, "vertex id");
      if (u < 1 || u > n || v < 1 || v > n) {
        throw DimacsError(line_no, "vertex id outside 1.." + std::to_string(n));
      }
      if (u == v) throw DimacsError(line_no, "self-loop on vertex " + std::to_string(u));
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else if (tokens[0].front() == 'c') {
      continue;  // "c..." without a separating space is still a comment
    } else {
      throw DimacsError(line_no, "unrecognized line type '" + std::string(tokens[0]) + "'");
    }
  }
  if (!have_problem) throw DimacsError(line_no, "missing problem line");

  Graph g = Graph::from_edges(n, edges);
  if (warnings && g.edge_count() != declared_m) {
    warnings->push_back("problem line declares " + std::to_string(declared_m) + " edges, found " +
                        std::to_string(g.edge_count()) + " distinct");
  }
  return g;
}

Graph parse_dimacs(std::string_view text, std::vector<std::string>* warnings) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in, warnings);
}

Graph read_dimacs_file(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_dimacs(in, warnings);
}

std::string write_dimacs(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += "e ";
    out += std::to_string(u + 1);
    out += ' ';
    out += std::to_string(v + 1);
    out += '\n';
  }
  return out;
}

}  // namespace fptvc
