#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fptvc/graph.hpp"

namespace fptvc {

class DimacsError : public std::runtime_error {
 public:
  DimacsError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Reads the DIMACS edge format: `c` comments, one `p edge <n> <m>` line, then
// `e <u> <v>` lines with 1-indexed ids. Duplicate edges collapse. A declared
// edge count that disagrees with the distinct edge count is reported through
// `warnings` (when given) and is otherwise ignored.
Graph parse_dimacs(std::istream& in, std::vector<std::string>* warnings = nullptr);
Graph parse_dimacs(std::string_view text, std::vector<std::string>* warnings = nullptr);
Graph read_dimacs_file(const std::string& path, std::vector<std::string>* warnings = nullptr);

// Canonical form: exact edge count, edges sorted by (min, max), 1-indexed.
std::string write_dimacs(const Graph& g);

}  // namespace fptvc
