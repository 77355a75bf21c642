#ifndef IMATCH_EDGE_LIST_IO_HPP
#define IMATCH_EDGE_LIST_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "imatch/graph.hpp"

namespace imatch {

/// Parse failure; carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Edge-list format:
//   n m
//   u v      (m lines, 0-indexed, either endpoint order, duplicates allowed)

[[nodiscard]] Graph read_edge_list(std::istream& in);
[[nodiscard]] Graph read_edge_list_file(const std::string& path);

/// Writes the header "n m" and the canonical sorted edges, LF-terminated.
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

// Certificate format: one edge "u v" per line; blank lines are ignored.

[[nodiscard]] Matching read_certificate(std::istream& in);
[[nodiscard]] Matching read_certificate_file(const std::string& path);
void write_certificate(std::ostream& out, const Matching& m);

}  // namespace imatch

#endif  // IMATCH_EDGE_LIST_IO_HPP
