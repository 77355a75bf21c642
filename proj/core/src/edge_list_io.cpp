#include "imatch/edge_list_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

namespace imatch {

namespace {

bool is_blank(std::string_view s) {
  return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

// Parses exactly two unsigned integers separated by whitespace.
bool parse_pair(std::string_view s, std::uint64_t& a, std::uint64_t& b) {
  auto skip = [&s](std::size_t pos) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r')) ++pos;
    return pos;
  };
  std::size_t pos = skip(0);
  auto r1 = std::from_chars(s.data() + pos, s.data() + s.size(), a);
  if (r1.ec != std::errc{} || r1.ptr == s.data() + pos) return false;
  pos = static_cast<std::size_t>(r1.ptr - s.data());
  const std::size_t after_first = pos;
  pos = skip(pos);
  if (pos == after_first) return false;
  auto r2 = std::from_chars(s.data() + pos, s.data() + s.size(), b);
  if (r2.ec != std::errc{} || r2.ptr == s.data() + pos) return false;
  pos = skip(static_cast<std::size_t>(r2.ptr - s.data()));
  return pos == s.size();
}

std::ifstream open_for_read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  bool have_header = false;
  while (!have_header && std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    if (!parse_pair(line, n, m)) throw ParseError(line_no, "expected header \"n m\"");
    if (n >= kNoVertex) throw ParseError(line_no, "vertex count too large");
    have_header = true;
  }
  if (!have_header) throw ParseError(line_no, "missing header");

  std::vector<Edge> edges;
  edges.reserve(m);
  std::size_t seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    if (!parse_pair(line, u, v)) throw ParseError(line_no, "expected \"u v\"");
    if (u >= n || v >= n) throw ParseError(line_no, "endpoint out of range");
    if (u == v) throw ParseError(line_no, "self-loop");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    ++seen;
  }
  if (seen != m) {
    throw ParseError(line_no, "header declares " + std::to_string(m) + " edge lines, found " +
                                  std::to_string(seen));
  }
  return Graph::from_edge_list(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
  auto in = open_for_read(path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_edge_list(out, g);
}

Matching read_certificate(std::istream& in) {
  Matching m;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    if (!parse_pair(line, u, v) || u >= kNoVertex || v >= kNoVertex) {
      throw ParseError(line_no, "expected \"u v\"");
    }
    m.push_back(Edge{static_cast<Vertex>(u), static_cast<Vertex>(v)}.canonical());
  }
  return m;
}

Matching read_certificate_file(const std::string& path) {
  auto in = open_for_read(path);
  return read_certificate(in);
}

void write_certificate(std::ostream& out, const Matching& m) {
  for (const Edge& e : m) out << e.u << ' ' << e.v << '\n';
}

}  // namespace imatch
