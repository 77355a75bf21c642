#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "imatch/edge_list_io.hpp"
#include "imatch/generators.hpp"
#include "support/naive.hpp"

using namespace imatch;

TEST_CASE("edge list round trip preserves the graph") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = naive::gnp(1 + seed * 3, 0.2, seed);
    std::stringstream buf;
    write_edge_list(buf, g);
    CHECK(read_edge_list(buf) == g);
  }
}

TEST_CASE("writer emits header and canonical edges") {
  std::ostringstream out;
  write_edge_list(out, named_fixture("path-3"));
  CHECK(out.str() == "3 2\n0 1\n1 2\n");
}

TEST_CASE("reader accepts either endpoint order and duplicate lines") {
  std::istringstream in("4 4\n1 0\n0 1\n3 2\n2 1\n");
  const auto g = read_edge_list(in);
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_edges() == 3);
}

TEST_CASE("reader rejects malformed input with a line number") {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      (void)read_edge_list(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("3 1\n0 x\n") == 2);
  CHECK(line_of("3 1\n0 3\n") == 2);
  CHECK(line_of("3 1\n1 1\n") == 2);
  CHECK(line_of("3\n") == 1);
  CHECK(line_of("3 2\n0 1\n") == 2);
  std::istringstream empty("");
  CHECK_THROWS_AS((void)read_edge_list(empty), ParseError);
}

TEST_CASE("certificates") {
  std::istringstream in("0 1\n\n4 3\n");
  const auto m = read_certificate(in);
  CHECK(m == Matching{{0, 1}, {3, 4}});
  std::istringstream bad("0 1\n2\n");
  CHECK_THROWS_AS((void)read_certificate(bad), ParseError);
  std::istringstream empty("");
  CHECK(read_certificate(empty).empty());
}
