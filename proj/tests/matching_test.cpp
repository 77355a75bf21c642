#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "imatch/generators.hpp"
#include "imatch/matching.hpp"
#include "imatch/oracle.hpp"
#include "support/naive.hpp"

using namespace imatch;

namespace {

// Properness checked directly from the coloring, independent of
// is_proper_edge_coloring.
bool proper_by_pairs(const EdgeColoring& c) {
  for (std::size_t i = 0; i < c.edges.size(); ++i)
    for (std::size_t j = i + 1; j < c.edges.size(); ++j) {
      const auto& a = c.edges[i];
      const auto& b = c.edges[j];
      const bool share = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
      if (share && c.color[i] == c.color[j]) return false;
    }
  return true;
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

}  // namespace

TEST_CASE("misra_gries_edge_color on small fixtures") {
  const auto c5 = misra_gries_edge_color(named_fixture("cycle-5"));
  CHECK(c5.num_colors == 3);
  CHECK(proper_by_pairs(c5));

  const auto c6g = named_fixture("cycle-6");
  const auto c6 = misra_gries_edge_color(c6g);
  CHECK(is_proper_edge_coloring(c6g, c6));
  CHECK((c6.num_colors == 2 || c6.num_colors == 3));
  CHECK(extract_matching(c6).size() >= 2);

  const auto heawood = named_fixture("heawood");
  const auto ch = misra_gries_edge_color(heawood);
  CHECK(ch.num_colors <= 4);
  CHECK(is_proper_edge_coloring(heawood, ch));
  CHECK(proper_by_pairs(ch));

  CHECK(misra_gries_edge_color(named_fixture("edgeless-3")).num_colors == 0);
}

TEST_CASE("misra_gries uses at most Δ+1 colors and is proper on random graphs") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const std::size_t n = 5 + seed % 40;
    const auto g = naive::gnp(n, 0.05 + 0.6 * static_cast<double>(seed % 10) / 10.0, seed);
    const auto c = misra_gries_edge_color(g);
    CAPTURE(seed);
    CHECK(is_proper_edge_coloring(g, c));
    if (g.num_edges() < 300) CHECK(proper_by_pairs(c));
    CHECK(c.num_colors <= degree_profile(g).max_degree + 1);
    CHECK(misra_gries_edge_color(g).color == c.color);
  }
}

TEST_CASE("is_proper_edge_coloring rejects conflicts") {
  const auto g = named_fixture("path-3");
  EdgeColoring c{g.edges(), {0, 0}, 1};
  CHECK_FALSE(is_proper_edge_coloring(g, c));
  c.color = {0, 1};
  c.num_colors = 2;
  CHECK(is_proper_edge_coloring(g, c));
  c.num_colors = 1;
  CHECK_FALSE(is_proper_edge_coloring(g, c));
}

TEST_CASE("extract_matching returns the largest color class") {
  const auto heawood = named_fixture("heawood");
  const auto m = extract_matching(misra_gries_edge_color(heawood));
  // 21 edges in at most 4 classes.
  CHECK(m.size() >= ceil_div(21, 4));
  CHECK(m.size() >= ceil_div(14 * 3, 8));
  CHECK(is_matching(m));

  const auto k2 = named_fixture("path-2");
  CHECK(extract_matching(misra_gries_edge_color(k2)) == Matching{{0, 1}});
  CHECK(extract_matching(misra_gries_edge_color(named_fixture("edgeless-4"))).empty());
}

TEST_CASE("regular graphs get a matching of size at least ceil(nd / (2(d+1)))") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t d = 3 + seed % 3;
    const std::size_t n = 8 + 2 * (seed % 28);
    const auto g = random_regular(n, d, seed);
    const auto m = extract_matching(misra_gries_edge_color(g));
    CHECK(m.size() >= ceil_div(n * d, 2 * (d + 1)));
    CHECK(m.size() >= ceil_div(n, 4));
  }
}

TEST_CASE("greedy_maximal_matching") {
  const auto p4 = named_fixture("path-4");
  const auto m = greedy_maximal_matching(p4, 3);
  CHECK(m.size() >= 1);
  CHECK(greedy_maximal_matching(named_fixture("complete-4"), 9).size() == 2);
  CHECK(greedy_maximal_matching(named_fixture("edgeless-5"), 1).empty());
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = naive::gnp(15, 0.2, seed);
    const auto mm = greedy_maximal_matching(g, seed);
    CHECK(is_matching(mm));
    CHECK(mm == greedy_maximal_matching(g, seed));
    std::set<Vertex> used;
    for (const auto& e : mm) {
      CHECK(g.has_edge(e.u, e.v));
      used.insert(e.u);
      used.insert(e.v);
    }
    for (const auto& e : g.edges()) CHECK((used.count(e.u) || used.count(e.v)));
  }
}

TEST_CASE("contract_matching") {
  SUBCASE("path a-b-c-d") {
    const auto cg = contract_matching(named_fixture("path-4"), Matching{{0, 1}, {2, 3}});
    CHECK(cg.graph == named_fixture("path-2"));
    CHECK(cg.rep == std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK(cg.inv_rep == std::vector<Vertex>{0, 0, 1, 1});
  }
  SUBCASE("single edge") {
    const auto cg = contract_matching(named_fixture("path-2"), Matching{{0, 1}});
    CHECK(cg.graph.num_vertices() == 1);
    CHECK(cg.graph.num_edges() == 0);
  }
  SUBCASE("C6 perfect matching gives a triangle") {
    const auto cg = contract_matching(named_fixture("cycle-6"), Matching{{0, 1}, {2, 3}, {4, 5}});
    CHECK(cg.graph == named_fixture("complete-3"));
  }
  SUBCASE("unmatched vertices are dropped") {
    const auto cg = contract_matching(named_fixture("path-4"), Matching{{1, 2}});
    CHECK(cg.graph.num_vertices() == 1);
    CHECK(cg.inv_rep[0] == kNoVertex);
  }
  SUBCASE("invalid matchings") {
    CHECK_THROWS_AS((void)contract_matching(named_fixture("path-4"), Matching{{0, 2}}), GraphError);
    CHECK_THROWS_AS((void)contract_matching(named_fixture("path-4"), Matching{{0, 1}, {1, 2}}), GraphError);
  }
}

TEST_CASE("contraction invariants and degree bound on regular graphs") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t d = 3 + seed % 3;
    const std::size_t n = 8 + 2 * (seed % 20);
    const auto g = random_regular(n, d, seed);
    const auto m = extract_matching(misra_gries_edge_color(g));
    const auto cg = contract_matching(g, m);
    CHECK(cg.graph.validate().empty());
    CHECK(degree_profile(cg.graph).max_degree <= 2 * (d - 1));
    for (Vertex x = 0; x < cg.rep.size(); ++x) {
      CHECK(cg.inv_rep[cg.rep[x].u] == x);
      CHECK(cg.inv_rep[cg.rep[x].v] == x);
      for (Vertex y = x + 1; y < cg.rep.size(); ++y) {
        const bool joined = g.has_edge(cg.rep[x].u, cg.rep[y].u) || g.has_edge(cg.rep[x].u, cg.rep[y].v) ||
                            g.has_edge(cg.rep[x].v, cg.rep[y].u) || g.has_edge(cg.rep[x].v, cg.rep[y].v);
        CHECK(cg.graph.has_edge(x, y) == joined);
      }
    }
  }
}

TEST_CASE("independent sets of the contraction pull back to induced matchings") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 6 + seed % 11;
    const auto g = naive::gnp(n, 0.3, seed);
    const auto m = greedy_maximal_matching(g, seed);
    const auto cg = contract_matching(g, m);
    // Every independent set, found by exhaustive enumeration.
    for (std::uint32_t mask = 0; mask < (1U << m.size()); ++mask) {
      VertexSet s;
      for (Vertex x = 0; x < m.size(); ++x)
        if (mask >> x & 1U) s.push_back(x);
      if (!is_independent_set(cg.graph, s)) continue;
      const auto pulled = pull_back(cg, s);
      CHECK(pulled.size() == s.size());
      CHECK(naive::induced_matching(g, pulled));
    }
  }
}
