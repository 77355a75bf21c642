#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "imatch/generators.hpp"
#include "imatch/oracle.hpp"
#include "imatch/sparsify.hpp"
#include "support/naive.hpp"

using namespace imatch;

TEST_CASE("lemma_params") {
  const auto p100 = lemma_params(100, 1.5);
  CHECK(p100.a == doctest::Approx(0.5));
  CHECK(p100.p == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(p100.d0 == 16);
  CHECK(p100.max_retries == 50);
  CHECK(lemma_params(10000, 1.5).p == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(lemma_params(27, 1.0).a == 1.0 / 3.0);
  CHECK(lemma_params(27, 1.0).p == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
  CHECK_THROWS_AS((void)lemma_params(8, 3.5), std::invalid_argument);
  CHECK_THROWS_AS((void)lemma_params(8, 0.0), std::invalid_argument);
  CHECK_THROWS_AS((void)lemma_params(8, 3.0), std::invalid_argument);
  CHECK_THROWS_AS((void)lemma_params(0, 1.0), std::invalid_argument);
  const auto o = lemma_params(20, 1.0, {4, 7});
  CHECK(o.d0 == 4);
  CHECK(o.max_retries == 7);
}

TEST_CASE("thresholds follow np/2, 3np/2, np/4 and 5ndp^2") {
  for (std::size_t d : {17U, 30U, 100U}) {
    for (double eps : {0.25, 1.0, 2.0}) {
      const auto params = lemma_params(d, eps);
      const std::size_t n = 1234;
      const double np = static_cast<double>(n) * params.p;
      const auto th = params.thresholds(n);
      CHECK(th.v_lo == doctest::Approx(np / 2));
      CHECK(th.v_hi == doctest::Approx(3 * np / 2));
      CHECK(th.tri_max == doctest::Approx(np / 4));
      CHECK(th.edge_max == doctest::Approx(5.0 * n * static_cast<double>(d) * params.p * params.p));
    }
  }
}

TEST_CASE("triangle_budget") {
  CHECK(triangle_budget(100, 10, 1.0) == doctest::Approx(1000));
  CHECK(triangle_budget(57, 1, 2.0) == doctest::Approx(57));
  CHECK(triangle_budget(57, 1, 0.5) == doctest::Approx(57));
}

TEST_CASE("sample_vertices") {
  const auto g = named_fixture("edgeless-50");
  Rng rng(1);
  CHECK(sample_vertices(g, 1.0, rng).size() == 50);
  CHECK(sample_vertices(g, 0.0, rng).empty());
  Rng a(9);
  Rng b(9);
  CHECK(sample_vertices(g, 0.4, a) == sample_vertices(g, 0.4, b));
}

TEST_CASE("sample_vertices has binomial mean") {
  const auto g = named_fixture("edgeless-10000");
  double total = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    total += static_cast<double>(sample_vertices(g, 0.1, rng).size());
  }
  const double mean = total / 100.0;
  // sigma of a single draw is sqrt(np(1-p)) = 30; the mean of 100 draws has sigma 3.
  CHECK(std::abs(mean - 1000.0) <= 3 * 30.0);
  CHECK(std::abs(mean - 1000.0) <= 3 * 3.0 + 1.0);
}

TEST_CASE("break_triangles") {
  SUBCASE("triangle") {
    const auto tb = break_triangles(named_fixture("complete-3"));
    CHECK(tb.remainder.graph.num_vertices() == 2);
    CHECK(tb.removed.size() == 1);
  }
  SUBCASE("Petersen is untouched") {
    const auto tb = break_triangles(named_fixture("petersen"));
    CHECK(tb.removed.empty());
    CHECK(tb.remainder.graph == named_fixture("petersen"));
  }
  SUBCASE("K4") {
    const auto tb = break_triangles(named_fixture("complete-4"));
    CHECK(tb.remainder.graph.num_vertices() <= 2);
    CHECK(count_triangles(tb.remainder.graph) == 0);
  }
}

TEST_CASE("break_triangles always leaves a triangle-free graph") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto g = naive::gnp(10 + seed % 50, 0.1 + 0.05 * static_cast<double>(seed % 8), seed);
    const auto tb = break_triangles(g);
    CAPTURE(seed);
    CHECK(naive::triangles(tb.remainder.graph) == 0);
    CHECK(tb.removed.size() <= count_triangles(g));
    CHECK(tb.removed.size() + tb.remainder.graph.num_vertices() == g.num_vertices());
    // The remainder is the subgraph induced by the survivors.
    for (Vertex i = 0; i < tb.remainder.graph.num_vertices(); ++i)
      for (Vertex j = i + 1; j < tb.remainder.graph.num_vertices(); ++j)
        CHECK(tb.remainder.graph.has_edge(i, j) ==
              g.has_edge(tb.remainder.to_parent[i], tb.remainder.to_parent[j]));
  }
}

TEST_CASE("shearer_independent_set examples") {
  CHECK(shearer_independent_set(named_fixture("edgeless-9")).size() == 9);
  CHECK(shearer_independent_set(named_fixture("complete-bipartite-1-5")) == VertexSet{1, 2, 3, 4, 5});
  const auto c6 = named_fixture("cycle-6");
  CHECK(shearer_independent_set(c6).size() >= 2);
  CHECK(oracle::max_independent_set_bf(c6).first == 3);
  CHECK_THROWS_AS((void)shearer_independent_set(named_fixture("complete-3")), std::invalid_argument);
}

TEST_CASE("shearer_independent_set meets its guarantee on triangle-free graphs") {
  // Corpus: finite geometries, fixtures and triangle-broken random graphs.
  // Calibration: the smallest observed |I| * d̄ / (n ln d̄) with d̄ >= 2 over
  // this corpus is about 1.09 (a triangle-broken random cubic graph on 16
  // vertices); kShearerConstant = 0.9 is frozen below it.
  std::vector<Graph> corpus;
  for (std::uint32_t q : {2U, 3U, 5U, 7U, 11U, 13U}) {
    corpus.push_back(projective_incidence_graph(q));
    corpus.push_back(break_triangles(polarity_graph(q)).remainder.graph);
  }
  for (const char* name : {"petersen", "heawood", "cycle-7", "cycle-8", "complete-bipartite-5-5",
                           "complete-bipartite-3-9", "path-10"}) {
    corpus.push_back(named_fixture(name));
  }
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    for (std::size_t n : {16U, 64U, 256U, 1000U}) {
      for (std::size_t d : {3U, 4U, 5U, 8U, 12U, 20U}) {
        if (d < n) corpus.push_back(break_triangles(random_regular(n, d, seed)).remainder.graph);
      }
    }
    corpus.push_back(break_triangles(naive::gnp(40, 0.2, seed)).remainder.graph);
  }
  double worst = 1e9;
  for (const auto& g : corpus) {
    const auto set = shearer_independent_set(g);
    const double dbar = average_degree(g);
    CHECK(is_independent_set(g, set));
    CHECK(static_cast<double>(set.size()) >= shearer_guarantee(g.num_vertices(), dbar) - 1e-9);
    if (dbar >= 2) {
      worst = std::min(worst, static_cast<double>(set.size()) * dbar /
                                  (static_cast<double>(g.num_vertices()) * std::log(dbar)));
    }
  }
  MESSAGE("smallest observed greedy constant: " << worst);
  CHECK(worst >= kShearerConstant);
}

TEST_CASE("sparsify_independent_set: bypass and edgeless paths") {
  const auto heawood = named_fixture("heawood");
  const auto params = lemma_params(3, 1.0);
  const auto result = sparsify_independent_set(heawood, params, 1);
  CHECK(result.path == LemmaPath::bypass);
  CHECK(result.attempts == 0);
  CHECK(is_independent_set(heawood, result.set));
  CHECK(result.set.size() >= 4);
  CHECK(oracle::max_independent_set_bf(heawood).first == 7);

  const auto edgeless = named_fixture("edgeless-6");
  const auto all = sparsify_independent_set(edgeless, lemma_params(5, 2.5), 3);
  CHECK(all.path == LemmaPath::edgeless);
  CHECK(all.set == VertexSet{0, 1, 2, 3, 4, 5});
}

TEST_CASE("sparsify_independent_set: sampled path returns valid pulled-back sets") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = random_regular(400, 20, seed);
    const auto params = lemma_params(20, 1.5);
    const auto result = sparsify_independent_set(g, params, seed);
    CAPTURE(seed);
    CHECK(result.path == LemmaPath::sampled);
    CHECK(result.attempts >= 1);
    CHECK(result.stats.size() == result.attempts);
    CHECK(result.stats.back().outcome == AttemptOutcome::passed);
    CHECK(!result.set.empty());
    CHECK(is_independent_set(g, result.set));
    CHECK(std::is_sorted(result.set.begin(), result.set.end()));
    CHECK(result.set.back() < g.num_vertices());
    const auto again = sparsify_independent_set(g, params, seed);
    CHECK(again.set == result.set);
    CHECK(again.attempts == result.attempts);
  }
}

TEST_CASE("attempt seeds follow split_seed(seed, index)") {
  const auto g = random_regular(300, 20, 5);
  const auto params = lemma_params(20, 1.0, {.d0 = 4, .max_retries = 50});
  const auto result = sparsify_independent_set(g, params, 77);
  for (const auto& s : result.stats) {
    CHECK(s.seed == split_seed(77, s.index));
    const auto single = sparsify_attempt(g, params, s.seed);
    CHECK(single.sampled == s.sampled);
    CHECK(single.triangles == s.triangles);
    CHECK(single.outcome == s.outcome);
  }
}

TEST_CASE("sparsify_independent_set: precondition errors") {
  // K5 has 10 triangles; 5 * 4^(2 - 2.9) ≈ 1.44.
  const auto k5 = named_fixture("complete-5");
  CHECK_THROWS_AS((void)sparsify_independent_set(k5, lemma_params(4, 2.9), 1), TriangleBudgetError);
  try {
    (void)sparsify_independent_set(k5, lemma_params(4, 2.9), 1);
  } catch (const TriangleBudgetError& e) {
    CHECK(e.measured() == 10);
    CHECK(e.budget() == doctest::Approx(5 * std::pow(4.0, -0.9)));
  }
  CHECK_THROWS_AS((void)sparsify_independent_set(k5, lemma_params(7, 1.0), 1), std::invalid_argument);
}

TEST_CASE("sparsify_independent_set: exhausted retries report every attempt") {
  // K20 with tiny p: np ≈ 1.2, so an empty sample (too_few_vertices) is common.
  const auto k20 = named_fixture("complete-20");
  const auto params = lemma_params(19, 0.1, {.d0 = 0, .max_retries = 1});
  bool seen = false;
  for (std::uint64_t seed = 0; seed < 100 && !seen; ++seed) {
    try {
      const auto r = sparsify_independent_set(k20, params, seed);
      CHECK(is_independent_set(k20, r.set));
    } catch (const RetriesExhaustedError& e) {
      seen = true;
      REQUIRE(e.stats().size() == 1);
      CHECK(e.stats()[0].outcome != AttemptOutcome::passed);
      CHECK(std::string(e.what()).find("attempt 0") != std::string::npos);
    }
  }
  CHECK(seen);
}

TEST_CASE("sampling statistics over seeds match the expected vertex and edge counts") {
  const auto g = random_regular(2000, 20, 11);
  const auto params = lemma_params(20, 1.5);
  const double n = 2000;
  const double np = n * params.p;
  const double sigma = std::sqrt(np * (1 - params.p));
  double sampled = 0;
  double edges = 0;
  const int seeds = 200;
  for (int s = 0; s < seeds; ++s) {
    Rng rng(static_cast<std::uint64_t>(s));
    const auto set = sample_vertices(g, params.p, rng);
    sampled += static_cast<double>(set.size());
    edges += static_cast<double>(induced_subgraph(g, set).graph.num_edges());
  }
  sampled /= seeds;
  edges /= seeds;
  CHECK(std::abs(sampled - np) <= 3 * sigma / std::sqrt(static_cast<double>(seeds)));
  CHECK(edges <= 1.1 * n * 20 * params.p * params.p / 2);
}

TEST_CASE("four-wise sampler mode and the derandomized search produce independent sets") {
  const auto g = random_regular(600, 20, 2);
  const auto params = lemma_params(20, 1.5, {.d0 = 4, .max_retries = 50});
  const auto r = sparsify_independent_set(g, params, 3, SamplerKind::fourwise);
  CHECK(is_independent_set(g, r.set));
  CHECK(r.set == sparsify_independent_set(g, params, 3, SamplerKind::fourwise).set);

  const auto d = derandomized_independent_set(g, params, 1U << 20);
  CHECK(is_independent_set(g, d.set));
  CHECK(!d.set.empty());
  CHECK(d.stats.back().outcome == AttemptOutcome::passed);
}
