#include "imatch/generators.hpp"

#include <algorithm>
#include <charconv>
#include <optional>

#include "imatch/random.hpp"

namespace imatch {

bool is_prime(std::uint64_t q) noexcept {
  if (q < 2) return false;
  for (std::uint64_t f = 2; f * f <= q; ++f) {
    if (q % f == 0) return false;
  }
  return true;
}

namespace {

void require_prime(std::uint32_t q) {
  if (!is_prime(q)) {
    throw GeneratorError("q = " + std::to_string(q) + " is not prime (only prime fields are supported)");
  }
  // 2(q^2+q+1) must fit comfortably in a Vertex.
  if (q > 40000) throw GeneratorError("q = " + std::to_string(q) + " is too large");
}

std::uint32_t dot_mod(const std::array<std::uint32_t, 3>& x, const std::array<std::uint32_t, 3>& y,
                      std::uint32_t q) {
  const std::uint64_t s = static_cast<std::uint64_t>(x[0]) * y[0] +
                          static_cast<std::uint64_t>(x[1]) * y[1] +
                          static_cast<std::uint64_t>(x[2]) * y[2];
  return static_cast<std::uint32_t>(s % q);
}

}  // namespace

std::vector<std::array<std::uint32_t, 3>> projective_points(std::uint32_t q) {
  require_prime(q);
  std::vector<std::array<std::uint32_t, 3>> pts;
  pts.reserve(static_cast<std::size_t>(q) * q + q + 1);
  for (std::uint32_t y = 0; y < q; ++y) {
    for (std::uint32_t z = 0; z < q; ++z) pts.push_back({1, y, z});
  }
  for (std::uint32_t z = 0; z < q; ++z) pts.push_back({0, 1, z});
  pts.push_back({0, 0, 1});
  return pts;
}

Graph projective_incidence_graph(std::uint32_t q) {
  const auto pts = projective_points(q);
  const auto n = static_cast<Vertex>(pts.size());
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (q + 1));
  for (Vertex p = 0; p < n; ++p) {
    for (Vertex l = 0; l < n; ++l) {
      if (dot_mod(pts[p], pts[l], q) == 0) edges.push_back({p, n + l});
    }
  }
  return Graph::from_edge_list(2 * static_cast<std::size_t>(n), edges);
}

Graph polarity_graph(std::uint32_t q) {
  const auto pts = projective_points(q);
  const auto n = static_cast<Vertex>(pts.size());
  std::vector<Edge> edges;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (dot_mod(pts[x], pts[y], q) == 0) edges.push_back({x, y});
    }
  }
  return Graph::from_edge_list(n, edges);
}

namespace {

// One pass of the incremental pairing model. Returns nullopt when the partial
// pairing can no longer be completed without a loop or a repeated edge.
std::optional<std::vector<Edge>> try_pairing(std::size_t n, std::size_t d, Rng& rng) {
  std::vector<Vertex> points(n * d);
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<Vertex>(i / d);
  std::vector<std::vector<Vertex>> adj(n);
  auto adjacent = [&adj](Vertex a, Vertex b) {
    return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
  };
  auto suitable_pair_exists = [&]() {
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (std::size_t j = i + 1; j < points.size(); ++j) {
        if (points[i] != points[j] && !adjacent(points[i], points[j])) return true;
      }
    }
    return false;
  };

  std::vector<Edge> edges;
  edges.reserve(n * d / 2);
  while (!points.empty()) {
    std::size_t misses = 0;
    for (;;) {
      const std::size_t r = points.size();
      std::size_t i = rng.below(r);
      std::size_t j = rng.below(r - 1);
      if (j >= i) ++j;
      const Vertex u = points[i];
      const Vertex v = points[j];
      if (u != v && !adjacent(u, v)) {
        adj[u].push_back(v);
        adj[v].push_back(u);
        edges.push_back(Edge{u, v}.canonical());
        if (i < j) std::swap(i, j);
        points[i] = points.back();
        points.pop_back();
        points[j] = points.back();
        points.pop_back();
        break;
      }
      if (++misses % 64 == 0 && !suitable_pair_exists()) return std::nullopt;
    }
  }
  return edges;
}

}  // namespace

Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (d >= n) {
    throw GeneratorError("random_regular requires d < n (got n=" + std::to_string(n) +
                         ", d=" + std::to_string(d) + ")");
  }
  if ((n * d) % 2 != 0) {
    throw GeneratorError("random_regular requires n*d even (got n=" + std::to_string(n) +
                         ", d=" + std::to_string(d) + ")");
  }
  if (n >= kNoVertex) throw GeneratorError("n too large");
  Rng rng(seed);
  for (int attempt = 1; attempt <= kRandomRegularRestartBudget; ++attempt) {
    if (auto edges = try_pairing(n, d, rng)) return Graph::from_edge_list(n, *edges);
  }
  throw GeneratorError("random_regular: no simple pairing after " +
                       std::to_string(kRandomRegularRestartBudget) + " attempts");
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "petersen", "heawood", "cycle-k", "path-k", "complete-k", "complete-bipartite-a-b", "edgeless-k"};
  return names;
}

namespace {

[[noreturn]] void unknown_fixture(std::string_view name) {
  std::string msg = "unknown fixture \"" + std::string(name) + "\"; supported:";
  for (const auto& s : fixture_names()) msg += " " + s;
  throw GeneratorError(msg);
}

std::optional<std::size_t> parse_size(std::string_view s) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  if (value > 100000) return std::nullopt;
  return value;
}

// Matches "<prefix><k>" and returns k.
std::optional<std::size_t> suffix_param(std::string_view name, std::string_view prefix) {
  if (!name.starts_with(prefix)) return std::nullopt;
  return parse_size(name.substr(prefix.size()));
}

}  // namespace

Graph named_fixture(std::string_view name) {
  std::vector<Edge> edges;
  if (name == "petersen") {
    for (Vertex i = 0; i < 5; ++i) {
      edges.push_back({i, (i + 1) % 5});
      edges.push_back({i, i + 5});
      edges.push_back({i + 5, (i + 2) % 5 + 5});
    }
    return Graph::from_edge_list(10, edges);
  }
  if (name == "heawood") {
    for (Vertex i = 0; i < 14; ++i) {
      edges.push_back({i, (i + 1) % 14});
      if (i % 2 == 0) edges.push_back({i, (i + 5) % 14});
    }
    return Graph::from_edge_list(14, edges);
  }
  if (name.starts_with("complete-bipartite-")) {
    const auto rest = name.substr(std::string_view("complete-bipartite-").size());
    const auto dash = rest.find('-');
    if (dash == std::string_view::npos) unknown_fixture(name);
    const auto a = parse_size(rest.substr(0, dash));
    const auto b = parse_size(rest.substr(dash + 1));
    if (!a || !b) unknown_fixture(name);
    for (Vertex i = 0; i < *a; ++i) {
      for (Vertex j = 0; j < *b; ++j) edges.push_back({i, static_cast<Vertex>(*a + j)});
    }
    return Graph::from_edge_list(*a + *b, edges);
  }
  if (auto k = suffix_param(name, "cycle-")) {
    if (*k < 3) throw GeneratorError("cycle-k requires k >= 3");
    for (Vertex i = 0; i < *k; ++i) edges.push_back({i, static_cast<Vertex>((i + 1) % *k)});
    return Graph::from_edge_list(*k, edges);
  }
  if (auto k = suffix_param(name, "path-")) {
    for (Vertex i = 0; i + 1 < *k; ++i) edges.push_back({i, i + 1});
    return Graph::from_edge_list(*k, edges);
  }
  if (auto k = suffix_param(name, "complete-")) {
    for (Vertex i = 0; i < *k; ++i) {
      for (Vertex j = i + 1; j < *k; ++j) edges.push_back({i, j});
    }
    return Graph::from_edge_list(*k, edges);
  }
  if (auto k = suffix_param(name, "edgeless-")) {
    return Graph::from_edge_list(*k, edges);
  }
  unknown_fixture(name);
}

}  // namespace imatch
