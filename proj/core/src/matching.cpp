#include "imatch/matching.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "imatch/random.hpp"

namespace imatch {

namespace {

constexpr std::uint32_t kUncolored = std::numeric_limits<std::uint32_t>::max();

// Working state for Misra–Gries. at_[v*k + c] is the neighbor joined to v by
// an edge of color c, or kNoVertex when c is free at v.
class MisraGries {
 public:
  explicit MisraGries(const Graph& g)
      : g_(g), k_(static_cast<std::uint32_t>(degree_profile(g).max_degree + 1)) {
    offset_.resize(g.num_vertices() + 1, 0);
    for (Vertex v = 0; v < g.num_vertices(); ++v) offset_[v + 1] = offset_[v] + g.degree(v);
    color_.assign(offset_.back(), kUncolored);
    at_.assign(g.num_vertices() * k_, kNoVertex);
  }

  EdgeColoring run() {
    for (Vertex u = 0; u < g_.num_vertices(); ++u) {
      for (Vertex v : g_.neighbors(u)) {
        if (u < v) color_edge(u, v);
      }
    }
    return collect();
  }

 private:
  std::size_t slot(Vertex u, Vertex w) const {
    const auto nb = g_.neighbors(u);
    return offset_[u] + static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), w) - nb.begin());
  }
  std::uint32_t color(Vertex u, Vertex w) const { return color_[slot(u, w)]; }
  bool is_free(Vertex v, std::uint32_t c) const { return at_[v * k_ + c] == kNoVertex; }

  std::uint32_t lowest_free(Vertex v) const {
    for (std::uint32_t c = 0; c < k_; ++c) {
      if (is_free(v, c)) return c;
    }
    throw std::logic_error("misra_gries: no free color");  // unreachable with Δ+1 colors
  }

  void assign(Vertex u, Vertex w, std::uint32_t c) {
    if (!is_free(u, c) || !is_free(w, c)) throw std::logic_error("misra_gries: color conflict");
    color_[slot(u, w)] = c;
    color_[slot(w, u)] = c;
    at_[u * k_ + c] = w;
    at_[w * k_ + c] = u;
  }

  std::uint32_t uncolor(Vertex u, Vertex w) {
    const std::uint32_t c = color(u, w);
    if (c != kUncolored) {
      at_[u * k_ + c] = kNoVertex;
      at_[w * k_ + c] = kNoVertex;
      color_[slot(u, w)] = kUncolored;
      color_[slot(w, u)] = kUncolored;
    }
    return c;
  }

  std::vector<Vertex> maximal_fan(Vertex u, Vertex v) const {
    std::vector<Vertex> fan{v};
    for (bool grew = true; grew;) {
      grew = false;
      const Vertex last = fan.back();
      for (Vertex w : g_.neighbors(u)) {
        const std::uint32_t c = color(u, w);
        if (c == kUncolored || !is_free(last, c)) continue;
        if (std::find(fan.begin(), fan.end(), w) != fan.end()) continue;
        fan.push_back(w);
        grew = true;
        break;
      }
    }
    return fan;
  }

  // Swaps colors c and d along the maximal c/d-alternating path leaving u.
  // c is free at u, so the path starts with the d-colored edge at u.
  void invert_path(Vertex u, std::uint32_t c, std::uint32_t d) {
    struct Step {
      Vertex a, b;
      std::uint32_t col;
    };
    std::vector<Step> path;
    Vertex cur = u;
    std::uint32_t want = d;
    while (!is_free(cur, want)) {
      const Vertex next = at_[cur * k_ + want];
      path.push_back({cur, next, want});
      cur = next;
      want = want == d ? c : d;
    }
    for (const auto& s : path) uncolor(s.a, s.b);
    for (const auto& s : path) assign(s.a, s.b, s.col == c ? d : c);
  }

  void color_edge(Vertex u, Vertex v) {
    std::vector<Vertex> fan = maximal_fan(u, v);
    const std::uint32_t c = lowest_free(u);
    const std::uint32_t d = lowest_free(fan.back());
    if (c != d) invert_path(u, c, d);
    std::size_t w = 0;
    while (w < fan.size() && !is_free(fan[w], d)) ++w;
    if (w == fan.size()) throw std::logic_error("misra_gries: no fan vertex with free color");
    for (std::size_t i = 0; i < w; ++i) {
      const std::uint32_t next = uncolor(u, fan[i + 1]);
      assign(u, fan[i], next);
    }
    assign(u, fan[w], d);
  }

  EdgeColoring collect() const {
    EdgeColoring out;
    out.edges = g_.edges();
    out.color.reserve(out.edges.size());
    std::vector<std::uint32_t> remap(k_, kUncolored);
    for (const Edge& e : out.edges) {
      const std::uint32_t c = color(e.u, e.v);
      if (c == kUncolored) throw std::logic_error("misra_gries: edge left uncolored");
      remap[c] = 0;
    }
    std::uint32_t next = 0;
    for (auto& r : remap) {
      if (r != kUncolored) r = next++;
    }
    for (const Edge& e : out.edges) out.color.push_back(remap[color(e.u, e.v)]);
    out.num_colors = next;
    return out;
  }

  const Graph& g_;
  std::uint32_t k_;
  std::vector<std::size_t> offset_;
  std::vector<std::uint32_t> color_;
  std::vector<Vertex> at_;
};

}  // namespace

bool is_proper_edge_coloring(const Graph& g, const EdgeColoring& c) {
  if (c.edges != g.edges() || c.color.size() != c.edges.size()) return false;
  std::vector<std::vector<std::uint32_t>> seen(g.num_vertices());
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    if (c.color[i] >= c.num_colors) return false;
    seen[c.edges[i].u].push_back(c.color[i]);
    seen[c.edges[i].v].push_back(c.color[i]);
  }
  for (auto& s : seen) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  }
  return true;
}

EdgeColoring misra_gries_edge_color(const Graph& g) {
  if (g.num_edges() == 0) {
    EdgeColoring out;
    return out;
  }
  return MisraGries(g).run();
}

Matching extract_matching(const EdgeColoring& coloring) {
  std::vector<std::size_t> class_size(coloring.num_colors, 0);
  for (auto c : coloring.color) ++class_size[c];
  if (class_size.empty()) return {};
  const auto best = static_cast<std::uint32_t>(
      std::max_element(class_size.begin(), class_size.end()) - class_size.begin());
  Matching m;
  m.reserve(class_size[best]);
  for (std::size_t i = 0; i < coloring.edges.size(); ++i) {
    if (coloring.color[i] == best) m.push_back(coloring.edges[i]);
  }
  return m;
}

Matching greedy_maximal_matching(const Graph& g, std::uint64_t seed) {
  auto edges = g.edges();
  Rng rng(seed);
  rng.shuffle(edges.begin(), edges.end());
  std::vector<char> used(g.num_vertices(), 0);
  Matching m;
  for (const Edge& e : edges) {
    if (used[e.u] || used[e.v]) continue;
    used[e.u] = used[e.v] = 1;
    m.push_back(e);
  }
  std::sort(m.begin(), m.end());
  return m;
}

ContractedGraph contract_matching(const Graph& g, std::span<const Edge> m) {
  ContractedGraph cg;
  cg.inv_rep.assign(g.num_vertices(), kNoVertex);
  cg.rep.reserve(m.size());
  for (const Edge& raw : m) {
    const Edge e = raw.canonical();
    if (!g.has_edge(e.u, e.v)) {
      throw GraphError("matching edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                       ") is not in the graph");
    }
    if (cg.inv_rep[e.u] != kNoVertex || cg.inv_rep[e.v] != kNoVertex) {
      throw GraphError("matching edges share a vertex");
    }
    const auto x = static_cast<Vertex>(cg.rep.size());
    cg.inv_rep[e.u] = x;
    cg.inv_rep[e.v] = x;
    cg.rep.push_back(e);
  }
  std::vector<Edge> edges;
  for (Vertex x = 0; x < cg.rep.size(); ++x) {
    for (Vertex end : {cg.rep[x].u, cg.rep[x].v}) {
      for (Vertex w : g.neighbors(end)) {
        const Vertex y = cg.inv_rep[w];
        if (y != kNoVertex && x < y) edges.push_back({x, y});
      }
    }
  }
  cg.graph = Graph::from_edge_list(cg.rep.size(), edges);
  return cg;
}

Matching pull_back(const ContractedGraph& cg, std::span<const Vertex> set) {
  Matching out;
  out.reserve(set.size());
  for (Vertex x : set) out.push_back(cg.rep.at(x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace imatch
