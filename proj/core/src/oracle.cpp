#include "imatch/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace imatch::oracle {

namespace {

using Mask = std::uint64_t;

void require_size(const Graph& g, std::size_t limit, const char* what) {
  const std::size_t cap = std::min<std::size_t>(limit, 64);
  if (g.num_vertices() > cap) {
    throw OracleLimitError(std::string(what) + ": n = " + std::to_string(g.num_vertices()) +
                           " exceeds the oracle limit " + std::to_string(cap));
  }
}

Mask bit(Vertex v) { return Mask{1} << v; }

std::vector<Mask> neighbor_masks(const Graph& g) {
  std::vector<Mask> out(g.num_vertices(), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Vertex w : g.neighbors(v)) out[v] |= bit(w);
  }
  return out;
}

struct InducedMatchingSearch {
  const std::vector<Mask>& nbr;
  std::vector<Edge> current;
  std::vector<Edge> best;

  void run(Mask free) {
    if (current.size() > best.size()) best = current;
    if (current.size() + static_cast<std::size_t>(std::popcount(free)) / 2 <= best.size()) return;
    // Drop free vertices with no free neighbor; they cannot be matched.
    Mask live = 0;
    for (Mask rest = free; rest != 0; rest &= rest - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(rest));
      if (nbr[v] & free) live |= bit(v);
    }
    if (live == 0) return;
    if (current.size() + static_cast<std::size_t>(std::popcount(live)) / 2 <= best.size()) return;
    const auto v = static_cast<Vertex>(std::countr_zero(live));
    const Mask closed_v = nbr[v] | bit(v);
    for (Mask cand = nbr[v] & live; cand != 0; cand &= cand - 1) {
      const auto w = static_cast<Vertex>(std::countr_zero(cand));
      current.push_back(Edge{v, w}.canonical());
      run(live & ~(closed_v | nbr[w] | bit(w)));
      current.pop_back();
    }
    run(live & ~bit(v));
  }
};

struct IndependentSetSearch {
  const std::vector<Mask>& nbr;
  Mask current = 0;
  Mask best = 0;

  void run(Mask free) {
    if (std::popcount(current) > std::popcount(best)) best = current;
    if (free == 0 || std::popcount(current) + std::popcount(free) <= std::popcount(best)) return;
    const auto v = static_cast<Vertex>(std::countr_zero(free));
    current |= bit(v);
    run(free & ~(nbr[v] | bit(v)));
    current &= ~bit(v);
    run(free & ~bit(v));
  }
};

bool has_joined_bset(const std::vector<Mask>& nbr, std::size_t B, Vertex start, std::size_t chosen, Mask common) {
  if (static_cast<std::size_t>(std::popcount(common)) < B) return false;
  if (chosen == B) return true;
  for (Vertex v = start; v < nbr.size(); ++v) {
    if (nbr.size() - v < B - chosen) break;
    if (has_joined_bset(nbr, B, v + 1, chosen + 1, common & nbr[v])) return true;
  }
  return false;
}

}  // namespace

std::pair<std::size_t, Matching> max_induced_matching_bf(const Graph& g, const OracleLimit& limit) {
  require_size(g, limit.induced_matching, "max_induced_matching_bf");
  const auto nbr = neighbor_masks(g);
  InducedMatchingSearch search{nbr, {}, {}};
  const Mask all = g.num_vertices() == 64 ? ~Mask{0} : (Mask{1} << g.num_vertices()) - 1;
  search.run(all);
  std::sort(search.best.begin(), search.best.end());
  return {search.best.size(), search.best};
}

std::pair<std::size_t, VertexSet> max_independent_set_bf(const Graph& g, const OracleLimit& limit) {
  require_size(g, limit.independent_set, "max_independent_set_bf");
  const auto nbr = neighbor_masks(g);
  IndependentSetSearch search{nbr};
  const Mask all = g.num_vertices() == 64 ? ~Mask{0} : (Mask{1} << g.num_vertices()) - 1;
  search.run(all);
  VertexSet witness;
  for (Mask rest = search.best; rest != 0; rest &= rest - 1) {
    witness.push_back(static_cast<Vertex>(std::countr_zero(rest)));
  }
  return {witness.size(), witness};
}

std::size_t count_triangles_bf(const Graph& g, const OracleLimit& limit) {
  require_size(g, limit.triangles, "count_triangles_bf");
  const auto n = static_cast<Vertex>(g.num_vertices());
  std::size_t count = 0;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!g.has_edge(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (g.has_edge(a, c) && g.has_edge(b, c)) ++count;
      }
    }
  }
  return count;
}

bool contains_kbb_bf(const Graph& g, std::size_t B, const OracleLimit& limit) {
  require_size(g, limit.kbb, "contains_kbb_bf");
  if (B < 1) throw std::invalid_argument("B must be at least 1");
  const auto nbr = neighbor_masks(g);
  // The common neighborhood of a B-set never meets the set itself, so it is
  // enough to find B vertices with at least B common neighbors.
  return has_joined_bset(nbr, B, 0, 0, ~Mask{0});
}

bool is_c4_free_bf(const Graph& g, const OracleLimit& limit) { return !contains_kbb_bf(g, 2, limit); }

}  // namespace imatch::oracle
