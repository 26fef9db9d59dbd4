#pragma once

// Deliberately naive reference computations for tests. Subsets are uint32
// masks over at most 20 vertices.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "vpart/graph.hpp"

namespace brute {

using vpart::Graph;
using vpart::Vertex;
using vpart::VertexSet;

inline std::size_t edges_in(const Graph& g, std::uint32_t s) {
  std::size_t e = 0;
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if ((s >> u & 1) && (s >> v & 1) && g.adjacent(u, v)) ++e;
  return e;
}

inline std::size_t deg_in(const Graph& g, Vertex v, std::uint32_t s) {
  std::size_t d = 0;
  for (Vertex u = 0; u < g.n(); ++u)
    if ((s >> u & 1) && g.adjacent(u, v)) ++d;
  return d;
}

inline std::uint32_t mask_of(const VertexSet& s) {
  std::uint32_t m = 0;
  for (Vertex v : s) m |= 1u << v;
  return m;
}

inline VertexSet set_of(std::uint32_t m, std::size_t n) {
  VertexSet s(n);
  for (Vertex v = 0; v < n; ++v)
    if (m >> v & 1) s.insert(v);
  return s;
}

/// (q+1)-subsets of `within` spanning at least C(q+1,2) - 1 edges.
inline std::size_t near_clique_count(const Graph& g, std::size_t q, std::uint32_t within) {
  std::size_t c = 0;
  const std::size_t need = (q + 1) * q / 2 - 1;
  for (std::uint32_t s = within;; s = (s - 1) & within) {
    if (static_cast<std::size_t>(std::popcount(s)) == q + 1 && edges_in(g, s) >= need) ++c;
    if (s == 0) break;
  }
  return c;
}

inline bool is_clique(const Graph& g, std::uint32_t s) {
  const std::size_t k = std::popcount(s);
  return edges_in(g, s) == k * (k - 1) / 2;
}

/// Max over nonempty subsets of the minimum induced degree.
inline std::size_t degeneracy(const Graph& g) {
  std::size_t best = 0;
  for (std::uint32_t s = 1; s < (1u << g.n()); ++s) {
    std::size_t mn = g.n();
    for (Vertex v = 0; v < g.n(); ++v)
      if (s >> v & 1) mn = std::min(mn, deg_in(g, v, s));
    best = std::max(best, mn);
  }
  return best;
}

/// Union-find cycle detection on H[s].
inline bool has_cycle(const Graph& g, std::uint32_t s) {
  std::vector<Vertex> parent(g.n());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : g.edges()) {
    if (!(s >> u & 1) || !(s >> v & 1)) continue;
    Vertex a = find(u), b = find(v);
    if (a == b) return true;
    parent[a] = b;
  }
  return false;
}

inline bool has_k_clique(const Graph& g, std::size_t k, std::uint32_t within) {
  for (std::uint32_t s = within;; s = (s - 1) & within) {
    if (static_cast<std::size_t>(std::popcount(s)) == k && is_clique(g, s)) return true;
    if (s == 0) break;
  }
  return k == 0;
}

inline std::size_t max_degree_in(const Graph& g, std::uint32_t s) {
  std::size_t d = 0;
  for (Vertex v = 0; v < g.n(); ++v)
    if (s >> v & 1) d = std::max(d, deg_in(g, v, s));
  return d;
}

/// q-cliques inside s absent or pairwise disjoint.
inline bool cliques_disjoint(const Graph& g, std::size_t q, std::uint32_t s) {
  std::vector<std::uint32_t> cl;
  for (std::uint32_t x = s;; x = (x - 1) & s) {
    if (static_cast<std::size_t>(std::popcount(x)) == q && is_clique(g, x)) cl.push_back(x);
    if (x == 0) break;
  }
  for (std::size_t i = 0; i < cl.size(); ++i)
    for (std::size_t j = i + 1; j < cl.size(); ++j)
      if (cl[i] & cl[j]) return false;
  return true;
}

}  // namespace brute
