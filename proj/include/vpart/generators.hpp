#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "vpart/graph.hpp"

namespace vpart::gen {

inline Graph empty(std::size_t n) { return Graph(n); }

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  return Graph::from_edges(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  if (n >= 3) e.emplace_back(0, static_cast<Vertex>(n - 1));
  return Graph::from_edges(n, e);
}

/// K_{1,leaves}; the center is vertex 0.
inline Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, e);
}

/// K_{a,b}; sides are 0..a-1 and a..a+b-1.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) e.emplace_back(u, static_cast<Vertex>(a + v));
  return Graph::from_edges(a + b, e);
}

/// K_m minus the edge {m-2, m-1}.
inline Graph near_clique(std::size_t m) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = u + 1; v < m; ++v)
      if (!(u + 2 == m && v + 1 == m)) e.emplace_back(u, v);
  return Graph::from_edges(m, e);
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
  const auto shift = static_cast<Vertex>(g.n());
  std::vector<Edge> e = g.edges();
  for (auto [u, v] : h.edges()) e.emplace_back(u + shift, v + shift);
  return Graph::from_edges(g.n() + h.n(), e);
}

/// Adds `extra` edges to `g` (on the same vertex set, or growing it to `n`).
inline Graph with_edges(const Graph& g, std::size_t n, const std::vector<Edge>& extra) {
  std::vector<Edge> e = g.edges();
  e.insert(e.end(), extra.begin(), extra.end());
  return Graph::from_edges(std::max(n, g.n()), e);
}

inline Graph petersen() {
  return Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

inline Graph icosahedron() {
  return Graph::from_edges(12, {{0, 1}, {0, 5}, {0, 7}, {0, 8}, {0, 11}, {1, 2}, {1, 5}, {1, 6}, {1, 8}, {2, 3},
                                {2, 6}, {2, 8}, {2, 9}, {3, 4}, {3, 6}, {3, 9}, {3, 10}, {4, 5}, {4, 6}, {4, 10},
                                {4, 11}, {5, 6}, {5, 11}, {7, 8}, {7, 9}, {7, 10}, {7, 11}, {8, 9}, {9, 10}, {10, 11}});
}

/// Erdős–Rényi G(n, p).
inline Graph gnp(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

/// Random d-regular simple graph: pairing model that draws only admissible
/// point pairs (Steger–Wormald style), restarting when it gets stuck.
/// Requires n*d even and d < n.
inline Graph random_regular(std::size_t n, std::size_t d, std::mt19937_64& rng) {
  if ((n * d) % 2 != 0 || d >= n) throw std::invalid_argument("no d-regular graph on n vertices");
  for (;;) {
    std::vector<Vertex> points;
    points.reserve(n * d);
    for (Vertex v = 0; v < n; ++v)
      for (std::size_t i = 0; i < d; ++i) points.push_back(v);
    std::vector<VertexSet> adj(n, VertexSet(n));
    bool stuck = false;
    while (!points.empty() && !stuck) {
      bool paired = false;
      for (int attempt = 0; attempt < 64 && !paired; ++attempt) {
        std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
        std::size_t i = pick(rng), j = pick(rng);
        Vertex a = points[i], b = points[j];
        if (i == j || a == b || adj[a].contains(b)) continue;
        adj[a].insert(b);
        adj[b].insert(a);
        if (i < j) std::swap(i, j);
        points.erase(points.begin() + static_cast<std::ptrdiff_t>(i));
        points.erase(points.begin() + static_cast<std::ptrdiff_t>(j));
        paired = true;
      }
      if (!paired) {
        // Only give up once no admissible pair remains.
        stuck = true;
        for (std::size_t i = 0; i < points.size() && stuck; ++i)
          for (std::size_t j = i + 1; j < points.size() && stuck; ++j)
            if (points[i] != points[j] && !adj[points[i]].contains(points[j])) stuck = false;
      }
    }
    if (!stuck) return Graph::from_adjacency(std::move(adj));
  }
}

}  // namespace vpart::gen
