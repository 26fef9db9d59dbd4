#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vpart/errors.hpp"
#include "vpart/vertex_set.hpp"

namespace vpart {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n, VertexSet(n)), lists_(n) {}

  /// Builds from an edge list; rejects self-loops and repeated edges.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) throw Error(ErrorKind::MalformedInput, "edge endpoint out of range");
      if (u == v) throw Error(ErrorKind::LoopOrDuplicateEdge, "self-loop at vertex " + std::to_string(u), {"loop", {u}});
      if (g.adj_[u].contains(v))
        throw Error(ErrorKind::LoopOrDuplicateEdge, "duplicate edge " + std::to_string(u) + "-" + std::to_string(v),
                    {"duplicate", {u, v}});
      g.adj_[u].insert(v);
      g.adj_[v].insert(u);
      ++g.m_;
    }
    g.finish();
    return g;
  }
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Builds from symmetric neighbor sets (no validation beyond symmetry repair).
  static Graph from_adjacency(std::vector<VertexSet> adj) {
    Graph g;
    g.adj_ = std::move(adj);
    g.lists_.resize(g.adj_.size());
    for (std::size_t v = 0; v < g.adj_.size(); ++v) {
      g.adj_[v].erase(static_cast<Vertex>(v));
      for (Vertex u : g.adj_[v]) g.adj_[u].insert(static_cast<Vertex>(v));
    }
    std::size_t twice = 0;
    for (auto& s : g.adj_) twice += s.size();
    g.m_ = twice / 2;
    g.finish();
    return g;
  }

  std::size_t n() const { return adj_.size(); }
  std::size_t m() const { return m_; }
  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  std::span<const Vertex> neighbor_list(Vertex v) const { return lists_[v]; }
  std::size_t degree(Vertex v) const { return lists_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  VertexSet vertices() const { return VertexSet::full(n()); }
  VertexSet empty_set() const { return VertexSet(n()); }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (auto& l : lists_) d = std::max(d, l.size());
    return d;
  }
  std::size_t min_degree() const {
    if (lists_.empty()) return 0;
    std::size_t d = lists_[0].size();
    for (auto& l : lists_) d = std::min(d, l.size());
    return d;
  }

  /// Edges (u < v) in ascending order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n(); ++u)
      for (Vertex v : lists_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  /// Number of edges with both ends in `s`.
  std::size_t edges_within(const VertexSet& s) const {
    std::size_t twice = 0;
    for (Vertex v : s) twice += adj_[v].intersection_size(s);
    return twice / 2;
  }

  /// Degree of `v` inside H[s].
  std::size_t degree_within(Vertex v, const VertexSet& s) const { return adj_[v].intersection_size(s); }

  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

 private:
  void finish() {
    for (std::size_t v = 0; v < adj_.size(); ++v) lists_[v] = adj_[v].to_vector();
  }

  std::vector<VertexSet> adj_;
  std::vector<std::vector<Vertex>> lists_;
  std::size_t m_ = 0;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // new id -> old id
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.n()) throw std::invalid_argument("vertex set not bound to this graph");
  InducedSubgraph out;
  out.to_parent = s.to_vector();
  std::vector<Vertex> to_child(g.n(), 0);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) to_child[out.to_parent[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    Vertex u = out.to_parent[i];
    for (Vertex v : g.neighbor_list(u))
      if (u < v && s.contains(v)) edges.emplace_back(static_cast<Vertex>(i), to_child[v]);
  }
  out.graph = Graph::from_edges(out.to_parent.size(), edges);
  return out;
}

struct DegreeSummary {
  std::size_t min = 0;
  std::size_t max = 0;
  std::vector<std::size_t> per_vertex;
};

inline DegreeSummary degrees(const Graph& g) {
  if (g.n() == 0) throw Error(ErrorKind::EmptyGraph, "degrees of the empty graph");
  DegreeSummary d;
  d.per_vertex.reserve(g.n());
  for (Vertex v = 0; v < g.n(); ++v) d.per_vertex.push_back(g.degree(v));
  d.min = *std::min_element(d.per_vertex.begin(), d.per_vertex.end());
  d.max = *std::max_element(d.per_vertex.begin(), d.per_vertex.end());
  return d;
}

/// Vertices reachable from `start` inside `within`.
inline VertexSet component_of(const Graph& g, Vertex start, const VertexSet& within) {
  VertexSet seen(g.n());
  if (!within.contains(start)) return seen;
  std::vector<Vertex> stack{start};
  seen.insert(start);
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbor_list(u))
      if (within.contains(w) && !seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
  }
  return seen;
}

/// Components of H[within], ordered by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (auto v = left.first()) {
    auto c = component_of(g, *v, left);
    left -= c;
    out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<VertexSet> connected_components(const Graph& g) { return connected_components(g, g.vertices()); }

inline bool is_connected(const Graph& g) { return g.n() == 0 || connected_components(g).size() == 1; }

/// Disjoint union with every cross edge added; vertices of `h` are shifted by g.n().
inline Graph join(const Graph& g, const Graph& h) {
  const auto shift = static_cast<Vertex>(g.n());
  std::vector<Edge> edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(u + shift, v + shift);
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = 0; v < h.n(); ++v) edges.emplace_back(u, v + shift);
  return Graph::from_edges(g.n() + h.n(), edges);
}

/// Complement graph.
inline Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph::from_edges(g.n(), edges);
}

}  // namespace vpart
