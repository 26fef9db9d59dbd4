#pragma once

#include <algorithm>
#include <charconv>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vpart/generators.hpp"
#include "vpart/graph.hpp"

namespace vpart {

/// The forbidden family: explicit connected pattern graphs, or the implicit
/// family of every graph with minimum degree at least t.
class FreenessSpec {
 public:
  enum class Kind { Patterns, MinDegreeCore };

  /// `declared_min_degree` defaults to the smallest pattern minimum degree.
  static FreenessSpec patterns(std::vector<Graph> pats, std::optional<std::size_t> declared_min_degree = std::nullopt,
                               std::string label = {}) {
    if (pats.empty()) throw Error(ErrorKind::ConfigError, "pattern family must be nonempty");
    std::size_t lowest = pats.front().min_degree();
    for (auto& p : pats) {
      if (p.n() == 0) throw Error(ErrorKind::ConfigError, "pattern graphs must have at least one vertex");
      if (!is_connected(p)) throw Error(ErrorKind::ConfigError, "pattern graphs must be connected");
      lowest = std::min(lowest, p.min_degree());
    }
    const std::size_t declared = declared_min_degree.value_or(lowest);
    if (declared > lowest)
      throw Error(ErrorKind::ConfigError, "a pattern has minimum degree " + std::to_string(lowest) +
                                              " below the declared " + std::to_string(declared));
    FreenessSpec s;
    s.kind_ = Kind::Patterns;
    s.patterns_ = std::move(pats);
    s.declared_ = declared;
    s.label_ = label.empty() ? "patterns:" + std::to_string(s.patterns_.size()) : std::move(label);
    for (auto& p : s.patterns_) s.clique_sizes_.push_back(p.m() * 2 == p.n() * (p.n() - 1) ? p.n() : 0);
    return s;
  }

  static FreenessSpec clique(std::size_t k) {
    if (k < 1) throw Error(ErrorKind::ConfigError, "clique size must be at least 1");
    return patterns({gen::complete(k)}, k - 1, "clique:" + std::to_string(k));
  }

  static FreenessSpec min_degree_core(std::size_t t) {
    if (t < 1) throw Error(ErrorKind::ConfigError, "core threshold must be at least 1");
    FreenessSpec s;
    s.kind_ = Kind::MinDegreeCore;
    s.core_ = t;
    s.declared_ = t;
    s.label_ = "core:" + std::to_string(t);
    return s;
  }

  /// Named families: "clique:k", "core:t", "cycle-family" (= core:2).
  static FreenessSpec parse(std::string_view name) {
    auto number = [&](std::string_view tail) {
      std::size_t v = 0;
      auto [p, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), v);
      if (ec != std::errc{} || p != tail.data() + tail.size())
        throw Error(ErrorKind::ConfigError, "bad family parameter in '" + std::string(name) + "'");
      return v;
    };
    if (name == "cycle-family") return min_degree_core(2);
    if (name.starts_with("clique:")) return clique(number(name.substr(7)));
    if (name.starts_with("core:")) return min_degree_core(number(name.substr(5)));
    throw Error(ErrorKind::ConfigError, "unknown family '" + std::string(name) + "'");
  }

  Kind kind() const { return kind_; }
  bool is_core() const { return kind_ == Kind::MinDegreeCore; }
  const std::vector<Graph>& pattern_graphs() const { return patterns_; }
  std::size_t core_threshold() const { return core_; }
  std::size_t declared_min_degree() const { return declared_; }
  const std::string& label() const { return label_; }
  /// Size of pattern i when it is complete, else 0.
  std::size_t clique_size(std::size_t i) const { return clique_sizes_[i]; }

 private:
  Kind kind_ = Kind::Patterns;
  std::vector<Graph> patterns_;
  std::vector<std::size_t> clique_sizes_;
  std::size_t core_ = 0;
  std::size_t declared_ = 0;
  std::string label_;
};

// ---------------------------------------------------------------------------
// Cliques

namespace detail {

template <class Fn>
bool clique_rec(const Graph& g, std::size_t k, std::vector<Vertex>& r, VertexSet cand, Fn& fn) {
  if (r.size() == k) return fn(static_cast<const std::vector<Vertex>&>(r));
  if (r.size() + cand.size() < k) return true;
  VertexSet rest = cand;
  for (Vertex v : cand) {
    rest.erase(v);
    if (r.size() + 1 + rest.size() < k) break;
    r.push_back(v);
    bool go = clique_rec(g, k, r, rest & g.neighbors(v), fn);
    r.pop_back();
    if (!go) return false;
  }
  return true;
}

}  // namespace detail

/// Visits every k-clique of H[within] as an ascending vertex list, in
/// lexicographic order. `fn` returns false to stop early.
template <class Fn>
void for_each_k_clique(const Graph& g, const VertexSet& within, std::size_t k, Fn&& fn) {
  std::vector<Vertex> r;
  r.reserve(k);
  detail::clique_rec(g, k, r, within, fn);
}

inline std::vector<VertexSet> list_k_cliques(const Graph& g, std::size_t k, const VertexSet& within) {
  if (k < 1) throw std::invalid_argument("clique size must be at least 1");
  std::vector<VertexSet> out;
  for_each_k_clique(g, within, k, [&](const std::vector<Vertex>& c) {
    out.push_back(VertexSet::from_range(g.n(), c));
    return true;
  });
  return out;
}
inline std::vector<VertexSet> list_k_cliques(const Graph& g, std::size_t k) { return list_k_cliques(g, k, g.vertices()); }

inline bool has_k_clique(const Graph& g, std::size_t k, const VertexSet& within) {
  bool found = false;
  for_each_k_clique(g, within, k, [&](const std::vector<Vertex>&) {
    found = true;
    return false;
  });
  return found;
}

namespace detail {

template <class Fn>
void bron_kerbosch(const Graph& g, std::vector<Vertex>& r, VertexSet p, VertexSet x, Fn& fn) {
  if (p.empty()) {
    if (x.empty()) fn(static_cast<const std::vector<Vertex>&>(r));
    return;
  }
  // Tomita pivot: maximize |P ∩ N(u)| over u in P ∪ X.
  Vertex pivot = *p.first();
  std::size_t best = 0;
  for (const VertexSet* side : {&p, &x})
    for (Vertex u : *side) {
      std::size_t c = p.intersection_size(g.neighbors(u));
      if (c > best || (c == best && u < pivot)) best = c, pivot = u;
    }
  VertexSet branch = p - g.neighbors(pivot);
  for (Vertex v : branch) {
    r.push_back(v);
    bron_kerbosch(g, r, p & g.neighbors(v), x & g.neighbors(v), fn);
    r.pop_back();
    p.erase(v);
    x.insert(v);
  }
}

}  // namespace detail

/// Bron–Kerbosch with pivoting over H[within]; each maximal clique is passed
/// as a vertex list in insertion order.
template <class Fn>
void for_each_maximal_clique(const Graph& g, const VertexSet& within, Fn&& fn) {
  std::vector<Vertex> r;
  detail::bron_kerbosch(g, r, within, VertexSet(g.n()), fn);
}

inline std::size_t clique_number(const Graph& g, const VertexSet& within) {
  if (within.empty()) return 0;
  std::size_t best = 0;
  for_each_maximal_clique(g, within, [&](const std::vector<Vertex>& c) { best = std::max(best, c.size()); });
  return best;
}

inline std::size_t clique_number(const Graph& g) {
  if (g.n() == 0) throw Error(ErrorKind::EmptyGraph, "clique number of the empty graph");
  return clique_number(g, g.vertices());
}

/// Every clique of size ω(H[within]), lexicographically ordered.
inline std::vector<VertexSet> maximum_cliques(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  std::size_t best = 0;
  for_each_maximal_clique(g, within, [&](const std::vector<Vertex>& c) {
    if (c.size() < best) return;
    if (c.size() > best) out.clear(), best = c.size();
    out.push_back(VertexSet::from_range(g.n(), c));
  });
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return lex_less(a, b); });
  return out;
}
inline std::vector<VertexSet> maximum_cliques(const Graph& g) { return maximum_cliques(g, g.vertices()); }

// ---------------------------------------------------------------------------
// Near-cliques: m-vertex sets inducing at least C(m,2)-1 edges.

struct NearCliqueWitness {
  VertexSet w;
  std::optional<std::pair<Vertex, Vertex>> missing_pair;

  /// The clique part of the witness, the pool of swap-in candidates. A full
  /// clique has no distinguished pair, so every member qualifies.
  VertexSet b_set() const {
    VertexSet b = w;
    if (missing_pair) {
      b.erase(missing_pair->first);
      b.erase(missing_pair->second);
    }
    return b;
  }
};

/// Visits every near-clique of size m (m >= 2) in H[within]. Full m-cliques
/// come first, then sets missing exactly one edge. `fn` returns false to stop.
template <class Fn>
void for_each_near_clique(const Graph& g, const VertexSet& within, std::size_t m, Fn&& fn) {
  if (m < 2) throw std::invalid_argument("near-clique size must be at least 2");
  bool go = true;
  for_each_k_clique(g, within, m, [&](const std::vector<Vertex>& c) {
    go = fn(NearCliqueWitness{VertexSet::from_range(g.n(), c), std::nullopt});
    return go;
  });
  if (!go) return;
  // A set missing exactly the pair {u, w} is determined by its clique part B.
  for_each_k_clique(g, within, m - 2, [&](const std::vector<Vertex>& b) {
    VertexSet common = within;
    for (Vertex x : b) common &= g.neighbors(x);
    for (Vertex u : common)
      for (Vertex w : common) {
        if (w <= u || g.adjacent(u, w)) continue;
        VertexSet s = VertexSet::from_range(g.n(), b);
        s.insert(u);
        s.insert(w);
        go = fn(NearCliqueWitness{std::move(s), std::make_pair(u, w)});
        if (!go) return false;
      }
    return true;
  });
}

inline std::size_t count_near_cliques_within(const Graph& g, const VertexSet& within, std::size_t q) {
  if (q < 2) throw std::invalid_argument("near-clique order q must be at least 2");
  const std::size_t m = q + 1;
  std::size_t count = 0;
  for_each_k_clique(g, within, m, [&](const std::vector<Vertex>&) {
    ++count;
    return true;
  });
  for_each_k_clique(g, within, m - 2, [&](const std::vector<Vertex>& b) {
    VertexSet common = within;
    for (Vertex x : b) common &= g.neighbors(x);
    const std::size_t c = common.size();
    count += c * (c - (c > 0 ? 1 : 0)) / 2 - g.edges_within(common);
    return true;
  });
  return count;
}

/// Witnesses of K_{q+1}∖e copies (subset convention) in H[within], sorted by
/// their ascending member lists.
inline std::vector<NearCliqueWitness> near_clique_witnesses(const Graph& g, const VertexSet& within, std::size_t q) {
  if (q < 2) throw std::invalid_argument("near-clique order q must be at least 2");
  std::vector<NearCliqueWitness> out;
  for_each_near_clique(g, within, q + 1, [&](NearCliqueWitness w) {
    out.push_back(std::move(w));
    return true;
  });
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return lex_less(a.w, b.w); });
  return out;
}

struct NearCliqueCount {
  std::size_t count = 0;
  std::vector<NearCliqueWitness> witnesses;
};

inline NearCliqueCount count_near_cliques(const Graph& g, std::size_t q) {
  auto w = near_clique_witnesses(g, g.vertices(), q);
  return {w.size(), std::move(w)};
}

/// A d-vertex set spanning K_d∖e as a subgraph, if any.
inline std::optional<NearCliqueWitness> find_kd_minus_e(const Graph& g, std::size_t d) {
  if (d < 2) throw std::invalid_argument("d must be at least 2");
  std::optional<NearCliqueWitness> found;
  for_each_near_clique(g, g.vertices(), d, [&](NearCliqueWitness w) {
    found = std::move(w);
    return false;
  });
  return found;
}

// ---------------------------------------------------------------------------
// Cores and degeneracy

/// Maximal subset of `within` whose induced subgraph has minimum degree >= t.
inline VertexSet t_core(const Graph& g, std::size_t t, const VertexSet& within) {
  VertexSet alive = within;
  std::vector<std::size_t> deg(g.n(), 0);
  std::vector<Vertex> queue;
  for (Vertex v : alive) {
    deg[v] = g.degree_within(v, alive);
    if (deg[v] < t) queue.push_back(v);
  }
  for (Vertex v : queue) alive.erase(v);
  while (!queue.empty()) {
    Vertex v = queue.back();
    queue.pop_back();
    for (Vertex u : g.neighbor_list(v))
      if (alive.contains(u) && --deg[u] < t) {
        alive.erase(u);
        queue.push_back(u);
      }
  }
  return alive;
}
inline VertexSet t_core(const Graph& g, std::size_t t) {
  if (t < 1) throw std::invalid_argument("core threshold must be at least 1");
  return t_core(g, t, g.vertices());
}

struct Degeneracy {
  std::size_t d = 0;
  std::vector<Vertex> order;  // elimination order; each vertex has <= d later neighbors
};

/// Smallest-last elimination over H[within].
inline Degeneracy degeneracy(const Graph& g, const VertexSet& within) {
  Degeneracy out;
  VertexSet alive = within;
  std::vector<std::size_t> deg(g.n(), 0);
  for (Vertex v : alive) deg[v] = g.degree_within(v, alive);
  while (!alive.empty()) {
    Vertex best = *alive.first();
    for (Vertex v : alive)
      if (deg[v] < deg[best]) best = v;
    out.d = std::max(out.d, deg[best]);
    out.order.push_back(best);
    alive.erase(best);
    for (Vertex u : g.neighbor_list(best))
      if (alive.contains(u)) --deg[u];
  }
  return out;
}

inline Degeneracy degeneracy(const Graph& g) {
  if (g.n() == 0) throw Error(ErrorKind::EmptyGraph, "degeneracy of the empty graph");
  return degeneracy(g, g.vertices());
}

// ---------------------------------------------------------------------------
// Subgraph containment (not induced)

namespace detail {

class SubgraphMatcher {
 public:
  SubgraphMatcher(const Graph& host, const Graph& pattern, const VertexSet& within)
      : host_(host), pat_(pattern), within_(within), map_(pattern.n(), 0), used_(host.n()), host_deg_(host.n(), 0) {
    for (Vertex x : within_) host_deg_[x] = host_.degree_within(x, within_);
  }

  /// Visits embeddings; if `anchor` is set, the first pattern vertex in the
  /// order is `first` and it must map to `anchor`.
  template <class Fn>
  bool run(Vertex first, std::optional<Vertex> anchor, Fn& fn) {
    build_order(first);
    anchor_ = anchor;
    return extend(0, fn);
  }

  /// Pattern vertex with the highest degree (ties: smallest id).
  Vertex default_start() const {
    Vertex s = 0;
    for (Vertex u = 1; u < pat_.n(); ++u)
      if (pat_.degree(u) > pat_.degree(s)) s = u;
    return s;
  }

 private:
  void build_order(Vertex first) {
    order_.assign(1, first);
    back_.assign(1, {});
    VertexSet placed(pat_.n());
    placed.insert(first);
    while (order_.size() < pat_.n()) {
      Vertex best = 0;
      long best_key = -1;
      for (Vertex u = 0; u < pat_.n(); ++u) {
        if (placed.contains(u)) continue;
        long key = static_cast<long>(pat_.neighbors(u).intersection_size(placed)) * 1024 + static_cast<long>(pat_.degree(u));
        if (key > best_key) best_key = key, best = u;
      }
      std::vector<Vertex> back;
      for (Vertex w : pat_.neighbor_list(best))
        if (placed.contains(w)) back.push_back(w);
      placed.insert(best);
      order_.push_back(best);
      back_.push_back(std::move(back));
    }
  }

  template <class Fn>
  bool extend(std::size_t i, Fn& fn) {
    if (i == order_.size()) return fn(static_cast<const std::vector<Vertex>&>(map_));
    const Vertex u = order_[i];
    VertexSet cand = within_ - used_;
    if (i == 0 && anchor_) {
      if (!cand.contains(*anchor_)) return true;
      cand = VertexSet(host_.n());
      cand.insert(*anchor_);
    }
    for (Vertex w : back_[i]) cand &= host_.neighbors(map_[w]);
    for (Vertex x : cand) {
      if (host_deg_[x] < pat_.degree(u)) continue;
      map_[u] = x;
      used_.insert(x);
      bool go = extend(i + 1, fn);
      used_.erase(x);
      if (!go) return false;
    }
    return true;
  }

  const Graph& host_;
  const Graph& pat_;
  const VertexSet& within_;
  std::vector<Vertex> order_;
  std::vector<std::vector<Vertex>> back_;
  std::vector<Vertex> map_;
  VertexSet used_;
  std::vector<std::size_t> host_deg_;
  std::optional<Vertex> anchor_;
};

}  // namespace detail

/// An injective map pattern -> host preserving pattern edges inside H[within],
/// optionally required to use `anchor`. Entry i is the image of pattern vertex i.
inline std::optional<std::vector<Vertex>> contains_subgraph(const Graph& host, const Graph& pattern,
                                                            const VertexSet& within,
                                                            std::optional<Vertex> anchor = std::nullopt) {
  if (pattern.n() == 0) return std::vector<Vertex>{};
  if (pattern.n() > within.size()) return std::nullopt;
  std::optional<std::vector<Vertex>> found;
  auto keep = [&](const std::vector<Vertex>& m) {
    found = m;
    return false;
  };
  detail::SubgraphMatcher matcher(host, pattern, within);
  if (!anchor) {
    matcher.run(matcher.default_start(), std::nullopt, keep);
  } else {
    for (Vertex a = 0; a < pattern.n() && !found; ++a) matcher.run(a, anchor, keep);
  }
  return found;
}

inline std::optional<std::vector<Vertex>> contains_subgraph(const Graph& host, const Graph& pattern) {
  return contains_subgraph(host, pattern, host.vertices());
}

/// Distinct vertex sets of pattern copies inside H[within], sorted.
inline std::vector<VertexSet> copy_vertex_sets(const Graph& host, const Graph& pattern, const VertexSet& within) {
  std::vector<VertexSet> out;
  if (pattern.m() * 2 == pattern.n() * (pattern.n() - 1)) return list_k_cliques(host, pattern.n(), within);
  detail::SubgraphMatcher matcher(host, pattern, within);
  auto keep = [&](const std::vector<Vertex>& m) {
    out.push_back(VertexSet::from_range(host.n(), m));
    return true;
  };
  matcher.run(matcher.default_start(), std::nullopt, keep);
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return lex_less(a, b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Freeness

inline bool is_free(const Graph& g, const VertexSet& within, const FreenessSpec& spec) {
  if (spec.is_core()) return t_core(g, spec.core_threshold(), within).empty();
  const auto& pats = spec.pattern_graphs();
  for (std::size_t i = 0; i < pats.size(); ++i) {
    if (auto k = spec.clique_size(i)) {
      if (has_k_clique(g, k, within)) return false;
    } else if (contains_subgraph(g, pats[i], within)) {
      return false;
    }
  }
  return true;
}

inline bool is_free(const Graph& g, const FreenessSpec& spec) { return is_free(g, g.vertices(), spec); }

/// Whether `base ∪ {v}` is free, given that `base` already is: only copies
/// through v need checking.
inline bool stays_free_adding(const Graph& g, const VertexSet& base, Vertex v, const FreenessSpec& spec) {
  VertexSet within = base.with(v);
  if (spec.is_core()) return !t_core(g, spec.core_threshold(), within).contains(v);
  const auto& pats = spec.pattern_graphs();
  for (std::size_t i = 0; i < pats.size(); ++i) {
    if (auto k = spec.clique_size(i)) {
      if (k == 1) return false;
      if (has_k_clique(g, k - 1, base & g.neighbors(v))) return false;
    } else if (contains_subgraph(g, pats[i], within, v)) {
      return false;
    }
  }
  return true;
}

/// Whether H[s] is itself a member of the family (a pattern copy on exactly
/// these vertices, or a graph of minimum degree >= t).
inline bool is_family_member(const Graph& g, const VertexSet& s, const FreenessSpec& spec) {
  if (s.empty()) return false;
  if (spec.is_core()) {
    for (Vertex v : s)
      if (g.degree_within(v, s) < spec.core_threshold()) return false;
    return true;
  }
  for (auto& p : spec.pattern_graphs())
    if (p.n() == s.size() && contains_subgraph(g, p, s)) return true;
  return false;
}

/// Vertices of H[s] whose removal disconnects their component.
inline VertexSet cut_vertices(const Graph& g, const VertexSet& s) {
  VertexSet cuts(g.n());
  const std::size_t base = connected_components(g, s).size();
  for (Vertex v : s)
    if (connected_components(g, s.without(v)).size() > base) cuts.insert(v);
  return cuts;
}

}  // namespace vpart
