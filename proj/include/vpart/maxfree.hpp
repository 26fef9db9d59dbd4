#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "vpart/pattern.hpp"

namespace vpart {

struct MaxFreeResult {
  VertexSet s;
  bool optimal = false;
  std::uint64_t nodes_explored = 0;
  std::string bound_used;
};

class BudgetExhausted : public Error {
 public:
  explicit BudgetExhausted(MaxFreeResult incumbent)
      : Error(ErrorKind::BudgetExhausted, "node budget exhausted with incumbent of size " +
                                              std::to_string(incumbent.s.size())),
        incumbent_(std::move(incumbent)) {}
  const MaxFreeResult& incumbent() const { return incumbent_; }

 private:
  MaxFreeResult incumbent_;
};

inline const MaxFreeResult& require_optimal(const MaxFreeResult& r) {
  if (!r.optimal) throw BudgetExhausted(r);
  return r;
}

/// Inclusion-maximal free subset of `within`, inserting vertices in a
/// seeded random order.
inline VertexSet greedy_free_set(const Graph& g, const FreenessSpec& spec, std::uint64_t seed, const VertexSet& within) {
  std::vector<Vertex> order = within.to_vector();
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  VertexSet s(g.n());
  for (Vertex v : order)
    if (stays_free_adding(g, s, v, spec)) s.insert(v);
  return s;
}

inline VertexSet greedy_free_set(const Graph& g, const FreenessSpec& spec, std::uint64_t seed) {
  return greedy_free_set(g, spec, seed, g.vertices());
}

namespace detail {

/// Include/exclude branch and bound over the vertices of `within`.
///
/// For pattern families the copies are enumerated once and act as the
/// conflict hypergraph; for core families feasibility is a core computation.
/// At every node, vertices that can no longer join are excluded, and vertices
/// that lie in no live conflict are included, before bounding.
class FreeSetSearch {
 public:
  FreeSetSearch(const Graph& g, const FreenessSpec& spec, const VertexSet& within)
      : g_(g), spec_(spec), within_(within), by_vertex_(g.n()) {
    if (!spec.is_core()) {
      for (auto& p : spec.pattern_graphs())
        for (auto& c : copy_vertex_sets(g, p, within)) copies_.push_back(std::move(c));
      std::sort(copies_.begin(), copies_.end(), [](const VertexSet& a, const VertexSet& b) { return lex_less(a, b); });
      copies_.erase(std::unique(copies_.begin(), copies_.end()), copies_.end());
      for (std::size_t i = 0; i < copies_.size(); ++i)
        for (Vertex v : copies_[i]) by_vertex_[v].push_back(i);
    }
    degree_order_ = within.to_vector();
    std::stable_sort(degree_order_.begin(), degree_order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  }

  std::string bound_name() const { return spec_.is_core() ? "size-minus-core-components" : "size-minus-copy-packing"; }

  /// Phase 1: the optimum size, branching highest-degree-first.
  bool maximize(VertexSet incumbent, std::uint64_t budget) {
    best_ = std::move(incumbent);
    budget_ = budget;
    aborted_ = false;
    mode_ = Mode::Maximize;
    search(VertexSet(g_.n()), within_);
    return !aborted_;
  }

  /// Phase 2: visits free sets of size `target` (which must be the optimum)
  /// in lexicographic order, branching on the smallest undecided vertex.
  template <class Fn>
  bool enumerate(std::size_t target, std::uint64_t budget, Fn&& fn) {
    target_ = target;
    budget_ = nodes_ + budget;
    aborted_ = false;
    stop_ = false;
    mode_ = Mode::Enumerate;
    visit_ = [&](const VertexSet& s) { return fn(s); };
    search(VertexSet(g_.n()), within_);
    return !aborted_;
  }

  const VertexSet& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  enum class Mode { Maximize, Enumerate };

  bool can_include(const VertexSet& s, Vertex v) const {
    if (spec_.is_core()) return stays_free_adding(g_, s, v, spec_);
    for (std::size_t ci : by_vertex_[v])
      if ((copies_[ci].without(v)).is_subset_of(s)) return false;
    return true;
  }

  void propagate(VertexSet& s, VertexSet& u) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (Vertex v : u)
        if (!can_include(s, v)) u.erase(v), changed = true;
      const VertexSet pool = s | u;
      if (spec_.is_core()) {
        VertexSet core = t_core(g_, spec_.core_threshold(), pool);
        VertexSet safe = u - core;
        if (!safe.empty()) s |= safe, u -= safe, changed = true;
      } else {
        for (Vertex v : u) {
          bool live = false;
          for (std::size_t ci : by_vertex_[v])
            if (copies_[ci].is_subset_of(pool)) {
              live = true;
              break;
            }
          if (!live) s.insert(v), u.erase(v), changed = true;
        }
      }
    }
  }

  /// Lower bound on how many undecided vertices must still be excluded.
  std::size_t exclusions_needed(const VertexSet& s, const VertexSet& u) const {
    const VertexSet pool = s | u;
    if (spec_.is_core()) return connected_components(g_, t_core(g_, spec_.core_threshold(), pool)).size();
    std::vector<VertexSet> live;
    for (auto& c : copies_)
      if (c.is_subset_of(pool)) live.push_back(c & u);
    std::stable_sort(live.begin(), live.end(), [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
    VertexSet used(g_.n());
    std::size_t packed = 0;
    for (auto& c : live)
      if (!c.intersects(used)) used |= c, ++packed;
    return packed;
  }

  Vertex pick(const VertexSet& u) const {
    if (mode_ == Mode::Enumerate) return *u.first();
    for (Vertex v : degree_order_)
      if (u.contains(v)) return v;
    return *u.first();
  }

  void search(VertexSet s, VertexSet u) {
    if (aborted_ || stop_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    propagate(s, u);
    const std::size_t bound = s.size() + u.size() - exclusions_needed(s, u);
    if (mode_ == Mode::Maximize ? bound <= best_.size() : bound < target_) return;
    if (u.empty()) {
      if (mode_ == Mode::Maximize) best_ = s;
      else if (s.size() == target_ && !visit_(s)) stop_ = true;
      return;
    }
    const Vertex v = pick(u);
    u.erase(v);
    if (can_include(s, v)) search(s.with(v), u);
    search(std::move(s), std::move(u));
  }

  const Graph& g_;
  const FreenessSpec& spec_;
  VertexSet within_;
  std::vector<VertexSet> copies_;
  std::vector<std::vector<std::size_t>> by_vertex_;
  std::vector<Vertex> degree_order_;
  Mode mode_ = Mode::Maximize;
  VertexSet best_;
  std::size_t target_ = 0;
  std::uint64_t budget_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  bool stop_ = false;
  std::function<bool(const VertexSet&)> visit_;
};

}  // namespace detail

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

/// Maximum free induced subset of `within`. Among optimal sets the
/// lexicographically smallest is returned; `optimal` is false when the node
/// budget ran out before the size was certified.
inline MaxFreeResult max_free_set(const Graph& g, const FreenessSpec& spec, std::uint64_t budget,
                                  const VertexSet& within) {
  if (budget < 1) throw std::invalid_argument("node budget must be at least 1");
  detail::FreeSetSearch search(g, spec, within);
  MaxFreeResult r;
  r.bound_used = search.bound_name();
  if (!search.maximize(greedy_free_set(g, spec, 0, within), budget)) {
    r.s = search.best();
    r.nodes_explored = search.nodes();
    return r;
  }
  r.optimal = true;
  r.s = search.best();
  search.enumerate(r.s.size(), budget, [&](const VertexSet& s) {
    r.s = s;
    return false;
  });
  r.nodes_explored = search.nodes();
  return r;
}

inline MaxFreeResult max_free_set(const Graph& g, const FreenessSpec& spec, std::uint64_t budget = kDefaultNodeBudget) {
  return max_free_set(g, spec, budget, g.vertices());
}

/// Visits every maximum free subset of `within` in lexicographic order.
/// Returns false if the budget ran out.
template <class Fn>
bool for_each_maximum_free_set(const Graph& g, const FreenessSpec& spec, const VertexSet& within, std::uint64_t budget,
                               Fn&& fn) {
  detail::FreeSetSearch search(g, spec, within);
  if (!search.maximize(greedy_free_set(g, spec, 0, within), budget)) return false;
  return search.enumerate(search.best().size(), budget, fn);
}

}  // namespace vpart
