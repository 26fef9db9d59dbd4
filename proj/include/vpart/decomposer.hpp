#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "vpart/decomposition.hpp"
#include "vpart/io.hpp"
#include "vpart/maxfree.hpp"
#include "vpart/pattern.hpp"
#include "vpart/verifier.hpp"

namespace vpart {

/// Lexicographic descent measure on the residue H[W∖S]: forbidden-structure
/// copies first, then edges.
struct Potential {
  std::size_t g_copies = 0;
  std::size_t comp_edges = 0;

  auto operator<=>(const Potential&) const = default;
};

struct SwapStep {
  Vertex v_in = 0;
  Vertex y_out = 0;
  VertexSet b_set;
  VertexSet r_component;
  Potential potential_before;
  Potential potential_after;
};

enum class RefineStatus { Converged, Stalled };

struct RefineResult {
  VertexSet s0;
  VertexSet s;
  std::vector<SwapStep> trace;
  RefineStatus status = RefineStatus::Converged;
  Potential final_potential;
  std::size_t cap = 0;
};

struct DecomposeOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  /// Exhaustive fallback over all maximum free sets is attempted only up to
  /// this many vertices in the split.
  std::size_t fallback_max_n = 16;
  std::size_t repair_cap = 10'000;
  std::uint64_t seed = 0;
  /// Maximality checks in the attached report (null: default for the size).
  std::optional<bool> verify_maximality;
};

struct CounterexampleArtifact {
  std::string graph6;
  std::string claim;
  std::size_t max_free_size = 0;
  std::size_t sets_examined = 0;
  Potential best_potential;
  VertexSet best_set;
};

class TheoremCounterexample : public Error {
 public:
  explicit TheoremCounterexample(CounterexampleArtifact a)
      : Error(ErrorKind::TheoremCounterexample,
              a.claim + ": no maximum free set of " + a.graph6 + " meets the conclusion (" +
                  std::to_string(a.sets_examined) + " examined)",
              Witness{"counterexample", a.best_set.to_vector(), a.graph6}),
        artifact_(std::move(a)) {}
  const CounterexampleArtifact& artifact() const { return artifact_; }

 private:
  CounterexampleArtifact artifact_;
};

namespace detail {

inline Error precondition(const std::string& what, Witness w = {}) {
  return Error(ErrorKind::PreconditionViolated, what, std::move(w));
}

struct SwapCandidate {
  Vertex v;
  VertexSet b_set;
};

/// First-improvement single-swap descent inside `within`. `s` must be free.
/// Each round asks `candidates` for swap-in vertices in priority order; for
/// each, the vertices y of v's component in H[s ∪ {v}] whose removal keeps
/// the set free are tried in ascending order (non-cut vertices first when the
/// component is itself a family member). The first strict decrease of
/// `potential` is taken.
template <class PotentialFn, class CandidatesFn, class DoneFn>
RefineResult swap_refine(const Graph& g, const FreenessSpec& spec, VertexSet s, std::size_t cap,
                         PotentialFn&& potential, CandidatesFn&& candidates, DoneFn&& done) {
  RefineResult out;
  out.s0 = s;
  out.cap = cap;
  Potential cur = potential(s);
  while (!done(s, cur)) {
    if (out.trace.size() >= cap) throw std::logic_error("swap refinement exceeded its termination cap");
    bool moved = false;
    for (const SwapCandidate& cand : candidates(s)) {
      const VertexSet t = s.with(cand.v);
      const VertexSet comp = component_of(g, cand.v, t);
      std::vector<Vertex> ys = comp.without(cand.v).to_vector();
      if (is_family_member(g, comp, spec)) {
        const VertexSet cuts = cut_vertices(g, comp);
        std::stable_partition(ys.begin(), ys.end(), [&](Vertex y) { return !cuts.contains(y); });
      }
      for (Vertex y : ys) {
        if (!stays_free_adding(g, s.without(y), cand.v, spec)) continue;
        VertexSet next = t.without(y);
        Potential np = potential(next);
        if (!(np < cur)) continue;
        out.trace.push_back(SwapStep{cand.v, y, cand.b_set, comp, cur, np});
        s = std::move(next);
        cur = np;
        moved = true;
        break;
      }
      if (moved) break;
    }
    if (!moved) {
      out.status = RefineStatus::Stalled;
      break;
    }
  }
  out.s = std::move(s);
  out.final_potential = cur;
  return out;
}

inline Potential near_clique_potential(const Graph& g, const VertexSet& within, const VertexSet& s, std::size_t q) {
  const VertexSet rest = within - s;
  return {count_near_cliques_within(g, rest, q), g.edges_within(rest)};
}

inline std::vector<SwapCandidate> near_clique_candidates(const Graph& g, const VertexSet& within, const VertexSet& s,
                                                         std::size_t p, std::size_t q) {
  std::vector<SwapCandidate> out;
  VertexSet seen(g.n());
  for (auto& w : near_clique_witnesses(g, within - s, q)) {
    const VertexSet b = w.b_set();
    for (Vertex v : b) {
      if (seen.contains(v) || g.degree_within(v, s) + 1 != p) continue;
      seen.insert(v);
      out.push_back({v, b});
    }
  }
  return out;
}

/// Cap on trace length: the number of distinct potential values.
inline std::size_t near_clique_cap(const Graph& g, const VertexSet& within, std::size_t q) {
  return (count_near_cliques_within(g, within, q) + 1) * (g.edges_within(within) + 1);
}

inline void check_seed(const Graph& g, const FreenessSpec& spec, const VertexSet& within, const VertexSet& s0) {
  if (!s0.is_subset_of(within)) throw Error(ErrorKind::NotOptimalSeed, "seed leaves the vertex range");
  if (auto bad = free_violation(g, s0, spec)) throw Error(ErrorKind::NotOptimalSeed, "seed is not free", *bad);
  for (Vertex v : within - s0)
    if (stays_free_adding(g, s0, v, spec))
      throw Error(ErrorKind::NotOptimalSeed, "seed is not maximal: vertex can be added", Witness{"addable", {v}, ""});
}

/// Near-clique refinement of a maximum free subset of `within`.
inline RefineResult refine_within(const Graph& g, const VertexSet& within, const FreenessSpec& spec, std::size_t p,
                                  std::size_t q, const VertexSet& s0) {
  check_seed(g, spec, within, s0);
  return swap_refine(
      g, spec, s0, near_clique_cap(g, within, q), [&](const VertexSet& s) { return near_clique_potential(g, within, s, q); },
      [&](const VertexSet& s) { return near_clique_candidates(g, within, s, p, q); },
      [](const VertexSet&, const Potential& pot) { return pot.g_copies == 0; });
}

struct SplitOutcome {
  VertexSet v1;
  MaxFreeResult seed;
  RefineResult refine;
  bool used_fallback = false;
};

/// Exhaustive pass over every maximum free subset of `within`, keeping the
/// smallest potential among those whose residue meets `accept`.
template <class PotentialFn, class AcceptFn>
VertexSet fallback_search(const Graph& g, const VertexSet& within, const FreenessSpec& spec, const std::string& claim,
                          const DecomposeOptions& opt, PotentialFn&& potential, AcceptFn&& accept) {
  if (within.size() > opt.fallback_max_n)
    throw Error(ErrorKind::FallbackExceeded, "refinement stalled and " + std::to_string(within.size()) +
                                                 " vertices exceed the exhaustive bound " +
                                                 std::to_string(opt.fallback_max_n));
  std::optional<VertexSet> best;
  Potential best_pot;
  CounterexampleArtifact art;
  art.claim = claim;
  bool complete = for_each_maximum_free_set(g, spec, within, opt.node_budget, [&](const VertexSet& s) {
    ++art.sets_examined;
    art.max_free_size = s.size();
    Potential pot = potential(s);
    if (!art.best_set.universe() || pot < art.best_potential) art.best_potential = pot, art.best_set = s;
    if (accept(s) && (!best || pot < best_pot)) best = s, best_pot = pot;
    return true;
  });
  if (!complete) throw Error(ErrorKind::FallbackExceeded, "node budget exhausted during exhaustive fallback");
  if (!best) {
    art.graph6 = to_graph6(induced_subgraph(g, within).graph);
    throw TheoremCounterexample(std::move(art));
  }
  return *best;
}

/// Maximum free subset V1 of `within` with a residue whose q-cliques are
/// disjoint and whose degrees are at most q.
inline SplitOutcome split_two(const Graph& g, const VertexSet& within, const FreenessSpec& spec, std::size_t p,
                              std::size_t q, const DecomposeOptions& opt) {
  SplitOutcome out;
  out.seed = require_optimal(max_free_set(g, spec, opt.node_budget, within));
  out.refine = refine_within(g, within, spec, p, q, out.seed.s);
  out.v1 = out.refine.s;
  if (out.refine.status == RefineStatus::Stalled || !residue_conclusion_holds(g, within - out.v1, q)) {
    out.used_fallback = true;
    out.v1 = fallback_search(
        g, within, spec, "two-part split", opt, [&](const VertexSet& s) { return near_clique_potential(g, within, s, q); },
        [&](const VertexSet& s) { return residue_conclusion_holds(g, within - s, q); });
  }
  return out;
}

inline VerifyOptions verify_options_for(const Graph& g, const DecomposeOptions& opt) {
  VerifyOptions v = default_verify_options(g);
  if (opt.verify_maximality) v.check_maximality = *opt.verify_maximality;
  v.budget = opt.node_budget;
  return v;
}

inline void require_connected(const Graph& g) {
  auto comps = connected_components(g);
  if (comps.size() > 1) throw precondition("host is disconnected", Witness{"disconnected", comps[0].to_vector(), ""});
}

inline void require_no_kd_minus_e(const Graph& g) {
  const std::size_t d = g.max_degree();
  if (auto w = find_kd_minus_e(g, d))
    throw precondition("host contains K_" + std::to_string(d) + " minus an edge",
                       Witness{"kd-minus-e", w->w.to_vector(), "d=" + std::to_string(d)});
}

inline void require_clique_number_at_most_degree(const Graph& g) {
  auto cliques = maximum_cliques(g);
  if (!cliques.empty() && cliques.front().size() > g.max_degree())
    throw precondition("clique number exceeds maximum degree", Witness{"clique", cliques.front().to_vector(), ""});
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Two-part decomposition

/// Single-swap descent from a maximum free set `s0` that lowers the number of
/// K_{q+1}∖e copies in H[V∖S], then its edge count, keeping |S| fixed.
inline RefineResult refine(const Graph& g, const FreenessSpec& spec, std::size_t p, std::size_t q, const VertexSet& s0) {
  if (p < 2 || q < 3 || p + q != g.max_degree() + 1)
    throw detail::precondition("need p >= 2, q >= 3, p + q = Δ + 1",
                               Witness{"parameters", {}, "p=" + std::to_string(p) + " q=" + std::to_string(q)});
  return detail::refine_within(g, g.vertices(), spec, p, q, s0);
}

struct TwoPartResult {
  Decomposition decomposition;
  MaxFreeResult seed;
  RefineResult refine;
  bool used_fallback = false;
  Report report;
};

/// (V1, V2) with H[V1] free of the family and |V1| maximum, Δ(H[V2]) <= q and
/// the q-cliques of H[V2] absent or pairwise disjoint. Requires a connected
/// host with Δ >= 5 and no K_Δ∖e, p >= 2, q >= 3, p + q = Δ + 1.
inline TwoPartResult decompose_two(const Graph& g, const FreenessSpec& spec, std::size_t p, std::size_t q,
                                   const DecomposeOptions& opt = {}) {
  const std::size_t delta = g.max_degree();
  if (g.n() == 0) throw Error(ErrorKind::EmptyGraph, "empty host");
  detail::require_connected(g);
  if (delta < 5) throw detail::precondition("maximum degree " + std::to_string(delta) + " < 5", {"max-degree", {}, ""});
  if (p < 2 || q < 3 || p + q != delta + 1)
    throw detail::precondition("need p >= 2, q >= 3, p + q = Δ + 1",
                               {"parameters", {}, "p=" + std::to_string(p) + " q=" + std::to_string(q)});
  if (spec.declared_min_degree() + 1 < p)
    throw detail::precondition("family minimum degree below p - 1", {"family", {}, spec.label()});
  detail::require_no_kd_minus_e(g);

  auto split = detail::split_two(g, g.vertices(), spec, p, q, opt);
  TwoPartResult r;
  r.decomposition.parts = {split.v1, split.v1.complement()};
  r.seed = std::move(split.seed);
  r.refine = std::move(split.refine);
  r.used_fallback = split.used_fallback;
  r.report = verify_two(g, r.decomposition, spec, p, q, detail::verify_options_for(g, opt));
  return r;
}

// ---------------------------------------------------------------------------
// k-part decomposition

struct LevelLog {
  std::size_t level = 0;
  std::size_t residue_size = 0;
  std::size_t residue_max_degree = 0;
  std::size_t degree_bound = 0;   // Δ − Σ_{j<level}(p_j − 1)
  std::size_t remaining_sum = 0;  // Σ_{j>=level} p_j
  bool sum_matches = false;       // remaining_sum == degree_bound − 1 + (k − level)
  std::size_t part_size = 0;
};

struct KPartResult {
  Decomposition decomposition;
  std::vector<LevelLog> levels;
  RefineResult last_refine;
  bool used_fallback = false;
  Report report;
};

/// Peels maximum free sets for families 1..k-2, then splits the last residue
/// into a free part and a part with Δ <= p_k and disjoint p_k-cliques.
inline KPartResult decompose_k(const Graph& g, const std::vector<FreenessSpec>& specs, const std::vector<std::size_t>& ps,
                               const DecomposeOptions& opt = {}) {
  const std::size_t k = ps.size();
  const std::size_t delta = g.max_degree();
  if (g.n() == 0) throw Error(ErrorKind::EmptyGraph, "empty host");
  auto param_error = [&](const std::string& why) { return detail::precondition(why, {"parameters", {}, ""}); };
  if (k < 3) throw param_error("need k >= 3 parts");
  if (specs.size() + 1 != k) throw param_error("need exactly k - 1 families");
  if (delta < 9) throw detail::precondition("maximum degree " + std::to_string(delta) + " < 9", {"max-degree", {}, ""});
  for (std::size_t i = 1; i < k; ++i)
    if (ps[i] > ps[i - 1]) throw param_error("p values must be non-increasing");
  if (ps[k - 1] < 3 || ps[1] < 4) throw param_error("need p_k >= 3 and p_2 >= 4");
  std::size_t sum = 0;
  for (auto p : ps) sum += p;
  if (sum != delta - 1 + k) throw param_error("sum of p values must equal Δ - 1 + k");
  for (std::size_t i = 0; i + 1 < k; ++i)
    if (specs[i].declared_min_degree() + 1 < ps[i]) throw param_error("family " + std::to_string(i + 1) + " minimum degree below p - 1");
  detail::require_connected(g);
  detail::require_no_kd_minus_e(g);

  KPartResult r;
  VertexSet residue = g.vertices();
  std::size_t bound = delta;
  std::size_t remaining = sum;
  auto log_level = [&](std::size_t level, std::size_t part) {
    LevelLog l;
    l.level = level;
    l.residue_size = residue.size();
    for (Vertex v : residue) l.residue_max_degree = std::max(l.residue_max_degree, g.degree_within(v, residue));
    l.degree_bound = bound;
    l.remaining_sum = remaining;
    l.sum_matches = remaining + 1 == bound + (k - level);
    l.part_size = part;
    r.levels.push_back(l);
  };
  for (std::size_t i = 0; i + 2 < k; ++i) {
    auto best = require_optimal(max_free_set(g, specs[i], opt.node_budget, residue));
    log_level(i, best.s.size());
    r.decomposition.parts.push_back(best.s);
    residue -= best.s;
    bound -= ps[i] - 1;
    remaining -= ps[i];
  }
  auto split = detail::split_two(g, residue, specs[k - 2], ps[k - 2], ps[k - 1], opt);
  log_level(k - 2, split.v1.size());
  r.decomposition.parts.push_back(split.v1);
  r.decomposition.parts.push_back(residue - split.v1);
  r.last_refine = std::move(split.refine);
  r.used_fallback = split.used_fallback;
  r.report = verify_k(g, r.decomposition, specs, ps, detail::verify_options_for(g, opt));
  return r;
}

// ---------------------------------------------------------------------------
// Degeneracy splits

struct DegenerateResult {
  Decomposition decomposition;
  std::vector<long> objective_trace;  // objective after every move
  std::size_t repairs = 0;
  Report report;
};

namespace detail {

inline void require_degenerate_preconditions(const Graph& g, std::size_t p, std::size_t q) {
  const std::size_t delta = g.max_degree();
  if (g.n() == 0) throw Error(ErrorKind::EmptyGraph, "empty host");
  if (delta < 3) throw precondition("maximum degree " + std::to_string(delta) + " < 3", {"max-degree", {}, ""});
  if (p < 1 || q < 1 || p + q != delta)
    throw precondition("need p, q >= 1 and p + q = Δ", {"parameters", {}, "p=" + std::to_string(p) + " q=" + std::to_string(q)});
  require_clique_number_at_most_degree(g);
}

}  // namespace detail

/// Bipartition with Δ(H[V1]) <= p, Δ(H[V2]) <= q, H[V1] (p-1)-degenerate and
/// H[V2] (q-1)-degenerate: local search on q·e(V1) + p·e(V2), then moves out
/// of p-regular / q-regular components until none remain.
inline DegenerateResult degenerate_split(const Graph& g, std::size_t p, std::size_t q, const DecomposeOptions& opt = {}) {
  detail::require_degenerate_preconditions(g, p, q);
  VertexSet v1(g.n());
  VertexSet v2 = g.vertices();
  const long wp = static_cast<long>(p), wq = static_cast<long>(q);
  long objective = wp * static_cast<long>(g.m());
  DegenerateResult r;
  r.objective_trace.push_back(objective);

  auto gain = [&](Vertex v) {  // objective change when v switches sides
    const long d1 = static_cast<long>(g.degree_within(v, v1)), d2 = static_cast<long>(g.degree_within(v, v2));
    return v1.contains(v) ? -wq * d1 + wp * d2 : -wp * d2 + wq * d1;
  };
  auto flip = [&](Vertex v) {
    objective += gain(v);
    if (v1.contains(v)) v1.erase(v), v2.insert(v);
    else v2.erase(v), v1.insert(v);
    r.objective_trace.push_back(objective);
  };
  auto descend = [&] {
    for (bool improved = true; improved;) {
      improved = false;
      for (Vertex v = 0; v < g.n(); ++v)
        if (gain(v) < 0) flip(v), improved = true;
    }
  };

  std::mt19937_64 rng(opt.seed);
  descend();
  for (;;) {
    VertexSet bad = t_core(g, p, v1);
    if (bad.empty()) bad = t_core(g, q, v2);
    if (bad.empty()) break;
    if (r.repairs++ >= opt.repair_cap)
      throw Error(ErrorKind::RepairLoopExceeded, "regular components persist after " + std::to_string(opt.repair_cap) + " repairs",
                  Witness{"regular-component", bad.to_vector(), ""});
    auto comp = component_of(g, *bad.first(), bad);
    std::vector<Vertex> pool;
    for (Vertex v : comp)
      if (gain(v) < 0) pool.push_back(v);
    if (pool.empty()) pool = comp.to_vector();
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    flip(pool[pick(rng)]);
    descend();
  }
  r.decomposition.parts = {v1, v2};
  r.report = verify_degenerate(g, r.decomposition, p, q, DegenerateMode::LemmaA, VerifyOptions{false, opt.node_budget});
  return r;
}

struct DegenerateMaxResult {
  Decomposition decomposition;
  MaxFreeResult seed;
  RefineResult refine;
  bool used_fallback = false;
  Report report;
};

namespace detail {

inline Potential core_potential(const Graph& g, const VertexSet& within, const VertexSet& s, std::size_t t) {
  const VertexSet rest = within - s;
  return {t_core(g, t, rest).size(), g.edges_within(rest)};
}

/// Maximum MinDegreeCore(p_core)-free subset of `within` whose residue has an
/// empty q_core-core, by swap descent on (|core of residue|, residue edges).
inline SplitOutcome degenerate_swap_split(const Graph& g, const VertexSet& within, std::size_t p_core, std::size_t q_core,
                                          const DecomposeOptions& opt) {
  const FreenessSpec spec = FreenessSpec::min_degree_core(p_core);
  SplitOutcome out;
  out.seed = require_optimal(max_free_set(g, spec, opt.node_budget, within));
  check_seed(g, spec, within, out.seed.s);
  const std::size_t cap = (within.size() + 1) * (g.edges_within(within) + 1);
  auto potential = [&](const VertexSet& s) { return core_potential(g, within, s, q_core); };
  out.refine = swap_refine(
      g, spec, out.seed.s, cap, potential,
      [&](const VertexSet& s) {
        std::vector<SwapCandidate> c;
        const VertexSet core = t_core(g, q_core, within - s);
        for (Vertex v : core) c.push_back({v, component_of(g, v, core)});
        return c;
      },
      [](const VertexSet&, const Potential& pot) { return pot.g_copies == 0; });
  out.v1 = out.refine.s;
  if (out.refine.status == RefineStatus::Stalled) {
    out.used_fallback = true;
    out.v1 = fallback_search(g, within, spec, "degenerate split", opt, potential,
                             [&](const VertexSet& s) { return t_core(g, q_core, within - s).empty(); });
  }
  return out;
}

}  // namespace detail

/// V1 a maximum (p-1)-degenerate induced subgraph, H[V2] (q-1)-degenerate.
inline DegenerateMaxResult degenerate_max_split(const Graph& g, std::size_t p, std::size_t q,
                                                const DecomposeOptions& opt = {}) {
  detail::require_degenerate_preconditions(g, p, q);
  auto split = detail::degenerate_swap_split(g, g.vertices(), p, q, opt);
  DegenerateMaxResult r;
  r.decomposition.parts = {split.v1, split.v1.complement()};
  r.seed = std::move(split.seed);
  r.refine = std::move(split.refine);
  r.used_fallback = split.used_fallback;
  r.report = verify_degenerate(g, r.decomposition, p, q, DegenerateMode::TheoremC, detail::verify_options_for(g, opt));
  return r;
}

// ---------------------------------------------------------------------------
// Clique splits

namespace detail {

inline bool hitting_rec(const Graph& g, const std::vector<VertexSet>& cliques, VertexSet& chosen, VertexSet& blocked) {
  const VertexSet* target = nullptr;
  std::size_t fewest = 0;
  for (auto& c : cliques) {
    if (c.intersects(chosen)) continue;
    const std::size_t avail = c.size() - c.intersection_size(blocked);
    if (avail == 0) return false;
    if (!target || avail < fewest) target = &c, fewest = avail;
  }
  if (!target) return true;
  for (Vertex v : *target - blocked) {
    VertexSet saved = blocked;
    chosen.insert(v);
    blocked.insert(v);
    blocked |= g.neighbors(v);
    if (hitting_rec(g, cliques, chosen, blocked)) return true;
    chosen.erase(v);
    blocked = std::move(saved);
  }
  return false;
}

}  // namespace detail

/// An independent set meeting every maximum clique, found by exhaustive
/// branching over the unhit clique with the fewest usable vertices.
inline std::optional<VertexSet> hitting_independent_set(const Graph& g) {
  if (g.n() == 0) throw Error(ErrorKind::EmptyGraph, "empty graph");
  const auto cliques = maximum_cliques(g);
  VertexSet chosen(g.n()), blocked(g.n());
  if (!detail::hitting_rec(g, cliques, chosen, blocked)) return std::nullopt;
  return chosen;
}

struct CliqueSplitResult {
  Decomposition decomposition;
  bool via_hitting_set = false;
  Report report;
};

/// H[V1] K_p-free and H[V2] K_q-free or with disjoint q-cliques. q >= 3 goes
/// through decompose_two with the K_p family; q = 2 needs ω = Δ - 1 and takes
/// V2 as an independent set meeting every maximum clique.
inline CliqueSplitResult clique_split(const Graph& g, std::size_t p, std::size_t q, const DecomposeOptions& opt = {}) {
  const std::size_t delta = g.max_degree();
  if (g.n() == 0) throw Error(ErrorKind::EmptyGraph, "empty host");
  detail::require_connected(g);
  if (delta < 5) throw detail::precondition("maximum degree " + std::to_string(delta) + " < 5", {"max-degree", {}, ""});
  if (p < 2 || q < 2 || p + q != delta + 1)
    throw detail::precondition("need p, q >= 2 and p + q = Δ + 1",
                               {"parameters", {}, "p=" + std::to_string(p) + " q=" + std::to_string(q)});
  detail::require_no_kd_minus_e(g);

  CliqueSplitResult r;
  if (q >= 3) {
    auto two = decompose_two(g, FreenessSpec::clique(p), p, q, opt);
    r.decomposition = std::move(two.decomposition);
  } else {
    const std::size_t omega = clique_number(g);
    if (omega + 1 != delta)
      throw Error(ErrorKind::UnsupportedCase, "q = 2 needs clique number Δ - 1, got " + std::to_string(omega),
                  Witness{"clique-number", maximum_cliques(g).front().to_vector(), ""});
    auto hit = hitting_independent_set(g);
    if (!hit) {
      CounterexampleArtifact a;
      a.graph6 = to_graph6(g);
      a.claim = "hitting independent set";
      throw TheoremCounterexample(std::move(a));
    }
    r.via_hitting_set = true;
    r.decomposition.parts = {hit->complement(), *hit};
  }
  r.report = verify_clique_split(g, r.decomposition, p, q);
  return r;
}

}  // namespace vpart
