#pragma once

#include <string>
#include <vector>

#include "vpart/decomposition.hpp"
#include "vpart/maxfree.hpp"
#include "vpart/pattern.hpp"

// Post-hoc certification of decompositions. Everything here is recomputed
// from the host graph and the parts alone.

namespace vpart {

struct Check {
  std::string id;
  bool passed = true;
  Witness witness;
  std::string detail;
};

struct Report {
  std::string kind;
  std::vector<Check> checks;

  bool passed() const {
    for (auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const Check* find(std::string_view id) const {
    for (auto& c : checks)
      if (c.id == id) return &c;
    return nullptr;
  }
  void add(std::string id, std::optional<Witness> failure, std::string detail = {}) {
    Check c{std::move(id), !failure.has_value(), failure.value_or(Witness{}), std::move(detail)};
    checks.push_back(std::move(c));
  }
};

struct VerifyOptions {
  bool check_maximality = true;
  std::uint64_t budget = kDefaultNodeBudget;
};

/// Maximality is checked by default only up to this many vertices.
inline constexpr std::size_t kDefaultMaximalityLimit = 24;

inline VerifyOptions default_verify_options(const Graph& g) {
  return {g.n() <= kDefaultMaximalityLimit, kDefaultNodeBudget};
}

/// A member of the family inside H[within], as a vertex set.
inline std::optional<Witness> free_violation(const Graph& g, const VertexSet& within, const FreenessSpec& spec) {
  if (spec.is_core()) {
    auto core = t_core(g, spec.core_threshold(), within);
    if (core.empty()) return std::nullopt;
    return Witness{"core", core.to_vector(), spec.label()};
  }
  const auto& pats = spec.pattern_graphs();
  for (std::size_t i = 0; i < pats.size(); ++i) {
    if (auto emb = contains_subgraph(g, pats[i], within)) {
      auto vs = *emb;
      std::sort(vs.begin(), vs.end());
      return Witness{"pattern-copy", vs, "pattern " + std::to_string(i)};
    }
  }
  return std::nullopt;
}

/// Two q-cliques of H[within] that share a vertex, if any.
inline std::optional<Witness> overlapping_cliques(const Graph& g, const VertexSet& within, std::size_t q) {
  std::vector<VertexSet> cliques = list_k_cliques(g, q, within);
  for (std::size_t i = 0; i < cliques.size(); ++i)
    for (std::size_t j = i + 1; j < cliques.size(); ++j)
      if (cliques[i].intersects(cliques[j]))
        return Witness{"overlapping-cliques", (cliques[i] | cliques[j]).to_vector(),
                       "shared " + std::to_string((cliques[i] & cliques[j]).size())};
  return std::nullopt;
}

/// First vertex of `within` whose degree inside it exceeds `bound`.
inline std::optional<Witness> degree_excess(const Graph& g, const VertexSet& within, std::size_t bound) {
  for (Vertex v : within)
    if (g.degree_within(v, within) > bound)
      return Witness{"degree-exceeded", {v}, std::to_string(g.degree_within(v, within)) + " > " + std::to_string(bound)};
  return std::nullopt;
}

/// The residue conclusion: Δ(H[v2]) <= q, and H[v2] is K_q-free or its
/// q-cliques are pairwise disjoint.
inline bool residue_conclusion_holds(const Graph& g, const VertexSet& v2, std::size_t q) {
  return !degree_excess(g, v2, q) && !overlapping_cliques(g, v2, q);
}

namespace detail {

inline std::optional<Witness> maximality_violation(const Graph& g, const VertexSet& v1, const FreenessSpec& spec,
                                                   const VerifyOptions& opt) {
  auto best = max_free_set(g, spec, opt.budget);
  if (!best.optimal) return Witness{"budget-exhausted", best.s.to_vector(), "optimum not certified"};
  if (best.s.size() > v1.size())
    return Witness{"larger-free-set", best.s.to_vector(),
                   std::to_string(best.s.size()) + " > " + std::to_string(v1.size())};
  return std::nullopt;
}

inline std::optional<Witness> host_near_clique(const Graph& g) {
  const std::size_t d = g.max_degree();
  if (d < 2) return std::nullopt;
  if (auto w = find_kd_minus_e(g, d)) return Witness{"kd-minus-e", w->w.to_vector(), "d=" + std::to_string(d)};
  return std::nullopt;
}

inline bool check_parts(const Graph& g, const Decomposition& d, std::size_t k, Report& r) {
  if (d.parts.size() != k) {
    r.add("C1", Witness{"part-count", {}, std::to_string(d.parts.size()) + " parts, expected " + std::to_string(k)});
    return false;
  }
  auto bad = partition_violation(g, d);
  r.add("C1", bad);
  return !bad || bad->kind != "unbound-part";
}

}  // namespace detail

/// Checks C1-C7 for a two-part decomposition:
///   C1 partition, C2 V1 free, C3 |V1| optimal, C4 neighbor/degree bounds on V2,
///   C5 near-clique multiplicity in H[V2], C6 disjoint q-cliques, C7 host K_Δ∖e-free.
inline Report verify_two(const Graph& g, const Decomposition& d, const FreenessSpec& spec, std::size_t p, std::size_t q,
                         const VerifyOptions& opt) {
  Report r{"two", {}};
  if (!detail::check_parts(g, d, 2, r)) return r;
  const VertexSet& v1 = d.parts[0];
  const VertexSet& v2 = d.parts[1];

  r.add("C2", free_violation(g, v1, spec));
  if (opt.check_maximality) r.add("C3", detail::maximality_violation(g, v1, spec, opt));

  std::optional<Witness> c4;
  for (Vertex v : v2) {
    const std::size_t in1 = g.degree_within(v, v1), in2 = g.degree_within(v, v2);
    if (in1 + 1 < p) {
      c4 = Witness{"few-neighbors-in-V1", {v}, std::to_string(in1) + " < " + std::to_string(p - 1)};
      break;
    }
    if (in2 > q) {
      c4 = Witness{"degree-exceeded", {v}, std::to_string(in2) + " > " + std::to_string(q)};
      break;
    }
  }
  r.add("C4", c4);

  std::optional<Witness> c5;
  if (q >= 2) {
    auto witnesses = near_clique_witnesses(g, v2, q);
    for (Vertex v : v2) {
      std::vector<const NearCliqueWitness*> mine;
      for (auto& w : witnesses)
        if (w.w.contains(v)) mine.push_back(&w);
      if (mine.size() <= 1) continue;
      auto comp = component_of(g, v, v2);
      const bool clique_component = comp.size() == q + 1 && g.edges_within(comp) == q * (q + 1) / 2;
      if (clique_component) continue;
      VertexSet all(g.n());
      for (auto* w : mine) all |= w->w;
      c5 = Witness{"vertex-in-several-near-cliques", all.to_vector(),
                   "vertex " + std::to_string(v) + " in " + std::to_string(mine.size())};
      break;
    }
  }
  r.add("C5", c5);
  r.add("C6", q >= 1 ? overlapping_cliques(g, v2, q) : std::nullopt);
  r.add("C7", detail::host_near_clique(g));
  return r;
}

inline Report verify_two(const Graph& g, const Decomposition& d, const FreenessSpec& spec, std::size_t p, std::size_t q,
                         bool check_maximality) {
  return verify_two(g, d, spec, p, q, VerifyOptions{check_maximality, kDefaultNodeBudget});
}

/// k-part checks: C1 partition, F<i> part i free for i < k, M1 |V1| optimal,
/// DK Δ(H[V_k]) <= p_k, QK p_k-cliques of H[V_k] disjoint.
inline Report verify_k(const Graph& g, const Decomposition& d, const std::vector<FreenessSpec>& specs,
                       const std::vector<std::size_t>& ps, const VerifyOptions& opt) {
  Report r{"k", {}};
  const std::size_t k = ps.size();
  if (specs.size() + 1 != k) throw std::invalid_argument("need one family per part except the last");
  if (!detail::check_parts(g, d, k, r)) return r;
  for (std::size_t i = 0; i + 1 < k; ++i) r.add("F" + std::to_string(i + 1), free_violation(g, d.parts[i], specs[i]));
  if (opt.check_maximality) r.add("M1", detail::maximality_violation(g, d.parts[0], specs[0], opt));
  r.add("DK", degree_excess(g, d.parts[k - 1], ps[k - 1]));
  r.add("QK", overlapping_cliques(g, d.parts[k - 1], ps[k - 1]));
  return r;
}

enum class DegenerateMode { LemmaA, TheoremC };

/// D1/D2 degree bounds (LemmaA only), G1/G2 degeneracy bounds via empty
/// p-/q-cores, M1 maximality of V1 among (p-1)-degenerate sets (TheoremC only).
inline Report verify_degenerate(const Graph& g, const Decomposition& d, std::size_t p, std::size_t q,
                                DegenerateMode mode, const VerifyOptions& opt = {}) {
  if (p < 1 || q < 1) throw std::invalid_argument("p and q must be positive");
  Report r{mode == DegenerateMode::LemmaA ? "degenerate-lemmaA" : "degenerate-theoremC", {}};
  if (!detail::check_parts(g, d, 2, r)) return r;
  const VertexSet& v1 = d.parts[0];
  const VertexSet& v2 = d.parts[1];
  if (mode == DegenerateMode::LemmaA) {
    r.add("D1", degree_excess(g, v1, p));
    r.add("D2", degree_excess(g, v2, q));
  }
  auto core_witness = [&](const VertexSet& part, std::size_t t) -> std::optional<Witness> {
    auto core = t_core(g, t, part);
    if (core.empty()) return std::nullopt;
    return Witness{"core", core.to_vector(), "min degree >= " + std::to_string(t)};
  };
  r.add("G1", core_witness(v1, p));
  r.add("G2", core_witness(v2, q));
  if (mode == DegenerateMode::TheoremC && opt.check_maximality)
    r.add("M1", detail::maximality_violation(g, v1, FreenessSpec::min_degree_core(p), opt));
  return r;
}

/// Checks for the clique split: C1 partition, C2 H[V1] K_p-free,
/// C6 H[V2] K_q-free or with disjoint q-cliques, C7 host K_Δ∖e-free.
inline Report verify_clique_split(const Graph& g, const Decomposition& d, std::size_t p, std::size_t q) {
  Report r{"clique-split", {}};
  if (!detail::check_parts(g, d, 2, r)) return r;
  r.add("C2", free_violation(g, d.parts[0], FreenessSpec::clique(p)));
  r.add("C6", overlapping_cliques(g, d.parts[1], q));
  r.add("C7", detail::host_near_clique(g));
  return r;
}

}  // namespace vpart
