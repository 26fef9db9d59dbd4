#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "vpart/decomposer.hpp"
#include "vpart/io.hpp"

// Ground truth at desk scale. Everything below works on bitmask adjacency and
// shares no search code with the engine, so agreement between the two is
// evidence rather than tautology.

namespace vpart::oracle {

inline constexpr std::size_t kMaxEnumerateN = 10;
inline constexpr std::size_t kMaxTwoPartN = 16;
inline constexpr std::size_t kMaxKPartN = 10;
inline constexpr std::size_t kMaxMaskN = 24;

using Mask = std::uint32_t;

struct MaskGraph {
  std::size_t n = 0;
  std::array<Mask, kMaxMaskN> adj{};
};

inline MaskGraph to_mask(const Graph& g) {
  if (g.n() > kMaxMaskN) throw Error(ErrorKind::RangeExceeded, "graph too large for the exhaustive oracle");
  MaskGraph m;
  m.n = g.n();
  for (auto [u, v] : g.edges()) m.adj[u] |= Mask{1} << v, m.adj[v] |= Mask{1} << u;
  return m;
}

inline Graph from_mask(const MaskGraph& m) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < m.n; ++u)
    for (Vertex v = u + 1; v < m.n; ++v)
      if (m.adj[u] >> v & 1) e.push_back({u, v});
  return Graph::from_edges(m.n, e);
}

inline Mask full_mask(std::size_t n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline VertexSet to_set(Mask x, std::size_t n) {
  VertexSet s(n);
  for (; x; x &= x - 1) s.insert(static_cast<Vertex>(std::countr_zero(x)));
  return s;
}

inline Mask to_mask(const VertexSet& s) {
  Mask x = 0;
  for (Vertex v : s) x |= Mask{1} << v;
  return x;
}

// ---------------------------------------------------------------------------
// Mask primitives

inline std::size_t degree_in(const MaskGraph& g, std::size_t v, Mask x) { return std::popcount(g.adj[v] & x); }

inline std::size_t max_degree_in(const MaskGraph& g, Mask x) {
  std::size_t d = 0;
  for (Mask r = x; r; r &= r - 1) d = std::max(d, degree_in(g, std::countr_zero(r), x));
  return d;
}

/// Whether `cand` contains a k-clique.
inline bool has_clique(const MaskGraph& g, Mask cand, std::size_t k) {
  if (k == 0) return true;
  if (static_cast<std::size_t>(std::popcount(cand)) < k) return false;
  for (Mask r = cand; r; r &= r - 1) {
    const int v = std::countr_zero(r);
    const Mask later = r & (r - 1);
    if (has_clique(g, g.adj[v] & later, k - 1)) return true;
  }
  return false;
}

inline void cliques_rec(const MaskGraph& g, Mask cur, Mask cand, std::size_t k, std::vector<Mask>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (Mask r = cand; r && static_cast<std::size_t>(std::popcount(r)) >= k; r &= r - 1) {
    const int v = std::countr_zero(r);
    cliques_rec(g, cur | Mask{1} << v, g.adj[v] & (r & (r - 1)), k - 1, out);
  }
}

inline std::vector<Mask> cliques_in(const MaskGraph& g, Mask x, std::size_t k) {
  std::vector<Mask> out;
  cliques_rec(g, 0, x, k, out);
  return out;
}

inline bool cliques_disjoint(const MaskGraph& g, Mask x, std::size_t k) {
  Mask used = 0;
  for (Mask c : cliques_in(g, x, k)) {
    if (c & used) return false;
    used |= c;
  }
  return true;
}

inline Mask core_of(const MaskGraph& g, Mask x, std::size_t t) {
  for (bool changed = true; changed;) {
    changed = false;
    for (Mask r = x; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      if (degree_in(g, v, x) < t) x &= ~(Mask{1} << v), changed = true;
    }
  }
  return x;
}

inline bool connected_in(const MaskGraph& g, Mask x) {
  if (!x) return true;
  Mask seen = x & (~x + 1), frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask r = frontier; r; r &= r - 1) next |= g.adj[std::countr_zero(r)];
    next &= x & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == x;
}

/// Some m vertices of x span at least C(m,2) - 1 edges.
inline bool has_near_clique(const MaskGraph& g, Mask x, std::size_t m) {
  if (m < 2) return false;
  for (Mask r = x; r; r &= r - 1) {
    const int u = std::countr_zero(r);
    for (Mask s = r & (r - 1); s; s &= s - 1) {
      const int v = std::countr_zero(s);
      if (has_clique(g, g.adj[u] & g.adj[v] & x, m - 2)) return true;
    }
  }
  return false;
}

namespace detail {

/// Injective map of pattern vertices into x preserving pattern edges, with
/// pattern vertex `a` sent to host vertex `v`.
inline bool anchored_match(const MaskGraph& host, Mask x, const MaskGraph& pat, std::size_t a, std::size_t v) {
  std::vector<std::size_t> order{a};
  Mask placed = Mask{1} << a;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Mask r = pat.adj[order[i]] & ~placed; r; r &= r - 1) order.push_back(std::countr_zero(r)), placed |= r & (~r + 1);
  std::vector<int> image(pat.n, -1);
  std::function<bool(std::size_t, Mask)> rec = [&](std::size_t i, Mask used) {
    if (i == order.size()) return true;
    const std::size_t pv = order[i];
    Mask cand = x & ~used;
    for (Mask r = pat.adj[pv]; r; r &= r - 1) {
      const int img = image[std::countr_zero(r)];
      if (img >= 0) cand &= host.adj[img];
    }
    for (; cand; cand &= cand - 1) {
      const int hv = std::countr_zero(cand);
      if (degree_in(host, hv, x) < static_cast<std::size_t>(std::popcount(pat.adj[pv]))) continue;
      image[pv] = hv;
      if (rec(i + 1, used | Mask{1} << hv)) return true;
      image[pv] = -1;
    }
    return false;
  };
  image[a] = static_cast<int>(v);
  return rec(1, Mask{1} << v);
}

}  // namespace detail

/// bad[x] for every subset x of V: H[x] contains a member of the family.
inline std::vector<std::uint8_t> bad_table(const MaskGraph& g, const FreenessSpec& spec) {
  if (g.n > kMaxTwoPartN + 4) throw Error(ErrorKind::RangeExceeded, "subset table too large");
  std::vector<MaskGraph> pats;
  if (!spec.is_core())
    for (auto& p : spec.pattern_graphs()) pats.push_back(to_mask(p));
  const std::size_t total = std::size_t{1} << g.n;
  std::vector<std::uint8_t> bad(total, 0);
  for (std::size_t xi = 1; xi < total; ++xi) {
    const Mask x = static_cast<Mask>(xi);
    const int top = 31 - std::countl_zero(x);
    const Mask rest = x & ~(Mask{1} << top);
    if (bad[rest]) {
      bad[xi] = 1;
      continue;
    }
    bool through = false;
    if (spec.is_core()) {
      through = core_of(g, x, spec.core_threshold()) != 0;
    } else {
      for (std::size_t i = 0; i < pats.size() && !through; ++i) {
        if (pats[i].n > static_cast<std::size_t>(std::popcount(x))) continue;
        if (spec.clique_size(i)) {
          through = has_clique(g, g.adj[top] & x, spec.clique_size(i) - 1);
          continue;
        }
        for (std::size_t a = 0; a < pats[i].n && !through; ++a)
          through = detail::anchored_match(g, x, pats[i], a, top);
      }
    }
    bad[xi] = through;
  }
  return bad;
}

inline std::size_t max_free_size(const MaskGraph& g, const std::vector<std::uint8_t>& bad) {
  std::size_t best = 0;
  for (std::size_t x = 0; x < bad.size(); ++x)
    if (!bad[x]) best = std::max<std::size_t>(best, std::popcount(static_cast<Mask>(x)));
  return best;
}

/// Size of a largest induced subgraph free of the family, by exhaustion.
inline std::size_t max_free_size(const Graph& g, const FreenessSpec& spec) {
  auto m = to_mask(g);
  return max_free_size(m, bad_table(m, spec));
}

/// Whether H[x] is free of the family, by exhaustion over the table.
inline bool is_free_exhaustive(const Graph& g, const VertexSet& x, const FreenessSpec& spec) {
  auto m = to_mask(g);
  return !bad_table(m, spec)[to_mask(x)];
}

// ---------------------------------------------------------------------------
// Enumeration and canonical forms

struct GraphFilter {
  bool connected = false;
  std::optional<std::size_t> max_degree;      // Δ exactly
  std::optional<std::size_t> max_degree_min;  // Δ >= this
  std::optional<std::size_t> max_degree_max;  // Δ <= this
  bool kd_minus_e_free = false;               // no K_Δ∖e
  std::optional<std::size_t> omega_min;
  std::optional<std::size_t> omega_max;
  std::optional<std::size_t> clique_free;     // no K_t
};

inline std::size_t clique_number_mask(const MaskGraph& g) {
  std::size_t w = g.n ? 1 : 0;
  while (w < g.n && has_clique(g, full_mask(g.n), w + 1)) ++w;
  return w;
}

inline bool passes(const MaskGraph& g, const GraphFilter& f) {
  const Mask all = full_mask(g.n);
  const std::size_t d = max_degree_in(g, all);
  if (f.max_degree && d != *f.max_degree) return false;
  if (f.max_degree_min && d < *f.max_degree_min) return false;
  if (f.max_degree_max && d > *f.max_degree_max) return false;
  if (f.connected && !connected_in(g, all)) return false;
  if (f.clique_free && has_clique(g, all, *f.clique_free)) return false;
  if (f.kd_minus_e_free && d >= 2 && has_near_clique(g, all, d)) return false;
  if (f.omega_min || f.omega_max) {
    const std::size_t w = clique_number_mask(g);
    if (f.omega_min && w < *f.omega_min) return false;
    if (f.omega_max && w > *f.omega_max) return false;
  }
  return true;
}

namespace detail {

using Cells = std::vector<std::vector<std::size_t>>;

/// Splits cells by neighbour counts into each cell until stable.
inline void refine(const MaskGraph& g, Cells& cells) {
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<Mask> cell_masks;
    for (auto& c : cells) {
      Mask m = 0;
      for (auto v : c) m |= Mask{1} << v;
      cell_masks.push_back(m);
    }
    Cells next;
    for (auto& c : cells) {
      std::map<std::vector<int>, std::vector<std::size_t>> split;
      for (auto v : c) {
        std::vector<int> sig;
        for (Mask cm : cell_masks) sig.push_back(std::popcount(g.adj[v] & cm));
        split[sig].push_back(v);
      }
      if (split.size() > 1) changed = true;
      for (auto& [sig, part] : split) next.push_back(std::move(part));
    }
    cells = std::move(next);
  }
}

inline std::uint64_t code_of(const MaskGraph& g, const std::vector<std::size_t>& order) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j) code = code << 1 | (g.adj[order[i]] >> order[j] & 1);
  return code;
}

inline void canon_rec(const MaskGraph& g, Cells cells, std::optional<std::uint64_t>& best) {
  refine(g, cells);
  auto it = std::find_if(cells.begin(), cells.end(), [](auto& c) { return c.size() > 1; });
  if (it == cells.end()) {
    std::vector<std::size_t> order;
    for (auto& c : cells) order.push_back(c[0]);
    const std::uint64_t code = code_of(g, order);
    if (!best || code > *best) best = code;
    return;
  }
  const std::size_t idx = static_cast<std::size_t>(it - cells.begin());
  for (std::size_t pick : cells[idx]) {
    Cells next(cells.begin(), cells.begin() + static_cast<long>(idx));
    next.push_back({pick});
    std::vector<std::size_t> rest;
    for (auto v : cells[idx])
      if (v != pick) rest.push_back(v);
    next.push_back(std::move(rest));
    next.insert(next.end(), cells.begin() + static_cast<long>(idx) + 1, cells.end());
    canon_rec(g, std::move(next), best);
  }
}

}  // namespace detail

/// Isomorphism-invariant code: the largest upper-triangle adjacency word over
/// the orderings reached by colour refinement and individualisation.
inline std::uint64_t canonical_code(const MaskGraph& g) {
  if (g.n > 11) throw Error(ErrorKind::RangeExceeded, "canonical form supports at most 11 vertices");
  detail::Cells cells(1);
  for (std::size_t v = 0; v < g.n; ++v) cells[0].push_back(v);
  std::optional<std::uint64_t> best;
  if (g.n == 0) return 0;
  detail::canon_rec(g, cells, best);
  return *best;
}

inline std::uint64_t canonical_form(const Graph& g) { return canonical_code(to_mask(g)); }

/// Streams every labeled graph on n vertices passing `filter`, ordered by
/// edge mask; with `dedup` only the first labeling of each isomorphism class.
/// `fn` returns false to stop.
template <class Fn>
void enumerate_graphs(std::size_t n, const GraphFilter& filter, bool dedup, Fn&& fn) {
  if (n < 1 || n > kMaxEnumerateN)
    throw Error(ErrorKind::RangeExceeded, "enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerateN));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) pairs.push_back({u, v});
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::set<std::uint64_t> seen;
  for (std::uint64_t code = 0; code < total; ++code) {
    MaskGraph g;
    g.n = n;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (code >> i & 1) {
        auto [u, v] = pairs[i];
        g.adj[u] |= Mask{1} << v;
        g.adj[v] |= Mask{1} << u;
      }
    if (!passes(g, filter)) continue;
    if (dedup && !seen.insert(canonical_code(g)).second) continue;
    if (!fn(g)) return;
  }
}

template <class Fn>
void enumerate_graphs(std::size_t n, const GraphFilter& filter, Fn&& fn) {
  enumerate_graphs(n, filter, false, std::forward<Fn>(fn));
}

// ---------------------------------------------------------------------------
// Exhaustive decompositions

enum class Claim { Theorem1, Corollary1, Lemma2, Problem1, Problem2 };

inline std::string_view to_string(Claim c) {
  switch (c) {
    case Claim::Theorem1: return "theorem1";
    case Claim::Corollary1: return "corollary1";
    case Claim::Lemma2: return "lemma2";
    case Claim::Problem1: return "problem1";
    case Claim::Problem2: return "problem2";
  }
  return "?";
}

inline std::optional<Claim> parse_claim(std::string_view s) {
  for (Claim c : {Claim::Theorem1, Claim::Corollary1, Claim::Lemma2, Claim::Problem1, Claim::Problem2})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

struct ClaimParams {
  std::size_t p = 0;
  std::size_t q = 0;
  std::vector<std::size_t> ps;              // corollary1
  std::optional<FreenessSpec> spec;          // theorem1; defaults to K_p
  std::vector<FreenessSpec> specs;           // corollary1; default K_{p_i}
  std::string reading;                       // problem2 grid label
};

namespace detail {

inline FreenessSpec first_spec(Claim c, const ClaimParams& cp) {
  switch (c) {
    case Claim::Theorem1: return cp.spec ? *cp.spec : FreenessSpec::clique(cp.p);
    case Claim::Problem2: return FreenessSpec::min_degree_core(cp.p - 1);
    default: return FreenessSpec::clique(cp.p);
  }
}

/// The residue clause of each two-part claim.
inline bool residue_ok(Claim c, const MaskGraph& g, Mask v2, const ClaimParams& cp) {
  switch (c) {
    case Claim::Theorem1: return max_degree_in(g, v2) <= cp.q && cliques_disjoint(g, v2, cp.q);
    case Claim::Lemma2: return cliques_disjoint(g, v2, cp.q);
    case Claim::Problem1: return !has_clique(g, v2, cp.q);
    case Claim::Problem2: return core_of(g, v2, cp.q - 1) == 0;
    default: return false;
  }
}

inline bool needs_maximum(Claim c) { return c != Claim::Lemma2; }

}  // namespace detail

/// Exhaustive search over bipartitions (k-partitions for corollary1) for one
/// meeting the claim's full conclusion with |V1| as large as possible. Among
/// ties the smallest V1 bitmask wins. Absent when no partition qualifies.
inline std::optional<Decomposition> brute_force_best_decomposition(const Graph& host, Claim claim, const ClaimParams& cp) {
  const MaskGraph g = to_mask(host);
  const Mask all = full_mask(g.n);
  if (claim == Claim::Corollary1) {
    if (g.n > kMaxKPartN) throw Error(ErrorKind::RangeExceeded, "k-part oracle supports n <= 10");
    const std::size_t k = cp.ps.size();
    if (k < 2 || (!cp.specs.empty() && cp.specs.size() + 1 != k))
      throw Error(ErrorKind::ConfigError, "corollary1 needs ps and one family per part but the last");
    std::vector<std::vector<std::uint8_t>> bads;
    for (std::size_t i = 0; i + 1 < k; ++i)
      bads.push_back(bad_table(g, cp.specs.empty() ? FreenessSpec::clique(cp.ps[i]) : cp.specs[i]));
    const std::size_t alpha = max_free_size(g, bads[0]);
    std::map<std::pair<Mask, std::size_t>, std::optional<std::vector<Mask>>> memo;
    std::function<std::optional<std::vector<Mask>>(Mask, std::size_t)> split = [&](Mask r, std::size_t i)
        -> std::optional<std::vector<Mask>> {
      if (i + 1 == k) {
        if (max_degree_in(g, r) <= cp.ps[k - 1] && cliques_disjoint(g, r, cp.ps[k - 1])) return std::vector<Mask>{r};
        return std::nullopt;
      }
      auto key = std::make_pair(r, i);
      if (auto it = memo.find(key); it != memo.end()) return it->second;
      std::optional<std::vector<Mask>> found;
      for (Mask x = r;; x = (x - 1) & r) {
        if (!bads[i][x]) {
          if (auto tail = split(r & ~x, i + 1)) {
            tail->insert(tail->begin(), x);
            found = std::move(tail);
            break;
          }
        }
        if (x == 0) break;
      }
      memo[key] = found;
      return found;
    };
    for (Mask x = 0; x <= all; ++x) {
      if (bads[0][x] || static_cast<std::size_t>(std::popcount(x)) != alpha) continue;
      if (auto tail = split(all & ~x, 1)) {
        Decomposition d;
        d.parts.push_back(to_set(x, g.n));
        for (Mask m : *tail) d.parts.push_back(to_set(m, g.n));
        return d;
      }
    }
    return std::nullopt;
  }

  if (g.n > kMaxTwoPartN) throw Error(ErrorKind::RangeExceeded, "two-part oracle supports n <= 16");
  const auto bad = bad_table(g, detail::first_spec(claim, cp));
  const std::size_t alpha = max_free_size(g, bad);
  std::optional<Mask> best;
  for (std::size_t xi = 0; xi < bad.size(); ++xi) {
    const Mask x = static_cast<Mask>(xi);
    if (bad[xi]) continue;
    const std::size_t size = std::popcount(x);
    if (detail::needs_maximum(claim) && size != alpha) continue;
    if (best && static_cast<std::size_t>(std::popcount(*best)) >= size) continue;
    if (detail::residue_ok(claim, g, all & ~x, cp)) best = x;
  }
  if (!best) return std::nullopt;
  return Decomposition{{to_set(*best, g.n), to_set(all & ~*best, g.n)}};
}

// ---------------------------------------------------------------------------
// Hunting

struct HuntTask {
  Claim claim = Claim::Theorem1;
  std::size_t n_min = 1;
  std::size_t n_max = 1;
  GraphFilter filter;
  bool exhaustive = true;
  bool dedup = false;
  std::size_t samples = 0;          // sampling mode: hosts per n
  std::size_t max_attempts = 100'000;
  double edge_probability = 0.5;
  std::uint64_t seed = 0;
  std::vector<ClaimParams> grid;     // empty: every admissible point for the host's Δ
  bool record_timings = true;
  DecomposeOptions engine;
};

struct HuntRecord {
  std::string graph6;
  std::size_t n = 0;
  std::size_t max_degree = 0;
  ClaimParams params;
  bool oracle_present = false;
  std::size_t oracle_v1 = 0;
  std::string engine;  // ok | mismatch | precondition | unsupported | fallback-exceeded | budget | counterexample | none
  bool engine_stalled = false;
  std::size_t engine_v1 = 0;
  double oracle_ms = 0;
  double engine_ms = 0;
};

struct HuntSummary {
  std::string claim;
  std::size_t hosts = 0;
  std::size_t cells = 0;
  std::size_t oracle_present = 0;
  std::size_t oracle_absent = 0;
  std::map<std::string, std::size_t> engine_verdicts;
  std::size_t refine_stalls = 0;
  std::vector<HuntRecord> counterexample_candidates;  // hypotheses met, oracle absent
  std::vector<HuntRecord> negative_results;           // oracle absent otherwise
  std::vector<HuntRecord> engine_gaps;                // oracle present, engine failed
};

inline bool is_theorem(Claim c) { return c == Claim::Theorem1 || c == Claim::Corollary1 || c == Claim::Lemma2; }

/// Admissible parameter points for a host of maximum degree d.
inline std::vector<ClaimParams> default_grid(Claim claim, std::size_t d) {
  std::vector<ClaimParams> out;
  auto add_pq = [&](std::size_t pmin, std::size_t qmin, std::size_t sum, std::string reading = {}) {
    for (std::size_t p = pmin; p + qmin <= sum; ++p) {
      ClaimParams cp;
      cp.p = p;
      cp.q = sum - p;
      cp.reading = reading;
      out.push_back(cp);
    }
  };
  switch (claim) {
    case Claim::Theorem1:
    case Claim::Problem1: add_pq(2, 3, d + 1); break;
    case Claim::Lemma2: add_pq(2, 2, d + 1); break;
    case Claim::Problem2:
      add_pq(2, 4, d + 1, "p+q=d+1");
      if (d >= 1) add_pq(2, 4, d - 1, "d=p+q+1");
      break;
    case Claim::Corollary1:
      for (std::size_t p1 = 4; p1 <= d + 2; ++p1)
        for (std::size_t p2 = 4; p2 <= p1; ++p2)
          if (p1 + p2 + 3 <= d + 2 && d + 2 - p1 - p2 <= p2) {
            ClaimParams cp;
            cp.ps = {p1, p2, d + 2 - p1 - p2};
            out.push_back(cp);
          }
      break;
  }
  return out;
}

namespace detail {

inline void run_engine(const Graph& g, Claim claim, const ClaimParams& cp, const DecomposeOptions& opt, HuntRecord& rec) {
  try {
    switch (claim) {
      case Claim::Theorem1: {
        auto r = decompose_two(g, first_spec(claim, cp), cp.p, cp.q, opt);
        rec.engine_stalled = r.refine.status == RefineStatus::Stalled;
        rec.engine_v1 = r.decomposition.parts[0].size();
        rec.engine = r.report.passed() && rec.oracle_present && rec.engine_v1 == rec.oracle_v1 ? "ok" : "mismatch";
        break;
      }
      case Claim::Lemma2: {
        auto r = clique_split(g, cp.p, cp.q, opt);
        rec.engine_v1 = r.decomposition.parts[0].size();
        rec.engine = r.report.passed() && rec.oracle_present ? "ok" : "mismatch";
        break;
      }
      case Claim::Corollary1: {
        std::vector<FreenessSpec> specs = cp.specs;
        if (specs.empty())
          for (std::size_t i = 0; i + 1 < cp.ps.size(); ++i) specs.push_back(FreenessSpec::clique(cp.ps[i]));
        auto r = decompose_k(g, specs, cp.ps, opt);
        rec.engine_stalled = r.last_refine.status == RefineStatus::Stalled;
        rec.engine_v1 = r.decomposition.parts[0].size();
        rec.engine = r.report.passed() && rec.oracle_present && rec.engine_v1 == rec.oracle_v1 ? "ok" : "mismatch";
        break;
      }
      default: rec.engine = "none";
    }
  } catch (const TheoremCounterexample&) {
    rec.engine = "counterexample";
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::PreconditionViolated: rec.engine = "precondition"; break;
      case ErrorKind::UnsupportedCase: rec.engine = "unsupported"; break;
      case ErrorKind::FallbackExceeded: rec.engine = "fallback-exceeded"; break;
      case ErrorKind::BudgetExhausted: rec.engine = "budget"; break;
      default: rec.engine = std::string("error:") + std::string(to_string(e.kind()));
    }
  }
}

inline bool engine_failed(const std::string& verdict) {
  return verdict != "ok" && verdict != "none" && verdict != "precondition" && verdict != "unsupported";
}

}  // namespace detail

/// Collects the hosts of a task in a deterministic order.
inline std::vector<Graph> hunt_hosts(const HuntTask& task) {
  if (task.n_min < 1 || task.n_min > task.n_max) throw Error(ErrorKind::ConfigError, "bad n range");
  const std::size_t limit = task.claim == Claim::Corollary1 ? kMaxKPartN : kMaxTwoPartN;
  if (task.n_max > limit) throw Error(ErrorKind::RangeExceeded, "n exceeds the oracle bound " + std::to_string(limit));
  std::vector<Graph> hosts;
  for (std::size_t n = task.n_min; n <= task.n_max; ++n) {
    if (task.exhaustive) {
      enumerate_graphs(n, task.filter, task.dedup, [&](const MaskGraph& g) {
        hosts.push_back(from_mask(g));
        return true;
      });
      continue;
    }
    std::mt19937_64 rng(task.seed ^ (0x9e3779b97f4a7c15ULL * n));
    std::bernoulli_distribution edge(task.edge_probability);
    std::size_t found = 0;
    for (std::size_t attempt = 0; attempt < task.max_attempts && found < task.samples; ++attempt) {
      MaskGraph g;
      g.n = n;
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
          if (edge(rng)) g.adj[u] |= Mask{1} << v, g.adj[v] |= Mask{1} << u;
      if (!passes(g, task.filter)) continue;
      hosts.push_back(from_mask(g));
      ++found;
    }
  }
  return hosts;
}

/// Runs oracle and engine on every (host, parameter) cell. Records reach
/// `sink` in host order whatever the worker count; the summary does not
/// depend on timings.
inline HuntSummary hunt(const HuntTask& task, std::size_t workers, const std::function<void(const HuntRecord&)>& sink) {
  if (!task.exhaustive && task.samples == 0) throw Error(ErrorKind::ConfigError, "sampling mode needs a sample count");
  const auto hosts = hunt_hosts(task);
  struct Cell {
    std::size_t host;
    ClaimParams params;
  };
  std::vector<Cell> cells;
  for (std::size_t h = 0; h < hosts.size(); ++h) {
    auto grid = task.grid.empty() ? default_grid(task.claim, hosts[h].max_degree()) : task.grid;
    for (auto& cp : grid) cells.push_back({h, cp});
  }

  std::vector<HuntRecord> records(cells.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < cells.size();) {
      const Graph& g = hosts[cells[i].host];
      HuntRecord& rec = records[i];
      rec.graph6 = to_graph6(g);
      rec.n = g.n();
      rec.max_degree = g.max_degree();
      rec.params = cells[i].params;
      using clock = std::chrono::steady_clock;
      auto t0 = clock::now();
      auto best = brute_force_best_decomposition(g, task.claim, rec.params);
      auto t1 = clock::now();
      rec.oracle_present = best.has_value();
      if (best) rec.oracle_v1 = best->parts[0].size();
      detail::run_engine(g, task.claim, rec.params, task.engine, rec);
      auto t2 = clock::now();
      if (task.record_timings) {
        rec.oracle_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        rec.engine_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
      }
    }
  };
  workers = std::max<std::size_t>(1, workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  HuntSummary s;
  s.claim = std::string(to_string(task.claim));
  s.hosts = hosts.size();
  s.cells = records.size();
  for (auto& rec : records) {
    if (sink) sink(rec);
    if (rec.oracle_present) ++s.oracle_present;
    else ++s.oracle_absent;
    ++s.engine_verdicts[rec.engine];
    if (rec.engine_stalled) ++s.refine_stalls;
    const bool hypotheses_met = rec.engine != "precondition" && rec.engine != "unsupported";
    if (!rec.oracle_present)
      (is_theorem(task.claim) && hypotheses_met ? s.counterexample_candidates : s.negative_results).push_back(rec);
    else if (detail::engine_failed(rec.engine)) s.engine_gaps.push_back(rec);
  }
  return s;
}

}  // namespace vpart::oracle
