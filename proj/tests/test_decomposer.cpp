#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "vpart/decomposer.hpp"
#include "vpart/generators.hpp"
#include "vpart/oracle.hpp"

using namespace vpart;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no vpart::Error thrown";
  return ErrorKind::ConfigError;
}

/// Replays a refine trace from its seed and checks every step.
void expect_trace_sound(const Graph& g, const FreenessSpec& spec, std::size_t q, const RefineResult& r) {
  VertexSet s = r.s0;
  for (auto& step : r.trace) {
    EXPECT_FALSE(s.contains(step.v_in));
    EXPECT_TRUE(s.contains(step.y_out) || step.y_out == step.v_in);
    EXPECT_LT(step.potential_after, step.potential_before);
    const Potential before{count_near_cliques_within(g, s.complement(), q), g.edges_within(s.complement())};
    EXPECT_EQ(before, step.potential_before);
    s = s.with(step.v_in).without(step.y_out);
    const Potential after{count_near_cliques_within(g, s.complement(), q), g.edges_within(s.complement())};
    EXPECT_EQ(after, step.potential_after);
    EXPECT_EQ(s.size(), r.s0.size());
    EXPECT_TRUE(is_free(g, s, spec));
  }
  EXPECT_EQ(s, r.s);
  EXPECT_LE(r.trace.size(), r.cap);
}

Graph k5_with_two_pendants() {
  return gen::with_edges(gen::complete(5), 7, {{0, 5}, {0, 6}});
}

}  // namespace

TEST(Potential, LexicographicOrder) {
  EXPECT_LT((Potential{0, 9}), (Potential{1, 0}));
  EXPECT_LT((Potential{1, 2}), (Potential{1, 3}));
  EXPECT_EQ((Potential{2, 2}), (Potential{2, 2}));
}

TEST(Refine, AlreadyNearCliqueFree) {
  Graph g = gen::complete_bipartite(5, 5);
  VertexSet s0(10, {0, 1, 2, 3, 4});
  auto r = refine(g, FreenessSpec::clique(2), 2, 4, s0);
  EXPECT_TRUE(r.trace.empty());
  EXPECT_EQ(r.s, s0);
  EXPECT_EQ(r.final_potential, (Potential{0, 0}));
  EXPECT_EQ(r.status, RefineStatus::Converged);
}

TEST(Refine, SwapRemovesTheOnlyNearClique) {
  // Found by searching maximum K3-free sets of n <= 9 hosts; the seed's
  // complement spans exactly one K4∖e.
  Graph g = parse_graph6("G{Nbos");
  ASSERT_EQ(g.max_degree(), 5u);
  VertexSet s0(8, {0, 3, 5, 7});
  const FreenessSpec spec = FreenessSpec::clique(3);
  ASSERT_EQ(oracle::max_free_size(g, spec), s0.size());
  ASSERT_EQ(brute::near_clique_count(g, 3, brute::mask_of(s0.complement())), 1u);
  auto r = refine(g, spec, 3, 3, s0);
  EXPECT_FALSE(r.trace.empty());
  EXPECT_EQ(r.final_potential.g_copies, 0u);
  EXPECT_EQ(brute::near_clique_count(g, 3, brute::mask_of(r.s.complement())), 0u);
  expect_trace_sound(g, spec, 3, r);
}

TEST(Refine, Preconditions) {
  Graph g = parse_graph6("G{Nbos");
  const FreenessSpec spec = FreenessSpec::clique(3);
  EXPECT_EQ(kind_of([&] { refine(g, spec, 2, 3, VertexSet(8)); }), ErrorKind::PreconditionViolated);
  EXPECT_EQ(kind_of([&] { refine(g, spec, 4, 2, VertexSet(8)); }), ErrorKind::PreconditionViolated);
  // not free
  EXPECT_EQ(kind_of([&] { refine(g, spec, 3, 3, VertexSet::full(8)); }), ErrorKind::NotOptimalSeed);
  // free but a vertex can still be added
  EXPECT_EQ(kind_of([&] { refine(g, spec, 3, 3, VertexSet(8, {0})); }), ErrorKind::NotOptimalSeed);
}

TEST(Refine, TracesFromEveryMaximumSeed) {
  std::mt19937_64 rng(103);
  std::size_t traces = 0, steps = 0;
  for (int it = 0; it < 6000 && traces < 400; ++it) {
    Graph g = gen::gnp(8 + it % 2, 0.55, rng);
    if (!is_connected(g) || g.max_degree() != 5 || find_kd_minus_e(g, 5)) continue;
    for (auto [p, q] : {std::pair<std::size_t, std::size_t>{3, 3}, {2, 4}}) {
      const FreenessSpec spec = FreenessSpec::clique(p);
      for_each_maximum_free_set(g, spec, g.vertices(), kDefaultNodeBudget, [&](const VertexSet& s0) {
        auto r = refine(g, spec, p, q, s0);
        ++traces;
        steps += r.trace.size();
        expect_trace_sound(g, spec, q, r);
        EXPECT_EQ(r.status, RefineStatus::Converged) << to_graph6(g);
        return true;
      });
    }
  }
  EXPECT_GT(traces, 100u);
  // Random seeds almost never need a swap; this host does for some seeds.
  const Graph h = parse_graph6("G{Nbos");
  const FreenessSpec k3 = FreenessSpec::clique(3);
  std::size_t nonempty = 0;
  for_each_maximum_free_set(h, k3, h.vertices(), kDefaultNodeBudget, [&](const VertexSet& s0) {
    auto r = refine(h, k3, 3, 3, s0);
    nonempty += !r.trace.empty();
    steps += r.trace.size();
    expect_trace_sound(h, k3, 3, r);
    return true;
  });
  EXPECT_GT(nonempty, 0u);
  EXPECT_GT(steps, 0u);
}

TEST(DecomposeTwo, BipartiteHost) {
  auto r = decompose_two(gen::complete_bipartite(5, 5), FreenessSpec::clique(2), 2, 4);
  EXPECT_EQ(r.decomposition.parts[0].to_vector(), (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_EQ(r.decomposition.parts[1].size(), 5u);
  EXPECT_TRUE(r.report.passed());
}

TEST(DecomposeTwo, IcosahedronForest) {
  const Graph g = gen::icosahedron();
  auto r = decompose_two(g, FreenessSpec::min_degree_core(2), 3, 3);
  const VertexSet& v1 = r.decomposition.parts[0];
  const VertexSet& v2 = r.decomposition.parts[1];
  EXPECT_EQ(v1.size(), 6u);
  EXPECT_FALSE(brute::has_cycle(g, brute::mask_of(v1)));
  EXPECT_LE(brute::max_degree_in(g, brute::mask_of(v2)), 3u);
  EXPECT_TRUE(brute::cliques_disjoint(g, 3, brute::mask_of(v2)));
  EXPECT_TRUE(r.report.passed());
}

TEST(DecomposeTwo, PreconditionWitnesses) {
  try {
    decompose_two(gen::complete(6), FreenessSpec::clique(2), 2, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PreconditionViolated);
    EXPECT_EQ(e.witness().kind, "kd-minus-e");
    EXPECT_EQ(e.witness().vertices.size(), 5u);
  }
  EXPECT_EQ(kind_of([] { decompose_two(gen::disjoint_union(gen::complete_bipartite(5, 5), gen::complete(1)),
                                       FreenessSpec::clique(2), 2, 4); }),
            ErrorKind::PreconditionViolated);
  EXPECT_EQ(kind_of([] { decompose_two(gen::petersen(), FreenessSpec::clique(2), 2, 2); }), ErrorKind::PreconditionViolated);
  EXPECT_EQ(kind_of([] { decompose_two(gen::complete_bipartite(5, 5), FreenessSpec::clique(2), 3, 4); }),
            ErrorKind::PreconditionViolated);
  // family minimum degree below p - 1
  EXPECT_EQ(kind_of([] { decompose_two(gen::complete_bipartite(5, 5), FreenessSpec::clique(2), 3, 3); }),
            ErrorKind::PreconditionViolated);
  EXPECT_EQ(kind_of([] { decompose_two(Graph(0), FreenessSpec::clique(2), 2, 4); }), ErrorKind::EmptyGraph);
}

TEST(DecomposeTwo, AgreesWithOracleOnSampledEightVertexHosts) {
  std::mt19937_64 rng(107);
  int hosts = 0;
  for (int it = 0; it < 200000 && hosts < 1500; ++it) {
    Graph g = gen::gnp(8, 0.5 + 0.1 * (it % 3), rng);
    const std::size_t d = g.max_degree();
    if (d < 5 || !is_connected(g) || find_kd_minus_e(g, d)) continue;
    ++hosts;
    for (std::size_t p = 2; p + 3 <= d + 1; ++p) {
      const std::size_t q = d + 1 - p;
      auto r = decompose_two(g, FreenessSpec::clique(p), p, q);
      oracle::ClaimParams cp;
      cp.p = p;
      cp.q = q;
      auto best = oracle::brute_force_best_decomposition(g, oracle::Claim::Theorem1, cp);
      ASSERT_TRUE(best) << to_graph6(g);
      EXPECT_TRUE(r.report.passed()) << to_graph6(g);
      EXPECT_EQ(r.decomposition.parts[0].size(), best->parts[0].size()) << to_graph6(g);
    }
  }
  EXPECT_GT(hosts, 500);
}

TEST(DecomposeTwo, FallbackBound) {
  // A host whose refine cannot stall still honours the option plumbing.
  DecomposeOptions opt;
  opt.fallback_max_n = 0;
  auto r = decompose_two(gen::complete_bipartite(5, 5), FreenessSpec::clique(2), 2, 4, opt);
  EXPECT_FALSE(r.used_fallback);
}

TEST(DecomposeK, TriangleFreeHost) {
  Graph g = gen::complete_bipartite(9, 9);
  std::vector<FreenessSpec> specs{FreenessSpec::clique(4), FreenessSpec::clique(4)};
  auto r = decompose_k(g, specs, {4, 4, 3});
  ASSERT_EQ(r.decomposition.parts.size(), 3u);
  EXPECT_EQ(r.decomposition.parts[0], g.vertices());
  EXPECT_TRUE(r.decomposition.parts[1].empty());
  EXPECT_TRUE(r.decomposition.parts[2].empty());
  EXPECT_TRUE(r.report.passed());
}

TEST(DecomposeK, RandomNineRegular) {
  std::mt19937_64 rng(109);
  std::vector<FreenessSpec> specs{FreenessSpec::clique(4), FreenessSpec::clique(4)};
  int done = 0;
  while (done < 3) {
    Graph g = gen::random_regular(20, 9, rng);
    if (!is_connected(g) || find_kd_minus_e(g, 9)) continue;
    ++done;
    auto r = decompose_k(g, specs, {4, 4, 3});
    EXPECT_TRUE(r.report.passed());
    for (std::size_t i = 0; i < 2; ++i) EXPECT_FALSE(brute::has_k_clique(g, 4, brute::mask_of(r.decomposition.parts[i])));
    const std::uint32_t last = brute::mask_of(r.decomposition.parts[2]);
    EXPECT_LE(brute::max_degree_in(g, last), 3u);
    EXPECT_TRUE(brute::cliques_disjoint(g, 3, last));
    ASSERT_EQ(r.levels.size(), 2u);
    for (auto& l : r.levels) {
      EXPECT_TRUE(l.sum_matches);
      EXPECT_LE(l.residue_max_degree, l.degree_bound);
    }
  }
}

TEST(DecomposeK, Preconditions) {
  Graph g = gen::complete_bipartite(9, 9);
  std::vector<FreenessSpec> specs{FreenessSpec::clique(4), FreenessSpec::clique(4)};
  EXPECT_EQ(kind_of([&] { decompose_k(g, specs, {4, 4, 4}); }), ErrorKind::PreconditionViolated);
  EXPECT_EQ(kind_of([&] { decompose_k(g, specs, {3, 4, 4}); }), ErrorKind::PreconditionViolated);
  EXPECT_EQ(kind_of([&] { decompose_k(g, {FreenessSpec::clique(4)}, {4, 4, 3}); }), ErrorKind::PreconditionViolated);
  EXPECT_EQ(kind_of([&] { decompose_k(gen::complete_bipartite(5, 5), specs, {4, 4, 3}); }),
            ErrorKind::PreconditionViolated);
}

TEST(DegenerateSplit, Examples) {
  auto pet = degenerate_split(gen::petersen(), 1, 2);
  EXPECT_TRUE(pet.report.passed());
  const Graph c5 = gen::cycle(5);
  EXPECT_EQ(kind_of([&] { degenerate_split(c5, 1, 2); }), ErrorKind::PreconditionViolated);  // Δ = 2
  EXPECT_EQ(kind_of([] { degenerate_split(gen::complete(4), 1, 2); }), ErrorKind::PreconditionViolated);
  EXPECT_EQ(kind_of([] { degenerate_split(gen::petersen(), 1, 1); }), ErrorKind::PreconditionViolated);
}

TEST(DegenerateSplit, ObjectiveNeverIncreasesBeforeRepairs) {
  std::mt19937_64 rng(113);
  for (int i = 0; i < 100; ++i) {
    Graph g = gen::random_regular(12, 3, rng);
    if (clique_number(g) > 3) continue;
    auto r = degenerate_split(g, 1, 2, DecomposeOptions{.seed = static_cast<std::uint64_t>(i)});
    EXPECT_TRUE(r.report.passed());
    if (r.repairs == 0)
      for (std::size_t k = 1; k < r.objective_trace.size(); ++k) EXPECT_LT(r.objective_trace[k], r.objective_trace[k - 1]);
  }
}

TEST(DegenerateSplit, FourBoundsOnMixedHosts) {
  std::mt19937_64 rng(127);
  int done = 0;
  for (int it = 0; it < 4000 && done < 150; ++it) {
    Graph g = gen::gnp(10, 0.45, rng);
    const std::size_t d = g.max_degree();
    if (d < 3 || clique_number(g) > d) continue;
    ++done;
    for (std::size_t p = 1; p < d; ++p) {
      auto r = degenerate_split(g, p, d - p);
      const std::uint32_t a = brute::mask_of(r.decomposition.parts[0]), b = brute::mask_of(r.decomposition.parts[1]);
      EXPECT_LE(brute::max_degree_in(g, a), p);
      EXPECT_LE(brute::max_degree_in(g, b), d - p);
      EXPECT_TRUE(r.report.passed()) << to_graph6(g) << " p=" << p;
    }
  }
}

TEST(DegenerateMaxSplit, Examples) {
  auto pet = degenerate_max_split(gen::petersen(), 1, 2);
  EXPECT_EQ(pet.decomposition.parts[0].size(), 4u);
  EXPECT_FALSE(brute::has_cycle(gen::petersen(), brute::mask_of(pet.decomposition.parts[1])));
  EXPECT_TRUE(pet.report.passed());

  EXPECT_EQ(kind_of([] { degenerate_max_split(gen::cycle(7), 2, 1); }), ErrorKind::PreconditionViolated);

  Graph k4p = gen::with_edges(gen::complete(4), 5, {{0, 4}});
  auto r = degenerate_max_split(k4p, 2, 2);
  EXPECT_EQ(r.decomposition.parts[0].size(), oracle::max_free_size(k4p, FreenessSpec::min_degree_core(2)));
  EXPECT_FALSE(brute::has_cycle(k4p, brute::mask_of(r.decomposition.parts[1])));
  EXPECT_TRUE(r.report.passed());
}

TEST(HittingIndependentSet, Examples) {
  Graph k5p = gen::with_edges(gen::complete(5), 6, {{0, 5}});
  auto hit = hitting_independent_set(k5p);
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->size(), 1u);

  // C5: maximum cliques are the edges; no independent set meets all five.
  const Graph c5 = gen::cycle(5);
  bool exists = false;
  for (std::uint32_t s = 0; s < 32; ++s) {
    if (brute::edges_in(c5, s)) continue;
    bool hits = true;
    for (auto [u, v] : c5.edges()) hits &= (s >> u & 1) || (s >> v & 1);
    exists |= hits;
  }
  EXPECT_EQ(hitting_independent_set(c5).has_value(), exists);
  EXPECT_FALSE(exists);

  EXPECT_EQ(*hitting_independent_set(gen::empty(4)), VertexSet::full(4));
  EXPECT_THROW(hitting_independent_set(Graph(0)), Error);
}

TEST(HittingIndependentSet, AgreesWithBruteForce) {
  std::mt19937_64 rng(131);
  for (int i = 0; i < 300; ++i) {
    std::size_t n = 3 + rng() % 8;
    Graph g = gen::gnp(n, 0.5, rng);
    const auto cliques = maximum_cliques(g);
    bool exists = false;
    for (std::uint32_t s = 0; s < (1u << n) && !exists; ++s) {
      if (brute::edges_in(g, s)) continue;
      bool all = true;
      for (auto& c : cliques) all &= (brute::mask_of(c) & s) != 0;
      exists = all;
    }
    auto hit = hitting_independent_set(g);
    ASSERT_EQ(hit.has_value(), exists) << to_graph6(g);
    if (hit) {
      EXPECT_EQ(brute::edges_in(g, brute::mask_of(*hit)), 0u);
      for (auto& c : cliques) EXPECT_TRUE(c.intersects(*hit));
    }
  }
}

TEST(CliqueSplit, Examples) {
  Graph kb = gen::complete_bipartite(5, 5);
  EXPECT_EQ(kind_of([&] { clique_split(kb, 4, 2); }), ErrorKind::UnsupportedCase);
  auto del = clique_split(kb, 2, 4);
  EXPECT_FALSE(del.via_hitting_set);
  EXPECT_EQ(del.decomposition.parts[0].size(), 5u);
  EXPECT_TRUE(del.report.passed());

  Graph g = k5_with_two_pendants();
  ASSERT_EQ(g.max_degree(), 6u);
  ASSERT_EQ(clique_number(g), 5u);
  ASSERT_FALSE(find_kd_minus_e(g, 6));
  auto r = clique_split(g, 5, 2);
  EXPECT_TRUE(r.via_hitting_set);
  const VertexSet& v2 = r.decomposition.parts[1];
  EXPECT_EQ(brute::edges_in(g, brute::mask_of(v2)), 0u);
  EXPECT_TRUE(v2.intersects(VertexSet(7, {0, 1, 2, 3, 4})));
  EXPECT_LE(clique_number(induced_subgraph(g, r.decomposition.parts[0]).graph), 4u);
  EXPECT_TRUE(r.report.passed());
}
