#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "brute.hpp"
#include "vpart/generators.hpp"
#include "vpart/oracle.hpp"

using namespace vpart;
using namespace vpart::oracle;

namespace {

std::size_t count(std::size_t n, const GraphFilter& f, bool dedup = false) {
  std::size_t c = 0;
  enumerate_graphs(n, f, dedup, [&](const MaskGraph&) {
    ++c;
    return true;
  });
  return c;
}

bool isomorphic(const MaskGraph& a, const MaskGraph& b) {
  if (a.n != b.n) return false;
  std::vector<std::size_t> perm(a.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool same = true;
    for (std::size_t u = 0; u < a.n && same; ++u)
      for (std::size_t v = u + 1; v < a.n && same; ++v)
        same = ((a.adj[u] >> v) & 1) == ((b.adj[perm[u]] >> perm[v]) & 1);
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST(Enumerate, LabeledCounts) {
  const std::size_t expect[] = {0, 1, 2, 8, 64, 1024};
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(count(n, {}), expect[n]);
  EXPECT_EQ(count(3, GraphFilter{.connected = true}), 4u);
  EXPECT_EQ(count(3, GraphFilter{.connected = true}, true), 2u);
  EXPECT_EQ(count(1, GraphFilter{.connected = true}), 1u);
  EXPECT_THROW(count(0, {}), Error);
  EXPECT_THROW(count(11, {}), Error);
}

TEST(Enumerate, FiltersHold) {
  GraphFilter f{.connected = true, .max_degree = 3, .clique_free = 3};
  std::size_t seen = 0;
  enumerate_graphs(6, f, [&](const MaskGraph& m) {
    Graph g = from_mask(m);
    EXPECT_TRUE(is_connected(g));
    EXPECT_EQ(g.max_degree(), 3u);
    EXPECT_FALSE(brute::has_k_clique(g, 3, full_mask(6)));
    ++seen;
    return true;
  });
  EXPECT_GT(seen, 0u);
  GraphFilter kd{.kd_minus_e_free = true};
  enumerate_graphs(5, kd, [&](const MaskGraph& m) {
    Graph g = from_mask(m);
    EXPECT_FALSE(g.max_degree() >= 2 && find_kd_minus_e(g, g.max_degree()));
    return true;
  });
}

TEST(Enumerate, UnlabeledClassCounts) {
  const std::size_t expect[] = {0, 1, 2, 4, 11, 34, 156};
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(count(n, {}, true), expect[n]);
}

TEST(Enumerate, DedupKeepsPairwiseNonIsomorphic) {
  for (std::size_t n = 2; n <= 6; ++n) {
    std::vector<MaskGraph> reps;
    enumerate_graphs(n, GraphFilter{.connected = true}, true, [&](const MaskGraph& g) {
      reps.push_back(g);
      return true;
    });
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j) ASSERT_FALSE(isomorphic(reps[i], reps[j])) << n;
  }
}

TEST(CanonicalCode, InvariantUnderRelabeling) {
  std::mt19937_64 rng(137);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + rng() % 9;
    Graph g = gen::gnp(n, 0.4, rng);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> e;
    for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
    EXPECT_EQ(canonical_form(g), canonical_form(Graph::from_edges(n, e)));
  }
  EXPECT_NE(canonical_form(gen::path(4)), canonical_form(gen::star(3)));
  EXPECT_THROW(canonical_form(gen::empty(12)), Error);
}

TEST(BadTable, MatchesEngineFreeness) {
  std::mt19937_64 rng(139);
  const std::vector<FreenessSpec> specs{FreenessSpec::clique(3), FreenessSpec::min_degree_core(2),
                                        FreenessSpec::patterns({gen::cycle(4)})};
  for (int i = 0; i < 30; ++i) {
    Graph g = gen::gnp(8, 0.45, rng);
    for (auto& spec : specs) {
      auto bad = bad_table(to_mask(g), spec);
      for (Mask x = 0; x < 256; ++x) ASSERT_EQ(bad[x] != 0, !is_free(g, to_set(x, 8), spec));
    }
  }
}

TEST(BruteForce, Examples) {
  ClaimParams cp;
  cp.p = 2;
  cp.q = 4;
  auto kb = brute_force_best_decomposition(gen::complete_bipartite(5, 5), Claim::Theorem1, cp);
  ASSERT_TRUE(kb);
  EXPECT_EQ(kb->parts[0].size(), 5u);

  cp.p = 2;
  cp.q = 1;
  auto c5 = brute_force_best_decomposition(gen::cycle(5), Claim::Theorem1, cp);
  ASSERT_TRUE(c5);
  EXPECT_EQ(c5->parts[0].size(), 2u);

  // K5 with q = 3: an independent V1 leaves a K4, whose triangles overlap.
  cp.p = 2;
  cp.q = 3;
  EXPECT_FALSE(brute_force_best_decomposition(gen::complete(5), Claim::Theorem1, cp));

  EXPECT_THROW(brute_force_best_decomposition(gen::empty(17), Claim::Theorem1, cp), Error);
  ClaimParams ck;
  ck.ps = {4, 4, 3};
  EXPECT_THROW(brute_force_best_decomposition(gen::empty(11), Claim::Corollary1, ck), Error);
}

TEST(BruteForce, ConclusionHoldsOnResult) {
  std::mt19937_64 rng(149);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 4 + rng() % 5;
    Graph g = gen::gnp(n, 0.5, rng);
    const std::size_t d = g.max_degree();
    if (d < 4) continue;
    ClaimParams cp;
    cp.p = 2;
    cp.q = d - 1;
    auto best = brute_force_best_decomposition(g, Claim::Theorem1, cp);
    if (!best) continue;
    const Mask v1 = to_mask(best->parts[0]), v2 = full_mask(n) & ~v1;
    EXPECT_EQ(brute::edges_in(g, v1), 0u);
    EXPECT_EQ(best->parts[0].size(), max_free_size(g, FreenessSpec::clique(2)));
    EXPECT_LE(brute::max_degree_in(g, v2), cp.q);
    EXPECT_TRUE(brute::cliques_disjoint(g, cp.q, v2));
  }
}

TEST(Claims, ParseRoundTrip) {
  for (Claim c : {Claim::Theorem1, Claim::Corollary1, Claim::Lemma2, Claim::Problem1, Claim::Problem2})
    EXPECT_EQ(parse_claim(to_string(c)), c);
  EXPECT_FALSE(parse_claim("lemma9"));
  EXPECT_EQ(default_grid(Claim::Theorem1, 5).size(), 2u);  // (2,4), (3,3)
}

TEST(Hunt, ExhaustiveSixVertexHostsHaveNoCandidates) {
  HuntTask t;
  t.claim = Claim::Theorem1;
  t.n_min = t.n_max = 6;
  t.filter = GraphFilter{.connected = true, .max_degree = 5, .kd_minus_e_free = true};
  std::size_t seen = 0;
  auto s = hunt(t, 2, [&](const HuntRecord&) { ++seen; });
  EXPECT_EQ(seen, s.cells);
  EXPECT_GT(s.hosts, 0u);
  EXPECT_TRUE(s.counterexample_candidates.empty());
  EXPECT_TRUE(s.engine_gaps.empty());
  EXPECT_EQ(s.oracle_absent, 0u);
}

TEST(Hunt, EmptyFilterYieldsNoHosts) {
  HuntTask t;
  t.n_min = t.n_max = 4;
  t.filter = GraphFilter{.max_degree = 7};
  auto s = hunt(t, 1, {});
  EXPECT_EQ(s.hosts, 0u);
  EXPECT_EQ(s.cells, 0u);
}

TEST(Hunt, DeterministicAcrossWorkerCounts) {
  HuntTask t;
  t.claim = Claim::Lemma2;
  t.n_min = 6;
  t.n_max = 7;
  t.exhaustive = false;
  t.samples = 40;
  t.edge_probability = 0.6;
  t.seed = 5;
  t.filter = GraphFilter{.connected = true, .max_degree_min = 4, .kd_minus_e_free = true};
  auto collect = [&](std::size_t w) {
    std::vector<std::string> out;
    hunt(t, w, [&](const HuntRecord& r) { out.push_back(r.graph6 + r.engine + std::to_string(r.oracle_v1)); });
    return out;
  };
  EXPECT_EQ(collect(1), collect(3));
  EXPECT_THROW(hunt(HuntTask{.exhaustive = false}, 1, {}), Error);
}
