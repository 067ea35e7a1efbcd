#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "ryser/constructions.hpp"
#include "ryser/decompose.hpp"
#include "brute_force.hpp"

using namespace ryser;

TEST(Kernels, AllKernelsOfH1Recheck) {
  const auto h = build_h1(3, 2).graph;
  const auto en = enumerate_kernels(h);
  EXPECT_EQ(en.status, SearchStatus::Exhausted);
  ASSERT_FALSE(en.kernels.empty());
  for (const auto& k : en.kernels) {
    EXPECT_TRUE(recheck_kernel(h, k));
    EXPECT_GE(k.tau, h.r() - 1);
  }
  // No duplicates.
  auto ks = en.kernels;
  std::sort(ks.begin(), ks.end(), [](const auto& a, const auto& b) { return a.edge_ids < b.edge_ids; });
  EXPECT_EQ(std::adjacent_find(ks.begin(), ks.end()), ks.end());
}

TEST(Decompose, BaseCasesHaveNoDisjointPair) {
  for (const auto& c : {build_h1(3, 2), build_h2(4, 2)}) {
    const auto res = find_disjoint_ryser_pair(c.graph);
    EXPECT_EQ(res.outcome, PairOutcome::NoneExhaustive);
    EXPECT_FALSE(res.pair.has_value());
  }
  EXPECT_EQ(find_disjoint_ryser_pair(build_g1().graph).outcome, PairOutcome::NoneExhaustive);
}

TEST(Decompose, DisjointCopiesSplit) {
  const auto tc = conic_truncated(3).graph;
  const auto u = disjoint_union(tc, tc);
  const auto res = find_disjoint_ryser_pair(u);
  ASSERT_EQ(res.outcome, PairOutcome::Found);
  const int half = tc.vertex_count();
  auto side_of = [&](const RyserKernel& k) {
    const bool lo = std::all_of(k.support.begin(), k.support.end(), [&](int v) { return v < half; });
    const bool hi = std::all_of(k.support.begin(), k.support.end(), [&](int v) { return v >= half; });
    return lo ? 0 : (hi ? 1 : -1);
  };
  EXPECT_EQ(side_of(res.pair->first), 0);
  EXPECT_EQ(side_of(res.pair->second), 1);
  EXPECT_TRUE(recheck_kernel(u, res.pair->first));
  EXPECT_TRUE(recheck_kernel(u, res.pair->second));
  EXPECT_EQ(find_disjoint_ryser_pair(disjoint_union(truncated_plane(3).graph, truncated_plane(3).graph)).outcome,
            PairOutcome::Found);
}

// Three planes: plane-1 lines avoiding P closed off by e1 of plane 2, against
// the plane-3 family, which is the one that keeps P.
TEST(Decompose, ThreePlaneH1Splits) {
  const auto c = build_h1(3, 3);
  const auto& h = c.graph;
  const auto res = find_disjoint_ryser_pair(h);
  ASSERT_EQ(res.outcome, PairOutcome::Found);
  const auto& [a, b] = *res.pair;
  EXPECT_TRUE(recheck_kernel(h, a));
  EXPECT_TRUE(recheck_kernel(h, b));
  EXPECT_TRUE(supports_disjoint(a, b));
  const int e1_2 = c.recipe.named_edges.at("e1_2");
  EXPECT_TRUE(std::binary_search(a.edge_ids.begin(), a.edge_ids.end(), e1_2));
  const int p = *h.find_vertex("p1:(0:1:0)");
  EXPECT_FALSE(std::binary_search(a.support.begin(), a.support.end(), p));
  EXPECT_TRUE(std::binary_search(b.support.begin(), b.support.end(), p));
  for (int v : b.support)
    if (v != p) {
      EXPECT_EQ(h.vertex(v).label.substr(0, 3), "p3:");
    }
}

TEST(Decompose, CapHitIsInconclusive) {
  const auto res = find_disjoint_ryser_pair(build_h2(4, 2).graph, 50);
  EXPECT_EQ(res.outcome, PairOutcome::Inconclusive);
  const auto cert = to_certificate(build_h2(4, 2).graph, res);
  EXPECT_EQ(cert.kind, CertificateKind::NoDisjointPair);
  EXPECT_FALSE(cert.exhaustive);
}

TEST(Decompose, AgreesWithBruteForceOnSmallInstances) {
  const auto tc = conic_truncated(3).graph;
  const std::vector<Hypergraph> bases{build_h1(3, 2).graph, disjoint_union(tc, tc),
                                      disjoint_union(truncated_plane(3).graph, tc), build_g1().graph,
                                      build_h1(3, 3).graph, build_h2(4, 2).graph,
                                      disjoint_union(truncated_plane(2).graph, truncated_plane(2).graph)};
  int found = 0;
  for (unsigned seed = 0; seed < 60; ++seed) {
    std::mt19937 rng(seed);
    const auto h = brute::random_sub(bases[seed % bases.size()], rng, 10);
    ASSERT_LT(h.vertex_count(), 64);
    const auto res = find_disjoint_ryser_pair(h);
    ASSERT_NE(res.outcome, PairOutcome::Inconclusive);
    const bool expect = brute::disjoint_pair_exists(h);
    EXPECT_EQ(res.outcome == PairOutcome::Found, expect) << "seed " << seed;
    found += expect;
  }
  EXPECT_GT(found, 0);  // the sample exercises both answers
  EXPECT_LT(found, 60);
}
