// Copyright 2026 The spanhop Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "spanhop/generators.hpp"
#include "spanhop/spanners.hpp"
#include "spanhop/verify.hpp"

using namespace spanhop;

namespace {

// Every pair with lo <= dist_G <= hi satisfies dist_H <= alpha dist_G + beta.
size_t violations(const Graph& g, const EdgeSubgraph& h, double alpha, double beta,
                  Dist lo = 0, Dist hi = kInf) {
  auto dg = oracle::floyd_warshall(g);
  auto dh = oracle::floyd_warshall(h);
  size_t bad = 0;
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) {
      if (dg[u][v] == kInf || dg[u][v] < lo || dg[u][v] > hi) continue;
      if (dh[u][v] > alpha * dg[u][v] + beta + 1e-9) ++bad;
    }
  }
  return bad;
}

bool is_subgraph(const Graph& g, const EdgeSubgraph& h) {
  for (int32_t id : h.edge_ids()) {
    if (id < 0 || static_cast<size_t>(id) >= g.m()) return false;
  }
  return true;
}

}  // namespace

TEST(ShortDistTest, ParameterErrors) {
  Graph g = gnp_graph(30, 0.2, 1);
  RngStream rng(1);
  EXPECT_THROW(spanner_short_dist(g, 4, 2, rng), std::invalid_argument);
  EXPECT_THROW(spanner_short_dist(g, 4, 0, rng), std::invalid_argument);
  Graph w = gnp_graph(30, 0.2, 1, {WeightLaw::kUniform, 1, 3, 0});
  EXPECT_THROW(spanner_short_dist(w, 4, 1, rng), std::invalid_argument);
}

TEST(ShortDistTest, KFourDOneMeetsCertificate) {
  for (uint64_t s = 0; s < 10; ++s) {
    Graph g = gnp_graph(100, 0.08, s);
    RngStream rng(s + 100);
    auto r = spanner_short_dist(g, 4, 1, rng);
    EXPECT_TRUE(is_subgraph(g, r.h));
    EXPECT_EQ(r.cert.beta, 28);
    EXPECT_EQ(r.cert.pair_lo, 1);
    EXPECT_EQ(r.cert.pair_hi, 1);
    EXPECT_EQ(violations(g, r.h, 0, 28, 1, 1), 0u);
    // Edges at unclustered vertices keep stretch 2k/d - 1.
    auto owner = r.levels.front().owner(g.n());
    auto dh = oracle::floyd_warshall(r.h);
    for (const Edge& e : g.edges()) {
      if (owner[e.u] < 0 || owner[e.v] < 0) EXPECT_LE(dh[e.u][e.v], 7);
    }
  }
}

TEST(ShortDistTest, SingleEdge) {
  Graph g(2, {{0, 1, 1}}, false);
  RngStream rng(3);
  auto r = spanner_short_dist(g, 4, 1, rng);
  auto dh = oracle::floyd_warshall(r.h);
  EXPECT_LE(dh[0][1], 28);
}

TEST(ShortDistTest, DistanceTwoSweep) {
  for (uint64_t s = 0; s < 4; ++s) {
    Graph g = gnp_graph(128, 0.05, 40 + s);
    RngStream rng(s);
    auto r = spanner_short_dist(g, 16, 2, rng);
    EXPECT_EQ(violations(g, r.h, 0, 7 * 16, 2, 2), 0u);
    EXPECT_EQ(certify_spanner(g, r.h, r.cert).violation_count, 0u);
  }
}

TEST(SuperclusterTest, AlphaTable) {
  EXPECT_EQ(supercluster_alphas(17, 20, 3), (std::vector<Dist>{4, 9, 16}));
  for (int K : {16, 20, 24, 40}) {
    for (Dist r0 : {1.0, 5.0, 17.0, 100.0}) {
      auto a = supercluster_alphas(r0, K, 10);
      for (int j = 1; j <= 10; ++j) {
        EXPECT_LE(a[j - 1], supercluster_alpha_bound(r0, K, j) + 1e-9);
      }
    }
  }
}

TEST(SuperclusterTest, ZeroStepsIsIdentity) {
  Graph g = gnp_graph(256, 0.03, 5);
  RngStream rng(5);
  auto bs = truncated_baswana_sen(g, 256, 3, rng);
  auto r = supercluster_augment(g, 256, 0, 0.5, bs.clustering, rng);
  EXPECT_EQ(r.h.size(), 0u);
  ASSERT_EQ(r.clustering.size(), bs.clustering.size());
  for (size_t i = 0; i < r.clustering.size(); ++i) {
    EXPECT_EQ(r.clustering.clusters[i].members, bs.clustering.clusters[i].members);
  }
}

TEST(SuperclusterTest, RadiusRecurrenceAndAudit) {
  Graph g = gnp_graph(256, 0.02, 6);
  for (uint64_t s = 0; s < 5; ++s) {
    RngStream rng(s);
    auto bs = truncated_baswana_sen(g, 256, 4, rng);
    auto r = supercluster_augment(g, 256, 4, 0.5, bs.clustering, rng);
    Dist r0 = bs.clustering.max_radius_bound();
    Dist prev = r0;
    auto alphas = supercluster_alphas(r0, 16, 4);
    ASSERT_EQ(r.steps.size(), 4u);
    for (size_t j = 0; j < r.steps.size(); ++j) {
      EXPECT_EQ(r.steps[j].alpha, alphas[j]);
      EXPECT_EQ(r.steps[j].radius, prev + 2 * r0 + 2 * alphas[j]);
      prev = r.steps[j].radius;
    }
    EXPECT_TRUE(all_ok(r.radius_audit));
    // Every member lies within the tracked bound of its center in H.
    EdgeSubgraph both = bs.h;
    both.merge(r.h);
    auto db = oracle::floyd_warshall(both);
    for (const Cluster& c : r.clustering.clusters) {
      for (Vertex v : c.members) EXPECT_LE(db[c.center][v], c.radius_bound + 1e-9);
    }
  }
}

TEST(LongDistPlanTest, Branches) {
  auto p0 = long_distance_plan(256, 0.5);
  EXPECT_EQ(p0.K, 16);
  EXPECT_EQ(p0.t, 4);
  EXPECT_TRUE(p0.integral);
  EXPECT_TRUE(p0.steps.empty());

  auto p1 = long_distance_plan(1024, 0.4);
  EXPECT_TRUE(p1.integral);
  EXPECT_EQ(p1.steps, (std::vector<int>{4}));

  auto up = long_distance_plan(695, 0.45);
  EXPECT_FALSE(up.integral);
  EXPECT_TRUE(up.rounded_up);
  EXPECT_EQ(up.K, 20);
  EXPECT_EQ(up.steps, (std::vector<int>{5}));

  auto fl = long_distance_plan(462, 0.48);
  EXPECT_FALSE(fl.integral);
  EXPECT_FALSE(fl.rounded_up);
  EXPECT_EQ(fl.steps, (std::vector<int>{1}));

  auto wide = long_distance_plan(300, 0.5);
  EXPECT_EQ(wide.K, 18);
  EXPECT_TRUE(wide.widened);
}

TEST(LongDistTest, ParameterErrors) {
  Graph g = gnp_graph(64, 0.1, 1);
  RngStream rng(1);
  EXPECT_THROW(spanner_long_dist(g, 255, 1, 0.5, rng), std::invalid_argument);
  EXPECT_THROW(spanner_long_dist(g, 256, 1, 0.6, rng), std::invalid_argument);
  EXPECT_THROW(spanner_long_dist(g, 256, 0, 0.5, rng), std::invalid_argument);
}

TEST(LongDistTest, DegenerateZeroPhases) {
  Graph g = gnp_graph(256, 0.02, 9);
  RngStream rng(9);
  for (int d : {1, 2, 4}) {
    auto r = spanner_long_dist(g, 256, d, 0.5, rng);
    EXPECT_EQ(r.schedule.T, 0);
    EXPECT_EQ(r.levels.size(), 1u);
    EXPECT_TRUE(all_ok(r.radius_audit));
    EXPECT_EQ(violations(g, r.h, r.cert.alpha, r.cert.beta, d, d), 0u);
  }
}

TEST(LongDistTest, FractionalBranchesAuditAndCertify) {
  Graph g = gnp_graph(256, 0.02, 12);
  for (auto [k, eps] : {std::pair<int64_t, double>{695, 0.45}, {462, 0.48}}) {
    RngStream rng(k);
    auto r = spanner_long_dist(g, k, 2, eps, rng);
    EXPECT_EQ(r.schedule.T, 1);
    EXPECT_TRUE(all_ok(r.radius_audit));
    EXPECT_EQ(violations(g, r.h, r.cert.alpha, r.cert.beta, 2, 2), 0u);
  }
}

TEST(AlphaBetaTest, UnionCertificate) {
  Graph g = gnp_graph(128, 0.04, 2);
  RngStream rng(2);
  auto r = assemble_alpha_beta_spanner(g, 256, 0.5, rng);
  EXPECT_EQ(r.cert.alpha, 8 * 16);
  EXPECT_EQ(r.cert.beta, 4096.0 * 256);
  EXPECT_EQ(violations(g, r.h, r.cert.alpha, r.cert.beta), 0u);
  EXPECT_LE(r.h.size(), r.cert.ledger["per_class_total"].get<size_t>());
  EXPECT_TRUE(r.cert.ledger["radius_audits_ok"].get<bool>());
}

TEST(AlphaBetaTest, EmptyGraph) {
  Graph g(5, {}, false);
  RngStream rng(1);
  EXPECT_EQ(assemble_alpha_beta_spanner(g, 256, 0.5, rng).h.size(), 0u);
}

TEST(ThreeEpsTest, EffectiveEps) {
  EXPECT_EQ(effective_eps(1), 1);
  EXPECT_EQ(effective_eps(0.5), 0.5);
  EXPECT_DOUBLE_EQ(effective_eps(0.3), 4.0 / 14);
  EXPECT_EQ(effective_eps(16), 4);
  EXPECT_EQ(effective_eps(8), 4);
  EXPECT_THROW(effective_eps(0), std::invalid_argument);
}

TEST(ThreeEpsTest, RhoSplit) {
  EXPECT_EQ(rho_split(3, 0.5), (std::pair<int, int>{1, 3}));
  EXPECT_EQ(rho_split(16, 1), (std::pair<int, int>{4, 1}));
  EXPECT_THROW(rho_split(3, 0), std::invalid_argument);
}

TEST(ThreeEpsTest, KOneIsSinglePhase) {
  Graph g = gnp_graph(80, 0.08, 3);
  RngStream rng(3);
  auto r = spanner_three_eps(g, 1, 1, rng);
  EXPECT_EQ(r.schedule.T, 1);
  ASSERT_EQ(r.phases.size(), 1u);
  EXPECT_EQ(r.phases[0].alpha, 0.5);
  EXPECT_DOUBLE_EQ(r.phases[0].p, 1.0 / 80);
  // Lost singletons keep every incident edge.
  auto dh = oracle::floyd_warshall(r.h);
  auto owner = r.levels.back().owner(g.n());
  for (const Edge& e : g.edges()) {
    if (owner[e.u] < 0 || owner[e.v] < 0) EXPECT_EQ(dh[e.u][e.v], 1);
  }
  EXPECT_EQ(violations(g, r.h, r.cert.alpha, r.cert.beta), 0u);
}

TEST(ThreeEpsTest, RadiusTableUsesEffectiveEps) {
  Graph g = gnp_graph(128, 0.04, 4);
  RngStream rng(4);
  auto r = spanner_three_eps(g, 4, 16, rng);
  EXPECT_EQ(r.cert.eps_effective, 4);
  ASSERT_EQ(r.phases.size(), 3u);
  // r_i = 2 * 9^{i-1} for eps = 4.
  EXPECT_EQ(r.phases[0].r, 2);
  EXPECT_EQ(r.phases[1].r, 18);
  EXPECT_EQ(r.phases[2].r, 162);
  EXPECT_TRUE(all_ok(r.radius_audit));
}

TEST(ThreeEpsTest, CertifiesAcrossSeeds) {
  for (uint64_t s = 0; s < 8; ++s) {
    Graph g = s % 2 ? gnp_graph(128, 0.05, s) : barbell_graph(20, 12);
    for (double eps : {1.0, 4.0}) {
      RngStream rng(s * 3 + static_cast<uint64_t>(eps));
      auto r = spanner_three_eps(g, 3, eps, rng);
      EXPECT_TRUE(is_subgraph(g, r.h));
      EXPECT_TRUE(all_ok(r.radius_audit));
      EXPECT_EQ(violations(g, r.h, r.cert.alpha, r.cert.beta), 0u);
      double literal = 8 * std::pow(3.0, std::log2(5 + 16 / eps));
      EXPECT_EQ(violations(g, r.h, 3 + eps, literal), 0u);
    }
  }
}

TEST(ThreeEpsTest, RhoModeCertifies) {
  Graph g = gnp_graph(128, 0.05, 21);
  RngStream rng(21);
  auto r = spanner_three_eps(g, 3, 1, rng, 0.5);
  EXPECT_EQ(r.schedule.i0, 1);
  EXPECT_EQ(r.schedule.i1, 3);
  EXPECT_EQ(r.phases.size(), 4u);
  for (size_t i = 1; i < r.phases.size(); ++i) EXPECT_EQ(r.phases[i].p, r.phases[0].p);
  EXPECT_EQ(r.cert.alpha, 5);
  EXPECT_EQ(violations(g, r.h, r.cert.alpha, r.cert.beta), 0u);
}

TEST(ThreeEpsTest, LostPathsCountedPerCluster) {
  Graph g = gnp_graph(100, 0.06, 8);
  RngStream rng(8);
  auto r = spanner_three_eps(g, 3, 1, rng);
  for (const auto& ph : r.phases) EXPECT_EQ(ph.lost_counts.size(), ph.lost);
}

TEST(ImprovedTest, RadiusAndCertificate) {
  Graph g = gnp_graph(128, 0.05, 30);
  RngStream rng(30);
  auto r = spanner_three_eps_improved(g, 4, 8, rng);
  EXPECT_EQ(r.cert.eps_effective, 4);
  // r_i = 5^{i-1} for eps = 4 with the tighter join threshold.
  EXPECT_EQ(r.phases[0].r, 1);
  EXPECT_EQ(r.phases[1].r, 5);
  EXPECT_TRUE(all_ok(r.radius_audit));
  EXPECT_EQ(violations(g, r.h, r.cert.alpha, r.cert.beta), 0u);

  RngStream rng1(31);
  auto r1 = spanner_three_eps_improved(g, 3, 1, rng1);
  EXPECT_EQ(violations(g, r1.h, 4, 3 * std::pow(3.0, std::log2(11.0))), 0u);
}

TEST(ApproxSsspTest, ExactOnIdentityAndBoundedOtherwise) {
  Graph g = gnp_graph(80, 0.08, 10);
  auto dg = oracle::floyd_warshall(g);
  EdgeSubgraph all(g);
  for (size_t i = 0; i < g.m(); ++i) all.add_edge(static_cast<int32_t>(i), "all");
  Certificate exact;
  auto a = approx_sssp_via_spanner(g, {0, 5}, all, exact);
  EXPECT_EQ(a.dist[0], dg[0]);
  EXPECT_EQ(a.dist[1], dg[5]);
  EXPECT_TRUE(approx_sssp_via_spanner(g, {}, all, exact).dist.empty());

  RngStream rng(10);
  auto r = spanner_three_eps(g, 3, 1, rng);
  auto b = approx_sssp_via_spanner(g, {1, 2, 3}, r.h, r.cert);
  for (size_t i = 0; i < 3; ++i) {
    for (Vertex v = 0; v < g.n(); ++v) {
      Dist d = dg[b.sources[i]][v];
      if (d == kInf) continue;
      EXPECT_GE(b.dist[i][v], d);
      EXPECT_LE(b.dist[i][v], b.cert.alpha * d + b.cert.beta + 1e-9);
    }
  }
}
