// Copyright 2026 The spanhop Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>

#include "spanhop/exec_models.hpp"
#include "spanhop/generators.hpp"

using namespace spanhop;

namespace {

std::vector<int32_t> sorted_ids(const EdgeSubgraph& h) {
  std::vector<int32_t> ids = h.edge_ids();
  std::sort(ids.begin(), ids.end());
  return ids;
}

int64_t wave_layers(Dist depth, Vertex n) {
  return depth == kInf ? n : std::min<int64_t>(static_cast<int64_t>(std::floor(depth + 1e-9)), n);
}

}  // namespace

TEST(ExecModelsTest, ModelsAreTransparent) {
  for (uint64_t s = 0; s < 5; ++s) {
    Graph g = gnp_graph(128, 0.05, s);
    RngStream base(s);
    auto central = spanner_three_eps(g, 3, 1, base, 0.5);
    auto want = sorted_ids(central.h);
    RngStream r1(s), r2(s), r3(s), r4(s);
    EXPECT_EQ(sorted_ids(simulate_local(g, 3, 1, 0.5, r1).spanner.h), want);
    EXPECT_EQ(sorted_ids(simulate_congest(g, 3, 1, 0.5, r2).spanner.h), want);
    EXPECT_EQ(sorted_ids(simulate_stream(g, 3, 1, 0.5, StreamMode::kHighSpace, r3).spanner.h),
              want);
    EXPECT_EQ(sorted_ids(simulate_stream(g, 3, 1, 0.5, StreamMode::kLowSpace, r4).spanner.h),
              want);
  }
}

TEST(ExecModelsTest, LocalRoundsSumWaveDepths) {
  Graph g = gnp_graph(100, 0.06, 7);
  RngStream rng(7);
  auto run = simulate_local(g, 3, 1, 0.5, rng);
  int64_t want = 0;
  for (const auto& w : run.spanner.waves) want += wave_layers(w.depth, g.n());
  EXPECT_EQ(run.ledger.rounds, want);
  int64_t by_phase = 0;
  for (int64_t r : run.ledger.phase_rounds) by_phase += r;
  EXPECT_EQ(by_phase, want);
  // The final wave is truncated at 5 r_T.
  EXPECT_EQ(run.spanner.waves.back().step, "final");
  EXPECT_EQ(run.spanner.waves.back().depth, 5 * run.spanner.cert.ledger["r_T"].get<double>());
}

TEST(ExecModelsTest, CongestChargesSharedVertices) {
  Graph g = gnp_graph(100, 0.06, 8);
  RngStream a(8), b(8);
  auto local = simulate_local(g, 3, 1, 0.5, a);
  auto congest = simulate_congest(g, 3, 1, 0.5, b);
  DistanceOracle o(g);
  int64_t extra = 0;
  for (const auto& w : congest.spanner.waves) {
    if (!w.separate || w.sources.empty()) continue;
    int worst = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
      int m = 0;
      for (Vertex s : w.sources) m += dist_le(o.dist(s, v), w.depth);
      worst = std::max(worst, m);
    }
    extra += std::max(worst - 1, 0);
  }
  EXPECT_EQ(congest.ledger.rounds, local.ledger.rounds + extra);
  for (size_t i = 0; i < congest.ledger.max_traversals.size(); ++i) {
    const auto& row = congest.ledger.per_vertex_traversals[i];
    EXPECT_EQ(congest.ledger.max_traversals[i], *std::max_element(row.begin(), row.end()));
  }
}

TEST(ExecModelsTest, DisjointWavesCostTheirDepth) {
  // With no vertex inside two separate waves CONGEST costs the same as LOCAL.
  Graph g = path_graph(40);
  RngStream a(1), b(1);
  auto local = simulate_local(g, 2, 4, 1.0, a);
  auto congest = simulate_congest(g, 2, 4, 1.0, b);
  bool overlap = false;
  for (int m : congest.ledger.max_traversals) overlap = overlap || m > 1;
  if (!overlap) EXPECT_EQ(local.ledger.rounds, congest.ledger.rounds);
}

TEST(ExecModelsTest, StarStreamUsesFewPasses) {
  Graph g = star_graph(12);
  RngStream rng(2);
  auto run = simulate_stream(g, 2, 1, 1.0, StreamMode::kHighSpace, rng);
  // Any BFS on a star settles within two layers plus one idle pass.
  EXPECT_LE(run.ledger.passes, 3 * static_cast<int64_t>(run.spanner.waves.size()));
  EXPECT_EQ(run.ledger.ball_mismatches, 0u);
}

TEST(ExecModelsTest, StreamBallsMatchOracle) {
  for (uint64_t s = 0; s < 4; ++s) {
    Graph g = s % 2 ? gnp_graph(128, 0.04, s) : barbell_graph(24, 16);
    for (StreamMode m : {StreamMode::kHighSpace, StreamMode::kLowSpace}) {
      RngStream rng(s);
      auto run = simulate_stream(g, 3, 1, 0.5, m, rng);
      EXPECT_EQ(run.ledger.ball_mismatches, 0u);
      EXPECT_GE(run.ledger.peak_space_items,
                static_cast<int64_t>(run.spanner.h.size()) + g.n());
    }
  }
}

TEST(ExecModelsTest, LedgersAreReproducible) {
  Graph g = gnp_graph(90, 0.06, 3);
  RngStream a(3), b(3);
  auto x = simulate_stream(g, 3, 1, 0.5, StreamMode::kLowSpace, a);
  auto y = simulate_stream(g, 3, 1, 0.5, StreamMode::kLowSpace, b);
  EXPECT_EQ(x.ledger.passes, y.ledger.passes);
  EXPECT_EQ(x.ledger.peak_space_items, y.ledger.peak_space_items);
  EXPECT_EQ(x.ledger.phase_passes, y.ledger.phase_passes);
  RngStream c(3), d(3);
  auto p = simulate_congest(g, 3, 1, 0.5, c);
  auto q = simulate_congest(g, 3, 1, 0.5, d);
  EXPECT_EQ(p.ledger.rounds, q.ledger.rounds);
  EXPECT_EQ(p.ledger.per_vertex_traversals, q.ledger.per_vertex_traversals);
}

TEST(ExecModelsTest, LowSpacePassesAtLeastHighSpace) {
  Graph g = gnp_graph(128, 0.05, 4);
  RngStream a(4), b(4);
  auto hi = simulate_stream(g, 3, 1, 0.5, StreamMode::kHighSpace, a);
  auto lo = simulate_stream(g, 3, 1, 0.5, StreamMode::kLowSpace, b);
  EXPECT_GE(lo.ledger.passes, hi.ledger.passes);
}
