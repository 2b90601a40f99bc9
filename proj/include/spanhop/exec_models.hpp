// Copyright 2026 The spanhop Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spanhop/spanners.hpp"

namespace spanhop {

struct RoundLedger {
  std::string model;
  int64_t rounds = 0;
  // Largest number of waves charged to one vertex in one step.
  int64_t per_edge_congestion = 0;
  // [phase][v]: number of lost-cluster waves visiting v in that phase.
  std::vector<std::vector<int>> per_vertex_traversals;
  std::vector<int> max_traversals;  // per phase
  std::vector<int64_t> phase_rounds;
};

struct StreamLedger {
  std::string mode;
  int64_t passes = 0;
  int64_t peak_space_items = 0;
  std::vector<int64_t> phase_passes;
  // Streamed BFS balls that disagree with the oracle (always 0).
  size_t ball_mismatches = 0;
};

struct RoundRun {
  SpannerResult spanner;
  RoundLedger ledger;
};

struct StreamRun {
  SpannerResult spanner;
  StreamLedger ledger;
};

// Both run the rho-mode (3+eps) spanner and charge its BFS waves: LOCAL one
// round per layer, CONGEST additionally m - 1 rounds when m waves of the
// same step meet at a vertex.
RoundRun simulate_local(const Graph& g, int64_t k, double eps, double rho,
                        RngStream& rng, DistanceOracle* oracle = nullptr);
RoundRun simulate_congest(const Graph& g, int64_t k, double eps, double rho,
                          RngStream& rng, DistanceOracle* oracle = nullptr);

enum class StreamMode { kHighSpace, kLowSpace };

// Replays every wave as layer-per-pass BFS over a seeded shuffle of the
// edge list. Low-space mode splits the lost-cluster step into
// ceil(log2(n) / p_i) sub-steps of independently sampled centers, with a
// last sub-step for any centers never sampled.
StreamRun simulate_stream(const Graph& g, int64_t k, double eps, double rho,
                          StreamMode mode, RngStream& rng,
                          DistanceOracle* oracle = nullptr);

}  // namespace spanhop
