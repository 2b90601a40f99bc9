// Copyright 2026 The spanhop Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spanhop/certificate.hpp"
#include "spanhop/clustering.hpp"
#include "spanhop/distance.hpp"
#include "spanhop/graph.hpp"
#include "spanhop/rng.hpp"
#include "spanhop/subgraph.hpp"

namespace spanhop {

// Tracked parameters of a phased construction. Row i of alphas/radii holds
// the per-step values of phase i; the superclustering constructions have
// several steps per phase, the others one.
struct PhaseSchedule {
  int T = 0;
  int t = 0;
  std::vector<std::vector<Dist>> alphas;
  std::vector<std::vector<Dist>> radii;
  std::vector<double> probs;
  std::optional<double> rho;
  int i0 = 0;
  int i1 = 0;
};

// One synchronized BFS wave group of a phase. With `separate` set every
// source runs its own wave (lost-cluster step and the final stage);
// otherwise the sources grow one multi-source search.
struct WaveStep {
  int phase = 0;
  std::string step;
  Dist depth = 0;
  std::vector<Vertex> sources;
  bool separate = false;
};

// Per-phase counts of the (3+eps) constructions.
struct ThreeEpsPhase {
  int phase = 0;
  double p = 0;
  Dist alpha = 0;
  Dist r_prev = 0;
  Dist r = 0;
  size_t clusters_before = 0;
  size_t sampled = 0;
  size_t clusters_after = 0;
  size_t attached = 0;
  size_t lost = 0;
  // Number of center connections made by each lost cluster.
  std::vector<size_t> lost_counts;
};

// Per-step counts of the superclustering procedures.
struct SuperclusterStep {
  int phase = 0;
  int step = 0;
  Dist alpha = 0;
  Dist alpha_closed_form = 0;
  Dist radius = 0;
  size_t superclusters_before = 0;
  size_t sampled = 0;
  size_t attached = 0;
  size_t lost = 0;
  size_t lost_connections = 0;
};

struct SpannerResult {
  EdgeSubgraph h;
  Certificate cert;
  PhaseSchedule schedule;
  std::vector<RadiusAuditRow> radius_audit;
  std::vector<Clustering> levels;  // every intermediate clustering
  std::vector<ThreeEpsPhase> phases;
  std::vector<SuperclusterStep> steps;
  std::vector<WaveStep> waves;
};

// Every construction accepts an optional oracle on the same graph so that
// repeated runs can share shortest-path trees.

SpannerResult spanner_short_dist(const Graph& g, int k, int d, RngStream& rng,
                                 DistanceOracle* oracle = nullptr);

struct SuperclusterResult {
  Clustering clustering;
  EdgeSubgraph h;
  std::vector<SuperclusterStep> steps;
  std::vector<RadiusAuditRow> radius_audit;
};

// t steps of superclustering over c_in, whose tracked radius is taken as
// r_0. `phase` only labels provenance tags.
SuperclusterResult supercluster_augment(const Graph& g, int64_t k, int t,
                                        double eps, const Clustering& c_in,
                                        RngStream& rng,
                                        DistanceOracle* oracle = nullptr,
                                        int phase = 0);

// The alpha recurrence alpha_j = ceil(4 r0/(K-3) + (1 + 4/(K-3)) alpha_{j-1})
// for j = 1..t, and its closed-form upper bound.
std::vector<Dist> supercluster_alphas(Dist r0, int K, int t);
Dist supercluster_alpha_bound(Dist r0, int K, int j);

// How the phases of the long-distance constructions are laid out: each
// entry is the number of steps of one phase.
struct LongDistancePlan {
  int K = 0;
  int t = 0;
  bool widened = false;  // 4 does not divide K
  double T = 0;
  bool integral = true;
  bool rounded_up = false;
  std::vector<int> steps;
};
LongDistancePlan long_distance_plan(int64_t k, double eps);

SpannerResult spanner_long_dist(const Graph& g, int64_t k, int d, double eps,
                                RngStream& rng,
                                DistanceOracle* oracle = nullptr);

SpannerResult assemble_alpha_beta_spanner(const Graph& g, int64_t k,
                                          double eps, RngStream& rng,
                                          DistanceOracle* oracle = nullptr);

// Largest eps' <= eps with 4/eps' integral.
double effective_eps(double eps);

SpannerResult spanner_three_eps(const Graph& g, int64_t k, double eps,
                                RngStream& rng,
                                std::optional<double> rho = std::nullopt,
                                DistanceOracle* oracle = nullptr);

SpannerResult spanner_three_eps_improved(const Graph& g, int64_t k, double eps,
                                         RngStream& rng,
                                         DistanceOracle* oracle = nullptr);

// i0 = ceil(log2(k rho)) clamped to >= 1 and i1 = ceil(2/rho - 1).
std::pair<int, int> rho_split(int64_t k, double rho);

struct ApproxDistances {
  std::vector<Vertex> sources;
  std::vector<std::vector<Dist>> dist;
  Certificate cert;
};

ApproxDistances approx_sssp_via_spanner(const Graph& g,
                                        const std::vector<Vertex>& sources,
                                        const EdgeSubgraph& spanner,
                                        const Certificate& cert);

}  // namespace spanhop
