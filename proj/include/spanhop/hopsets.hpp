// Copyright 2026 The spanhop Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "spanhop/certificate.hpp"
#include "spanhop/clustering.hpp"
#include "spanhop/spanners.hpp"
#include "spanhop/subgraph.hpp"

namespace spanhop {

struct HopsetResult {
  Hopset hops;
  Certificate cert;
  PhaseSchedule schedule;
  std::vector<RadiusAuditRow> radius_audit;
  std::vector<Clustering> levels;  // C_0 (from the TZ stage) onwards
  std::vector<ThreeEpsPhase> phases;
  std::vector<SuperclusterStep> steps;
  std::vector<WaveStep> waves;
};

// Hop budget: (18 k^eps, 8 k^{1-eps} + 1) for pairs at distance in [d/2, d].
HopsetResult hopset_small_hops(const Graph& g, int64_t k, Dist d, double eps,
                               RngStream& rng, DistanceOracle* oracle = nullptr);

struct ClusterAugmentResult {
  Clustering clustering;
  Hopset hops;
  std::vector<SuperclusterStep> steps;
  std::vector<RadiusAuditRow> radius_audit;
};

// One phase of weighted superclustering with ceil(k^eps)/4 steps (or
// `steps` when given) and sampling probability min(n^{-1/k}, n_0/n).
ClusterAugmentResult cluster_and_augment_hop(const Graph& g, int64_t k,
                                             double eps, const Clustering& c_in,
                                             RngStream& rng,
                                             DistanceOracle* oracle = nullptr,
                                             std::optional<int> steps = std::nullopt,
                                             int phase = 0);

// (9 k^eps, 36^{1/eps} k^{1-eps}) for pairs at distance in [d/2, d].
HopsetResult hopset_small_stretch(const Graph& g, int64_t k, Dist d, double eps,
                                  RngStream& rng,
                                  DistanceOracle* oracle = nullptr);

// (3 + 1.125 eps, 16 R') for pairs at distance in [d, 2d].
HopsetResult hopset_three_eps(const Graph& g, int64_t k, Dist d, double eps,
                              RngStream& rng,
                              std::optional<double> rho = std::nullopt,
                              DistanceOracle* oracle = nullptr);

HopsetResult hopset_three_eps_improved(const Graph& g, int64_t k, Dist d,
                                       double eps, RngStream& rng,
                                       DistanceOracle* oracle = nullptr);

struct DistanceClassPlan {
  Dist d_min = 0;
  Dist d_max = 0;
  double lambda = 1;
  std::vector<std::pair<Dist, Dist>> classes;  // [lo, 2 lo]
};

DistanceClassPlan distance_class_plan(DistanceOracle& oracle);
// Classes [d, 2d] for explicitly chosen d values.
DistanceClassPlan explicit_class_plan(const std::vector<Dist>& ds);

enum class HopsetVariant { kSmallHops, kSmallStretch, kThreeEps, kThreeEpsImproved };

struct FullHopsetResult {
  Hopset hops;
  Certificate cert;
  DistanceClassPlan plan;
  std::vector<Certificate> per_class;
  std::vector<RadiusAuditRow> radius_audit;
};

FullHopsetResult build_full_hopset(const Graph& g, int64_t k, double eps,
                                   HopsetVariant variant, RngStream& rng,
                                   std::optional<double> rho = std::nullopt,
                                   DistanceOracle* oracle = nullptr,
                                   const DistanceClassPlan* plan = nullptr);

// Text format: header "n h" then one "u v w" line per hop.
void write_hopset(std::ostream& out, const Hopset& h);
Hopset read_hopset(std::istream& in, const Graph& g);

}  // namespace spanhop
