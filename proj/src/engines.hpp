// Copyright 2026 The spanhop Authors.
// SPDX-License-Identifier: Apache-2.0

// Phase machinery shared by the spanner and hopset constructions. Spanners
// realize a connection as a shortest path in G; hopsets realize it as a hop.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spanhop/clustering.hpp"
#include "spanhop/distance.hpp"
#include "spanhop/spanners.hpp"
#include "spanhop/subgraph.hpp"

namespace spanhop::detail {

class Sink {
 public:
  virtual ~Sink() = default;
  // Connect a vertex to a center.
  virtual void connect(Vertex from, Vertex center, const std::string& tag) = 0;
  // Cluster with the given members and center joins a new center.
  virtual void join(const std::vector<Vertex>& members, Vertex own_center,
                    Vertex center, const std::string& tag) = 0;
};

class PathSink : public Sink {
 public:
  PathSink(DistanceOracle& o, EdgeSubgraph& h) : o_(o), h_(h) {}
  void connect(Vertex from, Vertex center, const std::string& tag) override {
    if (from != center) h_.add_path(o_.path(from, center), tag);
  }
  void join(const std::vector<Vertex>&, Vertex own_center, Vertex center,
            const std::string& tag) override {
    connect(own_center, center, tag);
  }

 private:
  DistanceOracle& o_;
  EdgeSubgraph& h_;
};

class HopSink : public Sink {
 public:
  HopSink(DistanceOracle& o, Hopset& h) : o_(o), h_(h) {}
  void connect(Vertex from, Vertex center, const std::string& tag) override {
    h_.add(from, center, o_.dist(center, from), tag);
  }
  void join(const std::vector<Vertex>& members, Vertex, Vertex center,
            const std::string& tag) override {
    for (Vertex u : members) h_.add(u, center, o_.dist(center, u), tag);
  }

 private:
  DistanceOracle& o_;
  Hopset& h_;
};

// Largest member-to-center distance over all clusters.
Dist measured_radius(DistanceOracle& o, const Clustering& c);

struct SuperclusterParams {
  int K = 16;             // ceil(k^eps)
  int steps = 0;
  double sample_p = 1;
  bool integral_alpha = true;  // ceil the alpha recurrence (unweighted)
  int phase = 0;
};

struct SuperclusterOutcome {
  Clustering out;
  std::vector<SuperclusterStep> steps;
  std::vector<RadiusAuditRow> audit;
  Dist radius = 0;
};

SuperclusterOutcome run_superclustering(DistanceOracle& o, const Clustering& in,
                                        const SuperclusterParams& params,
                                        RngStream& rng, Sink& sink);

struct ThreeEpsParams {
  int phases = 0;
  double eps = 1;
  bool improved = false;
  Dist r0 = 0;
  std::optional<Dist> alpha1;  // overrides (4/eps) r0 in phase 1
  double p1 = 1;
  int freeze_after = 1 << 30;  // p_i = p_{freeze_after} beyond it
  std::string prefix = "p";
};

struct ThreeEpsOutcome {
  std::vector<Clustering> levels;  // C_0 .. C_T
  std::vector<ThreeEpsPhase> phases;
  std::vector<WaveStep> waves;
  std::vector<RadiusAuditRow> audit;
  Dist radius = 0;
};

ThreeEpsOutcome run_three_eps(DistanceOracle& o, Clustering c0,
                              const ThreeEpsParams& params, RngStream& rng,
                              Sink& sink);

}  // namespace spanhop::detail
