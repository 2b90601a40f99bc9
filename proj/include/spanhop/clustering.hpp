// Copyright 2026 The spanhop Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spanhop/distance.hpp"
#include "spanhop/graph.hpp"
#include "spanhop/rng.hpp"
#include "spanhop/subgraph.hpp"

namespace spanhop {

struct Cluster {
  int id = 0;
  Vertex center = -1;
  std::vector<Vertex> members;  // sorted, contains center
  Dist radius_bound = 0;
};

struct Clustering {
  std::vector<Cluster> clusters;
  std::string level;

  size_t size() const { return clusters.size(); }
  bool empty() const { return clusters.empty(); }
  // Index of the cluster holding each vertex, or -1.
  std::vector<int> owner(Vertex n) const;
  std::vector<Vertex> centers() const;
  size_t covered() const;
  Dist max_radius_bound() const;
  // Sorts clusters by center id, renumbers ids and sorts members.
  void normalize();

  static Clustering singletons(Vertex n);
};

struct SuperCluster {
  int id = 0;
  Vertex center = -1;
  std::vector<int> member_clusters;
  Dist radius_bound = 0;
};

struct SuperClustering {
  std::vector<SuperCluster> superclusters;
  int phase = 0;
  int step = 0;

  size_t size() const { return superclusters.size(); }
  std::vector<Vertex> centers() const;
};

// Result of a minimum-distance query over a collection: `index` is the
// position in the collection (-1 when empty or unreachable).
struct Nearest {
  int index = -1;
  Dist dist = kInf;
};

// Closest of the given centers to v; ties go to the smaller index.
Nearest nearest_center(DistanceOracle& oracle, Vertex v,
                       const std::vector<Vertex>& centers);

Dist c_dist(DistanceOracle& oracle, const Cluster& a, const Cluster& b);
Dist c_dist(DistanceOracle& oracle, Vertex v, const Cluster& b);
Nearest c_dist(DistanceOracle& oracle, Vertex v, const Clustering& c);
Nearest c_dist(DistanceOracle& oracle, const Cluster& a, const Clustering& c);
Nearest c_dist(DistanceOracle& oracle, Vertex v, const SuperClustering& c);

struct BaswanaSenResult {
  Clustering clustering;
  EdgeSubgraph h;
  std::vector<size_t> level_sizes;  // |C_0|, ..., |C_t|
};

// t steps of Baswana-Sen with sampling probability n^{-1/k}. Unweighted only.
BaswanaSenResult truncated_baswana_sen(const Graph& g, int k, int t,
                                       RngStream& rng);

struct TzResult {
  Clustering clustering;
  Hopset hops;
  int levels = 0;                                 // l
  std::vector<std::vector<char>> in_level;        // [i][v]: v in A_i
  std::vector<std::vector<Vertex>> pivot;         // [i][v]: p_i(v) or -1
  std::vector<std::vector<Dist>> pivot_dist;      // [i][v]: dist(v, A_i)
  std::vector<std::vector<std::vector<Vertex>>> bunch;  // [i][v], i < l
};

// l levels of Thorup-Zwick sampling with probability n^{-1/k}. Emits bunch
// hops, pivot hops (v, p_i(v)) for 1 <= i <= l, and clusters of radius r0
// around A_l with a hop from every member to its center.
TzResult truncated_tz(const Graph& g, int k, int l, Dist r0, RngStream& rng);

// Indices of the elements kept by independent Bernoulli(p) trials.
std::vector<int> sample_clusters(size_t count, double p, RngStream& rng);
std::vector<int> sample_clusters(const Clustering& c, double p, RngStream& rng);
std::vector<int> sample_clusters(const SuperClustering& c, double p,
                                 RngStream& rng);

struct AbstractGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // a < b, sorted
};

// Nodes are the given centers; (a, b) is an edge iff their distance is at
// most `threshold`.
AbstractGraph cluster_graph(DistanceOracle& oracle,
                            const std::vector<Vertex>& centers,
                            Dist threshold);
AbstractGraph cluster_graph(DistanceOracle& oracle, const Clustering& c,
                            Dist threshold);

// Greedy spanner: scan edges in lexicographic order and keep (a, b) iff the
// current spanner distance between a and b exceeds `stretch`.
std::vector<std::pair<int, int>> basic_spanner(const AbstractGraph& g,
                                               int stretch);

}  // namespace spanhop
