// Copyright 2026 The spanhop Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <vector>

#include "spanhop/graph.hpp"
#include "spanhop/subgraph.hpp"

namespace spanhop {

// Single-source shortest paths. parent[v] is the neighbor of v one step
// closer to the root; among several such neighbors the smallest id is used,
// so every path toward a given root is canonical and paths to the same root
// share edges.
struct ShortestPathTree {
  Vertex root = -1;
  std::vector<Dist> dist;
  std::vector<Vertex> parent;
};

// BFS when unweighted, Dijkstra otherwise. Vertices farther than `limit`
// are reported at kInf.
ShortestPathTree shortest_path_tree(const Graph& g, Vertex root,
                                    Dist limit = kInf);

// Vertex sequence x, parent(x), ..., root. Empty when x is unreachable.
std::vector<Vertex> tree_path(const ShortestPathTree& t, Vertex x);

using DistanceMatrix = std::vector<std::vector<Dist>>;

DistanceMatrix exact_apsp(const Graph& g);

// Lazily computed shortest-path trees, one per requested root. Not safe for
// concurrent use unless precompute_all() has been called first.
class DistanceOracle {
 public:
  explicit DistanceOracle(const Graph& g);

  const Graph& graph() const { return *g_; }
  const ShortestPathTree& tree(Vertex root);
  Dist dist(Vertex root, Vertex v) { return tree(root).dist[v]; }
  std::vector<Vertex> path(Vertex x, Vertex root) {
    return tree_path(tree(root), x);
  }
  void precompute_all();

 private:
  const Graph* g_;
  std::vector<std::unique_ptr<ShortestPathTree>> trees_;
};

struct HopLimitedDistance {
  Vertex source = -1;
  int64_t beta = 0;
  std::vector<Dist> d;
};

// Adjacency of E(g) together with a hopset, for repeated hop-limited
// queries on the same pair.
class HopGraph {
 public:
  HopGraph(const Graph& g, const Hopset* extra);
  HopLimitedDistance beta_limited(Vertex source, int64_t beta) const;
  Vertex n() const { return n_; }

 private:
  struct Arc {
    Vertex to;
    Dist w;
  };
  Vertex n_;
  std::vector<size_t> offset_;
  std::vector<Arc> arcs_;
};

// Synchronous Bellman-Ford over E(g) and the hops: d[v] is the length of the
// shortest walk from the source that uses at most beta edges.
HopLimitedDistance beta_limited_sssp(const Graph& g, const Hopset& extra,
                                     Vertex source, int64_t beta);

// {v : dist(u, v) <= r}, sorted.
std::vector<Vertex> ball(const Graph& g, Vertex u, Dist r);
// {v : dist(u, v) == r}, sorted.
std::vector<Vertex> ball_boundary(const Graph& g, Vertex u, Dist r);

}  // namespace spanhop
