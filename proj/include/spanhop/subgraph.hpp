// Copyright 2026 The spanhop Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "spanhop/graph.hpp"

namespace spanhop {

// A subset of the edges of a fixed parent graph, with the tag of the step
// that first added each edge.
class EdgeSubgraph {
 public:
  EdgeSubgraph() = default;
  explicit EdgeSubgraph(const Graph& g)
      : g_(&g), kept_(g.m(), 0), tag_(g.m()) {}

  const Graph& parent() const { return *g_; }
  size_t size() const { return order_.size(); }
  bool contains(int32_t id) const { return kept_[id] != 0; }
  bool contains(Vertex u, Vertex v) const;

  bool add_edge(int32_t id, const std::string& tag);
  bool add_edge(Vertex u, Vertex v, const std::string& tag);
  // Adds every consecutive pair of a vertex sequence; returns new edges.
  size_t add_path(const std::vector<Vertex>& path, const std::string& tag);
  void merge(const EdgeSubgraph& other);

  // Edge ids in insertion order.
  const std::vector<int32_t>& edge_ids() const { return order_; }
  const std::string& tag(int32_t id) const { return tag_[id]; }

  // The subgraph as a graph on the same vertex set.
  Graph to_graph() const;

 private:
  const Graph* g_ = nullptr;
  std::vector<char> kept_;
  std::vector<std::string> tag_;
  std::vector<int32_t> order_;
};

struct Hop {
  Vertex u;
  Vertex v;
  Dist w;
  std::string tag;
};

// Weighted shortcut edges. A hop (u, v) always carries dist_G(u, v).
class Hopset {
 public:
  Hopset() = default;
  explicit Hopset(const Graph& g) : g_(&g) {}

  const Graph& parent() const { return *g_; }
  size_t size() const { return hops_.size(); }
  const std::vector<Hop>& hops() const { return hops_; }

  // Skips self-pairs, pairs already present (first tag wins), and pairs
  // where the graph edge is already as short as the hop.
  bool add(Vertex u, Vertex v, Dist w, const std::string& tag);
  void merge(const Hopset& other);
  bool contains(Vertex u, Vertex v) const;

 private:
  static uint64_t key(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (static_cast<uint64_t>(u) << 32) | static_cast<uint32_t>(v);
  }
  const Graph* g_ = nullptr;
  std::vector<Hop> hops_;
  std::unordered_map<uint64_t, size_t> index_;
};

}  // namespace spanhop
