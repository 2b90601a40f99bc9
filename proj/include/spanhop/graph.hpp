// Copyright 2026 The spanhop Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace spanhop {

using Vertex = int32_t;
using Dist = double;

inline constexpr Dist kInf = std::numeric_limits<Dist>::infinity();
inline constexpr Dist kTol = 1e-9;

inline bool dist_le(Dist a, Dist b) { return a <= b + kTol; }
inline bool dist_lt(Dist a, Dist b) { return a < b - kTol; }
inline bool dist_eq(Dist a, Dist b) {
  if (a == kInf || b == kInf) return a == b;
  return std::abs(a - b) <= kTol;
}

// ceil/floor that absorb floating noise, so that 1024^0.4 rounds to 16.
inline int64_t ceil_robust(double x) {
  return static_cast<int64_t>(std::ceil(x - 1e-9));
}
inline int64_t floor_robust(double x) {
  return static_cast<int64_t>(std::floor(x + 1e-9));
}

struct Edge {
  Vertex u;
  Vertex v;
  Dist w;
};

// Undirected simple graph in CSR form. Edges are normalized to u < v and
// sorted; the position in edges() is the edge id.
class Graph {
 public:
  struct Arc {
    Vertex to;
    Dist w;
    int32_t id;
  };

  Graph() = default;
  Graph(Vertex n, std::vector<Edge> edges, bool weighted);

  Vertex n() const { return n_; }
  size_t m() const { return edges_.size(); }
  bool weighted() const { return weighted_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Neighbors sorted by id.
  std::span<const Arc> neighbors(Vertex v) const {
    return {arcs_.data() + offset_[v], arcs_.data() + offset_[v + 1]};
  }
  size_t degree(Vertex v) const { return offset_[v + 1] - offset_[v]; }

  // -1 when absent.
  int32_t edge_id(Vertex u, Vertex v) const;
  // kInf when absent.
  Dist weight(Vertex u, Vertex v) const;

  Dist min_weight() const;
  Dist max_weight() const;

 private:
  Vertex n_ = 0;
  bool weighted_ = false;
  std::vector<Edge> edges_;
  std::vector<size_t> offset_{0};
  std::vector<Arc> arcs_;
};

// Text format: header "n m weighted" then one "u v [w]" line per edge.
// '#' starts a comment.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
Graph load_graph(const std::string& path);
void save_graph(const std::string& path, const Graph& g);

}  // namespace spanhop
