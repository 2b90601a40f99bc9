// Copyright 2026 The spanhop Authors.
// SPDX-License-Identifier: Apache-2.0

#include "spanhop/subgraph.hpp"

#include <stdexcept>

namespace spanhop {

bool EdgeSubgraph::contains(Vertex u, Vertex v) const {
  int32_t id = g_->edge_id(u, v);
  return id >= 0 && kept_[id];
}

bool EdgeSubgraph::add_edge(int32_t id, const std::string& tag) {
  if (kept_[id]) return false;
  kept_[id] = 1;
  tag_[id] = tag;
  order_.push_back(id);
  return true;
}

bool EdgeSubgraph::add_edge(Vertex u, Vertex v, const std::string& tag) {
  int32_t id = g_->edge_id(u, v);
  if (id < 0) throw std::logic_error("subgraph: edge not in parent graph");
  return add_edge(id, tag);
}

size_t EdgeSubgraph::add_path(const std::vector<Vertex>& path,
                              const std::string& tag) {
  size_t added = 0;
  for (size_t i = 1; i < path.size(); ++i) {
    added += add_edge(path[i - 1], path[i], tag) ? 1 : 0;
  }
  return added;
}

void EdgeSubgraph::merge(const EdgeSubgraph& other) {
  for (int32_t id : other.order_) add_edge(id, other.tag_[id]);
}

Graph EdgeSubgraph::to_graph() const {
  std::vector<Edge> edges;
  edges.reserve(order_.size());
  for (int32_t id : order_) edges.push_back(g_->edges()[id]);
  return Graph(g_->n(), std::move(edges), g_->weighted());
}

bool Hopset::add(Vertex u, Vertex v, Dist w, const std::string& tag) {
  if (u == v || w == kInf) return false;
  if (dist_le(g_->weight(u, v), w)) return false;
  auto [it, fresh] = index_.emplace(key(u, v), hops_.size());
  if (!fresh) return false;
  if (u > v) std::swap(u, v);
  hops_.push_back({u, v, w, tag});
  return true;
}

void Hopset::merge(const Hopset& other) {
  for (const Hop& h : other.hops_) add(h.u, h.v, h.w, h.tag);
}

bool Hopset::contains(Vertex u, Vertex v) const {
  return index_.count(key(u, v)) > 0;
}

}  // namespace spanhop
