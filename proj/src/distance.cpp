// Copyright 2026 The spanhop Authors.
// SPDX-License-Identifier: Apache-2.0

#include "spanhop/distance.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace spanhop {

ShortestPathTree shortest_path_tree(const Graph& g, Vertex root, Dist limit) {
  if (root < 0 || root >= g.n()) throw std::out_of_range("sssp: bad root");
  ShortestPathTree t;
  t.root = root;
  t.dist.assign(g.n(), kInf);
  t.parent.assign(g.n(), -1);
  t.dist[root] = 0;
  std::vector<Vertex> settled;
  settled.reserve(g.n());
  if (!g.weighted()) {
    std::vector<Vertex> queue{root};
    for (size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      settled.push_back(u);
      if (t.dist[u] + 1 > limit + kTol) continue;
      for (const auto& a : g.neighbors(u)) {
        if (t.dist[a.to] == kInf) {
          t.dist[a.to] = t.dist[u] + 1;
          queue.push_back(a.to);
        }
      }
    }
  } else {
    using Item = std::pair<Dist, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    pq.push({0, root});
    std::vector<char> done(g.n(), 0);
    while (!pq.empty()) {
      auto [d, u] = pq.top();
      pq.pop();
      if (done[u] || d > t.dist[u]) continue;
      done[u] = 1;
      settled.push_back(u);
      for (const auto& a : g.neighbors(u)) {
        Dist nd = d + a.w;
        if (nd < t.dist[a.to] && nd <= limit + kTol) {
          t.dist[a.to] = nd;
          pq.push({nd, a.to});
        }
      }
    }
    for (Vertex v = 0; v < g.n(); ++v) {
      if (!done[v]) t.dist[v] = kInf;
    }
  }
  // Canonical parents: smallest-id neighbor on some shortest path.
  for (Vertex v : settled) {
    if (v == root) continue;
    for (const auto& a : g.neighbors(v)) {
      if (t.dist[a.to] != kInf && dist_eq(t.dist[a.to] + a.w, t.dist[v])) {
        t.parent[v] = a.to;
        break;
      }
    }
  }
  return t;
}

std::vector<Vertex> tree_path(const ShortestPathTree& t, Vertex x) {
  std::vector<Vertex> path;
  if (t.dist[x] == kInf) return path;
  for (Vertex v = x; v != -1; v = t.parent[v]) {
    path.push_back(v);
    if (v == t.root) break;
  }
  return path;
}

DistanceMatrix exact_apsp(const Graph& g) {
  DistanceMatrix d(g.n());
  for (Vertex s = 0; s < g.n(); ++s) d[s] = shortest_path_tree(g, s).dist;
  return d;
}

DistanceOracle::DistanceOracle(const Graph& g) : g_(&g), trees_(g.n()) {}

const ShortestPathTree& DistanceOracle::tree(Vertex root) {
  auto& slot = trees_.at(root);
  if (!slot) {
    slot = std::make_unique<ShortestPathTree>(shortest_path_tree(*g_, root));
  }
  return *slot;
}

void DistanceOracle::precompute_all() {
  for (Vertex v = 0; v < g_->n(); ++v) tree(v);
}

HopGraph::HopGraph(const Graph& g, const Hopset* extra) : n_(g.n()) {
  std::vector<size_t> deg(n_ + 1, 0);
  for (const Edge& e : g.edges()) ++deg[e.u], ++deg[e.v];
  if (extra) {
    for (const Hop& h : extra->hops()) ++deg[h.u], ++deg[h.v];
  }
  offset_.assign(n_ + 1, 0);
  for (Vertex v = 0; v < n_; ++v) offset_[v + 1] = offset_[v] + deg[v];
  arcs_.resize(offset_[n_]);
  std::vector<size_t> pos(offset_.begin(), offset_.end() - 1);
  auto put = [&](Vertex u, Vertex v, Dist w) {
    arcs_[pos[u]++] = {v, w};
    arcs_[pos[v]++] = {u, w};
  };
  for (const Edge& e : g.edges()) put(e.u, e.v, e.w);
  if (extra) {
    for (const Hop& h : extra->hops()) put(h.u, h.v, h.w);
  }
}

HopLimitedDistance HopGraph::beta_limited(Vertex source, int64_t beta) const {
  if (beta < 1) throw std::invalid_argument("beta_limited_sssp: beta >= 1");
  HopLimitedDistance out{source, beta, std::vector<Dist>(n_, kInf)};
  std::vector<Dist>& d = out.d;
  d[source] = 0;
  std::vector<Dist> next(n_, kInf);
  std::vector<Vertex> frontier{source}, touched;
  std::vector<char> mark(n_, 0);
  // Only vertices improved in the previous round can improve anything in
  // this one, so stopping at a fixpoint gives the same result as running
  // all beta rounds.
  for (int64_t round = 0; round < beta && !frontier.empty(); ++round) {
    touched.clear();
    for (Vertex u : frontier) {
      for (size_t i = offset_[u]; i < offset_[u + 1]; ++i) {
        const Arc& a = arcs_[i];
        Dist cand = d[u] + a.w;
        if (cand < d[a.to] && cand < next[a.to]) {
          if (!mark[a.to]) {
            mark[a.to] = 1;
            touched.push_back(a.to);
          }
          next[a.to] = cand;
        }
      }
    }
    frontier.clear();
    for (Vertex v : touched) {
      mark[v] = 0;
      if (next[v] < d[v]) {
        d[v] = next[v];
        frontier.push_back(v);
      }
      next[v] = kInf;
    }
  }
  return out;
}

HopLimitedDistance beta_limited_sssp(const Graph& g, const Hopset& extra,
                                     Vertex source, int64_t beta) {
  return HopGraph(g, &extra).beta_limited(source, beta);
}

std::vector<Vertex> ball(const Graph& g, Vertex u, Dist r) {
  auto t = shortest_path_tree(g, u, r);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (dist_le(t.dist[v], r)) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> ball_boundary(const Graph& g, Vertex u, Dist r) {
  auto t = shortest_path_tree(g, u, r);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (dist_eq(t.dist[v], r)) out.push_back(v);
  }
  return out;
}

}  // namespace spanhop
