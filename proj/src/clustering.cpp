// Copyright 2026 The spanhop Authors.
// SPDX-License-Identifier: Apache-2.0

#include "spanhop/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace spanhop {

std::vector<int> Clustering::owner(Vertex n) const {
  std::vector<int> own(n, -1);
  for (size_t i = 0; i < clusters.size(); ++i) {
    for (Vertex v : clusters[i].members) own[v] = static_cast<int>(i);
  }
  return own;
}

std::vector<Vertex> Clustering::centers() const {
  std::vector<Vertex> out;
  out.reserve(clusters.size());
  for (const Cluster& c : clusters) out.push_back(c.center);
  return out;
}

size_t Clustering::covered() const {
  size_t total = 0;
  for (const Cluster& c : clusters) total += c.members.size();
  return total;
}

Dist Clustering::max_radius_bound() const {
  Dist r = 0;
  for (const Cluster& c : clusters) r = std::max(r, c.radius_bound);
  return r;
}

void Clustering::normalize() {
  std::sort(clusters.begin(), clusters.end(),
            [](const Cluster& a, const Cluster& b) { return a.center < b.center; });
  for (size_t i = 0; i < clusters.size(); ++i) {
    clusters[i].id = static_cast<int>(i);
    std::sort(clusters[i].members.begin(), clusters[i].members.end());
  }
}

Clustering Clustering::singletons(Vertex n) {
  Clustering c;
  c.level = "singletons";
  c.clusters.resize(n);
  for (Vertex v = 0; v < n; ++v) c.clusters[v] = {v, v, {v}, 0};
  return c;
}

std::vector<Vertex> SuperClustering::centers() const {
  std::vector<Vertex> out;
  for (const SuperCluster& s : superclusters) out.push_back(s.center);
  return out;
}

Nearest nearest_center(DistanceOracle& oracle, Vertex v,
                       const std::vector<Vertex>& centers) {
  Nearest best;
  for (size_t i = 0; i < centers.size(); ++i) {
    Dist d = oracle.dist(centers[i], v);
    if (d != kInf && (best.index < 0 || dist_lt(d, best.dist))) {
      best = {static_cast<int>(i), d};
    }
  }
  return best;
}

Dist c_dist(DistanceOracle& oracle, const Cluster& a, const Cluster& b) {
  return oracle.dist(a.center, b.center);
}

Dist c_dist(DistanceOracle& oracle, Vertex v, const Cluster& b) {
  return oracle.dist(b.center, v);
}

Nearest c_dist(DistanceOracle& oracle, Vertex v, const Clustering& c) {
  return nearest_center(oracle, v, c.centers());
}

Nearest c_dist(DistanceOracle& oracle, const Cluster& a, const Clustering& c) {
  return nearest_center(oracle, a.center, c.centers());
}

Nearest c_dist(DistanceOracle& oracle, Vertex v, const SuperClustering& c) {
  return nearest_center(oracle, v, c.centers());
}

BaswanaSenResult truncated_baswana_sen(const Graph& g, int k, int t,
                                       RngStream& rng) {
  if (g.weighted()) {
    throw std::invalid_argument("truncated_baswana_sen: graph must be unweighted");
  }
  if (k < 1) throw std::invalid_argument("truncated_baswana_sen: k >= 1");
  if (t < 0 || t > k) {
    throw std::invalid_argument("truncated_baswana_sen: need 0 <= t <= k");
  }
  const Vertex n = g.n();
  BaswanaSenResult res{Clustering::singletons(n), EdgeSubgraph(g), {}};
  res.level_sizes.push_back(res.clustering.size());
  const double p = n > 0 ? std::pow(static_cast<double>(n), -1.0 / k) : 1.0;

  for (int step = 1; step <= t; ++step) {
    const Clustering& prev = res.clustering;
    std::vector<int> own = prev.owner(n);
    std::vector<char> sampled(prev.size(), 0);
    for (int c : sample_clusters(prev, p, rng)) sampled[c] = 1;

    const std::string tag = "bs" + std::to_string(step);
    std::vector<int> next_own(n, -1);
    std::vector<int> seen(prev.size(), -1);
    for (Vertex v = 0; v < n; ++v) {
      int c = own[v];
      if (c < 0) continue;
      if (sampled[c]) {
        next_own[v] = c;
        continue;
      }
      // Neighbors are sorted by id and all weights are 1, so the first hit
      // is the minimum (weight, id) edge.
      Vertex join = -1;
      for (const auto& a : g.neighbors(v)) {
        int cx = own[a.to];
        if (cx >= 0 && sampled[cx]) {
          join = a.to;
          break;
        }
      }
      if (join >= 0) {
        next_own[v] = own[join];
        res.h.add_edge(g.edge_id(v, join), tag + ".join");
        continue;
      }
      for (const auto& a : g.neighbors(v)) {
        int cx = own[a.to];
        if (cx < 0 || cx == c || seen[cx] == v) continue;
        seen[cx] = v;
        res.h.add_edge(a.id, tag + ".unclustered");
      }
    }

    Clustering next;
    next.level = "bs" + std::to_string(step);
    std::vector<int> remap(prev.size(), -1);
    for (size_t c = 0; c < prev.size(); ++c) {
      if (!sampled[c]) continue;
      remap[c] = static_cast<int>(next.clusters.size());
      next.clusters.push_back({0, prev.clusters[c].center, {}, Dist(step)});
    }
    for (Vertex v = 0; v < n; ++v) {
      if (next_own[v] >= 0) next.clusters[remap[next_own[v]]].members.push_back(v);
    }
    next.normalize();
    res.clustering = std::move(next);
    res.level_sizes.push_back(res.clustering.size());
  }
  return res;
}

namespace {

// Multi-source Dijkstra with labels ordered by (distance, source id).
void nearest_sources(const Graph& g, const std::vector<char>& is_source,
                     std::vector<Vertex>& src, std::vector<Dist>& dist) {
  const Vertex n = g.n();
  src.assign(n, -1);
  dist.assign(n, kInf);
  using Item = std::tuple<Dist, Vertex, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  for (Vertex v = 0; v < n; ++v) {
    if (is_source[v]) {
      src[v] = v;
      dist[v] = 0;
      pq.push({0, v, v});
    }
  }
  std::vector<char> done(n, 0);
  while (!pq.empty()) {
    auto [d, s, u] = pq.top();
    pq.pop();
    if (done[u] || s != src[u] || d > dist[u]) continue;
    done[u] = 1;
    for (const auto& a : g.neighbors(u)) {
      if (done[a.to]) continue;
      Dist nd = d + a.w;
      if (dist_lt(nd, dist[a.to]) ||
          (dist_eq(nd, dist[a.to]) && s < src[a.to])) {
        dist[a.to] = nd;
        src[a.to] = s;
        pq.push({nd, s, a.to});
      }
    }
  }
}

// Vertices v with dist(u, v) strictly below bound[v], with distances.
void grow_bunch_cluster(const Graph& g, Vertex u, const std::vector<Dist>& bound,
                        std::vector<std::pair<Vertex, Dist>>& out,
                        std::vector<Dist>& scratch) {
  out.clear();
  using Item = std::pair<Dist, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  std::vector<Vertex> touched;
  scratch[u] = 0;
  touched.push_back(u);
  pq.push({0, u});
  while (!pq.empty()) {
    auto [d, x] = pq.top();
    pq.pop();
    if (d > scratch[x]) continue;
    if (!dist_lt(d, bound[x])) continue;
    out.push_back({x, d});
    for (const auto& a : g.neighbors(x)) {
      Dist nd = d + a.w;
      if (nd < scratch[a.to] && dist_lt(nd, bound[a.to])) {
        if (scratch[a.to] == kInf) touched.push_back(a.to);
        scratch[a.to] = nd;
        pq.push({nd, a.to});
      }
    }
  }
  for (Vertex x : touched) scratch[x] = kInf;
}

}  // namespace

TzResult truncated_tz(const Graph& g, int k, int l, Dist r0, RngStream& rng) {
  if (k < 2 || l < 1 || l > k - 1) {
    throw std::invalid_argument("truncated_tz: need 1 <= l <= k-1");
  }
  if (r0 < 0) throw std::invalid_argument("truncated_tz: r0 >= 0");
  const Vertex n = g.n();
  const double p = n > 0 ? std::pow(static_cast<double>(n), -1.0 / k) : 1.0;
  TzResult res;
  res.levels = l;
  res.hops = Hopset(g);
  res.in_level.assign(l + 1, std::vector<char>(n, 0));
  res.in_level[0].assign(n, 1);
  for (int i = 1; i <= l; ++i) {
    for (Vertex v = 0; v < n; ++v) {
      if (res.in_level[i - 1][v] && rng.bernoulli(p)) res.in_level[i][v] = 1;
    }
  }
  res.pivot.resize(l + 1);
  res.pivot_dist.resize(l + 1);
  for (int i = 0; i <= l; ++i) {
    nearest_sources(g, res.in_level[i], res.pivot[i], res.pivot_dist[i]);
  }

  res.bunch.assign(l, std::vector<std::vector<Vertex>>(n));
  std::vector<std::pair<Vertex, Dist>> grown;
  std::vector<Dist> scratch(n, kInf);
  for (int i = 0; i < l; ++i) {
    for (Vertex u = 0; u < n; ++u) {
      if (!res.in_level[i][u] || res.in_level[i + 1][u]) continue;
      grow_bunch_cluster(g, u, res.pivot_dist[i + 1], grown, scratch);
      for (auto [v, d] : grown) {
        res.bunch[i][v].push_back(u);
        res.hops.add(v, u, d, "tz.bunch" + std::to_string(i));
      }
    }
  }
  for (int i = 1; i <= l; ++i) {
    for (Vertex v = 0; v < n; ++v) {
      if (res.pivot[i][v] >= 0) {
        res.hops.add(v, res.pivot[i][v], res.pivot_dist[i][v], "tz.pivot");
      }
    }
  }

  res.clustering.level = "tz";
  std::vector<int> slot(n, -1);
  for (Vertex a = 0; a < n; ++a) {
    if (!res.in_level[l][a]) continue;
    slot[a] = static_cast<int>(res.clustering.clusters.size());
    res.clustering.clusters.push_back({0, a, {}, r0});
  }
  for (Vertex v = 0; v < n; ++v) {
    Vertex c = res.pivot[l][v];
    if (c < 0 || !dist_le(res.pivot_dist[l][v], r0)) continue;
    res.clustering.clusters[slot[c]].members.push_back(v);
    res.hops.add(v, c, res.pivot_dist[l][v], "tz.cluster");
  }
  res.clustering.normalize();
  return res;
}

std::vector<int> sample_clusters(size_t count, double p, RngStream& rng) {
  if (!(p >= 0 && p <= 1)) {
    throw std::invalid_argument("sample_clusters: need 0 <= p <= 1");
  }
  std::vector<int> out;
  for (size_t i = 0; i < count; ++i) {
    if (rng.bernoulli(p)) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> sample_clusters(const Clustering& c, double p, RngStream& rng) {
  return sample_clusters(c.size(), p, rng);
}

std::vector<int> sample_clusters(const SuperClustering& c, double p,
                                 RngStream& rng) {
  return sample_clusters(c.size(), p, rng);
}

AbstractGraph cluster_graph(DistanceOracle& oracle,
                            const std::vector<Vertex>& centers,
                            Dist threshold) {
  AbstractGraph out;
  out.n = static_cast<int>(centers.size());
  for (int a = 0; a < out.n; ++a) {
    const auto& row = oracle.tree(centers[a]).dist;
    for (int b = a + 1; b < out.n; ++b) {
      if (dist_le(row[centers[b]], threshold)) out.edges.push_back({a, b});
    }
  }
  return out;
}

AbstractGraph cluster_graph(DistanceOracle& oracle, const Clustering& c,
                            Dist threshold) {
  return cluster_graph(oracle, c.centers(), threshold);
}

std::vector<std::pair<int, int>> basic_spanner(const AbstractGraph& g,
                                               int stretch) {
  if (stretch < 1 || stretch % 2 == 0) {
    throw std::invalid_argument("basic_spanner: stretch must be odd and >= 1");
  }
  std::vector<std::pair<int, int>> edges = g.edges;
  for (auto& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::vector<std::vector<int>> adj(g.n);
  std::vector<int> depth(g.n, -1);
  std::vector<int> queue;
  std::vector<std::pair<int, int>> kept;
  for (auto [a, b] : edges) {
    // Depth-bounded BFS from a in the current spanner.
    bool close = false;
    queue.assign(1, a);
    depth[a] = 0;
    for (size_t head = 0; head < queue.size() && !close; ++head) {
      int x = queue[head];
      if (depth[x] >= stretch) continue;
      for (int y : adj[x]) {
        if (depth[y] >= 0) continue;
        depth[y] = depth[x] + 1;
        if (y == b) {
          close = true;
          break;
        }
        queue.push_back(y);
      }
    }
    for (int x : queue) depth[x] = -1;
    depth[b] = -1;
    if (!close) {
      kept.push_back({a, b});
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  }
  return kept;
}

}  // namespace spanhop
