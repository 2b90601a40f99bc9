// Copyright 2026 The spanhop Authors.
// SPDX-License-Identifier: Apache-2.0

#include "engines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spanhop::detail {

Dist measured_radius(DistanceOracle& o, const Clustering& c) {
  Dist r = 0;
  for (const Cluster& cl : c.clusters) {
    const auto& row = o.tree(cl.center).dist;
    for (Vertex u : cl.members) r = std::max(r, row[u]);
  }
  return r;
}

namespace {

std::vector<char> coverage(Vertex n, const Clustering& in,
                           const std::vector<std::vector<int>>& groups) {
  std::vector<char> covered(n, 0);
  for (const auto& group : groups) {
    for (int c : group) {
      for (Vertex u : in.clusters[c].members) covered[u] = 1;
    }
  }
  return covered;
}

}  // namespace

SuperclusterOutcome run_superclustering(DistanceOracle& o, const Clustering& in,
                                        const SuperclusterParams& params,
                                        RngStream& rng, Sink& sink) {
  const Vertex n = o.graph().n();
  SuperclusterOutcome res;
  const Dist r0 = in.max_radius_bound();
  res.radius = r0;
  if (params.steps <= 0) {
    res.out = in;
    return res;
  }
  if (params.K <= 3) throw std::invalid_argument("superclustering: K > 3");
  const double q = 4.0 / (params.K - 3);

  std::vector<Vertex> centers;
  std::vector<std::vector<int>> groups;
  for (size_t c = 0; c < in.size(); ++c) {
    centers.push_back(in.clusters[c].center);
    groups.push_back({static_cast<int>(c)});
  }

  Dist alpha_prev = 0;
  Dist r_prev = r0;
  for (int j = 1; j <= params.steps; ++j) {
    Dist alpha = q * r0 + (1 + q) * alpha_prev;
    if (params.integral_alpha) alpha = static_cast<Dist>(ceil_robust(alpha));
    const std::string tag =
        "ph" + std::to_string(params.phase) + ".st" + std::to_string(j);

    SuperclusterStep rec;
    rec.phase = params.phase;
    rec.step = j;
    rec.alpha = alpha;
    rec.alpha_closed_form =
        (params.integral_alpha ? r0 + (params.K - 3) / 4.0 : r0) *
        (std::pow(1 + q, j) - 1);
    rec.superclusters_before = groups.size();

    // (1) Unclustered vertices near a supercluster connect to the closest
    // center.
    std::vector<char> covered = coverage(n, in, groups);
    for (Vertex v = 0; v < n; ++v) {
      if (covered[v]) continue;
      Nearest nb = nearest_center(o, v, centers);
      if (nb.index >= 0 && dist_le(nb.dist, r_prev + alpha)) {
        sink.connect(v, centers[nb.index], tag + ".attach");
        ++rec.attached;
      }
    }

    // (2) Sample superclusters.
    std::vector<int> sampled = sample_clusters(groups.size(), params.sample_p, rng);
    rec.sampled = sampled.size();
    std::vector<Vertex> sampled_centers;
    for (int s : sampled) sampled_centers.push_back(centers[s]);

    // (3) Every original cluster joins the closest sampled supercluster
    // within delta; (5) otherwise it connects to every supercluster center
    // within delta.
    const Dist delta = r0 + r_prev + 2 * alpha;
    std::vector<std::vector<int>> next(sampled.size());
    for (const auto& group : groups) {
      for (int c : group) {
        const Cluster& cl = in.clusters[c];
        Nearest nb = nearest_center(o, cl.center, sampled_centers);
        if (nb.index >= 0 && dist_le(nb.dist, delta)) {
          next[nb.index].push_back(c);
          sink.join(cl.members, cl.center, sampled_centers[nb.index],
                    tag + ".join");
          continue;
        }
        ++rec.lost;
        const auto& row = o.tree(cl.center).dist;
        for (Vertex sc : centers) {
          if (sc != cl.center && dist_le(row[sc], delta)) {
            sink.connect(cl.center, sc, tag + ".lost");
            ++rec.lost_connections;
          }
        }
      }
    }
    groups = std::move(next);
    centers = std::move(sampled_centers);

    const Dist r = r_prev + 2 * r0 + 2 * alpha;
    rec.radius = r;
    res.steps.push_back(rec);

    Dist measured = 0;
    for (size_t s = 0; s < groups.size(); ++s) {
      const auto& row = o.tree(centers[s]).dist;
      for (int c : groups[s]) {
        for (Vertex u : in.clusters[c].members) measured = std::max(measured, row[u]);
      }
    }
    res.audit.push_back({tag, r, measured, kInf});
    alpha_prev = alpha;
    r_prev = r;
  }

  res.radius = r_prev;
  res.out.level = "ph" + std::to_string(params.phase);
  for (size_t s = 0; s < groups.size(); ++s) {
    Cluster merged{0, centers[s], {}, r_prev};
    for (int c : groups[s]) {
      const auto& m = in.clusters[c].members;
      merged.members.insert(merged.members.end(), m.begin(), m.end());
    }
    res.out.clusters.push_back(std::move(merged));
  }
  res.out.normalize();
  return res;
}

ThreeEpsOutcome run_three_eps(DistanceOracle& o, Clustering c0,
                              const ThreeEpsParams& params, RngStream& rng,
                              Sink& sink) {
  const Vertex n = o.graph().n();
  ThreeEpsOutcome res;
  Clustering cur = std::move(c0);
  res.levels.push_back(cur);
  Dist r_prev = params.r0;
  std::vector<double> probs;

  for (int i = 1; i <= params.phases; ++i) {
    ThreeEpsPhase rec;
    rec.phase = i;
    rec.r_prev = r_prev;
    rec.alpha = (i == 1 && params.alpha1) ? *params.alpha1
                                          : (4.0 / params.eps) * r_prev;
    if (i == 1) {
      rec.p = params.p1;
    } else if (i <= params.freeze_after) {
      rec.p = n > 0 ? static_cast<double>(cur.size()) / n : 0.0;
    } else {
      rec.p = probs[params.freeze_after - 1];
    }
    probs.push_back(rec.p);
    rec.clusters_before = cur.size();
    const Dist alpha = rec.alpha;
    const std::string tag = params.prefix + std::to_string(i);
    std::vector<int> own = cur.owner(n);
    std::vector<Vertex> centers = cur.centers();

    // (1) Unclustered vertices within r + alpha connect to the closest center.
    const Dist attach = r_prev + alpha;
    for (Vertex v = 0; v < n; ++v) {
      if (own[v] >= 0) continue;
      Nearest nb = nearest_center(o, v, centers);
      if (nb.index >= 0 && dist_le(nb.dist, attach)) {
        sink.connect(v, centers[nb.index], tag + ".attach");
        ++rec.attached;
      }
    }
    res.waves.push_back({i, "attach", attach, centers, false});

    // (2) Sample clusters.
    std::vector<int> sampled = sample_clusters(cur, rec.p, rng);
    rec.sampled = sampled.size();
    std::vector<Vertex> sampled_centers;
    for (int s : sampled) sampled_centers.push_back(centers[s]);

    // (3) Join the closest sampled cluster.
    const Dist join = params.improved ? 2 * r_prev + 2 * alpha
                                      : 4 * r_prev + 4 * alpha;
    const Dist r = r_prev + join;
    Clustering next;
    next.level = tag;
    for (Vertex c : sampled_centers) next.clusters.push_back({0, c, {}, r});
    std::vector<int> lost;
    for (size_t c = 0; c < cur.size(); ++c) {
      const Cluster& cl = cur.clusters[c];
      Nearest nb = nearest_center(o, cl.center, sampled_centers);
      if (nb.index >= 0 && dist_le(nb.dist, join)) {
        auto& m = next.clusters[nb.index].members;
        m.insert(m.end(), cl.members.begin(), cl.members.end());
        sink.join(cl.members, cl.center, sampled_centers[nb.index],
                  tag + ".join");
      } else {
        lost.push_back(static_cast<int>(c));
      }
    }
    res.waves.push_back({i, "join", join, sampled_centers, false});

    // (5) Lost clusters connect to every other center within 2r + 2alpha.
    const Dist reach = 2 * r_prev + 2 * alpha;
    std::vector<Vertex> lost_centers;
    for (int c : lost) {
      Vertex cc = cur.clusters[c].center;
      lost_centers.push_back(cc);
      const auto& row = o.tree(cc).dist;
      size_t count = 0;
      for (Vertex other : centers) {
        if (other != cc && dist_le(row[other], reach)) {
          sink.connect(cc, other, tag + ".lost");
          ++count;
        }
      }
      rec.lost_counts.push_back(count);
    }
    rec.lost = lost.size();
    res.waves.push_back({i, "lost", reach, lost_centers, true});

    next.normalize();
    rec.r = r;
    rec.clusters_after = next.size();
    res.audit.push_back({tag, r, measured_radius(o, next), kInf});
    res.phases.push_back(rec);
    cur = std::move(next);
    res.levels.push_back(cur);
    r_prev = r;
  }
  res.radius = r_prev;
  return res;
}

}  // namespace spanhop::detail
