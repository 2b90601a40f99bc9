// Copyright 2026 The spanhop Authors.
// SPDX-License-Identifier: Apache-2.0

#include "spanhop/spanners.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "engines.hpp"
#include "oracle_ref.hpp"

namespace spanhop {

using detail::OracleRef;
using detail::PathSink;

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

nlohmann::json tag_counts(const EdgeSubgraph& h) {
  std::map<std::string, size_t> counts;
  for (int32_t id : h.edge_ids()) {
    const std::string& tag = h.tag(id);
    counts[tag.substr(0, tag.find('.'))]++;
  }
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : counts) j[k] = v;
  return j;
}

// Connects every unclustered vertex within `attach` of a center, then runs
// the greedy spanner on the cluster graph and inlines its edges.
void final_stage(DistanceOracle& o, const Clustering& c, Dist attach,
                 Dist threshold, int stretch, detail::Sink& sink,
                 nlohmann::json& ledger) {
  const Vertex n = o.graph().n();
  std::vector<int> own = c.owner(n);
  std::vector<Vertex> centers = c.centers();
  size_t attached = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (own[v] >= 0) continue;
    Nearest nb = nearest_center(o, v, centers);
    if (nb.index >= 0 && dist_le(nb.dist, attach)) {
      sink.connect(v, centers[nb.index], "final.attach");
      ++attached;
    }
  }
  AbstractGraph cg = cluster_graph(o, centers, threshold);
  auto kept = basic_spanner(cg, stretch);
  for (auto [a, b] : kept) sink.connect(centers[b], centers[a], "final.spanner");
  ledger["final_attached"] = attached;
  ledger["final_clusters"] = c.size();
  ledger["cluster_graph_edges"] = cg.edges.size();
  ledger["cluster_spanner_edges"] = kept.size();
}

double root(int64_t k, double e) { return std::pow(static_cast<double>(k), e); }

}  // namespace

SpannerResult spanner_short_dist(const Graph& g, int k, int d, RngStream& rng,
                                 DistanceOracle* oracle) {
  require(!g.weighted(), "spanner_short_dist: graph must be unweighted");
  require(k >= 1, "spanner_short_dist: k >= 1");
  int dmax = static_cast<int>(floor_robust(std::sqrt(static_cast<double>(k)) / 2));
  require(d >= 1 && d <= dmax, "spanner_short_dist: need 1 <= d <= floor(sqrt(k)/2)");
  OracleRef o(g, oracle);
  const int t = k / d;
  BaswanaSenResult bs = truncated_baswana_sen(g, k, t, rng);

  SpannerResult res;
  res.h = std::move(bs.h);
  PathSink sink(*o, res.h);
  const Clustering& c = bs.clustering;
  AbstractGraph cg = cluster_graph(*o, c, d + 2.0 * k / d);
  auto kept = basic_spanner(cg, 2 * d - 1);
  for (auto [a, b] : kept) {
    sink.connect(c.clusters[b].center, c.clusters[a].center, "final.spanner");
  }

  res.levels.push_back(c);
  res.radius_audit.push_back({"bs", Dist(t), detail::measured_radius(*o, c), Dist(t)});
  res.schedule.T = 1;
  res.schedule.t = t;
  res.schedule.probs = {std::pow(static_cast<double>(g.n()), -1.0 / k)};

  Certificate& cert = res.cert;
  cert.construction = "spanner-short-dist";
  cert.k = k;
  cert.alpha = 0;
  cert.beta = 7.0 * k;
  cert.pair_lo = cert.pair_hi = d;
  cert.size = res.h.size();
  cert.ledger["d"] = d;
  cert.ledger["bs_level_sizes"] = bs.level_sizes;
  cert.ledger["cluster_graph_edges"] = cg.edges.size();
  cert.ledger["cluster_spanner_edges"] = kept.size();
  cert.ledger["edges_by_stage"] = tag_counts(res.h);
  return res;
}

std::vector<Dist> supercluster_alphas(Dist r0, int K, int t) {
  std::vector<Dist> out;
  const double q = 4.0 / (K - 3);
  Dist a = 0;
  for (int j = 1; j <= t; ++j) {
    a = static_cast<Dist>(ceil_robust(q * r0 + (1 + q) * a));
    out.push_back(a);
  }
  return out;
}

Dist supercluster_alpha_bound(Dist r0, int K, int j) {
  return (r0 + (K - 3) / 4.0) * (std::pow(1 + 4.0 / (K - 3), j) - 1);
}

SuperclusterResult supercluster_augment(const Graph& g, int64_t k, int t,
                                        double eps, const Clustering& c_in,
                                        RngStream& rng, DistanceOracle* oracle,
                                        int phase) {
  require(!g.weighted(), "supercluster_augment: graph must be unweighted");
  require(t >= 0, "supercluster_augment: t >= 0");
  const int K = static_cast<int>(ceil_robust(root(k, eps)));
  require(K >= 16, "supercluster_augment: k < 16^{1/eps}");
  OracleRef o(g, oracle);
  SuperclusterResult res;
  res.h = EdgeSubgraph(g);
  PathSink sink(*o, res.h);
  detail::SuperclusterParams params;
  params.K = K;
  params.steps = t;
  params.sample_p = g.n() > 0 ? static_cast<double>(c_in.size()) / g.n() : 0;
  params.phase = phase;
  auto out = detail::run_superclustering(*o, c_in, params, rng, sink);
  res.clustering = std::move(out.out);
  res.steps = std::move(out.steps);
  res.radius_audit = std::move(out.audit);
  return res;
}

LongDistancePlan long_distance_plan(int64_t k, double eps) {
  LongDistancePlan plan;
  plan.K = static_cast<int>(ceil_robust(root(k, eps)));
  plan.t = (plan.K + 3) / 4;
  plan.widened = plan.K % 4 != 0;
  const double base = root(k, 1 - 2 * eps);
  plan.T = base <= 1 + 1e-12 ? 0.0 : std::log(base) / std::log(plan.t);
  const double nearest = std::round(plan.T);
  if (std::abs(plan.T - nearest) < 1e-9) {
    plan.integral = true;
    plan.steps.assign(static_cast<size_t>(nearest), plan.t);
    return plan;
  }
  plan.integral = false;
  const double fl = std::floor(plan.T);
  const double c = plan.T - fl;
  const double tc = std::pow(plan.t, c);
  if (tc > plan.t / 3.0) {
    plan.rounded_up = true;
    plan.steps.assign(static_cast<size_t>(fl) + 1, plan.t);
  } else {
    plan.steps.assign(static_cast<size_t>(fl), plan.t);
    plan.steps.push_back(static_cast<int>(floor_robust(tc)));
  }
  return plan;
}

namespace {

void check_long_params(const Graph& g, int64_t k, double eps) {
  require(!g.weighted(), "spanner_long_dist: graph must be unweighted");
  require(eps > 0 && eps <= 0.5 + 1e-12, "spanner_long_dist: need 0 < eps <= 1/2");
  require(static_cast<double>(k) >= std::pow(16.0, 1 / eps) * (1 - 1e-12),
          "spanner_long_dist: k < 16^{1/eps}");
}

}  // namespace

SpannerResult spanner_long_dist(const Graph& g, int64_t k, int d, double eps,
                                RngStream& rng, DistanceOracle* oracle) {
  check_long_params(g, k, eps);
  require(d >= 1, "spanner_long_dist: d >= 1");
  OracleRef o(g, oracle);
  const LongDistancePlan plan = long_distance_plan(k, eps);
  const int K = plan.K;
  const Vertex n = g.n();

  BaswanaSenResult bs = truncated_baswana_sen(g, static_cast<int>(std::min<int64_t>(k, 1 << 30)), K, rng);
  SpannerResult res;
  res.h = std::move(bs.h);
  PathSink sink(*o, res.h);
  Clustering c = std::move(bs.clustering);
  const Dist r00 = K;
  res.levels.push_back(c);
  res.radius_audit.push_back({"c0", c.max_radius_bound(), detail::measured_radius(*o, c), r00});

  res.schedule.T = static_cast<int>(plan.steps.size());
  res.schedule.t = plan.t;
  for (size_t i = 0; i < plan.steps.size(); ++i) {
    const int phase = static_cast<int>(i) + 1;
    const Dist ri0 = c.max_radius_bound();
    res.radius_audit.push_back({"ph" + std::to_string(phase) + ".r0", ri0, ri0,
                                std::pow(2.0 * K, phase - 1) * r00});
    detail::SuperclusterParams params;
    params.K = K;
    params.steps = plan.steps[i];
    params.sample_p = n > 0 ? static_cast<double>(c.size()) / n : 0;
    params.phase = phase;
    auto out = detail::run_superclustering(*o, c, params, rng, sink);
    std::vector<Dist> alphas, radii;
    for (const auto& st : out.steps) {
      alphas.push_back(st.alpha);
      radii.push_back(st.radius);
      res.radius_audit.push_back({"ph" + std::to_string(phase) + ".st" +
                                      std::to_string(st.step) + ".alpha",
                                  st.alpha, st.alpha, st.alpha_closed_form});
    }
    for (const auto& row : out.audit) res.radius_audit.push_back(row);
    res.schedule.alphas.push_back(alphas);
    res.schedule.radii.push_back(radii);
    res.schedule.probs.push_back(params.sample_p);
    res.steps.insert(res.steps.end(), out.steps.begin(), out.steps.end());
    c = std::move(out.out);
    res.levels.push_back(c);
  }

  const Dist rT = res.schedule.T == 0 ? r00 : c.max_radius_bound();
  const double final_bound =
      plan.integral ? std::pow(64.0, (1 - eps) / eps) * root(k, 1 - eps) / 30
                    : std::pow(64.0, 1 / eps - 1) * root(k, 1 - eps);
  res.radius_audit.push_back({"final", rT, detail::measured_radius(*o, c), final_bound});

  Certificate& cert = res.cert;
  final_stage(*o, c, rT + d, 2 * rT + 2 * d, 2 * K - 3, sink, cert.ledger);

  const double widen = plan.widened ? 4.0 : 1.0;
  cert.construction = "spanner-long-dist";
  cert.k = k;
  cert.eps = cert.eps_effective = eps;
  cert.alpha = widen * 4 * root(k, eps);
  cert.beta = widen * std::pow(64.0, (1 - eps) / eps) * static_cast<double>(k) / 6;
  cert.pair_lo = cert.pair_hi = d;
  cert.size = res.h.size();
  cert.ledger["d"] = d;
  cert.ledger["K"] = K;
  cert.ledger["t"] = plan.t;
  cert.ledger["T_exact"] = plan.T;
  cert.ledger["T_integral"] = plan.integral;
  cert.ledger["T_rounded_up"] = plan.rounded_up;
  cert.ledger["phase_steps"] = plan.steps;
  cert.ledger["widened"] = plan.widened;
  cert.ledger["r_T"] = rT;
  cert.ledger["bs_level_sizes"] = bs.level_sizes;
  cert.ledger["edges_by_stage"] = tag_counts(res.h);
  return res;
}

SpannerResult assemble_alpha_beta_spanner(const Graph& g, int64_t k, double eps,
                                          RngStream& rng, DistanceOracle* oracle) {
  check_long_params(g, k, eps);
  OracleRef o(g, oracle);
  const LongDistancePlan plan = long_distance_plan(k, eps);
  const double top = std::pow(64.0, 1 / eps) * root(k, 1 - eps);

  SpannerResult res;
  res.h = EdgeSubgraph(g);
  nlohmann::json classes = nlohmann::json::array();
  size_t per_class_total = 0;
  bool audits_ok = true;
  for (int64_t d = 1; d <= static_cast<int64_t>(top + 1e-9); d *= 2) {
    RngStream sub = rng.fork(static_cast<uint64_t>(d));
    SpannerResult part = spanner_long_dist(g, k, static_cast<int>(d), eps, sub, &*o);
    audits_ok = audits_ok && all_ok(part.radius_audit);
    per_class_total += part.h.size();
    classes.push_back({{"d", d}, {"edges", part.h.size()}});
    res.h.merge(part.h);
    for (auto row : part.radius_audit) {
      row.level = "d" + std::to_string(d) + "." + row.level;
      res.radius_audit.push_back(row);
    }
    if (d > (int64_t{1} << 40)) break;
  }
  const double widen = plan.widened ? 4.0 : 1.0;
  Certificate& cert = res.cert;
  cert.construction = "spanner-alpha-beta";
  cert.k = k;
  cert.eps = cert.eps_effective = eps;
  cert.alpha = widen * 8 * root(k, eps);
  cert.beta = widen * std::pow(64.0, 1 / eps) * static_cast<double>(k);
  cert.size = res.h.size();
  cert.ledger["classes"] = classes;
  cert.ledger["per_class_total"] = per_class_total;
  cert.ledger["radius_audits_ok"] = audits_ok;
  return res;
}

double effective_eps(double eps) {
  require(eps > 0, "eps must be positive");
  const double q = 4.0 / eps;
  if (std::abs(q - std::round(q)) < 1e-9 && std::round(q) >= 1) return eps;
  return 4.0 / static_cast<double>(std::max<int64_t>(1, ceil_robust(q)));
}

std::pair<int, int> rho_split(int64_t k, double rho) {
  require(rho > 0 && rho <= 1, "rho must lie in (0, 1]");
  int i0 = static_cast<int>(ceil_robust(std::log2(static_cast<double>(k) * rho)));
  int i1 = static_cast<int>(ceil_robust(2 / rho - 1));
  return {std::max(i0, 1), std::max(i1, 1)};
}

namespace {

SpannerResult three_eps_impl(const Graph& g, int64_t k, double eps,
                             RngStream& rng, std::optional<double> rho,
                             bool improved, DistanceOracle* oracle) {
  const std::string name = improved ? "spanner3eps-improved" : "spanner3eps";
  require(!g.weighted(), name + ": graph must be unweighted");
  require(k >= 1, name + ": k >= 1");
  const double e = effective_eps(eps);
  OracleRef o(g, oracle);
  const Vertex n = g.n();

  detail::ThreeEpsParams params;
  params.eps = e;
  params.improved = improved;
  params.r0 = 0;
  params.alpha1 = 0.5;
  params.p1 = n > 0 ? std::pow(static_cast<double>(n), -1.0 / k) : 1.0;
  SpannerResult res;
  if (rho) {
    auto [i0, i1] = rho_split(k, *rho);
    params.phases = i0 + i1;
    params.freeze_after = i0;
    res.schedule.i0 = i0;
    res.schedule.i1 = i1;
    res.schedule.rho = rho;
  } else {
    params.phases = static_cast<int>(ceil_robust(std::log2(static_cast<double>(k)) + 1));
  }
  res.h = EdgeSubgraph(g);
  PathSink sink(*o, res.h);
  auto out = detail::run_three_eps(*o, Clustering::singletons(n), params, rng, sink);

  // Final stage: a BFS tree from every remaining center, truncated at 5 r_T
  // in rho-mode.
  const Clustering& last = out.levels.back();
  const Dist depth = rho ? 5 * out.radius : kInf;
  for (Vertex c : last.centers()) {
    const ShortestPathTree& t = o->tree(c);
    for (Vertex v = 0; v < n; ++v) {
      if (t.parent[v] >= 0 && dist_le(t.dist[v], depth)) {
        res.h.add_edge(v, t.parent[v], "final.bfs");
      }
    }
  }
  out.waves.push_back({params.phases + 1, "final", depth, last.centers(), true});

  const double base = improved ? 3 + 8 / e : 5 + 16 / e;
  for (size_t i = 0; i < out.audit.size(); ++i) {
    RadiusAuditRow row = out.audit[i];
    row.closed_form = (improved ? 1.0 : 2.0) * std::pow(base, static_cast<double>(i));
    res.radius_audit.push_back(row);
  }
  res.schedule.T = params.phases;
  res.schedule.t = 1;
  for (const auto& ph : out.phases) {
    res.schedule.alphas.push_back({ph.alpha});
    res.schedule.radii.push_back({ph.r});
    res.schedule.probs.push_back(ph.p);
  }
  res.levels = std::move(out.levels);
  res.phases = std::move(out.phases);
  res.waves = std::move(out.waves);

  const Dist rT = out.radius;
  Certificate& cert = res.cert;
  cert.construction = name;
  cert.k = k;
  cert.eps = eps;
  cert.eps_effective = e;
  cert.rho = rho;
  if (rho) {
    cert.alpha = 4 + e;
    cert.beta = (16 + 4 * e) * rT;
  } else {
    cert.alpha = 3 + e;
    cert.beta = (improved ? 4 : 2) * rT;
  }
  cert.size = res.h.size();
  nlohmann::json phases = nlohmann::json::array();
  for (const auto& ph : res.phases) {
    size_t paths = 0;
    for (size_t c : ph.lost_counts) paths += c;
    phases.push_back({{"phase", ph.phase}, {"p", ph.p}, {"alpha", ph.alpha},
                      {"r", ph.r}, {"clusters_before", ph.clusters_before},
                      {"sampled", ph.sampled}, {"clusters_after", ph.clusters_after},
                      {"attached", ph.attached}, {"lost", ph.lost},
                      {"lost_paths", paths}});
  }
  cert.ledger["phases"] = phases;
  cert.ledger["r_T"] = rT;
  cert.ledger["final_clusters"] = last.size();
  cert.ledger["edges_by_stage"] = tag_counts(res.h);
  return res;
}

}  // namespace

SpannerResult spanner_three_eps(const Graph& g, int64_t k, double eps,
                                RngStream& rng, std::optional<double> rho,
                                DistanceOracle* oracle) {
  return three_eps_impl(g, k, eps, rng, rho, false, oracle);
}

SpannerResult spanner_three_eps_improved(const Graph& g, int64_t k, double eps,
                                         RngStream& rng, DistanceOracle* oracle) {
  return three_eps_impl(g, k, eps, rng, std::nullopt, true, oracle);
}

ApproxDistances approx_sssp_via_spanner(const Graph& g,
                                        const std::vector<Vertex>& sources,
                                        const EdgeSubgraph& spanner,
                                        const Certificate& cert) {
  require(&spanner.parent() == &g || spanner.parent().n() == g.n(),
          "approx_sssp_via_spanner: spanner built on another graph");
  Graph h = spanner.to_graph();
  ApproxDistances out;
  out.sources = sources;
  out.cert = cert;
  for (Vertex s : sources) out.dist.push_back(shortest_path_tree(h, s).dist);
  return out;
}

}  // namespace spanhop
