// Copyright 2026 The spanhop Authors.
// SPDX-License-Identifier: Apache-2.0

#include "spanhop/hopsets.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "engines.hpp"
#include "oracle_ref.hpp"

namespace spanhop {

using detail::HopSink;
using detail::OracleRef;

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

double root(int64_t k, double e) { return std::pow(static_cast<double>(k), e); }

nlohmann::json tag_counts(const Hopset& h) {
  std::map<std::string, size_t> counts;
  for (const Hop& hop : h.hops()) counts[hop.tag.substr(0, hop.tag.find('.'))]++;
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : counts) j[k] = v;
  return j;
}

void hop_final_stage(DistanceOracle& o, const Clustering& c, Dist attach,
                     Dist threshold, int stretch, HopSink& sink,
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
  for (auto [a, b] : kept) sink.connect(centers[a], centers[b], "final.spanner");
  ledger["final_attached"] = attached;
  ledger["final_clusters"] = c.size();
  ledger["cluster_graph_edges"] = cg.edges.size();
  ledger["cluster_spanner_edges"] = kept.size();
}

}  // namespace

HopsetResult hopset_small_hops(const Graph& g, int64_t k, Dist d, double eps,
                               RngStream& rng, DistanceOracle* oracle) {
  require(eps >= 0.5 - 1e-12 && eps < 1, "hopset_small_hops: need 1/2 <= eps < 1");
  require(root(k, eps) >= 10 - 1e-9, "hopset_small_hops: k < 10^{1/eps}");
  require(d > 0, "hopset_small_hops: d > 0");
  OracleRef o(g, oracle);
  const int l = static_cast<int>(ceil_robust(root(k, eps)));
  require(l <= k - 1, "hopset_small_hops: ceil(k^eps) must be below k");
  const double kc = root(k, 1 - eps);
  const Dist r0 = d * (l + 1) / kc;

  TzResult tz = truncated_tz(g, static_cast<int>(k), l, r0, rng);
  HopsetResult res;
  res.hops = std::move(tz.hops);
  HopSink sink(*o, res.hops);
  const Clustering& c = tz.clustering;
  res.levels.push_back(c);
  res.radius_audit.push_back({"tz", r0, detail::measured_radius(*o, c), r0});

  const int s = static_cast<int>(std::max<int64_t>(1, floor_robust(kc)));
  AbstractGraph cg = cluster_graph(*o, c, 2 * r0 + d);
  auto kept = basic_spanner(cg, 2 * s - 1);
  for (auto [a, b] : kept) {
    sink.connect(c.clusters[a].center, c.clusters[b].center, "final.spanner");
  }

  Certificate& cert = res.cert;
  cert.construction = "hopset-small-hops";
  cert.k = k;
  cert.eps = cert.eps_effective = eps;
  cert.alpha = 18 * root(k, eps);
  cert.beta = static_cast<double>(floor_robust(8 * kc + 1));
  cert.pair_lo = d / 2;
  cert.pair_hi = d;
  cert.size = res.hops.size();
  cert.ledger["d"] = d;
  cert.ledger["l"] = l;
  cert.ledger["r0"] = r0;
  cert.ledger["clusters"] = c.size();
  cert.ledger["cluster_graph_edges"] = cg.edges.size();
  cert.ledger["cluster_spanner_edges"] = kept.size();
  cert.ledger["hops_by_stage"] = tag_counts(res.hops);
  return res;
}

ClusterAugmentResult cluster_and_augment_hop(const Graph& g, int64_t k,
                                             double eps, const Clustering& c_in,
                                             RngStream& rng,
                                             DistanceOracle* oracle,
                                             std::optional<int> steps, int phase) {
  const int K = static_cast<int>(ceil_robust(root(k, eps)));
  require(K >= 16, "cluster_and_augment_hop: k < 16^{1/eps}");
  OracleRef o(g, oracle);
  const Vertex n = g.n();
  ClusterAugmentResult res;
  res.hops = Hopset(g);
  HopSink sink(*o, res.hops);
  detail::SuperclusterParams params;
  params.K = K;
  params.steps = steps ? *steps : (K + 3) / 4;
  params.integral_alpha = false;
  params.sample_p =
      n > 0 ? std::min(std::pow(static_cast<double>(n), -1.0 / k),
                       static_cast<double>(c_in.size()) / n)
            : 0;
  params.phase = phase;
  auto out = detail::run_superclustering(*o, c_in, params, rng, sink);
  res.clustering = std::move(out.out);
  res.steps = std::move(out.steps);
  res.radius_audit = std::move(out.audit);
  return res;
}

HopsetResult hopset_small_stretch(const Graph& g, int64_t k, Dist d, double eps,
                                  RngStream& rng, DistanceOracle* oracle) {
  require(eps > 0 && eps < 0.5, "hopset_small_stretch: need 0 < eps < 1/2");
  require(static_cast<double>(k) >= std::pow(16.0, 1 / eps) * (1 - 1e-12),
          "hopset_small_stretch: k < 16^{1/eps}");
  require(d > 0, "hopset_small_stretch: d > 0");
  OracleRef o(g, oracle);
  const Vertex n = g.n();
  const LongDistancePlan plan = long_distance_plan(k, eps);
  const int K = plan.K;
  const double R = 0.5 * std::pow(36.0, 1 / eps) * root(k, 1 - 2 * eps);
  const Dist r0 = d / R;

  TzResult tz = truncated_tz(g, static_cast<int>(k), K, r0, rng);
  HopsetResult res;
  res.hops = std::move(tz.hops);
  HopSink sink(*o, res.hops);
  Clustering c = std::move(tz.clustering);
  res.levels.push_back(c);
  res.radius_audit.push_back({"tz", r0, detail::measured_radius(*o, c), r0});

  res.schedule.T = static_cast<int>(plan.steps.size());
  res.schedule.t = plan.t;
  for (size_t i = 0; i < plan.steps.size(); ++i) {
    const int phase = static_cast<int>(i) + 1;
    detail::SuperclusterParams params;
    params.K = K;
    params.steps = plan.steps[i];
    params.integral_alpha = false;
    params.sample_p =
        n > 0 ? std::min(std::pow(static_cast<double>(n), -1.0 / k),
                         static_cast<double>(c.size()) / n)
              : 0;
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
  const Dist rT = res.schedule.T == 0 ? r0 : c.max_radius_bound();
  res.radius_audit.push_back({"final", rT, detail::measured_radius(*o, c),
                              plan.integral ? d / 648 : d / 27});

  Certificate& cert = res.cert;
  hop_final_stage(*o, c, rT + d, 2 * rT + 2 * d, 2 * K - 3, sink, cert.ledger);

  const double widen = plan.widened ? 4.0 : 1.0;
  cert.construction = "hopset-small-stretch";
  cert.k = k;
  cert.eps = cert.eps_effective = eps;
  cert.alpha = widen * 9 * root(k, eps);
  cert.beta = static_cast<double>(floor_robust(std::pow(36.0, 1 / eps) * root(k, 1 - eps)));
  cert.pair_lo = d / 2;
  cert.pair_hi = d;
  cert.size = res.hops.size();
  cert.ledger["d"] = d;
  cert.ledger["K"] = K;
  cert.ledger["R_prime"] = R;
  cert.ledger["r0"] = r0;
  cert.ledger["r_T"] = rT;
  cert.ledger["T_exact"] = plan.T;
  cert.ledger["phase_steps"] = plan.steps;
  cert.ledger["widened"] = plan.widened;
  cert.ledger["hops_by_stage"] = tag_counts(res.hops);
  return res;
}

namespace {

HopsetResult three_eps_hopset_impl(const Graph& g, int64_t k, Dist d, double eps,
                                   RngStream& rng, std::optional<double> rho,
                                   bool improved, DistanceOracle* oracle) {
  const std::string name = improved ? "hopset3eps-improved" : "hopset3eps";
  require(k >= 2, name + ": k >= 2");
  require(d > 0, name + ": d > 0");
  const double e = effective_eps(eps);
  OracleRef o(g, oracle);
  const Vertex n = g.n();
  const double logk = std::log2(static_cast<double>(k));

  double R;
  int phases;
  HopsetResult res;
  if (rho) {
    auto [i0, i1] = rho_split(k, *rho);
    phases = i0 + i1;
    res.schedule.i0 = i0;
    res.schedule.i1 = i1;
    res.schedule.rho = rho;
    R = std::pow(5 + 18 / e, std::log2(*rho) + 2 / *rho) * std::pow(k, std::log2(5 + 18 / e));
  } else {
    phases = static_cast<int>(ceil_robust(logk));
    R = improved ? (3 + 8 / e) * std::pow(k, std::log2(3 + 8 / e))
                 : std::pow(5 + 16 / e, static_cast<double>(phases));
  }
  const Dist r0 = d / (2 * R);

  TzResult tz = truncated_tz(g, static_cast<int>(k), 1, r0, rng);
  res.hops = std::move(tz.hops);
  HopSink sink(*o, res.hops);
  Clustering c0 = std::move(tz.clustering);
  res.radius_audit.push_back({"tz", r0, detail::measured_radius(*o, c0), r0});

  // Vertices outside the TZ clusters get hops to everything no farther than
  // their pivot (the whole component when A_1 is empty).
  std::vector<int> own = c0.owner(n);
  size_t near_hops = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (own[v] >= 0) continue;
    ShortestPathTree t = shortest_path_tree(g, v, tz.pivot_dist[1][v]);
    for (Vertex u = 0; u < n; ++u) {
      if (u != v && t.dist[u] != kInf && dist_le(t.dist[u], tz.pivot_dist[1][v])) {
        near_hops += res.hops.add(v, u, t.dist[u], "tz.near") ? 1 : 0;
      }
    }
  }

  detail::ThreeEpsParams params;
  params.phases = phases;
  params.eps = e;
  params.improved = improved;
  params.r0 = r0;
  params.p1 = n > 0 ? static_cast<double>(c0.size()) / n : 0;
  if (rho) params.freeze_after = res.schedule.i0;
  auto out = detail::run_three_eps(*o, c0, params, rng, sink);

  // Final stage: every vertex within r_T + 2d of a remaining center.
  const Dist rT = out.radius;
  const Clustering& last = out.levels.back();
  size_t final_hops = 0;
  for (Vertex c : last.centers()) {
    const auto& row = o->tree(c).dist;
    for (Vertex v = 0; v < n; ++v) {
      if (dist_le(row[v], rT + 2 * d)) {
        final_hops += res.hops.add(v, c, row[v], "final.center") ? 1 : 0;
      }
    }
  }
  out.waves.push_back({phases + 1, "final", rT + 2 * d, last.centers(), true});

  const double base = improved ? 3 + 8 / e : 5 + 16 / e;
  for (size_t i = 0; i < out.audit.size(); ++i) {
    RadiusAuditRow row = out.audit[i];
    row.closed_form = r0 * std::pow(base, static_cast<double>(i + 1));
    res.radius_audit.push_back(row);
  }
  res.radius_audit.push_back({"final", rT, detail::measured_radius(*o, last), d / 2});

  res.schedule.T = phases;
  res.schedule.t = 1;
  for (const auto& ph : out.phases) {
    res.schedule.alphas.push_back({ph.alpha});
    res.schedule.radii.push_back({ph.r});
    res.schedule.probs.push_back(ph.p);
  }
  res.levels = std::move(out.levels);
  res.phases = std::move(out.phases);
  res.waves = std::move(out.waves);

  Certificate& cert = res.cert;
  cert.construction = name;
  cert.k = k;
  cert.eps = eps;
  cert.eps_effective = e;
  cert.rho = rho;
  cert.alpha = 3 + 1.125 * e;
  cert.beta = static_cast<double>(floor_robust(16 * R));
  cert.pair_lo = d;
  cert.pair_hi = 2 * d;
  cert.size = res.hops.size();
  cert.ledger["d"] = d;
  cert.ledger["R_prime"] = R;
  cert.ledger["r0"] = r0;
  cert.ledger["r_T"] = rT;
  cert.ledger["near_hops"] = near_hops;
  cert.ledger["final_hops"] = final_hops;
  cert.ledger["final_clusters"] = last.size();
  nlohmann::json ph = nlohmann::json::array();
  for (const auto& p : res.phases) {
    size_t total = 0;
    for (size_t x : p.lost_counts) total += x;
    ph.push_back({{"phase", p.phase}, {"p", p.p}, {"alpha", p.alpha}, {"r", p.r},
                  {"clusters_before", p.clusters_before}, {"sampled", p.sampled},
                  {"lost", p.lost}, {"lost_hops", total}});
  }
  cert.ledger["phases"] = ph;
  cert.ledger["hops_by_stage"] = tag_counts(res.hops);
  return res;
}

}  // namespace

HopsetResult hopset_three_eps(const Graph& g, int64_t k, Dist d, double eps,
                              RngStream& rng, std::optional<double> rho,
                              DistanceOracle* oracle) {
  return three_eps_hopset_impl(g, k, d, eps, rng, rho, false, oracle);
}

HopsetResult hopset_three_eps_improved(const Graph& g, int64_t k, Dist d,
                                       double eps, RngStream& rng,
                                       DistanceOracle* oracle) {
  return three_eps_hopset_impl(g, k, d, eps, rng, std::nullopt, true, oracle);
}

DistanceClassPlan distance_class_plan(DistanceOracle& o) {
  const Graph& g = o.graph();
  DistanceClassPlan plan;
  if (g.n() <= 1 || g.m() == 0) return plan;
  plan.d_min = g.min_weight();
  for (Vertex s = 0; s < g.n(); ++s) {
    for (Dist x : o.tree(s).dist) {
      if (x != kInf) plan.d_max = std::max(plan.d_max, x);
    }
  }
  plan.lambda = plan.d_max / plan.d_min;
  for (Dist lo = plan.d_min;; lo *= 2) {
    plan.classes.push_back({lo, 2 * lo});
    if (dist_le(plan.d_max, 2 * lo)) break;
  }
  return plan;
}

DistanceClassPlan explicit_class_plan(const std::vector<Dist>& ds) {
  DistanceClassPlan plan;
  for (Dist d : ds) {
    require(d > 0, "distance classes must be positive");
    plan.classes.push_back({d, 2 * d});
  }
  if (!ds.empty()) {
    plan.d_min = *std::min_element(ds.begin(), ds.end());
    plan.d_max = 2 * *std::max_element(ds.begin(), ds.end());
    plan.lambda = plan.d_max / plan.d_min;
  }
  return plan;
}

FullHopsetResult build_full_hopset(const Graph& g, int64_t k, double eps,
                                   HopsetVariant variant, RngStream& rng,
                                   std::optional<double> rho,
                                   DistanceOracle* oracle,
                                   const DistanceClassPlan* plan) {
  OracleRef o(g, oracle);
  FullHopsetResult res;
  res.hops = Hopset(g);
  res.plan = plan ? *plan : distance_class_plan(*o);
  Certificate& cert = res.cert;
  cert.k = k;
  cert.eps = eps;
  cert.eps_effective = eps;
  cert.rho = rho;
  cert.alpha = 1;
  cert.beta = 1;
  nlohmann::json classes = nlohmann::json::array();
  int idx = 0;
  for (auto [lo, hi] : res.plan.classes) {
    RngStream sub = rng.fork(static_cast<uint64_t>(idx++));
    HopsetResult part;
    switch (variant) {
      case HopsetVariant::kSmallHops:
        part = hopset_small_hops(g, k, hi, eps, sub, &*o);
        break;
      case HopsetVariant::kSmallStretch:
        part = hopset_small_stretch(g, k, hi, eps, sub, &*o);
        break;
      case HopsetVariant::kThreeEps:
        part = hopset_three_eps(g, k, lo, eps, sub, rho, &*o);
        break;
      case HopsetVariant::kThreeEpsImproved:
        part = hopset_three_eps_improved(g, k, lo, eps, sub, &*o);
        break;
    }
    cert.construction = part.cert.construction + "-full";
    cert.eps_effective = part.cert.eps_effective;
    cert.alpha = std::max(cert.alpha, part.cert.alpha);
    cert.beta = std::max(cert.beta, part.cert.beta);
    classes.push_back({{"lo", lo}, {"hi", hi}, {"hops", part.hops.size()},
                       {"alpha", part.cert.alpha}, {"beta", part.cert.beta}});
    res.hops.merge(part.hops);
    for (auto row : part.radius_audit) {
      row.level = "class" + std::to_string(idx - 1) + "." + row.level;
      res.radius_audit.push_back(row);
    }
    res.per_class.push_back(part.cert);
  }
  if (res.plan.classes.empty()) {
    cert.construction = "hopset-empty";
  }
  cert.size = res.hops.size();
  cert.ledger["classes"] = classes;
  cert.ledger["d_min"] = res.plan.d_min;
  cert.ledger["d_max"] = res.plan.d_max;
  cert.ledger["lambda"] = res.plan.lambda;
  return res;
}

void write_hopset(std::ostream& out, const Hopset& h) {
  out << h.parent().n() << ' ' << h.size() << '\n';
  out.precision(17);
  for (const Hop& hop : h.hops()) out << hop.u << ' ' << hop.v << ' ' << hop.w << '\n';
}

Hopset read_hopset(std::istream& in, const Graph& g) {
  std::string line;
  auto next = [&]() {
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next()) throw std::runtime_error("hopset file: missing header");
  std::istringstream hs(line);
  long long n = -1, h = -1;
  if (!(hs >> n >> h) || n < 0 || h < 0) {
    throw std::runtime_error("hopset file: header must be 'n h'");
  }
  if (n != g.n()) throw std::runtime_error("hopset file: vertex count mismatch");
  Hopset out(g);
  for (long long i = 0; i < h; ++i) {
    if (!next()) throw std::runtime_error("hopset file: too few hops");
    std::istringstream es(line);
    Vertex u, v;
    Dist w;
    if (!(es >> u >> v >> w) || u < 0 || v < 0 || u >= n || v >= n) {
      throw std::runtime_error("hopset file: bad hop line");
    }
    out.add(u, v, w, "file");
  }
  return out;
}

}  // namespace spanhop
