// Copyright 2026 The spanhop Authors.
// SPDX-License-Identifier: Apache-2.0

#include "spanhop/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>

#include "spanhop/clustering.hpp"
#include "spanhop/spanners.hpp"

namespace spanhop {

namespace {

class Accumulator {
 public:
  Accumulator(StretchReport& r) : r_(r) {}
  void add(Vertex u, Vertex v, Dist dg, Dist dh, double residual, bool bad) {
    ++r_.pairs_checked;
    int b = static_cast<int>(std::floor(std::log2(dg) + 1e-12));
    auto [it, fresh] = buckets_.try_emplace(b);
    BucketStat& s = it->second;
    if (fresh) {
      s.bucket = b;
      s.worst_residual = residual;
    }
    ++s.pairs;
    s.worst_residual = std::max(s.worst_residual, residual);
    if (bad) {
      ++r_.violation_count;
      if (r_.violations.size() < StretchReport::kMaxListed) {
        r_.violations.push_back({u, v, dg, dh});
      }
    }
  }
  void finish() {
    for (auto& [b, s] : buckets_) r_.buckets.push_back(s);
  }

 private:
  StretchReport& r_;
  std::map<int, BucketStat> buckets_;
};

bool in_range(Dist x, Dist lo, Dist hi) {
  return x != kInf && x > 0 && dist_le(lo, x) && dist_le(x, hi);
}

}  // namespace

StretchReport certify_spanner(const Graph& g, const EdgeSubgraph& s, double alpha,
                              double beta, Dist lo, Dist hi,
                              const DistanceMatrix* dg) {
  StretchReport r;
  r.alpha = alpha;
  r.beta = beta;
  r.pair_lo = lo;
  r.pair_hi = hi;
  Graph h = s.to_graph();
  Accumulator acc(r);
  for (Vertex u = 0; u < g.n(); ++u) {
    std::vector<Dist> gu = dg ? (*dg)[u] : shortest_path_tree(g, u).dist;
    std::vector<Dist> hu = shortest_path_tree(h, u).dist;
    for (Vertex v = u + 1; v < g.n(); ++v) {
      if (!in_range(gu[v], lo, hi)) continue;
      double residual = (hu[v] - beta) / gu[v];
      acc.add(u, v, gu[v], hu[v], residual, !dist_le(hu[v], alpha * gu[v] + beta));
    }
  }
  acc.finish();
  r.size_ledger["edges"] = s.size();
  return r;
}

StretchReport certify_spanner(const Graph& g, const EdgeSubgraph& s,
                              const Certificate& cert, const DistanceMatrix* dg) {
  StretchReport r = certify_spanner(g, s, cert.alpha, cert.beta, cert.pair_lo,
                                    cert.pair_hi, dg);
  r.construction = cert.construction;
  r.size_ledger = cert.ledger;
  r.size_ledger["edges"] = s.size();
  return r;
}

StretchReport certify_hopset(const Graph& g, const Hopset& hs, double alpha,
                             int64_t beta, Dist lo, Dist hi,
                             const DistanceMatrix* dg) {
  StretchReport r;
  r.alpha = alpha;
  r.beta = static_cast<double>(beta);
  r.pair_lo = lo;
  r.pair_hi = hi;
  HopGraph hg(g, &hs);
  Accumulator acc(r);
  for (Vertex u = 0; u < g.n(); ++u) {
    std::vector<Dist> gu = dg ? (*dg)[u] : shortest_path_tree(g, u).dist;
    std::vector<Dist> hu = hg.beta_limited(u, beta).d;
    for (Vertex v = u + 1; v < g.n(); ++v) {
      if (!in_range(gu[v], lo, hi)) continue;
      // A walk shorter than the metric means a hop weight is wrong.
      bool bad = !dist_le(hu[v], alpha * gu[v]) || dist_lt(hu[v], gu[v]);
      acc.add(u, v, gu[v], hu[v], hu[v] / gu[v], bad);
    }
  }
  acc.finish();
  r.size_ledger["hops"] = hs.size();
  return r;
}

StretchReport certify_hopset(const Graph& g, const Hopset& h,
                             const Certificate& cert, const DistanceMatrix* dg) {
  StretchReport r = certify_hopset(g, h, cert.alpha,
                                   static_cast<int64_t>(floor_robust(cert.beta)),
                                   cert.pair_lo, cert.pair_hi, dg);
  r.construction = cert.construction;
  r.size_ledger = cert.ledger;
  r.size_ledger["hops"] = h.size();
  return r;
}

nlohmann::json to_json(const StretchReport& r) {
  auto dj = [](Dist d) { return d == kInf ? nlohmann::json("inf") : nlohmann::json(d); };
  nlohmann::json j;
  j["construction"] = r.construction;
  j["alpha"] = r.alpha;
  j["beta"] = r.beta;
  j["pair_lo"] = dj(r.pair_lo);
  j["pair_hi"] = dj(r.pair_hi);
  j["pairs_checked"] = r.pairs_checked;
  j["violation_count"] = r.violation_count;
  j["ok"] = r.ok();
  nlohmann::json b = nlohmann::json::array();
  for (const auto& s : r.buckets) {
    b.push_back({{"bucket_log2", s.bucket}, {"pairs", s.pairs},
                 {"worst_residual", dj(s.worst_residual)}});
  }
  j["buckets"] = b;
  nlohmann::json v = nlohmann::json::array();
  for (const auto& x : r.violations) {
    v.push_back({{"u", x.u}, {"v", x.v}, {"dist_g", dj(x.dist_g)}, {"dist_h", dj(x.dist_h)}});
  }
  j["violations"] = v;
  j["size_ledger"] = r.size_ledger;
  j["radius_audit"] = r.radius_audit;
  return j;
}

size_t exact_hop_count(const Hopset& h, DistanceOracle& oracle) {
  size_t ok = 0;
  for (const Hop& hop : h.hops()) ok += dist_eq(oracle.dist(hop.u, hop.v), hop.w) ? 1 : 0;
  return ok;
}

const SlackTable& default_slack() {
  static const SlackTable table;
  return table;
}

double mean_of(const std::vector<double>& xs) {
  if (xs.empty()) return 0;
  double s = 0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double percentile_of(std::vector<double> xs, double q) {
  if (xs.empty()) return 0;
  std::sort(xs.begin(), xs.end());
  size_t rank = static_cast<size_t>(std::ceil(q * static_cast<double>(xs.size())));
  rank = std::clamp<size_t>(rank, 1, xs.size());
  return xs[rank - 1];
}

namespace {

nlohmann::json check(const std::string& name, double value, double bound) {
  return {{"name", name}, {"value", value}, {"bound", bound}, {"ok", value <= bound + 1e-9}};
}

}  // namespace

nlohmann::json audit_expectations(const Graph& g, const std::string& construction,
                                  const nlohmann::json& params,
                                  const std::vector<uint64_t>& seeds,
                                  const SlackTable& slack) {
  nlohmann::json out;
  out["construction"] = construction;
  out["params"] = params;
  out["seeds"] = seeds.size();
  nlohmann::json checks = nlohmann::json::array();
  const double n = g.n();
  if (seeds.empty()) {
    out["checks"] = checks;
    return out;
  }
  if (construction == "tbs") {
    const int k = params.at("k").get<int>();
    const int t = params.at("t").get<int>();
    std::vector<std::vector<double>> sizes(t + 1);
    std::vector<double> edges;
    for (uint64_t s : seeds) {
      RngStream rng(s);
      auto bs = truncated_baswana_sen(g, k, t, rng);
      for (int i = 0; i <= t; ++i) sizes[i].push_back(static_cast<double>(bs.level_sizes[i]));
      edges.push_back(static_cast<double>(bs.h.size()));
    }
    for (int i = 1; i <= t; ++i) {
      double target = std::pow(n, 1 - static_cast<double>(i) / k);
      double m = mean_of(sizes[i]);
      if (target >= 4) {
        checks.push_back(check("mean|C_" + std::to_string(i) + "|/target", m / target,
                               slack.cluster_factor));
        checks.push_back(check("target/mean|C_" + std::to_string(i) + "|",
                               m > 0 ? target / m : kInf, slack.cluster_factor));
      }
    }
    checks.push_back(check("mean|H|", mean_of(edges),
                           6.0 * t * std::pow(n, 1 + 1.0 / k)));
  } else if (construction == "spanner3eps") {
    const int64_t k = params.at("k").get<int64_t>();
    const double eps = params.at("eps").get<double>();
    std::optional<double> rho;
    if (params.contains("rho") && !params["rho"].is_null()) rho = params["rho"].get<double>();
    DistanceOracle oracle(g);
    std::map<int, std::vector<double>> normalized;
    std::vector<double> finals;
    for (uint64_t s : seeds) {
      RngStream rng(s);
      auto res = spanner_three_eps(g, k, eps, rng, rho, &oracle);
      for (const auto& ph : res.phases) {
        double total = 0;
        for (size_t c : ph.lost_counts) total += static_cast<double>(c);
        double per = ph.clusters_before ? total / ph.clusters_before : 0;
        normalized[ph.phase].push_back(ph.p * per);
      }
      finals.push_back(static_cast<double>(res.levels.back().size()));
    }
    for (auto& [phase, xs] : normalized) {
      checks.push_back(check("phase" + std::to_string(phase) + ".mean(p*paths/cluster)",
                             mean_of(xs), slack.mean_factor));
    }
    if (rho) {
      checks.push_back(check("p" + std::to_string(int(slack.percentile * 100)) + "|C_T'|",
                             percentile_of(finals, slack.percentile),
                             slack.whp_factor * std::log2(n)));
    }
  } else {
    throw std::invalid_argument("audit_expectations: unsupported construction " +
                                construction);
  }
  bool ok = true;
  for (const auto& c : checks) ok = ok && c["ok"].get<bool>();
  out["checks"] = checks;
  out["ok"] = ok;
  return out;
}

}  // namespace spanhop
