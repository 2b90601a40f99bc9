// Copyright 2026 The spanhop Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "spanhop/certificate.hpp"
#include "spanhop/distance.hpp"
#include "spanhop/subgraph.hpp"

namespace spanhop {

struct Violation {
  Vertex u;
  Vertex v;
  Dist dist_g;
  Dist dist_h;
};

// Pairs grouped by floor(log2 dist_G).
struct BucketStat {
  int bucket = 0;
  size_t pairs = 0;
  double worst_residual = 0;
};

struct StretchReport {
  std::string construction;
  double alpha = 1;
  double beta = 0;
  Dist pair_lo = 0;
  Dist pair_hi = kInf;
  size_t pairs_checked = 0;
  size_t violation_count = 0;
  std::vector<BucketStat> buckets;
  std::vector<Violation> violations;  // at most kMaxListed
  nlohmann::json size_ledger = nlohmann::json::object();
  nlohmann::json radius_audit = nlohmann::json::array();

  static constexpr size_t kMaxListed = 1000;
  bool ok() const { return violation_count == 0; }
};

// Exhaustive check of dist_S(u,v) <= alpha dist_G(u,v) + beta over connected
// pairs with dist_G in [lo, hi]. The residual is (dist_S - beta) / dist_G.
StretchReport certify_spanner(const Graph& g, const EdgeSubgraph& s,
                              double alpha, double beta, Dist lo = 0,
                              Dist hi = kInf, const DistanceMatrix* dg = nullptr);
StretchReport certify_spanner(const Graph& g, const EdgeSubgraph& s,
                              const Certificate& cert,
                              const DistanceMatrix* dg = nullptr);

// Exhaustive check of dist^{(beta)}_{G+H}(u,v) <= alpha dist_G(u,v). The
// residual is the measured stretch.
StretchReport certify_hopset(const Graph& g, const Hopset& h, double alpha,
                             int64_t beta, Dist lo = 0, Dist hi = kInf,
                             const DistanceMatrix* dg = nullptr);
StretchReport certify_hopset(const Graph& g, const Hopset& h,
                             const Certificate& cert,
                             const DistanceMatrix* dg = nullptr);

nlohmann::json to_json(const StretchReport& r);

// Every hop weight equals the graph distance; returns the number that do.
size_t exact_hop_count(const Hopset& h, DistanceOracle& oracle);

// Slack constants for expectation audits, kept in one place.
struct SlackTable {
  double mean_factor = 2.0;     // empirical mean may exceed its bound by this
  double cluster_factor = 3.0;  // cluster-count decay tolerance
  double percentile = 0.99;     // w.h.p. claims are read at this percentile
  double whp_factor = 4.0;      // constant in front of w.h.p. bounds
};
const SlackTable& default_slack();

double mean_of(const std::vector<double>& xs);
// Nearest-rank percentile, q in (0, 1].
double percentile_of(std::vector<double> xs, double q);

// Runs a construction across seeds and compares empirical means and
// percentiles against their declared bounds. Supported constructions:
// "tbs" (params k, t) and "spanner3eps" (params k, eps, optional rho).
nlohmann::json audit_expectations(const Graph& g, const std::string& construction,
                                  const nlohmann::json& params,
                                  const std::vector<uint64_t>& seeds,
                                  const SlackTable& slack = default_slack());

}  // namespace spanhop
