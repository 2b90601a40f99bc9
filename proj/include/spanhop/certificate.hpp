// Copyright 2026 The spanhop Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "spanhop/graph.hpp"

namespace spanhop {

// The (alpha, beta) guarantee a construction claims, over the pairs whose
// graph distance lies in [pair_lo, pair_hi]. For spanners the claim is
// dist_H <= alpha * dist_G + beta; for hopsets it is
// dist^{(beta)}_{G+H} <= alpha * dist_G.
struct Certificate {
  std::string construction;
  int64_t k = 0;
  double eps = 0;
  double eps_effective = 0;
  std::optional<double> rho;
  uint64_t seed = 0;
  double alpha = 1;
  double beta = 0;
  Dist pair_lo = 0;
  Dist pair_hi = kInf;
  size_t size = 0;
  nlohmann::json ledger = nlohmann::json::object();
};

nlohmann::json to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

// One row of a radius audit: measured <= tracked <= closed_form must hold.
struct RadiusAuditRow {
  std::string level;
  Dist tracked = 0;
  Dist measured = 0;
  Dist closed_form = kInf;
  bool ok() const {
    return dist_le(measured, tracked) && dist_le(tracked, closed_form);
  }
};

nlohmann::json to_json(const std::vector<RadiusAuditRow>& rows);
bool all_ok(const std::vector<RadiusAuditRow>& rows);

}  // namespace spanhop
