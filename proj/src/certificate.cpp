// Copyright 2026 The spanhop Authors.
// SPDX-License-Identifier: Apache-2.0

#include "spanhop/certificate.hpp"

namespace spanhop {

namespace {

nlohmann::json dist_json(Dist d) {
  if (d == kInf) return "inf";
  return d;
}

Dist dist_from(const nlohmann::json& j) {
  if (j.is_string()) return kInf;
  return j.get<Dist>();
}

}  // namespace

nlohmann::json to_json(const Certificate& c) {
  nlohmann::json j;
  j["construction"] = c.construction;
  j["k"] = c.k;
  j["eps"] = c.eps;
  j["eps_effective"] = c.eps_effective;
  j["rho"] = c.rho ? nlohmann::json(*c.rho) : nlohmann::json(nullptr);
  j["seed"] = c.seed;
  j["alpha"] = c.alpha;
  j["beta"] = c.beta;
  j["pair_lo"] = dist_json(c.pair_lo);
  j["pair_hi"] = dist_json(c.pair_hi);
  j["size"] = c.size;
  j["ledger"] = c.ledger;
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
  Certificate c;
  c.construction = j.at("construction").get<std::string>();
  c.k = j.at("k").get<int64_t>();
  c.eps = j.at("eps").get<double>();
  c.eps_effective = j.at("eps_effective").get<double>();
  if (!j.at("rho").is_null()) c.rho = j.at("rho").get<double>();
  c.seed = j.at("seed").get<uint64_t>();
  c.alpha = j.at("alpha").get<double>();
  c.beta = j.at("beta").get<double>();
  c.pair_lo = dist_from(j.at("pair_lo"));
  c.pair_hi = dist_from(j.at("pair_hi"));
  c.size = j.at("size").get<size_t>();
  c.ledger = j.value("ledger", nlohmann::json::object());
  return c;
}

nlohmann::json to_json(const std::vector<RadiusAuditRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"level", r.level},
                   {"tracked", dist_json(r.tracked)},
                   {"measured", dist_json(r.measured)},
                   {"closed_form", dist_json(r.closed_form)},
                   {"ok", r.ok()}});
  }
  return arr;
}

bool all_ok(const std::vector<RadiusAuditRow>& rows) {
  for (const auto& r : rows) {
    if (!r.ok()) return false;
  }
  return true;
}

}  // namespace spanhop
