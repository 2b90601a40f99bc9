// Copyright 2026 The spanhop Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <stdexcept>

#include "spanhop/distance.hpp"

namespace spanhop::detail {

// Uses the caller's oracle when given, otherwise owns a fresh one.
class OracleRef {
 public:
  OracleRef(const Graph& g, DistanceOracle* external) {
    if (external) {
      if (&external->graph() != &g) {
        throw std::invalid_argument("oracle was built for a different graph");
      }
      o_ = external;
    } else {
      own_ = std::make_unique<DistanceOracle>(g);
      o_ = own_.get();
    }
  }
  DistanceOracle& operator*() { return *o_; }
  DistanceOracle* operator->() { return o_; }

 private:
  std::unique_ptr<DistanceOracle> own_;
  DistanceOracle* o_;
};

}  // namespace spanhop::detail
