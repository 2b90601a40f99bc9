// Copyright 2026 The spanhop Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string_view>

namespace spanhop {

// Counter-based generator: the i-th draw is splitmix64(seed, i), so a run is
// fully determined by the seed and the order of draws.
class RngStream {
 public:
  explicit RngStream(uint64_t seed = 0) : seed_(seed) {}

  uint64_t seed() const { return seed_; }
  uint64_t counter() const { return counter_; }

  uint64_t next() { return mix(seed_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) {
    if (p >= 1) return true;
    if (p <= 0) return false;
    return uniform() < p;
  }

  // Uniform integer in [lo, hi].
  int64_t uniform_int(int64_t lo, int64_t hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<int64_t>(next());
    return lo + static_cast<int64_t>(next() % span);
  }

  // Independent stream keyed by a label; does not advance this stream.
  RngStream fork(std::string_view label) const {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : label) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
    return RngStream(mix(seed_ ^ mix(h)));
  }
  RngStream fork(uint64_t label) const {
    return RngStream(mix(seed_ ^ mix(label + 0x632be59bd9b4e019ULL)));
  }

  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  uint64_t seed_;
  uint64_t counter_ = 0;
};

}  // namespace spanhop
