// Copyright 2026 The spanhop Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "spanhop/graph.hpp"

namespace spanhop {

struct WeightLaw {
  enum Kind { kUnit, kUniform, kExpClasses } kind = kUnit;
  int64_t lo = 1;     // uniform integer weights in [lo, hi]
  int64_t hi = 1;
  int classes = 0;    // weights 2^j with j uniform in [0, classes]
};

// A family name, numeric parameters, a weight law and a seed. Text form:
//   family:key=value,key=value,...
// e.g. "gnp:n=256,p=0.05,seed=7" or "gnp:n=128,p=0.1,w=uniform:1:10".
// Weight laws: unit, uniform:LO:HI, exp:C.
struct GenSpec {
  std::string family;
  std::map<std::string, double> params;
  WeightLaw weights;
  uint64_t seed = 0;
};

GenSpec parse_gen_spec(const std::string& text);
std::string to_string(const GenSpec& spec);

// Families: gnp(n, p), grid(rows, cols), ring-of-cliques(m, s),
// random-geometric(n, radius), path(n), star(n), barbell(bell, handle).
Graph generate(const GenSpec& spec);

Graph gnp_graph(int n, double p, uint64_t seed, WeightLaw w = {});
Graph grid_graph(int rows, int cols, uint64_t seed = 0, WeightLaw w = {});
Graph ring_of_cliques(int m, int s, uint64_t seed = 0, WeightLaw w = {});
Graph random_geometric(int n, double radius, uint64_t seed, WeightLaw w = {});
Graph path_graph(int n, uint64_t seed = 0, WeightLaw w = {});
Graph star_graph(int n, uint64_t seed = 0, WeightLaw w = {});
// Two cliques of `bell` vertices joined through a path of `handle` extra
// vertices.
Graph barbell_graph(int bell, int handle, uint64_t seed = 0, WeightLaw w = {});

}  // namespace spanhop
