// Copyright 2026 The spanhop Authors.
// SPDX-License-Identifier: Apache-2.0

#include "spanhop/generators.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "spanhop/rng.hpp"

namespace spanhop {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

Graph finish(int n, std::vector<Edge> edges, uint64_t seed, const WeightLaw& w) {
  if (w.kind == WeightLaw::kUnit) return Graph(n, std::move(edges), false);
  RngStream rng = RngStream(seed).fork("weights");
  for (Edge& e : edges) {
    if (w.kind == WeightLaw::kUniform) {
      e.w = static_cast<Dist>(rng.uniform_int(w.lo, w.hi));
    } else {
      e.w = std::ldexp(1.0, static_cast<int>(rng.uniform_int(0, w.classes)));
    }
  }
  return Graph(n, std::move(edges), true);
}

void clique(std::vector<Edge>& edges, int first, int size) {
  for (int a = first; a < first + size; ++a) {
    for (int b = a + 1; b < first + size; ++b) edges.push_back({a, b, 1});
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

WeightLaw parse_weights(const std::string& text) {
  auto parts = split(text, ':');
  WeightLaw w;
  if (parts.empty() || parts[0] == "unit") return w;
  if (parts[0] == "uniform" && parts.size() == 3) {
    w.kind = WeightLaw::kUniform;
    w.lo = std::stoll(parts[1]);
    w.hi = std::stoll(parts[2]);
    require(w.lo >= 1 && w.hi >= w.lo, "weights: need 1 <= lo <= hi");
    return w;
  }
  if (parts[0] == "exp" && parts.size() == 2) {
    w.kind = WeightLaw::kExpClasses;
    w.classes = std::stoi(parts[1]);
    require(w.classes >= 0 && w.classes <= 60, "weights: exp classes in [0, 60]");
    return w;
  }
  throw std::invalid_argument("unknown weight law '" + text + "'");
}

}  // namespace

GenSpec parse_gen_spec(const std::string& text) {
  GenSpec spec;
  auto colon = text.find(':');
  spec.family = text.substr(0, colon);
  if (colon == std::string::npos) return spec;
  for (const std::string& item : split(text.substr(colon + 1), ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    require(eq != std::string::npos, "gen spec: expected key=value, got '" + item + "'");
    std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    if (key == "w") {
      spec.weights = parse_weights(value);
    } else if (key == "seed") {
      spec.seed = std::stoull(value);
    } else {
      spec.params[key] = std::stod(value);
    }
  }
  return spec;
}

std::string to_string(const GenSpec& spec) {
  std::ostringstream out;
  out << spec.family << ':';
  for (const auto& [k, v] : spec.params) out << k << '=' << v << ',';
  switch (spec.weights.kind) {
    case WeightLaw::kUnit:
      out << "w=unit";
      break;
    case WeightLaw::kUniform:
      out << "w=uniform:" << spec.weights.lo << ':' << spec.weights.hi;
      break;
    case WeightLaw::kExpClasses:
      out << "w=exp:" << spec.weights.classes;
      break;
  }
  out << ",seed=" << spec.seed;
  return out.str();
}

Graph generate(const GenSpec& spec) {
  auto get = [&](const std::string& key) {
    auto it = spec.params.find(key);
    require(it != spec.params.end(), spec.family + ": missing parameter '" + key + "'");
    return it->second;
  };
  auto count = [&](const std::string& key) {
    double x = get(key);
    require(x >= 0 && x == std::floor(x), spec.family + ": '" + key + "' must be a count");
    return static_cast<int>(x);
  };
  const auto& f = spec.family;
  if (f == "gnp") return gnp_graph(count("n"), get("p"), spec.seed, spec.weights);
  if (f == "grid") return grid_graph(count("rows"), count("cols"), spec.seed, spec.weights);
  if (f == "ring-of-cliques") return ring_of_cliques(count("m"), count("s"), spec.seed, spec.weights);
  if (f == "random-geometric") {
    return random_geometric(count("n"), get("radius"), spec.seed, spec.weights);
  }
  if (f == "path") return path_graph(count("n"), spec.seed, spec.weights);
  if (f == "star") return star_graph(count("n"), spec.seed, spec.weights);
  if (f == "barbell") return barbell_graph(count("bell"), count("handle"), spec.seed, spec.weights);
  throw std::invalid_argument("unknown graph family '" + f + "'");
}

Graph gnp_graph(int n, double p, uint64_t seed, WeightLaw w) {
  require(n >= 0, "gnp: n >= 0");
  require(p >= 0 && p <= 1, "gnp: need 0 <= p <= 1");
  RngStream rng = RngStream(seed).fork("gnp");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.push_back({u, v, 1});
    }
  }
  return finish(n, std::move(edges), seed, w);
}

Graph grid_graph(int rows, int cols, uint64_t seed, WeightLaw w) {
  require(rows >= 0 && cols >= 0, "grid: sizes must be non-negative");
  std::vector<Edge> edges;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1), 1});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c), 1});
    }
  }
  return finish(rows * cols, std::move(edges), seed, w);
}

Graph ring_of_cliques(int m, int s, uint64_t seed, WeightLaw w) {
  require(m >= 1 && s >= 1, "ring-of-cliques: m, s >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) clique(edges, i * s, s);
  if (m >= 2) {
    for (int i = 0; i < m; ++i) {
      int a = i * s + s - 1, b = ((i + 1) % m) * s;
      if (m == 2 && i == 1 && s == 1) break;  // would repeat the first link
      edges.push_back({a, b, 1});
    }
  }
  return finish(m * s, std::move(edges), seed, w);
}

Graph random_geometric(int n, double radius, uint64_t seed, WeightLaw w) {
  require(n >= 0 && radius >= 0, "random-geometric: bad parameters");
  RngStream rng = RngStream(seed).fork("rgg");
  std::vector<double> x(n), y(n);
  for (int i = 0; i < n; ++i) {
    x[i] = rng.uniform();
    y[i] = rng.uniform();
  }
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (std::hypot(x[u] - x[v], y[u] - y[v]) <= radius) edges.push_back({u, v, 1});
    }
  }
  return finish(n, std::move(edges), seed, w);
}

Graph path_graph(int n, uint64_t seed, WeightLaw w) {
  require(n >= 0, "path: n >= 0");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1});
  return finish(n, std::move(edges), seed, w);
}

Graph star_graph(int n, uint64_t seed, WeightLaw w) {
  require(n >= 0, "star: n >= 0");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({0, v, 1});
  return finish(n, std::move(edges), seed, w);
}

Graph barbell_graph(int bell, int handle, uint64_t seed, WeightLaw w) {
  require(bell >= 1 && handle >= 0, "barbell: bell >= 1, handle >= 0");
  std::vector<Edge> edges;
  clique(edges, 0, bell);
  clique(edges, bell, bell);
  int prev = bell - 1;
  for (int i = 0; i < handle; ++i) {
    int h = 2 * bell + i;
    edges.push_back({prev, h, 1});
    prev = h;
  }
  edges.push_back({prev, bell, 1});
  return finish(2 * bell + handle, std::move(edges), seed, w);
}

}  // namespace spanhop
