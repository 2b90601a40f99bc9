// Copyright 2026 The spanhop Authors.
// SPDX-License-Identifier: Apache-2.0

#include "spanhop/exec_models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "oracle_ref.hpp"

namespace spanhop {

using detail::OracleRef;

namespace {

int64_t layers(Dist depth, Vertex n) {
  return depth == kInf ? n : std::min<int64_t>(floor_robust(depth), n);
}

// Number of waves of a step whose depth-limited ball contains each vertex.
std::vector<int> wave_counts(DistanceOracle& o, const WaveStep& w) {
  std::vector<int> m(o.graph().n(), 0);
  for (Vertex s : w.sources) {
    const auto& row = o.tree(s).dist;
    for (Vertex v = 0; v < o.graph().n(); ++v) {
      if (dist_le(row[v], w.depth)) ++m[v];
    }
  }
  return m;
}

RoundRun simulate_rounds(const Graph& g, int64_t k, double eps, double rho,
                         RngStream& rng, DistanceOracle* oracle, bool congest) {
  OracleRef o(g, oracle);
  RoundRun run{spanner_three_eps(g, k, eps, rng, rho, &*o), {}};
  RoundLedger& led = run.ledger;
  led.model = congest ? "CONGEST" : "LOCAL";
  const int phases = run.spanner.schedule.T;
  led.per_vertex_traversals.assign(phases, std::vector<int>(g.n(), 0));
  led.max_traversals.assign(phases, 0);
  led.phase_rounds.assign(phases + 1, 0);
  led.per_edge_congestion = g.m() > 0 ? 1 : 0;
  for (const WaveStep& w : run.spanner.waves) {
    int64_t r = layers(w.depth, g.n());
    if (w.separate && !w.sources.empty()) {
      std::vector<int> m = wave_counts(*o, w);
      int worst = *std::max_element(m.begin(), m.end());
      if (w.step == "lost") {
        led.per_vertex_traversals[w.phase - 1] = m;
        led.max_traversals[w.phase - 1] = worst;
      }
      led.per_edge_congestion = std::max<int64_t>(led.per_edge_congestion, worst);
      // Waves are serialized in cluster-id order at a shared vertex.
      if (congest && worst > 1) r += worst - 1;
    }
    led.phase_rounds[std::min(w.phase, phases + 1) - 1] += r;
    led.rounds += r;
  }
  return run;
}

// Layer-per-pass BFS over an edge stream for a group of waves.
class StreamBfs {
 public:
  StreamBfs(const Graph& g, const std::vector<Edge>& order)
      : n_(g.n()), order_(order) {}

  struct Outcome {
    int64_t passes = 0;
    int64_t state_items = 0;
    std::vector<std::vector<int>> depth;  // per wave, -1 if unreached
  };

  // Separate waves keep their own state; otherwise one multi-source wave.
  Outcome run(const std::vector<Vertex>& sources, int64_t max_layers,
              bool separate) const {
    Outcome out;
    if (sources.empty()) return out;
    const size_t waves = separate ? sources.size() : 1;
    out.depth.assign(waves, std::vector<int>(n_, -1));
    for (size_t i = 0; i < sources.size(); ++i) {
      out.depth[separate ? i : 0][sources[i]] = 0;
    }
    for (int64_t layer = 0; layer < max_layers; ++layer) {
      ++out.passes;
      bool grew = false;
      for (const Edge& e : order_) {
        for (size_t w = 0; w < waves; ++w) {
          auto& d = out.depth[w];
          if (d[e.u] == layer && d[e.v] < 0) {
            d[e.v] = static_cast<int>(layer + 1);
            grew = true;
          } else if (d[e.v] == layer && d[e.u] < 0) {
            d[e.u] = static_cast<int>(layer + 1);
            grew = true;
          }
        }
      }
      if (!grew) break;
    }
    for (const auto& d : out.depth) {
      out.state_items += std::count_if(d.begin(), d.end(), [](int x) { return x >= 0; });
    }
    return out;
  }

 private:
  Vertex n_;
  const std::vector<Edge>& order_;
};

}  // namespace

RoundRun simulate_local(const Graph& g, int64_t k, double eps, double rho,
                        RngStream& rng, DistanceOracle* oracle) {
  return simulate_rounds(g, k, eps, rho, rng, oracle, false);
}

RoundRun simulate_congest(const Graph& g, int64_t k, double eps, double rho,
                          RngStream& rng, DistanceOracle* oracle) {
  return simulate_rounds(g, k, eps, rho, rng, oracle, true);
}

StreamRun simulate_stream(const Graph& g, int64_t k, double eps, double rho,
                          StreamMode mode, RngStream& rng, DistanceOracle* oracle) {
  OracleRef o(g, oracle);
  RngStream order_rng = rng.fork("stream-order");
  RngStream sub_rng = rng.fork("stream-substeps");
  StreamRun run{spanner_three_eps(g, k, eps, rng, rho, &*o), {}};
  StreamLedger& led = run.ledger;
  led.mode = mode == StreamMode::kHighSpace ? "stream-high" : "stream-low";

  std::vector<Edge> order = g.edges();
  for (size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[order_rng.uniform_int(0, static_cast<int64_t>(i) - 1)]);
  }
  StreamBfs bfs(g, order);
  const int64_t retained = static_cast<int64_t>(run.spanner.h.size()) + g.n();
  const int phases = run.spanner.schedule.T;
  led.phase_passes.assign(phases + 1, 0);

  auto account = [&](const WaveStep& w, const std::vector<Vertex>& sources) {
    auto out = bfs.run(sources, layers(w.depth, g.n()), w.separate);
    led.passes += out.passes;
    led.phase_passes[std::min(w.phase, phases + 1) - 1] += out.passes;
    led.peak_space_items = std::max(led.peak_space_items, retained + out.state_items);
    if (w.separate) {
      for (size_t i = 0; i < sources.size(); ++i) {
        const auto& row = o->tree(sources[i]).dist;
        for (Vertex v = 0; v < g.n(); ++v) {
          bool streamed = out.depth[i][v] >= 0;
          if (streamed != dist_le(row[v], w.depth)) ++led.ball_mismatches;
        }
      }
    }
  };

  const double log_n = std::log2(std::max<double>(2, g.n()));
  for (const WaveStep& w : run.spanner.waves) {
    if (mode == StreamMode::kHighSpace || w.step != "lost" || w.sources.empty()) {
      account(w, w.sources);
      continue;
    }
    const double p = run.spanner.schedule.probs[w.phase - 1];
    const int64_t tau = p > 0 ? ceil_robust(log_n / p) : 1;
    std::vector<Vertex> remaining = w.sources;
    for (int64_t s = 0; s < tau && !remaining.empty(); ++s) {
      std::vector<Vertex> batch, rest;
      for (Vertex c : remaining) (sub_rng.bernoulli(p) ? batch : rest).push_back(c);
      if (!batch.empty()) account(w, batch);
      remaining = std::move(rest);
    }
    if (!remaining.empty()) account(w, remaining);
  }
  return run;
}

}  // namespace spanhop
