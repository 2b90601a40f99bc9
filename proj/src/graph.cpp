// Copyright 2026 The spanhop Authors.
// SPDX-License-Identifier: Apache-2.0

#include "spanhop/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spanhop {

Graph::Graph(Vertex n, std::vector<Edge> edges, bool weighted)
    : n_(n), weighted_(weighted), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  for (Edge& e : edges_) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw std::invalid_argument("graph: endpoint out of range");
    }
    if (e.u == e.v) throw std::invalid_argument("graph: self-loop");
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!weighted) {
      e.w = 1;
    } else if (!(e.w > 0) || !std::isfinite(e.w)) {
      throw std::invalid_argument("graph: weights must be positive and finite");
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw std::invalid_argument("graph: duplicate edge");
    }
  }
  std::vector<size_t> deg(n + 1, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  offset_.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) offset_[v + 1] = offset_[v] + deg[v];
  arcs_.resize(2 * edges_.size());
  std::vector<size_t> pos(offset_.begin(), offset_.end() - 1);
  for (size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    arcs_[pos[e.u]++] = {e.v, e.w, static_cast<int32_t>(i)};
    arcs_[pos[e.v]++] = {e.u, e.w, static_cast<int32_t>(i)};
  }
  for (Vertex v = 0; v < n; ++v) {
    std::sort(arcs_.begin() + offset_[v], arcs_.begin() + offset_[v + 1],
              [](const Arc& a, const Arc& b) { return a.to < b.to; });
  }
}

int32_t Graph::edge_id(Vertex u, Vertex v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return -1;
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v,
                             [](const Arc& a, Vertex x) { return a.to < x; });
  if (it == nb.end() || it->to != v) return -1;
  return it->id;
}

Dist Graph::weight(Vertex u, Vertex v) const {
  int32_t id = edge_id(u, v);
  return id < 0 ? kInf : edges_[id].w;
}

Dist Graph::min_weight() const {
  Dist best = kInf;
  for (const Edge& e : edges_) best = std::min(best, e.w);
  return best;
}

Dist Graph::max_weight() const {
  Dist best = 0;
  for (const Edge& e : edges_) best = std::max(best, e.w);
  return best;
}

namespace {

// Next non-empty line with comments stripped.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw std::runtime_error("graph file: missing header");
  std::istringstream hs(line);
  long long n = -1, m = -1;
  int weighted = -1;
  if (!(hs >> n >> m >> weighted) || n < 0 || m < 0 ||
      (weighted != 0 && weighted != 1)) {
    throw std::runtime_error("graph file: header must be 'n m weighted'");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (long long i = 0; i < m; ++i) {
    if (!next_line(in, line)) throw std::runtime_error("graph file: too few edges");
    std::istringstream es(line);
    Edge e{0, 0, 1};
    if (!(es >> e.u >> e.v)) throw std::runtime_error("graph file: bad edge line");
    if (weighted && !(es >> e.w)) {
      throw std::runtime_error("graph file: missing weight");
    }
    edges.push_back(e);
  }
  return Graph(static_cast<Vertex>(n), std::move(edges), weighted == 1);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << ' ' << (g.weighted() ? 1 : 0) << '\n';
  out.precision(17);
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v;
    if (g.weighted()) out << ' ' << e.w;
    out << '\n';
  }
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph(in);
}

void save_graph(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_graph(out, g);
}

}  // namespace spanhop
