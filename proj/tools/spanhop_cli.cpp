// Copyright 2026 The spanhop Authors.
// SPDX-License-Identifier: Apache-2.0

// Command-line driver: build, certify and sweep.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "spanhop/exec_models.hpp"
#include "spanhop/generators.hpp"
#include "spanhop/hopsets.hpp"
#include "spanhop/spanners.hpp"
#include "spanhop/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace spanhop;

namespace {

struct RunConfig {
  std::string construction;
  int64_t k = 3;
  double eps = 1;
  std::optional<double> rho;
  uint64_t seed = 1;
  std::string gen;
  std::string input;
  std::string out;
  std::string model = "centralized";
  std::string classes = "auto";
  int d = 1;
};

json to_json(const RunConfig& c) {
  return {{"construction", c.construction}, {"k", c.k}, {"eps", c.eps},
          {"rho", c.rho ? json(*c.rho) : json(nullptr)}, {"seed", c.seed},
          {"gen", c.gen}, {"input", c.input}, {"model", c.model},
          {"classes", c.classes}, {"d", c.d}};
}

Graph load_input(const RunConfig& c) {
  if (!c.gen.empty() && !c.input.empty()) {
    throw std::invalid_argument("give either --gen or --input, not both");
  }
  if (!c.gen.empty()) return generate(parse_gen_spec(c.gen));
  if (!c.input.empty()) return load_graph(c.input);
  throw std::invalid_argument("one of --gen or --input is required");
}

bool is_hopset(const std::string& name) { return name.rfind("hopset", 0) == 0; }

// Outcome of one build: exactly one of spanner/hopset is set.
struct Built {
  std::optional<EdgeSubgraph> spanner;
  std::optional<Hopset> hopset;
  Certificate cert;
  json radius_audit = json::array();
  json exec = nullptr;
};

std::optional<DistanceClassPlan> class_plan(const RunConfig& c) {
  if (c.classes == "auto") return std::nullopt;
  std::vector<Dist> ds;
  std::stringstream in(c.classes);
  std::string item;
  while (std::getline(in, item, ',')) ds.push_back(std::stod(item));
  return explicit_class_plan(ds);
}

Built build(const Graph& g, const RunConfig& c, DistanceOracle& oracle) {
  RngStream rng(c.seed);
  Built b;
  const std::string& name = c.construction;
  auto take = [&](SpannerResult r) {
    b.spanner = std::move(r.h);
    b.cert = r.cert;
    b.radius_audit = to_json(r.radius_audit);
  };
  if (c.model != "centralized" && name != "spanner3eps") {
    throw std::invalid_argument("--model other than centralized needs spanner3eps");
  }
  if (name == "spanner3eps" && c.model != "centralized") {
    if (!c.rho) throw std::invalid_argument("--model " + c.model + " needs --rho");
    if (c.model == "local" || c.model == "congest") {
      RoundRun run = c.model == "local" ? simulate_local(g, c.k, c.eps, *c.rho, rng, &oracle)
                                        : simulate_congest(g, c.k, c.eps, *c.rho, rng, &oracle);
      take(std::move(run.spanner));
      b.exec = {{"model", run.ledger.model}, {"rounds", run.ledger.rounds},
                {"per_edge_congestion", run.ledger.per_edge_congestion},
                {"max_traversals", run.ledger.max_traversals},
                {"phase_rounds", run.ledger.phase_rounds}};
    } else if (c.model == "stream-high" || c.model == "stream-low") {
      StreamRun run = simulate_stream(
          g, c.k, c.eps, *c.rho,
          c.model == "stream-high" ? StreamMode::kHighSpace : StreamMode::kLowSpace, rng,
          &oracle);
      take(std::move(run.spanner));
      b.exec = {{"model", run.ledger.mode}, {"passes", run.ledger.passes},
                {"peak_space_items", run.ledger.peak_space_items},
                {"phase_passes", run.ledger.phase_passes}};
    } else {
      throw std::invalid_argument("unknown --model " + c.model);
    }
  } else if (name == "spanner3eps") {
    take(spanner_three_eps(g, c.k, c.eps, rng, c.rho, &oracle));
  } else if (name == "spanner3eps-improved") {
    take(spanner_three_eps_improved(g, c.k, c.eps, rng, &oracle));
  } else if (name == "spanner-short") {
    take(spanner_short_dist(g, static_cast<int>(c.k), c.d, rng, &oracle));
  } else if (name == "spanner-long") {
    take(spanner_long_dist(g, c.k, c.d, c.eps, rng, &oracle));
  } else if (name == "spanner-alpha-beta") {
    take(assemble_alpha_beta_spanner(g, c.k, c.eps, rng, &oracle));
  } else if (is_hopset(name)) {
    HopsetVariant v;
    if (name == "hopset-small-hops") {
      v = HopsetVariant::kSmallHops;
    } else if (name == "hopset-small-stretch") {
      v = HopsetVariant::kSmallStretch;
    } else if (name == "hopset3eps") {
      v = HopsetVariant::kThreeEps;
    } else if (name == "hopset3eps-improved") {
      v = HopsetVariant::kThreeEpsImproved;
    } else {
      throw std::invalid_argument("unknown construction " + name);
    }
    auto plan = class_plan(c);
    FullHopsetResult r = build_full_hopset(g, c.k, c.eps, v, rng, c.rho, &oracle,
                                           plan ? &*plan : nullptr);
    b.hopset = std::move(r.hops);
    b.cert = r.cert;
    b.radius_audit = to_json(r.radius_audit);
  } else {
    throw std::invalid_argument("unknown construction " + name);
  }
  b.cert.seed = c.seed;
  return b;
}

StretchReport certify_built(const Graph& g, const Built& b, const DistanceMatrix* dg) {
  StretchReport r = b.spanner ? certify_spanner(g, *b.spanner, b.cert, dg)
                              : certify_hopset(g, *b.hopset, b.cert, dg);
  r.radius_audit = b.radius_audit;
  return r;
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

int cmd_build(const RunConfig& c) {
  Graph g = load_input(c);
  DistanceOracle oracle(g);
  Built b = build(g, c, oracle);
  fs::create_directories(c.out);
  save_graph((fs::path(c.out) / "graph.txt").string(), g);
  std::string artifact;
  if (b.spanner) {
    artifact = "spanner.txt";
    save_graph((fs::path(c.out) / artifact).string(), b.spanner->to_graph());
  } else {
    artifact = "hopset.txt";
    std::ofstream out(fs::path(c.out) / artifact);
    write_hopset(out, *b.hopset);
  }
  json cert = to_json(b.cert);
  cert["artifact"] = artifact;
  cert["radius_audit"] = b.radius_audit;
  cert["radius_audit_ok"] = std::all_of(b.radius_audit.begin(), b.radius_audit.end(),
                                        [](const json& r) { return r["ok"].get<bool>(); });
  cert["exec"] = b.exec;
  cert["config"] = to_json(c);
  write_json((fs::path(c.out) / "certificate.json").string(), cert);
  std::cout << b.cert.construction << ": " << b.cert.size << (b.spanner ? " edges" : " hops")
            << ", certificate (" << b.cert.alpha << ", " << b.cert.beta << ") -> " << c.out
            << '\n';
  return 0;
}

struct CertifyArgs {
  std::string graph;
  std::string artifact;
  std::string cert;
  std::string out;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::string kind;
};

int cmd_certify(const CertifyArgs& a) {
  Graph g = load_graph(a.graph);
  Certificate cert;
  json sidecar = json::object();
  if (!a.cert.empty()) {
    std::ifstream in(a.cert);
    if (!in) throw std::runtime_error("cannot open " + a.cert);
    sidecar = json::parse(in);
    cert = certificate_from_json(sidecar);
  } else {
    cert.construction = a.kind.empty() ? "spanner" : a.kind;
  }
  if (a.alpha) cert.alpha = *a.alpha;
  if (a.beta) cert.beta = *a.beta;
  std::string artifact = a.artifact;
  if (artifact.empty() && sidecar.contains("artifact")) {
    artifact = (fs::path(a.cert).parent_path() / sidecar["artifact"].get<std::string>()).string();
  }
  if (artifact.empty()) throw std::invalid_argument("--artifact is required");

  StretchReport r;
  if (is_hopset(cert.construction) || a.kind == "hopset") {
    std::ifstream in(artifact);
    if (!in) throw std::runtime_error("cannot open " + artifact);
    Hopset h = read_hopset(in, g);
    r = certify_hopset(g, h, cert);
  } else {
    Graph sg = load_graph(artifact);
    if (sg.n() != g.n()) throw std::runtime_error("artifact vertex count does not match graph");
    EdgeSubgraph s(g);
    for (const Edge& e : sg.edges()) {
      if (g.edge_id(e.u, e.v) < 0) {
        throw std::runtime_error("artifact edge not in graph: " + std::to_string(e.u) + " " +
                                 std::to_string(e.v));
      }
      s.add_edge(e.u, e.v, "file");
    }
    r = certify_spanner(g, s, cert);
  }
  if (sidecar.contains("radius_audit")) r.radius_audit = sidecar["radius_audit"];
  json report = to_json(r);
  if (a.out.empty()) {
    std::cout << report.dump(2) << '\n';
  } else {
    write_json(a.out, report);
    std::cout << (r.ok() ? "certified" : "VIOLATIONS") << ": " << r.pairs_checked
              << " pairs, " << r.violation_count << " violations\n";
  }
  return r.ok() ? 0 : 1;
}

std::vector<uint64_t> parse_seeds(const std::string& text) {
  std::vector<uint64_t> seeds;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto dash = item.find('-');
    if (dash == std::string::npos) {
      seeds.push_back(std::stoull(item));
    } else {
      uint64_t lo = std::stoull(item.substr(0, dash)), hi = std::stoull(item.substr(dash + 1));
      for (uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    }
  }
  return seeds;
}

int cmd_sweep(RunConfig c, const std::string& seeds_text, bool certify, bool audit) {
  std::vector<uint64_t> seeds = parse_seeds(seeds_text);
  Graph g = load_input(c);
  DistanceOracle oracle(g);
  if (audit) {
    json params = {{"k", c.k}, {"eps", c.eps}, {"t", c.d}};
    if (c.rho) params["rho"] = *c.rho;
    json summary = audit_expectations(g, c.construction, params, seeds);
    if (c.out.empty()) {
      std::cout << summary.dump(2) << '\n';
    } else {
      write_json(c.out, summary);
    }
    return summary.value("ok", true) ? 0 : 1;
  }
  std::optional<DistanceMatrix> dg;
  if (certify && !seeds.empty()) dg = exact_apsp(g);
  json rows = json::array();
  for (uint64_t s : seeds) {
    c.seed = s;
    Built b = build(g, c, oracle);
    json row = {{"construction", b.cert.construction}, {"k", c.k}, {"eps", c.eps},
                {"rho", c.rho ? json(*c.rho) : json(nullptr)}, {"seed", s},
                {"size", b.cert.size}, {"alpha", b.cert.alpha}, {"beta", b.cert.beta},
                {"alpha_beta", b.cert.alpha * b.cert.beta}};
    if (certify) {
      StretchReport r = certify_built(g, b, &*dg);
      double worst = 0;
      for (const auto& bk : r.buckets) worst = std::max(worst, bk.worst_residual);
      row["worst_residual"] = worst;
      row["violations"] = r.violation_count;
    }
    if (!b.exec.is_null()) {
      for (const char* key : {"rounds", "passes", "per_edge_congestion", "peak_space_items"}) {
        if (b.exec.contains(key)) row[key] = b.exec[key];
      }
    }
    rows.push_back(row);
  }
  bool as_json = c.out.size() >= 5 && c.out.substr(c.out.size() - 5) == ".json";
  std::ostringstream text;
  if (as_json) {
    text << rows.dump(2) << '\n';
  } else {
    std::vector<std::string> cols = {"construction", "k", "eps", "rho", "seed", "size",
                                     "alpha", "beta", "alpha_beta", "worst_residual",
                                     "violations", "rounds", "passes",
                                     "per_edge_congestion", "peak_space_items"};
    for (size_t i = 0; i < cols.size(); ++i) text << (i ? "," : "") << cols[i];
    text << '\n';
    for (const auto& row : rows) {
      for (size_t i = 0; i < cols.size(); ++i) {
        if (i) text << ',';
        if (row.contains(cols[i]) && !row[cols[i]].is_null()) {
          const json& v = row[cols[i]];
          text << (v.is_string() ? v.get<std::string>() : v.dump());
        }
      }
      text << '\n';
    }
  }
  if (c.out.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream out(c.out);
    out << text.str();
  }
  return 0;
}

void add_common(CLI::App* app, RunConfig& c) {
  app->add_option("--construction", c.construction, "Construction name")->required();
  app->add_option("--k", c.k, "Parameter k");
  app->add_option("--eps", c.eps, "Parameter epsilon");
  app->add_option("--rho", c.rho, "Efficiency parameter rho in (0, 1]");
  app->add_option("--gen", c.gen, "Generator spec, e.g. gnp:n=256,p=0.05,seed=7");
  app->add_option("--input", c.input, "Graph file");
  app->add_option("--model", c.model, "centralized|local|congest|stream-high|stream-low");
  app->add_option("--classes", c.classes, "auto or d1,d2,... for hopsets");
  app->add_option("--d", c.d, "Distance parameter for single-class spanners");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spanhop: spanners and hopsets with exact certification"};
  app.require_subcommand(1);

  RunConfig build_cfg;
  auto* b = app.add_subcommand("build", "Build a construction and write its certificate");
  add_common(b, build_cfg);
  b->add_option("--seed", build_cfg.seed, "Random seed");
  b->add_option("--out", build_cfg.out, "Output directory")->required();

  CertifyArgs cert_args;
  auto* c = app.add_subcommand("certify", "Check an artifact against a certificate");
  c->add_option("--input", cert_args.graph, "Original graph file")->required();
  c->add_option("--artifact", cert_args.artifact, "Spanner or hopset file");
  c->add_option("--cert", cert_args.cert, "Certificate sidecar (certificate.json)");
  c->add_option("--alpha", cert_args.alpha, "Override alpha");
  c->add_option("--beta", cert_args.beta, "Override beta");
  c->add_option("--kind", cert_args.kind, "spanner|hopset when no sidecar is given");
  c->add_option("--out", cert_args.out, "Report path (stdout when omitted)");

  RunConfig sweep_cfg;
  std::string seeds = "1-10";
  bool no_certify = false, audit = false;
  auto* s = app.add_subcommand("sweep", "Run a construction over many seeds");
  add_common(s, sweep_cfg);
  s->add_option("--seeds", seeds, "Seed list, e.g. 1-100 or 1,5,9");
  s->add_option("--out", sweep_cfg.out, "Output table (.csv or .json); stdout when omitted");
  s->add_flag("--no-certify", no_certify, "Skip the exhaustive stretch check");
  s->add_flag("--audit", audit, "Run expectation audits (tbs uses --d as t)");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*b) return cmd_build(build_cfg);
    if (*c) return cmd_certify(cert_args);
    if (*s) return cmd_sweep(sweep_cfg, seeds, !no_certify, audit);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
