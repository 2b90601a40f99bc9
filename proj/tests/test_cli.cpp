// Copyright 2026 The spanhop Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "spanhop/graph.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("spanhop_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Runs the CLI and returns its exit status; stderr lands in err_.
  int run(const std::string& args) {
    fs::path err = dir_ / "stderr.txt";
    std::string cmd = std::string(SPANHOP_CLI_PATH) + " " + args + " > " +
                      (dir_ / "stdout.txt").string() + " 2> " + err.string();
    int status = std::system(cmd.c_str());
    std::ifstream in(err);
    std::stringstream ss;
    ss << in.rdbuf();
    err_ = ss.str();
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string read(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
  std::string err_;
};

}  // namespace

TEST_F(CliTest, BuildThenCertifySpanner) {
  ASSERT_EQ(run("build --construction spanner3eps --k 3 --eps 1 --seed 7 "
                "--gen gnp:n=256,p=0.05,seed=7 --out " + path("out")),
            0)
      << err_;
  EXPECT_TRUE(fs::exists(path("out/graph.txt")));
  EXPECT_TRUE(fs::exists(path("out/spanner.txt")));
  json cert = json::parse(read(path("out/certificate.json")));
  EXPECT_EQ(cert["construction"], "spanner3eps");
  EXPECT_EQ(cert["config"]["seed"], 7);
  EXPECT_TRUE(cert["radius_audit_ok"].get<bool>());
  ASSERT_EQ(run("certify --input " + path("out/graph.txt") + " --cert " +
                path("out/certificate.json") + " --out " + path("report.json")),
            0)
      << err_;
  json report = json::parse(read(path("report.json")));
  EXPECT_TRUE(report["ok"].get<bool>());
  EXPECT_EQ(report["violation_count"], 0);
}

TEST_F(CliTest, BuildIsReproducible) {
  std::string args = "build --construction spanner3eps --k 3 --eps 1 --rho 0.5 --seed 3 "
                     "--gen gnp:n=128,p=0.05,seed=2 --out ";
  ASSERT_EQ(run(args + path("a")), 0) << err_;
  ASSERT_EQ(run(args + path("b")), 0) << err_;
  EXPECT_EQ(read(path("a/spanner.txt")), read(path("b/spanner.txt")));
  // The stored config replays the same run from the saved graph.
  json cfg = json::parse(read(path("a/certificate.json")))["config"];
  ASSERT_EQ(run("build --construction " + cfg["construction"].get<std::string>() +
                " --k 3 --eps 1 --rho 0.5 --seed " + std::to_string(cfg["seed"].get<int>()) +
                " --input " + path("a/graph.txt") + " --out " + path("c")),
            0);
  EXPECT_EQ(read(path("a/spanner.txt")), read(path("c/spanner.txt")));
}

TEST_F(CliTest, ExecutionModelsAgree) {
  std::string base = "build --construction spanner3eps --k 3 --eps 1 --rho 0.5 --seed 5 "
                     "--gen gnp:n=128,p=0.05,seed=5 ";
  ASSERT_EQ(run(base + "--out " + path("central")), 0) << err_;
  for (const char* m : {"local", "congest", "stream-high", "stream-low"}) {
    ASSERT_EQ(run(base + "--model " + m + " --out " + path(m)), 0) << err_;
    EXPECT_EQ(read(path(std::string(m) + "/spanner.txt")), read(path("central/spanner.txt")));
    json cert = json::parse(read(path(std::string(m) + "/certificate.json")));
    EXPECT_FALSE(cert["exec"].is_null());
  }
  EXPECT_NE(run(base + "--model local --out " + path("x") + " --rho 0"), 0);
}

TEST_F(CliTest, EffectiveEpsIsRecorded) {
  ASSERT_EQ(run("build --construction spanner3eps --k 3 --eps 3 --seed 1 "
                "--gen gnp:n=64,p=0.1,seed=1 --out " + path("out")),
            0)
      << err_;
  json cert = json::parse(read(path("out/certificate.json")));
  EXPECT_EQ(cert["eps"], 3.0);
  EXPECT_EQ(cert["eps_effective"], 2.0);
}

TEST_F(CliTest, BadParametersNamePrecondition) {
  EXPECT_NE(run("build --construction hopset-small-hops --k 50 --eps 0.5 "
                "--gen gnp:n=32,p=0.2,w=uniform:1:5,seed=1 --out " + path("out")),
            0);
  EXPECT_NE(err_.find("k < 10^{1/eps}"), std::string::npos) << err_;
  EXPECT_NE(run("build --construction spanner-long --k 100 --eps 0.5 "
                "--gen gnp:n=32,p=0.2,seed=1 --out " + path("out")),
            0);
  EXPECT_NE(err_.find("k < 16^{1/eps}"), std::string::npos) << err_;
  EXPECT_NE(run("build --construction nope --gen gnp:n=8,p=0.5 --out " + path("out")), 0);
  EXPECT_NE(err_.find("unknown construction"), std::string::npos);
}

TEST_F(CliTest, HopsetRoundTrip) {
  ASSERT_EQ(run("build --construction hopset3eps --k 3 --eps 1 --seed 2 "
                "--gen gnp:n=64,p=0.1,w=uniform:1:10,seed=2 --out " + path("h")),
            0)
      << err_;
  EXPECT_TRUE(fs::exists(path("h/hopset.txt")));
  json cert = json::parse(read(path("h/certificate.json")));
  EXPECT_GT(cert["ledger"]["classes"].size(), 0u);
  EXPECT_EQ(run("certify --input " + path("h/graph.txt") + " --cert " +
                path("h/certificate.json")),
            0)
      << err_;
}

TEST_F(CliTest, IdentityAndTreeOnCycle) {
  {
    std::ofstream g(path("cycle.txt"));
    g << "6 6 0\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n";
    std::ofstream t(path("tree.txt"));
    t << "6 5 0\n0 1\n1 2\n2 3\n3 4\n4 5\n";
    std::ofstream s(path("small.txt"));
    s << "5 1 0\n0 1\n";
  }
  EXPECT_EQ(run("certify --input " + path("cycle.txt") + " --artifact " + path("cycle.txt") +
                " --alpha 1 --beta 0"),
            0);
  EXPECT_EQ(run("certify --input " + path("cycle.txt") + " --artifact " + path("tree.txt") +
                " --alpha 1 --beta 0 --out " + path("r.json")),
            1);
  json r = json::parse(read(path("r.json")));
  EXPECT_FALSE(r["ok"].get<bool>());
  EXPECT_GT(r["violation_count"].get<int>(), 0);
  EXPECT_EQ(run("certify --input " + path("cycle.txt") + " --artifact " + path("small.txt") +
                " --alpha 1 --beta 0"),
            2);
  EXPECT_NE(err_.find("vertex count"), std::string::npos) << err_;
}

TEST_F(CliTest, SweepTables) {
  ASSERT_EQ(run("sweep --construction spanner3eps --k 3 --eps 1 --seeds \"\" "
                "--gen gnp:n=32,p=0.2,seed=1 --out " + path("empty.csv")),
            0)
      << err_;
  std::string empty = read(path("empty.csv"));
  EXPECT_EQ(std::count(empty.begin(), empty.end(), '\n'), 1);

  ASSERT_EQ(run("sweep --construction hopset-small-hops --k 1024 --eps 0.5 --seeds 1-3 "
                "--gen gnp:n=48,p=0.15,w=uniform:1:4,seed=1 --out " + path("h.json")),
            0)
      << err_;
  json rows = json::parse(read(path("h.json")));
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& row : rows) {
    EXPECT_DOUBLE_EQ(row["alpha_beta"].get<double>(),
                     row["alpha"].get<double>() * row["beta"].get<double>());
    EXPECT_EQ(row["violations"], 0);
  }

  ASSERT_EQ(run("sweep --construction spanner3eps --k 3 --eps 1 --rho 0.5 --model congest "
                "--seeds 1,2 --gen gnp:n=64,p=0.1,seed=1 --out " + path("c.csv")),
            0)
      << err_;
  std::string csv = read(path("c.csv"));
  EXPECT_NE(csv.find("rounds"), std::string::npos);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
}

TEST_F(CliTest, SweepAudit) {
  ASSERT_EQ(run("sweep --construction tbs --k 3 --d 2 --audit --seeds 1-50 "
                "--gen gnp:n=64,p=0.15,seed=1 --out " + path("a.json")),
            0)
      << err_;
  json a = json::parse(read(path("a.json")));
  EXPECT_EQ(a["seeds"], 50);
  EXPECT_TRUE(a["ok"].get<bool>());
}
