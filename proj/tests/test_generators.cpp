// Copyright 2026 The spanhop Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "spanhop/distance.hpp"
#include "spanhop/generators.hpp"

using namespace spanhop;

namespace {

Dist diameter(const Graph& g) {
  Dist best = 0;
  for (const auto& row : exact_apsp(g)) {
    for (Dist d : row) best = std::max(best, d);
  }
  return best;
}

bool same(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  for (size_t i = 0; i < a.m(); ++i) {
    const Edge &x = a.edges()[i], &y = b.edges()[i];
    if (x.u != y.u || x.v != y.v || x.w != y.w) return false;
  }
  return true;
}

}  // namespace

TEST(GeneratorsTest, SmallFamilies) {
  Graph p = path_graph(4);
  EXPECT_EQ(p.m(), 3u);
  EXPECT_EQ(diameter(p), 3);
  EXPECT_EQ(gnp_graph(64, 1.0, 1).m(), 2016u);
  EXPECT_EQ(gnp_graph(64, 0.0, 1).m(), 0u);
  Graph s = star_graph(6);
  EXPECT_EQ(s.m(), 5u);
  EXPECT_EQ(s.degree(0), 5u);
  Graph grid = grid_graph(3, 4);
  EXPECT_EQ(grid.n(), 12);
  EXPECT_EQ(grid.m(), 17u);
  EXPECT_EQ(diameter(grid), 5);
}

TEST(GeneratorsTest, RingOfCliques) {
  Graph g = ring_of_cliques(8, 8);
  EXPECT_EQ(g.n(), 64);
  EXPECT_EQ(g.m(), 8u * 28 + 8);
  // Crossing a clique costs one edge; half the ring is four cliques.
  EXPECT_EQ(diameter(g), 9);
}

TEST(GeneratorsTest, Barbell) {
  Graph g = barbell_graph(128, 64);
  EXPECT_EQ(g.n(), 320);
  EXPECT_EQ(g.m(), 2u * 128 * 127 / 2 + 65);
  EXPECT_EQ(diameter(g), 67);
}

TEST(GeneratorsTest, DeterministicUnderSeed) {
  for (const char* spec : {"gnp:n=60,p=0.1,seed=3", "random-geometric:n=80,radius=0.2,seed=4",
                           "gnp:n=40,p=0.2,w=uniform:1:10,seed=5",
                           "grid:rows=5,cols=6,w=exp:3,seed=2"}) {
    GenSpec a = parse_gen_spec(spec);
    EXPECT_TRUE(same(generate(a), generate(parse_gen_spec(spec)))) << spec;
  }
  EXPECT_FALSE(same(gnp_graph(60, 0.1, 1), gnp_graph(60, 0.1, 2)));
}

TEST(GeneratorsTest, WeightLaws) {
  Graph u = gnp_graph(50, 0.2, 1, {WeightLaw::kUniform, 3, 7, 0});
  EXPECT_TRUE(u.weighted());
  for (const Edge& e : u.edges()) {
    EXPECT_GE(e.w, 3);
    EXPECT_LE(e.w, 7);
    EXPECT_EQ(e.w, std::floor(e.w));
  }
  Graph x = gnp_graph(50, 0.3, 1, {WeightLaw::kExpClasses, 1, 1, 4});
  std::set<Dist> seen;
  for (const Edge& e : x.edges()) seen.insert(e.w);
  for (Dist w : seen) EXPECT_TRUE(w == 1 || w == 2 || w == 4 || w == 8 || w == 16);
  EXPECT_GT(seen.size(), 3u);
}

TEST(GeneratorsTest, SpecParsingRoundTrip) {
  GenSpec s = parse_gen_spec("gnp:n=256,p=0.05,w=uniform:1:10,seed=7");
  EXPECT_EQ(s.family, "gnp");
  EXPECT_EQ(s.params.at("n"), 256);
  EXPECT_EQ(s.weights.kind, WeightLaw::kUniform);
  EXPECT_EQ(s.weights.hi, 10);
  EXPECT_EQ(s.seed, 7u);
  GenSpec t = parse_gen_spec(to_string(s));
  EXPECT_TRUE(same(generate(s), generate(t)));
}

TEST(GeneratorsTest, InvalidSpecs) {
  EXPECT_THROW(parse_gen_spec("gnp:n"), std::invalid_argument);
  EXPECT_THROW(generate(parse_gen_spec("gnp:p=0.5")), std::invalid_argument);
  EXPECT_THROW(generate(parse_gen_spec("unknown:n=5")), std::invalid_argument);
  EXPECT_THROW(generate(parse_gen_spec("gnp:n=10,p=2")), std::invalid_argument);
  EXPECT_THROW(parse_gen_spec("gnp:n=10,w=weird"), std::invalid_argument);
}
