#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace gtmod;
using namespace testutil;

namespace {

Point pt(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Affine>> r;
  for (auto& row : rows) {
    r.emplace_back();
    for (auto& s : row) r.back().push_back(Affine::parse(s));
  }
  return Point::from_rows(r);
}

GtGraph chain(int n, const std::vector<std::pair<int, int>>& edges) {
  GtGraph g(n, true);
  for (auto [a, b] : edges) g.add({a / 10, a % 10}, {b / 10, b % 10});
  return g;
}

}  // namespace

TEST(Graph, UnorientedIsIntegerAdjacency) {
  for (int t = 0; t < 50; ++t) {
    Point v = random_point(4);
    GtGraph g = graph_of(v);
    for (int f = 0; f < 10; ++f)
      for (int h = f + 1; h < 10; ++h) {
        Index x = unflat_index(f), y = unflat_index(h);
        bool want = std::abs(x.k - y.k) <= 1 && same_class(v.at(x), v.at(y));
        EXPECT_EQ(g.has(x, y), want);
      }
    EXPECT_EQ(graph_of(v + random_shift(4, -3, 3)), g);
  }
}

TEST(Graph, TrivialCases) {
  EXPECT_TRUE(graph_of(pt({{"a"}, {"b", "c"}})).edges().empty());
  EXPECT_EQ(graph_of(Point(2)).edges().size(), 3u);
}

TEST(Graph, ZeroSeedPlusPart) {
  GtGraph o = orient(Point(4), Shift(4));
  auto pm = split(o);
  EXPECT_TRUE(pm.minus.edges().empty());
  // every pair between consecutive rows: 1*2 + 2*3 + 3*4
  EXPECT_EQ(pm.plus.edges().size(), 20u);
}

TEST(Graph, ReducedZeroIsChain) {
  GtGraph want = chain(4, {{41, 42}, {42, 43}, {43, 44}, {44, 31}, {31, 32}, {32, 33}, {33, 21}, {21, 22}, {22, 11}});
  EXPECT_EQ(reduce(orient(Point(4))), want);
}

TEST(Graph, ReducedStrictlyDecreasing) {
  Point p = pt({{"0"}, {"1", "0"}, {"2", "1", "0"}, {"3", "2", "1", "0"}});
  GtGraph want = chain(4, {{41, 42}, {42, 31}, {31, 43}, {43, 32}, {32, 44}, {44, 33}, {32, 21}, {21, 33}, {33, 22}, {22, 11}});
  EXPECT_EQ(reduce(orient(p)), want);
}

TEST(Graph, ReducedParametric) {
  Point p = pt({{"a+1"}, {"a", "a-1"}, {"c+1", "c", "c"}, {"a+1", "a", "b", "b-1"}, {"a+1", "a", "1", "0", "b"}});
  GtGraph want = chain(5, {{51, 41}, {41, 52}, {52, 42}, {53, 54}, {55, 43}, {43, 44}, {31, 32}, {32, 33}, {11, 21}, {21, 22}});
  EXPECT_EQ(reduce(orient(p)), want);
}

TEST(Graph, SeedMinusIsEmptyAndEdgePartition) {
  for (int t = 0; t < 40; ++t) {
    Point seed = random_seed(4);
    EXPECT_TRUE(split(orient(seed)).minus.edges().empty());
    Shift z = random_shift(4, -2, 2);
    if (!d_set_member(seed, z)) continue;
    auto pm = split(orient(seed, z));
    GtGraph full = graph_of(seed);
    for (auto& e : full.edges()) {
      if (e.from.k == e.to.k) continue;
      Index hi = e.from.k > e.to.k ? e.from : e.to, lo = e.from.k > e.to.k ? e.to : e.from;
      EXPECT_NE(pm.plus.has(hi, lo), pm.minus.has(lo, hi));
    }
    EXPECT_TRUE(split(orient(seed)).minus.subgraph_of(pm.minus));
    EXPECT_TRUE(pm.plus.subgraph_of(omega_plus(seed)));
  }
}

TEST(Graph, ReduceExpandRoundTrip) {
  for (int t = 0; t < 60; ++t) {
    Point seed = t % 3 ? random_seed(4) : Point(4);
    Shift z = random_shift(4, -2, 2);
    if (!d_set_member(seed, z)) continue;
    GtGraph o = orient(seed, z);
    EXPECT_EQ(expand(reduce(o)), o);
    for (int u = 0; u < 5; ++u) {
      Shift y = random_shift(4, -2, 2);
      if (!d_set_member(seed, y)) continue;
      GtGraph oy = orient(seed, y);
      EXPECT_EQ(o == oy, reduce(o) == reduce(oy));
    }
  }
}

TEST(Graph, Errors) {
  EXPECT_THROW(orient(Point(3), Shift::from_rows(3, {{0}, {0, 1}})), std::invalid_argument);
  GtGraph cyc(2, true);
  cyc.add({2, 1}, {1, 1});
  cyc.add({1, 1}, {2, 1});
  EXPECT_THROW(reduce(cyc), std::invalid_argument);
  EXPECT_TRUE(reduce(GtGraph(3, true)).edges().empty());
  GtGraph g = orient(Point(3));
  EXPECT_TRUE(g.subgraph_of(g));
}
