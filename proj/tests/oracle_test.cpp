// trirecom: brute-force state space, frozen counts.
#include <algorithm>
#include <set>
#include <tuple>

#include "doctest.h"
#include "helpers.hpp"

using namespace trirecom;
using trirecom::testing::region;

TEST_CASE("frozen state counts") {
  CHECK(enumerate_omega(region(3), {{2, 2, 2}}, 0).size() == 12);
  CHECK(enumerate_omega(region(3), {{2, 2, 2}}, 1).size() == 138);
  CHECK(enumerate_omega(region(4), {{4, 3, 3}}, 1).size() == 510);
  const Omega& om = testing::omega5();
  CHECK(om.size() == 3306);
  std::size_t balanced = 0;
  for (std::size_t s = 0; s < om.size(); ++s) balanced += classify(om.partition(s)).cls == BalanceClass::Balanced;
  CHECK(balanced == 462);
}

TEST_CASE("anchored growth agrees with exhaustive labelling") {
  for (auto [n, k, slack] : {std::tuple{3, SizeTargets{{2, 2, 2}}, 0}, std::tuple{3, SizeTargets{{2, 2, 2}}, 1},
                             std::tuple{4, SizeTargets{{4, 3, 3}}, 1}, std::tuple{4, SizeTargets{{3, 3, 4}}, 0}}) {
    CAPTURE(n);
    CHECK(enumerate_omega(region(n), k, slack).states == enumerate_omega_bruteforce(region(n), k, slack).states);
  }
  CHECK_THROWS_AS(enumerate_omega_bruteforce(region(6), {{7, 7, 7}}, 1), std::length_error);
  CHECK_THROWS_AS(enumerate_omega(region(5), {{5, 5, 4}}, 1), std::invalid_argument);
}

TEST_CASE("connected subsets are produced once each") {
  const TriRegion r(4);
  std::set<Mask> seen;
  std::size_t calls = 0;
  for_each_connected_subset(r, r.all(), 1, 3, [&](Mask m) {
    ++calls;
    seen.insert(m);
    CHECK(is_connected(r, m));
  });
  CHECK(calls == seen.size());
  // 10 singletons, 18 edges, 3-paths and triangles of the 10-vertex triangle.
  CHECK(std::count_if(seen.begin(), seen.end(), [](Mask m) { return std::popcount(m) == 2; }) == 18);
}

TEST_CASE("rigid exact-size configurations and slack connectivity") {
  const Omega exact = enumerate_omega(region(3), {{2, 2, 2}}, 0);
  const StateGraph g0 = build_state_graph(exact);
  const auto rigid = rigid_states(g0);
  CHECK(rigid.size() == 12);
  CHECK(check_connected(g0).components == 2);
  const Omega slack = enumerate_omega(region(3), {{2, 2, 2}}, 1);
  CHECK(check_connected(build_state_graph(slack)).connected);
  CHECK(rigid_states(build_state_graph(slack)).empty());
}

TEST_CASE("n=5 state graph") {
  const Omega& om = testing::omega5();
  const StateGraph g = build_state_graph(om);
  CHECK(check_connected(g).connected);
  for (std::size_t s = 0; s < om.size(); s += 97) {
    const auto nb = g.neighbors(s);
    CHECK(nb.size() == g.degree(s));
    for (auto t : nb) CHECK(recom_valid(om.partition(s), om.partition(t)));
  }
  const auto dist = g.bfs(0);
  CHECK(std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; }));
  const auto st = eccentricity_stats(g, 0, 8);
  CHECK_FALSE(st.exact);
  CHECK(st.sources == 8);
  CHECK(st.diameter_lower >= 1);
}

TEST_CASE("state graph is invariant under relabelling districts") {
  const Omega& om = testing::omega5();
  for (std::size_t s = 0; s < om.size(); s += 11) {
    MaskState m = om.states[s];
    std::swap(m[0], m[1]);
    CHECK(om.find(m) >= 0);
    CHECK(same_up_to_labels(m, om.states[s]));
  }
}

TEST_CASE("random walk sampling stays in Omega and is seed-deterministic") {
  std::mt19937_64 a(3), b(3);
  const Partition p = random_walk_state(region(7), {{10, 9, 9}}, a, 200);
  const Partition q = random_walk_state(region(7), {{10, 9, 9}}, b, 200);
  CHECK(p == q);
  CHECK(in_omega(p));
}
