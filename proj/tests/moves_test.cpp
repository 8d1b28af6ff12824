// trirecom: flip and recombination step semantics.
#include "doctest.h"
#include "helpers.hpp"

using namespace trirecom;
using trirecom::testing::ground;

TEST_CASE("flip validity on the ground state") {
  const Partition g = ground(5, {{5, 5, 5}});
  CHECK(flip_valid(g, FlipStep{{3, 2}, 1, 2}));
  CHECK(neighborhood_flip_test(g, FlipStep{{3, 2}, 1, 2}));
  CHECK_FALSE(flip_valid(g, FlipStep{{1, 1}, 1, 2}));
  CHECK_FALSE(neighborhood_flip_test(g, FlipStep{{1, 1}, 1, 2}));
  CHECK_FALSE(flip_valid(g, FlipStep{{3, 2}, 2, 1}));  // wrong source district
  // District 3 is column 5; its middle vertex is a cut vertex.
  CHECK(is_cut_vertex(g, {5, 3}));
  CHECK_FALSE(flip_valid(g, g.region().id({5, 3}), 2));
}

TEST_CASE("recombination steps") {
  const Partition a = ground(8, {{12, 12, 12}}, {1, 2, 3});
  const Partition b = ground(8, {{12, 12, 12}}, {2, 1, 3});
  CHECK(recom_valid(a, b));
  CHECK(shared_districts(a, b) == std::vector<int>{3});
  CHECK_FALSE(recom_valid(a, a));
  const RecomStep step{3, b.labels()};
  const Partition c = apply_recom(a, step);
  CHECK(c == b);
  CHECK(apply_recom(c, reverse(a, step)) == a);
  CHECK_THROWS_AS(apply_recom(a, RecomStep{1, b.labels()}), std::invalid_argument);
  CHECK_THROWS_AS(apply_recom(a, RecomStep{3, a.labels()}), std::invalid_argument);
  const RecomStep lifted = lift_flip(ground(5, {{5, 5, 5}}), FlipStep{{3, 2}, 1, 2});
  CHECK(lifted.untouched == 3);
  CHECK(recom_valid(ground(5, {{5, 5, 5}}), ground(5, {{5, 5, 5}}).with_labels(lifted.after)));
}

TEST_CASE("recombination adjacency is symmetric on the n=5 enumeration sample") {
  const auto& om = testing::omega5();
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, om.size() - 1);
  int edges = 0;
  for (int t = 0; t < 20000; ++t) {
    const Partition p = om.partition(pick(rng)), q = om.partition(pick(rng));
    const bool fwd = recom_valid(p, q);
    CHECK(fwd == recom_valid(q, p));
    edges += fwd;
  }
  CHECK(edges > 0);
}
