// trirecom: region geometry.
#include "doctest.h"
#include "helpers.hpp"

using namespace trirecom;

TEST_CASE("region sizes and side-length bounds") {
  CHECK(TriRegion(8).size() == 36);
  CHECK(TriRegion(3).size() == 6);
  CHECK(build_region(5).size() == 15);
  CHECK_THROWS_AS(TriRegion(2), std::invalid_argument);
  CHECK_THROWS_AS(TriRegion(kMaxSide + 1), std::invalid_argument);
}

TEST_CASE("ordering index runs left to right, top to bottom") {
  CHECK(ordering_index({1, 1}) == 1);
  CHECK(ordering_index({2, 1}) == 2);
  CHECK(ordering_index({2, 2}) == 3);
  CHECK(ordering_index({3, 1}) == 4);
  CHECK(ordering_index({5, 5}) == 15);
  const TriRegion r(6);
  for (int id = 0; id < r.size(); ++id) CHECK(r.id(r.vertex(id)) == id);
}

TEST_CASE("cyclic neighborhoods") {
  const TriRegion r(5);
  SUBCASE("interior vertex has six in-region slots in clockwise order") {
    const auto slots = r.neighbors_cyclic({3, 2});
    const Vertex expect[6] = {{3, 1}, {4, 2}, {4, 3}, {3, 3}, {2, 2}, {2, 1}};
    for (int k = 0; k < 6; ++k) {
      REQUIRE_FALSE(slots[static_cast<std::size_t>(k)].outside());
      CHECK(*slots[static_cast<std::size_t>(k)].vertex == expect[k]);
    }
  }
  SUBCASE("left corner has two contiguous in-region slots") {
    const auto slots = r.neighbors_cyclic({1, 1});
    int inside = 0;
    for (const auto& s : slots) inside += !s.outside();
    CHECK(inside == 2);
    CHECK(*slots[1].vertex == Vertex{2, 1});
    CHECK(*slots[2].vertex == Vertex{2, 2});
  }
  SUBCASE("right-edge vertex is outside only to the upper and lower right") {
    const auto slots = r.neighbors_cyclic({5, 3});
    CHECK(slots[static_cast<int>(Dir::UpRight)].outside());
    CHECK(slots[static_cast<int>(Dir::DownRight)].outside());
    int outside = 0;
    for (const auto& s : slots) outside += s.outside();
    CHECK(outside == 2);
  }
}

TEST_CASE("boundary, columns, corners and lines") {
  const TriRegion r(5);
  CHECK(r.boundary().size() == 12);
  CHECK(r.boundary_cycle().size() == 12);
  CHECK_FALSE(r.on_boundary(r.id({3, 2})));
  CHECK(r.on_boundary(r.id({4, 2})) == false);
  CHECK(r.on_boundary(r.id({5, 3})));
  CHECK(r.columns(3).size() == 3);
  CHECK(r.columns(6).empty());
  CHECK(std::popcount(r.columns_upto(4)) == 10);
  CHECK(r.corners()[1] == Vertex{5, 1});
  CHECK(std::popcount(r.corner_mask()) == 3);
  CHECK(*r.line_step({3, 2}, Dir::DownRight) == Vertex{4, 3});
  CHECK_FALSE(r.line_step({5, 3}, Dir::UpRight).has_value());
  // Consecutive boundary-cycle vertices are lattice neighbors.
  const auto& cyc = r.boundary_cycle();
  for (std::size_t k = 0; k < cyc.size(); ++k) CHECK(r.adjacent(cyc[k], cyc[(k + 1) % cyc.size()]));
}

TEST_CASE("direction between neighbors") {
  const TriRegion r(5);
  CHECK(direction_between(r, r.id({3, 2}), r.id({4, 3})) == static_cast<int>(Dir::DownRight));
  CHECK(direction_between(r, r.id({3, 2}), r.id({5, 3})) == -1);
}
