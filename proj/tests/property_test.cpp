// trirecom: randomized structural property suites (10^4 cases each).
#include "doctest.h"
#include "properties.hpp"

using namespace trirecom::props;

namespace {
constexpr long kCases = 10000;

void expect(const Tally& t) {
  CHECK(t.cases >= kCases);
  INFO(t.first_failure);
  CHECK(t.failures == 0);
}
}  // namespace

TEST_CASE("cut vertices are exactly the vertices with disconnected own neighborhoods") {
  expect(cut_vertex_iff_disconnected(kCases, 101));
}
TEST_CASE("connected neighborhoods make a flip valid") { expect(neighborhood_test_sufficient(kCases, 102)); }
TEST_CASE("the last breadth-first vertex has a small connected neighborhood") { expect(bfs_last_vertex(kCases, 103)); }
TEST_CASE("lifted flips are reversible recombination edges") { expect(recom_reversible(kCases, 104)); }
TEST_CASE("boundary vertices never alternate between two districts") { expect(boundary_alternation(kCases)); }
TEST_CASE("an enclosed district meets the others in two opposite faces") { expect(tricolor_pair(kCases, 106)); }
TEST_CASE("built towers satisfy their structure") { expect(tower_structure(kCases, 107)); }
