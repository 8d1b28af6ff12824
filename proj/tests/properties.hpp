// trirecom: randomized structural property checks shared by the unit suite
// and the acceptance driver. Each check runs at least `cases` instances and
// reports how many it ran and how many failed.
#pragma once

#include <cstdint>
#include <string>

namespace trirecom::props {

struct Tally {
  long cases = 0;
  long failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

/// Cut vertex iff its own-district neighborhood is disconnected.
Tally cut_vertex_iff_disconnected(long cases, std::uint64_t seed);
/// The neighborhood flip test implies full flip validity.
Tally neighborhood_test_sufficient(long cases, std::uint64_t seed);
/// The last vertex of a breadth-first order of a simply connected set has a
/// connected in-set neighborhood of size below six.
Tally bfs_last_vertex(long cases, std::uint64_t seed);
/// Lifted flips are recombination steps both ways and reverse exactly.
Tally recom_reversible(long cases, std::uint64_t seed);
/// No four consecutive boundary vertices alternate between two districts.
Tally boundary_alternation(long min_cases);
/// A district avoiding bd(T) yields exactly two tricolor faces of opposite
/// chirality.
Tally tricolor_pair(long cases, std::uint64_t seed);
/// Every built tower satisfies its structural properties and terminates
/// inside T.
Tally tower_structure(long cases, std::uint64_t seed);

}  // namespace trirecom::props
