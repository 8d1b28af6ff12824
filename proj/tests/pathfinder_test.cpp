// trirecom: constructive paths, compression and verification.
#include "doctest.h"
#include "helpers.hpp"

using namespace trirecom;
using trirecom::testing::ground;
using trirecom::testing::region;

TEST_CASE("ground-state bridges") {
  const auto r = region(8);
  const SizeTargets k{{12, 12, 12}};
  CHECK(ground_path(r, k, {1, 2, 3}, {2, 1, 3}).size() == 1);
  CHECK(ground_path(r, k, {1, 2, 3}, {1, 3, 2}).size() == 1);
  CHECK(ground_path(r, k, {1, 2, 3}, {1, 2, 3}).empty());
  for (const Perm& a : all_perms())
    for (const Perm& b : all_perms()) {
      const Trace t = ground_path(r, k, a, b);
      CHECK(t.size() <= 3);
      const VerifyReport rep = verify_trace(t);
      REQUIRE(rep.ok);
      CHECK(*rep.final_state == ground_state(r, k, b));
    }
}

TEST_CASE("trivial paths") {
  const Partition g = ground(5, {{5, 5, 5}});
  CHECK(path(g, g).empty());
  CHECK(sweep(g).empty());
  CHECK(to_ground(g).empty());
  const Trace t = path(g, ground(5, {{5, 5, 5}}, {2, 1, 3}));
  CHECK(t.size() == 1);
  CHECK(t.verified);
}

TEST_CASE("every n=5 state reaches a ground state") {
  const auto& om = testing::omega5();
  std::size_t longest = 0;
  for (std::size_t s = 0; s < om.size(); ++s) {
    const Partition p = om.partition(s);
    const Trace t = to_ground(p);
    const VerifyReport rep = verify_trace(t);
    REQUIRE(rep.ok);
    const Partition& end = *rep.final_state;
    bool is_ground = false;
    for (const Perm& perm : all_perms()) is_ground = is_ground || end == ground_state(om.region, om.targets, perm);
    CHECK(is_ground);
    const VerifyReport crep = verify_trace(compress(t));
    REQUIRE(crep.ok);
    CHECK(*crep.final_state == end);
    longest = std::max(longest, t.size());
  }
  CHECK(longest <= static_cast<std::size_t>(step_budget(5)));
}

TEST_CASE("nearly balanced repair and column advance on n=5") {
  const auto& om = testing::omega5();
  for (std::size_t s = 0; s < om.size(); ++s) {
    const Partition p = om.partition(s);
    const BalanceClass cls = classify(p).cls;
    if (cls == BalanceClass::NearlyBalanced) {
      const Trace t = balance_nearly(p);
      const VerifyReport rep = verify_trace(t);
      REQUIRE(rep.ok);
      CHECK(classify(*rep.final_state).cls == BalanceClass::Balanced);
      continue;
    }
    // Balanced: one column advance keeps C_{<i} and grows C_i in district 1.
    const TriRegion& r = p.region();
    const int a = p.label(0);
    int i = 1;
    while ((r.column_mask(i) & ~p.district(a)) == 0) ++i;
    if ((p.district(a) & ~r.columns_upto(i)) == 0) continue;
    const Trace t = increase_column(p, i);
    const VerifyReport rep = verify_trace(t);
    REQUIRE(rep.ok);
    const Partition& q = *rep.final_state;
    CHECK((q.district(a) & r.columns_upto(i - 1)) == r.columns_upto(i - 1));
    CHECK(std::popcount(q.district(a) & r.column_mask(i)) > std::popcount(p.district(a) & r.column_mask(i)));
    if (classify(q).cls == BalanceClass::Balanced) continue;
    CHECK(q.size_of(a) == 6);
    const Trace fix = rebalance(q, i);
    const VerifyReport frep = verify_trace(fix);
    REQUIRE(frep.ok);
    CHECK(classify(*frep.final_state).cls == BalanceClass::Balanced);
    const Mask locked = q.district(a) & r.columns_upto(i);
    CHECK((frep.final_state->district(a) & locked) == locked);
  }
}

TEST_CASE("sweep post-condition and ground finishing at n=6") {
  std::mt19937_64 rng(99);
  const auto r = region(6);
  for (int t = 0; t < 200; ++t) {
    Partition p = random_walk_state(r, {{7, 7, 7}}, rng, 200);
    if (classify(p).cls != BalanceClass::Balanced) p = balance_nearly(p).final_state();
    const Trace sw = sweep(p);
    const Partition q = sw.final_state();
    const int a = q.label(0);
    int i = 1;
    while ((r->column_mask(i) & ~q.district(a)) == 0) ++i;
    CHECK((q.district(a) & ~r->columns_upto(i)) == 0);
    CHECK(i <= 4);
    const Trace fg = finish_ground(q);
    const int m = std::popcount(q.district(a) & r->column_mask(i));
    CHECK(fg.size() <= static_cast<std::size_t>(2 * m + 2));
    REQUIRE(verify_trace(fg).ok);
  }
}

TEST_CASE("verification rejects corrupted traces") {
  const auto& om = testing::omega5();
  const Trace t = path(om.partition(17), om.partition(2900), Granularity::Flip);
  REQUIRE(t.size() >= 3);
  Trace bad = t;
  bad.steps[2].after[0] = static_cast<std::uint8_t>(bad.steps[2].after[0] % 3 + 1);
  const VerifyReport rep = verify_trace(bad);
  CHECK_FALSE(rep.ok);
  CHECK(rep.failed_step == 2);
  Trace wrong_untouched = t;
  const Partition first = t.source.with_labels(t.steps[0].after);
  for (int d = 1; d <= 3; ++d)
    if (first.district(d) != t.source.district(d)) wrong_untouched.steps[0].untouched = d;
  CHECK_FALSE(verify_trace(wrong_untouched).ok);
}

TEST_CASE("flip-granular and compressed traces agree; reversal re-verifies") {
  const auto& om = testing::omega5();
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> pick(0, om.size() - 1);
  for (int t = 0; t < 300; ++t) {
    const Partition a = om.partition(pick(rng)), b = om.partition(pick(rng));
    const Trace flips = path(a, b, Granularity::Flip);
    const Trace recs = path(a, b, Granularity::Recom);
    CHECK(recs.size() <= flips.size());
    CHECK(*verify_trace(flips).final_state == *verify_trace(recs).final_state);
    const VerifyReport back = verify_trace(reversed(recs));
    REQUIRE(back.ok);
    CHECK(*back.final_state == a);
  }
}

TEST_CASE("paths are deterministic") {
  const auto& om = testing::omega5();
  const Trace x = path(om.partition(100), om.partition(2000));
  const Trace y = path(om.partition(100), om.partition(2000));
  CHECK(x.steps == y.steps);
  CHECK(x.notes == y.notes);
}
