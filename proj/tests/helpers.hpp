// trirecom: shared fixtures for the test suites.
#pragma once

#include <memory>

#include "trirecom/oracle.hpp"
#include "trirecom/pathfinder.hpp"

namespace trirecom::testing {

inline std::shared_ptr<const TriRegion> region(int n) { return std::make_shared<const TriRegion>(n); }

inline Partition ground(int n, SizeTargets k, Perm perm = {1, 2, 3}) { return ground_state(region(n), k, perm); }

/// Enumerated Ω of n=5, k=(5,5,5), slack 1; built once per test binary.
inline const Omega& omega5() {
  static const Omega om = enumerate_omega(region(5), {{5, 5, 5}}, 1);
  return om;
}

inline Mask mask_of(const TriRegion& r, std::initializer_list<Vertex> vs) {
  Mask m = 0;
  for (const Vertex& v : vs) m |= bit(r.id(v));
  return m;
}

/// Balanced n=7, k=(10,9,9) partitions whose district 2 avoids bd(T): district
/// 2 is the interior minus one vertex u, district 1 is u plus an arc of nine
/// boundary vertices, district 3 the remaining arc.
inline std::vector<Partition> interior_district_states() {
  const auto r = region(7);
  const auto& cyc = r->boundary_cycle();
  const Mask interior = r->all() & ~r->boundary_mask();
  std::vector<Partition> out;
  for (int u = 0; u < r->size(); ++u) {
    if (!((interior >> u) & 1U)) continue;
    for (std::size_t off = 0; off < cyc.size(); ++off) {
      Labels lab(static_cast<std::size_t>(r->size()), 2);
      lab[static_cast<std::size_t>(u)] = 1;
      for (std::size_t k = 0; k < cyc.size(); ++k)
        lab[static_cast<std::size_t>(cyc[(off + k) % cyc.size()])] = k < 9 ? 1 : 3;
      Partition p(r, {{10, 9, 9}}, lab);
      if (classify(p).cls == BalanceClass::Balanced) out.push_back(p);
    }
  }
  return out;
}

}  // namespace trirecom::testing
