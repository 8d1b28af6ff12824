// trirecom: flip and recombination step semantics.
#include "trirecom/moves.hpp"

#include <stdexcept>

namespace trirecom {

bool flip_valid(const Partition& p, int id, int to) {
  const int from = p.label(id);
  if (from == to || to < 1 || to > 3) return false;
  const TriRegion& region = p.region();
  return is_simply_connected(region, p.district(from) & ~bit(id)) &&
         is_simply_connected(region, p.district(to) | bit(id));
}

bool flip_valid(const Partition& p, const FlipStep& step) {
  const int id = p.region().id(step.vertex);
  if (p.label(id) != step.from) return false;
  return flip_valid(p, id, step.to);
}

bool neighborhood_flip_test(const Partition& p, int id, int to) {
  const TriRegion& region = p.region();
  const int from = p.label(id);
  if (from == to) return false;
  const Mask target = p.district(to);
  return nbhd_connected(region, id, p.district(from)) && (region.nbr_mask(id) & target) != 0 &&
         nbhd_connected(region, id, target);
}

bool neighborhood_flip_test(const Partition& p, const FlipStep& step) {
  const int id = p.region().id(step.vertex);
  if (p.label(id) != step.from) return false;
  return neighborhood_flip_test(p, id, step.to);
}

std::vector<int> shared_districts(const Partition& p, const Partition& q) {
  std::vector<int> out;
  for (int d = 1; d <= 3; ++d)
    if (p.district(d) == q.district(d)) out.push_back(d);
  return out;
}

bool recom_valid(const Partition& p, const Partition& q) {
  if (p.region().n() != q.region().n()) return false;
  if (!(p.targets() == q.targets())) return false;
  if (p == q) return false;
  if (shared_districts(p, q).empty()) return false;
  return in_omega(p) && in_omega(q);
}

Partition apply_recom(const Partition& p, const RecomStep& step) {
  if (step.untouched < 1 || step.untouched > 3) throw std::invalid_argument("untouched district out of range");
  Partition q = p.with_labels(step.after);
  if (q.district(step.untouched) != p.district(step.untouched))
    throw std::invalid_argument("step changes its untouched district");
  if (q == p) throw std::invalid_argument("step does not change the partition");
  const ClassifyReport rep = classify(q);
  if (rep.cls == BalanceClass::OutsideOmega) throw std::invalid_argument("step leaves Omega: " + rep.reason);
  return q;
}

RecomStep reverse(const Partition& p, const RecomStep& step) { return {step.untouched, p.labels()}; }

RecomStep lift_flip(const Partition& p, const FlipStep& step) {
  RecomStep out;
  out.untouched = 6 - step.from - step.to;
  out.after = p.labels();
  out.after[static_cast<std::size_t>(p.region().id(step.vertex))] = static_cast<std::uint8_t>(step.to);
  return out;
}

}  // namespace trirecom
