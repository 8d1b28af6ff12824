// trirecom: flip and recombination step semantics.
#pragma once

#include "trirecom/partition.hpp"

namespace trirecom {

struct FlipStep {
  Vertex vertex;
  int from = 0;
  int to = 0;
};

/// One recombination move: `untouched` keeps its vertex set, `after` is the
/// complete label array of the resulting partition.
struct RecomStep {
  int untouched = 0;
  Labels after;
  friend bool operator==(const RecomStep&, const RecomStep&) = default;
};

/// Authoritative: all three resulting districts nonempty and simply connected.
/// Size windows are the caller's concern.
bool flip_valid(const Partition& p, const FlipStep& step);
/// Mask-level form of flip_valid for vertex id into district `to`.
bool flip_valid(const Partition& p, int id, int to);
/// Fast sufficient test: own neighborhood connected, target neighborhood
/// connected and nonempty.
bool neighborhood_flip_test(const Partition& p, const FlipStep& step);
bool neighborhood_flip_test(const Partition& p, int id, int to);

/// Districts whose vertex sets agree in p and q.
std::vector<int> shared_districts(const Partition& p, const Partition& q);
bool recom_valid(const Partition& p, const Partition& q);
/// Throws std::invalid_argument when the step is not a valid move from p.
Partition apply_recom(const Partition& p, const RecomStep& step);
/// The step leading back from the result of `step` to p.
RecomStep reverse(const Partition& p, const RecomStep& step);
/// Lifts a flip to a recombination step (the uninvolved district untouched).
RecomStep lift_flip(const Partition& p, const FlipStep& step);

}  // namespace trirecom
