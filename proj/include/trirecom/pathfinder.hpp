// trirecom: constructive paths between any two partitions of Ω: sweep the
// district of the top-left corner across the columns, rebalance after each
// advance, finish at a ground state and bridge ground states.
#pragma once

#include <optional>
#include <string>

#include "trirecom/toolkit.hpp"

namespace trirecom {

/// Adds one vertex of column i to district p1 without reassigning any vertex
/// of p1 in columns < i. Requires a balanced partition with C_{<i} ⊆ P1,
/// C_i ⊄ P1 and P1 ∩ C_{>i} ≠ ∅. Leaves the partition balanced or with P1
/// one too large.
void increase_column(Walk& w, int i, int p1);
Trace increase_column(const Partition& p, int i);

/// Restores balance after increase_column without reassigning any vertex of
/// P1 ∩ C_{≤i}. Requires |P1| = k1 + 1 and one other district one short.
void rebalance(Walk& w, int i, int p1);
Trace rebalance(const Partition& p, int i);

/// Alternates increase_column and rebalance until C_{<i} ⊆ P1 ⊆ C_{≤i}, with
/// P1 the district of the top-left corner. Requires a balanced partition.
void sweep(Walk& w);
Trace sweep(const Partition& p);

/// From a balanced partition with C_{<i} ⊆ P1 ⊆ C_{≤i} to the ground state
/// whose blocks are (P1, P2, P3) in ordering-index order; P2 is the smaller
/// remaining label unless `second` names it.
void finish_ground(Walk& w, std::optional<int> second = std::nullopt);
Trace finish_ground(const Partition& p);

/// From a nearly balanced partition to a balanced one.
void balance_nearly(Walk& w);
Trace balance_nearly(const Partition& p);

/// Any partition of Ω to a ground state; returns the reached permutation.
Perm to_ground(Walk& w);
Trace to_ground(const Partition& p);

/// Ground state `from` to ground state `to` by adjacent transpositions.
Trace ground_path(std::shared_ptr<const TriRegion> region, SizeTargets targets, Perm from, Perm to);

enum class Granularity { Flip, Recom };
/// Full path sigma -> ground -> ground -> tau; verified before returning.
Trace path(const Partition& sigma, const Partition& tau, Granularity g = Granularity::Recom);

/// Steps leading from the final state of t back to its source.
Trace reversed(const Trace& t);
/// Greedily merges consecutive steps whose endpoints share a district.
Trace compress(const Trace& t);

struct VerifyReport {
  bool ok = false;
  long failed_step = -1;  // -1: source itself, or no failure when ok
  std::string reason;
  std::size_t steps = 0;
  std::optional<Partition> final_state;
};
/// Re-checks every step from scratch: recom_valid between consecutive states.
VerifyReport verify_trace(const Trace& t);

/// Largest hop count the constructive procedures are allowed before they
/// report a failure (guards against non-termination).
int step_budget(int n);

}  // namespace trirecom
