// trirecom: brute-force state space of small instances. Enumerates Ω,
// builds the recombination graph and answers connectivity questions
// independently of the constructive path machinery.
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <vector>

#include "trirecom/partition.hpp"

namespace trirecom {

/// Compact state: vertex masks of districts 1, 2, 3.
using MaskState = std::array<Mask, 3>;

MaskState to_masks(const Partition& p);
Partition from_masks(const std::shared_ptr<const TriRegion>& region, const SizeTargets& targets,
                     const MaskState& s);

/// Calls `visit` for every connected vertex set inside `allowed` whose size is
/// in [min_size, max_size]; each set is produced exactly once (anchored at its
/// smallest id).
void for_each_connected_subset(const TriRegion& region, Mask allowed, int min_size, int max_size,
                               const std::function<void(Mask)>& visit);

struct Omega {
  std::shared_ptr<const TriRegion> region;
  SizeTargets targets;
  int slack = 1;
  std::vector<MaskState> states;  // sorted by (mask1, mask2)

  std::size_t size() const { return states.size(); }
  Partition partition(std::size_t i) const { return from_masks(region, targets, states[i]); }
  /// Index of a state, or -1.
  long find(const MaskState& s) const;
};

/// Work-bound guard: throws std::length_error above this many candidate sets.
inline constexpr std::size_t kEnumerationBudget = 50'000'000;

/// All partitions into three simply connected districts with sizes within
/// `slack` of the targets, by anchored growth of district 1 then district 2.
Omega enumerate_omega(std::shared_ptr<const TriRegion> region, SizeTargets targets, int slack);
/// Independent generation order: filters all 3^N labellings (N <= 15).
Omega enumerate_omega_bruteforce(std::shared_ptr<const TriRegion> region, SizeTargets targets, int slack);

/// Recombination graph on an enumerated Ω. Two states are adjacent iff some
/// district has the same vertex set in both; the edges therefore form
/// cliques, one per (district, vertex set) group, which are stored instead of
/// explicit edge lists.
struct StateGraph {
  const Omega* omega = nullptr;
  std::array<std::vector<std::vector<std::uint32_t>>, 3> groups;  // per district
  std::array<std::vector<std::uint32_t>, 3> group_of;             // per district, per state
  std::vector<std::uint32_t> component;                           // component label per state
  std::size_t component_count = 0;

  std::size_t degree(std::size_t s) const;
  std::vector<std::uint32_t> neighbors(std::size_t s) const;
  /// Hop distances from `source` (-1 for unreachable).
  std::vector<int> bfs(std::size_t source) const;
};

StateGraph build_state_graph(const Omega& omega);

struct Connectivity {
  bool connected = false;
  std::size_t components = 0;
};
Connectivity check_connected(const StateGraph& g);
/// States from which no recombination step reaches a different set partition:
/// degree 0 once states that differ only by district labels are identified.
/// (With labelled districts, swapping the labels of two districts is always a
/// valid step, so literal degree 0 never occurs.)
std::vector<std::size_t> rigid_states(const StateGraph& g);
/// True iff a and b are the same set partition up to district labels.
bool same_up_to_labels(const MaskState& a, const MaskState& b);

struct EccentricityStats {
  std::size_t states = 0;
  std::size_t edges = 0;
  std::size_t sources = 0;  // BFS sources used
  bool exact = false;       // true when every state was a source
  int diameter_lower = 0;   // max eccentricity over sources
  double mean_eccentricity = 0;
};
/// Exact when the state count is at most `exact_limit`, else eccentricities
/// of `sample` evenly spaced sources.
EccentricityStats eccentricity_stats(const StateGraph& g, std::size_t exact_limit = 4000,
                                     std::size_t sample = 64);

/// State of Ω reached by `flips` uniformly chosen valid single-vertex moves
/// from the ground state σ_123 (invalid proposals are skipped). Used to sample
/// instances too large to enumerate.
Partition random_walk_state(std::shared_ptr<const TriRegion> region, SizeTargets targets, std::mt19937_64& rng,
                            int flips);

}  // namespace trirecom
