// trirecom: three-district partitions of the triangle and their structural
// predicates (simple connectivity, neighborhoods, cut vertices, tricolor
// faces, rebalancing case dispatch, ground states).
#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "trirecom/lattice.hpp"

namespace trirecom {

using Labels = std::vector<std::uint8_t>;
using Perm = std::array<int, 3>;

struct SizeTargets {
  std::array<int, 3> k{};
  int operator[](int d) const { return k[static_cast<std::size_t>(d - 1)]; }
  int total() const { return k[0] + k[1] + k[2]; }
  friend bool operator==(const SizeTargets&, const SizeTargets&) = default;
};

enum class BalanceClass { Balanced, NearlyBalanced, OutsideOmega };
const char* to_string(BalanceClass c);

/// A labelling of every vertex of T with a district in {1,2,3}.
class Partition {
 public:
  Partition(std::shared_ptr<const TriRegion> region, SizeTargets targets, Labels labels);

  const TriRegion& region() const { return *region_; }
  const std::shared_ptr<const TriRegion>& region_ptr() const { return region_; }
  const SizeTargets& targets() const { return targets_; }
  const Labels& labels() const { return labels_; }

  int label(int id) const { return labels_[static_cast<std::size_t>(id)]; }
  int label(Vertex v) const { return label(region_->id(v)); }
  Mask district(int d) const { return masks_[static_cast<std::size_t>(d - 1)]; }
  int size_of(int d) const;

  /// Moves vertex id into district d (value-semantics mutation of this copy).
  void reassign(int id, int d);
  void reassign(Vertex v, int d) { reassign(region_->id(v), d); }
  Partition with_labels(Labels labels) const { return {region_, targets_, std::move(labels)}; }

  friend bool operator==(const Partition& a, const Partition& b) { return a.labels_ == b.labels_; }

 private:
  std::shared_ptr<const TriRegion> region_;
  SizeTargets targets_;
  Labels labels_;
  std::array<Mask, 3> masks_{};
};

// ---- set-level predicates (masks over vertex ids) ----

/// Vertices of `set` reachable from `start` inside `set`.
Mask component_of(const TriRegion& region, Mask set, int start);
std::vector<Mask> components(const TriRegion& region, Mask set);
bool is_connected(const TriRegion& region, Mask set);
/// Nonempty, connected, and every complement component touches bd(T).
bool is_simply_connected(const TriRegion& region, Mask set);
bool is_simply_connected(const TriRegion& region, const std::vector<Vertex>& vset);
/// Vertices of T strictly enclosed by `wall`: complement components of `wall`
/// that do not touch bd(T).
Mask enclosed_by(const TriRegion& region, Mask wall);

/// Number of maximal runs of members of `set` around the 6-cycle N(id).
int arc_count(const TriRegion& region, int id, Mask set);
/// True iff N(id) ∩ set is one contiguous arc (vacuously true when empty).
inline bool nbhd_connected(const TriRegion& region, int id, Mask set) { return arc_count(region, id, set) <= 1; }

// ---- partition-level predicates ----

struct ClassifyReport {
  BalanceClass cls = BalanceClass::OutsideOmega;
  bool valid = false;  // all three districts nonempty and simply connected
  std::array<int, 3> sizes{};
  std::string reason;
};
ClassifyReport classify(const Partition& p);
bool is_valid(const Partition& p);
bool in_omega(const Partition& p);

struct Neighborhood {
  std::vector<Vertex> set;
  bool connected = true;
};
Neighborhood d_neighborhood(const Partition& p, Vertex v, int d);
bool is_cut_vertex(const Partition& p, Vertex v);
std::vector<Vertex> exposed_vertices(const Partition& p, int d);
Mask exposed_mask(const Partition& p, int d);

enum class Chirality { Clockwise, Counterclockwise };
struct TricolorTriangle {
  std::array<Vertex, 3> vertices;  // clockwise around the face
  std::array<int, 3> labels;
  Chirality chirality = Chirality::Clockwise;  // order of districts 1,2,3
};
std::vector<TricolorTriangle> tricolor_triangles(const Partition& p);

enum class RebalanceCase { A, B, C, D };
const char* to_string(RebalanceCase c);
/// roles[r-1] is the concrete district playing role P_r; requires C_1 ∈ P_1.
/// Throws std::logic_error unless exactly one case holds.
RebalanceCase case_dispatch(const Partition& p, Perm roles = {1, 2, 3});

/// Ordering-index blocks of sizes k_a, k_b, k_c assigned to districts a, b, c
/// for perm = (a, b, c). Throws std::invalid_argument if some k_i < n.
Partition ground_state(std::shared_ptr<const TriRegion> region, SizeTargets targets, Perm perm);
std::vector<Perm> all_perms();
std::string perm_string(const Perm& perm);
/// Parses "123"-style permutations; throws std::invalid_argument.
Perm parse_perm(const std::string& s);

}  // namespace trirecom
