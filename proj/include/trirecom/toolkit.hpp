// trirecom: reusable move-construction machinery: shrink-vertex search,
// unwinding of two intertwined arms, breadth-first cycle recombination and
// towers.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trirecom/trace.hpp"

namespace trirecom {

// ---- shrinkable components ----

/// Sufficient conditions under which a component S of P_d \ W has a vertex
/// that can leave P_d.
enum class ShrinkCondition {
  NoBoundary,           // S misses bd(T)
  ExposedTwoBoundary,   // S has an exposed vertex, |P_d ∩ bd(T)| >= 2
  ExposedCorner,        // S has an exposed vertex, P_d holds a corner
  CutVertexTwoBoundary, // W is a cut vertex, |P_d ∩ bd(T)| >= 2
  CutVertexCorner,      // W is a cut vertex, P_d holds a corner
};
const char* to_string(ShrinkCondition c);
bool shrink_condition_holds(const Partition& p, int d, Mask blocker, Mask component, ShrinkCondition c);

struct ShrinkVertex {
  int vertex = -1;
  std::vector<int> targets;  // districts the vertex can validly join, ascending
  bool can_join(int d) const;
};

/// Exposed vertex of `component` (a subset of P_d \ blocker) whose removal
/// keeps P_d simply connected and which can join some other district.
/// Searches non-cut exposed vertices by ordering index, descending through
/// exposed cut vertices into the components they split off. Vertices in
/// `forbidden` are never returned.
std::optional<ShrinkVertex> find_shrink_vertex(const Partition& p, int d, Mask blocker, Mask component,
                                               Mask forbidden = 0);

class NoShrinkVertex : public ProcedureFailure {
 public:
  using ProcedureFailure::ProcedureFailure;
};
/// Checked form: throws NoShrinkVertex if the condition fails or no vertex exists.
ShrinkVertex find_shrink_vertex(const Partition& p, int d, Mask blocker, Mask component, ShrinkCondition c);

// ---- unwinding ----

enum class UnwindOutcome { Balanced = 1, FirstExhausted = 2, SecondExhausted = 3 };

struct UnwindRoles {
  int p1 = 1;  // oversized district, S1 shrinks out of it
  int p2 = 2;  // exact district, S2 shrinks out of it
  int p3 = 3;  // deficit district
};

/// Alternately moves a shrink vertex of S1 into P2 and one of S2 (never
/// `keep`) into P1, stopping as soon as a vertex can go to P3 instead.
/// Requires sizes (k1+1, k2, k3-1) for the roles; every flip goes through `w`.
UnwindOutcome unwind(Walk& w, const UnwindRoles& roles, Mask s1, Mask s2, std::optional<int> keep = std::nullopt);

// ---- breadth-first cycle recombination ----

/// Breadth-first order of `set` from `root`, neighbors in ascending ordering
/// index; `first_child` (a neighbor of root) is expanded first when given.
std::vector<int> bfs_last_order(const TriRegion& region, Mask set, int root,
                                std::optional<int> first_child = std::nullopt);

struct CycleContext {
  std::vector<int> cycle;  // role-P1 vertices plus the single role-P2 vertex x
  int x = -1;
  int y = -1;              // neighbor of x on the cycle
  Mask interior = 0;       // vertices strictly enclosed
  int m = 0;               // role-P1 vertices inside
  std::optional<int> keep; // neighbor of x inside that must stay role-P2
};

/// Computes interior and m; throws ProcedureFailure if a vertex of neither
/// role is enclosed or the interior is empty.
CycleContext make_cycle_context(const Partition& p, int role1, int role2, std::vector<int> cycle, int x, int y,
                                std::optional<int> keep = std::nullopt);

/// One recombination of role1/role2 touching only the interior of the cycle:
/// the last m vertices of the breadth-first order of interior ∪ {x} from x
/// join role1, the others role2.
RecomStep cycle_recombine(const Partition& p, const CycleContext& ctx, int role1, int role2);

// ---- towers ----

struct Tower {
  Dir direction = Dir::Up;
  std::vector<int> vertices;  // v_1 .. v_t
  std::vector<int> districts; // district of each v_l when built
  int next = -1;              // v_{t+1}, flippable to the district of v_t
  int height() const { return static_cast<int>(vertices.size()); }
};

/// Extends v1, v2 along their lattice line. Throws ProcedureFailure when the
/// start does not form a tower or the line leaves T.
Tower build_tower(const Partition& p, int v1, int v2);
/// Empty when every structural property of a built tower holds, else the
/// first violated property.
std::string tower_violation(const Partition& p, const Tower& t);
/// Flips v_{t+1}, v_t, ..., v_2 each into its predecessor's district.
void execute_tower(Walk& w, const Tower& t);

/// The two common neighbors of adjacent a and b (kOutside when outside T).
std::array<int, 2> common_neighbors(const TriRegion& region, int a, int b);

}  // namespace trirecom
