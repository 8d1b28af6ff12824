// trirecom: shrink search, unwinding, cycle recombination, towers.
#include "trirecom/toolkit.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace trirecom {

namespace {

Mask other_districts(const Partition& p, int d) { return p.region().all() & ~p.district(d); }

bool exposed(const Partition& p, int d, int v) { return (p.region().nbr_mask(v) & other_districts(p, d)) != 0; }

std::vector<int> valid_targets(const Partition& p, int v) {
  std::vector<int> out;
  for (int e = 1; e <= 3; ++e)
    if (e != p.label(v) && flip_valid(p, v, e)) out.push_back(e);
  return out;
}

struct ShrinkSearch {
  const Partition& p;
  int d;
  Mask forbidden;
  std::set<Mask> seen;

  std::optional<ShrinkVertex> run(Mask s) {
    if (!s || !seen.insert(s).second) return std::nullopt;
    const TriRegion& r = p.region();
    const Mask pd = p.district(d);
    std::vector<int> cut_exposed;
    for (Mask m = s; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      if (!exposed(p, d, v)) continue;
      if (is_simply_connected(r, pd & ~bit(v))) {
        if ((forbidden >> v) & 1U) continue;
        auto t = valid_targets(p, v);
        if (!t.empty()) return ShrinkVertex{v, std::move(t)};
      } else {
        cut_exposed.push_back(v);
      }
    }
    // Every exposed vertex is a cut vertex (or blocked): descend into the
    // pieces each one splits off inside s.
    for (int w : cut_exposed)
      for (Mask c : components(r, pd & ~bit(w))) {
        if ((c & ~s) != 0) continue;
        if (auto found = run(c)) return found;
      }
    return std::nullopt;
  }
};

}  // namespace

const char* to_string(ShrinkCondition c) {
  switch (c) {
    case ShrinkCondition::NoBoundary: return "I";
    case ShrinkCondition::ExposedTwoBoundary: return "II";
    case ShrinkCondition::ExposedCorner: return "III";
    case ShrinkCondition::CutVertexTwoBoundary: return "IV";
    case ShrinkCondition::CutVertexCorner: return "V";
  }
  return "?";
}

bool ShrinkVertex::can_join(int d) const { return std::find(targets.begin(), targets.end(), d) != targets.end(); }

bool shrink_condition_holds(const Partition& p, int d, Mask blocker, Mask component, ShrinkCondition c) {
  const TriRegion& r = p.region();
  const Mask pd = p.district(d);
  if ((blocker & ~pd) || (component & ~pd) || (blocker & component) || !component) return false;
  auto has_exposed = [&] {
    for (Mask m = component; m; m &= m - 1)
      if (exposed(p, d, std::countr_zero(m))) return true;
    return false;
  };
  auto blocker_is_cut = [&] {
    return std::popcount(blocker) == 1 && components(r, pd & ~blocker).size() >= 2;
  };
  const bool two_bd = std::popcount(pd & r.boundary_mask()) >= 2;
  const bool corner = (pd & r.corner_mask()) != 0;
  switch (c) {
    case ShrinkCondition::NoBoundary: return (component & r.boundary_mask()) == 0;
    case ShrinkCondition::ExposedTwoBoundary: return has_exposed() && two_bd;
    case ShrinkCondition::ExposedCorner: return has_exposed() && corner;
    case ShrinkCondition::CutVertexTwoBoundary: return blocker_is_cut() && two_bd;
    case ShrinkCondition::CutVertexCorner: return blocker_is_cut() && corner;
  }
  return false;
}

std::optional<ShrinkVertex> find_shrink_vertex(const Partition& p, int d, Mask blocker, Mask component,
                                               Mask forbidden) {
  ShrinkSearch search{p, d, forbidden | blocker, {}};
  return search.run(component & p.district(d) & ~blocker);
}

ShrinkVertex find_shrink_vertex(const Partition& p, int d, Mask blocker, Mask component, ShrinkCondition c) {
  if (!shrink_condition_holds(p, d, blocker, component, c))
    throw NoShrinkVertex("find_shrink_vertex", std::string("condition ") + to_string(c) + " does not hold");
  auto found = find_shrink_vertex(p, d, blocker, component);
  if (!found) throw NoShrinkVertex("find_shrink_vertex", "no removable vertex in component");
  return *found;
}

UnwindOutcome unwind(Walk& w, const UnwindRoles& roles, Mask s1, Mask s2, std::optional<int> keep) {
  const Mask keep_mask = keep ? bit(*keep) : 0;
  for (;;) {
    const Partition& p = w.current();
    s1 &= p.district(roles.p1);
    s2 &= p.district(roles.p2);
    if (!s1) return UnwindOutcome::FirstExhausted;
    if (!(s2 & ~keep_mask)) return UnwindOutcome::SecondExhausted;
    auto v1 = find_shrink_vertex(p, roles.p1, p.district(roles.p1) & ~s1, s1, w.locked);
    if (!v1) throw ProcedureFailure("unwind", "S1 has no shrink vertex");
    if (v1->can_join(roles.p3)) {
      w.flip(v1->vertex, roles.p3, "unwind: S1 vertex to deficit district");
      return UnwindOutcome::Balanced;
    }
    if (!v1->can_join(roles.p2)) throw ProcedureFailure("unwind", "S1 shrink vertex cannot join P2");
    w.flip(v1->vertex, roles.p2, "unwind: S1 vertex to P2");
    s1 &= ~bit(v1->vertex);
    const Partition& q = w.current();
    auto v2 = find_shrink_vertex(q, roles.p2, q.district(roles.p2) & ~s2, s2, w.locked | keep_mask);
    if (!v2) throw ProcedureFailure("unwind", "S2 has no shrink vertex");
    if (v2->can_join(roles.p3)) {
      w.flip(v2->vertex, roles.p3, "unwind: S2 vertex to deficit district");
      return UnwindOutcome::Balanced;
    }
    if (!v2->can_join(roles.p1)) throw ProcedureFailure("unwind", "S2 shrink vertex cannot join P1");
    w.flip(v2->vertex, roles.p1, "unwind: S2 vertex to P1");
    s2 &= ~bit(v2->vertex);
  }
}

std::vector<int> bfs_last_order(const TriRegion& region, Mask set, int root, std::optional<int> first_child) {
  std::vector<int> order{root};
  Mask seen = bit(root);
  if (first_child && ((set >> *first_child) & 1U) && region.adjacent(root, *first_child)) {
    order.push_back(*first_child);
    seen |= bit(*first_child);
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    Mask next = region.nbr_mask(order[head]) & set & ~seen;
    seen |= next;
    for (; next; next &= next - 1) order.push_back(std::countr_zero(next));
  }
  return order;
}

CycleContext make_cycle_context(const Partition& p, int role1, int role2, std::vector<int> cycle, int x, int y,
                                std::optional<int> keep) {
  const TriRegion& r = p.region();
  Mask wall = 0;
  for (int v : cycle) wall |= bit(v);
  CycleContext ctx;
  ctx.cycle = std::move(cycle);
  ctx.x = x;
  ctx.y = y;
  ctx.keep = keep;
  ctx.interior = enclosed_by(r, wall);
  if (!ctx.interior) throw ProcedureFailure("cycle_recombine", "cycle encloses nothing");
  if (ctx.interior & ~(p.district(role1) | p.district(role2)))
    throw ProcedureFailure("cycle_recombine", "third-district vertex inside the cycle");
  ctx.m = std::popcount(ctx.interior & p.district(role1));
  return ctx;
}

RecomStep cycle_recombine(const Partition& p, const CycleContext& ctx, int role1, int role2) {
  const auto order = bfs_last_order(p.region(), ctx.interior | bit(ctx.x), ctx.x, ctx.keep);
  Labels after = p.labels();
  const std::size_t first_p1 = order.size() - static_cast<std::size_t>(ctx.m);
  for (std::size_t k = 0; k < order.size(); ++k)
    after[static_cast<std::size_t>(order[k])] = static_cast<std::uint8_t>(k >= first_p1 ? role1 : role2);
  return {6 - role1 - role2, std::move(after)};
}

std::array<int, 2> common_neighbors(const TriRegion& region, int a, int b) {
  const int k = direction_between(region, a, b);
  if (k < 0) return {kOutside, kOutside};
  const auto& ns = region.nbrs(a);
  return {ns[static_cast<std::size_t>((k + 5) % 6)], ns[static_cast<std::size_t>((k + 1) % 6)]};
}

Tower build_tower(const Partition& p, int v1, int v2) {
  const TriRegion& r = p.region();
  const int k = direction_between(r, v1, v2);
  if (k < 0) throw ProcedureFailure("build_tower", "v1 and v2 are not adjacent");
  for (int c : common_neighbors(r, v1, v2))
    if (c == kOutside || p.label(c) != p.label(v1))
      throw ProcedureFailure("build_tower", "a common neighbor of v1, v2 is not in v1's district");
  if (p.label(v1) == p.label(v2)) throw ProcedureFailure("build_tower", "v1 and v2 share a district");
  if (flip_valid(p, v2, p.label(v1))) throw ProcedureFailure("build_tower", "v2 can join v1's district directly");
  Tower t;
  t.direction = static_cast<Dir>(k);
  t.vertices = {v1, v2};
  for (;;) {
    const int top = t.vertices.back();
    const int nxt = r.step(top, t.direction);
    if (nxt == kOutside) throw ProcedureFailure("build_tower", "tower line leaves the region");
    if (p.label(nxt) == p.label(top)) throw ProcedureFailure("build_tower", "tower line repeats a district");
    if (flip_valid(p, nxt, p.label(top))) {
      t.next = nxt;
      break;
    }
    t.vertices.push_back(nxt);
  }
  for (int v : t.vertices) t.districts.push_back(p.label(v));
  return t;
}

std::string tower_violation(const Partition& p, const Tower& t) {
  const TriRegion& r = p.region();
  const int h = t.height();
  if (h < 2) return "height below 2";
  for (int c : common_neighbors(r, t.vertices[0], t.vertices[1]))
    if (c == kOutside || p.label(c) != p.label(t.vertices[0])) return "v1 common neighbors";
  std::vector<int> line = t.vertices;
  line.push_back(t.next);
  for (int l = 0; l < h; ++l) {
    const int a = line[static_cast<std::size_t>(l)];
    const int b = line[static_cast<std::size_t>(l + 1)];
    if (b == kOutside) return "v_{t+1} outside T";
    if (p.label(a) == p.label(b)) return "consecutive vertices share a district";
    if (l >= 1 && flip_valid(p, a, p.label(line[static_cast<std::size_t>(l - 1)])))
      return "tower vertex can join its predecessor";
    const auto cn = common_neighbors(r, a, b);
    bool shares = false;
    for (int c : cn) {
      if (c == kOutside) return "common neighbor outside T";
      if (p.label(c) == p.label(b)) return "common neighbor shares the upper vertex's district";
      shares = shares || p.label(c) == p.label(a);
    }
    if (!shares) return "no common neighbor shares the lower vertex's district";
  }
  if (!flip_valid(p, t.next, p.label(t.vertices.back()))) return "v_{t+1} cannot join v_t's district";
  return {};
}

void execute_tower(Walk& w, const Tower& t) {
  std::vector<int> line = t.vertices;
  line.push_back(t.next);
  for (std::size_t l = line.size() - 1; l >= 1; --l)
    w.flip(line[l], t.districts[l - 1], "tower: flip v" + std::to_string(l + 1) + " to predecessor district");
}

}  // namespace trirecom
