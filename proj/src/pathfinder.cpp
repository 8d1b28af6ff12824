// trirecom: constructive paths through Ω.
#include "trirecom/pathfinder.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

#include "trirecom/oracle.hpp"

namespace trirecom {

int step_budget(int n) { return 64 * n * n * n + 256; }

namespace {

int size_excess(const Partition& p, int d) { return p.size_of(d) - p.targets()[d]; }

int first_open_column(const Partition& p, int a) {
  const TriRegion& r = p.region();
  int i = 1;
  while (i <= r.n() && (r.column_mask(i) & ~p.district(a)) == 0) ++i;
  return i;
}

/// Runs `f` on a copy of the walk; keeps the result only if it is balanced.
bool attempt(Walk& w, const std::function<void(Walk&)>& f) {
  Walk trial = w;
  try {
    f(trial);
  } catch (const ProcedureFailure&) {
    return false;
  }
  if (classify(trial.current()).cls != BalanceClass::Balanced) return false;
  w = std::move(trial);
  return true;
}

std::vector<int> ids_of(Mask m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

// ---- two-district re-split ----

/// Grows a simply connected set of `size_a` vertices inside U = P_a ∪ P_b
/// from `keep`, preferring vertices already in P_a, such that the remainder
/// of U is simply connected too.
struct Resplit {
  const TriRegion& r;
  Mask U;
  Mask pa;
  int target;
  long budget = 20000;
  std::set<Mask> seen;
  Mask result = 0;

  bool grow(Mask A) {
    if (--budget < 0 || !seen.insert(A).second) return false;
    if (std::popcount(A) == target) {
      if (is_simply_connected(r, U & ~A)) {
        result = A;
        return true;
      }
      return false;
    }
    Mask front = 0;
    for (Mask m = A; m; m &= m - 1) front |= r.nbr_mask(std::countr_zero(m));
    front &= U & ~A;
    struct Cand {
      int rank;
      int id;
    };
    std::vector<Cand> cands;
    for (int c : ids_of(front)) {
      const Mask A2 = A | bit(c);
      if (!is_simply_connected(r, A2)) continue;
      const bool rest_ok = is_simply_connected(r, U & ~A2);
      cands.push_back({(rest_ok ? 0 : 2) + (((pa >> c) & 1U) ? 0 : 1), c});
    }
    std::stable_sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) { return x.rank < y.rank; });
    for (const Cand& c : cands)
      if (grow(A | bit(c.id))) return true;
    return false;
  }
};

/// Labels with P_a ∪ P_b re-split into sizes (size_a, rest), P_a ⊇ keep; the
/// third district is untouched.
std::optional<Labels> resplit(const Partition& p, int a, int b, Mask keep, int size_a) {
  const TriRegion& r = p.region();
  const Mask U = p.district(a) | p.district(b);
  if (!is_connected(r, U) || size_a <= 0 || size_a >= std::popcount(U)) return std::nullopt;
  std::vector<Mask> seeds;
  if (keep) {
    seeds.push_back(keep);
  } else {
    for (int v : ids_of(p.district(a))) seeds.push_back(bit(v));
    for (int v : ids_of(p.district(b))) seeds.push_back(bit(v));
  }
  for (Mask s : seeds) {
    if (!is_simply_connected(r, s) || std::popcount(s) > size_a) continue;
    Resplit rs{r, U, p.district(a), size_a, 20000, {}, 0};
    if (rs.grow(s)) {
      Labels out = p.labels();
      for (int v : ids_of(U)) out[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(((rs.result >> v) & 1U) ? a : b);
      return out;
    }
  }
  return std::nullopt;
}

// ---- shared repair of a (+1, 0, -1) imbalance ----

/// Roles: `o` one too large, `j` exact, `d` one short. Vertices in w.locked
/// (a subset of P_o) stay put. Tries the cheap exits first: a direct move,
/// the disconnected-3-neighborhood shortcuts, a two-flip relay through P_j
/// and unwinding; a two-district re-split is the last resort.
void repair(Walk& w, int o, int j, int d, const std::string& tag) {
  const Mask locked = w.locked;
  const Partition& p = w.current();
  const TriRegion& r = p.region();

  // Direct: a free vertex of P_o can join P_d.
  if (attempt(w, [&](Walk& t) {
        for (int v : ids_of(t.current().district(o) & ~locked))
          if (flip_valid(t.current(), v, d)) return t.flip(v, d, tag + ": oversized vertex to deficit district");
        throw ProcedureFailure(tag, "no direct move");
      }))
    return;

  // A vertex x of P_j (or P_o) whose d-neighborhood is disconnected: the part
  // of its own district cut off inside the enclosing P_d cycle can shrink into P_d.
  for (int src : {j, o}) {
    for (int x : ids_of(p.district(src))) {
      if (arc_count(r, x, p.district(d)) < 2) continue;
      for (Mask s : components(r, p.district(src) & ~bit(x))) {
        if ((s & r.boundary_mask()) || (s & locked)) continue;
        auto sv = find_shrink_vertex(p, src, p.district(src) & ~s, s, locked);
        if (!sv || !sv->can_join(d)) continue;
        const int v2 = sv->vertex;
        if (src == o) {
          if (attempt(w, [&](Walk& t) { t.flip(v2, d, tag + ": enclosed oversized vertex to deficit district"); }))
            return;
          continue;
        }
        if (attempt(w, [&](Walk& t) {
              for (int v : ids_of(t.current().district(o) & ~locked & ~r.nbr_mask(v2))) {
                if (!flip_valid(t.current(), v, j)) continue;
                t.flip(v, j, tag + ": oversized vertex to exact district");
                t.flip(v2, d, tag + ": enclosed exact-district vertex to deficit district");
                return;
              }
              throw ProcedureFailure(tag, "no partner move");
            }))
          return;
      }
    }
  }

  // Relay through P_j in either order.
  if (attempt(w, [&](Walk& t) {
        const Partition start = t.current();
        for (int v : ids_of(start.district(o) & ~locked)) {
          if (!flip_valid(start, v, j)) continue;
          Partition mid = start;
          mid.reassign(v, j);
          for (int u : ids_of(mid.district(j)))
            if (u != v && flip_valid(mid, u, d)) {
              t.flip(v, j, tag + ": relay oversized vertex to exact district");
              t.flip(u, d, tag + ": relay exact-district vertex to deficit district");
              return;
            }
        }
        for (int u : ids_of(start.district(j))) {
          if (!flip_valid(start, u, d)) continue;
          Partition mid = start;
          mid.reassign(u, d);
          for (int v : ids_of(mid.district(o) & ~locked))
            if (flip_valid(mid, v, j)) {
              t.flip(u, d, tag + ": relay exact-district vertex to deficit district");
              t.flip(v, j, tag + ": relay oversized vertex to exact district");
              return;
            }
        }
        throw ProcedureFailure(tag, "no relay");
      }))
    return;

  // Unwinding of an arm of P_o against an arm of P_j.
  int tries = 0;
  const Mask po = p.district(o), pj = p.district(j);
  for (int w1 : ids_of(po)) {
    const auto arms1 = components(r, po & ~bit(w1));
    if (arms1.size() < 2) continue;
    for (Mask s1 : arms1) {
      if (s1 & locked) continue;
      const bool s1_ok = !(s1 & r.boundary_mask()) || ((po & ~s1) & r.boundary_mask());
      if (!s1_ok) continue;
      Mask s1_nbrs = 0;
      for (int v : ids_of(s1)) s1_nbrs |= r.nbr_mask(v);
      for (int w2 : ids_of(pj)) {
        const auto arms2 = components(r, pj & ~bit(w2));
        if (arms2.size() < 2) continue;
        for (Mask s2 : arms2) {
          if (s2 & s1_nbrs) continue;
          const bool s2_ok = !(s2 & r.boundary_mask()) || ((pj & ~s2) & r.boundary_mask());
          if (!s2_ok || ++tries > 48) continue;
          if (attempt(w, [&](Walk& t) {
                if (unwind(t, {o, j, d}, s1, s2) != UnwindOutcome::Balanced)
                  throw ProcedureFailure(tag, "unwinding exhausted an arm");
              }))
            return;
        }
      }
    }
  }

  // Re-split P_o ∪ P_d in one recombination, or through P_j in two.
  const SizeTargets& k = p.targets();
  if (attempt(w, [&](Walk& t) {
        auto after = resplit(t.current(), o, d, locked, k[o]);
        if (!after) throw ProcedureFailure(tag, "no re-split of oversized and deficit districts");
        t.recombine(*after, j, tag + ": re-split oversized and deficit districts");
      }))
    return;
  if (attempt(w, [&](Walk& t) {
        auto first = resplit(t.current(), o, j, locked, k[o]);
        if (!first) throw ProcedureFailure(tag, "no re-split of oversized and exact districts");
        t.recombine(*first, d, tag + ": re-split oversized and exact districts");
        auto second = resplit(t.current(), j, d, 0, k[j]);
        if (!second) throw ProcedureFailure(tag, "no re-split of exact and deficit districts");
        t.recombine(*second, o, tag + ": re-split exact and deficit districts");
      }))
    return;
  throw ProcedureFailure(tag, "no repair found from sizes (" + std::to_string(p.size_of(1)) + "," +
                                  std::to_string(p.size_of(2)) + "," + std::to_string(p.size_of(3)) + ")");
}

int lattice_distance(Vertex a, Vertex b) {
  const int dc = b.col - a.col, dr = b.row - a.row;
  if ((dc >= 0) == (dr >= 0)) return std::max(std::abs(dc), std::abs(dr));
  return std::abs(dc) + std::abs(dr);
}

}  // namespace

void increase_column(Walk& w, int i, int p1) {
  const Partition& p = w.current();
  const TriRegion& r = p.region();
  const auto col = r.columns(i);
  int v = -1, top = -1;
  for (std::size_t k = 0; k < col.size() && v < 0; ++k) {
    const int id = r.id(col[k]);
    if (p.label(id) == p1) continue;
    for (std::size_t nb : {k - 1, k + 1})
      if (nb < col.size() && p.label(col[nb]) == p1) {
        v = id;
        top = r.id(col[nb]);
        break;
      }
  }
  if (v < 0) throw ProcedureFailure("increase_column", "column has no adjacent in/out pair");
  const Mask saved = w.locked;
  w.locked = p.district(p1) & r.columns_upto(i);
  const int from = p.label(v);
  if (flip_valid(p, v, p1)) {
    w.flip(v, p1, "increase_column: direct flip");
  } else if (r.on_boundary(v)) {
    int x = -1;
    for (Dir dir : {Dir::UpRight, Dir::DownRight}) {
      const int c = r.step(v, dir);
      if (c != kOutside && !r.adjacent(c, top)) x = c;
    }
    if (x < 0) throw ProcedureFailure("increase_column", "boundary vertex without outer neighbor");
    w.flip(x, from, "increase_column: boundary neighbor to the column vertex's district");
    w.flip(v, p1, "increase_column: boundary column vertex");
  } else {
    int below = -1;
    for (Dir dir : {Dir::UpLeft, Dir::DownLeft}) {
      const int c = r.step(v, dir);
      if (c != kOutside && r.adjacent(c, top)) below = c;
    }
    const Tower t = build_tower(p, below, v);
    execute_tower(w, t);
  }
  w.locked = saved;
}

Trace increase_column(const Partition& p, int i) {
  Walk w(p);
  increase_column(w, i, p.label(0));
  return w.take();
}

void rebalance(Walk& w, int i, int p1) {
  const Partition& p = w.current();
  int j = 0, d = 0;
  for (int e = 1; e <= 3; ++e) {
    if (e == p1) continue;
    if (size_excess(p, e) == -1) d = e;
    else j = e;
  }
  if (size_excess(p, p1) != 1 || d == 0 || size_excess(p, j) != 0)
    throw ProcedureFailure("rebalance", "expects sizes (k1+1, k2, k3-1)");
  std::string tag = "rebalance";
  try {
    tag += std::string(" case ") + to_string(case_dispatch(p, {p1, j, d}));
  } catch (const std::logic_error&) {
  }
  const Mask saved = w.locked;
  w.locked = p.district(p1) & p.region().columns_upto(i);
  repair(w, p1, j, d, tag);
  w.locked = saved;
}

Trace rebalance(const Partition& p, int i) {
  Walk w(p);
  rebalance(w, i, p.label(0));
  return w.take();
}

void sweep(Walk& w) {
  const int a = w.current().label(0);
  const TriRegion& r = w.current().region();
  const int budget = step_budget(r.n());
  for (int round = 0;; ++round) {
    const Partition& p = w.current();
    const int i = first_open_column(p, a);
    if ((p.district(a) & ~r.columns_upto(i)) == 0) return;
    if (round > budget) throw ProcedureFailure("sweep", "round budget exceeded");
    increase_column(w, i, a);
    if (classify(w.current()).cls != BalanceClass::Balanced) rebalance(w, i, a);
  }
}

Trace sweep(const Partition& p) {
  Walk w(p);
  sweep(w);
  return w.take();
}

void finish_ground(Walk& w, std::optional<int> second) {
  const Partition& p0 = w.current();
  const TriRegion& r = p0.region();
  const SizeTargets& k = p0.targets();
  const int a = p0.label(0);
  const int b = second ? *second : (a == 1 ? 2 : 1);
  const int c = 6 - a - b;
  if (b == a || b < 1 || b > 3) throw ProcedureFailure("finish_ground", "bad second district");
  const int i = first_open_column(p0, a);
  if (p0.district(a) & ~r.columns_upto(i)) throw ProcedureFailure("finish_ground", "district 1 not swept");
  const Partition ground = ground_state(p0.region_ptr(), k, {a, b, c});
  const int N = r.size();
  const int m = std::popcount(p0.district(a) & r.column_mask(i));
  const Mask col_i = r.column_mask(i);

  if (std::popcount((col_i & ~p0.district(a)) | r.column_mask(i + 1)) <= k[b]) {
    Labels after = p0.labels();
    for (int id = 0; id < N; ++id)
      if (after[static_cast<std::size_t>(id)] != a)
        after[static_cast<std::size_t>(id)] = static_cast<std::uint8_t>(id >= N - k[c] ? c : b);
    w.recombine(after, a, "finish_ground: P2/P3 recombination");
    w.recombine(ground.labels(), c, "finish_ground: P1/P2 recombination");
    return;
  }
  const auto col = r.columns(i);
  for (int round = 0; round <= m; ++round) {
    const Partition& p = w.current();
    int top = 0;
    while (top < static_cast<int>(col.size()) && p.label(col[static_cast<std::size_t>(top)]) == a) ++top;
    if (top >= m) break;
    const int v = r.id(col[static_cast<std::size_t>(top)]);
    Mask q = 0;
    int below = top;
    while (below < static_cast<int>(col.size()) && p.label(col[static_cast<std::size_t>(below)]) != a)
      q |= bit(r.id(col[static_cast<std::size_t>(below++)]));
    if (below >= static_cast<int>(col.size())) throw ProcedureFailure("finish_ground", "no district-1 vertex below the gap");
    const int wv = r.id(col[static_cast<std::size_t>(below)]);
    const int u = r.step(v, Dir::DownRight);
    Mask p2 = q | bit(u);
    const Mask pool = ((col_i & ~p.district(a)) | r.column_mask(i + 1)) & ~p2;
    std::vector<int> order = ids_of(pool);
    const Vertex uv = r.vertex(u);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
      const int dx = lattice_distance(uv, r.vertex(x)), dy = lattice_distance(uv, r.vertex(y));
      if (dx != dy) return dx < dy;
      return r.vertex(x).col < r.vertex(y).col;
    });
    for (int x : order) {
      if (std::popcount(p2) >= k[b]) break;
      p2 |= bit(x);
    }
    Labels after = p.labels();
    for (int id = 0; id < N; ++id)
      if (after[static_cast<std::size_t>(id)] != a)
        after[static_cast<std::size_t>(id)] = static_cast<std::uint8_t>(((p2 >> id) & 1U) ? b : c);
    w.recombine(after, a, "finish_ground: P2/P3 recombination around the column gap");
    Labels swap = w.current().labels();
    swap[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(a);
    swap[static_cast<std::size_t>(wv)] = static_cast<std::uint8_t>(b);
    w.recombine(swap, c, "finish_ground: P1/P2 swap within the column");
  }
  w.recombine(ground.labels(), a, "finish_ground: final P2/P3 recombination");
  if (!(w.current() == ground)) throw ProcedureFailure("finish_ground", "did not reach the ground state");
}

Trace finish_ground(const Partition& p) {
  Walk w(p);
  finish_ground(w);
  return w.take();
}

void balance_nearly(Walk& w) {
  const Partition& p = w.current();
  int o = 0, j = 0, d = 0;
  for (int e = 1; e <= 3; ++e) {
    const int x = size_excess(p, e);
    if (x == 1) o = e;
    else if (x == -1) d = e;
    else if (x == 0) j = e;
  }
  if (!o || !d || !j) throw ProcedureFailure("balance_nearly", "expects one district one too large and one one short");
  const Mask saved = w.locked;
  w.locked = 0;
  repair(w, o, j, d, "balance_nearly");
  w.locked = saved;
}

Trace balance_nearly(const Partition& p) {
  Walk w(p);
  balance_nearly(w);
  return w.take();
}

Perm to_ground(Walk& w) {
  const ClassifyReport rep = classify(w.current());
  if (rep.cls == BalanceClass::OutsideOmega) throw ProcedureFailure("to_ground", "start is outside Omega: " + rep.reason);
  if (rep.cls == BalanceClass::NearlyBalanced) balance_nearly(w);
  sweep(w);
  const int a = w.current().label(0);
  const int b = a == 1 ? 2 : 1;
  finish_ground(w, b);
  return {a, b, 6 - a - b};
}

Trace to_ground(const Partition& p) {
  Walk w(p);
  to_ground(w);
  return w.take();
}

Trace ground_path(std::shared_ptr<const TriRegion> region, SizeTargets targets, Perm from, Perm to) {
  Walk w(ground_state(region, targets, from));
  Perm cur = from;
  while (cur != to) {
    // Bubble the first misplaced label left by one adjacent transposition.
    std::size_t pos = 0;
    while (cur[pos] == to[pos]) ++pos;
    std::size_t at = pos;
    while (cur[at] != to[pos]) ++at;
    std::swap(cur[at - 1], cur[at]);
    const int untouched = at == 1 ? cur[2] : cur[0];
    w.recombine(ground_state(region, targets, cur).labels(), untouched,
                "ground_path: transpose to " + perm_string(cur));
  }
  return w.take();
}

Trace reversed(const Trace& t) {
  std::vector<Partition> states{t.source};
  for (const auto& s : t.steps) states.push_back(t.source.with_labels(s.after));
  Trace out(states.back());
  for (std::size_t k = t.steps.size(); k-- > 0;) {
    out.steps.push_back({t.steps[k].untouched, states[k].labels()});
    out.notes.push_back("reverse of " + t.notes[k]);
  }
  return out;
}

Trace compress(const Trace& t) {
  std::vector<MaskState> states{to_masks(t.source)};
  for (const auto& s : t.steps) states.push_back(to_masks(t.source.with_labels(s.after)));
  Trace out(t.source);
  const std::size_t m = t.steps.size();
  std::size_t a = 0;
  while (a < m) {
    std::size_t best = a + 1;
    int shared = 0;
    for (std::size_t b = m; b > a; --b) {
      for (std::size_t dd = 0; dd < 3 && !shared; ++dd)
        if (states[a][dd] == states[b][dd]) shared = static_cast<int>(dd) + 1;
      if (shared) {
        best = b;
        break;
      }
    }
    if (states[best] != states[a]) {
      out.steps.push_back({shared, t.steps[best - 1].after});
      std::string note = t.notes[a];
      if (best - a > 1) note += " (+" + std::to_string(best - a - 1) + " merged)";
      out.notes.push_back(std::move(note));
    }
    a = best;
  }
  return out;
}

VerifyReport verify_trace(const Trace& t) {
  VerifyReport rep;
  rep.steps = t.steps.size();
  if (!in_omega(t.source)) {
    rep.reason = "source is outside Omega: " + classify(t.source).reason;
    return rep;
  }
  Partition cur = t.source;
  for (std::size_t k = 0; k < t.steps.size(); ++k) {
    const RecomStep& s = t.steps[k];
    auto fail = [&](const std::string& why) {
      rep.failed_step = static_cast<long>(k);
      rep.reason = why;
      return rep;
    };
    if (s.untouched < 1 || s.untouched > 3) return fail("untouched district out of range");
    std::optional<Partition> next;
    try {
      next.emplace(cur.with_labels(s.after));
    } catch (const std::invalid_argument& e) {
      return fail(e.what());
    }
    if (next->district(s.untouched) != cur.district(s.untouched)) return fail("untouched district changed");
    if (!recom_valid(cur, *next)) {
      if (*next == cur) return fail("step does not change the partition");
      return fail("not a recombination step within Omega: " + classify(*next).reason);
    }
    cur = std::move(*next);
  }
  rep.ok = true;
  rep.final_state = cur;
  return rep;
}

Trace path(const Partition& sigma, const Partition& tau, Granularity g) {
  if (sigma.region().n() != tau.region().n() || !(sigma.targets() == tau.targets()))
    throw std::invalid_argument("path endpoints live on different instances");
  Trace out(sigma);
  if (!(sigma == tau)) {
    Walk ws(sigma), wt(tau);
    const Perm ps = to_ground(ws);
    const Perm pt = to_ground(wt);
    out.append(ws.trace());
    out.append(ground_path(sigma.region_ptr(), sigma.targets(), ps, pt));
    out.append(reversed(wt.trace()));
    if (g == Granularity::Recom) out = compress(out);
  }
  const VerifyReport rep = verify_trace(out);
  if (!rep.ok || !(*rep.final_state == tau))
    throw ProcedureFailure("path", rep.ok ? "trace ends at the wrong state" : "step " + std::to_string(rep.failed_step) + ": " + rep.reason);
  out.verified = true;
  return out;
}

}  // namespace trirecom
