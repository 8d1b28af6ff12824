// trirecom: brute-force state space of small instances.
#include "trirecom/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

#include "trirecom/moves.hpp"

namespace trirecom {

MaskState to_masks(const Partition& p) { return {p.district(1), p.district(2), p.district(3)}; }

Partition from_masks(const std::shared_ptr<const TriRegion>& region, const SizeTargets& targets,
                     const MaskState& s) {
  Labels labels(static_cast<std::size_t>(region->size()), 0);
  for (int d = 1; d <= 3; ++d)
    for (Mask m = s[static_cast<std::size_t>(d - 1)]; m; m &= m - 1)
      labels[static_cast<std::size_t>(std::countr_zero(m))] = static_cast<std::uint8_t>(d);
  return {region, targets, std::move(labels)};
}

namespace {

struct SubsetWalker {
  const TriRegion& region;
  int min_size;
  int max_size;
  const std::function<void(Mask)>& visit;

  // ESU-style extension: a vertex enters the extension set only when it is
  // adjacent to the newest vertex and to nothing chosen before, so every
  // connected set is reached along exactly one branch.
  void extend(Mask set, int size, Mask closed, Mask ext, Mask above) {
    if (size >= min_size) visit(set);
    if (size == max_size) return;
    while (ext) {
      const int v = std::countr_zero(ext);
      ext &= ext - 1;
      const Mask nv = region.nbr_mask(v);
      extend(set | bit(v), size + 1, closed | nv | bit(v), ext | (nv & above & ~closed), above);
    }
  }
};

}  // namespace

void for_each_connected_subset(const TriRegion& region, Mask allowed, int min_size, int max_size,
                               const std::function<void(Mask)>& visit) {
  if (max_size < 1) return;
  SubsetWalker w{region, std::max(min_size, 1), max_size, visit};
  for (Mask a = allowed; a; a &= a - 1) {
    const int anchor = std::countr_zero(a);
    const Mask above = allowed & ~((bit(anchor) << 1) - 1);
    const Mask na = region.nbr_mask(anchor);
    w.extend(bit(anchor), 1, na | bit(anchor), na & above, above);
  }
}

long Omega::find(const MaskState& s) const {
  auto it = std::lower_bound(states.begin(), states.end(), s);
  if (it == states.end() || *it != s) return -1;
  return static_cast<long>(it - states.begin());
}

Omega enumerate_omega(std::shared_ptr<const TriRegion> region, SizeTargets targets, int slack) {
  if (slack < 0 || slack > 1) throw std::invalid_argument("slack must be 0 or 1");
  if (targets.total() != region->size()) throw std::invalid_argument("targets must sum to the vertex count");
  const TriRegion& r = *region;
  Omega out{region, targets, slack, {}};
  std::size_t work = 0;
  auto lo = [&](int d) { return std::max(1, targets[d] - slack); };
  auto hi = [&](int d) { return targets[d] + slack; };
  for_each_connected_subset(r, r.all(), lo(1), hi(1), [&](Mask m1) {
    if (++work > kEnumerationBudget) throw std::length_error("enumeration work bound exceeded");
    if (!is_simply_connected(r, m1)) return;
    const Mask rest = r.all() & ~m1;
    const int remaining = std::popcount(rest);
    const int min2 = std::max(lo(2), remaining - hi(3));
    const int max2 = std::min(hi(2), remaining - lo(3));
    if (min2 > max2) return;
    for_each_connected_subset(r, rest, min2, max2, [&](Mask m2) {
      if (++work > kEnumerationBudget) throw std::length_error("enumeration work bound exceeded");
      const Mask m3 = rest & ~m2;
      if (is_simply_connected(r, m2) && is_simply_connected(r, m3)) out.states.push_back({m1, m2, m3});
    });
  });
  std::sort(out.states.begin(), out.states.end());
  return out;
}

Omega enumerate_omega_bruteforce(std::shared_ptr<const TriRegion> region, SizeTargets targets, int slack) {
  const TriRegion& r = *region;
  if (r.size() > 15) throw std::length_error("brute-force labelling enumeration limited to 15 vertices");
  Omega out{region, targets, slack, {}};
  const int N = r.size();
  std::vector<int> digits(static_cast<std::size_t>(N), 0);
  long total = 1;
  for (int i = 0; i < N; ++i) total *= 3;
  for (long code = 0; code < total; ++code) {
    long c = code;
    MaskState s{0, 0, 0};
    for (int i = 0; i < N; ++i) {
      s[static_cast<std::size_t>(c % 3)] |= bit(i);
      c /= 3;
    }
    bool ok = true;
    for (int d = 1; d <= 3 && ok; ++d) {
      const int sz = std::popcount(s[static_cast<std::size_t>(d - 1)]);
      ok = sz >= targets[d] - slack && sz <= targets[d] + slack && sz > 0;
    }
    for (int d = 1; d <= 3 && ok; ++d) ok = is_simply_connected(r, s[static_cast<std::size_t>(d - 1)]);
    if (ok) out.states.push_back(s);
  }
  std::sort(out.states.begin(), out.states.end());
  return out;
}

StateGraph build_state_graph(const Omega& omega) {
  StateGraph g;
  g.omega = &omega;
  const std::size_t V = omega.size();
  std::vector<std::uint32_t> parent(V);
  std::iota(parent.begin(), parent.end(), 0U);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t d = 0; d < 3; ++d) {
    std::map<Mask, std::uint32_t> index;
    g.group_of[d].resize(V);
    for (std::size_t s = 0; s < V; ++s) {
      auto [it, fresh] = index.try_emplace(omega.states[s][d], static_cast<std::uint32_t>(g.groups[d].size()));
      if (fresh) g.groups[d].emplace_back();
      g.groups[d][it->second].push_back(static_cast<std::uint32_t>(s));
      g.group_of[d][s] = it->second;
    }
    for (const auto& grp : g.groups[d])
      for (std::size_t i = 1; i < grp.size(); ++i) parent[find(grp[i])] = find(grp[0]);
  }
  g.component.resize(V);
  std::map<std::uint32_t, std::uint32_t> label;
  for (std::size_t s = 0; s < V; ++s) {
    auto [it, fresh] = label.try_emplace(find(static_cast<std::uint32_t>(s)), static_cast<std::uint32_t>(label.size()));
    g.component[s] = it->second;
  }
  g.component_count = label.size();
  return g;
}

std::size_t StateGraph::degree(std::size_t s) const {
  std::size_t deg = 0;
  for (std::size_t d = 0; d < 3; ++d) deg += groups[d][group_of[d][s]].size() - 1;
  return deg;
}

std::vector<std::uint32_t> StateGraph::neighbors(std::size_t s) const {
  std::vector<std::uint32_t> out;
  for (std::size_t d = 0; d < 3; ++d)
    for (std::uint32_t t : groups[d][group_of[d][s]])
      if (t != s) out.push_back(t);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> StateGraph::bfs(std::size_t source) const {
  const std::size_t V = component.size();
  std::vector<int> dist(V, -1);
  std::array<std::vector<char>, 3> used;
  for (std::size_t d = 0; d < 3; ++d) used[d].assign(groups[d].size(), 0);
  std::vector<std::uint32_t> queue{static_cast<std::uint32_t>(source)};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t s = queue[head];
    for (std::size_t d = 0; d < 3; ++d) {
      const std::uint32_t gi = group_of[d][s];
      if (used[d][gi]) continue;
      used[d][gi] = 1;
      for (std::uint32_t t : groups[d][gi])
        if (dist[t] < 0) {
          dist[t] = dist[s] + 1;
          queue.push_back(t);
        }
    }
  }
  return dist;
}

Connectivity check_connected(const StateGraph& g) {
  return {g.component_count == 1, g.component_count};
}

bool same_up_to_labels(const MaskState& a, const MaskState& b) {
  MaskState x = a, y = b;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

std::vector<std::size_t> rigid_states(const StateGraph& g) {
  std::vector<std::size_t> out;
  const auto& states = g.omega->states;
  for (std::size_t s = 0; s < g.component.size(); ++s) {
    const auto nb = g.neighbors(s);
    if (std::all_of(nb.begin(), nb.end(), [&](std::uint32_t t) { return same_up_to_labels(states[s], states[t]); }))
      out.push_back(s);
  }
  return out;
}

EccentricityStats eccentricity_stats(const StateGraph& g, std::size_t exact_limit, std::size_t sample) {
  EccentricityStats st;
  const std::size_t V = g.component.size();
  st.states = V;
  std::size_t twice_edges = 0;
  for (std::size_t s = 0; s < V; ++s) twice_edges += g.degree(s);
  st.edges = twice_edges / 2;
  if (V == 0) return st;
  std::vector<std::size_t> sources;
  if (V <= exact_limit) {
    sources.resize(V);
    std::iota(sources.begin(), sources.end(), std::size_t{0});
    st.exact = true;
  } else {
    for (std::size_t i = 0; i < sample; ++i) sources.push_back(i * V / sample);
  }
  double sum = 0;
  for (std::size_t s : sources) {
    const auto dist = g.bfs(s);
    const int ecc = *std::max_element(dist.begin(), dist.end());
    st.diameter_lower = std::max(st.diameter_lower, ecc);
    sum += ecc;
  }
  st.sources = sources.size();
  st.mean_eccentricity = sum / static_cast<double>(sources.size());
  return st;
}

Partition random_walk_state(std::shared_ptr<const TriRegion> region, SizeTargets targets, std::mt19937_64& rng,
                            int flips) {
  Partition p = ground_state(region, targets, {1, 2, 3});
  std::uniform_int_distribution<int> pick_vertex(0, region->size() - 1);
  std::uniform_int_distribution<int> pick_district(1, 3);
  for (int done = 0; done < flips;) {
    const int v = pick_vertex(rng);
    const int to = pick_district(rng);
    if (to == p.label(v) || !flip_valid(p, v, to)) continue;
    Partition q = p;
    q.reassign(v, to);
    if (!in_omega(q)) continue;
    p = std::move(q);
    ++done;
  }
  return p;
}

}  // namespace trirecom
