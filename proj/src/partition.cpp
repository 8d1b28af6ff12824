// trirecom: partitions and structural predicates.
#include "trirecom/partition.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace trirecom {

const char* to_string(BalanceClass c) {
  switch (c) {
    case BalanceClass::Balanced: return "Balanced";
    case BalanceClass::NearlyBalanced: return "NearlyBalanced";
    case BalanceClass::OutsideOmega: return "OutsideOmega";
  }
  return "?";
}

const char* to_string(RebalanceCase c) {
  switch (c) {
    case RebalanceCase::A: return "A";
    case RebalanceCase::B: return "B";
    case RebalanceCase::C: return "C";
    case RebalanceCase::D: return "D";
  }
  return "?";
}

Partition::Partition(std::shared_ptr<const TriRegion> region, SizeTargets targets, Labels labels)
    : region_(std::move(region)), targets_(targets), labels_(std::move(labels)) {
  if (!region_) throw std::invalid_argument("partition needs a region");
  if (static_cast<int>(labels_.size()) != region_->size())
    throw std::invalid_argument("label array length " + std::to_string(labels_.size()) +
                                " does not match region size " + std::to_string(region_->size()));
  for (std::size_t id = 0; id < labels_.size(); ++id) {
    const int d = labels_[id];
    if (d < 1 || d > 3) throw std::invalid_argument("district label out of range at index " + std::to_string(id));
    masks_[static_cast<std::size_t>(d - 1)] |= bit(static_cast<int>(id));
  }
}

int Partition::size_of(int d) const { return std::popcount(district(d)); }

void Partition::reassign(int id, int d) {
  const int old = label(id);
  masks_[static_cast<std::size_t>(old - 1)] &= ~bit(id);
  masks_[static_cast<std::size_t>(d - 1)] |= bit(id);
  labels_[static_cast<std::size_t>(id)] = static_cast<std::uint8_t>(d);
}

Mask component_of(const TriRegion& region, Mask set, int start) {
  if (!((set >> start) & 1U)) return 0;
  Mask seen = bit(start);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= region.nbr_mask(std::countr_zero(f));
    next &= set & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<Mask> components(const TriRegion& region, Mask set) {
  std::vector<Mask> out;
  while (set) {
    const Mask c = component_of(region, set, std::countr_zero(set));
    out.push_back(c);
    set &= ~c;
  }
  return out;
}

bool is_connected(const TriRegion& region, Mask set) {
  return set != 0 && component_of(region, set, std::countr_zero(set)) == set;
}

Mask enclosed_by(const TriRegion& region, Mask wall) {
  const Mask rest = region.all() & ~wall;
  Mask open = 0;
  for (Mask b = rest & region.boundary_mask(); b; b &= b - 1) {
    const int v = std::countr_zero(b);
    if (!((open >> v) & 1U)) open |= component_of(region, rest, v);
  }
  return rest & ~open;
}

bool is_simply_connected(const TriRegion& region, Mask set) {
  return is_connected(region, set) && enclosed_by(region, set) == 0;
}

bool is_simply_connected(const TriRegion& region, const std::vector<Vertex>& vset) {
  Mask m = 0;
  for (const Vertex& v : vset) {
    if (!region.contains(v)) return false;
    m |= bit(region.id(v));
  }
  return is_simply_connected(region, m);
}

int arc_count(const TriRegion& region, int id, Mask set) {
  const auto& ns = region.nbrs(id);
  bool in[6];
  for (int k = 0; k < 6; ++k) {
    const int w = ns[static_cast<std::size_t>(k)];
    in[k] = w != kOutside && ((set >> w) & 1U);
  }
  int starts = 0;
  for (int k = 0; k < 6; ++k)
    if (in[k] && !in[(k + 5) % 6]) ++starts;
  return starts;
}

ClassifyReport classify(const Partition& p) {
  ClassifyReport rep;
  bool balanced = true;
  bool window = true;
  rep.valid = true;
  for (int d = 1; d <= 3; ++d) {
    rep.sizes[static_cast<std::size_t>(d - 1)] = p.size_of(d);
    if (!is_simply_connected(p.region(), p.district(d))) {
      rep.valid = false;
      if (rep.reason.empty()) rep.reason = "district " + std::to_string(d) + " is not simply connected";
    }
    const int diff = p.size_of(d) - p.targets()[d];
    if (diff != 0) balanced = false;
    if (diff < -1 || diff > 1) {
      window = false;
      if (rep.reason.empty()) rep.reason = "district " + std::to_string(d) + " size outside target window";
    }
  }
  if (!rep.valid || !window)
    rep.cls = BalanceClass::OutsideOmega;
  else
    rep.cls = balanced ? BalanceClass::Balanced : BalanceClass::NearlyBalanced;
  return rep;
}

bool is_valid(const Partition& p) {
  for (int d = 1; d <= 3; ++d)
    if (!is_simply_connected(p.region(), p.district(d))) return false;
  return true;
}

bool in_omega(const Partition& p) { return classify(p).cls != BalanceClass::OutsideOmega; }

Neighborhood d_neighborhood(const Partition& p, Vertex v, int d) {
  const TriRegion& region = p.region();
  const int id = region.id(v);
  Neighborhood out;
  for (int w : region.nbrs(id))
    if (w != kOutside && p.label(w) == d) out.set.push_back(region.vertex(w));
  out.connected = nbhd_connected(region, id, p.district(d));
  return out;
}

bool is_cut_vertex(const Partition& p, Vertex v) {
  const int id = p.region().id(v);
  return !nbhd_connected(p.region(), id, p.district(p.label(id)));
}

Mask exposed_mask(const Partition& p, int d) {
  const TriRegion& region = p.region();
  const Mask own = p.district(d);
  Mask out = 0;
  for (Mask m = own; m; m &= m - 1) {
    const int v = std::countr_zero(m);
    if (region.nbr_mask(v) & ~own) out |= bit(v);
  }
  return out;
}

std::vector<Vertex> exposed_vertices(const Partition& p, int d) {
  std::vector<Vertex> out;
  for (Mask m = exposed_mask(p, d); m; m &= m - 1) out.push_back(p.region().vertex(std::countr_zero(m)));
  return out;
}

std::vector<TricolorTriangle> tricolor_triangles(const Partition& p) {
  const TriRegion& region = p.region();
  std::vector<TricolorTriangle> out;
  for (int v = 0; v < region.size(); ++v) {
    const auto& ns = region.nbrs(v);
    for (int k = 0; k < 6; ++k) {
      const int a = ns[static_cast<std::size_t>(k)];
      const int b = ns[static_cast<std::size_t>((k + 1) % 6)];
      // Each face is visited from its three corners; keep the smallest id.
      if (a == kOutside || b == kOutside || a < v || b < v) continue;
      const int lv = p.label(v), la = p.label(a), lb = p.label(b);
      if (lv == la || la == lb || lv == lb) continue;
      TricolorTriangle t;
      t.vertices = {region.vertex(v), region.vertex(a), region.vertex(b)};
      t.labels = {lv, la, lb};
      // (v, a, b) runs clockwise; districts 1,2,3 are clockwise when the
      // label sequence is a rotation of (1,2,3).
      const bool cw = (la == lv % 3 + 1);
      t.chirality = cw ? Chirality::Clockwise : Chirality::Counterclockwise;
      out.push_back(t);
    }
  }
  return out;
}

RebalanceCase case_dispatch(const Partition& p, Perm roles) {
  const TriRegion& region = p.region();
  const Mask p1 = p.district(roles[0]);
  const Mask p2 = p.district(roles[1]);
  const Mask p3 = p.district(roles[2]);
  if (!((p1 >> region.id({1, 1})) & 1U)) throw std::logic_error("case dispatch requires C_1 in role P1");
  const Mask bd = region.boundary_mask();
  bool a = false;
  bool adjacent23 = false;
  for (Mask m = p2; m; m &= m - 1) {
    const int v = std::countr_zero(m);
    if (region.nbr_mask(v) & p3) adjacent23 = true;
    if (((bd >> v) & 1U) && (region.nbr_mask(v) & p3 & bd)) a = true;
  }
  const bool b = (p2 & bd) == 0;
  const bool c = (p3 & bd) == 0;
  const bool d = !adjacent23;
  const int count = int(a) + int(b) + int(c) + int(d);
  if (count != 1)
    throw std::logic_error("case dispatch: " + std::to_string(count) + " cases hold (invalid partition?)");
  if (a) return RebalanceCase::A;
  if (b) return RebalanceCase::B;
  if (c) return RebalanceCase::C;
  return RebalanceCase::D;
}

Partition ground_state(std::shared_ptr<const TriRegion> region, SizeTargets targets, Perm perm) {
  const int n = region->n();
  for (int d = 1; d <= 3; ++d)
    if (targets[d] < n) throw std::invalid_argument("ground state requires every k_i >= n");
  if (targets.total() != region->size()) throw std::invalid_argument("targets must sum to the vertex count");
  Labels labels(static_cast<std::size_t>(region->size()));
  std::size_t pos = 0;
  for (int d : perm)
    for (int c = 0; c < targets[d]; ++c) labels[pos++] = static_cast<std::uint8_t>(d);
  return {std::move(region), targets, std::move(labels)};
}

std::vector<Perm> all_perms() {
  std::vector<Perm> out;
  Perm p{1, 2, 3};
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string perm_string(const Perm& perm) {
  std::string s;
  for (int d : perm) s += static_cast<char>('0' + d);
  return s;
}

Perm parse_perm(const std::string& s) {
  if (s.size() != 3) throw std::invalid_argument("permutation must have three digits: " + s);
  Perm p{};
  for (std::size_t i = 0; i < 3; ++i) p[i] = s[i] - '0';
  Perm sorted = p;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != Perm{1, 2, 3}) throw std::invalid_argument("not a permutation of 123: " + s);
  return p;
}

}  // namespace trirecom
