// trirecom: triangular region geometry.
#include "trirecom/lattice.hpp"

#include <stdexcept>
#include <string>

namespace trirecom {

TriRegion::TriRegion(int n) : n_(n), size_(n * (n + 1) / 2) {
  if (n < 3 || n > kMaxSide) {
    throw std::invalid_argument("side length must be in [3, " + std::to_string(kMaxSide) +
                                "], got " + std::to_string(n));
  }
  verts_.reserve(static_cast<std::size_t>(size_));
  for (int c = 1; c <= n; ++c)
    for (int r = 1; r <= c; ++r) verts_.push_back({c, r});
  nbrs_.resize(static_cast<std::size_t>(size_));
  nbr_mask_.assign(static_cast<std::size_t>(size_), 0);
  for (int id = 0; id < size_; ++id) {
    const Vertex v = verts_[static_cast<std::size_t>(id)];
    all_ |= bit(id);
    for (int k = 0; k < 6; ++k) {
      const Vertex w{v.col + kDirOffset[k][0], v.row + kDirOffset[k][1]};
      const int wid = contains(w) ? this->id(w) : kOutside;
      nbrs_[static_cast<std::size_t>(id)][static_cast<std::size_t>(k)] = wid;
      if (wid == kOutside)
        boundary_ |= bit(id);
      else
        nbr_mask_[static_cast<std::size_t>(id)] |= bit(wid);
    }
  }
  // Left-top edge runs from (1,1) to (n,1); the right edge from (n,1) down to
  // (n,n); the bottom edge (row == col) back up to (1,1).
  for (int c = 1; c <= n; ++c) bd_cycle_.push_back(id({c, 1}));
  for (int r = 2; r <= n; ++r) bd_cycle_.push_back(id({n, r}));
  for (int c = n - 1; c >= 2; --c) bd_cycle_.push_back(id({c, c}));
}

std::array<NeighborSlot, 6> TriRegion::neighbors_cyclic(Vertex v) const {
  std::array<NeighborSlot, 6> out{};
  const auto& ns = nbrs(id(v));
  for (int k = 0; k < 6; ++k) {
    out[static_cast<std::size_t>(k)].position = k;
    const int w = ns[static_cast<std::size_t>(k)];
    if (w != kOutside) out[static_cast<std::size_t>(k)].vertex = vertex(w);
  }
  return out;
}

std::vector<Vertex> TriRegion::boundary() const {
  std::vector<Vertex> out;
  for (int id = 0; id < size_; ++id)
    if (on_boundary(id)) out.push_back(vertex(id));
  return out;
}

std::vector<Vertex> TriRegion::columns(int i) const {
  std::vector<Vertex> out;
  if (i < 1 || i > n_) return out;
  for (int r = 1; r <= i; ++r) out.push_back({i, r});
  return out;
}

Mask TriRegion::column_mask(int i) const {
  Mask m = 0;
  for (const Vertex& v : columns(i)) m |= bit(id(v));
  return m;
}

Mask TriRegion::columns_upto(int i) const {
  if (i <= 0) return 0;
  if (i >= n_) return all_;
  const int count = i * (i + 1) / 2;
  return (Mask{1} << count) - 1;
}

Mask TriRegion::corner_mask() const {
  Mask m = 0;
  for (const Vertex& v : corners()) m |= bit(id(v));
  return m;
}

std::optional<Vertex> TriRegion::line_step(Vertex v, Dir d) const {
  const int k = static_cast<int>(d);
  const Vertex w{v.col + kDirOffset[k][0], v.row + kDirOffset[k][1]};
  if (!contains(w)) return std::nullopt;
  return w;
}

TriRegion build_region(int n) { return TriRegion(n); }

int direction_between(const TriRegion& region, int a, int b) {
  const auto& ns = region.nbrs(a);
  for (int k = 0; k < 6; ++k)
    if (ns[static_cast<std::size_t>(k)] == b) return k;
  return -1;
}

}  // namespace trirecom
