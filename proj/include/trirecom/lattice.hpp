// trirecom: triangular region geometry.
//
// Vertices of the side-n triangle are addressed as (col,row) with
// 1 <= row <= col <= n. Column 1 holds the single leftmost vertex and the
// right edge of the triangle is vertical. Internally every vertex also has a
// dense id equal to ordering_index - 1, so districts fit in a 64-bit mask.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace trirecom {

using Mask = std::uint64_t;

/// Largest supported side length (n(n+1)/2 must fit in a 64-bit mask).
inline constexpr int kMaxSide = 10;

/// Marker id for a neighbor slot that lies outside the region.
inline constexpr int kOutside = -1;

struct Vertex {
  int col = 0;
  int row = 0;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// The six lattice directions, listed clockwise; also the neighbor slot order.
enum class Dir : int { Up = 0, UpRight, DownRight, Down, DownLeft, UpLeft };

inline constexpr std::array<std::array<int, 2>, 6> kDirOffset{{
    {0, -1}, {1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}}};

/// 1-based position of v in the left-to-right, top-to-bottom ordering.
constexpr int ordering_index(Vertex v) { return v.col * (v.col - 1) / 2 + v.row; }

inline Mask bit(int id) { return Mask{1} << id; }

/// One slot of a cyclic neighborhood: an in-region vertex or Outside.
struct NeighborSlot {
  int position = 0;
  std::optional<Vertex> vertex;  // nullopt means Outside
  bool outside() const { return !vertex.has_value(); }
};

class TriRegion {
 public:
  /// Throws std::invalid_argument unless 3 <= n <= kMaxSide.
  explicit TriRegion(int n);

  int n() const { return n_; }
  int size() const { return size_; }
  Mask all() const { return all_; }

  bool contains(Vertex v) const { return v.col >= 1 && v.col <= n_ && v.row >= 1 && v.row <= v.col; }
  int id(Vertex v) const { return ordering_index(v) - 1; }
  Vertex vertex(int id) const { return verts_[static_cast<std::size_t>(id)]; }

  /// Neighbor ids in clockwise slot order; kOutside for slots outside T.
  const std::array<int, 6>& nbrs(int id) const { return nbrs_[static_cast<std::size_t>(id)]; }
  Mask nbr_mask(int id) const { return nbr_mask_[static_cast<std::size_t>(id)]; }
  bool adjacent(int a, int b) const { return (nbr_mask(a) >> b) & 1U; }

  std::array<NeighborSlot, 6> neighbors_cyclic(Vertex v) const;

  bool on_boundary(int id) const { return (boundary_ >> id) & 1U; }
  Mask boundary_mask() const { return boundary_; }
  std::vector<Vertex> boundary() const;

  /// Vertices of column i (top to bottom); empty outside [1, n].
  std::vector<Vertex> columns(int i) const;
  Mask column_mask(int i) const;
  /// Union of columns 1..i.
  Mask columns_upto(int i) const;

  std::array<Vertex, 3> corners() const { return {Vertex{1, 1}, Vertex{n_, 1}, Vertex{n_, n_}}; }
  Mask corner_mask() const;

  /// Boundary vertices in cyclic order (left-top edge, right edge, bottom edge).
  const std::vector<int>& boundary_cycle() const { return bd_cycle_; }

  std::optional<Vertex> line_step(Vertex v, Dir d) const;
  /// Id of the neighbor in direction d, or kOutside.
  int step(int id, Dir d) const { return nbrs(id)[static_cast<std::size_t>(d)]; }

 private:
  int n_;
  int size_;
  Mask all_ = 0;
  Mask boundary_ = 0;
  std::vector<Vertex> verts_;
  std::vector<std::array<int, 6>> nbrs_;
  std::vector<Mask> nbr_mask_;
  std::vector<int> bd_cycle_;
};

TriRegion build_region(int n);

/// Index of the lattice direction from a to b, or -1 if not adjacent.
int direction_between(const TriRegion& region, int a, int b);

}  // namespace trirecom
