#pragma once

#include <array>
#include <vector>

#include "nanodisc/types.hpp"

namespace nanodisc {

/// Axial coordinate on the 6-regular triangular lattice.
struct AxialCoord {
  int a = 0;
  int b = 0;

  friend bool operator==(const AxialCoord&, const AxialCoord&) = default;
  friend auto operator<=>(const AxialCoord&, const AxialCoord&) = default;

  AxialCoord operator+(const AxialCoord& o) const { return {a + o.a, b + o.b}; }
  AxialCoord operator*(int k) const { return {a * k, b * k}; }
};

/// Neighbour offsets in counterclockwise order starting at angle 0.
inline constexpr std::array<AxialCoord, 6> kLatticeDirections{{
    {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

int hex_distance(AxialCoord p, AxialCoord q);
int hex_norm(AxialCoord p);

/// Counterclockwise-oriented triangle.
using Triangle = std::array<VertexId, 3>;

/// The ball of radius r around a lattice vertex.
///
/// Vertex ids are dense and assigned ring by ring: the centre is 0, then ring
/// k = 1..r counterclockwise. Within ring k the i-th vertex (1-based) is
/// (k,0) + i * (-1,1) for i <= k and so on around the hexagon, so the ring
/// ends at the corner (k,0). `boundary[i-1]` is the boundary vertex u_i and
/// corners sit exactly at indices r, 2r, ..., 6r.
struct Patch {
  int radius = 0;
  VertexId center = 0;
  std::vector<AxialCoord> coords;  // indexed by VertexId
  std::vector<Triangle> triangles;
  std::vector<VertexId> boundary;

  std::size_t vertex_count() const { return coords.size(); }
  /// Vertex ids of ring k in counterclockwise order, k in [0, radius].
  std::vector<VertexId> ring(int k) const;
  /// Neighbour lists of the patch (unordered).
  Adjacency adjacency() const;
};

/// Position of the i-th vertex (1-based, i in [1, 6k]) of the ring of radius k.
AxialCoord ring_position(int k, int i);

Patch build_patch(int r);

}  // namespace nanodisc
