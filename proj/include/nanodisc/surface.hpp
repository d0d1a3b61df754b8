#pragma once

#include <map>
#include <string>
#include <vector>

#include "nanodisc/lattice.hpp"
#include "nanodisc/types.hpp"

namespace nanodisc {

using Face = std::vector<VertexId>;

/// Two radius-r patches glued along their boundaries with twist t.
///
/// North patch ids are kept as-is; the south interior (hex distance < r from
/// its centre) follows at offset `north_count`, so `south == north_count`.
/// Equator vertices carry their north ids. `rotation[v]` lists neighbours of
/// v counterclockwise as seen from outside the sphere.
struct SphereTriangulation {
  int r = 0;
  int t = 0;
  VertexId north = 0;
  VertexId south = 0;
  VertexId north_count = 0;
  Adjacency rotation;
  std::vector<Triangle> triangles;
  std::vector<VertexId> equator;  // equator[i-1] = u_i
  std::vector<AxialCoord> chart;  // lattice coordinate in the owning patch

  std::size_t vertex_count() const { return rotation.size(); }
  bool in_south_interior(VertexId v) const { return v >= north_count; }
};

/// A plane graph given by a rotation system and its face list. For the
/// nanodisc fullerene, vertex i is triangle i of the triangulation and face j
/// surrounds triangulation vertex j.
struct CubicPlaneGraph {
  Adjacency rotation;
  std::vector<Face> faces;
  int r = 0;
  int t = 0;

  std::size_t vertex_count() const { return rotation.size(); }
};

struct TriangulationReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t triangles = 0;
  std::map<std::size_t, std::size_t> degree_histogram;

  bool euler = false;             // V - E + F == 2
  bool degrees = false;           // twelve of degree 5, the rest degree 6
  bool edge_incidence = false;    // each edge in two triangles, opposite senses
  bool rotation_faces = false;    // dart tracing recovers the triangle set
  bool corners_disjoint = false;  // north and south corners never coincide

  bool all_pass() const {
    return euler && degrees && edge_incidence && rotation_faces && corners_disjoint;
  }
  std::string describe_failures() const;
};

/// Glues two patches of equal radius into D*_{r,t}. Boundary vertex u_i of
/// the north patch is identified with v_{i+t} of the south patch (indices
/// modulo 6r); the south patch is mirrored so the result is oriented.
SphereTriangulation glue(const Patch& north_patch, const Patch& south_patch, int t);

/// Convenience: glue(build_patch(r), build_patch(r), t).
SphereTriangulation build_triangulation(int r, int t);

TriangulationReport validate_triangulation(const SphereTriangulation& sphere);

/// Planar dual of a validated triangulation.
CubicPlaneGraph dualize(const SphereTriangulation& sphere);

/// Traces faces of a rotation system: dart (x,y) is followed by (y, z) where z
/// is the successor of x in the cyclic order at y. Throws CorruptStructure if
/// the rotation is not a permutation of each vertex's neighbours or if the
/// traversal does not partition the darts.
std::vector<Face> faces_from_rotation(const Adjacency& rotation);
inline std::vector<Face> faces_from_rotation(const CubicPlaneGraph& g) {
  return faces_from_rotation(g.rotation);
}

/// Rotation of a cyclic sequence starting at its smallest element.
Face canonical_cycle(const Face& face);

/// Graph on the faces of g; faces sharing an edge are adjacent.
Adjacency face_adjacency(const CubicPlaneGraph& g);

}  // namespace nanodisc
