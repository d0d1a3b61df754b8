#include "nanodisc/surface.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

namespace nanodisc {

namespace {

std::int64_t dart_key(VertexId x, VertexId y) {
  return (static_cast<std::int64_t>(x) << 32) | static_cast<std::uint32_t>(y);
}

// Cyclic neighbour order from counterclockwise triangles: in (a,b,c) the
// neighbour after b around a is c. Returns false if some vertex's wedges do
// not close into a single cycle.
bool rotation_from_triangles(std::size_t vertex_count,
                             const std::vector<Triangle>& triangles,
                             Adjacency& rotation) {
  std::vector<std::unordered_map<VertexId, VertexId>> succ(vertex_count);
  for (const auto& tri : triangles) {
    for (int k = 0; k < 3; ++k) {
      const VertexId a = tri[k], b = tri[(k + 1) % 3], c = tri[(k + 2) % 3];
      if (!succ[a].emplace(b, c).second) return false;
    }
  }
  rotation.assign(vertex_count, {});
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (succ[v].empty()) return false;
    VertexId start = succ[v].begin()->first;
    for (const auto& [from, to] : succ[v]) start = std::min(start, from);
    VertexId cur = start;
    do {
      rotation[v].push_back(cur);
      auto it = succ[v].find(cur);
      if (it == succ[v].end()) return false;
      cur = it->second;
    } while (cur != start && rotation[v].size() <= succ[v].size());
    if (cur != start || rotation[v].size() != succ[v].size()) return false;
  }
  return true;
}

}  // namespace

std::string TriangulationReport::describe_failures() const {
  std::ostringstream out;
  out << "V=" << vertices << " E=" << edges << " F=" << triangles << ";";
  if (!euler) out << " euler";
  if (!degrees) out << " degrees";
  if (!edge_incidence) out << " edge_incidence";
  if (!rotation_faces) out << " rotation_faces";
  if (!corners_disjoint) out << " corners_disjoint";
  return out.str();
}

SphereTriangulation glue(const Patch& north_patch, const Patch& south_patch, int t) {
  const int r = north_patch.radius;
  if (south_patch.radius != r)
    throw Error(ErrorKind::InvalidArgument, "patch radii differ: " + std::to_string(r) +
                                                " vs " + std::to_string(south_patch.radius));
  if (r < 2)
    throw Error(ErrorKind::InvalidArgument, "radius must be at least 2, got " + std::to_string(r));
  if (t < 1 || t > r - 1)
    throw Error(ErrorKind::InvalidArgument, "twist must satisfy 1 <= t <= r-1, got t=" +
                                                std::to_string(t) + " for r=" + std::to_string(r));

  const int perimeter = 6 * r;
  const auto north_count = static_cast<VertexId>(north_patch.vertex_count());

  SphereTriangulation sphere;
  sphere.r = r;
  sphere.t = t;
  sphere.north = north_patch.center;
  sphere.north_count = north_count;
  sphere.equator = north_patch.boundary;
  sphere.chart = north_patch.coords;

  // South interior ids are exactly rings 0..r-1, i.e. [0, 3r(r-1)], so they
  // map to a contiguous block after the north patch.
  std::vector<VertexId> south_id(south_patch.vertex_count(), -1);
  for (VertexId v = 0; v < static_cast<VertexId>(south_patch.vertex_count()); ++v) {
    if (hex_norm(south_patch.coords[v]) < r) {
      south_id[v] = north_count + v;
      sphere.chart.push_back(south_patch.coords[v]);
    }
  }
  // v_j is identified with u_{j-t}.
  for (int j = 1; j <= perimeter; ++j) {
    const int i = ((j - t - 1) % perimeter + perimeter) % perimeter;
    south_id[south_patch.boundary[j - 1]] = north_patch.boundary[i];
  }
  sphere.south = south_id[south_patch.center];

  sphere.triangles = north_patch.triangles;
  for (const auto& tri : south_patch.triangles)
    sphere.triangles.push_back({south_id[tri[0]], south_id[tri[2]], south_id[tri[1]]});

  if (!rotation_from_triangles(sphere.chart.size(), sphere.triangles, sphere.rotation))
    throw Error(ErrorKind::CorruptStructure,
                "glued complex has a vertex whose triangles do not form a single disc");

  const auto report = validate_triangulation(sphere);
  if (!report.all_pass())
    throw Error(ErrorKind::CorruptStructure,
                "glued complex is not a valid sphere triangulation: " + report.describe_failures());
  return sphere;
}

SphereTriangulation build_triangulation(int r, int t) {
  if (r < 2)
    throw Error(ErrorKind::InvalidArgument, "radius must be at least 2, got " + std::to_string(r));
  const Patch patch = build_patch(r);
  return glue(patch, patch, t);
}

TriangulationReport validate_triangulation(const SphereTriangulation& sphere) {
  TriangulationReport report;
  report.vertices = sphere.vertex_count();
  report.edges = edge_count(sphere.rotation);
  report.triangles = sphere.triangles.size();

  report.euler = static_cast<long long>(report.vertices) - static_cast<long long>(report.edges) +
                     static_cast<long long>(report.triangles) ==
                 2;

  for (const auto& nb : sphere.rotation) ++report.degree_histogram[nb.size()];
  {
    std::size_t fives = 0, sixes = 0;
    if (auto it = report.degree_histogram.find(5); it != report.degree_histogram.end())
      fives = it->second;
    if (auto it = report.degree_histogram.find(6); it != report.degree_histogram.end())
      sixes = it->second;
    report.degrees = fives == 12 && fives + sixes == report.vertices;
  }

  // Each edge must be used once in each direction across the triangle set
  // and must be an edge of the rotation system.
  {
    std::unordered_map<std::int64_t, int> directed;
    bool ok = true;
    for (const auto& tri : sphere.triangles) {
      for (int k = 0; k < 3; ++k) {
        const VertexId a = tri[k], b = tri[(k + 1) % 3];
        if (a < 0 || b < 0 || a >= static_cast<VertexId>(report.vertices) ||
            b >= static_cast<VertexId>(report.vertices) || a == b) {
          ok = false;
          continue;
        }
        if (++directed[dart_key(a, b)] != 1) ok = false;
      }
    }
    for (VertexId v = 0; ok && v < static_cast<VertexId>(report.vertices); ++v) {
      for (VertexId w : sphere.rotation[v]) {
        auto fwd = directed.find(dart_key(v, w));
        if (fwd == directed.end() || fwd->second != 1) {
          ok = false;
          break;
        }
      }
    }
    report.edge_incidence = ok && directed.size() == 2 * report.edges;
  }

  try {
    const auto faces = faces_from_rotation(sphere.rotation);
    std::multiset<std::array<VertexId, 3>> traced, listed;
    bool triangular = true;
    for (const auto& f : faces) {
      if (f.size() != 3) {
        triangular = false;
        break;
      }
      std::array<VertexId, 3> key{f[0], f[1], f[2]};
      std::sort(key.begin(), key.end());
      traced.insert(key);
    }
    for (auto tri : sphere.triangles) {
      std::sort(tri.begin(), tri.end());
      listed.insert(tri);
    }
    report.rotation_faces = triangular && traced == listed;
  } catch (const Error&) {
    report.rotation_faces = false;
  }

  const int r = sphere.r;
  const int perimeter = 6 * r;
  if (r >= 1 && static_cast<int>(sphere.equator.size()) == perimeter) {
    std::set<VertexId> north_corners, south_corners;
    for (int k = 1; k <= 6; ++k) {
      north_corners.insert(sphere.equator[k * r - 1]);
      const int i = ((k * r - sphere.t - 1) % perimeter + perimeter) % perimeter;
      south_corners.insert(sphere.equator[i]);
    }
    bool disjoint = north_corners.size() == 6 && south_corners.size() == 6;
    for (VertexId v : north_corners) disjoint = disjoint && !south_corners.contains(v);
    // The twelve degree-5 vertices are exactly these corners.
    std::set<VertexId> fives;
    for (VertexId v = 0; v < static_cast<VertexId>(report.vertices); ++v)
      if (sphere.rotation[v].size() == 5) fives.insert(v);
    std::set<VertexId> corners = north_corners;
    corners.insert(south_corners.begin(), south_corners.end());
    report.corners_disjoint = disjoint && fives == corners;
  }
  return report;
}

CubicPlaneGraph dualize(const SphereTriangulation& sphere) {
  const auto report = validate_triangulation(sphere);
  if (!report.all_pass())
    throw Error(ErrorKind::CorruptStructure,
                "refusing to dualize an invalid triangulation: " + report.describe_failures());

  std::unordered_map<std::int64_t, VertexId> owner;  // directed edge -> triangle
  owner.reserve(sphere.triangles.size() * 3);
  for (VertexId i = 0; i < static_cast<VertexId>(sphere.triangles.size()); ++i) {
    const auto& tri = sphere.triangles[i];
    for (int k = 0; k < 3; ++k) owner.emplace(dart_key(tri[k], tri[(k + 1) % 3]), i);
  }

  CubicPlaneGraph dual;
  dual.r = sphere.r;
  dual.t = sphere.t;
  dual.rotation.resize(sphere.triangles.size());
  for (VertexId i = 0; i < static_cast<VertexId>(sphere.triangles.size()); ++i) {
    const auto& [a, b, c] = sphere.triangles[i];
    dual.rotation[i] = {owner.at(dart_key(b, a)), owner.at(dart_key(c, b)),
                        owner.at(dart_key(a, c))};
  }

  // Face around v lists the triangles at v in the order face tracing visits
  // them, which is clockwise around v.
  dual.faces.resize(sphere.vertex_count());
  for (VertexId v = 0; v < static_cast<VertexId>(sphere.vertex_count()); ++v) {
    const auto& nb = sphere.rotation[v];
    auto& face = dual.faces[v];
    for (auto it = nb.rbegin(); it != nb.rend(); ++it) face.push_back(owner.at(dart_key(v, *it)));
  }
  return dual;
}

std::vector<Face> faces_from_rotation(const Adjacency& rotation) {
  const auto n = static_cast<VertexId>(rotation.size());
  std::vector<std::size_t> offset(rotation.size() + 1, 0);
  for (VertexId v = 0; v < n; ++v) {
    const auto& nb = rotation[v];
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] < 0 || nb[i] >= n || nb[i] == v)
        throw Error(ErrorKind::CorruptStructure,
                    "rotation at vertex " + std::to_string(v) + " has an invalid neighbour");
      for (std::size_t j = 0; j < i; ++j)
        if (nb[j] == nb[i])
          throw Error(ErrorKind::CorruptStructure,
                      "rotation at vertex " + std::to_string(v) + " repeats a neighbour");
    }
    offset[v + 1] = offset[v] + nb.size();
  }

  auto position = [&](VertexId at, VertexId of) -> std::size_t {
    const auto& nb = rotation[at];
    auto it = std::find(nb.begin(), nb.end(), of);
    if (it == nb.end())
      throw Error(ErrorKind::CorruptStructure, "dart " + std::to_string(of) + "->" +
                                                   std::to_string(at) + " has no reverse dart");
    return static_cast<std::size_t>(it - nb.begin());
  };

  std::vector<char> seen(offset.back(), 0);
  std::vector<Face> faces;
  for (VertexId v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < rotation[v].size(); ++i) {
      if (seen[offset[v] + i]) continue;
      Face face;
      VertexId x = v;
      std::size_t xi = i;
      while (!seen[offset[x] + xi]) {
        seen[offset[x] + xi] = 1;
        face.push_back(x);
        const VertexId y = rotation[x][xi];
        const std::size_t back = position(y, x);
        xi = (back + 1) % rotation[y].size();
        x = y;
      }
      if (x != v || xi != i)
        throw Error(ErrorKind::CorruptStructure,
                    "face traversal starting at vertex " + std::to_string(v) +
                        " re-entered a used dart: darts are not partitioned");
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

Face canonical_cycle(const Face& face) {
  if (face.empty()) return face;
  const auto pivot = std::min_element(face.begin(), face.end());
  Face out(pivot, face.end());
  out.insert(out.end(), face.begin(), pivot);
  return out;
}

Adjacency face_adjacency(const CubicPlaneGraph& g) {
  std::unordered_map<std::int64_t, std::vector<VertexId>> sides;
  for (VertexId f = 0; f < static_cast<VertexId>(g.faces.size()); ++f) {
    const auto& face = g.faces[f];
    for (std::size_t k = 0; k < face.size(); ++k) {
      const VertexId a = face[k], b = face[(k + 1) % face.size()];
      sides[dart_key(std::min(a, b), std::max(a, b))].push_back(f);
    }
  }
  Adjacency adj(g.faces.size());
  for (VertexId f = 0; f < static_cast<VertexId>(g.faces.size()); ++f) {
    const auto& face = g.faces[f];
    for (std::size_t k = 0; k < face.size(); ++k) {
      const VertexId a = face[k], b = face[(k + 1) % face.size()];
      for (VertexId other : sides[dart_key(std::min(a, b), std::max(a, b))]) {
        if (other == f) continue;
        if (std::find(adj[f].begin(), adj[f].end(), other) == adj[f].end())
          adj[f].push_back(other);
      }
    }
  }
  return adj;
}

}  // namespace nanodisc
