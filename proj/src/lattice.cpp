#include "nanodisc/lattice.hpp"

#include <cstdlib>
#include <map>
#include <string>

namespace nanodisc {

int hex_norm(AxialCoord p) {
  return (std::abs(p.a) + std::abs(p.b) + std::abs(p.a + p.b)) / 2;
}

int hex_distance(AxialCoord p, AxialCoord q) {
  return hex_norm({p.a - q.a, p.b - q.b});
}

AxialCoord ring_position(int k, int i) {
  if (k == 0) return {0, 0};
  const int side = (i - 1) / k;
  const int step = i - side * k;
  return kLatticeDirections[side] * k + kLatticeDirections[(side + 2) % 6] * step;
}

namespace {

VertexId ring_base(int k) { return k == 0 ? 0 : 1 + 3 * k * (k - 1); }

}  // namespace

std::vector<VertexId> Patch::ring(int k) const {
  if (k == 0) return {center};
  std::vector<VertexId> ids(6 * k);
  for (int i = 0; i < 6 * k; ++i) ids[i] = ring_base(k) + i;
  return ids;
}

Adjacency Patch::adjacency() const {
  Adjacency adj(coords.size());
  auto link = [&](VertexId x, VertexId y) {
    for (VertexId z : adj[x])
      if (z == y) return;
    adj[x].push_back(y);
    adj[y].push_back(x);
  };
  for (const auto& tri : triangles) {
    link(tri[0], tri[1]);
    link(tri[1], tri[2]);
    link(tri[2], tri[0]);
  }
  return adj;
}

Patch build_patch(int r) {
  if (r <= 0)
    throw Error(ErrorKind::InvalidArgument,
                "patch radius must be positive, got " + std::to_string(r));

  Patch patch;
  patch.radius = r;
  patch.center = 0;
  patch.coords.reserve(3 * r * r + 3 * r + 1);
  patch.coords.push_back({0, 0});
  for (int k = 1; k <= r; ++k)
    for (int i = 1; i <= 6 * k; ++i) patch.coords.push_back(ring_position(k, i));

  std::map<AxialCoord, VertexId> index;
  for (VertexId v = 0; v < static_cast<VertexId>(patch.coords.size()); ++v)
    index.emplace(patch.coords[v], v);

  // Every lattice triangle is {p, p+(1,0), p+(0,1)} or {p, p+(0,1), p+(-1,1)}
  // for a unique p; both are listed counterclockwise.
  auto lookup = [&](AxialCoord c) -> const VertexId* {
    auto it = index.find(c);
    return it == index.end() ? nullptr : &it->second;
  };
  for (VertexId v = 0; v < static_cast<VertexId>(patch.coords.size()); ++v) {
    const AxialCoord p = patch.coords[v];
    for (int shape = 0; shape < 2; ++shape) {
      const auto* x = lookup(p + kLatticeDirections[shape]);
      const auto* y = lookup(p + kLatticeDirections[shape + 1]);
      if (x && y) patch.triangles.push_back({v, *x, *y});
    }
  }

  patch.boundary = patch.ring(r);
  return patch;
}

}  // namespace nanodisc
