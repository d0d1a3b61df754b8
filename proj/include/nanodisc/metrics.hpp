#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "nanodisc/surface.hpp"
#include "nanodisc/types.hpp"

namespace nanodisc {

struct DistanceRow {
  VertexId source = 0;
  std::vector<int> dist;
};

struct BfsTree {
  DistanceRow row;
  std::vector<VertexId> parent;  // parent[source] == source

  /// Vertices of the tree path from the source to `target`, source first.
  std::vector<VertexId> path_to(VertexId target) const;
};

/// Unweighted shortest-path distances. Throws Disconnected if some vertex is
/// unreachable from `source`.
DistanceRow bfs(const Adjacency& adj, VertexId source);
BfsTree bfs_tree(const Adjacency& adj, VertexId source);

/// True if |dist[x] - dist[y]| <= 1 across every edge.
bool is_lipschitz(const Adjacency& adj, const DistanceRow& row);

/// All-pairs distances, one BFS per source. Diameters here stay far below
/// the 16-bit range.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Adjacency& adj);

  int operator()(VertexId a, VertexId b) const {
    return dist_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)];
  }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<std::uint16_t> dist_;
};

struct DiameterWitness {
  int value = 0;
  std::pair<VertexId, VertexId> pair{0, 0};
};

/// Exact diameter; the witness is the lexicographically smallest pair (a, b)
/// with a <= b realising it.
DiameterWitness diameter(const Adjacency& adj);
DiameterWitness diameter(const DistanceMatrix& distances);

bool is_connected(const Adjacency& adj);

/// Bridges via DFS low points, each reported as (min, max).
std::vector<std::pair<VertexId, VertexId>> find_bridges(const Adjacency& adj);

struct LatitudeMap {
  std::vector<int> phi;
  std::size_t overlap = 0;  // vertices within r of both poles
};

/// phi(u) = r - dist(n,u) when dist(n,u) <= r, otherwise -r + dist(s,u).
/// Throws CorruptStructure if a vertex is farther than r from both poles or
/// the two branches disagree where both apply.
LatitudeMap latitude(const SphereTriangulation& sphere);

struct MonotoneReport {
  std::size_t checked = 0;
  std::vector<VertexId> failures;

  bool pass() const { return failures.empty(); }
};

/// Every vertex other than the poles must have a neighbour one latitude step
/// north and one step south.
MonotoneReport check_monotone_neighbors(const SphereTriangulation& sphere,
                                        const LatitudeMap& lat);
MonotoneReport check_monotone_neighbors(const SphereTriangulation& sphere);

/// Number of edges with exactly one endpoint on `path`. Throws
/// InvalidArgument unless `path` is a nonempty simple path of `adj`.
int path_cut_size(const Adjacency& adj, std::span<const VertexId> path);

/// Upper bound on the cut around a path with `length` edges when every
/// vertex has degree at most 6.
inline int path_cut_bound(int length) { return 6 + 4 * length; }

}  // namespace nanodisc
