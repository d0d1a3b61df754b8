#include "nanodisc/metrics.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace nanodisc {

namespace {

void check_vertex(const Adjacency& adj, VertexId v) {
  if (v < 0 || static_cast<std::size_t>(v) >= adj.size())
    throw Error(ErrorKind::InvalidArgument, "vertex " + std::to_string(v) + " out of range");
}

}  // namespace

std::vector<VertexId> BfsTree::path_to(VertexId target) const {
  std::vector<VertexId> path{target};
  while (path.back() != row.source) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

BfsTree bfs_tree(const Adjacency& adj, VertexId source) {
  check_vertex(adj, source);
  BfsTree tree;
  tree.row.source = source;
  tree.row.dist.assign(adj.size(), -1);
  tree.parent.assign(adj.size(), -1);
  tree.row.dist[source] = 0;
  tree.parent[source] = source;

  std::vector<VertexId> queue;
  queue.reserve(adj.size());
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId x = queue[head];
    for (VertexId y : adj[x]) {
      if (tree.row.dist[y] >= 0) continue;
      tree.row.dist[y] = tree.row.dist[x] + 1;
      tree.parent[y] = x;
      queue.push_back(y);
    }
  }
  if (queue.size() != adj.size())
    throw Error(ErrorKind::Disconnected,
                "graph is disconnected: " + std::to_string(adj.size() - queue.size()) +
                    " vertices unreachable from " + std::to_string(source));
  return tree;
}

DistanceRow bfs(const Adjacency& adj, VertexId source) { return bfs_tree(adj, source).row; }

bool is_lipschitz(const Adjacency& adj, const DistanceRow& row) {
  for (std::size_t x = 0; x < adj.size(); ++x)
    for (VertexId y : adj[x])
      if (std::abs(row.dist[x] - row.dist[y]) > 1) return false;
  return true;
}

DistanceMatrix::DistanceMatrix(const Adjacency& adj) : n_(adj.size()), dist_(n_ * n_) {
  for (VertexId s = 0; s < static_cast<VertexId>(n_); ++s) {
    const auto row = bfs(adj, s);
    std::copy(row.dist.begin(), row.dist.end(), dist_.begin() + static_cast<std::ptrdiff_t>(s * n_));
  }
}

DiameterWitness diameter(const DistanceMatrix& distances) {
  DiameterWitness best;
  const auto n = static_cast<VertexId>(distances.size());
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a; b < n; ++b)
      if (distances(a, b) > best.value) best = {distances(a, b), {a, b}};
  return best;
}

DiameterWitness diameter(const Adjacency& adj) {
  DiameterWitness best;
  for (VertexId a = 0; a < static_cast<VertexId>(adj.size()); ++a) {
    const auto row = bfs(adj, a);
    for (VertexId b = a; b < static_cast<VertexId>(adj.size()); ++b)
      if (row.dist[b] > best.value) best = {row.dist[b], {a, b}};
  }
  return best;
}

bool is_connected(const Adjacency& adj) {
  if (adj.empty()) return true;
  try {
    bfs(adj, 0);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::vector<std::pair<VertexId, VertexId>> find_bridges(const Adjacency& adj) {
  const auto n = static_cast<VertexId>(adj.size());
  std::vector<int> order(adj.size(), -1), low(adj.size(), 0);
  std::vector<std::pair<VertexId, VertexId>> bridges;
  int clock = 0;

  struct Frame {
    VertexId v;
    VertexId parent;
    std::size_t next;
    bool parent_skipped;  // tolerate one parallel copy of the tree edge
  };
  std::vector<Frame> stack;
  for (VertexId root = 0; root < n; ++root) {
    if (order[root] >= 0) continue;
    order[root] = low[root] = clock++;
    stack.push_back({root, -1, 0, false});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        const VertexId w = adj[f.v][f.next++];
        if (w == f.parent && !f.parent_skipped) {
          f.parent_skipped = true;
          continue;
        }
        if (order[w] >= 0) {
          low[f.v] = std::min(low[f.v], order[w]);
        } else {
          order[w] = low[w] = clock++;
          stack.push_back({w, f.v, 0, false});
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (done.parent >= 0) {
        low[done.parent] = std::min(low[done.parent], low[done.v]);
        if (low[done.v] > order[done.parent])
          bridges.emplace_back(std::min(done.v, done.parent), std::max(done.v, done.parent));
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

LatitudeMap latitude(const SphereTriangulation& sphere) {
  const int r = sphere.r;
  const auto from_north = bfs(sphere.rotation, sphere.north);
  const auto from_south = bfs(sphere.rotation, sphere.south);

  LatitudeMap lat;
  lat.phi.resize(sphere.vertex_count());
  for (std::size_t v = 0; v < sphere.vertex_count(); ++v) {
    const int dn = from_north.dist[v];
    const int ds = from_south.dist[v];
    if (dn <= r && ds <= r) {
      ++lat.overlap;
      if (r - dn != -r + ds)
        throw Error(ErrorKind::CorruptStructure,
                    "latitude branches disagree at vertex " + std::to_string(v));
    }
    if (dn <= r) {
      lat.phi[v] = r - dn;
    } else if (ds <= r) {
      lat.phi[v] = -r + ds;
    } else {
      throw Error(ErrorKind::CorruptStructure,
                  "vertex " + std::to_string(v) + " is farther than r from both poles");
    }
  }
  return lat;
}

MonotoneReport check_monotone_neighbors(const SphereTriangulation& sphere,
                                        const LatitudeMap& lat) {
  MonotoneReport report;
  for (VertexId v = 0; v < static_cast<VertexId>(sphere.vertex_count()); ++v) {
    if (v == sphere.north || v == sphere.south) continue;
    ++report.checked;
    bool north = false, south = false;
    for (VertexId w : sphere.rotation[v]) {
      north = north || lat.phi[w] == lat.phi[v] + 1;
      south = south || lat.phi[w] == lat.phi[v] - 1;
    }
    if (!north || !south) report.failures.push_back(v);
  }
  return report;
}

MonotoneReport check_monotone_neighbors(const SphereTriangulation& sphere) {
  return check_monotone_neighbors(sphere, latitude(sphere));
}

int path_cut_size(const Adjacency& adj, std::span<const VertexId> path) {
  if (path.empty()) throw Error(ErrorKind::InvalidArgument, "path is empty");
  std::unordered_set<VertexId> on_path;
  for (std::size_t i = 0; i < path.size(); ++i) {
    check_vertex(adj, path[i]);
    if (!on_path.insert(path[i]).second)
      throw Error(ErrorKind::InvalidArgument,
                  "path repeats vertex " + std::to_string(path[i]));
    if (i > 0) {
      const auto& nb = adj[path[i - 1]];
      if (std::find(nb.begin(), nb.end(), path[i]) == nb.end())
        throw Error(ErrorKind::InvalidArgument, "path step " + std::to_string(path[i - 1]) +
                                                    "->" + std::to_string(path[i]) +
                                                    " is not an edge");
    }
  }
  int cut = 0;
  for (VertexId v : path)
    for (VertexId w : adj[v])
      if (!on_path.contains(w)) ++cut;
  return cut;
}

}  // namespace nanodisc
