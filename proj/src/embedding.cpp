#include "nanodisc/embedding.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nanodisc {

namespace {

using Edge = std::pair<VertexId, VertexId>;

Edge undirected(VertexId a, VertexId b) { return {std::min(a, b), std::max(a, b)}; }

bool adjacent(const Adjacency& g, VertexId a, VertexId b) {
  return std::find(g[a].begin(), g[a].end(), b) != g[a].end();
}

// Induced cycles of length 3..max_len whose minimum vertex is the start,
// each reported once.
std::vector<Face> induced_cycles(const Adjacency& g, std::size_t max_len) {
  std::vector<Face> cycles;
  Face path;
  std::vector<char> on_path(g.size(), 0);

  auto extend = [&](auto&& self) -> void {
    const VertexId start = path.front();
    const VertexId last = path.back();
    for (VertexId w : g[last]) {
      if (w == start && path.size() >= 3 && path[1] < last) {
        cycles.push_back(path);
        continue;
      }
      if (w <= start || on_path[w] || path.size() >= max_len) continue;
      // w may touch only its predecessor, plus the start if it will close
      // the cycle next; any other touch is a chord.
      bool chord = false;
      for (std::size_t i = 0; i + 1 < path.size() && !chord; ++i)
        if (i != 0 && adjacent(g, w, path[i])) chord = true;
      if (chord) continue;
      if (path.size() >= 2 && adjacent(g, w, start)) {
        // Must close immediately: path + w is then the whole cycle.
        if (path[1] < w) {
          Face cyc = path;
          cyc.push_back(w);
          cycles.push_back(std::move(cyc));
        }
        continue;
      }
      path.push_back(w);
      on_path[w] = 1;
      self(self);
      on_path[w] = 0;
      path.pop_back();
    }
  };

  for (VertexId s = 0; s < static_cast<VertexId>(g.size()); ++s) {
    path = {s};
    on_path[s] = 1;
    extend(extend);
    on_path[s] = 0;
  }
  return cycles;
}

bool separates(const Adjacency& g, const Face& cycle) {
  std::vector<char> removed(g.size(), 0);
  for (VertexId v : cycle) removed[v] = 1;
  VertexId seed = -1;
  std::size_t remaining = 0;
  for (VertexId v = 0; v < static_cast<VertexId>(g.size()); ++v)
    if (!removed[v]) {
      ++remaining;
      if (seed < 0) seed = v;
    }
  if (remaining == 0) return false;
  std::vector<VertexId> stack{seed};
  removed[seed] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (VertexId y : g[x])
      if (!removed[y]) {
        removed[y] = 1;
        ++reached;
        stack.push_back(y);
      }
  }
  return reached != remaining;
}

bool has_dart(const Face& face, VertexId a, VertexId b) {
  for (std::size_t k = 0; k < face.size(); ++k)
    if (face[k] == a && face[(k + 1) % face.size()] == b) return true;
  return false;
}

}  // namespace

CubicPlaneGraph embedding_from_rotation(Adjacency rotation) {
  CubicPlaneGraph g;
  g.faces = faces_from_rotation(rotation);
  g.rotation = std::move(rotation);
  return g;
}

bool same_edge_set(const Adjacency& lhs, const Adjacency& rhs) {
  if (lhs.size() != rhs.size()) return false;
  for (std::size_t v = 0; v < lhs.size(); ++v) {
    std::vector<VertexId> a = lhs[v], b = rhs[v];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  return true;
}

std::optional<CubicPlaneGraph> recover_embedding(const Adjacency& graph, std::size_t max_face) {
  std::vector<Face> faces;
  for (auto& cyc : induced_cycles(graph, max_face))
    if (!separates(graph, cyc)) faces.push_back(std::move(cyc));

  const std::size_t edges = edge_count(graph);
  if (faces.size() + graph.size() != edges + 2) return std::nullopt;

  std::map<Edge, std::vector<std::size_t>> sides;
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (std::size_t k = 0; k < faces[f].size(); ++k)
      sides[undirected(faces[f][k], faces[f][(k + 1) % faces[f].size()])].push_back(f);
  if (sides.size() != edges) return std::nullopt;
  for (const auto& [edge, fs] : sides)
    if (fs.size() != 2) return std::nullopt;

  // Orient faces so every edge is used once in each direction.
  std::vector<int> state(faces.size(), 0);  // 0 unvisited, 1 placed
  for (std::size_t root = 0; root < faces.size(); ++root) {
    if (state[root]) continue;
    state[root] = 1;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      const std::size_t f = stack.back();
      stack.pop_back();
      const Face& face = faces[f];
      for (std::size_t k = 0; k < face.size(); ++k) {
        const VertexId a = face[k], b = face[(k + 1) % face.size()];
        const auto& fs = sides[undirected(a, b)];
        const std::size_t other = fs[0] == f ? fs[1] : fs[0];
        if (!state[other]) {
          if (has_dart(faces[other], a, b))
            std::reverse(faces[other].begin(), faces[other].end());
          state[other] = 1;
          stack.push_back(other);
        } else if (has_dart(faces[other], a, b)) {
          return std::nullopt;  // non-orientable
        }
      }
    }
  }

  // Face p -> v -> q fixes succ_v(p) = q.
  std::vector<std::map<VertexId, VertexId>> succ(graph.size());
  for (const auto& face : faces) {
    const std::size_t len = face.size();
    for (std::size_t k = 0; k < len; ++k) {
      const VertexId p = face[(k + len - 1) % len], v = face[k], q = face[(k + 1) % len];
      if (!succ[v].emplace(p, q).second) return std::nullopt;
    }
  }
  Adjacency rotation(graph.size());
  for (VertexId v = 0; v < static_cast<VertexId>(graph.size()); ++v) {
    if (succ[v].size() != graph[v].size() || succ[v].empty()) return std::nullopt;
    const VertexId start = succ[v].begin()->first;
    VertexId cur = start;
    do {
      rotation[v].push_back(cur);
      cur = succ[v].at(cur);
    } while (cur != start && rotation[v].size() <= graph[v].size());
    if (cur != start || rotation[v].size() != graph[v].size()) return std::nullopt;
  }

  auto traced = embedding_from_rotation(std::move(rotation));
  std::set<Face> expected, got;
  for (const auto& f : faces) expected.insert(canonical_cycle(f));
  for (const auto& f : traced.faces) got.insert(canonical_cycle(f));
  if (expected != got) return std::nullopt;
  return traced;
}

}  // namespace nanodisc
