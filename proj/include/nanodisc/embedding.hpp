#pragma once

#include <optional>

#include "nanodisc/surface.hpp"

namespace nanodisc {

/// Plane graph whose faces are the traced faces of `rotation`.
CubicPlaneGraph embedding_from_rotation(Adjacency rotation);

/// Recovers the plane embedding of a 3-connected planar graph whose faces
/// have at most `max_face` edges. Faces of such a graph are exactly its
/// induced non-separating cycles; these are enumerated, oriented coherently
/// and turned into a rotation system, which is then re-traced to confirm it
/// reproduces the same faces. Returns nullopt if no consistent spherical
/// embedding arises.
std::optional<CubicPlaneGraph> recover_embedding(const Adjacency& graph,
                                                 std::size_t max_face = 6);

/// True if both adjacencies describe the same undirected simple graph.
bool same_edge_set(const Adjacency& lhs, const Adjacency& rhs);

}  // namespace nanodisc
