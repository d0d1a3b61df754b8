#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nanodisc/surface.hpp"
#include "nanodisc/verify.hpp"

namespace nanodisc {

/// DOT rendering of the triangulation with pinned positions: the north pole
/// at the origin, rings spaced by latitude and the south pole outermost.
std::string emit_dot(const SphereTriangulation& sphere);

/// DOT rendering of the fullerene; each vertex sits at the centroid of its
/// triangle in the triangulation layout.
std::string emit_dot(const CubicPlaneGraph& g, const SphereTriangulation& sphere);

/// Rotation system as text: first line the vertex count, then one line
/// "v: w1 w2 ..." per vertex in rotation order. '#' starts a comment.
std::string adjacency_text(const Adjacency& rotation);
Adjacency parse_adjacency_text(std::string_view text);

/// Face list as text: first line the face count, then one face per line.
std::string faces_text(const std::vector<Face>& faces);

/// JSON with a fixed key order; see README for the schema.
std::string certificate_json(const Certificate& cert);
std::string scan_json(const ScanResult& scan);
std::string scan_table(const ScanResult& scan);
std::string input_report_json(const InputReport& report);

}  // namespace nanodisc
