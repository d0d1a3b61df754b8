#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nanodisc {

using VertexId = std::int32_t;

/// Per-vertex neighbour lists. When the graph is embedded, each list is the
/// counterclockwise cyclic order of neighbours (a rotation system).
using Adjacency = std::vector<std::vector<VertexId>>;

enum class ErrorKind {
  InvalidArgument,  // precondition on caller-supplied parameters
  MalformedInput,   // unparseable serialized data
  CorruptStructure, // a combinatorial invariant failed during construction
  Disconnected,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Number of undirected edges, counting each adjacency entry once per side.
inline std::size_t edge_count(const Adjacency& adj) {
  std::size_t darts = 0;
  for (const auto& nb : adj) darts += nb.size();
  return darts / 2;
}

}  // namespace nanodisc
