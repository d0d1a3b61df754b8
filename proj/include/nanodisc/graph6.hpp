#pragma once

#include <string>
#include <string_view>

#include "nanodisc/types.hpp"

namespace nanodisc {

enum class Graph6Fault {
  BadSizePrefix,
  NonPrintable,
  Truncated,
  TrailingData,
};

class Graph6Error : public Error {
 public:
  Graph6Error(Graph6Fault fault, const std::string& what)
      : Error(ErrorKind::MalformedInput, what), fault_(fault) {}

  Graph6Fault fault() const noexcept { return fault_; }

 private:
  Graph6Fault fault_;
};

/// graph6 encoding without the ">>graph6<<" header: the size N(n) followed by
/// the upper triangle x(0,1), x(0,2), x(1,2), x(0,3), ... packed six bits per
/// byte, most significant first, each byte offset by 63. Throws
/// InvalidArgument for loops, parallel edges or asymmetric adjacency.
std::string encode_graph6(const Adjacency& graph);

/// Inverse of encode_graph6; accepts an optional ">>graph6<<" header.
/// Neighbour lists come out sorted. Throws Graph6Error.
Adjacency decode_graph6(std::string_view text);

}  // namespace nanodisc
