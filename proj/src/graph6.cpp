#include "nanodisc/graph6.hpp"

#include <algorithm>
#include <cstdint>

namespace nanodisc {

namespace {

constexpr std::uint64_t kMaxOrder = (std::uint64_t{1} << 36) - 1;

void put_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
    return;
  }
  const int groups = n <= 258047 ? 3 : 6;
  out.append(groups == 3 ? "~" : "~~");
  for (int g = groups - 1; g >= 0; --g) out.push_back(static_cast<char>(63 + ((n >> (6 * g)) & 63)));
}

}  // namespace

std::string encode_graph6(const Adjacency& graph) {
  const std::uint64_t n = graph.size();
  if (n > kMaxOrder) throw Error(ErrorKind::InvalidArgument, "graph too large for graph6");

  // Column-major upper triangle: bit index of (i, j), i < j, is j(j-1)/2 + i.
  const std::uint64_t bits = n * (n - (n > 0)) / 2;
  std::vector<std::uint8_t> matrix(bits, 0);
  for (std::uint64_t v = 0; v < n; ++v) {
    for (VertexId w : graph[v]) {
      if (w < 0 || static_cast<std::uint64_t>(w) >= n)
        throw Error(ErrorKind::InvalidArgument, "neighbour out of range");
      if (static_cast<std::uint64_t>(w) == v)
        throw Error(ErrorKind::InvalidArgument, "graph6 cannot encode loops");
      const auto& back = graph[w];
      if (std::count(back.begin(), back.end(), static_cast<VertexId>(v)) != 1 ||
          std::count(graph[v].begin(), graph[v].end(), w) != 1)
        throw Error(ErrorKind::InvalidArgument,
                    "graph6 needs a simple symmetric graph (edge " + std::to_string(v) + "-" +
                        std::to_string(w) + ")");
      const std::uint64_t i = std::min<std::uint64_t>(v, w), j = std::max<std::uint64_t>(v, w);
      matrix[j * (j - 1) / 2 + i] = 1;
    }
  }

  std::string out;
  put_size(out, n);
  for (std::uint64_t k = 0; k < bits; k += 6) {
    int byte = 0;
    for (std::uint64_t b = 0; b < 6; ++b) byte = (byte << 1) | (k + b < bits ? matrix[k + b] : 0);
    out.push_back(static_cast<char>(63 + byte));
  }
  return out;
}

Adjacency decode_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());

  auto value = [](char c) { return static_cast<int>(static_cast<unsigned char>(c)) - 63; };
  auto printable = [&](char c) { return value(c) >= 0 && value(c) <= 63; };

  if (text.empty()) throw Graph6Error(Graph6Fault::BadSizePrefix, "graph6: empty input");
  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (text[0] == '~') {
    const bool wide = text.size() > 1 && text[1] == '~';
    const std::size_t digits = wide ? 6 : 3;
    pos = wide ? 2 : 1;
    if (text.size() < pos + digits)
      throw Graph6Error(Graph6Fault::BadSizePrefix, "graph6: size prefix is cut short");
    for (std::size_t k = 0; k < digits; ++k, ++pos) {
      if (!printable(text[pos]))
        throw Graph6Error(Graph6Fault::BadSizePrefix, "graph6: invalid byte in size prefix");
      n = (n << 6) | static_cast<std::uint64_t>(value(text[pos]));
    }
  } else {
    if (!printable(text[0]))
      throw Graph6Error(Graph6Fault::BadSizePrefix, "graph6: invalid size byte");
    n = static_cast<std::uint64_t>(value(text[0]));
    pos = 1;
  }

  const std::uint64_t bits = n * (n - (n > 0)) / 2;
  const std::uint64_t need = (bits + 5) / 6;
  const std::uint64_t have = text.size() - pos;
  for (std::size_t k = pos; k < text.size() && k < pos + need; ++k)
    if (!printable(text[k]))
      throw Graph6Error(Graph6Fault::NonPrintable,
                        "graph6: byte " + std::to_string(k) + " is outside the printable range");
  if (have < need)
    throw Graph6Error(Graph6Fault::Truncated, "graph6: expected " + std::to_string(need) +
                                                  " data bytes, found " + std::to_string(have));
  if (have > need)
    throw Graph6Error(Graph6Fault::TrailingData,
                      "graph6: " + std::to_string(have - need) + " bytes after the bit matrix");

  Adjacency graph(n);
  std::uint64_t i = 0, j = 1;
  for (std::uint64_t k = 0; k < bits; ++k) {
    const int byte = value(text[pos + k / 6]);
    if ((byte >> (5 - k % 6)) & 1) {
      graph[i].push_back(static_cast<VertexId>(j));
      graph[j].push_back(static_cast<VertexId>(i));
    }
    if (++i == j) {
      i = 0;
      ++j;
    }
  }
  for (auto& nb : graph) std::sort(nb.begin(), nb.end());
  return graph;
}

}  // namespace nanodisc
