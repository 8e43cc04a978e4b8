#pragma once

// graph6: one printable ASCII line per graph. The header is n + 63 for n <= 62,
// otherwise '~' followed by n in three 6-bit groups. The body packs the upper
// triangle column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...) into 6-bit
// groups, most significant bit first, zero padded, each group offset by 63.

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "edgebetti/graph.hpp"

namespace edgebetti {

inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (((g.row(j) >> i) & 1U) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

inline Graph from_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw input_error("empty graph6 string");
  for (char c : text)
    if (c < 63 || c > 126) throw input_error("graph6 contains a byte outside 63..126");

  std::size_t pos = 0;
  int n = 0;
  if (text[0] != '~') {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') throw capacity_error("graph6 order exceeds 64 vertices");
    n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
    pos = 4;
  }
  if (n > max_vertices) throw capacity_error("graph6 order exceeds 64 vertices");

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t groups = (bits + 5) / 6;
  if (text.size() - pos != groups)
    throw input_error("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                      std::to_string(groups));

  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) {
        adj[i] |= VertexSet::bit(j);
        adj[j] |= VertexSet::bit(i);
      }
    }
  }
  if (bits % 6 != 0) {
    const int last = text.back() - 63;
    if (last & ((1 << (6 - bits % 6)) - 1)) throw input_error("graph6 padding bits are not zero");
  }
  return Graph::trusted(n, std::move(adj));
}

inline void write_graph6_lines(std::ostream& out, std::span<const Graph> graphs) {
  for (const auto& g : graphs) out << to_graph6(g) << '\n';
}

// Blank lines are skipped.
inline std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(from_graph6(line));
  }
  return out;
}

}  // namespace edgebetti
