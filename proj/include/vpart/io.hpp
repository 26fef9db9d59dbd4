#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "vpart/graph.hpp"

namespace vpart {

enum class GraphFormat { Graph6, EdgeList, Dimacs };

inline std::optional<GraphFormat> parse_format_name(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
  if (name == "edge-list" || name == "edgelist" || name == "edges") return GraphFormat::EdgeList;
  if (name == "dimacs") return GraphFormat::Dimacs;
  return std::nullopt;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::vector<std::string_view> lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

inline std::uint64_t parse_uint(std::string_view tok, const char* what) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw Error(ErrorKind::MalformedInput, std::string("expected non-negative integer for ") + what + ", got '" +
                                               std::string(tok) + "'");
  return v;
}

}  // namespace detail

/// Decodes one graph6 string (optional ">>graph6<<" header, trailing newline tolerated).
inline Graph parse_graph6(std::string_view text) {
  text = detail::trim(text);
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  if (text.empty()) throw Error(ErrorKind::MalformedInput, "empty graph6 string");
  for (char c : text)
    if (c < 63 || c > 126) throw Error(ErrorKind::MalformedInput, "graph6 byte out of range 63..126");

  std::size_t pos = 0;
  auto take = [&](std::size_t count) {
    if (pos + count > text.size()) throw Error(ErrorKind::MalformedInput, "truncated graph6 size field");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < count; ++i) v = (v << 6) | static_cast<std::uint64_t>(text[pos++] - 63);
    return v;
  };
  std::uint64_t n = 0;
  if (text[0] != 126) {
    n = take(1);
  } else if (text.size() > 1 && text[1] != 126) {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    throw Error(ErrorKind::MalformedInput, "graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                                               std::to_string(bytes));
  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  for (; k < bytes * 6; ++k)
    if (((text[pos + k / 6] - 63) >> (5 - k % 6)) & 1)
      throw Error(ErrorKind::MalformedInput, "nonzero graph6 padding bits");
  return Graph::from_edges(n, edges);
}

inline std::string to_graph6(const Graph& g) {
  std::string out;
  const std::uint64_t n = g.n();
  auto put = [&](std::uint64_t v, int groups) {
    for (int i = groups - 1; i >= 0; --i) out.push_back(static_cast<char>(63 + ((v >> (6 * i)) & 63)));
  };
  if (n <= 62) {
    put(n, 1);
  } else if (n <= 258047) {
    out.push_back(126);
    put(n, 3);
  } else {
    out.append(2, static_cast<char>(126));
    put(n, 6);
  }
  int acc = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = filled = 0;
      }
    }
  if (filled) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

/// DIMACS edge format: "c" comments, one "p edge n m" line, "e u v" with 1-based ids.
inline Graph parse_dimacs(std::string_view text) {
  std::optional<std::uint64_t> n, m;
  std::vector<Edge> edges;
  for (auto raw : detail::lines(text)) {
    auto line = detail::trim(raw);
    if (line.empty() || line[0] == 'c') continue;
    auto tok = detail::tokens(line);
    if (tok[0] == "p") {
      if (n) throw Error(ErrorKind::MalformedInput, "repeated DIMACS problem line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col"))
        throw Error(ErrorKind::MalformedInput, "bad DIMACS problem line");
      n = detail::parse_uint(tok[2], "vertex count");
      m = detail::parse_uint(tok[3], "edge count");
    } else if (tok[0] == "e") {
      if (!n) throw Error(ErrorKind::MalformedInput, "DIMACS edge before problem line");
      if (tok.size() != 3) throw Error(ErrorKind::MalformedInput, "bad DIMACS edge line");
      auto u = detail::parse_uint(tok[1], "edge endpoint"), v = detail::parse_uint(tok[2], "edge endpoint");
      if (u < 1 || v < 1 || u > *n || v > *n) throw Error(ErrorKind::MalformedInput, "DIMACS vertex out of range");
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      throw Error(ErrorKind::MalformedInput, "unknown DIMACS line '" + std::string(line) + "'");
    }
  }
  if (!n) throw Error(ErrorKind::MalformedInput, "missing DIMACS problem line");
  if (edges.size() != *m)
    throw Error(ErrorKind::MalformedInput,
                "DIMACS header declares " + std::to_string(*m) + " edges, found " + std::to_string(edges.size()));
  return Graph::from_edges(*n, edges);
}

inline std::string to_dimacs(const Graph& g) {
  std::ostringstream os;
  os << "p edge " << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

/// Whitespace edge list with 0-based ids and '#' comments. The vertex count is
/// `declared_n` when given, otherwise the first non-comment line holding a
/// single integer.
inline Graph parse_edge_list(std::string_view text, std::optional<std::size_t> declared_n = std::nullopt) {
  std::optional<std::uint64_t> n = declared_n;
  std::vector<Edge> edges;
  for (auto raw : detail::lines(text)) {
    auto line = detail::trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    auto tok = detail::tokens(line);
    if (!n) {
      if (tok.size() != 1) throw Error(ErrorKind::MalformedInput, "edge list needs a declared vertex count");
      n = detail::parse_uint(tok[0], "vertex count");
      continue;
    }
    if (tok.size() != 2) throw Error(ErrorKind::MalformedInput, "edge line must hold two vertex ids");
    auto u = detail::parse_uint(tok[0], "edge endpoint"), v = detail::parse_uint(tok[1], "edge endpoint");
    if (u >= *n || v >= *n) throw Error(ErrorKind::MalformedInput, "edge endpoint out of range");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!n) throw Error(ErrorKind::MalformedInput, "edge list needs a declared vertex count");
  return Graph::from_edges(*n, edges);
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.n() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

inline Graph parse_graph(std::string_view text, GraphFormat format, std::optional<std::size_t> declared_n = std::nullopt) {
  switch (format) {
    case GraphFormat::Graph6: return parse_graph6(text);
    case GraphFormat::Dimacs: return parse_dimacs(text);
    case GraphFormat::EdgeList: return parse_edge_list(text, declared_n);
  }
  throw Error(ErrorKind::MalformedInput, "unknown format");
}

inline std::string serialize_graph(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::Graph6: return to_graph6(g);
    case GraphFormat::Dimacs: return to_dimacs(g);
    case GraphFormat::EdgeList: return to_edge_list(g);
  }
  return {};
}

/// 64-bit FNV-1a of the graph6 encoding; identifies a host in records.
inline std::uint64_t graph_hash(const Graph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : to_graph6(g)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace vpart
