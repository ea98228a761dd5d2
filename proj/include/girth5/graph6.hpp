#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "girth5/errors.hpp"
#include "girth5/graph.hpp"

namespace girth5 {

namespace detail {

inline void g6_append_order(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else if (n <= 68719476735ull) {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    throw MalformedGraph6("graph too large for graph6");
  }
}

inline std::uint64_t g6_parse_order(const std::string& s, std::size_t& pos) {
  auto sextet = [&](std::size_t i) -> std::uint64_t {
    if (i >= s.size()) throw MalformedGraph6("truncated order field");
    int c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw MalformedGraph6("byte out of range");
    return static_cast<std::uint64_t>(c - 63);
  };
  if (pos >= s.size()) throw MalformedGraph6("empty input");
  if (static_cast<unsigned char>(s[pos]) != 126) return sextet(pos++);
  if (pos + 1 < s.size() && static_cast<unsigned char>(s[pos + 1]) == 126) {
    pos += 2;
    std::uint64_t n = 0;
    for (int i = 0; i < 6; ++i) n = (n << 6) | sextet(pos++);
    return n;
  }
  ++pos;
  std::uint64_t n = 0;
  for (int i = 0; i < 3; ++i) n = (n << 6) | sextet(pos++);
  return n;
}

}  // namespace detail

inline std::string graph6_encode(const Graph& g) {
  std::string out;
  detail::g6_append_order(out, static_cast<std::uint64_t>(g.n()));
  int bits = 0, acc = 0;
  for (int v = 1; v < g.n(); ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bits = 0;
        acc = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

inline Graph graph6_decode(const std::string& s) {
  std::size_t pos = 0;
  std::uint64_t n64 = detail::g6_parse_order(s, pos);
  if (n64 > 1u << 20) throw MalformedGraph6("order too large for decoder");
  int n = static_cast<int>(n64);
  GraphBuilder b(n);
  std::uint64_t need = (static_cast<std::uint64_t>(n) * (n - 1) / 2 + 5) / 6;
  if (s.size() - pos != need)
    throw MalformedGraph6("adjacency field has wrong length");
  int bits = 0, acc = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      if (bits == 0) {
        int c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw MalformedGraph6("byte out of range");
        acc = c - 63;
        bits = 6;
      }
      if ((acc >> (bits - 1)) & 1) b.add_edge(u, v);
      --bits;
    }
  return b.build();
}

// Plain text edge list: "n m" header, then one "u v" line per edge.
inline std::string edge_list_encode(const Graph& g) {
  std::ostringstream os;
  os << g.n() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

inline Graph edge_list_decode(std::istream& in) {
  int n = 0;
  std::size_t m = 0;
  if (!(in >> n >> m)) throw Error("malformed edge list header");
  GraphBuilder b(n);
  for (std::size_t i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v)) throw Error("truncated edge list");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error("edge endpoint out of range");
    b.add_edge(u, v);
  }
  return b.build();
}

}  // namespace girth5
