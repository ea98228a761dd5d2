#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "girth5/errors.hpp"
#include "girth5/graph.hpp"
#include "girth5/projective.hpp"

namespace girth5 {

namespace detail {

inline std::uint64_t isqrt(std::uint64_t x) {
  if (x == 0) return 0;
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace detail

// Prime powers with a supported field, ascending.
inline const std::vector<int>& supported_prime_powers() {
  static const std::vector<int> qs = {2,  3,  4,  5,  7,  8,  9,  11, 13,
                                      16, 17, 19, 23, 25, 27, 29, 31, 32};
  return qs;
}

// floor((n/4)(sqrt(2n-3)+1)). floor(n*sqrt(r)) = floor(sqrt(n^2 r)), and
// the remaining /4 commutes with the floor since the fractional part of
// n*sqrt(r) cannot carry the sum past a multiple of 4.
inline std::uint64_t z_upper(std::uint64_t n) {
  if (n < 2) throw Error("z_upper requires n >= 2");
  std::uint64_t r = 2 * n - 3;
  return (detail::isqrt(n * n * r) + n) / 4;
}

// n-vertex bipartite C4-free graph: the smallest supported incidence graph
// with at least n vertices, trimmed by repeated minimum-degree deletion
// (ties to the lowest vertex id), surviving vertices renumbered in order.
inline Graph z_lower_construct(int n) {
  if (n < 2) throw Error("z_lower_construct requires n >= 2");
  int q = -1;
  for (int cand : supported_prime_powers())
    if (2 * (cand * cand + cand + 1) >= n) {
      q = cand;
      break;
    }
  if (q == -1)
    throw UnsupportedOrder("n = " + std::to_string(n) +
                           " exceeds the largest supported plane");
  Graph g = incidence_graph(q);
  std::vector<char> alive(g.n(), 1);
  std::vector<int> deg(g.n());
  for (int v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
  int remaining = g.n();
  while (remaining > n) {
    int best = -1;
    for (int v = 0; v < g.n(); ++v)
      if (alive[v] && (best == -1 || deg[v] < deg[best])) best = v;
    alive[best] = 0;
    --remaining;
    for (int w : g.neighbors(best))
      if (alive[w]) --deg[w];
  }
  std::vector<int> id(g.n(), -1);
  int next = 0;
  for (int v = 0; v < g.n(); ++v)
    if (alive[v]) id[v] = next++;
  GraphBuilder b(n);
  for (int v = 0; v < g.n(); ++v)
    if (alive[v]) b.set_part(id[v], g.part(v));
  for (auto [u, v] : g.edges())
    if (alive[u] && alive[v]) b.add_edge(id[u], id[v]);
  return b.build();
}

}  // namespace girth5
