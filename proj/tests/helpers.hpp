#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "girth5/graph.hpp"

namespace testutil {

inline girth5::Graph cycle(int n) {
  girth5::GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return b.build();
}

inline girth5::Graph path(int n) {
  girth5::GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return b.build();
}

inline girth5::Graph star(int leaves) {
  girth5::GraphBuilder b(leaves + 1);
  for (int i = 1; i <= leaves; ++i) b.add_edge(0, i);
  return b.build();
}

inline girth5::Graph petersen() {
  girth5::GraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);        // outer C5
    b.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    b.add_edge(i, 5 + i);              // spokes
  }
  return b.build();
}

inline girth5::Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  girth5::GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return b.build();
}

// Random girth >= 5 graph: insert a random shuffle of all pairs, keeping
// each edge only if no C3/C4 appears.
inline girth5::Graph random_free_graph(int n, std::mt19937_64& rng,
                                       double keep = 1.0) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::bernoulli_distribution coin(keep);
  girth5::Graph g = girth5::GraphBuilder(n).build();
  for (auto [u, v] : pairs) {
    if (!coin(rng)) continue;
    if (girth5::admissible_edge(g, u, v))
      g = girth5::GraphBuilder(g).add_edge(u, v).build();
  }
  return g;
}

// Independent girth oracle: for each edge uv, shortest cycle through uv is
// 1 + dist(u,v) in g - uv.
inline std::optional<int> girth_oracle(const girth5::Graph& g) {
  int best = -1;
  for (auto [u, v] : g.edges()) {
    girth5::Graph h = girth5::GraphBuilder(g).remove_edge(u, v).build();
    std::vector<int> dist(h.n(), -1);
    std::vector<int> queue;
    dist[u] = 0;
    queue.push_back(u);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int x = queue[head];
      for (int y : h.neighbors(x))
        if (dist[y] == -1) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
    }
    if (dist[v] != -1 && (best == -1 || dist[v] + 1 < best)) best = dist[v] + 1;
  }
  if (best == -1) return std::nullopt;
  return best;
}

}  // namespace testutil
