#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "girth5/errors.hpp"

namespace girth5 {

enum class Part : std::int8_t { None = -1, X = 0, Y = 1 };

class GraphBuilder;

// Simple undirected graph with optional bipartition labels.
// Adjacency is kept twice: sorted neighbor lists for iteration and one
// bitset row per vertex for intersection and short-distance queries.
// Instances are immutable once built; mutate through GraphBuilder.
class Graph {
 public:
  Graph() = default;

  int n() const { return n_; }
  std::size_t edge_count() const { return edges_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  bool has_edge(int u, int v) const {
    return (row(u)[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
  }

  bool bipartitioned() const { return !part_.empty(); }
  Part part(int v) const {
    return part_.empty() ? Part::None : static_cast<Part>(part_[v]);
  }

  std::size_t words() const { return words_; }
  const std::uint64_t* row(int v) const { return rows_.data() + words_ * v; }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && rows_ == other.rows_;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_);
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

 private:
  friend class GraphBuilder;
  int n_ = 0;
  std::size_t edges_ = 0;
  std::size_t words_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::int8_t> part_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : n_(n), adj_(n) {}

  explicit GraphBuilder(const Graph& g) : n_(g.n()), adj_(g.n()) {
    for (int v = 0; v < n_; ++v) adj_[v] = g.neighbors(v);
    if (g.bipartitioned()) {
      part_.resize(n_);
      for (int v = 0; v < n_; ++v)
        part_[v] = static_cast<std::int8_t>(g.part(v));
    }
  }

  int n() const { return n_; }

  bool has_edge(int u, int v) const {
    return std::find(adj_[u].begin(), adj_[u].end(), v) != adj_[u].end();
  }

  GraphBuilder& add_edge(int u, int v) {
    if (u == v) throw SameVertex("loop edge " + std::to_string(u));
    if (has_edge(u, v))
      throw EdgeExists(std::to_string(u) + "-" + std::to_string(v));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    return *this;
  }

  GraphBuilder& remove_edge(int u, int v) {
    auto drop = [](std::vector<int>& a, int x) {
      a.erase(std::remove(a.begin(), a.end(), x), a.end());
    };
    drop(adj_[u], v);
    drop(adj_[v], u);
    return *this;
  }

  GraphBuilder& clear_parts() {
    part_.clear();
    return *this;
  }

  GraphBuilder& set_part(int v, Part p) {
    if (part_.empty()) part_.assign(n_, static_cast<std::int8_t>(Part::None));
    part_[v] = static_cast<std::int8_t>(p);
    return *this;
  }

  Graph build() const {
    Graph g;
    g.n_ = n_;
    g.adj_ = adj_;
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    g.words_ = static_cast<std::size_t>((n_ + 63) / 64);
    if (n_ > 0 && g.words_ == 0) g.words_ = 1;
    g.rows_.assign(g.words_ * n_, 0);
    std::size_t deg_sum = 0;
    for (int v = 0; v < n_; ++v) {
      deg_sum += g.adj_[v].size();
      for (int w : g.adj_[v])
        g.rows_[g.words_ * v + (static_cast<std::size_t>(w) >> 6)] |=
            std::uint64_t{1} << (w & 63);
    }
    g.edges_ = deg_sum / 2;
    if (!part_.empty()) {
      for (int u = 0; u < n_; ++u)
        for (int v : g.adj_[u])
          if (part_[u] != static_cast<std::int8_t>(Part::None) &&
              part_[u] == part_[v])
            throw NotBipartitioned("edge " + std::to_string(u) + "-" +
                                   std::to_string(v) +
                                   " joins vertices in the same part");
      g.part_ = part_;
    }
    return g;
  }

 private:
  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::int8_t> part_;
};

namespace detail {

inline std::size_t popcount_and(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t words) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words; ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

// Bitset of vertices within distance `radius` of u (excluding u itself for
// radius counting; u is included in the returned set).
inline std::vector<std::uint64_t> reach_within(const Graph& g, int u,
                                               int radius) {
  const std::size_t w = g.words();
  std::vector<std::uint64_t> seen(w, 0), frontier(w, 0);
  seen[static_cast<std::size_t>(u) >> 6] |= std::uint64_t{1} << (u & 63);
  frontier = seen;
  for (int step = 0; step < radius; ++step) {
    std::vector<std::uint64_t> next(w, 0);
    for (std::size_t i = 0; i < w; ++i) {
      std::uint64_t bits = frontier[i];
      while (bits) {
        int v = static_cast<int>(i * 64 + std::countr_zero(bits));
        bits &= bits - 1;
        const std::uint64_t* r = g.row(v);
        for (std::size_t j = 0; j < w; ++j) next[j] |= r[j];
      }
    }
    bool grew = false;
    for (std::size_t j = 0; j < w; ++j) {
      std::uint64_t fresh = next[j] & ~seen[j];
      seen[j] |= fresh;
      frontier[j] = fresh;
      if (fresh) grew = true;
    }
    if (!grew) break;
  }
  return seen;
}

}  // namespace detail

// Exact girth via truncated BFS from every vertex; nullopt for forests.
inline std::optional<int> girth(const Graph& g) {
  const int n = g.n();
  int best = -1;
  std::vector<int> dist(n), parent(n), queue(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    int head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      int u = queue[head++];
      if (best != -1 && 2 * dist[u] >= best) break;
      for (int v : g.neighbors(u)) {
        if (dist[v] == -1) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue[tail++] = v;
        } else if (v != parent[u]) {
          int len = dist[u] + dist[v] + 1;
          if (best == -1 || len < best) best = len;
        }
      }
    }
  }
  if (best == -1) return std::nullopt;
  return best;
}

struct FreenessResult {
  bool free = true;
  std::vector<int> witness;  // 3 or 4 vertex ids of a short cycle
  explicit operator bool() const { return free; }
};

// True iff g has no C3 and no C4. On failure reports the lexicographically
// first short cycle found by the (u,v) pair scan.
inline FreenessResult is_girth5_free(const Graph& g) {
  const int n = g.n();
  const std::size_t w = g.words();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      int first = -1, second = -1;
      for (std::size_t i = 0; i < w && second == -1; ++i) {
        std::uint64_t bits = g.row(u)[i] & g.row(v)[i];
        while (bits) {
          int x = static_cast<int>(i * 64 + std::countr_zero(bits));
          bits &= bits - 1;
          if (first == -1)
            first = x;
          else {
            second = x;
            break;
          }
        }
      }
      if (first != -1 && g.has_edge(u, v))
        return {false, {u, v, first}};
      if (second != -1) return {false, {u, first, v, second}};
    }
  }
  return {};
}

inline std::vector<int> common_neighbors(const Graph& g, int u, int v) {
  if (u == v) throw SameVertex("common_neighbors(" + std::to_string(u) + ")");
  std::vector<int> out;
  const std::size_t w = g.words();
  for (std::size_t i = 0; i < w; ++i) {
    std::uint64_t bits = g.row(u)[i] & g.row(v)[i];
    while (bits) {
      out.push_back(static_cast<int>(i * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

// For a {C3,C4}-free graph, uv may be added iff dist(u,v) >= 4.
inline bool admissible_edge(const Graph& g, int u, int v) {
  if (u == v) throw SameVertex("admissible_edge");
  if (g.has_edge(u, v)) throw EdgeExists(std::to_string(u) + "-" +
                                         std::to_string(v));
  auto near = detail::reach_within(g, u, 3);
  return !((near[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u);
}

struct PathCountSummary {
  std::uint64_t total = 0;                  // sigma = sum_v C(d(v),2)
  std::optional<std::uint64_t> sigma_x, sigma_y;  // both ends in X / in Y
  std::optional<std::uint64_t> sigma_subset;      // both ends in subset A
};

inline std::uint64_t choose2(std::uint64_t d) { return d * (d - 1) / 2; }

inline PathCountSummary count_paths2(
    const Graph& g, const std::vector<int>* subset = nullptr) {
  PathCountSummary s;
  std::vector<char> in_a;
  if (subset) {
    in_a.assign(g.n(), 0);
    for (int v : *subset) {
      if (v < 0 || v >= g.n())
        throw SubsetOutOfRange("vertex " + std::to_string(v));
      in_a[v] = 1;
    }
    s.sigma_subset = 0;
  }
  if (g.bipartitioned()) {
    s.sigma_x = 0;
    s.sigma_y = 0;
  }
  for (int v = 0; v < g.n(); ++v) {
    std::uint64_t d = g.degree(v), dx = 0, da = 0;
    s.total += choose2(d);
    if (g.bipartitioned()) {
      for (int w : g.neighbors(v))
        if (g.part(w) == Part::X) ++dx;
      *s.sigma_x += choose2(dx);
      *s.sigma_y += choose2(d - dx);
    }
    if (subset) {
      for (int w : g.neighbors(v))
        if (in_a[w]) ++da;
      *s.sigma_subset += choose2(da);
    }
  }
  return s;
}

// (P1): every same-part pair has exactly one common neighbor.
inline bool check_P1(const Graph& g) {
  if (!g.bipartitioned())
    throw NotBipartitioned("check_P1 requires bipartition labels");
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      if (g.part(u) != g.part(v)) continue;
      if (detail::popcount_and(g.row(u), g.row(v), g.words()) != 1)
        return false;
    }
  return true;
}

// (P2): maximum degree at most three.
inline bool check_P2(const Graph& g) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) > 3) return false;
  return true;
}

}  // namespace girth5
