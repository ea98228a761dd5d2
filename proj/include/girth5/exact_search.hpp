#pragma once

#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "girth5/errors.hpp"
#include "girth5/graph.hpp"
#include "girth5/graph6.hpp"
#include "girth5/zarankiewicz.hpp"

namespace girth5 {

struct SearchLimits {
  int max_n = 12;       // hard cap without the extended budget
  bool extended = false;  // allows n up to 14
  int threads = 1;
};

enum class SearchMode { General, Bipartite };

struct SearchOutcome {
  int n = 0;
  SearchMode mode = SearchMode::General;
  int best = 0;
  Graph witness;
  std::uint64_t nodes = 0;
  double millis = 0.0;
};

namespace detail {

constexpr int kSearchMaxN = 14;

inline int moore_edge_cap(int n) {
  // e <= (n/2) sqrt(n-1) for girth >= 5
  if (n <= 1) return 0;
  return static_cast<int>(
      isqrt(static_cast<std::uint64_t>(n) * n * (n - 1)) / 2);
}

// Shared best value and canonical witness for one search run. The value
// is a monotone maximum; the witness is the lexicographically least
// graph6 encoding among offered optima.
struct Incumbent {
  std::atomic<int> best{-1};
  std::mutex mx;
  int witness_value = -1;
  Graph witness;
  bool single_thread = true;

  void offer(int value, const Graph& g) {
    int cur = best.load(std::memory_order_relaxed);
    while (value > cur &&
           !best.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
    }
    std::lock_guard<std::mutex> lk(mx);
    if (value > witness_value) {
      witness_value = value;
      witness = g;
    } else if (value == witness_value &&
               graph6_encode(g) < graph6_encode(witness)) {
      witness = g;
    }
  }
};

// State of the general girth-5 edge-slot search. Slots are scanned in
// (max endpoint, min endpoint) order, i.e. vertex blocks with the minor
// endpoint ascending inside each block.
struct GeneralState {
  int n = 0;
  int e = 0;
  std::array<std::uint32_t, kSearchMaxN> adj{};
  std::array<std::uint32_t, kSearchMaxN> block{};
  std::array<std::int8_t, kSearchMaxN> deg{};
  std::array<std::int8_t, kSearchMaxN> nbr_deg_sum{};  // S(v) = sum of d(u), u in N(v)

  void add_edge(int i, int j) {
    adj[i] |= 1u << j;
    adj[j] |= 1u << i;
    block[j] |= 1u << i;
    ++e;
    ++deg[i];
    ++deg[j];
    std::uint32_t bits = adj[i] & ~(1u << j);
    while (bits) {
      int u = std::countr_zero(bits);
      bits &= bits - 1;
      ++nbr_deg_sum[u];
    }
    bits = adj[j] & ~(1u << i);
    while (bits) {
      int u = std::countr_zero(bits);
      bits &= bits - 1;
      ++nbr_deg_sum[u];
    }
    nbr_deg_sum[i] += deg[j];
    nbr_deg_sum[j] += deg[i];
  }

  void remove_edge(int i, int j) {
    nbr_deg_sum[i] -= deg[j];
    nbr_deg_sum[j] -= deg[i];
    --deg[i];
    --deg[j];
    --e;
    adj[i] &= ~(1u << j);
    adj[j] &= ~(1u << i);
    block[j] &= ~(1u << i);
    std::uint32_t bits = adj[i];
    while (bits) {
      int u = std::countr_zero(bits);
      bits &= bits - 1;
      --nbr_deg_sum[u];
    }
    bits = adj[j];
    while (bits) {
      int u = std::countr_zero(bits);
      bits &= bits - 1;
      --nbr_deg_sum[u];
    }
  }

  // In a girth-5 graph v, N(v) and the second neighborhood are all
  // distinct, so 1 + S(v) <= n must hold for every vertex.
  bool second_neighborhood_ok(int i, int j) const {
    if (nbr_deg_sum[i] > n - 1 || nbr_deg_sum[j] > n - 1) return false;
    std::uint32_t bits = (adj[i] | adj[j]) & ~(1u << i) & ~(1u << j);
    while (bits) {
      int u = std::countr_zero(bits);
      bits &= bits - 1;
      if (nbr_deg_sum[u] > n - 1) return false;
    }
    return true;
  }
};

inline Graph general_to_graph(const GeneralState& st) {
  GraphBuilder b(st.n);
  for (int v = 0; v < st.n; ++v)
    for (int u = 0; u < v; ++u)
      if ((st.adj[v] >> u) & 1) b.add_edge(u, v);
  return b.build();
}

// Adding edge (i,j) keeps girth >= 5 iff i,j have no common neighbor and
// no path of length three joins them.
inline bool general_edge_ok(const GeneralState& st, int i, int j) {
  if (st.adj[i] & st.adj[j]) return false;
  std::uint32_t bits = st.adj[i];
  while (bits) {
    int x = std::countr_zero(bits);
    bits &= bits - 1;
    if (st.adj[x] & st.adj[j]) return false;
  }
  return true;
}

struct GeneralSearchConfig {
  int edge_cap = 0;
  int total_slots = 0;
  bool prune_bound = true;
  bool prune_symmetry = true;
};

// Upper bound on edges any completion can still add. Admissibility is
// monotone (a pair at distance <= 3 never becomes addable), so undecided
// addable slots bound the gain; per vertex the bound is additionally
// capped by the second-neighborhood budget n-1-S(v).
inline int general_future_bound(const GeneralState& st, int j, int i) {
  std::array<std::uint32_t, kSearchMaxN> reach3;
  for (int u = 0; u < st.n; ++u) {
    std::uint32_t m = st.adj[u] | (1u << u);
    for (int step = 0; step < 2; ++step) {
      std::uint32_t acc = m, bits = m;
      while (bits) {
        int x = std::countr_zero(bits);
        bits &= bits - 1;
        acc |= st.adj[x];
      }
      m = acc;
    }
    reach3[u] = m;
  }
  std::array<int, kSearchMaxN> usable{};
  auto consider = [&](int u, int v) {
    if (!((reach3[v] >> u) & 1)) {
      ++usable[u];
      ++usable[v];
    }
  };
  for (int v = i; v < j; ++v) consider(v, j);
  for (int k = j + 1; k < st.n; ++k)
    for (int v = 0; v < k; ++v) consider(v, k);
  int sum = 0;
  for (int v = 0; v < st.n; ++v)
    sum += std::min(usable[v], std::max(0, st.n - 1 - st.nbr_deg_sum[v]));
  return sum / 2;
}

// Semi-canonical test at block-j completion: no transposition of labels
// u < v <= j may yield a lexicographically larger block sequence.
inline bool general_semi_canonical(const GeneralState& st, int j) {
  for (int v = 1; v <= j; ++v)
    for (int u = 0; u < v; ++u) {
      const std::uint32_t uv = (1u << u) | (1u << v);
      for (int k = 1; k <= j; ++k) {
        int kk = k == u ? v : (k == v ? u : k);
        std::uint32_t row = st.adj[kk];
        std::uint32_t bu = (row >> u) & 1, bv = (row >> v) & 1;
        row = (row & ~uv) | (bu << v) | (bv << u);
        std::uint32_t swapped = row & ((1u << k) - 1);
        if (swapped > st.block[k]) return false;
        if (swapped < st.block[k]) break;
      }
    }
  return true;
}

inline void general_dfs(const GeneralSearchConfig& cfg, GeneralState& st,
                        int j, int i, Incumbent& inc, std::uint64_t& nodes) {
  ++nodes;
  if (i == j) {
    if (cfg.prune_symmetry && !general_semi_canonical(st, j)) return;
    if (j + 1 >= st.n) return;
    general_dfs(cfg, st, j + 1, 0, inc, nodes);
    return;
  }
  if (cfg.prune_bound) {
    int best_now = inc.best.load(std::memory_order_relaxed);
    int slot = j * (j - 1) / 2 + i;
    int rem = cfg.total_slots - slot;
    if (std::min(st.e + rem, cfg.edge_cap) <= best_now) return;
    if (st.e + general_future_bound(st, j, i) <= best_now) return;
  }
  if (general_edge_ok(st, i, j)) {
    st.add_edge(i, j);
    if (!cfg.prune_bound || st.second_neighborhood_ok(i, j)) {
      if (st.e > inc.best.load(std::memory_order_relaxed) ||
          (inc.single_thread &&
           st.e == inc.best.load(std::memory_order_relaxed)))
        inc.offer(st.e, general_to_graph(st));
      general_dfs(cfg, st, j, i + 1, inc, nodes);
    }
    st.remove_edge(i, j);
  }
  general_dfs(cfg, st, j, i + 1, inc, nodes);
}

// Enumerate all feasible prefixes through block `split_j` as parallel tasks.
inline void general_gen_tasks(const GeneralSearchConfig& cfg, GeneralState& st,
                              int j, int i, int split_j,
                              std::vector<GeneralState>& out) {
  if (i == j) {
    if (cfg.prune_symmetry && !general_semi_canonical(st, j)) return;
    if (j >= split_j || j + 1 >= st.n) {
      out.push_back(st);
      return;
    }
    general_gen_tasks(cfg, st, j + 1, 0, split_j, out);
    return;
  }
  if (general_edge_ok(st, i, j)) {
    st.add_edge(i, j);
    if (!cfg.prune_bound || st.second_neighborhood_ok(i, j))
      general_gen_tasks(cfg, st, j, i + 1, split_j, out);
    st.remove_edge(i, j);
  }
  general_gen_tasks(cfg, st, j, i + 1, split_j, out);
}

inline void check_limit(int n, const SearchLimits& limits) {
  int cap = limits.extended ? kSearchMaxN : limits.max_n;
  if (n < 1 || n > cap)
    throw LimitExceeded("n = " + std::to_string(n) +
                        " exceeds the configured search limit " +
                        std::to_string(cap));
}

}  // namespace detail

struct ExactSearchOptions {
  // Individual pruning rules can be switched off for differential testing.
  bool prune_bound = true;
  bool prune_symmetry = true;
};

inline SearchOutcome exact_ex(int n, const SearchLimits& limits = {},
                              const ExactSearchOptions& opts = {}) {
  detail::check_limit(n, limits);
  auto t0 = std::chrono::steady_clock::now();

  detail::GeneralSearchConfig cfg;
  cfg.edge_cap = detail::moore_edge_cap(n);
  cfg.total_slots = n * (n - 1) / 2;
  cfg.prune_bound = opts.prune_bound;
  cfg.prune_symmetry = opts.prune_symmetry;

  detail::Incumbent inc;
  inc.single_thread = limits.threads <= 1;
  detail::GeneralState root;
  root.n = n;
  inc.offer(0, detail::general_to_graph(root));

  std::uint64_t nodes = 0;
  if (limits.threads <= 1 || n <= 4) {
    if (n >= 2) detail::general_dfs(cfg, root, 1, 0, inc, nodes);
  } else {
    int split_j = std::min(n - 2, 6);
    std::vector<detail::GeneralState> tasks;
    detail::general_gen_tasks(cfg, root, 1, 0, split_j, tasks);
    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> total_nodes{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < limits.threads; ++t)
      pool.emplace_back([&] {
        std::uint64_t local = 0;
        for (;;) {
          std::size_t idx = next.fetch_add(1);
          if (idx >= tasks.size()) break;
          detail::GeneralState st = tasks[idx];
          int j = split_j;
          if (st.e > inc.best.load(std::memory_order_relaxed))
            inc.offer(st.e, detail::general_to_graph(st));
          if (j + 1 < st.n)
            detail::general_dfs(cfg, st, j + 1, 0, inc, local);
          ++local;
        }
        total_nodes.fetch_add(local);
      });
    for (auto& th : pool) th.join();
    nodes = total_nodes.load();
  }

  SearchOutcome out;
  out.n = n;
  out.mode = SearchMode::General;
  out.best = inc.best.load();
  out.witness = inc.witness;
  out.nodes = nodes;
  out.millis = std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
  return out;
}

namespace detail {

// max sum of degrees over `r` blocks with degree cap `a` and pair budget R
inline int alloc_bound(int r, long long budget, int a) {
  int total = 0;
  for (int t = 1; t <= a; ++t) {
    long long cost = static_cast<long long>(r) * (t - 1);
    if (cost <= budget) {
      budget -= cost;
      total += r;
    } else {
      total += static_cast<int>(budget / (t - 1));
      break;
    }
  }
  return total;
}

struct BipartiteState {
  int n = 0, a = 0;  // |X| = a, X = {0..a-1}; Y vertices are blocks
  int e = 0;
  unsigned __int128 covered = 0;  // pair (x1<x2) -> bit x2(x2-1)/2+x1
  int covered_count = 0;
  std::array<std::uint32_t, kSearchMaxN> block{};  // per Y vertex

  Graph to_graph() const {
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v) b.set_part(v, v < a ? Part::X : Part::Y);
    for (int y = 0; y + a < n; ++y)
      for (int x = 0; x < a; ++x)
        if ((block[y] >> x) & 1) b.add_edge(x, a + y);
    return b.build();
  }
};

struct BipartiteSearchConfig {
  int edge_cap = 0;
  bool prune_bound = true;
  bool prune_symmetry = true;
};

inline void bipartite_dfs(const BipartiteSearchConfig& cfg, BipartiteState& st,
                          int blk, int x, Incumbent& inc,
                          std::uint64_t& nodes) {
  ++nodes;
  const int nblocks = st.n - st.a;
  if (x == st.a) {
    // Y vertices are interchangeable; keep block masks nonincreasing
    if (cfg.prune_symmetry && blk >= 1 && st.block[blk] > st.block[blk - 1])
      return;
    if (blk + 1 >= nblocks) return;
    bipartite_dfs(cfg, st, blk + 1, 0, inc, nodes);
    return;
  }
  if (cfg.prune_bound) {
    long long budget =
        static_cast<long long>(st.a) * (st.a - 1) / 2 - st.covered_count;
    int future = (st.a - x) + alloc_bound(nblocks - blk - 1, budget, st.a);
    int bound = std::min(st.e + future, cfg.edge_cap);
    if (bound <= inc.best.load(std::memory_order_relaxed)) return;
  }
  // try x in the neighborhood of Y-vertex blk
  unsigned __int128 fresh = 0;
  bool ok = true;
  std::uint32_t bits = st.block[blk];
  while (bits) {
    int x2 = std::countr_zero(bits);
    bits &= bits - 1;
    int lo = std::min(x, x2), hi = std::max(x, x2);
    unsigned __int128 bit = static_cast<unsigned __int128>(1)
                            << (hi * (hi - 1) / 2 + lo);
    if (st.covered & bit) {
      ok = false;
      break;
    }
    fresh |= bit;
  }
  if (ok) {
    st.block[blk] |= 1u << x;
    st.covered |= fresh;
    st.covered_count += std::popcount(st.block[blk]) - 1;
    ++st.e;
    if (st.e > inc.best.load(std::memory_order_relaxed) ||
        (inc.single_thread &&
         st.e == inc.best.load(std::memory_order_relaxed)))
      inc.offer(st.e, st.to_graph());
    bipartite_dfs(cfg, st, blk, x + 1, inc, nodes);
    --st.e;
    st.covered_count -= std::popcount(st.block[blk]) - 1;
    st.covered &= ~fresh;
    st.block[blk] &= ~(1u << x);
  }
  bipartite_dfs(cfg, st, blk, x + 1, inc, nodes);
}

}  // namespace detail

inline SearchOutcome exact_z(int n, const SearchLimits& limits = {},
                             const ExactSearchOptions& opts = {}) {
  detail::check_limit(n, limits);
  auto t0 = std::chrono::steady_clock::now();

  detail::BipartiteSearchConfig cfg;
  cfg.edge_cap = n >= 2 ? static_cast<int>(z_upper(n)) : 0;
  cfg.prune_bound = opts.prune_bound;
  cfg.prune_symmetry = opts.prune_symmetry;

  detail::Incumbent inc;
  inc.single_thread = limits.threads <= 1;
  std::uint64_t nodes = 0;

  std::vector<int> sizes;
  for (int a = (n + 1) / 2; a >= 1; --a) sizes.push_back(a);
  {
    detail::BipartiteState st0;
    st0.n = n;
    st0.a = (n + 1) / 2;
    inc.offer(0, st0.to_graph());
  }
  auto run_size = [&](int a, std::uint64_t& node_sink) {
    detail::BipartiteState st;
    st.n = n;
    st.a = a;
    if (n - a >= 1 && a >= 1)
      detail::bipartite_dfs(cfg, st, 0, 0, inc, node_sink);
  };

  if (n == 1) {
    // nothing to search
  } else if (limits.threads <= 1) {
    for (int a : sizes) run_size(a, nodes);
  } else {
    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> total_nodes{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < limits.threads; ++t)
      pool.emplace_back([&] {
        std::uint64_t local = 0;
        for (;;) {
          std::size_t idx = next.fetch_add(1);
          if (idx >= sizes.size()) break;
          run_size(sizes[idx], local);
        }
        total_nodes.fetch_add(local);
      });
    for (auto& th : pool) th.join();
    nodes = total_nodes.load();
  }

  SearchOutcome out;
  out.n = n;
  out.mode = SearchMode::Bipartite;
  out.best = inc.best.load();
  out.witness = inc.witness;
  out.nodes = nodes;
  out.millis = std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
  return out;
}

struct TableReport {
  struct Row {
    int n = 0;
    int ex = -1;
    int z = -1;
  };
  std::vector<Row> rows;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Recomputes the small exact values and checks them against the cited
// constants: ex(6)=6, ex(11)=16, ex(12)=18, z(6)=6 (extended: ex(14)=23),
// plus ex(n) >= z(n)+1 for 7 <= n <= limit and monotonicity.
inline TableReport verify_small_table(const SearchLimits& limits = {}) {
  TableReport rep;
  int hi = limits.extended ? 14 : std::min(limits.max_n, 12);
  for (int n = 6; n <= hi; ++n) {
    TableReport::Row row;
    row.n = n;
    row.ex = exact_ex(n, limits).best;
    if (n <= 12) row.z = exact_z(n, limits).best;
    rep.rows.push_back(row);
  }
  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) rep.failures.push_back(what);
  };
  auto find = [&](int n) -> const TableReport::Row* {
    for (const auto& r : rep.rows)
      if (r.n == n) return &r;
    return nullptr;
  };
  if (auto* r = find(6)) {
    expect(r->ex == 6, "ex(6) != 6");
    expect(r->z == 6, "z(6) != 6");
  }
  if (auto* r = find(11)) expect(r->ex == 16, "ex(11) != 16");
  if (auto* r = find(12)) expect(r->ex == 18, "ex(12) != 18");
  if (limits.extended)
    if (auto* r = find(14)) expect(r->ex == 23, "ex(14) != 23");
  int prev_ex = -1;
  for (const auto& r : rep.rows) {
    if (r.z >= 0) {
      expect(r.ex >= r.z, "ex(n) < z(n) at n=" + std::to_string(r.n));
      if (r.n >= 7)
        expect(r.ex >= r.z + 1, "ex(n) < z(n)+1 at n=" + std::to_string(r.n));
    }
    expect(r.ex >= prev_ex,
           "ex not nondecreasing at n=" + std::to_string(r.n));
    prev_ex = r.ex;
  }
  return rep;
}

}  // namespace girth5
