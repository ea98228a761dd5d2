#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "girth5/augment.hpp"
#include "girth5/errors.hpp"
#include "girth5/graph.hpp"
#include "girth5/zarankiewicz.hpp"

namespace girth5 {

// Path-of-length-two budget certificate on a vertex subset A: in a C4-free
// graph sigma_A <= C(|A|,2). m_star is the largest edge count whose
// convexity lower bound |A| C(2m/|A|,2) still fits in the remaining slack,
// hence a ceiling on edges insertable into A.
struct CertificateResult {
  std::vector<int> subset;
  std::uint64_t sigma_a = 0;
  std::uint64_t budget = 0;
  long long slack = 0;
  bool pass = false;
  std::vector<int> witness;  // C4 through a duplicated pair of A, if any
  std::uint64_t m_star = 0;
};

inline CertificateResult path2_certificate(const Graph& g,
                                           const std::vector<int>& a) {
  if (a.size() < 2) throw SubsetOutOfRange("subset needs at least 2 vertices");
  for (int v : a)
    if (v < 0 || v >= g.n())
      throw SubsetOutOfRange("vertex " + std::to_string(v));
  CertificateResult r;
  r.subset = a;
  r.sigma_a = *count_paths2(g, &a).sigma_subset;
  r.budget = choose2(a.size());
  r.slack = static_cast<long long>(r.budget) - static_cast<long long>(r.sigma_a);
  // A pair of A on two paths of length two is a C4; slack < 0 forces one
  // by pigeonhole, but a duplicated pair can exist under budget too.
  r.pass = r.slack >= 0;
  for (std::size_t i = 0; i < a.size() && r.witness.empty(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      auto cn = common_neighbors(g, a[i], a[j]);
      if (cn.size() >= 2) {
        r.witness = {a[i], cn[0], a[j], cn[1]};
        r.pass = false;
        break;
      }
    }
  if (r.slack > 0) {
    const double sz = static_cast<double>(a.size());
    auto bound = [&](std::uint64_t m) {
      double x = 2.0 * m / sz;
      return sz * std::max(0.0, x * (x - 1.0) / 2.0);
    };
    std::uint64_t m = 0;
    while (bound(m + 1) <= static_cast<double>(r.slack) + 1e-9) ++m;
    r.m_star = m;
  }
  return r;
}

struct DegreeProfile {
  double reference_q = 0;
  double tau = 0;
  int below = 0;  // vertices with degree < q - tau
  int min_degree = 0;
  double mean_degree = 0;
  int max_degree = 0;
};

inline DegreeProfile degree_profile(const Graph& g, double q, double tau) {
  DegreeProfile p;
  p.reference_q = q;
  p.tau = tau;
  if (g.n() == 0) return p;
  p.min_degree = g.degree(0);
  p.max_degree = g.degree(0);
  long long sum = 0;
  for (int v = 0; v < g.n(); ++v) {
    int d = g.degree(v);
    sum += d;
    p.min_degree = std::min(p.min_degree, d);
    p.max_degree = std::max(p.max_degree, d);
    if (d < q - tau) ++p.below;
  }
  p.mean_degree = static_cast<double>(sum) / g.n();
  return p;
}

struct ProbeTrial {
  std::vector<int> subset;
  std::size_t edges_to_other_part = 0;
  double sigma1_lower = 0;  // |Y| C(e/|Y|, 2)
  CertificateResult certificate;
  double m_star_normalized = 0;  // m* / |A|^1.5
};

struct ProbeReport {
  int trials = 0;
  std::size_t subset_size = 0;
  double delta = 0;
  std::uint64_t seed = 0;
  std::vector<ProbeTrial> runs;
  double min_norm = 0, median_norm = 0, max_norm = 0;
  bool all_pass = true;
};

// Samples `trials` subsets A of size ceil(q^(1+delta)) from one part of a
// bipartite C4-free graph (q = sqrt(n/2)) and reports the certified
// ceiling on edges insertable into each A.
inline ProbeReport remark_probe(const Graph& g, Part side, double delta,
                                int trials, std::uint64_t seed) {
  if (!g.bipartitioned())
    throw NotBipartitioned("remark_probe requires bipartition labels");
  std::vector<int> part, other;
  for (int v = 0; v < g.n(); ++v)
    (g.part(v) == side ? part : other).push_back(v);
  const double q = std::sqrt(g.n() / 2.0);
  const std::size_t size =
      static_cast<std::size_t>(std::ceil(std::pow(q, 1.0 + delta)));
  if (size > part.size())
    throw SubsetTooLarge("subset size " + std::to_string(size) +
                         " exceeds part size " + std::to_string(part.size()));
  ProbeReport rep;
  rep.trials = trials;
  rep.subset_size = size;
  rep.delta = delta;
  rep.seed = seed;
  std::vector<double> norms;
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + t);
    std::vector<int> pool = part;
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(size);
    std::sort(pool.begin(), pool.end());
    ProbeTrial run;
    run.subset = pool;
    for (int v : pool) run.edges_to_other_part += g.degree(v);
    double y = static_cast<double>(other.size());
    double avg = run.edges_to_other_part / y;
    run.sigma1_lower = y * std::max(0.0, avg * (avg - 1.0) / 2.0);
    run.certificate = path2_certificate(g, pool);
    run.m_star_normalized =
        run.certificate.m_star / std::pow(static_cast<double>(size), 1.5);
    rep.all_pass = rep.all_pass && run.certificate.pass;
    norms.push_back(run.m_star_normalized);
    rep.runs.push_back(std::move(run));
  }
  if (!norms.empty()) {
    std::sort(norms.begin(), norms.end());
    rep.min_norm = norms.front();
    rep.max_norm = norms.back();
    rep.median_norm = norms[norms.size() / 2];
  }
  return rep;
}

struct BoundsReport {
  int n = 0;
  std::uint64_t z_upper_value = 0;
  double half_n_pow15 = 0;  // (n/2)^1.5
  double n_pow125 = 0;      // n^1.25
  std::size_t z_lower_edges = 0;
  std::size_t dense_edges = 0;
  long gain = 0;
  double normalized_gain = 0;
};

inline BoundsReport bounds_report(int n) {
  BoundsReport r;
  r.n = n;
  r.z_upper_value = z_upper(static_cast<std::uint64_t>(n));
  r.half_n_pow15 = std::pow(n / 2.0, 1.5);
  r.n_pow125 = std::pow(static_cast<double>(n), 1.25);
  r.z_lower_edges = z_lower_construct(n).edge_count();
  r.dense_edges = dense_girth5(n).edge_count();
  r.gain = static_cast<long>(r.dense_edges) - static_cast<long>(r.z_lower_edges);
  r.normalized_gain = r.gain / r.n_pow125;
  return r;
}

struct SweepRow {
  int q = 0;
  int n = 0;
  std::size_t e_base = 0;
  std::size_t e_after_swap = 0;
  std::size_t e_after_greedy = 0;
  long gain = 0;
  double normalized_gain = 0;
  int pivot_degree = 0;
  double runtime_ms = 0;
};

inline SweepRow sweep_one(int q, bool with_timing = false) {
  auto t0 = std::chrono::steady_clock::now();
  Graph base = incidence_graph(q);
  AugmentOutcome out = run_augmentation(base, 0.1, default_supplier());
  SweepRow row;
  row.q = q;
  row.n = base.n();
  row.e_base = out.report.e_base;
  row.e_after_swap = out.report.e_base + out.report.swap_delta;
  row.e_after_greedy = out.report.e_final;
  row.gain = out.report.swap_delta;
  row.normalized_gain =
      row.gain / std::pow(static_cast<double>(row.n), 1.25);
  row.pivot_degree = out.report.pivot_degree;
  if (with_timing)
    row.runtime_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
  return row;
}

inline std::vector<SweepRow> sweep(const std::vector<int>& qs,
                                   bool with_timing = false) {
  std::vector<SweepRow> rows;
  for (int q : qs) rows.push_back(sweep_one(q, with_timing));
  return rows;
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "n,e_base,e_after_swap,e_after_greedy,gain,gain_per_n125,pivot_degree,"
      "runtime_ms\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%zu,%zu,%zu,%ld,%.6f,%d,%.3f\n", r.n,
                  r.e_base, r.e_after_swap, r.e_after_greedy, r.gain,
                  r.normalized_gain, r.pivot_degree, r.runtime_ms);
    out += buf;
  }
  return out;
}

}  // namespace girth5
