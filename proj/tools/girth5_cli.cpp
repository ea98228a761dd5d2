// Command line front end: constructions, exact search, verification,
// bounds reporting, sweeps and probe diagnostics.
//
// Exit codes: 0 success, 1 usage error, 2 verification/assertion failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "girth5/analysis.hpp"
#include "girth5/augment.hpp"
#include "girth5/exact_search.hpp"
#include "girth5/graph6.hpp"
#include "girth5/projective.hpp"
#include "girth5/zarankiewicz.hpp"

namespace {

using namespace girth5;

std::vector<int> parse_subset_spec(const std::string& spec) {
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dash = item.find('-');
    if (dash == std::string::npos) {
      out.push_back(std::stoi(item));
    } else {
      int lo = std::stoi(item.substr(0, dash));
      int hi = std::stoi(item.substr(dash + 1));
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    }
  }
  return out;
}

Graph load_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw MalformedGraph6("empty file " + path);
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.pop_back();
  return graph6_decode(line);
}

void emit_graph(const Graph& g, const std::string& out_path) {
  std::string payload = graph6_encode(g);
  if (out_path.empty()) {
    std::cout << payload << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write " + out_path);
    out << payload << "\n";
  }
  std::cout << "n=" << g.n() << " edges=" << g.edge_count();
  auto gi = girth(g);
  std::cout << " girth=" << (gi ? std::to_string(*gi) : "inf") << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"dense girth-5 graph constructions and exact extremal search"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "build a graph");
  int c_n = 0, c_q = 0;
  std::string c_method = "augmented", c_out;
  construct->add_option("--n", c_n, "number of vertices");
  construct->add_option("--q", c_q, "prime power order (incidence method)");
  construct->add_option("--method", c_method, "incidence|zlower|augmented|exact")
      ->check(CLI::IsMember({"incidence", "zlower", "augmented", "exact"}));
  construct->add_option("--out", c_out, "write graph6 to file");

  // verify
  auto* verify = app.add_subcommand("verify", "check a graph6 file");
  std::string v_file, v_cert;
  bool v_girth = false;
  verify->add_option("file", v_file, "graph6 file")->required();
  verify->add_flag("--girth", v_girth, "also print the girth");
  verify->add_option("--certificate", v_cert,
                     "vertex subset spec, e.g. 0-6 or 1,4,9");

  // exact
  auto* exact = app.add_subcommand("exact", "exact extremal value");
  int e_n = 0, e_threads = 1;
  bool e_bip = false, e_table = false;
  std::string e_budget = "default";
  exact->add_option("--n", e_n, "number of vertices");
  exact->add_flag("--bipartite", e_bip, "compute z(n,C4) instead of ex");
  exact->add_option("--budget", e_budget, "default|extended")
      ->check(CLI::IsMember({"default", "extended"}));
  exact->add_option("--threads", e_threads, "worker threads");
  exact->add_flag("--table", e_table, "verify the small-n table");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "bounds report for n");
  int b_n = 0;
  bounds->add_option("--n", b_n, "number of vertices")->required();

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "augmentation sweep over q");
  std::vector<int> s_qs;
  std::string s_csv;
  bool s_timing = false;
  sweep_cmd->add_option("--q", s_qs, "prime power list")->required();
  sweep_cmd->add_option("--csv", s_csv, "CSV output file");
  sweep_cmd->add_flag("--timing", s_timing,
                      "fill the runtime column (non-reproducible output)");

  // probe
  auto* probe = app.add_subcommand("probe", "remark path-count probe");
  int p_q = 0, p_trials = 20;
  double p_delta = 0.25;
  std::uint64_t p_seed = 1;
  std::string p_part = "X";
  probe->add_option("--q", p_q, "prime power order")->required();
  probe->add_option("--delta", p_delta, "size exponent in (0,1)");
  probe->add_option("--trials", p_trials, "number of sampled subsets");
  probe->add_option("--seed", p_seed, "master seed");
  probe->add_option("--part", p_part, "X or Y")
      ->check(CLI::IsMember({"X", "Y"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  }

  if (construct->parsed()) {
    Graph g;
    if (c_method == "incidence") {
      if (c_q <= 0) throw CLI::ValidationError("incidence method needs --q");
      g = incidence_graph(c_q);
    } else if (c_method == "zlower") {
      g = z_lower_construct(c_n);
    } else if (c_method == "augmented") {
      g = dense_girth5(c_n);
    } else {
      SearchLimits lim;
      SearchOutcome o = exact_ex(c_n, lim);
      g = o.witness;
    }
    emit_graph(g, c_out);
    return 0;
  }

  if (verify->parsed()) {
    Graph g = load_graph6_file(v_file);
    auto fr = is_girth5_free(g);
    std::cout << "n=" << g.n() << " edges=" << g.edge_count()
              << " girth5_free=" << (fr ? "yes" : "no");
    if (!fr) {
      std::cout << " witness=";
      for (std::size_t i = 0; i < fr.witness.size(); ++i)
        std::cout << (i ? "," : "") << fr.witness[i];
    }
    std::cout << "\n";
    if (v_girth) {
      auto gi = girth(g);
      std::cout << "girth=" << (gi ? std::to_string(*gi) : "inf") << "\n";
    }
    bool cert_ok = true;
    if (!v_cert.empty()) {
      auto cert = path2_certificate(g, parse_subset_spec(v_cert));
      std::cout << "certificate |A|=" << cert.subset.size()
                << " sigma_A=" << cert.sigma_a << " budget=" << cert.budget
                << " slack=" << cert.slack
                << " verdict=" << (cert.pass ? "pass" : "fail")
                << " m_star=" << cert.m_star << "\n";
      cert_ok = cert.pass;
    }
    return (fr && cert_ok) ? 0 : 2;
  }

  if (exact->parsed()) {
    SearchLimits lim;
    lim.extended = e_budget == "extended";
    lim.threads = e_threads;
    if (e_table) {
      TableReport rep = verify_small_table(lim);
      for (const auto& row : rep.rows) {
        std::cout << "n=" << row.n << " ex=" << row.ex;
        if (row.z >= 0) std::cout << " z=" << row.z;
        std::cout << "\n";
      }
      for (const auto& f : rep.failures) std::cout << "MISMATCH: " << f << "\n";
      std::cout << (rep.ok() ? "table OK" : "table FAILED") << "\n";
      return rep.ok() ? 0 : 2;
    }
    if (e_n <= 0) throw CLI::ValidationError("exact needs --n or --table");
    SearchOutcome o = e_bip ? exact_z(e_n, lim) : exact_ex(e_n, lim);
    std::cout << (e_bip ? "z(" : "ex(") << e_n << ") = " << o.best << "\n";
    std::cout << "witness " << graph6_encode(o.witness) << "\n";
    std::cout << "nodes " << o.nodes << "\n";
    std::cerr << "wall_ms " << o.millis << "\n";
    return 0;
  }

  if (bounds->parsed()) {
    BoundsReport r = bounds_report(b_n);
    std::cout << "n " << r.n << "\n"
              << "z_upper " << r.z_upper_value << "\n"
              << "(n/2)^1.5 " << r.half_n_pow15 << "\n"
              << "n^1.25 " << r.n_pow125 << "\n"
              << "z_lower_construct_edges " << r.z_lower_edges << "\n"
              << "dense_girth5_edges " << r.dense_edges << "\n"
              << "gain " << r.gain << "\n"
              << "normalized_gain " << r.normalized_gain << "\n";
    return 0;
  }

  if (sweep_cmd->parsed()) {
    auto rows = sweep(s_qs, s_timing);
    std::string csv = sweep_csv(rows);
    if (s_csv.empty()) {
      std::cout << csv;
    } else {
      std::ofstream out(s_csv);
      if (!out) throw Error("cannot write " + s_csv);
      out << csv;
      std::cout << "wrote " << s_csv << " (" << rows.size() << " rows)\n";
    }
    return 0;
  }

  if (probe->parsed()) {
    Graph g = incidence_graph(p_q);
    ProbeReport rep = remark_probe(g, p_part == "X" ? Part::X : Part::Y,
                                   p_delta, p_trials, p_seed);
    std::cout << "q " << p_q << " delta " << p_delta << " trials "
              << rep.trials << " seed " << rep.seed << " |A| "
              << rep.subset_size << "\n";
    for (int i = 0; i < static_cast<int>(rep.runs.size()); ++i) {
      const auto& run = rep.runs[i];
      std::cout << "trial " << i << " eAY " << run.edges_to_other_part
                << " sigma1_lb " << run.sigma1_lower << " sigmaA "
                << run.certificate.sigma_a << " slack "
                << run.certificate.slack << " m_star "
                << run.certificate.m_star << " verdict "
                << (run.certificate.pass ? "pass" : "fail") << "\n";
    }
    std::cout << "m_star_norm min " << rep.min_norm << " median "
              << rep.median_norm << " max " << rep.max_norm << "\n";
    return rep.all_pass ? 0 : 2;
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error&) {
    return 1;
  } catch (const girth5::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
