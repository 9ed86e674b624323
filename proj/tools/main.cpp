#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lrank/certificate.hpp"
#include "lrank/colorers.hpp"
#include "lrank/decomposition.hpp"
#include "lrank/error.hpp"
#include "lrank/graph.hpp"
#include "lrank/lowerbound.hpp"
#include "lrank/numerics.hpp"
#include "lrank/ranking.hpp"

using namespace lrank;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string path_string(const std::vector<int>& p) {
  std::string s;
  for (int v : p) s += (s.empty() ? "" : " ") + std::to_string(v + 1);
  return s;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string gr_text(const Graph& g) {
  std::ostringstream s;
  write_gr(s, g);
  return s.str();
}

// Walks a path-shaped tree decomposition from one end.
PathDecomposition as_path(const TreeDecomposition& d) {
  PathDecomposition pd;
  if (d.size() == 0) return pd;
  std::vector<std::vector<int>> adj(d.size());
  for (auto [x, y] : d.tree_edges()) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  int start = -1;
  for (int x = 0; x < d.size(); ++x) {
    if (adj[x].size() > 2) throw Error(ErrorCode::InvalidDecomposition, "decomposition tree is not a path");
    if (adj[x].size() <= 1 && start < 0) start = x;
  }
  for (int prev = -1, x = start; x >= 0;) {
    pd.bags.push_back(d.bag(x));
    int next = -1;
    for (int y : adj[x])
      if (y != prev) next = y;
    prev = x;
    x = next;
  }
  return pd;
}

struct Verdict {
  bool ok = true;
  std::string text = "Ok";
};

Verdict check(const Graph& g, const Ranking& r, bool oracle) {
  auto bad = oracle ? verify_ranking_oracle(g, r) : verify_ranking(g, r);
  if (!bad) return {};
  return {false, "Violation " + path_string(bad->witness_path)};
}

// ---- gen ----

struct GenOpts {
  std::string family;
  int t = 1, r = 2, h = 1, m = 0, n = 10, base = 1;
  std::uint64_t seed = 1;
  std::string out, td_out;
};

int run_gen(const GenOpts& o) {
  Graph g;
  std::optional<TreeDecomposition> d;
  if (o.family == "ary-tree") {
    g = complete_ary_tree(o.r).graph;
    d = tree_decomposition_of_tree(g, 0);
  } else if (o.family == "boost") {
    BoostSpec spec{path_graph(o.base), o.h, o.m};
    g = lrank::boost(spec).graph;
    d = boost_decomposition(tree_decomposition_of_tree(spec.base, 0), spec);
  } else if (o.family == "lb") {
    auto lb = lowerbound_graph(o.t, o.r);
    if (lb.below_tower) std::cerr << "note: r < tower(t), the chi >= r guarantee is not claimed\n";
    g = lb.graph;
    d = lb.decomposition;
  } else if (o.family == "simple-ttree") {
    auto s = random_simple_ttree(o.n, o.t, o.seed);
    g = s.graph;
    d = s.decomposition;
  } else if (o.family == "ktree") {
    auto s = random_ktree(o.n, o.t, o.seed);
    g = s.graph;
    d = s.decomposition;
  } else if (o.family == "path-instance") {
    auto s = random_path_instance(o.n, o.t, o.seed);
    g = s.graph;
    d = s.decomposition.as_tree();
  } else if (o.family == "path") {
    g = path_graph(o.n);
    std::vector<std::vector<int>> bags;
    for (int i = 0; i + 1 < o.n; ++i) bags.push_back({i, i + 1});
    if (o.n == 1) bags.push_back({0});
    d = PathDecomposition{bags}.as_tree();
  } else {
    throw UsageError("unknown family '" + o.family + "'");
  }
  write_text(o.out, gr_text(g));
  if (!o.td_out.empty()) write_td_file(o.td_out, *d, g.n());
  return kExitOk;
}

// ---- color ----

struct ColorOpts {
  std::string algo;
  std::string graph, td, cert, out, graph_out;
  int n = 0, ell = 2, t = 0, m = 3, len = 0, root_bag = 1;
  bool no_verify = false, compress = false;
};

int run_color(const ColorOpts& o) {
  Graph g;
  Ranking r;
  std::string meta = "algo " + o.algo;
  auto need = [&](const std::string& v, const char* flag) {
    if (v.empty()) throw UsageError(std::string("--algo ") + o.algo + " needs " + flag);
  };
  auto load_td = [&](const Graph& host) {
    need(o.td, "--td");
    int n_td = 0;
    auto d = read_td_file(o.td, o.root_bag, &n_td);
    if (n_td != host.n())
      throw UsageError("decomposition declares " + std::to_string(n_td) + " vertices, graph has " +
                       std::to_string(host.n()));
    return d;
  };
  if (o.algo == "path") {
    int n = o.n;
    if (!o.graph.empty()) {
      g = read_gr_file(o.graph);
      if (!(g == path_graph(g.n()))) throw UsageError("--algo path needs the path 1-2-...-n");
      n = g.n();
    } else {
      if (n < 1) throw UsageError("--algo path needs --n or --graph");
      g = path_graph(n);
    }
    r = rank_path(n, o.ell);
  } else if (o.algo == "pathwidth") {
    need(o.graph, "--graph");
    g = read_gr_file(o.graph);
    r = rank_pathwidth(g, as_path(load_td(g)), o.ell);
  } else if (o.algo == "simple-ttree") {
    need(o.graph, "--graph");
    g = read_gr_file(o.graph);
    auto d = load_td(g);
    auto res = rank_simple_ttree(g, d, o.ell, o.t > 0 ? std::optional<int>(o.t) : std::nullopt);
    std::ostringstream s;
    s << " t " << res.t << " k " << res.k << " a " << res.a << " restarts " << res.restarts;
    meta += s.str();
    std::cerr << "max color " << res.colors << ", distinct " << res.distinct_colors << ", k " << res.k
              << ", a " << res.a << ", restarts " << res.restarts << '\n';
    r = res.ranking;
  } else if (o.algo == "product") {
    need(o.graph, "--graph");
    if (o.len < 1) throw UsageError("--algo product needs --len >= 1");
    Graph host = read_gr_file(o.graph);
    auto cert = product_certificate(host, load_td(host), o.m, o.len);
    g = strong_product({host, complete_graph(o.m), path_graph(o.len)}).graph;
    auto res = rank_certificate(cert, g, o.ell);
    std::cerr << "host colors " << res.host_ranking.max_color << ", psi values " << res.psi.count << '\n';
    r = res.ranking;
  } else if (o.algo == "certificate") {
    need(o.cert, "--cert");
    need(o.graph, "--graph");
    g = read_gr_file(o.graph);
    auto res = rank_certificate(read_certificate_file(o.cert), g, o.ell);
    std::cerr << "host colors " << res.host_ranking.max_color << ", psi values " << res.psi.count << '\n';
    r = res.ranking;
  } else {
    throw UsageError("unknown algorithm '" + o.algo + "'");
  }
  if (o.compress) r = compress_colors(r);
  if (!o.no_verify) {
    auto v = check(g, r, false);
    if (!v.ok) {
      std::cerr << v.text << '\n';
      return kExitFailed;
    }
  }
  std::cerr << "colors " << r.max_color << (o.no_verify ? " (not verified)" : ", verified Ok") << '\n';
  std::ostringstream s;
  write_ranking(s, r, meta);
  write_text(o.out, s.str());
  if (!o.graph_out.empty()) write_text(o.graph_out, gr_text(g));
  return kExitOk;
}

// ---- verify / exact ----

int run_verify(const std::string& graph, const std::string& ranking, int ell, bool oracle) {
  Graph g = read_gr_file(graph);
  Ranking r = read_ranking_file(ranking);
  if (ell > 0) r.ell = ell;
  if (static_cast<int>(r.colors.size()) != g.n())
    throw UsageError("ranking has " + std::to_string(r.colors.size()) + " vertices, graph has " +
                     std::to_string(g.n()));
  auto v = check(g, r, oracle);
  std::cout << v.text << '\n' << "colors " << r.max_color << '\n';
  return v.ok ? kExitOk : kExitFailed;
}

int run_exact(const std::string& graph, int ell, std::uint64_t budget, const std::string& witness) {
  Graph g = read_gr_file(graph);
  auto limits = default_limits();
  if (budget > 0) limits.max_nodes = budget;
  auto res = exact_chi(g, ell, limits);
  std::cout << res.chi << '\n';
  std::cerr << "search nodes " << res.nodes << '\n';
  if (!witness.empty()) write_ranking_file(witness, res.witness, "exact");
  return kExitOk;
}

// ---- bench ----

struct BenchOpts {
  std::string family = "simple-ttree";
  std::vector<int> ells{2}, sizes{100}, ts{2};
  int seeds = 1, jobs = 1;
  std::uint64_t seed = 1;
  std::string out;
  bool no_timing = false;
};

struct BenchCase {
  std::string id;
  int n, t, ell;
  std::uint64_t seed;
};

struct RunRecord {
  std::string algorithm;
  int colors = 0, distinct = 0, a = 0, restarts = 0;
  double k = 0, wall_ms = 0;
  std::string verdict;
};

RunRecord bench_one(const std::string& family, const BenchCase& c) {
  RunRecord rec;
  Graph g;
  Ranking r;
  auto start = std::chrono::steady_clock::now();
  try {
    if (family == "simple-ttree") {
      rec.algorithm = "simple-ttree";
      auto inst = random_simple_ttree(c.n, c.t, c.seed);
      g = inst.graph;
      auto res = rank_simple_ttree(g, inst.decomposition, c.ell, c.t);
      r = res.ranking;
      rec.k = res.k;
      rec.a = res.a;
      rec.restarts = res.restarts;
    } else if (family == "pathwidth") {
      rec.algorithm = "pathwidth";
      auto inst = random_path_instance(c.n, c.t, c.seed);
      g = inst.graph;
      r = rank_pathwidth(g, inst.decomposition, c.ell);
    } else {
      rec.algorithm = "path";
      g = path_graph(c.n);
      r = rank_path(c.n, c.ell);
    }
    rec.verdict = verify_ranking(g, r) ? "Violation" : "Ok";
  } catch (const Error& e) {
    rec.verdict = to_string(e.code());
  }
  rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  rec.colors = r.max_color;
  rec.distinct = r.colors.empty() ? 0 : compress_colors(r).max_color;
  return rec;
}

int run_bench(const BenchOpts& o) {
  if (o.family != "simple-ttree" && o.family != "pathwidth" && o.family != "path")
    throw UsageError("bench family must be simple-ttree, pathwidth or path");
  std::vector<BenchCase> cases;
  const std::vector<int> ts = o.family == "path" ? std::vector<int>{1} : o.ts;
  for (int t : ts)
    for (int ell : o.ells)
      for (int n : o.sizes)
        for (int j = 0; j < o.seeds; ++j) {
          const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(j);
          std::ostringstream id;
          id << o.family << "-t" << t << "-l" << ell << "-n" << n << "-s" << seed;
          cases.push_back({id.str(), n, t, ell, seed});
        }
  std::vector<RunRecord> recs(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < cases.size();) recs[i] = bench_one(o.family, cases[i]);
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < std::max(1, o.jobs); ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::ostringstream s;
  s << "# lrank bench schema 1\n"
       "instance_id,family,n,t,ell,algorithm,colors,distinct_colors,k,a,restarts,wall_ms,verdict,seed\n";
  s << std::setprecision(6);
  bool all_ok = true;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& c = cases[i];
    const auto& r = recs[i];
    all_ok = all_ok && r.verdict == "Ok";
    s << c.id << ',' << o.family << ',' << c.n << ',' << c.t << ',' << c.ell << ',' << r.algorithm << ','
      << r.colors << ',' << r.distinct << ',' << r.k << ',' << r.a << ',' << r.restarts << ','
      << std::fixed << std::setprecision(3) << (o.no_timing ? 0.0 : r.wall_ms) << std::defaultfloat
      << std::setprecision(6) << ',' << r.verdict << ',' << c.seed << '\n';
  }
  write_text(o.out, s.str());
  return all_ok ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"l-ranking toolkit: generate, color, verify, solve exactly, benchmark"};
  app.set_help_flag("--help", "print help");  // -h would clash with gen --h
  app.require_subcommand(1);
  app.set_version_flag("--version", "lrank 1.0");

  GenOpts gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a graph (.gr) and optionally its decomposition (.td)");
  gen_cmd->add_option("--family", gen.family, "ary-tree, boost, lb, simple-ttree, ktree, path-instance, path")
      ->required();
  gen_cmd->add_option("--t", gen.t, "width parameter");
  gen_cmd->add_option("--r", gen.r, "lower-bound target / tree parameter");
  gen_cmd->add_option("--h", gen.h, "boost h");
  gen_cmd->add_option("--m", gen.m, "boost m");
  gen_cmd->add_option("--base", gen.base, "boost base graph P_base (1 means K_1)");
  gen_cmd->add_option("--n", gen.n, "vertex count for random families");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed");
  gen_cmd->add_option("-o,--out", gen.out, "graph file (stdout when omitted)");
  gen_cmd->add_option("--td-out", gen.td_out, "decomposition file");

  ColorOpts col;
  auto* color_cmd = app.add_subcommand("color", "compute an l-ranking");
  color_cmd->add_option("--algo", col.algo, "path, pathwidth, simple-ttree, product, certificate")
      ->required()
      ->check(CLI::IsMember({"path", "pathwidth", "simple-ttree", "product", "certificate"}));
  color_cmd->add_option("--graph", col.graph, "input graph; the host graph for --algo product");
  color_cmd->add_option("--td", col.td, "tree decomposition of the graph");
  color_cmd->add_option("--root-bag", col.root_bag, "root bag id in the .td file");
  color_cmd->add_option("--cert", col.cert, "product certificate");
  color_cmd->add_option("--n", col.n, "path length for --algo path");
  color_cmd->add_option("--ell", col.ell, "path length bound l")->check(CLI::PositiveNumber);
  color_cmd->add_option("--t", col.t, "simple width (defaults to the decomposition width)");
  color_cmd->add_option("--m", col.m, "clique size for --algo product");
  color_cmd->add_option("--len", col.len, "path factor length for --algo product");
  color_cmd->add_option("-o,--out", col.out, "ranking file (stdout when omitted)");
  color_cmd->add_option("--graph-out", col.graph_out, "also write the colored graph");
  color_cmd->add_flag("--no-verify", col.no_verify, "skip the final verification");
  color_cmd->add_flag("--compress", col.compress, "relabel used colors onto 1..#distinct");

  std::string v_graph, v_ranking;
  int v_ell = 0;
  bool v_oracle = false;
  auto* verify_cmd = app.add_subcommand("verify", "check a ranking");
  verify_cmd->add_option("--graph", v_graph)->required();
  verify_cmd->add_option("--ranking", v_ranking)->required();
  verify_cmd->add_option("--ell", v_ell, "override the l recorded in the ranking file");
  verify_cmd->add_flag("--oracle", v_oracle, "use exhaustive path enumeration (n <= 14)");

  std::string e_graph, e_witness;
  int e_ell = 2;
  std::uint64_t e_budget = 0;
  auto* exact_cmd = app.add_subcommand("exact", "exact chi_l by branch and bound");
  exact_cmd->add_option("--graph", e_graph)->required();
  exact_cmd->add_option("--ell", e_ell)->check(CLI::PositiveNumber);
  exact_cmd->add_option("--budget", e_budget, "search node budget (default RANK_BUDGET_NODES or 1e8)");
  exact_cmd->add_option("--witness", e_witness, "write an optimal ranking here");

  BenchOpts bench;
  auto* bench_cmd = app.add_subcommand("bench", "run a batch and emit RunRecord CSV");
  bench_cmd->add_option("--family", bench.family, "simple-ttree, pathwidth, path");
  bench_cmd->add_option("--ell", bench.ells)->delimiter(',');
  bench_cmd->add_option("--sizes", bench.sizes)->delimiter(',');
  bench_cmd->add_option("--t", bench.ts, "widths (pathwidth for the pathwidth family)")->delimiter(',');
  bench_cmd->add_option("--seeds", bench.seeds, "instances per configuration");
  bench_cmd->add_option("--seed", bench.seed, "first seed");
  bench_cmd->add_option("--jobs", bench.jobs, "worker threads");
  bench_cmd->add_option("-o,--out", bench.out, "CSV file (stdout when omitted)");
  bench_cmd->add_flag("--no-timing", bench.no_timing, "write wall_ms as 0 for byte-stable output");

  int g_i = 0;
  double g_k = 0, g_n = 1;
  auto* gamma_cmd = app.add_subcommand("gamma", "solve (log^(i) k)^k / (log^(i) x)^x = n for x");
  gamma_cmd->add_option("--i", g_i)->required();
  gamma_cmd->add_option("--k", g_k)->required();
  gamma_cmd->add_option("--n", g_n)->required();

  int s_t = 2;
  double s_n = 1;
  auto* solvek_cmd = app.add_subcommand("solve-k", "least k with (log^(t-2) k)^k >= n");
  solvek_cmd->add_option("--t", s_t)->required();
  solvek_cmd->add_option("--n", s_n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*color_cmd) return run_color(col);
    if (*verify_cmd) return run_verify(v_graph, v_ranking, v_ell, v_oracle);
    if (*exact_cmd) return run_exact(e_graph, e_ell, e_budget, e_witness);
    if (*bench_cmd) return run_bench(bench);
    if (*gamma_cmd) {
      std::cout << std::setprecision(12) << gamma(g_i, g_k, g_n) << '\n';
      return kExitOk;
    }
    if (*solvek_cmd) {
      auto k = solve_k(s_t, s_n);
      std::cout << std::setprecision(12) << k.k << '\n';
      if (k.closed_form_defined) std::cerr << "closed form 2 log n / log^(t) n = " << k.closed_form << '\n';
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    const auto c = e.code();
    return c == ErrorCode::ParseError || c == ErrorCode::InvalidArgument ? kExitUsage : kExitFailed;
  }
  return kExitUsage;
}
