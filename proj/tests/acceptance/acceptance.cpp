// Acceptance run: one PASS/FAIL line per criterion; exits 1 when any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "lrank/certificate.hpp"
#include "lrank/colorers.hpp"
#include "lrank/error.hpp"
#include "lrank/lowerbound.hpp"
#include "lrank/numerics.hpp"
#include "lrank/ranking.hpp"

using namespace lrank;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double s = seconds_since(t0);
  if (o.ok && s > limit_s) o.fail("took " + std::to_string(s) + " s, limit " + std::to_string(limit_s) + " s");
  failures += !o.ok;
  std::printf("%s %2d %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, name.c_str(), s, o.detail.empty() ? "" : ": ",
              o.detail.c_str());
  std::fflush(stdout);
}

Ranking random_colors(int n, int k, int ell, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(1, k);
  std::vector<int> col(n);
  for (auto& x : col) x = c(rng);
  return Ranking(col, ell);
}

std::vector<char> membership(int n, const std::vector<int>& vs) {
  std::vector<char> in(n, 0);
  for (int v : vs) in[v] = 1;
  return in;
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t m = xs.size() / 2;
  return xs.size() % 2 ? xs[m] : (xs[m - 1] + xs[m]) / 2;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// 2 log n / log^(t) n
double growth_shape(int t, double n) { return 2 * std::log(n) / iter_log(t, n); }

}  // namespace

int main() {
  criterion(1, "verifier agrees with the oracle on random triples", 10, [] {
    Outcome o;
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> nd(1, 10);
    std::uniform_real_distribution<double> pd(0.1, 0.7);
    int disagreements = 0;
    const int runs = 600;
    for (int it = 0; it < runs; ++it) {
      const int n = nd(rng);
      const int ell = 1 + it % 3;
      Graph g = testing_helpers::random_graph(n, pd(rng), rng);
      Ranking r = random_colors(n, 1 + it % 5, ell, rng);
      disagreements += verify_ranking(g, r).has_value() != verify_ranking_oracle(g, r).has_value();
    }
    if (disagreements) o.fail(std::to_string(disagreements) + " disagreements");
    o.detail = o.ok ? std::to_string(runs) + " triples" : o.detail;
    return o;
  });

  criterion(2, "tree lower bound: star and complete 4-ary tree", 60, [] {
    Outcome o;
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    const int s = exact_chi(star, 2).chi;
    auto tree = complete_ary_tree(3).graph;
    const int c = exact_chi(tree, 2).chi;
    if (s != 2) o.fail("chi(K_1,3) = " + std::to_string(s));
    if (tree.n() != 21) o.fail("tree has " + std::to_string(tree.n()) + " vertices");
    if (c < 3) o.fail("chi(tree) = " + std::to_string(c));
    if (o.ok) o.detail = "chi(K_1,3) = 2, chi(tree) = " + std::to_string(c);
    return o;
  });

  criterion(3, "boost lower bounds at tiny scale", 180, [] {
    Outcome o;
    struct Case {
      BoostSpec spec;
      int need;
      const char* name;
    };
    const std::vector<Case> cases{{{Graph(1), 1, 1}, 2, "boost(K1,1,1)"},
                                  {{Graph(1), 1, 2}, 3, "boost(K1,1,2)"},
                                  {{path_graph(3), 2, 1}, 3, "boost(P3,2,1)"}};
    for (const auto& c : cases) {
      const auto t0 = Clock::now();
      const int chi = exact_chi(lrank::boost(c.spec).graph, 2).chi;
      if (chi < c.need) o.fail(std::string(c.name) + " has chi " + std::to_string(chi));
      if (seconds_since(t0) > 60) o.fail(std::string(c.name) + " over 60 s");
      o.detail += (o.detail.empty() ? "" : ", ") + std::string(c.name) + " = " + std::to_string(chi);
    }
    return o;
  });

  criterion(4, "apex over copies: exhaustive restricted search", 120, [] {
    Outcome o;
    long long rankings = 0;
    for (const Graph& u : {Graph(1), path_graph(3)}) {
      const int chi_u = exact_chi(u, 2).chi;
      for (int k = 1; k <= 3; ++k) {
        Graph g = apex_copies(u, k);
        if (g.n() > 20) o.fail("instance has " + std::to_string(g.n()) + " vertices");
        const int apex = g.n() - 1;
        for (int k0 = 1; k0 <= k; ++k0)
          for (int h = 1; h <= chi_u; ++h) {
            std::vector<std::vector<int>> allowed(g.n());
            for (int v = 0; v < apex; ++v)
              for (int c = k0; c <= k; ++c) allowed[v].push_back(c);
            for (int c = 1; c <= k + h + 1; ++c) allowed[apex].push_back(c);
            for_each_ranking(g, 2, allowed, [&](const std::vector<int>& phi) {
              ++rankings;
              if (phi[apex] < k0 + h) o.fail("apex colored " + std::to_string(phi[apex]));
              return o.ok;
            });
          }
      }
    }
    if (rankings == 0) o.fail("no rankings enumerated");
    if (o.ok) o.detail = std::to_string(rankings) + " rankings checked";
    return o;
  });

  criterion(5, "ruler ranking of P_100000 for l = 1..16", 16 * 5, [] {
    Outcome o;
    const int n = 100000;
    const Graph p = path_graph(n);
    int want_max = 0;
    for (int ell = 1; ell <= 16; ++ell) {
      const auto t0 = Clock::now();
      auto r = rank_path(n, ell);
      const int want = std::min(path_color_bound(ell), static_cast<int>(std::ceil(std::log2(n + 1.0))));
      if (r.max_color != want) o.fail("l=" + std::to_string(ell) + " uses " + std::to_string(r.max_color));
      if (verify_ranking(p, r)) o.fail("l=" + std::to_string(ell) + " violates");
      if (seconds_since(t0) > 5) o.fail("l=" + std::to_string(ell) + " over 5 s");
      want_max = std::max(want_max, want);
    }
    if (o.ok) o.detail = "up to " + std::to_string(want_max) + " colors";
    return o;
  });

  criterion(6, "pathwidth ranking bound on 300 random instances", 600, [] {
    Outcome o;
    int runs = 0, worst_gap = 1 << 30;
    for (int w = 1; w <= 3; ++w)
      for (int it = 0; it < 100; ++it) {
        const int n = 20 + (it * 37) % 481;
        const int ell = 1 + it % 3;
        auto inst = random_path_instance(n, w, 1000 * w + it);
        auto r = rank_pathwidth(inst.graph, inst.decomposition, ell);
        const int bound = (ell + 1) * inst.decomposition.width() + 1;
        if (verify_ranking(inst.graph, r)) o.fail("violation at w=" + std::to_string(w));
        if (r.max_color > bound)
          o.fail(std::to_string(r.max_color) + " colors over bound " + std::to_string(bound));
        worst_gap = std::min(worst_gap, bound - r.max_color);
        ++runs;
      }
    if (o.ok) o.detail = std::to_string(runs) + " runs, tightest gap " + std::to_string(worst_gap);
    return o;
  });

  criterion(7, "guard sets: endpoints, short-path closure and size", 120, [] {
    Outcome o;
    int runs = 0;
    for (int it = 0; it < 100; ++it) {
      const int w = it % 3;
      const int ell = 1 + (it / 3) % 3;
      const int n = 4 + it % 9;
      auto inst = random_path_instance(n, w, 5000 + it);
      auto u = guard_set(inst.graph, inst.decomposition, ell);
      auto in = membership(n, u.vertices);
      for (int v : inst.decomposition.bags.front())
        if (!in[v]) o.fail("first bag not covered");
      for (int v : inst.decomposition.bags.back())
        if (!in[v]) o.fail("last bag not covered");
      testing_helpers::for_each_induced_path(inst.graph, ell, [&](const std::vector<int>& p) {
        if (!in[p.front()] || !in[p.back()]) return;
        for (int v : p)
          if (!in[v]) o.fail("short induced path leaves U");
      });
      const int t = inst.decomposition.width();
      // closed form only for l >= 2; for l = 1 the recurrence is linear
      const long long bound =
          ell >= 2 ? (3 * std::llround(std::pow(ell, t + 1)) - std::llround(std::pow(ell, t)) - ell - 1) / (ell - 1)
                   : guard_bound(t, ell);
      if (static_cast<long long>(u.vertices.size()) > bound)
        o.fail("|U| = " + std::to_string(u.vertices.size()) + " over " + std::to_string(bound));
      ++runs;
    }
    if (o.ok) o.detail = std::to_string(runs) + " instances";
    return o;
  });

  criterion(8, "simple t-tree ranking: validity, band bound, restarts, growth, runtime", 1800, [] {
    Outcome o;
    const int ell = 2;
    const std::vector<int> sizes{100, 1000, 10000, 100000};
    const int seeds = 3;
    std::ostringstream info;
    for (int t = 1; t <= 3; ++t) {
      std::vector<double> med_max(sizes.size()), med_distinct(sizes.size());
      for (std::size_t si = 0; si < sizes.size(); ++si) {
        const int n = sizes[si];
        std::vector<double> mx, ds;
        for (int s = 0; s < seeds; ++s) {
          auto inst = random_simple_ttree(n, t, 100 * t + 17 * s + si);
          const auto t0 = Clock::now();
          auto r = rank_simple_ttree(inst.graph, inst.decomposition, ell, t);
          const double took = seconds_since(t0);
          const std::string at = " (t=" + std::to_string(t) + ", n=" + std::to_string(n) + ")";
          if (verify_ranking(inst.graph, r.ranking, 4)) o.fail("violation" + at);
          if (r.colors > r.a * r.k + 1e-9)
            o.fail(std::to_string(r.colors) + " colors over a*k = " + fmt(r.a * r.k) + at);
          if (r.restarts > 5) o.fail(std::to_string(r.restarts) + " restarts" + at);
          if (n == 100000 && took > 60) o.fail("took " + fmt(took) + " s" + at);
          mx.push_back(r.colors);
          ds.push_back(r.distinct_colors);
        }
        med_max[si] = median(mx);
        med_distinct[si] = median(ds);
      }
      const double got = med_max.back() / med_max.front();
      const double allowed = 1.5 * growth_shape(t, sizes.back()) / growth_shape(t, sizes.front());
      if (got > allowed + 1e-9)
        o.fail("t=" + std::to_string(t) + " colors grow " + fmt(med_max.front()) + " -> " + fmt(med_max.back()) +
               " (x" + fmt(got) + "), allowed x" + fmt(allowed));
      info << " t=" << t << ": max " << med_max.front() << "->" << med_max.back() << " (x" << fmt(got)
           << ", allowed x" << fmt(allowed) << "), distinct " << med_distinct.front() << "->"
           << med_distinct.back() << " (x" << fmt(med_distinct.back() / med_distinct.front()) << ");";
    }
    o.detail = (o.ok ? "" : o.detail + " |") + info.str();
    return o;
  });

  criterion(9, "product pipeline H x K3 x P20 with a random simple 3-tree host", 60, [] {
    Outcome o;
    const int ell = 2;
    auto host = random_simple_ttree(50, 3, 9);
    auto cert = product_certificate(host.graph, host.decomposition, 3, 20);
    Graph target = strong_product({host.graph, complete_graph(3), path_graph(20)}).graph;
    if (target.n() != 3000) o.fail("target has " + std::to_string(target.n()) + " vertices");
    auto res = rank_certificate(cert, target, ell);
    if (verify_ranking(target, res.ranking)) o.fail("violation");
    const int hc = res.host_ranking.max_color;
    if (res.ranking.max_color > 3 * (ell + 1) * hc)
      o.fail(std::to_string(res.ranking.max_color) + " colors over 9 * " + std::to_string(hc));
    if (o.ok) o.detail = std::to_string(res.ranking.max_color) + " colors, host " + std::to_string(hc);
    return o;
  });

  criterion(10, "distance colouring of K_m x P_30 by brute force", 60, [] {
    Outcome o;
    for (int m : {3, 5, 7})
      for (int ell = 1; ell <= 3; ++ell) {
        auto p = distance_colour_clique_path(m, 30, ell);
        Graph g = strong_product({complete_graph(m), path_graph(30)}).graph;
        const std::set<int> used(p.values.begin(), p.values.end());
        if (static_cast<int>(used.size()) != m * (ell + 1))
          o.fail("m=" + std::to_string(m) + " l=" + std::to_string(ell) + " uses " + std::to_string(used.size()));
        for (int s = 0; s < g.n(); ++s) {
          auto lay = bfs_layering(g, {s});
          for (int v = 0; v < g.n(); ++v)
            if (v != s && lay.layer_of[v] <= ell && p.values[s] == p.values[v])
              o.fail("clash at distance " + std::to_string(lay.layer_of[v]));
        }
      }
    return o;
  });

  criterion(11, "numerics: gamma endpoints, inequality grid, solve_k(2,256)", 30, [] {
    Outcome o;
    for (int i = 0; i <= 2; ++i)
      for (double k : {tower(i) + 0.5, tower(i) + 3, 40.0, 200.0}) {
        if (std::fabs(gamma(i, k, 1.0) - k) > 1e-9 * std::max(1.0, k)) o.fail("gamma(n=1) != k");
        if (std::fabs(gamma_log(i, k, log_power_tower(i, k)) - tower(i)) > 1e-9 * std::max(1.0, k))
          o.fail("gamma at the far end != tower");
      }
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> e(-3, 6), ea(-6, 6);
    int points = 0;
    for (int it = 0; it < 1000; ++it) {
      const double x = std::pow(10.0, e(rng));
      const double a = it % 10 == 0 ? 0.0 : std::pow(10.0, ea(rng));
      if (ineq_log_shift_slack(x, a) < -1e-12 * std::max(1.0, std::log(x + a))) o.fail("log shift fails");
      for (int i = 1; i <= 3; ++i) {
        const double xi = tower(i - 1) * (1.0 + std::pow(10.0, e(rng) - 2));
        if (ineq_iter_log_shift_slack(i, xi, a) < -1e-12 * std::max(1.0, std::fabs(iter_log(i, xi + a))))
          o.fail("iterated log shift fails");
        if (iter_log(i, xi) > 0 && ineq_iter_log_ratio_slack(i, xi, a) < -1e-9) o.fail("ratio fails");
      }
      ++points;
    }
    if (solve_k(2, 256).k != 4.0) o.fail("solve_k(2,256) = " + fmt(solve_k(2, 256).k));
    if (o.ok) o.detail = std::to_string(points) + " grid points";
    return o;
  });

  criterion(12, "structural observations and size claim on 200 instances", 300, [] {
    Outcome o;
    using testing_helpers::is_ancestor;
    for (int it = 0; it < 200; ++it) {
      const int t = 1 + it % 3;
      const int n = t + 2 + (it * 7) % (39 - t);
      auto inst = it % 2 ? random_ktree(n, t, 7000 + it) : random_simple_ttree(n, t, 7000 + it);
      const auto& g = inst.graph;
      const auto& d = inst.decomposition;
      auto x = min_depth_bags(d, n);
      auto below = [&](int u, int v) { return is_ancestor(d, x[u], x[v]); };
      if (n <= 20)
        testing_helpers::for_each_induced_path(g, n - 1, [&](const std::vector<int>& p) {
          for (std::size_t i = 1; i + 1 < p.size(); ++i)
            if (!below(p[i], p.front()) && !below(p[i], p.back())) o.fail("induced path not unimodal");
        });
      auto lay = bfs_layering(g, d.bag(d.root()));
      for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
          if (lay.layer_of[v] < lay.layer_of[w] && x[w] != x[v] && is_ancestor(d, x[w], x[v]))
            o.fail("tree order against layer order");
      for (int i = 1; i <= lay.depth(); ++i) {
        std::vector<int> deep;
        for (int v = 0; v < n; ++v)
          if (lay.layer_of[v] >= i) deep.push_back(v);
        auto sub = induced_subgraph(g, deep);
        for (const auto& comp : connected_components(sub.graph)) {
          std::set<int> up;
          for (int v : comp)
            for (int w : g.neighbours(sub.to_parent[v]))
              if (lay.layer_of[w] == i - 1) up.insert(w);
          if (static_cast<int>(up.size()) > t) o.fail("component with " + std::to_string(up.size()) + " up-neighbours");
        }
        auto kappa = subtree_weights(g, d, lay, i, t);
        double sum = 0;
        for (int v : lay.layers[i]) sum += kappa[v];
        if (sum > t * static_cast<double>(n)) o.fail("size claim fails");
      }
    }
    return o;
  });

  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
