#include <algorithm>
#include <cmath>
#include <string>

#include "detail.hpp"
#include "lrank/error.hpp"
#include "lrank/numerics.hpp"

namespace lrank {

namespace {

using Occ = std::vector<std::vector<int>>;

struct Piece {
  Graph g;
  TreeDecomposition d;
  Occ occ;
};

struct Budget {
  int t = 2;
  double k = 1;
  double log_top = 0;  // log of (log^(t-2) k)^k
  int cap = 0;         // floor(a k), the largest color this budget may hand out
};

[[noreturn]] void overflow(const std::string& what) { throw Error(ErrorCode::BandOverflow, what); }

double log_power(int i, double x) {
  if (i == 0) return x * std::log(x);
  return log_power_tower(i, x);
}

bool is_linear_forest(const Graph& g) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) > 2) return false;
  return g.edge_count() + connected_components(g).size() == static_cast<std::size_t>(g.n());
}

class Colorer {
 public:
  Colorer(int ell, int a, std::vector<BandRecord>& ledger, bool& bands_ok)
      : ell_(ell), a_(a), ledger_(ledger), bands_ok_(bands_ok) {}

  // Ranks every component separately; colors start at 1. t_fixed > 0 pins the
  // width parameter, otherwise each component uses its measured width.
  std::vector<int> rank_graph(const Graph& g, const TreeDecomposition& d, int t_fixed) {
    const int n = g.n();
    std::vector<int> col(n, 0);
    if (n == 0) return col;
    Occ occ = occurrences(d, n);
    for (const auto& comp : connected_components(g)) {
      if (comp.size() == 1) {
        col[comp[0]] = 1;
        continue;
      }
      Piece p = extract(g, d, occ, comp, nullptr);
      const int t = t_fixed > 0 ? t_fixed : p.d.width();
      auto c = rank_component(p, t);
      for (std::size_t i = 0; i < comp.size(); ++i) col[comp[i]] = c[i];
    }
    return col;
  }

  bool used_fallback() const { return fallback_; }

 private:
  int ceil_band(const Budget& b, double c) const {
    return static_cast<int>(std::floor(a_ * (b.k - c)));
  }

  double log_f(const Budget& b, double x) const { return b.log_top - log_power(b.t - 2, x); }

  double gamma_of(const Budget& b, double n) const {
    try {
      return gamma_log(b.t - 2, b.k, std::log(n));
    } catch (const Error&) {
      return tower(b.t - 2);
    }
  }

  std::vector<int> rank_component(const Piece& p, int t) {
    const int n = p.g.n();
    std::vector<int> col(n, 0);
    for (const auto& bag : p.d.bags())
      if (static_cast<int>(bag.size()) == n) {
        for (int v = 0; v < n; ++v) col[v] = v + 1;
        return col;
      }
    if (t <= 1 || p.d.width() <= 1) {
      bool path = p.g.edge_count() == static_cast<std::size_t>(n - 1);
      int end = -1;
      for (int v = 0; v < n && path; ++v) {
        if (p.g.degree(v) > 2) path = false;
        if (p.g.degree(v) == 1) end = v;
      }
      if (path && end >= 0) {
        auto r = rank_path(n, ell_);
        for (int i = 0, prev = -1, v = end; i < n; ++i) {
          col[v] = r.colors[i];
          int nx = -1;
          for (int w : p.g.neighbours(v))
            if (w != prev) nx = w;
          prev = v;
          v = nx;
          if (v < 0) break;
        }
        return col;
      }
      if (t <= 1) fallback_ = true;
      t = std::max(t, 2);
    }
    Budget b;
    b.t = t;
    b.k = solve_k(t, n).k;
    b.log_top = log_power(t - 2, b.k);
    b.cap = static_cast<int>(std::floor(a_ * b.k));
    const double c0 = gamma_of(b, n);
    technical(p, b, c0, nullptr, ceil_band(b, c0), col);
    if (!top_level_) col = compress_colors(Ranking(std::move(col), ell_)).colors;
    return col;
  }

  // Blocks of ell+2 BFS layers. The first block is ranked by slack() below
  // `ceiling`; the root and the dangerous vertices go above it; every deeper
  // component hangs off its up-neighbours as a fresh block.
  void technical(const Piece& p, const Budget& b, double c, const std::vector<int>* root_colors,
                 int ceiling, std::vector<int>& col) {
    const int n = p.g.n();
    const int block = block_counter_++;
    const std::vector<int>& root = p.d.bag(p.d.root());
    Layering lay = bfs_layering(p.g, root);
    const int deep = ell_ + 2;
    const int h0_last = std::min(lay.depth(), ell_ + 1);

    std::vector<int> h0;
    for (int i = 0; i <= h0_last; ++i) h0.insert(h0.end(), lay.layers[i].begin(), lay.layers[i].end());
    std::sort(h0.begin(), h0.end());

    // Components X of the layers >= ell+2 and their up-neighbour sets C_X.
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> xs, cs;
    for (int i = deep; i <= lay.depth(); ++i)
      for (int s : lay.layers[i]) {
        if (comp[s] >= 0) continue;
        const int id = static_cast<int>(xs.size());
        std::vector<int> x{s};
        comp[s] = id;
        for (std::size_t q = 0; q < x.size(); ++q)
          for (int w : p.g.neighbours(x[q]))
            if (comp[w] < 0 && lay.layer_of[w] >= deep) {
              comp[w] = id;
              x.push_back(w);
            }
        std::sort(x.begin(), x.end());
        std::vector<int> up;
        for (int v : x)
          for (int w : p.g.neighbours(v))
            if (lay.layer_of[w] == deep - 1) up.push_back(w);
        std::sort(up.begin(), up.end());
        up.erase(std::unique(up.begin(), up.end()), up.end());
        xs.push_back(std::move(x));
        cs.push_back(std::move(up));
      }

    const double s = slack_step(b.t, c);
    const double log_n0 = log_f(b, c + s);
    std::vector<double> kappa(n, 0.0);
    if (lay.depth() >= deep - 1)
      for (int v : lay.layers[deep - 1]) kappa[v] = b.t;  // t - 1 + |{v}|
    for (std::size_t id = 0; id < xs.size(); ++id)
      for (int v : cs[id]) kappa[v] += static_cast<double>(xs[id].size());

    std::vector<double> w(h0.size(), 1.0);
    std::vector<int> dangerous;
    for (std::size_t i = 0; i < h0.size(); ++i) {
      const int v = h0[i];
      if (lay.layer_of[v] != deep - 1) continue;
      if (std::log(kappa[v]) > log_n0) {
        dangerous.push_back(v);
        w[i] = std::exp(std::min(log_n0, 700.0));
      } else {
        w[i] = kappa[v];
      }
    }

    {
      Piece q = extract(p.g, p.d, p.occ, h0, nullptr);
      std::vector<int> qc(h0.size(), 0);
      slack(q, w, b, c, ceiling, block, qc);
      for (std::size_t i = 0; i < h0.size(); ++i) col[h0[i]] = qc[i];
    }
    int interior_lo = 0, interior_hi = 0;
    {
      std::vector<char> special(n, 0);
      for (int v : root) special[v] = 1;
      for (int v : dangerous) special[v] = 1;
      for (int v : h0)
        if (!special[v]) {
          interior_lo = interior_lo == 0 ? col[v] : std::min(interior_lo, col[v]);
          interior_hi = std::max(interior_hi, col[v]);
        }
    }

    std::vector<int> top_colors;
    if (root_colors) {
      for (std::size_t i = 0; i < root.size(); ++i) col[root[i]] = (*root_colors)[i];
    } else {
      int next = ceiling + 1;
      for (int v : root) col[v] = next++;
      if (next - 1 > b.cap) overflow("root clique above " + std::to_string(b.cap));
    }
    for (int v : root) top_colors.push_back(col[v]);
    {
      std::vector<int> taken = top_colors;
      std::sort(taken.begin(), taken.end());
      int cand = ceiling + 1;
      for (int v : dangerous) {
        while (std::binary_search(taken.begin(), taken.end(), cand)) ++cand;
        if (cand > b.cap) overflow("dangerous vertices above " + std::to_string(b.cap));
        col[v] = cand;
        top_colors.push_back(cand++);
      }
    }
    const int top_lo = *std::min_element(top_colors.begin(), top_colors.end());
    const int top_hi = *std::max_element(top_colors.begin(), top_colors.end());
    ledger_.push_back({"interior", block, c, interior_lo, ceiling});
    ledger_.push_back({"top", block, c, top_lo, top_hi});
    if (interior_hi > ceiling || (interior_hi > 0 && top_lo <= interior_hi)) bands_ok_ = false;

    for (std::size_t id = 0; id < xs.size(); ++id) {
      const auto& x = xs[id];
      const auto& up = cs[id];
      std::vector<int> sub;
      sub.reserve(x.size() + up.size());
      std::merge(x.begin(), x.end(), up.begin(), up.end(), std::back_inserter(sub));
      Piece child = extract(p.g, p.d, p.occ, sub, &up);
      const double cx = gamma_of(b, static_cast<double>(sub.size()));
      int min_up = col[up.front()];
      for (int v : up) min_up = std::min(min_up, col[v]);
      const int ceil_x = std::min(ceil_band(b, cx), min_up - 1);
      // The new root bag lists the up-neighbours in local ids; sub is sorted,
      // so local order matches the order of `up`.
      std::vector<int> rc;
      for (int v : up) rc.push_back(col[v]);
      std::vector<int> cc(sub.size(), 0);
      technical(child, b, cx, &rc, ceil_x, cc);
      for (std::size_t i = 0; i < sub.size(); ++i)
        if (lay.layer_of[sub[i]] >= deep) col[sub[i]] = cc[i];
    }
  }

  // Colors q into [1, top]: heavy part H' by layers from the top down, then
  // the light components recursively below Ceil(c + s).
  void slack(const Piece& q, const std::vector<double>& w, const Budget& b, double c, int top,
             int block, std::vector<int>& col) {
    const int n = q.g.n();
    if (n == 0) return;
    double total = 0;
    for (double x : w) total += x;
    double cs = c, log_n0 = 0;
    for (;;) {
      cs = c + slack_step(b.t, c);
      log_n0 = log_f(b, cs + slack_step(b.t, cs));
      if (std::log(total) > log_n0) break;
      c = cs;
      const int cb = ceil_band(b, cs);
      if (cb >= 1) top = std::min(top, cb);
    }
    if (top < 1) overflow("no colors left at c = " + std::to_string(c));
    const double n0 = std::exp(std::min(log_n0, 700.0));
    auto sep = weighted_separator_threshold(q.d, w, n0);

    std::vector<char> in_t(q.d.size(), 0);
    for (int x : sep)
      for (int z = x; z >= 0 && !in_t[z]; z = q.d.parent(z)) in_t[z] = 1;
    std::vector<int> tnodes, tpos(q.d.size(), -1);
    for (int x : q.d.order())
      if (in_t[x]) {
        tpos[x] = static_cast<int>(tnodes.size());
        tnodes.push_back(x);
      }
    std::vector<char> heavy(n, 0);
    for (int x : tnodes)
      for (int v : q.d.bag(x)) heavy[v] = 1;

    Layering lay = bfs_layering(q.g, q.d.bag(q.d.root()));
    int cur = top;
    std::vector<int> local(n, -1);
    for (int i = 0; i <= lay.depth(); ++i) {
      std::vector<int> hi;
      for (int v : lay.layers[i])
        if (heavy[v]) hi.push_back(v);
      if (hi.empty()) continue;
      if (i == 0) {
        for (int v : hi) col[v] = cur--;
      } else {
        for (std::size_t j = 0; j < hi.size(); ++j) local[hi[j]] = static_cast<int>(j);
        std::vector<std::vector<int>> bags(tnodes.size());
        std::vector<int> parent(tnodes.size(), -1);
        for (std::size_t j = 0; j < tnodes.size(); ++j) {
          const int x = tnodes[j];
          for (int v : q.d.bag(x))
            if (local[v] >= 0) bags[j].push_back(local[v]);
          const int px = q.d.parent(x);
          parent[j] = px >= 0 ? tpos[px] : -1;
        }
        auto gi = induced_subgraph(q.g, hi);
        auto di = TreeDecomposition::from_parents(std::move(bags), std::move(parent));
        auto lc = layer_rank(gi.graph, di);
        const int qi = *std::max_element(lc.begin(), lc.end());
        for (std::size_t j = 0; j < hi.size(); ++j) {
          col[hi[j]] = cur - qi + lc[j];
          local[hi[j]] = -1;
        }
        cur -= qi;
      }
      if (cur < 0) overflow("heavy part needs more than " + std::to_string(top) + " colors");
    }
    ledger_.push_back({"layer", block, c, cur + 1, top});

    const int cb = ceil_band(b, cs);
    if (cb >= 1 && cur < cb)
      overflow("heavy part reaches below Ceil(" + std::to_string(cs) + ") = " + std::to_string(cb));
    const int next_top = cb >= 1 ? std::min(cur, cb) : cur;

    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
      if (heavy[s] || seen[s]) continue;
      std::vector<int> x{s};
      seen[s] = 1;
      for (std::size_t k = 0; k < x.size(); ++k)
        for (int u : q.g.neighbours(x[k]))
          if (!heavy[u] && !seen[u]) {
            seen[u] = 1;
            x.push_back(u);
          }
      std::sort(x.begin(), x.end());
      if (next_top < 1) overflow("no colors left for light components");
      Piece child = extract(q.g, q.d, q.occ, x, nullptr);
      std::vector<double> wx(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) wx[i] = w[x[i]];
      std::vector<int> cc(x.size(), 0);
      slack(child, wx, b, cs, next_top, block, cc);
      for (std::size_t i = 0; i < x.size(); ++i) col[x[i]] = cc[i];
    }
  }

  std::vector<int> nested_rank(const Graph& g, const TreeDecomposition& d) {
    const bool saved = top_level_;
    top_level_ = false;
    auto col = rank_graph(g, d, 0);
    top_level_ = saved;
    return col;
  }

  // One BFS layer of H': skeleton ranked recursively on top of a pathwidth
  // ranking of the rest. Colors start at 1.
  std::vector<int> layer_rank(const Graph& g, const TreeDecomposition& d) {
    const int n = g.n();
    // Width-1 base case: a linear forest gets the ruler ranking per path.
    if (is_linear_forest(g)) return nested_rank(g, d);
    Skeleton sk = detail::skeleton_unchecked(g, d, ell_);
    if (static_cast<int>(sk.vertices.size()) == n) return nested_rank(g, d);
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < sk.vertices.size(); ++i) pos[sk.vertices[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> bags(d.size());
    std::vector<int> parent(d.size());
    for (int x = 0; x < d.size(); ++x) {
      for (int v : d.bag(x))
        if (pos[v] >= 0) bags[x].push_back(pos[v]);
      parent[x] = d.parent(x);
    }
    auto skd = TreeDecomposition::from_parents(std::move(bags), std::move(parent));
    auto inner = nested_rank(sk.sub.graph, skd);

    std::vector<int> col(n, 0);
    std::vector<char> keep(n, 1);
    for (int v : sk.vertices) keep[v] = 0;
    const int low = detail::peel_colors(detail::chain_bags(d, keep), ell_, col);
    for (std::size_t i = 0; i < sk.vertices.size(); ++i) col[sk.vertices[i]] = low + inner[i];
    return col;
  }

  // Subgraph on the sorted set `vs` with the bags that meet it. With
  // `extra_root`, a new root node holding those vertices sits above the top node.
  Piece extract(const Graph& g, const TreeDecomposition& d, const Occ& occ, const std::vector<int>& vs,
                const std::vector<int>* extra_root) {
    if (static_cast<int>(pos_.size()) < g.n()) pos_.resize(g.n(), -1);
    if (static_cast<int>(node_pos_.size()) < d.size()) node_pos_.resize(d.size(), -1);
    const int m = static_cast<int>(vs.size());
    for (int i = 0; i < m; ++i) pos_[vs[i]] = i;
    std::vector<int> nodes;
    for (int v : vs)
      for (int x : occ[v])
        if (node_pos_[x] < 0) {
          node_pos_[x] = static_cast<int>(nodes.size());
          nodes.push_back(x);
        }
    std::vector<std::vector<int>> bags(nodes.size());
    std::vector<int> parent(nodes.size(), -1);
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      for (int v : d.bag(nodes[j]))
        if (pos_[v] >= 0) bags[j].push_back(pos_[v]);
      const int px = d.parent(nodes[j]);
      parent[j] = px >= 0 ? node_pos_[px] : -1;
    }
    if (extra_root) {
      const int r = static_cast<int>(nodes.size());
      for (int& pj : parent)
        if (pj < 0) pj = r;
      std::vector<int> b;
      for (int v : *extra_root) b.push_back(pos_[v]);
      bags.push_back(std::move(b));
      parent.push_back(-1);
    }
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i)
      for (int u : g.neighbours(vs[i]))
        if (pos_[u] > i) edges.emplace_back(i, pos_[u]);
    for (int v : vs) pos_[v] = -1;
    for (int x : nodes) node_pos_[x] = -1;
    Piece p;
    p.g = Graph(m, edges);
    p.d = TreeDecomposition::from_parents(std::move(bags), std::move(parent));
    p.occ = occurrences(p.d, m);
    return p;
  }

  int ell_;
  int a_;
  std::vector<BandRecord>& ledger_;
  bool& bands_ok_;
  int block_counter_ = 0;
  bool fallback_ = false;
  bool top_level_ = true;  // cleared once the first layer recursion starts
  std::vector<int> pos_, node_pos_;
};

}  // namespace

SimpleTTreeResult rank_simple_ttree(const Graph& h, const TreeDecomposition& d, int ell,
                                    std::optional<int> t) {
  if (ell < 1) throw Error(ErrorCode::InvalidArgument, "ell must be >= 1");
  if (!validate_decomposition(h, d).is_valid)
    throw Error(ErrorCode::InvalidDecomposition, "tree decomposition does not fit the graph");
  const int width = d.width();
  const int tt = t.value_or(std::max(width, 0));
  if (tt < width)
    throw Error(ErrorCode::InvalidArgument,
                "decomposition has width " + std::to_string(width) + " > t = " + std::to_string(tt));
  SimpleTTreeResult res;
  res.t = tt;
  const int n = h.n();
  if (n == 0) {
    res.ranking = Ranking({}, ell);
    return res;
  }
  Graph full = make_edge_maximal(h, d);
  int a = (ell + 2) * (tt + 2);
  std::vector<int> raw;
  bool fallback = false;
  for (;;) {
    res.ledger.clear();
    res.bands_ok = true;
    try {
      Colorer col(ell, a, res.ledger, res.bands_ok);
      raw = col.rank_graph(full, d, std::max(tt, 1));
      fallback = col.used_fallback();
      break;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BandOverflow || res.restarts >= kMaxRestarts) throw;
      a *= 2;
      ++res.restarts;
    }
  }
  res.a = a;
  res.k = tt >= 2 ? solve_k(tt, n).k : fallback ? solve_k(2, n).k : 2.0;
  Ranking r(std::move(raw), ell);
  if (auto bad = verify_ranking(h, r)) {
    std::string s = "witness path";
    for (int u : bad->witness_path) s += " " + std::to_string(u);
    throw Error(ErrorCode::VerificationFailed, s);
  }
  res.colors = r.max_color;
  res.distinct_colors = compress_colors(r).max_color;
  res.ranking = std::move(r);
  return res;
}

}  // namespace lrank
