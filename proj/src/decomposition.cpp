#include "lrank/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>

#include "lrank/error.hpp"

namespace lrank {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int x : v) h ^= std::hash<int>()(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct DisjointSets {
  std::vector<int> p;
  explicit DisjointSets(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

int max_vertex(const TreeDecomposition& d) {
  int mx = -1;
  for (const auto& b : d.bags())
    if (!b.empty()) mx = std::max(mx, b.back());
  return mx;
}

}  // namespace

TreeDecomposition::TreeDecomposition(std::vector<std::vector<int>> bags,
                                     const std::vector<Edge>& tree_edges, int root)
    : bags_(std::move(bags)), root_(root) {
  const int k = size();
  if (k == 0) {
    if (!tree_edges.empty()) throw Error(ErrorCode::InvalidDecomposition, "edges without bags");
    root_ = -1;
    return;
  }
  if (root < 0 || root >= k) throw Error(ErrorCode::InvalidDecomposition, "root out of range");
  if (static_cast<int>(tree_edges.size()) != k - 1)
    throw Error(ErrorCode::InvalidDecomposition, "tree needs exactly #bags-1 edges");
  std::vector<std::vector<int>> nb(k);
  for (auto [x, y] : tree_edges) {
    if (x < 0 || y < 0 || x >= k || y >= k || x == y)
      throw Error(ErrorCode::InvalidDecomposition, "bad tree edge");
    nb[x].push_back(y);
    nb[y].push_back(x);
  }
  parent_.assign(k, -2);
  parent_[root] = -1;
  std::vector<int> stack{root};
  int seen = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    ++seen;
    for (int y : nb[x])
      if (parent_[y] == -2) {
        parent_[y] = x;
        stack.push_back(y);
      }
  }
  if (seen != k) throw Error(ErrorCode::InvalidDecomposition, "tree edges do not form a tree");
  finish();
}

TreeDecomposition TreeDecomposition::from_parents(std::vector<std::vector<int>> bags,
                                                  std::vector<int> parent) {
  TreeDecomposition d;
  d.bags_ = std::move(bags);
  d.parent_ = std::move(parent);
  if (d.parent_.size() != d.bags_.size())
    throw Error(ErrorCode::InvalidDecomposition, "parent table size mismatch");
  d.root_ = -1;
  for (int x = 0; x < d.size(); ++x)
    if (d.parent_[x] < 0) {
      if (d.root_ >= 0) throw Error(ErrorCode::InvalidDecomposition, "two roots");
      d.root_ = x;
    } else if (d.parent_[x] >= d.size()) {
      throw Error(ErrorCode::InvalidDecomposition, "parent out of range");
    }
  if (d.size() > 0 && d.root_ < 0) throw Error(ErrorCode::InvalidDecomposition, "no root");
  d.finish();
  if (static_cast<int>(d.order_.size()) != d.size())
    throw Error(ErrorCode::InvalidDecomposition, "parent table has a cycle");
  return d;
}

void TreeDecomposition::finish() {
  for (auto& b : bags_) {
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
  }
  const int k = size();
  children_.assign(k, {});
  for (int x = 0; x < k; ++x)
    if (parent_[x] >= 0) children_[parent_[x]].push_back(x);
  depth_.assign(k, 0);
  order_.clear();
  if (k == 0) return;
  order_.push_back(root_);
  for (std::size_t i = 0; i < order_.size(); ++i)
    for (int y : children_[order_[i]]) {
      depth_[y] = depth_[order_[i]] + 1;
      order_.push_back(y);
    }
}

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags_) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

std::vector<Edge> TreeDecomposition::tree_edges() const {
  std::vector<Edge> out;
  for (int x = 0; x < size(); ++x)
    if (parent_[x] >= 0) out.emplace_back(parent_[x], x);
  return out;
}

int PathDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

TreeDecomposition PathDecomposition::as_tree() const {
  std::vector<int> parent(bags.size());
  for (std::size_t i = 0; i < bags.size(); ++i) parent[i] = static_cast<int>(i) - 1;
  return TreeDecomposition::from_parents(bags, parent);
}

std::vector<std::vector<int>> occurrences(const TreeDecomposition& d, int n) {
  std::vector<std::vector<int>> occ(n);
  for (int x = 0; x < d.size(); ++x)
    for (int v : d.bag(x))
      if (v >= 0 && v < n) occ[v].push_back(x);
  return occ;
}

DecompositionReport validate_decomposition(const Graph& g, const TreeDecomposition& d,
                                           std::optional<int> t) {
  DecompositionReport rep;
  rep.width = d.width();
  const int n = g.n();
  auto add = [&](FindingKind kind, std::vector<int> vs, std::vector<int> xs, std::string msg) {
    rep.violations.push_back({kind, std::move(vs), std::move(xs), std::move(msg)});
  };
  for (int x = 0; x < d.size(); ++x)
    for (int v : d.bag(x))
      if (v < 0 || v >= n) add(FindingKind::VertexOutOfRange, {v}, {x}, "bag vertex outside graph");
  auto occ = occurrences(d, n);
  for (int v = 0; v < n; ++v) {
    if (occ[v].empty()) {
      add(FindingKind::VertexMissing, {v}, {}, "vertex in no bag");
      continue;
    }
    int tops = 0;
    for (int x : occ[v]) {
      int p = d.parent(x);
      if (p < 0 || !std::binary_search(d.bag(p).begin(), d.bag(p).end(), v)) ++tops;
    }
    if (tops != 1) add(FindingKind::OccurrenceDisconnected, {v}, occ[v], "bags holding vertex are not connected");
  }
  for (auto [u, v] : g.edges()) {
    const auto& ou = occ[u].size() <= occ[v].size() ? occ[u] : occ[v];
    int other = occ[u].size() <= occ[v].size() ? v : u;
    bool ok = false;
    for (int x : ou)
      if (std::binary_search(d.bag(x).begin(), d.bag(x).end(), other)) {
        ok = true;
        break;
      }
    if (!ok) add(FindingKind::EdgeUncovered, {u, v}, {}, "no bag holds both endpoints");
  }
  bool simple = false;
  if (t) {
    simple = true;
    if (rep.width > *t) {
      simple = false;
      add(FindingKind::WidthExceeded, {}, {}, "width " + std::to_string(rep.width) + " > " + std::to_string(*t));
    } else if (*t >= 1) {
      std::unordered_map<std::vector<int>, std::vector<int>, VecHash> seen;
      std::vector<int> sub;
      for (int x = 0; x < d.size(); ++x) {
        const auto& b = d.bag(x);
        int sz = static_cast<int>(b.size());
        if (sz < *t) continue;
        // sz is t or t+1 here
        for (int skip = (sz == *t ? -1 : 0); skip < (sz == *t ? 0 : sz); ++skip) {
          sub.clear();
          for (int i = 0; i < sz; ++i)
            if (i != skip) sub.push_back(b[i]);
          auto& nodes = seen[sub];
          nodes.push_back(x);
          if (nodes.size() == 3) {
            simple = false;
            add(FindingKind::SubsetInThreeBags, sub, nodes, "t-subset in three bags");
          }
        }
      }
    }
  }
  rep.is_valid = rep.violations.empty();
  if (t && simple && rep.is_valid) rep.is_simple_for = *t;
  return rep;
}

bool is_edge_maximal(const Graph& g, const TreeDecomposition& d) {
  for (const auto& b : d.bags())
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j)
        if (b[i] >= g.n() || b[j] >= g.n() || !g.has_edge(b[i], b[j])) return false;
  return true;
}

Graph make_edge_maximal(const Graph& g, const TreeDecomposition& d) {
  auto rep = validate_decomposition(g, d);
  if (!rep.is_valid)
    throw Error(ErrorCode::InvalidDecomposition, rep.violations.front().message);
  auto edges = g.edges();
  for (const auto& b : d.bags())
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) edges.emplace_back(b[i], b[j]);
  Graph h(g.n(), edges);
  if (!g.labels().empty()) h.set_labels(g.labels());
  return h;
}

std::vector<int> min_depth_bags(const TreeDecomposition& d, int n) {
  std::vector<int> top(n, -1);
  for (int x : d.order())
    for (int v : d.bag(x))
      if (v < n && top[v] < 0) top[v] = x;
  return top;
}

int min_depth_bag(const TreeDecomposition& d, int v) {
  int best = -1;
  for (int x = 0; x < d.size(); ++x)
    if (std::binary_search(d.bag(x).begin(), d.bag(x).end(), v) &&
        (best < 0 || d.depth(x) < d.depth(best)))
      best = x;
  if (best < 0) throw Error(ErrorCode::VertexNotInDecomposition, std::to_string(v));
  return best;
}

std::vector<int> branching_nodes(const TreeDecomposition& d) {
  std::vector<int> out;
  for (int x = 0; x < d.size(); ++x)
    if (d.children(x).size() >= 2) out.push_back(x);
  return out;
}

std::vector<int> weighted_separator_threshold(const TreeDecomposition& d, const VertexWeights& w,
                                              double threshold) {
  const int n = static_cast<int>(w.size());
  auto top = min_depth_bags(d, n);
  std::vector<double> acc(d.size(), 0.0);
  for (int v = 0; v < n; ++v)
    if (top[v] >= 0) acc[top[v]] += w[v];
  std::vector<int> sep;
  const auto& ord = d.order();
  for (auto it = ord.rbegin(); it != ord.rend(); ++it) {
    int x = *it;
    if (acc[x] > threshold) {
      sep.push_back(x);
      acc[x] = 0.0;
    }
    if (d.parent(x) >= 0) acc[d.parent(x)] += acc[x];
  }
  std::sort(sep.begin(), sep.end());
  return sep;
}

double max_residual_weight(const TreeDecomposition& d, const VertexWeights& w,
                           const std::vector<int>& sep) {
  const int n = std::max(static_cast<int>(w.size()), max_vertex(d) + 1);
  std::vector<char> gone(n, 0);
  for (int x : sep)
    for (int v : d.bag(x)) gone[v] = 1;
  DisjointSets ds(n);
  for (const auto& b : d.bags()) {
    int first = -1;
    for (int v : b) {
      if (gone[v]) continue;
      if (first < 0)
        first = v;
      else
        ds.unite(v, first);
    }
  }
  std::vector<double> sum(n, 0.0);
  double best = 0.0;
  for (int v = 0; v < static_cast<int>(w.size()); ++v)
    if (!gone[v]) best = std::max(best, sum[ds.find(v)] += w[v]);
  return best;
}

std::vector<int> weighted_separator(const TreeDecomposition& d, const VertexWeights& w, int c) {
  if (c < 2) throw Error(ErrorCode::InvalidArgument, "separator needs c >= 2");
  double total = 0.0;
  for (double x : w) {
    if (!(x > 0.0)) throw Error(ErrorCode::InvalidArgument, "weights must be positive");
    total += x;
  }
  auto sep = weighted_separator_threshold(d, w, total / c);
#ifndef NDEBUG
  if (static_cast<int>(sep.size()) > c || max_residual_weight(d, w, sep) > total / c * (1 + 1e-12))
    throw Error(ErrorCode::InvalidArgument, "separator postcondition failed");
#endif
  return sep;
}

TreeDecomposition layer_restriction(const TreeDecomposition& d, const std::vector<int>& layer) {
  int n = max_vertex(d) + 1;
  for (int v : layer) n = std::max(n, v + 1);
  std::vector<char> in(n, 0);
  for (int v : layer) in[v] = 1;
  std::vector<std::vector<int>> bags(d.size());
  std::vector<int> parent(d.size());
  for (int x = 0; x < d.size(); ++x) {
    parent[x] = d.parent(x);
    for (int v : d.bag(x))
      if (in[v]) bags[x].push_back(v);
  }
  return TreeDecomposition::from_parents(std::move(bags), std::move(parent));
}

VertexWeights subtree_weights(const Graph& h, const TreeDecomposition&, const Layering& lay, int i,
                              int t) {
  if (i < 0 || i > lay.depth())
    throw Error(ErrorCode::LayerOutOfRange, std::to_string(i) + " not in 0.." + std::to_string(lay.depth()));
  const int n = h.n();
  std::vector<int> comp(n, -1);
  std::vector<int> comp_size;
  for (int s = 0; s < n; ++s) {
    if (lay.layer_of[s] <= i || comp[s] >= 0) continue;
    int id = static_cast<int>(comp_size.size());
    std::vector<int> st{s};
    comp[s] = id;
    int cnt = 0;
    while (!st.empty()) {
      int u = st.back();
      st.pop_back();
      ++cnt;
      for (int w : h.neighbours(u))
        if (lay.layer_of[w] > i && comp[w] < 0) {
          comp[w] = id;
          st.push_back(w);
        }
    }
    comp_size.push_back(cnt);
  }
  VertexWeights kappa(n, 0.0);
  std::vector<int> mark(comp_size.size(), -1);
  for (int v : lay.layers[i]) {
    long long sz = 1;
    for (int w : h.neighbours(v)) {
      int c = comp[w];
      if (c >= 0 && mark[c] != v) {
        mark[c] = v;
        sz += comp_size[c];
      }
    }
    kappa[v] = static_cast<double>(t - 1 + sz);
  }
  return kappa;
}

DecomposedGraph random_simple_ttree(int n, int t, std::uint64_t seed) {
  if (t < 1) throw Error(ErrorCode::InvalidArgument, "t must be >= 1");
  if (n < t + 1) throw Error(ErrorCode::TooSmall, "need n >= t+1");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> bags;
  std::vector<int> parent;
  std::vector<Edge> edges;
  std::vector<int> first(t + 1);
  std::iota(first.begin(), first.end(), 0);
  for (int i = 0; i <= t; ++i)
    for (int j = i + 1; j <= t; ++j) edges.emplace_back(i, j);
  bags.push_back(first);
  parent.push_back(-1);

  std::unordered_map<std::vector<int>, int, VecHash> count;
  std::vector<std::pair<int, int>> cand;  // (bag, position of the vertex to drop)
  auto minus = [](const std::vector<int>& b, int pos) {
    std::vector<int> s;
    s.reserve(b.size() - 1);
    for (int i = 0; i < static_cast<int>(b.size()); ++i)
      if (i != pos) s.push_back(b[i]);
    return s;
  };
  for (int p = 0; p <= t; ++p) {
    count[minus(first, p)] = 1;
    cand.emplace_back(0, p);
  }
  for (int v = t + 1; v < n; ++v) {
    while (true) {
      std::uniform_int_distribution<std::size_t> pick(0, cand.size() - 1);
      std::size_t ci = pick(rng);
      auto [x, pos] = cand[ci];
      auto shared = minus(bags[x], pos);
      int& cnt = count[shared];
      if (cnt >= 2) {
        cand[ci] = cand.back();
        cand.pop_back();
        continue;
      }
      cnt = 2;
      for (int u : shared) edges.emplace_back(u, v);
      auto nb = shared;
      nb.push_back(v);  // v exceeds every existing id, so nb stays sorted
      int id = static_cast<int>(bags.size());
      for (int p = 0; p < t; ++p) {
        count[minus(nb, p)] = 1;
        cand.emplace_back(id, p);
      }
      bags.push_back(std::move(nb));
      parent.push_back(x);
      break;
    }
  }
  return {Graph(n, edges), TreeDecomposition::from_parents(std::move(bags), std::move(parent))};
}

DecomposedGraph random_ktree(int n, int t, std::uint64_t seed) {
  if (t < 0) throw Error(ErrorCode::InvalidArgument, "t must be >= 0");
  if (n < t + 1) throw Error(ErrorCode::TooSmall, "need n >= t+1");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> bags(1);
  std::vector<int> parent{-1};
  std::vector<Edge> edges;
  for (int i = 0; i <= t; ++i) {
    bags[0].push_back(i);
    for (int j = i + 1; j <= t; ++j) edges.emplace_back(i, j);
  }
  for (int v = t + 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, bags.size() - 1);
    const int x = static_cast<int>(pick(rng));
    std::vector<int> nb = bags[x];
    if (t > 0) {
      std::uniform_int_distribution<int> drop(0, t);
      nb.erase(nb.begin() + drop(rng));
    } else {
      nb.clear();
    }
    for (int u : nb) edges.emplace_back(u, v);
    nb.push_back(v);
    bags.push_back(std::move(nb));
    parent.push_back(x);
  }
  return {Graph(n, edges), TreeDecomposition::from_parents(std::move(bags), std::move(parent))};
}

PathDecomposedGraph random_path_instance(int n, int w, std::uint64_t seed) {
  if (w < 0) throw Error(ErrorCode::InvalidArgument, "w must be >= 0");
  if (n < 1) throw Error(ErrorCode::TooSmall, "need n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::shuffle(id.begin(), id.end(), rng);
  std::vector<std::vector<int>> bags;
  std::vector<Edge> edges;
  std::vector<int> cur;
  auto drop_one = [&] {
    std::uniform_int_distribution<std::size_t> pick(0, cur.size() - 1);
    cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(pick(rng)));
  };
  std::bernoulli_distribution shrink(0.3);
  for (int v = 0; v < n; ++v) {
    if (static_cast<int>(cur.size()) == w + 1 || (!cur.empty() && shrink(rng))) drop_one();
    for (int u : cur) edges.emplace_back(id[u], id[v]);
    cur.push_back(v);
    std::vector<int> b;
    for (int u : cur) b.push_back(id[u]);
    std::sort(b.begin(), b.end());
    bags.push_back(std::move(b));
  }
  return {Graph(n, edges), PathDecomposition{std::move(bags)}};
}

}  // namespace lrank
