#include "lrank/lowerbound.hpp"

#include <cmath>

#include "lrank/error.hpp"
#include "lrank/numerics.hpp"

namespace lrank {

LayeredGraph complete_ary_tree(int r, long long budget) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "r must be >= 1");
  BigInt total = 0, level = 1;
  for (int i = 0; i < r; ++i) {
    total += level;
    level *= (r + 1);
  }
  if (total > budget) throw Error(ErrorCode::TooLarge, "ary tree with " + total.str() + " vertices");
  const int n = static_cast<int>(total);
  std::vector<Edge> edges;
  LayeredGraph out;
  out.layering.layer_of.assign(n, 0);
  out.layering.layers.push_back({0});
  int next = 1;
  for (int d = 1; d < r; ++d) {
    std::vector<int> layer;
    for (int p : out.layering.layers[d - 1])
      for (int c = 0; c <= r; ++c) {
        edges.emplace_back(p, next);
        out.layering.layer_of[next] = d;
        layer.push_back(next++);
      }
    out.layering.layers.push_back(std::move(layer));
  }
  out.graph = Graph(n, edges);
  return out;
}

TreeDecomposition tree_decomposition_of_tree(const Graph& tree, int root) {
  const int n = tree.n();
  std::vector<int> par(n, -2);
  std::vector<int> order{root};
  par[root] = -1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int w : tree.neighbours(order[i]))
      if (par[w] == -2) {
        par[w] = order[i];
        order.push_back(w);
      }
  if (static_cast<int>(order.size()) != n || tree.edge_count() != static_cast<std::size_t>(n - 1))
    throw Error(ErrorCode::InvalidArgument, "not a tree");
  // Node i holds order[i]; its tree parent is the node of the vertex's parent.
  std::vector<int> node_of(n);
  for (int i = 0; i < n; ++i) node_of[order[i]] = i;
  std::vector<std::vector<int>> bags(n);
  std::vector<int> parent(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    bags[i].push_back(v);
    if (par[v] >= 0) {
      bags[i].push_back(par[v]);
      parent[i] = node_of[par[v]];
    }
  }
  return TreeDecomposition::from_parents(std::move(bags), std::move(parent));
}

BigInt boost_size_estimate(long long u_size, long long h, long long m) {
  if (u_size < 0 || h < 0 || m < 0) throw Error(ErrorCode::InvalidArgument, "negative boost parameter");
  BigInt per = BigInt(u_size) * (BigInt(h) * m + 1);
  BigInt total = 0, level = 1;
  for (long long i = 0; i <= m; ++i) {
    total += level;
    level *= per;
  }
  return total;
}

LayeredGraph boost(const BoostSpec& spec, long long budget) {
  if (spec.h < 1 || spec.m < 0) throw Error(ErrorCode::InvalidArgument, "boost needs h >= 1, m >= 0");
  BigInt est = boost_size_estimate(spec.base.n(), spec.h, spec.m);
  if (est > budget) throw Error(ErrorCode::TooLarge, "boost with " + est.str() + " vertices");
  const int n = static_cast<int>(est);
  const int copies = spec.h * spec.m + 1;
  const int us = spec.base.n();
  const auto uedges = spec.base.edges();
  std::vector<Edge> edges;
  LayeredGraph out;
  out.layering.layer_of.assign(n, 0);
  out.layering.layers.push_back({0});
  int next = 1;
  for (int i = 1; i <= spec.m; ++i) {
    std::vector<int> layer;
    for (int a : out.layering.layers[i - 1])
      for (int c = 0; c < copies; ++c) {
        int base = next;
        for (int v = 0; v < us; ++v) {
          edges.emplace_back(a, base + v);
          out.layering.layer_of[base + v] = i;
          layer.push_back(base + v);
        }
        for (auto [u, v] : uedges) edges.emplace_back(base + u, base + v);
        next += us;
      }
    out.layering.layers.push_back(std::move(layer));
  }
  out.graph = Graph(n, edges);
  return out;
}

TreeDecomposition boost_decomposition(const TreeDecomposition& u_decomp, const BoostSpec& spec) {
  const Graph& u = spec.base;
  auto rep = validate_decomposition(u, u_decomp);
  if (!rep.is_valid) throw Error(ErrorCode::InvalidDecomposition, "base decomposition invalid");
  if (u.n() == 0 && spec.m > 0) throw Error(ErrorCode::InvalidArgument, "empty base graph");
  const int copies = spec.h * spec.m + 1;
  const int us = u.n();
  const int ub = u_decomp.size();
  auto utop = min_depth_bags(u_decomp, us);
  std::vector<std::vector<int>> bags{{0}};
  std::vector<int> parent{-1};
  // host[a] = node whose bag holds a and below which a's copies hang.
  std::vector<int> host{0};
  int next = 1;
  std::vector<int> frontier{0};
  for (int i = 1; i <= spec.m; ++i) {
    std::vector<int> nf;
    for (int a : frontier)
      for (int c = 0; c < copies; ++c) {
        int base = next;
        int first = static_cast<int>(bags.size());
        for (int x = 0; x < ub; ++x) {
          std::vector<int> b{a};
          for (int v : u_decomp.bag(x)) b.push_back(base + v);
          bags.push_back(std::move(b));
          parent.push_back(u_decomp.parent(x) < 0 ? host[a] : first + u_decomp.parent(x));
        }
        host.resize(base + us, -1);
        for (int v = 0; v < us; ++v) {
          host[base + v] = first + utop[v];
          nf.push_back(base + v);
        }
        next += us;
      }
    frontier = std::move(nf);
  }
  return TreeDecomposition::from_parents(std::move(bags), std::move(parent));
}

LowerBoundGraph lowerbound_graph(int t, int r, long long budget) {
  if (t < 1 || r < 1) throw Error(ErrorCode::InvalidArgument, "lowerbound_graph needs t, r >= 1");
  LowerBoundGraph out;
  try {
    out.below_tower = r < tower(t);
  } catch (const Error&) {
    out.below_tower = true;  // tower(t) beyond double range
  }
  if (t == 1 || r == 1) {
    auto tree = complete_ary_tree(r, budget);
    out.graph = std::move(tree.graph);
    out.decomposition = tree_decomposition_of_tree(out.graph, 0);
    return out;
  }
  const double lr = std::log(static_cast<double>(r));
  const int h = static_cast<int>(std::ceil(lr));
  const int m = static_cast<int>(std::ceil(r / lr));
  auto inner = lowerbound_graph(t - 1, h, budget);
  BigInt est = boost_size_estimate(inner.graph.n(), h, m);
  if (est > budget) throw Error(ErrorCode::TooLarge, "lower-bound graph with " + est.str() + " vertices");
  BoostSpec spec{inner.graph, h, m};
  out.graph = boost(spec, budget).graph;
  out.decomposition = boost_decomposition(inner.decomposition, spec);
  out.h = h;
  out.m = m;
  return out;
}

Graph apex_copies(const Graph& u, int k) {
  const int us = u.n();
  const int n = (k + 1) * us + 1;
  std::vector<Edge> edges;
  for (int c = 0; c <= k; ++c) {
    for (auto [a, b] : u.edges()) edges.emplace_back(c * us + a, c * us + b);
    for (int v = 0; v < us; ++v) edges.emplace_back(c * us + v, n - 1);
  }
  return Graph(n, edges);
}

}  // namespace lrank
