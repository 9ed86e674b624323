#include <algorithm>

#include "detail.hpp"
#include "lrank/error.hpp"

namespace lrank {

namespace {

struct GuardBuilder {
  int ell;
  std::vector<int> last;  // r(v) for the bag sequence currently being examined
  std::vector<int> path_y;  // index on the greedy path, -1 elsewhere
  std::vector<int> level_of;
  std::vector<GuardTag> tag;
  std::vector<int> touched;

  GuardBuilder(int ell_, int n) : ell(ell_), last(n, -1), path_y(n, -1), level_of(n, -1), tag(n) {}

  void add(int v, GuardTag t, int level) {
    if (level_of[v] < 0) {
      level_of[v] = level;
      tag[v] = t;
      touched.push_back(v);
    }
  }

  // Hands out the set built so far and resets for the next bag sequence.
  GuardSet collect() {
    std::sort(touched.begin(), touched.end());
    GuardSet out;
    for (int v : touched) {
      out.vertices.push_back(v);
      out.entries.push_back({v, tag[v], level_of[v]});
      level_of[v] = -1;
    }
    touched.clear();
    return out;
  }

  void run(const std::vector<std::vector<int>>& bags, int level) {
    const int m = static_cast<int>(bags.size());
    if (m == 0) return;
    const GuardTag end_tag = level == 0 ? GuardTag::EndpointBag : GuardTag::Recursive;
    for (int v : bags.front()) add(v, end_tag, level);
    for (int v : bags.back()) add(v, end_tag, level);

    std::size_t widest = 0;
    for (int j = 0; j < m; ++j) {
      widest = std::max(widest, bags[j].size());
      for (int v : bags[j]) last[v] = j;
    }
    // Length-1 paths have no interior, so ell = 1 needs nothing beyond the ends.
    if (widest <= 1 || m == 1 || ell == 1) return;
    for (int j = 0; j < m; ++j) {
      if (bags[j].empty()) return;
      if (j + 1 < m && std::none_of(bags[j].begin(), bags[j].end(), [&](int v) { return last[v] > j; }))
        return;  // disconnected
    }

    auto pick = [&](int j) {
      int best = -1;
      for (int v : bags[j])
        if (best < 0 || last[v] > last[best] || (last[v] == last[best] && v < best)) best = v;
      return best;
    };
    std::vector<int> path{pick(0)};
    while (last[path.back()] < m - 1) {
      int nx = pick(last[path.back()]);
      if (last[nx] <= last[path.back()]) return;
      path.push_back(nx);
    }
    const int p = static_cast<int>(path.size()) - 1;
    if (p > ell) return;

    // Breakpoints y_0 = 0, y_i = r(u_{i-1}); the last one is r(u_p) = m - 1.
    std::vector<int> y(p + 2);
    y[0] = 0;
    for (int i = 1; i <= p + 1; ++i) y[i] = last[path[i - 1]];
    const GuardTag path_tag = level == 0 ? GuardTag::GreedyPath : GuardTag::Recursive;
    for (int i = 0; i <= p; ++i) {
      add(path[i], path_tag, level);
      path_y[path[i]] = i;
    }
    // Segment i spans bags y_{i-1}..y_i and drops u_0..u_{i-1}; u_{i-1} sits in
    // all of its bags, so the width goes down. u_i stays, which puts it in the
    // end bag of the recursive call.
    std::vector<std::vector<std::vector<int>>> segments;
    for (int i = 1; i <= p + 1; ++i) {
      std::vector<std::vector<int>> seg;
      for (int j = y[i - 1]; j <= y[i]; ++j) {
        std::vector<int> b;
        for (int v : bags[j])
          if (path_y[v] < 0 || path_y[v] >= i) b.push_back(v);
        seg.push_back(std::move(b));
      }
      segments.push_back(std::move(seg));
    }
    for (int v : path) path_y[v] = -1;
    for (const auto& seg : segments) run(seg, level + 1);
  }
};

}  // namespace

long long guard_bound(int t, int ell) {
  if (t < 0 || ell < 1) throw Error(ErrorCode::InvalidArgument, "guard_bound needs t >= 0, ell >= 1");
  long long f = 2;
  for (int i = 1; i <= t; ++i) f = ell + 1 + ell * f;
  return f;
}

namespace detail {

GuardSet guard_of_bags(const std::vector<std::vector<int>>& bags, int ell, int n) {
  GuardBuilder b(ell, n);
  b.run(bags, 0);
  return b.collect();
}

Skeleton skeleton_unchecked(const Graph& h, const TreeDecomposition& d, int ell) {
  Skeleton sk;
  if (d.size() == 0) {
    sk.sub = induced_subgraph(h, {});
    return sk;
  }
  sk.branching = branching_nodes(d);
  if (sk.branching.empty()) {
    int leaf = d.root();
    while (!d.children(leaf).empty()) leaf = d.children(leaf).front();
    sk.branching.push_back(d.root());
    if (leaf != d.root()) sk.branching.push_back(leaf);
  }
  std::vector<char> designated(d.size(), 0);
  for (int x : sk.branching) designated[x] = 1;
  std::vector<char> in(h.n(), 0);
  GuardBuilder builder(ell, h.n());
  for (int x : sk.branching)
    for (int v : d.bag(x)) in[v] = 1;
  for (int y : sk.branching) {
    std::vector<int> nodes{y};
    int x = d.parent(y);
    while (x >= 0 && !designated[x]) {
      nodes.push_back(x);
      x = d.parent(x);
    }
    if (x < 0) continue;
    nodes.push_back(x);
    std::reverse(nodes.begin(), nodes.end());
    std::vector<std::vector<int>> bags;
    bags.reserve(nodes.size());
    for (int z : nodes) bags.push_back(d.bag(z));
    builder.run(bags, 0);
    GuardSet u = builder.collect();
    for (int v : u.vertices) in[v] = 1;
    sk.segments.push_back({x, y, std::move(u.vertices)});
  }
  for (int v = 0; v < h.n(); ++v)
    if (in[v]) sk.vertices.push_back(v);
  sk.sub = induced_subgraph(h, sk.vertices);
  return sk;
}

}  // namespace detail

GuardSet guard_set(const Graph& g, const PathDecomposition& pd, int ell) {
  if (ell < 1) throw Error(ErrorCode::InvalidArgument, "ell must be >= 1");
  auto td = pd.as_tree();
  if (!validate_decomposition(g, td).is_valid)
    throw Error(ErrorCode::InvalidDecomposition, "path decomposition does not fit the graph");
  if (!is_edge_maximal(g, td)) throw Error(ErrorCode::NotEdgeMaximal, "graph is not edge-maximal");
  return detail::guard_of_bags(pd.bags, ell, g.n());
}

Skeleton build_skeleton(const Graph& h, const TreeDecomposition& d, int ell) {
  if (ell < 1) throw Error(ErrorCode::InvalidArgument, "ell must be >= 1");
  if (!validate_decomposition(h, d).is_valid)
    throw Error(ErrorCode::InvalidDecomposition, "tree decomposition does not fit the graph");
  if (!is_edge_maximal(h, d)) throw Error(ErrorCode::NotEdgeMaximal, "graph is not edge-maximal");
  return detail::skeleton_unchecked(h, d, ell);
}

}  // namespace lrank
