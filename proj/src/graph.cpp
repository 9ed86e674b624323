#include "lrank/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "lrank/error.hpp"

namespace lrank {

Graph::Graph(int n) : adj_(n) {}

Graph::Graph(int n, const std::vector<Edge>& edges) : adj_(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorCode::UnknownVertex,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside 0.." +
                      std::to_string(n - 1));
    if (u == v) throw Error(ErrorCode::InvalidArgument, "self-loop at " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    m_ += nb.size();
  }
  m_ /= 2;
}

bool Graph::has_edge(int u, int v) const {
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n())
    throw Error(ErrorCode::InvalidArgument, "label table size mismatch");
  labels_ = std::move(labels);
}

Layering bfs_layering(const Graph& g, const std::vector<int>& roots) {
  if (roots.empty()) throw Error(ErrorCode::EmptyRoots, "no root vertices");
  Layering lay;
  lay.layer_of.assign(g.n(), -1);
  std::vector<int> frontier;
  for (int r : roots) {
    if (r < 0 || r >= g.n()) throw Error(ErrorCode::UnknownVertex, std::to_string(r));
    if (lay.layer_of[r] == 0) continue;
    lay.layer_of[r] = 0;
    frontier.push_back(r);
  }
  std::sort(frontier.begin(), frontier.end());
  while (!frontier.empty()) {
    int d = static_cast<int>(lay.layers.size());
    std::vector<int> next;
    for (int u : frontier)
      for (int w : g.neighbours(u))
        if (lay.layer_of[w] < 0) {
          lay.layer_of[w] = d + 1;
          next.push_back(w);
        }
    std::sort(next.begin(), next.end());
    lay.layers.push_back(std::move(frontier));
    frontier = std::move(next);
  }
  for (int v = 0; v < g.n(); ++v)
    if (lay.layer_of[v] < 0) throw Error(ErrorCode::UnreachableVertex, std::to_string(v));
  return lay;
}

Graph graph_power(const Graph& g, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "power must be >= 1");
  std::vector<Edge> edges;
  std::vector<int> dist(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    std::vector<int> seen{s};
    dist[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      if (dist[u] == k) continue;
      for (int w : g.neighbours(u))
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          seen.push_back(w);
          q.push_back(w);
          if (s < w) edges.emplace_back(s, w);
        }
    }
    for (int v : seen) dist[v] = -1;
  }
  return Graph(g.n(), edges);
}

std::vector<int> ProductGraph::coords(int v) const {
  std::vector<int> c(radices.size());
  for (int i = static_cast<int>(radices.size()) - 1; i >= 0; --i) {
    c[i] = v % radices[i];
    v /= radices[i];
  }
  return c;
}

int ProductGraph::index(const std::vector<int>& c) const {
  int v = 0;
  for (std::size_t i = 0; i < radices.size(); ++i) v = v * radices[i] + c[i];
  return v;
}

ProductGraph strong_product(const std::vector<Graph>& factors) {
  if (factors.size() < 2) throw Error(ErrorCode::InvalidArgument, "need at least two factors");
  ProductGraph p;
  long long total = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].n() == 0) throw Error(ErrorCode::EmptyFactor, "factor " + std::to_string(i));
    p.radices.push_back(factors[i].n());
    total *= factors[i].n();
    if (total > (1LL << 30)) throw Error(ErrorCode::TooLarge, "product too large");
  }
  const int k = static_cast<int>(factors.size());
  std::vector<Edge> edges;
  for (int v = 0; v < total; ++v) {
    auto c = p.coords(v);
    // Closed neighbourhood per coordinate; odometer over the choices.
    std::vector<std::vector<int>> opts(k);
    for (int i = 0; i < k; ++i) {
      opts[i].push_back(c[i]);
      for (int w : factors[i].neighbours(c[i])) opts[i].push_back(w);
    }
    std::vector<std::size_t> pick(k, 0);
    std::vector<int> d(k);
    while (true) {
      for (int i = 0; i < k; ++i) d[i] = opts[i][pick[i]];
      int w = p.index(d);
      if (v < w) edges.emplace_back(v, w);
      int i = k - 1;
      while (i >= 0 && ++pick[i] == opts[i].size()) pick[i--] = 0;
      if (i < 0) break;
    }
  }
  p.graph = Graph(static_cast<int>(total), edges);
  return p;
}

InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::vector<int> local(g.n(), -1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= g.n()) throw Error(ErrorCode::UnknownVertex, std::to_string(s[i]));
    local[s[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (int w : g.neighbours(s[i]))
      if (local[w] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), local[w]);
  InducedSubgraph out{Graph(static_cast<int>(s.size()), edges), s};
  if (!g.labels().empty()) {
    std::vector<std::string> labels;
    for (int v : s) labels.push_back(g.labels()[v]);
    out.graph.set_labels(std::move(labels));
  }
  return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<int> comp(g.n(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    std::vector<int> members{s};
    comp[s] = id;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (int w : g.neighbours(members[i]))
        if (comp[w] < 0) {
          comp[w] = id;
          members.push_back(w);
        }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

}  // namespace lrank
