#pragma once

#include <functional>
#include <random>
#include <vector>

#include "lrank/decomposition.hpp"
#include "lrank/graph.hpp"

namespace testing_helpers {

inline lrank::Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<lrank::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return lrank::Graph(n, edges);
}

// Calls visit on every induced path with 1..max_len edges, in both directions.
inline void for_each_induced_path(const lrank::Graph& g, int max_len,
                                  const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> path;
  std::vector<char> on(g.n(), 0);
  std::function<void()> grow = [&] {
    if (path.size() >= 2) visit(path);
    if (static_cast<int>(path.size()) > max_len) return;
    const int last = path.back();
    for (int w : g.neighbours(last)) {
      if (on[w]) continue;
      bool chord = false;
      for (std::size_t i = 0; i + 1 < path.size() && !chord; ++i) chord = g.has_edge(path[i], w);
      if (chord) continue;
      path.push_back(w);
      on[w] = 1;
      grow();
      on[w] = 0;
      path.pop_back();
    }
  };
  for (int s = 0; s < g.n(); ++s) {
    path = {s};
    on[s] = 1;
    grow();
    on[s] = 0;
  }
}

inline bool is_ancestor(const lrank::TreeDecomposition& d, int a, int x) {
  for (; x >= 0; x = d.parent(x))
    if (x == a) return true;
  return false;
}

}  // namespace testing_helpers
