#include <algorithm>
#include <string>

#include "lrank/colorers.hpp"
#include "lrank/error.hpp"

namespace lrank {

int path_color_bound(int ell) {
  if (ell < 1) throw Error(ErrorCode::InvalidArgument, "ell must be >= 1");
  int cap = 0;
  while ((1LL << cap) < ell + 1LL) ++cap;
  return cap + 1;
}

Ranking rank_path(int n, int ell) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative path length");
  const int cap = path_color_bound(ell) - 1;
  std::vector<int> c(n);
  for (int v = 0; v < n; ++v) {
    unsigned i = static_cast<unsigned>(v) + 1;
    int nu = 0;
    while (nu < cap && (i & 1u) == 0) {
      i >>= 1;
      ++nu;
    }
    c[v] = nu + 1;
  }
  return Ranking(std::move(c), ell);
}

DistanceColouring distance_colour_clique_path(int m, int path_len, int ell) {
  if (m < 1 || path_len < 1 || ell < 1)
    throw Error(ErrorCode::InvalidArgument, "distance colouring needs m, path length, ell >= 1");
  DistanceColouring out;
  out.ell = ell;
  out.count = m * (ell + 1);
  out.values.resize(static_cast<std::size_t>(m) * path_len);
  for (int a = 0; a < m; ++a)
    for (int i = 0; i < path_len; ++i) out.values[a * path_len + i] = m * (i % (ell + 1)) + a + 1;
  return out;
}

bool is_distance_colouring(const Graph& g, const DistanceColouring& psi) {
  const int n = g.n();
  if (static_cast<int>(psi.values.size()) != n) return false;
  for (int v : psi.values)
    if (v < 1 || v > psi.count) return false;
  std::vector<int> dist(n, -1);
  std::vector<int> seen;
  for (int s = 0; s < n; ++s) {
    seen.assign(1, s);
    dist[s] = 0;
    bool ok = true;
    for (std::size_t q = 0; q < seen.size() && ok; ++q) {
      int u = seen[q];
      if (u != s && psi.values[u] == psi.values[s]) ok = false;
      if (dist[u] == psi.ell) continue;
      for (int w : g.neighbours(u))
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          seen.push_back(w);
        }
    }
    for (int u : seen) dist[u] = -1;
    if (!ok) return false;
  }
  return true;
}

Ranking rank_product(const Ranking& rho, const DistanceColouring& psi) {
  if (rho.ell != psi.ell)
    throw Error(ErrorCode::MismatchedEll,
                "ranking has ell " + std::to_string(rho.ell) + ", colouring has " + std::to_string(psi.ell));
  const std::size_t n1 = rho.colors.size(), n2 = psi.values.size();
  std::vector<int> c(n1 * n2);
  for (std::size_t x = 0; x < n1; ++x)
    for (std::size_t y = 0; y < n2; ++y) c[x * n2 + y] = psi.count * rho.colors[x] - (psi.values[y] - 1);
  return Ranking(std::move(c), rho.ell);
}

}  // namespace lrank
