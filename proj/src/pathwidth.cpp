#include <algorithm>
#include <string>

#include "detail.hpp"
#include "lrank/error.hpp"

namespace lrank {

namespace detail {

int peel_colors(std::vector<std::vector<int>> bags, int ell, std::vector<int>& colors) {
  std::vector<int> last(colors.size(), -1);
  std::vector<char> gone(colors.size(), 0);
  int top = 0;
  for (;;) {
    std::size_t widest = 0;
    for (const auto& b : bags) widest = std::max(widest, b.size());
    if (widest == 0) return top;
    const int w = static_cast<int>(widest) - 1;
    if (w == 0) {
      for (const auto& b : bags)
        for (int v : b) colors[v] = 1;
      return std::max(top, 1);
    }
    const int m = static_cast<int>(bags.size());
    for (int j = 0; j < m; ++j)
      for (int v : bags[j]) last[v] = j;
    // Greedy vertex sequence hitting every nonempty bag; when nothing reaches
    // past the current bag it restarts at the next one.
    std::vector<int> seq;
    int prev = -1;
    for (int i = 0; i < m;) {
      if (bags[i].empty()) {
        ++i;
        continue;
      }
      int best = -1;
      for (int v : bags[i])
        if (best < 0 || last[v] > last[best] || (last[v] == last[best] && v < best)) best = v;
      if (last[best] == i && prev >= 0 && last[prev] == i) {
        ++i;
        continue;
      }
      seq.push_back(best);
      prev = best;
      i = last[best] == i ? i + 1 : last[best];
    }
    const int base = (ell + 1) * (w - 1) + 2;
    for (std::size_t j = 0; j < seq.size(); ++j) {
      colors[seq[j]] = base + static_cast<int>(j % (ell + 1));
      top = std::max(top, colors[seq[j]]);
      gone[seq[j]] = 1;
    }
    for (auto& b : bags) b.erase(std::remove_if(b.begin(), b.end(), [&](int v) { return gone[v] != 0; }), b.end());
  }
}

std::vector<std::vector<int>> chain_bags(const TreeDecomposition& d, const std::vector<char>& keep) {
  std::vector<std::vector<int>> out;
  auto branching = [&](int x) { return d.children(x).size() >= 2; };
  for (int x : d.order()) {
    if (branching(x)) continue;
    int p = d.parent(x);
    if (p >= 0 && !branching(p)) continue;
    for (int z = x;;) {
      std::vector<int> b;
      for (int v : d.bag(z))
        if (keep[v]) b.push_back(v);
      out.push_back(std::move(b));
      if (d.children(z).size() != 1) break;
      z = d.children(z).front();
      if (branching(z)) break;
    }
  }
  return out;
}

}  // namespace detail

namespace {

std::string describe(const Violation& v) {
  std::string s = "witness path";
  for (int u : v.witness_path) s += " " + std::to_string(u);
  return s;
}

}  // namespace

Ranking rank_pathwidth(const Graph& g, const PathDecomposition& pd, int ell) {
  if (ell < 1) throw Error(ErrorCode::InvalidArgument, "ell must be >= 1");
  if (!validate_decomposition(g, pd.as_tree()).is_valid)
    throw Error(ErrorCode::InvalidDecomposition, "path decomposition does not fit the graph");
  std::vector<int> colors(g.n(), 0);
  detail::peel_colors(pd.bags, ell, colors);
  Ranking r(std::move(colors), ell);
  if (auto bad = verify_ranking(g, r)) throw Error(ErrorCode::VerificationFailed, describe(*bad));
  return r;
}

Ranking rank_via_skeleton(const Graph& h, const TreeDecomposition& d, int ell, const Skeleton& skeleton,
                          const Ranking& skeleton_ranking) {
  if (skeleton_ranking.colors.size() != skeleton.vertices.size())
    throw Error(ErrorCode::InvalidArgument, "skeleton ranking size differs from skeleton");
  if (static_cast<int>(skeleton.vertices.size()) == h.n()) return skeleton_ranking;
  const int band = (ell + 1) * d.width() + 1;
  for (int c : skeleton_ranking.colors)
    if (c <= band)
      throw Error(ErrorCode::BandCollision,
                  "skeleton color " + std::to_string(c) + " inside low band 1.." + std::to_string(band));
  std::vector<char> keep(h.n(), 1);
  std::vector<int> colors(h.n(), 0);
  for (std::size_t i = 0; i < skeleton.vertices.size(); ++i) {
    keep[skeleton.vertices[i]] = 0;
    colors[skeleton.vertices[i]] = skeleton_ranking.colors[i];
  }
  detail::peel_colors(detail::chain_bags(d, keep), ell, colors);
  for (int v = 0; v < h.n(); ++v)
    if (colors[v] == 0) throw Error(ErrorCode::UncoloredVertex, "vertex " + std::to_string(v));
  Ranking r(std::move(colors), ell);
  if (auto bad = verify_ranking(h, r)) throw Error(ErrorCode::VerificationFailed, describe(*bad));
  return r;
}

}  // namespace lrank
