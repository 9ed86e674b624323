#include <algorithm>
#include <numeric>

#include "lrank/error.hpp"
#include "lrank/ranking.hpp"

namespace lrank {

namespace {

struct BudgetHit {};

class Search {
 public:
  Search(const Graph& g, int ell, const std::vector<std::vector<int>>& allowed,
         const std::function<bool(const std::vector<int>&)>& visit, SearchLimits lim)
      : g_(g), ell_(ell), allowed_(allowed), visit_(visit), lim_(lim), col_(g.n(), 0),
        stamp_(g.n(), 0), stamp2_(g.n(), 0) {
    order_.resize(g.n());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
  }

  // Returns false when the visitor asked to stop.
  bool run(int i = 0) {
    if (i == g_.n()) return visit_(col_);
    int v = order_[i];
    for (int c : allowed_[v]) {
      if (++nodes_ > lim_.max_nodes) throw BudgetHit{};
      col_[v] = c;
      if (consistent(v) && !run(i + 1)) {
        col_[v] = 0;
        return false;
      }
    }
    col_[v] = 0;
    return true;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  // Filtered search from u over colored vertices; true if it meets color(u) again.
  bool clash_from(int u) {
    ++cur_;
    const int cu = col_[u];
    stamp_[u] = cur_;
    std::vector<int> frontier{u}, next;
    for (int d = 0; d < ell_ && !frontier.empty(); ++d) {
      next.clear();
      for (int x : frontier)
        for (int w : g_.neighbours(x)) {
          if (stamp_[w] == cur_ || col_[w] == 0 || col_[w] > cu) continue;
          if (col_[w] == cu) return true;
          stamp_[w] = cur_;
          next.push_back(w);
        }
      frontier.swap(next);
    }
    return false;
  }

  // Only paths through the newly colored v can be new violations: v as an
  // endpoint, or v inside a path whose endpoint has a larger color.
  bool consistent(int v) {
    if (clash_from(v)) return false;
    if (ell_ < 2) return true;
    ++cur2_;
    std::vector<int> cand, frontier{v}, next;
    stamp2_[v] = cur2_;
    for (int d = 0; d < ell_ - 1 && !frontier.empty(); ++d) {
      next.clear();
      for (int x : frontier)
        for (int w : g_.neighbours(x)) {
          if (stamp2_[w] == cur2_ || col_[w] == 0) continue;
          stamp2_[w] = cur2_;
          next.push_back(w);
          if (col_[w] > col_[v]) cand.push_back(w);
        }
      frontier.swap(next);
    }
    for (int u : cand)
      if (clash_from(u)) return false;
    return true;
  }

  const Graph& g_;
  int ell_;
  const std::vector<std::vector<int>>& allowed_;
  const std::function<bool(const std::vector<int>&)>& visit_;
  SearchLimits lim_;
  std::vector<int> col_, order_, stamp_, stamp2_;
  int cur_ = 0, cur2_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::uint64_t for_each_ranking(const Graph& g, int ell, const std::vector<std::vector<int>>& allowed,
                               const std::function<bool(const std::vector<int>&)>& visit,
                               SearchLimits limits) {
  if (static_cast<int>(allowed.size()) != g.n())
    throw Error(ErrorCode::InvalidArgument, "allowed colors must cover every vertex");
  if (ell < 1) throw Error(ErrorCode::InvalidArgument, "ell must be >= 1");
  Search s(g, ell, allowed, visit, limits);
  try {
    s.run();
  } catch (const BudgetHit&) {
    throw Error(ErrorCode::BudgetExceeded, "node budget " + std::to_string(limits.max_nodes) + " exhausted");
  }
  return s.nodes();
}

ExactResult exact_chi(const Graph& g, int ell, SearchLimits limits) {
  ExactResult res;
  if (g.n() == 0) return res;
  for (int k = 1; k <= g.n(); ++k) {
    std::vector<std::vector<int>> allowed(g.n());
    for (auto& a : allowed)
      for (int c = 1; c <= k; ++c) a.push_back(c);
    std::vector<int> found;
    SearchLimits left{limits.max_nodes - std::min(limits.max_nodes, res.nodes)};
    try {
      res.nodes += for_each_ranking(g, ell, allowed, [&](const std::vector<int>& c) {
        found = c;
        return false;
      }, left);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
      throw Error(ErrorCode::BudgetExceeded,
                  "chi in [" + std::to_string(k) + ", " + std::to_string(g.n()) + "] after " +
                      std::to_string(limits.max_nodes) + " nodes");
    }
    if (!found.empty()) {
      res.chi = k;
      res.witness = Ranking(found, ell);
      return res;
    }
  }
  return res;  // unreachable: n distinct colors always work
}

int chromatic_number(const Graph& g) {
  const int n = g.n();
  if (n == 0) return 0;
  std::vector<int> col(n, 0);
  for (int k = 1;; ++k) {
    std::function<bool(int)> go = [&](int v) {
      if (v == n) return true;
      for (int c = 1; c <= k; ++c) {
        bool ok = true;
        for (int w : g.neighbours(v))
          if (w < v && col[w] == c) ok = false;
        if (!ok) continue;
        col[v] = c;
        if (go(v + 1)) return true;
      }
      col[v] = 0;
      return false;
    };
    if (go(0)) return k;
  }
}

}  // namespace lrank
