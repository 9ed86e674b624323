#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "lrank/error.hpp"
#include "lrank/ranking.hpp"

namespace lrank {

Ranking::Ranking(std::vector<int> c, int ell_) : colors(std::move(c)), ell(ell_) { refresh(); }

void Ranking::refresh() {
  max_color = 0;
  for (int c : colors) max_color = std::max(max_color, c);
}

namespace {

void check_colored(const Graph& g, const Ranking& r) {
  if (static_cast<int>(r.colors.size()) != g.n())
    throw Error(ErrorCode::UncoloredVertex, "ranking covers " + std::to_string(r.colors.size()) +
                                                " of " + std::to_string(g.n()) + " vertices");
  for (int v = 0; v < g.n(); ++v)
    if (r.colors[v] < 1) throw Error(ErrorCode::UncoloredVertex, "vertex " + std::to_string(v));
  if (r.ell < 1) throw Error(ErrorCode::InvalidArgument, "ell must be >= 1");
}

// Bounded BFS from u through vertices colored <= color(u); stops at the first
// vertex other than u carrying color(u) and returns the path to it.
struct Searcher {
  const Graph& g;
  const std::vector<int>& col;
  int ell;
  std::vector<int> stamp, parent;
  int cur = 0;

  Searcher(const Graph& g_, const std::vector<int>& col_, int ell_)
      : g(g_), col(col_), ell(ell_), stamp(g_.n(), -1), parent(g_.n(), -1) {}

  std::optional<std::vector<int>> run(int u) {
    ++cur;
    const int cu = col[u];
    stamp[u] = cur;
    std::vector<int> frontier{u}, next;
    for (int d = 0; d < ell && !frontier.empty(); ++d) {
      next.clear();
      for (int x : frontier)
        for (int w : g.neighbours(x)) {
          if (stamp[w] == cur || col[w] > cu) continue;
          stamp[w] = cur;
          parent[w] = x;
          if (col[w] == cu) {
            std::vector<int> path{w};
            while (path.back() != u) path.push_back(parent[path.back()]);
            std::reverse(path.begin(), path.end());
            return path;
          }
          next.push_back(w);
        }
      frontier.swap(next);
    }
    return std::nullopt;
  }
};

}  // namespace

VerifyResult verify_ranking(const Graph& g, const Ranking& r, int threads) {
  check_colored(g, r);
  const int n = g.n();
  threads = std::max(1, std::min(threads, n / 4096 + 1));
  if (threads == 1) {
    Searcher s(g, r.colors, r.ell);
    for (int u = 0; u < n; ++u)
      if (auto p = s.run(u)) return Violation{*p};
    return std::nullopt;
  }
  std::vector<std::optional<std::vector<int>>> found(threads);
  std::atomic<int> best{n};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      Searcher s(g, r.colors, r.ell);
      for (int u = t; u < n && u < best.load(); u += threads)
        if (auto p = s.run(u)) {
          found[t] = p;
          int b = best.load();
          while (u < b && !best.compare_exchange_weak(b, u)) {
          }
          return;
        }
    });
  for (auto& th : pool) th.join();
  const std::vector<int>* pick = nullptr;
  for (auto& f : found)
    if (f && (!pick || f->front() < pick->front())) pick = &*f;
  if (pick) return Violation{*pick};
  return std::nullopt;
}

bool is_violation(const Graph& g, const Ranking& r, const std::vector<int>& path) {
  const int p = static_cast<int>(path.size()) - 1;
  if (p < 1 || p > r.ell) return false;
  std::vector<int> sorted = path;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int i = 0; i < p; ++i)
    if (!g.has_edge(path[i], path[i + 1])) return false;
  const int c = r.colors[path.front()];
  if (r.colors[path.back()] != c) return false;
  for (int i = 1; i < p; ++i)
    if (r.colors[path[i]] > c) return false;
  return true;
}

VerifyResult verify_ranking_oracle(const Graph& g, const Ranking& r, int max_vertices) {
  if (g.n() > max_vertices)
    throw Error(ErrorCode::InstanceTooLarge, std::to_string(g.n()) + " > " + std::to_string(max_vertices));
  check_colored(g, r);
  std::vector<int> path;
  std::vector<char> on(g.n(), 0);
  std::optional<std::vector<int>> hit;
  // Plain enumeration of every simple path of length <= ell; no color pruning.
  std::function<void(int)> extend = [&](int depth) {
    if (hit) return;
    int last = path.back();
    if (depth >= 1) {
      const int c = r.colors[path.front()];
      if (r.colors[last] == c) {
        int mx = 0;
        for (int i = 1; i < depth; ++i) mx = std::max(mx, r.colors[path[i]]);
        if (mx <= c) {
          hit = path;
          return;
        }
      }
    }
    if (depth == r.ell) return;
    for (int w : g.neighbours(last)) {
      if (on[w]) continue;
      on[w] = 1;
      path.push_back(w);
      extend(depth + 1);
      path.pop_back();
      on[w] = 0;
    }
  };
  for (int s = 0; s < g.n() && !hit; ++s) {
    path = {s};
    on[s] = 1;
    extend(0);
    on[s] = 0;
  }
  if (hit) return Violation{*hit};
  return std::nullopt;
}

SearchLimits default_limits() {
  SearchLimits lim;
  if (const char* env = std::getenv("RANK_BUDGET_NODES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) lim.max_nodes = v;
  }
  return lim;
}

Ranking compress_colors(const Ranking& r) {
  std::vector<int> used = r.colors;
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<int> out(r.colors.size());
  for (std::size_t v = 0; v < out.size(); ++v)
    out[v] = static_cast<int>(std::lower_bound(used.begin(), used.end(), r.colors[v]) - used.begin()) + 1;
  return Ranking(std::move(out), r.ell);
}

void write_ranking(std::ostream& out, const Ranking& r, const std::string& meta) {
  out << "c ell " << r.ell << '\n';
  if (!meta.empty()) {
    std::istringstream ms(meta);
    std::string line;
    while (std::getline(ms, line)) out << "c " << line << '\n';
  }
  for (std::size_t v = 0; v < r.colors.size(); ++v) out << v + 1 << ' ' << r.colors[v] << '\n';
}

Ranking read_ranking(std::istream& in) {
  std::string line;
  int ell = -1;
  std::vector<std::pair<int, int>> entries;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (line[0] == 'c') {
      std::string c, tag;
      ls >> c >> tag;
      if (tag == "ell") ls >> ell;
      continue;
    }
    int v, col;
    if (!(ls >> v >> col) || v < 1) throw Error(ErrorCode::ParseError, "bad ranking line " + std::to_string(lineno));
    entries.emplace_back(v, col);
  }
  if (ell < 1) throw Error(ErrorCode::ParseError, "ranking lacks a 'c ell' header");
  std::vector<int> colors(entries.size(), 0);
  for (auto [v, col] : entries) {
    if (v > static_cast<int>(colors.size()) || colors[v - 1] != 0)
      throw Error(ErrorCode::ParseError, "ranking vertices must be 1..n, each once");
    colors[v - 1] = col;
  }
  return Ranking(std::move(colors), ell);
}

void write_ranking_file(const std::string& path, const Ranking& r, const std::string& meta) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  write_ranking(out, r, meta);
}

Ranking read_ranking_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return read_ranking(in);
}

}  // namespace lrank
