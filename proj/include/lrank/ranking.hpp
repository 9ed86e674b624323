#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lrank/graph.hpp"

namespace lrank {

struct Ranking {
  std::vector<int> colors;  // colors[v] >= 1
  int ell = 1;
  int max_color = 0;

  Ranking() = default;
  Ranking(std::vector<int> c, int ell_);
  void refresh();  // recompute max_color after editing colors
};

enum class ViolationKind { EqualEndpointsNoLargerInterior };

struct Violation {
  std::vector<int> witness_path;  // u_0..u_p
  ViolationKind kind = ViolationKind::EqualEndpointsNoLargerInterior;
};

using VerifyResult = std::optional<Violation>;  // nullopt means Ok

VerifyResult verify_ranking(const Graph& g, const Ranking& r, int threads = 1);

constexpr int kOracleMaxVertices = 14;
VerifyResult verify_ranking_oracle(const Graph& g, const Ranking& r,
                                   int max_vertices = kOracleMaxVertices);

// True iff `path` is a path of g of length <= ell whose endpoints share the
// largest color on it.
bool is_violation(const Graph& g, const Ranking& r, const std::vector<int>& path);

struct SearchLimits {
  std::uint64_t max_nodes = 100'000'000;
};

// Reads RANK_BUDGET_NODES when set.
SearchLimits default_limits();

struct ExactResult {
  int chi = 0;
  Ranking witness;
  std::uint64_t nodes = 0;
};

ExactResult exact_chi(const Graph& g, int ell, SearchLimits limits = default_limits());

// Depth-first enumeration of every l-ranking with color(v) drawn from allowed[v].
// The visitor returns false to stop. Returns the number of search nodes used.
std::uint64_t for_each_ranking(const Graph& g, int ell, const std::vector<std::vector<int>>& allowed,
                               const std::function<bool(const std::vector<int>&)>& visit,
                               SearchLimits limits = default_limits());

// Minimum number of colors in a proper coloring, by plain backtracking.
int chromatic_number(const Graph& g);

// "<v> <color>" per line, 1-indexed, with a "c ell <l>" header comment.
void write_ranking(std::ostream& out, const Ranking& r, const std::string& meta = "");
Ranking read_ranking(std::istream& in);
void write_ranking_file(const std::string& path, const Ranking& r, const std::string& meta = "");
Ranking read_ranking_file(const std::string& path);

// Order-preserving relabel of the used colors onto 1..#distinct.
Ranking compress_colors(const Ranking& r);

}  // namespace lrank
