#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrank/decomposition.hpp"
#include "lrank/graph.hpp"
#include "lrank/ranking.hpp"

namespace lrank {

// Ruler sequence: position i (1-based) gets min(v2(i), ceil(log2(ell+1))) + 1.
Ranking rank_path(int n, int ell);
int path_color_bound(int ell);  // ceil(log2(ell+1)) + 1

enum class GuardTag { EndpointBag, GreedyPath, Recursive };

struct GuardEntry {
  int vertex;
  GuardTag tag;
  int level;  // recursion depth at which the vertex entered U
};

struct GuardSet {
  std::vector<int> vertices;       // sorted
  std::vector<GuardEntry> entries;  // one per vertex, same order
};

// Size bound f(t) from f(0) = 2, f(t) = ell + 1 + ell * f(t-1).
long long guard_bound(int t, int ell);

GuardSet guard_set(const Graph& g, const PathDecomposition& pd, int ell);

struct Skeleton {
  std::vector<int> vertices;  // sorted ids of h
  InducedSubgraph sub;        // the induced skeleton graph
  std::vector<int> branching;  // nodes whose bags were taken whole
  struct Segment {
    int top, bottom;  // tree nodes; top is an ancestor of bottom
    std::vector<int> guard;
  };
  std::vector<Segment> segments;
};

Skeleton build_skeleton(const Graph& h, const TreeDecomposition& d, int ell);

Ranking rank_pathwidth(const Graph& g, const PathDecomposition& pd, int ell);

// skeleton_ranking is indexed like skeleton.sub and must use colors above
// (ell+1)*width(d)+1.
Ranking rank_via_skeleton(const Graph& h, const TreeDecomposition& d, int ell,
                          const Skeleton& skeleton, const Ranking& skeleton_ranking);

struct BandRecord {
  std::string kind;  // "interior", "top", "layer"
  int block = 0;
  double c = 0;
  int lo = 0, hi = 0;
};

struct SimpleTTreeResult {
  Ranking ranking;          // banded colors, all <= a * k
  int colors = 0;           // max color of `ranking`
  int distinct_colors = 0;  // colors actually used; compress_colors() reaches this many
  int t = 0;
  double k = 0;
  int a = 0;
  int restarts = 0;
  bool bands_ok = true;  // every top band sits strictly above its block interior
  std::vector<BandRecord> ledger;
};

constexpr int kMaxRestarts = 10;

// t defaults to width(d). Arbitrary subgraphs are completed to edge-maximal first.
SimpleTTreeResult rank_simple_ttree(const Graph& h, const TreeDecomposition& d, int ell,
                                    std::optional<int> t = std::nullopt);

struct DistanceColouring {
  std::vector<int> values;  // 1-based, values[v] in 1..count
  int ell = 1;
  int count = 0;
};

// Vertex (a, i) of K_m x P has id a * path_len + i.
DistanceColouring distance_colour_clique_path(int m, int path_len, int ell);
bool is_distance_colouring(const Graph& g, const DistanceColouring& psi);

// phi(x, y) = count * rho(x) - (psi(y) - 1) on G1 x G2, id x * |G2| + y.
Ranking rank_product(const Ranking& rho, const DistanceColouring& psi);

}  // namespace lrank
