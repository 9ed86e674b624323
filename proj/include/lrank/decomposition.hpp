#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lrank/graph.hpp"

namespace lrank {

// Bags on a rooted tree. parent[root] == -1; children kept sorted.
class TreeDecomposition {
 public:
  TreeDecomposition() = default;
  // Orients the undirected tree edges away from `root`. Bags get sorted.
  TreeDecomposition(std::vector<std::vector<int>> bags, const std::vector<Edge>& tree_edges,
                    int root = 0);
  static TreeDecomposition from_parents(std::vector<std::vector<int>> bags,
                                        std::vector<int> parent);

  int size() const { return static_cast<int>(bags_.size()); }
  int root() const { return root_; }
  const std::vector<int>& bag(int x) const { return bags_[x]; }
  const std::vector<std::vector<int>>& bags() const { return bags_; }
  int parent(int x) const { return parent_[x]; }
  const std::vector<int>& children(int x) const { return children_[x]; }
  int depth(int x) const { return depth_[x]; }
  // Root first, parents before children.
  const std::vector<int>& order() const { return order_; }
  int width() const;
  std::vector<Edge> tree_edges() const;

 private:
  void finish();

  std::vector<std::vector<int>> bags_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
  std::vector<int> depth_;
  std::vector<int> order_;
  int root_ = 0;
};

struct PathDecomposition {
  std::vector<std::vector<int>> bags;

  int width() const;
  TreeDecomposition as_tree() const;
};

enum class FindingKind {
  VertexOutOfRange,
  VertexMissing,
  EdgeUncovered,
  OccurrenceDisconnected,
  TreeMalformed,
  WidthExceeded,
  SubsetInThreeBags,
};

struct Finding {
  FindingKind kind;
  std::vector<int> vertices;
  std::vector<int> nodes;
  std::string message;
};

struct DecompositionReport {
  bool is_valid = true;
  int width = -1;
  std::optional<int> is_simple_for;
  std::vector<Finding> violations;
};

// With `t`, also checks width <= t and that every t-subset of vertices sits in at
// most two bags; is_simple_for is set only when that holds.
DecompositionReport validate_decomposition(const Graph& g, const TreeDecomposition& d,
                                           std::optional<int> t = std::nullopt);

bool is_edge_maximal(const Graph& g, const TreeDecomposition& d);
Graph make_edge_maximal(const Graph& g, const TreeDecomposition& d);

// occurrence[v] = nodes whose bag holds v.
std::vector<std::vector<int>> occurrences(const TreeDecomposition& d, int n);
int min_depth_bag(const TreeDecomposition& d, int v);
// x_T(v) for every v < n; -1 where v is in no bag.
std::vector<int> min_depth_bags(const TreeDecomposition& d, int n);

std::vector<int> branching_nodes(const TreeDecomposition& d);

using VertexWeights = std::vector<double>;  // indexed by vertex

std::vector<int> weighted_separator(const TreeDecomposition& d, const VertexWeights& w, int c);
// Same procedure with an explicit component threshold.
std::vector<int> weighted_separator_threshold(const TreeDecomposition& d, const VertexWeights& w,
                                              double threshold);
// Largest total weight among groups of vertices left connected through shared
// bags once the bags of `sep` are deleted. Upper-bounds every component of G - S.
double max_residual_weight(const TreeDecomposition& d, const VertexWeights& w,
                           const std::vector<int>& sep);

TreeDecomposition layer_restriction(const TreeDecomposition& d, const std::vector<int>& layer);

// kappa_v = t - 1 + |H_v| for v in L_i; other entries are 0.
VertexWeights subtree_weights(const Graph& h, const TreeDecomposition& d, const Layering& lay, int i,
                              int t);

struct DecomposedGraph {
  Graph graph;
  TreeDecomposition decomposition;
};

DecomposedGraph random_simple_ttree(int n, int t, std::uint64_t seed);
// Random t-tree (edge-maximal, width t, not necessarily simple).
DecomposedGraph random_ktree(int n, int t, std::uint64_t seed);

struct PathDecomposedGraph {
  Graph graph;
  PathDecomposition decomposition;
};

// Edge-maximal graph on a random bag sequence of width <= w, ids shuffled.
// Bags shrink now and then, so the graph may be disconnected.
PathDecomposedGraph random_path_instance(int n, int w, std::uint64_t seed);

// PACE .td: "s td <bags> <max bag> <n>", "b <id> <v...>", then tree edges. 1-indexed;
// the root is bag `root_bag` (1-indexed).
TreeDecomposition read_td(std::istream& in, int root_bag = 1, int* n_out = nullptr);
void write_td(std::ostream& out, const TreeDecomposition& d, int n);
TreeDecomposition read_td_file(const std::string& path, int root_bag = 1, int* n_out = nullptr);
void write_td_file(const std::string& path, const TreeDecomposition& d, int n);

}  // namespace lrank
