#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "lrank/decomposition.hpp"
#include "lrank/graph.hpp"

namespace lrank {

using BigInt = boost::multiprecision::cpp_int;

constexpr long long kGeneratorBudget = 5'000'000;  // vertices

struct LayeredGraph {
  Graph graph;
  Layering layering;
};

// Complete (r+1)-ary tree of height r-1, vertices numbered in BFS order.
LayeredGraph complete_ary_tree(int r, long long budget = kGeneratorBudget);
// Bags {v, parent(v)}, root bag {root}.
TreeDecomposition tree_decomposition_of_tree(const Graph& tree, int root);

struct BoostSpec {
  Graph base;
  int h = 1;
  int m = 0;
};

// a_0 is vertex 0; copies are laid out level by level, parent by parent.
LayeredGraph boost(const BoostSpec& spec, long long budget = kGeneratorBudget);
BigInt boost_size_estimate(long long u_size, long long h, long long m);
TreeDecomposition boost_decomposition(const TreeDecomposition& u_decomp, const BoostSpec& spec);

struct LowerBoundGraph {
  Graph graph;
  TreeDecomposition decomposition;
  int h = 0, m = 0;              // boost parameters at the outermost level (t > 1)
  bool below_tower = false;      // r < tower(t): the size/chi guarantee is not claimed
};

LowerBoundGraph lowerbound_graph(int t, int r, long long budget = kGeneratorBudget);

// k+1 copies of `u` plus an apex (the last vertex) adjacent to all of them.
Graph apex_copies(const Graph& u, int k);

}  // namespace lrank
