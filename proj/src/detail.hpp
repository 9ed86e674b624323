#pragma once

#include <vector>

#include "lrank/colorers.hpp"

namespace lrank::detail {

// Guard set of a bag sequence; vertex ids must be < n.
GuardSet guard_of_bags(const std::vector<std::vector<int>>& bags, int ell, int n);

// No edge-maximality check.
Skeleton skeleton_unchecked(const Graph& h, const TreeDecomposition& d, int ell);

// Pathwidth peeling over a bag sequence. Writes colors[v] for every bag vertex
// and returns the largest color used (0 when there are no vertices).
int peel_colors(std::vector<std::vector<int>> bags, int ell, std::vector<int>& colors);

// Bags of the maximal paths of T - Lambda(T), concatenated, keeping only
// vertices with keep[v].
std::vector<std::vector<int>> chain_bags(const TreeDecomposition& d, const std::vector<char>& keep);

}  // namespace lrank::detail
