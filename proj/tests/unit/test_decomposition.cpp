#include <doctest.h>

#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "helpers.hpp"
#include "lrank/decomposition.hpp"
#include "lrank/error.hpp"

using namespace lrank;
using testing_helpers::is_ancestor;

namespace {

TreeDecomposition path_bags(int n) {
  std::vector<std::vector<int>> bags;
  for (int i = 0; i + 1 < n; ++i) bags.push_back({i, i + 1});
  return PathDecomposition{bags}.as_tree();
}

bool has_finding(const DecompositionReport& r, FindingKind k) {
  for (const auto& f : r.violations)
    if (f.kind == k) return true;
  return false;
}

}  // namespace

TEST_CASE("validate examples") {
  Graph g = complete_graph(4);
  auto one = TreeDecomposition::from_parents({{0, 1, 2, 3}}, {-1});
  auto r = validate_decomposition(g, one);
  CHECK(r.is_valid);
  CHECK(r.width == 3);

  r = validate_decomposition(path_graph(6), path_bags(6), 1);
  CHECK(r.is_valid);
  CHECK(r.width == 1);
  REQUIRE(r.is_simple_for.has_value());
  CHECK(*r.is_simple_for == 1);

  auto missing = TreeDecomposition::from_parents({{0, 1}, {2}}, {-1, 0});
  r = validate_decomposition(path_graph(3), missing);
  CHECK_FALSE(r.is_valid);
  CHECK(has_finding(r, FindingKind::EdgeUncovered));

  auto split = TreeDecomposition::from_parents({{0, 1}, {1, 2}, {0}}, {-1, 0, 1});
  r = validate_decomposition(path_graph(3), split);
  CHECK(has_finding(r, FindingKind::OccurrenceDisconnected));
}

TEST_CASE("simple condition") {
  // {0,1} appears in three bags
  auto d = TreeDecomposition::from_parents({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}, {-1, 0, 0});
  Graph g = make_edge_maximal(Graph(5), d);
  auto r = validate_decomposition(g, d, 2);
  CHECK_FALSE(r.is_valid);  // the finding is a violation
  CHECK(validate_decomposition(g, d).is_valid);
  CHECK_FALSE(r.is_simple_for.has_value());
  CHECK(has_finding(r, FindingKind::SubsetInThreeBags));
  CHECK(validate_decomposition(g, d, 3).is_simple_for == 3);
}

TEST_CASE("make edge maximal") {
  auto tri = TreeDecomposition::from_parents({{0, 1, 2}}, {-1});
  CHECK(make_edge_maximal(Graph(3), tri) == complete_graph(3));
  CHECK(make_edge_maximal(complete_graph(3), tri) == complete_graph(3));
  auto two = TreeDecomposition::from_parents({{0, 1, 2}, {1, 2, 3}}, {-1, 0});
  Graph h = make_edge_maximal(path_graph(4), two);
  CHECK(h.edge_count() == 5);
  CHECK(h.has_edge(0, 2));
  CHECK(h.has_edge(1, 3));
  CHECK(is_edge_maximal(h, two));
  CHECK_FALSE(is_edge_maximal(path_graph(4), two));
  CHECK(validate_decomposition(h, two).is_valid);
  CHECK_THROWS_AS(make_edge_maximal(path_graph(4), TreeDecomposition::from_parents({{0, 1}}, {-1})), Error);
}

TEST_CASE("min depth bag") {
  auto d = TreeDecomposition::from_parents({{0, 1}, {1, 2}, {2, 3}}, {-1, 0, 1});
  CHECK(min_depth_bag(d, 0) == 0);
  CHECK(min_depth_bag(d, 2) == 1);
  CHECK(min_depth_bag(d, 3) == 2);
  CHECK_THROWS_AS(min_depth_bag(d, 7), Error);
}

TEST_CASE("branching nodes") {
  CHECK(branching_nodes(path_bags(5)).empty());
  auto star = TreeDecomposition::from_parents({{0}, {0, 1}, {0, 2}, {0, 3}}, {-1, 0, 0, 0});
  CHECK(branching_nodes(star) == std::vector<int>{0});
  std::vector<std::vector<int>> bags(7);
  std::vector<int> parent{-1, 0, 0, 1, 1, 2, 2};
  for (int i = 0; i < 7; ++i) bags[i] = {i};
  auto bin = TreeDecomposition::from_parents(bags, parent);
  auto b = branching_nodes(bin);
  CHECK(std::set<int>(b.begin(), b.end()) == std::set<int>{0, 1, 2});
}

TEST_CASE("weighted separator examples") {
  auto single = TreeDecomposition::from_parents({{0, 1, 2}}, {-1});
  CHECK(weighted_separator(single, VertexWeights(3, 1.0), 3) == std::vector<int>{0});

  auto p5 = path_bags(5);
  auto sep = weighted_separator(p5, VertexWeights(5, 1.0), 2);
  CHECK(sep.size() == 1);
  CHECK(max_residual_weight(p5, VertexWeights(5, 1.0), sep) <= 2.5);

  auto star = TreeDecomposition::from_parents({{0}, {0, 1}, {0, 2}, {0, 3}}, {-1, 0, 0, 0});
  sep = weighted_separator(star, VertexWeights(4, 1.0), 2);
  CHECK(sep.size() <= 2);
  CHECK(max_residual_weight(star, VertexWeights(4, 1.0), sep) <= 2.0);
}

TEST_CASE("weighted separator postcondition on random instances") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> wt(0.1, 5.0);
  for (int it = 0; it < 100; ++it) {
    auto inst = random_ktree(60, 1 + it % 3, it);
    VertexWeights w(60);
    for (auto& x : w) x = wt(rng);
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    for (int c : {2, 3, 5, 10}) {
      auto sep = weighted_separator(inst.decomposition, w, c);
      CHECK(static_cast<int>(sep.size()) <= c);
      CHECK(max_residual_weight(inst.decomposition, w, sep) <= total / c + 1e-9);
      // Cross-check against the real components of G - S.
      std::vector<char> gone(60, 0);
      for (int x : sep)
        for (int v : inst.decomposition.bag(x)) gone[v] = 1;
      std::vector<int> rest;
      for (int v = 0; v < 60; ++v)
        if (!gone[v]) rest.push_back(v);
      auto sub = induced_subgraph(inst.graph, rest);
      for (const auto& comp : connected_components(sub.graph)) {
        double s = 0;
        for (int v : comp) s += w[sub.to_parent[v]];
        CHECK(s <= total / c + 1e-9);
      }
    }
  }
}

TEST_CASE("layer restriction") {
  auto d = TreeDecomposition::from_parents({{0, 1, 2}, {1, 2, 3}}, {-1, 0});
  auto same = layer_restriction(d, {0, 1, 2, 3});
  CHECK(same.bags() == d.bags());
  auto none = layer_restriction(d, {});
  CHECK(none.bag(0).empty());
  CHECK(none.bag(1).empty());
  auto r = layer_restriction(d, {1, 3});
  CHECK(r.bag(0) == std::vector<int>{1});
  CHECK(r.bag(1) == std::vector<int>{1, 3});
}

TEST_CASE("subtree weights examples") {
  Graph p3 = path_graph(3);
  auto d = path_bags(3);
  auto lay = bfs_layering(p3, {0});
  auto k = subtree_weights(p3, d, lay, 1, 1);
  CHECK(k[1] == doctest::Approx(2.0));
  CHECK(subtree_weights(p3, d, lay, 2, 1)[2] == doctest::Approx(1.0));

  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  auto sd = TreeDecomposition::from_parents({{0, 1}, {0, 2}, {0, 3}}, {-1, 0, 0});
  auto sl = bfs_layering(star, {0});
  auto ks = subtree_weights(star, sd, sl, 1, 1);
  CHECK(ks[1] + ks[2] + ks[3] == doctest::Approx(3.0));
  CHECK_THROWS_AS(subtree_weights(star, sd, sl, 5, 1), Error);
}

TEST_CASE("random simple t-trees") {
  for (int t = 1; t <= 4; ++t) {
    auto small = random_simple_ttree(t + 1, t, 1);
    CHECK(small.graph == complete_graph(t + 1));
    CHECK(small.decomposition.size() == 1);
  }
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto p = random_simple_ttree(40, 1, seed);
    for (int v = 0; v < 40; ++v) CHECK(p.graph.degree(v) <= 2);
    CHECK(p.graph.edge_count() == 39);  // one path
  }
  for (int t = 1; t <= 3; ++t)
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      auto inst = random_simple_ttree(100, t, seed);
      auto r = validate_decomposition(inst.graph, inst.decomposition, t);
      CHECK(r.is_valid);
      CHECK(r.width == t);
      CHECK(r.is_simple_for == t);
      CHECK(is_edge_maximal(inst.graph, inst.decomposition));
      auto again = random_simple_ttree(100, t, seed);
      CHECK(again.graph == inst.graph);
    }
  CHECK_THROWS_AS(random_simple_ttree(2, 3, 1), Error);
}

TEST_CASE("other generators") {
  for (int w = 0; w <= 3; ++w)
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      auto p = random_path_instance(30, w, seed);
      CHECK(validate_decomposition(p.graph, p.decomposition.as_tree()).is_valid);
      CHECK(p.decomposition.width() <= w);
      CHECK(is_edge_maximal(p.graph, p.decomposition.as_tree()));
      auto k = random_ktree(30, w, seed);
      CHECK(validate_decomposition(k.graph, k.decomposition).width == w);
      CHECK(is_edge_maximal(k.graph, k.decomposition));
    }
}

TEST_CASE("td round trip and root override") {
  auto inst = random_simple_ttree(30, 2, 4);
  std::ostringstream out;
  write_td(out, inst.decomposition, 30);
  std::istringstream in(out.str());
  int n = 0;
  auto back = read_td(in, 1, &n);
  CHECK(n == 30);
  CHECK(back.bags() == inst.decomposition.bags());
  CHECK(back.root() == inst.decomposition.root());
  std::ostringstream again;
  write_td(again, back, 30);
  CHECK(again.str() == out.str());

  std::istringstream in2(out.str());
  auto rerooted = read_td(in2, 3);
  CHECK(rerooted.root() == 2);
  CHECK(validate_decomposition(inst.graph, rerooted).is_valid);
}

// Structural facts about edge-maximal decompositions, on random t-trees.
TEST_CASE("induced paths are unimodal in the tree order") {
  for (int it = 0; it < 60; ++it) {
    auto inst = random_ktree(12, 1 + it % 3, 100 + it);
    const auto& d = inst.decomposition;
    auto x = min_depth_bags(d, 12);
    auto below = [&](int u, int v) { return is_ancestor(d, x[u], x[v]); };
    testing_helpers::for_each_induced_path(inst.graph, 11, [&](const std::vector<int>& p) {
      for (std::size_t i = 1; i + 1 < p.size(); ++i) CHECK((below(p[i], p.front()) || below(p[i], p.back())));
    });
  }
}

TEST_CASE("tree order refines the layer order") {
  for (int it = 0; it < 60; ++it) {
    auto inst = random_ktree(40, 1 + it % 4, 200 + it);
    const auto& d = inst.decomposition;
    auto lay = bfs_layering(inst.graph, d.bag(d.root()));
    auto x = min_depth_bags(d, 40);
    for (int v = 0; v < 40; ++v)
      for (int w = 0; w < 40; ++w)
        if (lay.layer_of[v] < lay.layer_of[w]) CHECK_FALSE((x[w] != x[v] && is_ancestor(d, x[w], x[v])));
  }
}

TEST_CASE("up-neighbours and the size claim") {
  for (int it = 0; it < 60; ++it) {
    const int t = 1 + it % 4;
    auto inst = random_ktree(40, t, 300 + it);
    const auto& g = inst.graph;
    auto lay = bfs_layering(g, inst.decomposition.bag(inst.decomposition.root()));
    for (int i = 1; i <= lay.depth(); ++i) {
      std::vector<int> deep;
      for (int v = 0; v < 40; ++v)
        if (lay.layer_of[v] >= i) deep.push_back(v);
      auto sub = induced_subgraph(g, deep);
      for (const auto& comp : connected_components(sub.graph)) {
        std::set<int> up;
        for (int v : comp)
          for (int w : g.neighbours(sub.to_parent[v]))
            if (lay.layer_of[w] == i - 1) up.insert(w);
        CHECK(static_cast<int>(up.size()) <= t);
      }
      auto k = subtree_weights(g, inst.decomposition, lay, i, t);
      double sum = 0;
      for (int v : lay.layers[i]) sum += k[v];
      CHECK(sum <= t * 40.0);
    }
  }
}
