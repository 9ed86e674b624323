#include <doctest.h>

#include <random>

#include "lrank/colorers.hpp"
#include "lrank/error.hpp"
#include "lrank/numerics.hpp"

using namespace lrank;

namespace {

void check_result(const Graph& g, const SimpleTTreeResult& r) {
  CHECK_FALSE(verify_ranking(g, r.ranking));
  CHECK(r.colors == r.ranking.max_color);
  CHECK(r.distinct_colors <= r.colors);
  CHECK(r.colors <= r.a * r.k + 1e-9);
  CHECK(r.bands_ok);
  CHECK(r.restarts <= 5);
}

}  // namespace

TEST_CASE("width one: paths get the ruler ranking") {
  std::vector<std::vector<int>> bags;
  for (int i = 0; i + 1 < 100; ++i) bags.push_back({i, i + 1});
  auto d = PathDecomposition{bags}.as_tree();
  auto r = rank_simple_ttree(path_graph(100), d, 2, 1);
  CHECK(r.colors == 3);
  check_result(path_graph(100), r);
}

TEST_CASE("a single clique bag gets distinct colors") {
  for (int t = 1; t <= 5; ++t) {
    std::vector<int> bag(t + 1);
    for (int i = 0; i <= t; ++i) bag[i] = i;
    auto d = TreeDecomposition::from_parents({bag}, {-1});
    auto r = rank_simple_ttree(complete_graph(t + 1), d, 2);
    CHECK(r.distinct_colors == t + 1);
    check_result(complete_graph(t + 1), r);
  }
}

TEST_CASE("tiny instances agree with the oracle") {
  for (int t = 1; t <= 3; ++t)
    for (std::uint64_t seed = 1; seed <= 30; ++seed)
      for (int ell = 1; ell <= 3; ++ell) {
        const int n = t + 1 + static_cast<int>(seed % (10 - t));
        auto inst = random_simple_ttree(n, t, seed);
        auto r = rank_simple_ttree(inst.graph, inst.decomposition, ell, t);
        CHECK_FALSE(verify_ranking_oracle(inst.graph, r.ranking));
        check_result(inst.graph, r);
      }
}

TEST_CASE("random simple t-trees up to a few thousand vertices") {
  for (int t = 1; t <= 3; ++t)
    for (int n : {50, 300, 3000})
      for (int ell : {1, 2, 3})
        for (std::uint64_t seed = 1; seed <= 2; ++seed) {
          auto inst = random_simple_ttree(n, t, seed * 31 + n);
          auto r = rank_simple_ttree(inst.graph, inst.decomposition, ell, t);
          CAPTURE(t);
          CAPTURE(n);
          CAPTURE(ell);
          check_result(inst.graph, r);
          if (t >= 2) CHECK(r.k == doctest::Approx(solve_k(t, n).k));
        }
}

TEST_CASE("t = 3 at ten thousand vertices") {
  auto inst = random_simple_ttree(10000, 3, 7);
  auto r = rank_simple_ttree(inst.graph, inst.decomposition, 2, 3);
  check_result(inst.graph, r);
  CHECK_FALSE(r.ledger.empty());
}

TEST_CASE("top bands sit above their block interiors in the ledger") {
  auto inst = random_simple_ttree(2000, 2, 3);
  auto r = rank_simple_ttree(inst.graph, inst.decomposition, 2, 2);
  std::vector<const BandRecord*> interior(r.ledger.size(), nullptr);
  int pairs = 0;
  for (std::size_t i = 0; i + 1 < r.ledger.size(); ++i)
    if (r.ledger[i].kind == "interior" && r.ledger[i + 1].kind == "top" &&
        r.ledger[i].block == r.ledger[i + 1].block) {
      CHECK(r.ledger[i + 1].lo > r.ledger[i].hi);
      ++pairs;
    }
  CHECK(pairs > 0);
}

TEST_CASE("subgraphs are completed, ranked and restricted") {
  std::mt19937_64 rng(8);
  for (int it = 0; it < 10; ++it) {
    auto inst = random_simple_ttree(400, 2, 500 + it);
    std::vector<Edge> kept;
    std::bernoulli_distribution keep(0.6);
    for (auto e : inst.graph.edges())
      if (keep(rng)) kept.push_back(e);
    Graph sub(400, kept);
    auto r = rank_simple_ttree(sub, inst.decomposition, 2, 2);
    check_result(sub, r);
  }
}

TEST_CASE("deterministic output") {
  auto inst = random_simple_ttree(1500, 3, 99);
  auto a = rank_simple_ttree(inst.graph, inst.decomposition, 2, 3);
  auto b = rank_simple_ttree(inst.graph, inst.decomposition, 2, 3);
  CHECK(a.ranking.colors == b.ranking.colors);
  CHECK(a.a == b.a);
}

TEST_CASE("bad inputs") {
  auto inst = random_simple_ttree(20, 2, 1);
  CHECK_THROWS_AS(rank_simple_ttree(inst.graph, inst.decomposition, 0), Error);
  CHECK_THROWS_AS(rank_simple_ttree(inst.graph, inst.decomposition, 2, 1), Error);
  auto broken = TreeDecomposition::from_parents({{0, 1}}, {-1});
  CHECK_THROWS_AS(rank_simple_ttree(inst.graph, broken, 2), Error);
}
