#include <doctest.h>

#include "arbor/canon.hpp"
#include "arbor/oracles.hpp"

using namespace arbor;

TEST_CASE("rooted codes") {
  CHECK(code_rooted(RootedTree::single()).str() == "(0|)");
  CHECK(code_rooted(RootedTree::from_parents({kNoVertex, 0, 0})).str() == "(0|(0|)(0|))");

  std::vector<std::uint64_t> labels{1, 2, 2};
  CHECK(code_rooted(RootedTree::from_parents({kNoVertex, 0, 1}), labels).str() == "(1|(2|(2|)))");
  // Labels separate otherwise equal shapes.
  std::vector<std::uint64_t> a{0, 1, 2}, b{0, 2, 1};
  auto cherry = RootedTree::from_parents({kNoVertex, 0, 0});
  CHECK(code_rooted(cherry, a) == code_rooted(cherry, b));
  std::vector<std::uint64_t> c{0, 1, 1};
  CHECK(code_rooted(cherry, a) != code_rooted(cherry, c));
}

TEST_CASE("unrooted codes") {
  CHECK(code_unrooted(UnrootedTree::single()).str() == "V:(0|)");
  CHECK(code_unrooted(UnrootedTree::from_edges(2, {{0, 1}})).str() == "E:(0|)(0|)");
}

TEST_CASE("witnesses") {
  auto star = UnrootedTree::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  auto w = iso_witness(star, star);
  REQUIRE(w);
  CHECK(is_isomorphism(star, star, *w));

  auto p3 = UnrootedTree::from_edges(3, {{0, 1}, {1, 2}});
  CHECK_FALSE(iso_witness(p3, star));
  auto p4 = UnrootedTree::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK_FALSE(iso_witness(p4, star));

  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    auto t = oracle::random_tree(7, rng);
    auto u = oracle::relabel(t, rng);
    auto m = iso_witness(t, u);
    REQUIRE(m);
    // Check edge preservation directly rather than through is_isomorphism.
    for (const Edge& e : t.edges()) CHECK(u.has_edge((*m)[e.u], (*m)[e.v]));

    auto r = oracle::random_recursive_tree(7, rng);
    auto s = oracle::relabel(r, rng);
    auto rm = iso_witness(r, s);
    REQUIRE(rm);
    CHECK((*rm)[0] == 0);
    for (Vertex v = 1; v < 7; ++v) CHECK(s.parent((*rm)[v]) == (*rm)[r.parent(v)]);
  }
}

TEST_CASE("code equality matches the oracle on small trees") {
  auto trees = oracle::labelled_trees(6);
  Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    const auto& a = trees[rng.below(trees.size())];
    const auto& b = trees[rng.below(trees.size())];
    CHECK((code_unrooted(a) == code_unrooted(b)) == oracle::isomorphic(a, b));
  }
  CHECK(oracle::rooted_trees(8).size() == 115);
  CHECK(oracle::unrooted_trees(8).size() == 23);
}
