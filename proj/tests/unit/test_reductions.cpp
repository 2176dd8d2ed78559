#include <doctest.h>

#include <algorithm>

#include "arbor/canon.hpp"
#include "arbor/error.hpp"
#include "arbor/oracles.hpp"
#include "arbor/orbit_tree.hpp"
#include "arbor/reductions.hpp"

using namespace arbor;

namespace {

std::vector<Vertex> fixed_points(const TreeAutomorphism& a) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < a.size(); ++v) {
    if (a(v) == v) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> sorted(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("sigma swaps the first coordinate in pairs") {
  const auto A = truncate_regular(Degree::omega(), 3, 4);
  auto s = sigma_aut(3, 4);
  CHECK(compose(s, s).is_identity());
  CHECK(fixed_points(s) == std::vector<Vertex>{0});
  for (Vertex v = 1; v < A.size(); ++v) {
    auto w = A.word(v);
    w[0] ^= 1;
    CHECK(A.word(s(v)) == w);
  }
  CHECK_THROWS_AS(sigma_aut(0, 2), InvalidArgument);
  CHECK_THROWS_AS(sigma_aut(2, 3), InvalidArgument);
}

TEST_CASE("phi_rooted") {
  auto single = phi_rooted(RootedTree::single(), 2, 2);
  CHECK(single.embedding == std::vector<Vertex>{0});
  CHECK(fixed_points(single.phi) == std::vector<Vertex>{0});
  CHECK(single.phi == sigma_aut(2, 2));

  auto t = RootedTree::from_parents({kNoVertex, 0, 0, 1, 1, 2});
  auto p = phi_rooted(t, 4, 6);
  CHECK(fixed_points(p.phi) == sorted(p.embedding));
  const auto& A = *p.truncation;
  for (Vertex x = 1; x < t.size(); ++x) {
    CHECK(A.parent(p.embedding[x]) == p.embedding[t.parent(x)]);
  }
  // Child i of a vertex sits in slot 2i+1.
  CHECK(A.word(p.embedding[1]) == std::vector<unsigned>{1});
  CHECK(A.word(p.embedding[2]) == std::vector<unsigned>{3});
  CHECK(A.word(p.embedding[4]) == std::vector<unsigned>{1, 3});

  CHECK_THROWS_AS(phi_rooted(t, 4, 5), InvalidArgument);
  CHECK_THROWS_AS(phi_rooted(t, 3, 6), BoundExceeded);
  CHECK_THROWS_AS(phi_rooted(t, 4, 4), BoundExceeded);

  // Odd spare counts fall back to a 3-cycle; still fixed-point free off T.
  auto odd = phi_rooted(RootedTree::from_parents({kNoVertex, 0}), 3, 6);
  CHECK(fixed_points(odd.phi) == sorted(odd.embedding));
}

TEST_CASE("phi_rooted separates the two rooted trees on three vertices") {
  auto path = phi_rooted(RootedTree::from_parents({kNoVertex, 0, 1}), 4, 6);
  auto cherry = phi_rooted(RootedTree::from_parents({kNoVertex, 0, 0}), 4, 6);
  auto q = validate_aut(path.phi.tree_ref(), {cherry.phi.perm().begin(), cherry.phi.perm().end()});
  CHECK_FALSE(conj_decide(path.phi, q));
}

TEST_CASE("phi_rooted of relabelings are conjugate") {
  Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    auto t = oracle::random_recursive_tree(1 + rng.below(6), rng);
    auto u = oracle::relabel(t, rng);
    const auto d = static_cast<unsigned>(t.height() + 2);
    const auto w = static_cast<unsigned>(2 * t.max_branching() + 2);
    auto p = phi_rooted(t, d, w);
    auto q = phi_rooted(u, d, w);
    auto qq = validate_aut(p.phi.tree_ref(), {q.phi.perm().begin(), q.phi.perm().end()});
    auto a = conj_witness(p.phi, qq);
    REQUIRE(a);
    CHECK(conjugates(*a, p.phi, qq));
  }
}

TEST_CASE("invert_to_rooted") {
  auto edge = share(UnrootedTree::from_edges(2, {{0, 1}}));
  auto r = invert_to_rooted(validate_aut(edge, {1, 0}));
  CHECK(std::get<RootedTree>(r.tree()) == RootedTree::from_parents({kNoVertex, 0, 0}));
  CHECK(r.perm()[0] == 0);
  CHECK(r(1) == 2);

  auto path = share(UnrootedTree::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}));
  auto rp = invert_to_rooted(validate_aut(path, {3, 2, 1, 0}));
  CHECK(code_rooted(std::get<RootedTree>(rp.tree())).str() == "(0|(0|(0|))(0|(0|)))");
  CHECK(to_string(cycle_type(rp)) == "{1:1,2:2}");

  CHECK_THROWS_WITH_AS(invert_to_rooted(identity_aut(path)), doctest::Contains("not type (a)"), InvalidArgument);
}

TEST_CASE("decide_type_a") {
  // Two copies of a cherry joined at the roots; swap the copies with or
  // without a twist.
  auto t = share(UnrootedTree::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}}));
  auto plain = validate_aut(t, {3, 4, 5, 0, 1, 2});
  auto twist = validate_aut(t, {3, 5, 4, 0, 1, 2});
  auto both = validate_aut(t, {3, 5, 4, 0, 2, 1});
  CHECK(decide_type_a(plain, plain));
  CHECK(decide_type_a(plain, twist) == conj_oracle(plain, twist).has_value());
  CHECK(decide_type_a(plain, both) == conj_oracle(plain, both).has_value());
  CHECK(decide_type_a(twist, both) == conj_oracle(twist, both).has_value());
}

TEST_CASE("phi_unrooted") {
  auto edge = UnrootedTree::from_edges(2, {{0, 1}});
  auto p = phi_unrooted(edge, Degree::finite(3), 2);
  CHECK(p.embedding.size() == 2);
  CHECK(fixed_subtree(ball_presentation(p)) == sorted(p.embedding));
  CHECK(p.truncation->size() == 10);

  auto path3 = UnrootedTree::from_edges(3, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(phi_unrooted(path3, Degree::finite(3), 3), InvalidArgument);
  auto omega = phi_unrooted(path3, Degree::omega(), 2, 2);
  CHECK(fixed_subtree(ball_presentation(omega)) == sorted(omega.embedding));
  CHECK(code_unrooted(induced_subtree(omega.truncation->base(), omega.embedding)) == code_unrooted(path3));
  CHECK_THROWS_AS(phi_unrooted(path3, Degree::omega(), 1, 2), BoundExceeded);
  CHECK_THROWS_AS(phi_unrooted(path3, Degree::omega(), 2, 1), InvalidArgument);

  // The two {1,3}-trees on ten vertices: inner path of four, inner star.
  auto caterpillar = UnrootedTree::from_edges(
      10, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {3, 9}});
  auto spider = UnrootedTree::from_edges(
      10, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 8}, {3, 9}});
  auto code_of_fixed = [](const UnrootedTree& t) {
    auto pair = phi_unrooted(t, Degree::finite(3), 4);
    return code_unrooted(induced_subtree(pair.truncation->base(), fixed_subtree(ball_presentation(pair))));
  };
  CHECK(code_of_fixed(caterpillar) == code_unrooted(caterpillar));
  CHECK(code_of_fixed(spider) == code_unrooted(spider));
  CHECK(code_of_fixed(caterpillar) != code_of_fixed(spider));

  // Degree 4 with a single vertex of degree 4.
  auto star4 = UnrootedTree::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  auto s = phi_unrooted(star4, Degree::finite(4), 2);
  CHECK(fixed_subtree(ball_presentation(s)) == sorted(s.embedding));
}

TEST_CASE("height invariants") {
  auto star = share(truncate_regular(Degree::omega(), 1, 3).as_rooted());
  CHECK(height_invariant(identity_aut(star)) == "{1:3}");
  CHECK(height_invariant(validate_aut(star, {0, 2, 3, 1})) == "{3:1}");

  auto two = share(truncate_regular(Degree::omega(), 2, 2).as_rooted());
  CHECK(height_invariant(identity_aut(two)) == "[(1,{1:2})(1,{1:2})]");

  auto ragged = share(RootedTree::from_parents({kNoVertex, 0, 0, 1}));
  CHECK_THROWS_AS(height_invariant(identity_aut(ragged)), InvalidArgument);
}
