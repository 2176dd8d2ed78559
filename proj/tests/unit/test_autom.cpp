#include <doctest.h>

#include <algorithm>
#include <set>

#include "arbor/autom.hpp"
#include "arbor/error.hpp"
#include "arbor/oracles.hpp"
#include "arbor/text_format.hpp"

using namespace arbor;

namespace {

TreeRef star3() { return share(UnrootedTree::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})); }

}  // namespace

TEST_CASE("validate_aut") {
  auto t = star3();
  CHECK(validate_aut(t, {0, 1, 2, 3}).is_identity());
  CHECK_NOTHROW(validate_aut(share(UnrootedTree::from_edges(2, {{0, 1}})), {1, 0}));
  auto path = share(RootedTree::from_parents({kNoVertex, 0, 1}));
  CHECK_THROWS_WITH_AS(validate_aut(path, {1, 0, 2}), doctest::Contains("root moved"), InvalidArgument);
  CHECK_THROWS_AS(validate_aut(t, {1, 0, 2, 3}), InvalidArgument);
  CHECK_THROWS_AS(validate_aut(t, {0, 1, 1, 3}), InvalidArgument);
  CHECK_THROWS_AS(validate_aut(t, {0, 1, 2}), InvalidArgument);
}

TEST_CASE("orbits and cycle types") {
  auto t = star3();
  auto id = identity_aut(t);
  CHECK(orbits(id).size() == 4);
  auto swap = validate_aut(t, {0, 2, 1, 3});
  CHECK(orbits(swap) == std::vector<std::vector<Vertex>>{{0}, {1, 2}, {3}});
  auto cyc = validate_aut(t, {0, 2, 3, 1});
  CHECK(orbits(cyc) == std::vector<std::vector<Vertex>>{{0}, {1, 2, 3}});
  CHECK(to_string(cycle_type(cyc)) == "{1:1,3:1}");
  CHECK(to_string(cycle_type(identity_aut(share(RootedTree::from_parents({kNoVertex, 0, 1}))))) == "{1:3}");
  CHECK(serialize(cyc) == "aut 4\n0 2 3 1\n");
}

TEST_CASE("compose, inverse, conjugate") {
  auto t = star3();
  auto a = validate_aut(t, {0, 2, 3, 1});
  auto b = validate_aut(t, {0, 2, 1, 3});
  auto ab = compose(a, b);
  for (Vertex v = 0; v < 4; ++v) CHECK(ab(v) == a(b(v)));
  CHECK(compose(a, inverse(a)).is_identity());
  auto c = conjugate(a, b);
  CHECK(conjugates(a, b, c));
  CHECK(compose(compose(a, b), inverse(a)) == c);

  auto other = share(UnrootedTree::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}));
  CHECK_THROWS_AS(compose(a, identity_aut(other)), InvalidArgument);
}

TEST_CASE("enumerate_aut") {
  CHECK(enumerate_aut(share(UnrootedTree::from_edges(2, {{0, 1}}))).size() == 2);
  CHECK(enumerate_aut(star3()).size() == oracle::automorphisms(std::get<UnrootedTree>(*star3())).size());
  CHECK(enumerate_aut(star3()).size() == 6);
  CHECK(enumerate_aut(share(RootedTree::from_parents({kNoVertex, 0, 1}))).size() == 1);
  auto big = share(UnrootedTree::from_edges(11, [] {
    std::vector<Edge> e;
    for (Vertex i = 1; i < 11; ++i) e.emplace_back(0, i);
    return e;
  }()));
  CHECK_THROWS_AS(enumerate_aut(big), BoundExceeded);
  CHECK(enumerate_aut(big, 11).size() == 3628800);
}

TEST_CASE("enumerate_aut is a group matching brute force") {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& t : oracle::unrooted_trees(n)) {
      auto ref = share(t);
      auto g = enumerate_aut(ref);
      std::set<std::vector<Vertex>> members;
      for (const auto& a : g) members.emplace(a.perm().begin(), a.perm().end());
      auto brute = oracle::automorphisms(t);
      CHECK(members == std::set<std::vector<Vertex>>(brute.begin(), brute.end()));
      for (const auto& a : g) {
        auto inv = inverse(a);
        CHECK(members.count({inv.perm().begin(), inv.perm().end()}));
        for (const auto& b : g) {
          auto ab = compose(a, b);
          CHECK(members.count({ab.perm().begin(), ab.perm().end()}));
        }
      }
    }
  }
}

TEST_CASE("conj_oracle") {
  auto t = star3();
  auto s12 = validate_aut(t, {0, 2, 1, 3});
  auto s23 = validate_aut(t, {0, 1, 3, 2});
  auto cyc = validate_aut(t, {0, 2, 3, 1});
  auto same = conj_oracle(s12, s12);
  REQUIRE(same);
  CHECK(conjugates(*same, s12, s12));
  auto w = conj_oracle(s12, s23);
  REQUIRE(w);
  CHECK(conjugates(*w, s12, s23));
  CHECK_FALSE(conj_oracle(s12, cyc));

  auto classes = conjugacy_classes(enumerate_aut(t));
  CHECK(std::set<std::size_t>(classes.begin(), classes.end()).size() == 3);
}
