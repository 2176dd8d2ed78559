#include <doctest.h>

#include "arbor/canon.hpp"
#include "arbor/error.hpp"
#include "arbor/oracles.hpp"
#include "arbor/orbit_tree.hpp"
#include "arbor/text_format.hpp"

using namespace arbor;

TEST_CASE("orbit trees") {
  Rng rng(2);
  auto t = oracle::random_recursive_tree(7, rng);
  auto ref = share(t);
  auto id = orbit_tree(identity_aut(ref));
  CHECK(id.tree == t);
  CHECK(id.labels == std::vector<std::uint64_t>(7, 1));

  auto cherry = share(RootedTree::from_parents({kNoVertex, 0, 0}));
  auto swap = orbit_tree(validate_aut(cherry, {0, 2, 1}));
  CHECK(swap.tree == RootedTree::from_parents({kNoVertex, 0}));
  CHECK(swap.labels == std::vector<std::uint64_t>{1, 2});
  CHECK(serialize(swap) == "rooted 2\n1 0\nlabels 1 2\n");

  // Two branches of length 2 swapped: orbits {0}, {1,2}, {3,4}.
  auto fork = share(RootedTree::from_parents({kNoVertex, 0, 0, 1, 2}));
  auto ot = orbit_tree(validate_aut(fork, {0, 2, 1, 4, 3}));
  CHECK(ot.tree == RootedTree::from_parents({kNoVertex, 0, 1}));
  CHECK(ot.labels == std::vector<std::uint64_t>{1, 2, 2});

  auto edge = share(UnrootedTree::from_edges(2, {{0, 1}}));
  CHECK_THROWS_AS(orbit_tree(identity_aut(edge)), InvalidArgument);
}

TEST_CASE("conj_decide and witnesses") {
  auto star = share(UnrootedTree::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}));
  auto s12 = validate_aut(star, {0, 2, 1, 3});
  auto s23 = validate_aut(star, {0, 1, 3, 2});
  auto cyc = validate_aut(star, {0, 2, 3, 1});
  CHECK(conj_decide(s12, s23));
  CHECK_FALSE(conj_decide(s12, cyc));
  auto w = conj_witness(s12, s23);
  REQUIRE(w);
  CHECK(conjugates(*w, s12, s23));

  auto id = identity_aut(star);
  auto wi = conj_witness(id, id);
  REQUIRE(wi);
  CHECK(conjugates(*wi, id, id));

  // A central edge swapped by one map only.
  auto path = share(UnrootedTree::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}));
  CHECK_FALSE(conj_decide(identity_aut(path), validate_aut(path, {3, 2, 1, 0})));

  auto other = share(UnrootedTree::from_edges(4, {{0, 1}, {0, 2}, {1, 3}}));
  CHECK_THROWS_AS(conj_decide(s12, identity_aut(other)), InvalidArgument);
}

TEST_CASE("witnesses for random conjugate pairs") {
  Rng rng(17);
  int found = 0;
  for (int i = 0; i < 100; ++i) {
    auto t = oracle::random_recursive_tree(1 + rng.below(8), rng);
    auto ref = share(t);
    auto brute = oracle::automorphisms(t);
    auto phi = validate_aut(ref, brute[rng.below(brute.size())]);
    auto alpha = validate_aut(ref, brute[rng.below(brute.size())]);
    auto psi = conjugate(alpha, phi);
    auto w = conj_witness(phi, psi);
    REQUIRE(w);
    CHECK(conjugates(*w, phi, psi));
    found += !phi.is_identity();
  }
  CHECK(found > 10);
}

TEST_CASE("lift_witness from an orbit-tree isomorphism") {
  auto fork = share(RootedTree::from_parents({kNoVertex, 0, 0, 0, 1, 2, 3}));
  auto phi = validate_aut(fork, {0, 2, 1, 3, 5, 4, 6});
  auto alpha = validate_aut(fork, {0, 2, 3, 1, 5, 6, 4});
  auto psi = conjugate(alpha, phi);
  auto a = orbit_tree(phi);
  auto b = orbit_tree(psi);
  // The orbit map induced by a different conjugator: phi commutes with itself,
  // so alpha o phi also conjugates phi to psi.
  auto beta = compose(alpha, phi);
  std::vector<Vertex> iso(a.tree.size());
  for (Vertex k = 0; k < a.tree.size(); ++k) iso[k] = b.orbit_of[beta(a.orbits[k][0])];
  for (Vertex k = 0; k < a.tree.size(); ++k) REQUIRE(a.labels[k] == b.labels[iso[k]]);
  auto w = lift_witness(phi, psi, iso);
  CHECK(conjugates(w, phi, psi));
  // An orbit map that does not respect labels is rejected.
  std::vector<Vertex> wrong(iso);
  std::swap(wrong[1], wrong[2]);
  CHECK_THROWS_AS(lift_witness(phi, psi, wrong), InvalidArgument);
}
