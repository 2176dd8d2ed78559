#include <doctest.h>

#include "arbor/error.hpp"
#include "arbor/tz.hpp"

using namespace arbor;

TEST_CASE("window trees") {
  auto t = tz_build(-2, 2);
  CHECK(t.size() == 5 * kTzSiteSize);
  // Spine through every site, Y-shapes of height two, pendants of length 2 and 1.
  for (std::int64_t i = -2; i <= 2; ++i) {
    const Vertex stem = tz_vertex(-2, i, kTzStem);
    CHECK(t.has_edge(tz_vertex(-2, i, kTzSpine), stem));
    CHECK(t.has_edge(stem, tz_vertex(-2, i, kTzLeafLeft)));
    CHECK(t.has_edge(stem, tz_vertex(-2, i, kTzLeafRight)));
    CHECK(t.degree(tz_vertex(-2, i, kTzLeafLeft)) == 1);
    CHECK(t.has_edge(tz_vertex(-2, i, kTzSpine), tz_vertex(-2, i, kTzThird)));
    CHECK(t.has_edge(tz_vertex(-2, i, kTzThird), tz_vertex(-2, i, kTzChain2Near)));
    CHECK(t.has_edge(tz_vertex(-2, i, kTzChain2Near), tz_vertex(-2, i, kTzChain2Far)));
    CHECK(t.has_edge(tz_vertex(-2, i, kTzThird), tz_vertex(-2, i, kTzTwoThirds)));
    CHECK(t.has_edge(tz_vertex(-2, i, kTzTwoThirds), tz_vertex(-2, i, kTzChain1)));
    if (i < 2) CHECK(t.has_edge(tz_vertex(-2, i, kTzTwoThirds), tz_vertex(-2, i + 1, kTzSpine)));
  }
  CHECK_THROWS_AS(tz_build(1, 0), InvalidArgument);
}

TEST_CASE("tz_phi") {
  CHECK(tz_phi({-2, 2, {}}).is_identity());
  auto phi = tz_phi({-2, 2, {0}});
  std::size_t moved = 0;
  for (Vertex v = 0; v < phi.size(); ++v) moved += phi(v) != v;
  CHECK(moved == 2);
  CHECK(phi(tz_vertex(-2, 0, kTzLeafLeft)) == tz_vertex(-2, 0, kTzLeafRight));
  CHECK(compose(phi, phi).is_identity());
  CHECK_THROWS_AS(tz_phi({-2, 2, {3}}), InvalidArgument);
}

TEST_CASE("tz_decode") {
  IntegerWindow a{-3, 3, {-3, 0, 2}};
  CHECK(tz_decode(tz_phi(a), -3) == a);
  // The window is only known up to its left end.
  IntegerWindow shifted{-2, 4, {-2, 1, 3}};
  CHECK(tz_decode(tz_phi(a), -2) == shifted);
  auto path = share(UnrootedTree::from_edges(3, {{0, 1}, {1, 2}}));
  CHECK_THROWS_AS(tz_decode(identity_aut(path), 0), InvalidArgument);
}

TEST_CASE("zset files") {
  IntegerWindow a{-2, 2, {-1, 2}};
  CHECK(serialize(a) == "zset -2 2 2\n-1\n2\n");
  CHECK(parse_zset(serialize(a)) == a);
  CHECK_THROWS_AS(parse_zset("zset 2 -2 0\n"), Error);
  CHECK_THROWS_AS(parse_zset("zset -2 2 1\n5\n"), Error);
}

TEST_CASE("shift law") {
  IntegerWindow a{-4, 4, {-4, -1, 3}}, b{-4, 4, {-3, 0, 4}};
  auto p = tz_phi(a), q = tz_phi(b);
  auto s = tz_shift(-4, 4, 1);
  for (Vertex x = 0; x < s.size(); ++x) {
    if (s[x] != kNoVertex) CHECK(s[p(x)] == q(s[x]));
  }
  CHECK(s[tz_vertex(-4, 4, kTzSpine)] == kNoVertex);
  CHECK(s[tz_vertex(-4, -4, kTzSpine)] == tz_vertex(-4, -3, kTzSpine));
}
