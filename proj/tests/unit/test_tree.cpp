#include <doctest.h>

#include <algorithm>
#include <queue>

#include "arbor/error.hpp"
#include "arbor/oracles.hpp"
#include "arbor/regular.hpp"
#include "arbor/text_format.hpp"
#include "arbor/tree.hpp"

using namespace arbor;

namespace {

UnrootedTree path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return UnrootedTree::from_edges(n, e);
}

// Center straight from the definition: vertices of minimum eccentricity,
// eccentricities from a BFS at every vertex.
std::vector<Vertex> brute_center(const UnrootedTree& t) {
  std::vector<std::size_t> ecc(t.size());
  for (Vertex s = 0; s < t.size(); ++s) {
    std::vector<std::size_t> d(t.size(), SIZE_MAX);
    std::queue<Vertex> q;
    d[s] = 0;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : t.neighbors(v)) {
        if (d[w] == SIZE_MAX) d[w] = d[v] + 1, q.push(w);
      }
    }
    ecc[s] = *std::max_element(d.begin(), d.end());
  }
  const auto m = *std::min_element(ecc.begin(), ecc.end());
  std::vector<Vertex> out;
  for (Vertex v = 0; v < t.size(); ++v) {
    if (ecc[v] == m) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("parse and serialize trees") {
  auto one = parse_tree("rooted 1");
  REQUIRE(std::holds_alternative<RootedTree>(one));
  CHECK(std::get<RootedTree>(one).size() == 1);

  auto edge = parse_unrooted("unrooted 2\n0 1\n");
  CHECK(edge.size() == 2);
  CHECK(edge.has_edge(0, 1));
  CHECK(serialize(edge) == "unrooted 2\n0 1\n");

  const std::string text = "rooted 4\n1 0\n2 0\n3 1\n";
  CHECK(serialize(parse_rooted(text)) == text);
  // Line order and edge orientation are not significant on input; output is canonical.
  CHECK(serialize(parse_rooted("rooted 4\n3 1\n1 0\n2 0\n")) == text);
  CHECK(serialize(parse_unrooted("unrooted 3\n2 0\n1 0\n")) == "unrooted 3\n0 1\n0 2\n");
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_tree(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("rooted 3\n1 0\n2 2\n") == 3);  // parent not below child
  CHECK(line_of("unrooted 3\n0 1\n0 7\n") == 3);
  CHECK(line_of("forest 3\n") == 1);
  CHECK(line_of("unrooted 3\n0 1\n") == 3);     // missing edge, reported past the end
  CHECK(line_of("rooted 3\n1 0\n1 0\n") == 3);  // duplicate child
  CHECK(line_of("unrooted  2\n0 1\n") == 1);    // double space
  CHECK(line_of("rooted 01\n") == 1);
  CHECK_THROWS_AS(UnrootedTree::from_edges(3, {{0, 1}, {0, 1}}), InvalidArgument);
  CHECK_THROWS_AS(UnrootedTree::from_edges(4, {{0, 1}, {1, 2}, {0, 2}}), InvalidArgument);
}

TEST_CASE("serialization round trip on random trees") {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    auto u = oracle::random_tree(1 + rng.below(12), rng);
    CHECK(parse_unrooted(serialize(u)) == u);
    auto r = oracle::random_recursive_tree(1 + rng.below(12), rng);
    CHECK(parse_rooted(serialize(r)) == r);
  }
}

TEST_CASE("center") {
  CHECK(center(path(3)) == Center{CenterVertex{1}});
  CHECK(center(path(4)) == Center{CenterEdge{1, 2}});
  CHECK(center(UnrootedTree::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})) == Center{CenterVertex{0}});
  CHECK(center(UnrootedTree::single()) == Center{CenterVertex{0}});

  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    auto t = oracle::random_tree(1 + rng.below(15), rng);
    auto want = brute_center(t);
    Center c = center(t);
    if (want.size() == 1) {
      CHECK(c == Center{CenterVertex{want[0]}});
    } else {
      REQUIRE(want.size() == 2);
      CHECK(c == Center{CenterEdge{want[0], want[1]}});
    }
  }
}

TEST_CASE("subdivide edge") {
  auto s = subdivide_edge(path(2), {0, 1});
  CHECK(s.midpoint == 2);
  CHECK(s.tree == UnrootedTree::from_edges(3, {{0, 2}, {1, 2}}));

  auto p = subdivide_edge(path(3), {0, 1});
  CHECK(p.midpoint == 3);
  CHECK(p.tree == UnrootedTree::from_edges(4, {{0, 3}, {1, 3}, {1, 2}}));

  CHECK_THROWS_AS(subdivide_edge(path(3), {0, 2}), InvalidArgument);
}

TEST_CASE("regular truncations") {
  auto star = truncate_regular(Degree::finite(3), 1);
  CHECK(star.size() == 4);
  CHECK(star.base() == UnrootedTree::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}));

  // 1 + n (n-1)^0 + n (n-1)^1 + ...
  for (unsigned n = 2; n <= 5; ++n) {
    for (unsigned r = 0; r <= 4; ++r) {
      std::size_t want = 1, layer = n;
      for (unsigned k = 1; k <= r; ++k, layer *= n - 1) want += layer;
      CHECK(truncate_regular(Degree::finite(n), r).size() == want);
    }
  }
  CHECK(truncate_regular(Degree::finite(3), 2).size() == 10);

  auto omega = truncate_regular(Degree::omega(), 1, 2);
  CHECK(omega.size() == 3);
  CHECK(truncate_regular(Degree::omega(), 2, 3).size() == 13);

  // Every non-rim vertex has full degree, rim vertices are leaves.
  auto t = truncate_regular(Degree::finite(4), 3);
  for (Vertex v = 0; v < t.size(); ++v) {
    CHECK(t.base().degree(v) == (t.depth(v) < 3 ? 4u : 1u));
    CHECK(t.find(t.word(v)) == v);
    CHECK(t.distance(0, v) == t.depth(v));
  }
}

TEST_CASE("root_at and induced subtrees") {
  auto view = root_at(path(4), 1);
  CHECK(view.tree.size() == 4);
  CHECK(view.to_source[0] == 1);
  for (Vertex v = 0; v < 4; ++v) CHECK(view.to_source[view.from_source[v]] == v);

  auto cut = root_at(path(4), 1, 2);
  CHECK(cut.tree.size() == 2);
  CHECK(cut.from_source[3] == kNoVertex);

  std::vector<Vertex> keep{3, 2, 1};
  CHECK(induced_subtree(path(5), keep) == path(3));
  std::vector<Vertex> gap{0, 2};
  CHECK_THROWS_AS(induced_subtree(path(3), gap), InvalidArgument);
}
