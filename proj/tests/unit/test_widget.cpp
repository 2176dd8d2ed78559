#include <doctest.h>

#include "arbor/canon.hpp"
#include "arbor/error.hpp"
#include "arbor/oracles.hpp"
#include "arbor/widget.hpp"

using namespace arbor;

namespace {

GroupWordWindow window(unsigned r, std::set<std::string> members) { return {r, std::move(members)}; }

std::size_t count_part(const WidgetCoding& c, const std::string& word, char edge) {
  std::size_t n = 0;
  for (const auto& p : c.provenance) n += p.word == word && p.edge == edge && !p.rim_stub;
  return n;
}

}  // namespace

TEST_CASE("free group words") {
  CHECK(is_reduced_word("abAB"));
  CHECK_FALSE(is_reduced_word("aA"));
  CHECK_FALSE(is_reduced_word("ac"));
  CHECK(f2_inverse("abA") == "aBA");
  CHECK(f2_multiply("ab", "Ba") == "aa");
  CHECK(f2_ball(0) == std::vector<std::string>{""});
  CHECK(f2_ball(1).size() == 5);
  CHECK(f2_ball(2).size() == 17);
  CHECK(f2_ball(3).size() == 53);
}

TEST_CASE("f2set files") {
  auto s = window(2, {"", "a", "bA", "B"});
  const std::string text = serialize(s);
  CHECK(text == "f2set 2 4\ne\nB\na\nbA\n");
  CHECK(parse_f2set(text) == s);
  CHECK_THROWS_AS(parse_f2set("f2set 1 1\naa\n"), Error);
  CHECK_THROWS_AS(parse_f2set("f2set 1 1\naA\n"), Error);
  CHECK_THROWS_AS(parse_f2set("f2set 1 2\na\n"), Error);
}

TEST_CASE("widget sizes") {
  auto empty = widget_encode(window(1, {}));
  CHECK(count_part(empty, "", 0) == 6);
  CHECK(count_part(empty, "", 'a') == 10);
  CHECK(count_part(empty, "", 'b') == 12);
  auto in_s = widget_encode(window(1, {""}));
  CHECK(count_part(in_s, "", 0) == 8);
  // The identity's widget is the only difference.
  CHECK(in_s.tree.size() == empty.tree.size() + 2);
  CHECK(code_unrooted(in_s.tree) != code_unrooted(empty.tree));
}

TEST_CASE("degrees") {
  for (unsigned n : {3u, 4u, 5u}) {
    auto c = widget_encode(window(2, {"", "ab", "B"}), n);
    for (Vertex v = 0; v < c.tree.size(); ++v) {
      if (c.provenance[v].rim_stub) continue;
      const auto d = c.tree.degree(v);
      CHECK((d == 1 || d == n));
    }
  }
}

TEST_CASE("decoding round trips") {
  auto expect = [](const GroupWordWindow& s) {
    auto d = widget_decode(widget_encode(s).tree);
    REQUIRE(std::holds_alternative<DecodedCoding>(d));
    CHECK(std::get<DecodedCoding>(d).set == s);
  };
  expect(window(2, {}));
  expect(window(2, {"a", "B"}));
  expect(window(1, {"", "A"}));
  expect(window(3, {"", "aba", "BB", "Ab"}));

  auto d = std::get<DecodedCoding>(widget_decode(widget_encode(window(1, {})).tree));
  CHECK(d.edges.size() == 4);
}

TEST_CASE("random trees are not codings") {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    auto r = widget_decode(oracle::random_tree(12, rng));
    CHECK(std::holds_alternative<NotACoding>(r));
  }
  // A coding with one leaf removed is rejected too.
  auto c = widget_encode(window(1, {"a"}));
  std::vector<Vertex> keep;
  bool dropped = false;
  for (Vertex v = 0; v < c.tree.size(); ++v) {
    if (!dropped && c.tree.degree(v) == 1 && c.provenance[v].edge == 'a') {
      dropped = true;
      continue;
    }
    keep.push_back(v);
  }
  CHECK(std::holds_alternative<NotACoding>(widget_decode(induced_subtree(c.tree, keep))));
}

TEST_CASE("translation equivariance of interiors") {
  auto s = window(2, {"", "a", "ab", "BA"});
  auto here = code_unrooted(widget_region(widget_encode(s), "", 1));
  for (const char* g : {"a", "A", "b", "B"}) {
    GroupWordWindow moved{2, {}};
    for (const auto& w : s.members) {
      auto gw = f2_multiply(g, w);
      if (gw.size() <= 2) moved.members.insert(gw);
    }
    CHECK(code_unrooted(widget_region(widget_encode(moved), g, 1)) == here);
  }
  // A different set changes the interior.
  auto other = code_unrooted(widget_region(widget_encode(window(2, {"a"})), "", 1));
  CHECK(other != here);
}
