#include <doctest.h>

#include <algorithm>

#include "arbor/error.hpp"
#include "arbor/synthetic.hpp"
#include "arbor/tits.hpp"

using namespace arbor;

namespace {

WordMap identity_map() {
  return [](const Word& w) { return w; };
}

Vertex vertex_of(const BallPresentation& p, Word w) { return p.ambient().find(w); }

}  // namespace

TEST_CASE("identity presentations are elliptic with everything fixed") {
  auto p = present(3, 2, identity_map());
  for (Vertex v = 0; v < p.domain_size(); ++v) CHECK(displacement(p, v) == 0);
  auto v = classify(p);
  REQUIRE(std::holds_alternative<Elliptic>(v));
  CHECK(std::get<Elliptic>(v).fixed.size() == p.domain_size());
  CHECK(fixed_subtree(p).size() == 10);
  CHECK(format_verdict(v).rfind("Elliptic 10\n", 0) == 0);
}

TEST_CASE("central edge inversion") {
  auto p = present(3, 3, left_multiply({0}));
  const Vertex e = 0, a = vertex_of(p, {0});
  CHECK(displacement(p, e) == 1);
  CHECK(displacement(p, a) == 1);
  auto v = classify(p);
  REQUIRE(std::holds_alternative<Inversion>(v));
  CHECK(std::get<Inversion>(v).edge == Edge{e, a});
  CHECK(format_verdict(v) == "Inversion 0 1\n");
  for (Vertex x = 0; x < p.domain_size(); ++x) CHECK(p(x) != x);
  CHECK_THROWS_AS(fixed_subtree(p), InvalidArgument);
}

TEST_CASE("translations") {
  // Step along the spine e, 0, 01, 010, ...
  auto one = present(3, 4, compose(left_multiply({0}), relabel({1, 0, 2})));
  CHECK(displacement(one, 0) == 1);
  CHECK(displacement(one, vertex_of(one, {0})) == 1);
  auto v1 = classify(one);
  REQUIRE(std::holds_alternative<Translation>(v1));
  CHECK(std::get<Translation>(v1).amplitude == 1);

  auto two = present(3, 4, left_multiply({0, 1}));
  auto v2 = classify(two);
  REQUIRE(std::holds_alternative<Translation>(v2));
  const auto& t = std::get<Translation>(v2);
  CHECK(t.amplitude == 2);
  REQUIRE(t.axis.size() >= 3);
  for (std::size_t i = 0; i + 2 < t.axis.size(); ++i) {
    if (t.axis[i] < two.domain_size()) CHECK(two(t.axis[i]) == t.axis[i + 2]);
  }
  CHECK(format_verdict(v2).rfind("Translation 2\naxis ", 0) == 0);
}

TEST_CASE("a leaf swap fixing an edge") {
  auto p = present(3, 2, relabel({0, 2, 1}));
  auto v = classify(p);
  REQUIRE(std::holds_alternative<Elliptic>(v));
  CHECK(std::get<Elliptic>(v).fixed == std::vector<Vertex>{0, vertex_of(p, {0})});
}

TEST_CASE("fixed point beyond the ball") {
  auto p = present_conjugate(3, 2, left_multiply({0, 1, 0, 1}), relabel({1, 2, 0}), 4);
  CHECK(verdict_name(classify(p)) == "Undetermined");
}

TEST_CASE("ballaut files") {
  auto p = present(3, 2, compose(left_multiply({0}), relabel({1, 0, 2})));
  const std::string text = serialize(p);
  CHECK(text.rfind("ballaut 3 2 ", 0) == 0);
  auto q = parse_ball_presentation(text);
  CHECK(q.map() == p.map());
  CHECK(serialize(q) == text);

  const std::string ident = "ballaut 3 1 1\nunrooted 4\n0 1\n0 2\n0 3\nmap 4\n0 0\n1 1\n2 2\n3 3\n";
  CHECK(format_verdict(classify(parse_ball_presentation(ident))) == "Elliptic 4\nfixed 0 1 2 3\n");

  auto fails = [](const std::string& s) {
    try {
      parse_ball_presentation(s);
    } catch (const Error&) {
      return true;
    }
    return false;
  };
  CHECK(fails("ballaut 3 2 1\nunrooted 4\n0 1\n0 2\n0 3\nmap 4\n0 0\n1 1\n2 2\n3 3\n"));  // r > R
  CHECK(fails("ballaut 3 1 1\nunrooted 4\n0 1\n0 2\n0 3\nmap 4\n0 0\n1 1\n2 2\n3 2\n"));  // not injective
  CHECK(fails("ballaut 3 1 1\nunrooted 4\n0 1\n0 2\n0 3\nmap 3\n0 0\n1 1\n2 2\n"));       // short map
  CHECK(fails("ballaut 3 1 1\nunrooted 4\n0 1\n0 2\n0 3\nmap 4\n0 1\n1 0\n2 2\n3 3\n"));  // 0 onto the rim
  CHECK(fails("ballaut 3 1 1\nunrooted 3\n0 1\n0 2\nmap 3\n0 0\n1 1\n2 2\n"));            // wrong ambient
}

TEST_CASE("omega presentations") {
  auto ambient = std::make_shared<const RegularTruncation>(truncate_regular(Degree::omega(), 2, 3));
  std::vector<Vertex> map(ambient->ball_size(1));
  // Rotate the three children of the basepoint.
  map[0] = 0;
  for (unsigned i = 0; i < 3; ++i) map[ambient->child(0, i)] = ambient->child(0, (i + 1) % 3);
  BallPresentation p(ambient, 1, map);
  auto v = classify(p);
  REQUIRE(std::holds_alternative<Elliptic>(v));
  CHECK(std::get<Elliptic>(v).fixed == std::vector<Vertex>{0});
  auto q = parse_ball_presentation(serialize(p));
  CHECK(q.ambient().degree().is_omega());
  CHECK(q.map() == map);
}
