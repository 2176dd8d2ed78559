#include <doctest.h>

#include <set>

#include "arbor/synthetic.hpp"

using namespace arbor;

TEST_CASE("words") {
  Word w{0, 1};
  push_letter(w, 1);
  CHECK(w == Word{0});
  CHECK(multiply({0, 1}, {1, 0, 2}) == Word{2});
  CHECK(relabel({1, 2, 0})(Word{0, 1}) == Word{1, 2});
}

TEST_CASE("portraits are automorphisms fixing the basepoint") {
  const auto ball = truncate_regular(Degree::finite(3), 4);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto p = portrait(3, seed);
    CHECK(p(Word{}).empty());
    for (Vertex v = 1; v < ball.size(); ++v) {
      Word w = ball.word(v);
      Word img = p(w);
      CHECK(img.size() == w.size());
      Word parent(w.begin(), w.end() - 1);
      Word pimg = p(parent);
      CHECK(Word(img.begin(), img.end() - 1) == pimg);
    }
    // Injective on the ball.
    std::set<Word> images;
    for (Vertex v = 0; v < ball.size(); ++v) images.insert(p(ball.word(v)));
    CHECK(images.size() == ball.size());
  }
}

TEST_CASE("presenting a conjugate equals presenting the composite") {
  auto alpha = compose(left_multiply({1}), portrait(3, 9));
  auto phi = left_multiply({0, 2});
  auto p = present_conjugate(3, 3, alpha, phi, 1);
  // alpha^-1 by brute force on a bigger ball, then compare images as words.
  const auto big = truncate_regular(Degree::finite(3), 5);
  const auto dom = truncate_regular(Degree::finite(3), 3);
  for (Vertex v = 0; v < dom.size(); ++v) {
    Word target = dom.word(v);
    Word pre;
    for (Vertex u = 0; u < big.size(); ++u) {
      if (alpha(big.word(u)) == target) pre = big.word(u);
    }
    CHECK(p.ambient().word(p(v)) == alpha(phi(pre)));
  }
}
