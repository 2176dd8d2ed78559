#include "arbor/synthetic.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "arbor/error.hpp"
#include "arbor/random.hpp"

namespace arbor {

void push_letter(Word& w, unsigned c) {
  if (!w.empty() && w.back() == c) {
    w.pop_back();
  } else {
    w.push_back(c);
  }
}

Word multiply(const Word& g, const Word& w) {
  Word out = g;
  for (unsigned c : w) push_letter(out, c);
  return out;
}

WordMap left_multiply(Word g) {
  return [g = std::move(g)](const Word& w) { return multiply(g, w); };
}

WordMap relabel(std::vector<unsigned> pi) {
  return [pi = std::move(pi)](const Word& w) {
    Word out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = pi.at(w[i]);
    return out;
  };
}

WordMap portrait(unsigned n, std::uint64_t seed) {
  return [n, seed](const Word& w) {
    Word out;
    std::uint64_t h = seed;
    std::vector<unsigned> from, to;
    for (std::size_t i = 0; i < w.size(); ++i) {
      // Local permutation at the prefix w[0..i): must send the parent
      // direction (last letter of the prefix) to the parent direction of the image.
      std::uint64_t s = h;
      const std::uint64_t local = splitmix64(s);
      from.resize(n);
      to.resize(n);
      std::iota(from.begin(), from.end(), 0u);
      std::iota(to.begin(), to.end(), 0u);
      if (i > 0) {
        from.erase(from.begin() + w[i - 1]);
        to.erase(to.begin() + out.back());
      }
      if (local & 1) {
        Rng rng(local);
        rng.shuffle(to);
      }
      const auto k = static_cast<std::size_t>(std::find(from.begin(), from.end(), w[i]) - from.begin());
      out.push_back(to[k]);
      s = h ^ (std::uint64_t{w[i]} + 1) * 0x100000001b3ULL;
      h = splitmix64(s);
    }
    return out;
  };
}

WordMap compose(WordMap a, WordMap b) {
  return [a = std::move(a), b = std::move(b)](const Word& w) { return a(b(w)); };
}

namespace {

BallPresentation present_images(unsigned n, unsigned r, const std::vector<Word>& images,
                                const RegularTruncation& domain) {
  unsigned R = r;
  for (std::size_t v = 0; v < images.size(); ++v) {
    const auto len = static_cast<unsigned>(images[v].size());
    R = std::max(R, domain.depth(static_cast<Vertex>(v)) < r ? len + 1 : len);
  }
  auto ambient = std::make_shared<const RegularTruncation>(truncate_regular(Degree::finite(n), R));
  std::vector<Vertex> map(images.size());
  for (std::size_t v = 0; v < images.size(); ++v) {
    map[v] = ambient->find(images[v]);
    if (map[v] == kNoVertex) throw InvalidArgument("word map produced an unreduced word");
  }
  return BallPresentation(std::move(ambient), r, std::move(map));
}

}  // namespace

BallPresentation present(unsigned n, unsigned r, const WordMap& phi) {
  const RegularTruncation domain = truncate_regular(Degree::finite(n), r);
  std::vector<Word> images(domain.size());
  for (Vertex v = 0; v < domain.size(); ++v) images[v] = phi(domain.word(v));
  return present_images(n, r, images, domain);
}

BallPresentation present_conjugate(unsigned n, unsigned r, const WordMap& alpha, const WordMap& phi,
                                   unsigned alpha_reach) {
  const RegularTruncation search = truncate_regular(Degree::finite(n), r + alpha_reach);
  const std::size_t domain_size = search.ball_size(r);
  std::vector<Word> preimage(domain_size);
  std::vector<char> found(domain_size, 0);
  for (Vertex u = 0; u < search.size(); ++u) {
    Word w = search.word(u);
    Word img = alpha(w);
    if (img.size() > r) continue;
    const Vertex v = search.find(img);
    if (v == kNoVertex) throw InvalidArgument("word map produced an unreduced word");
    preimage[v] = std::move(w);
    found[v] = 1;
  }
  if (std::find(found.begin(), found.end(), 0) != found.end()) {
    throw InvalidArgument("conjugator moves the basepoint further than its stated reach");
  }
  std::vector<Word> images(domain_size);
  for (std::size_t v = 0; v < domain_size; ++v) images[v] = alpha(phi(preimage[v]));
  return present_images(n, r, images, search);
}

}  // namespace arbor
