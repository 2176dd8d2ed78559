#include "arbor/tz.hpp"

#include "arbor/error.hpp"
#include "arbor/text_format.hpp"

namespace arbor {

void validate(const IntegerWindow& a) {
  if (a.lo > a.hi) throw InvalidArgument("window has lo > hi");
  for (auto m : a.members) {
    if (m < a.lo || m > a.hi) throw InvalidArgument("member " + std::to_string(m) + " outside the window");
  }
}

std::string serialize(const IntegerWindow& a) {
  std::string out = "zset " + std::to_string(a.lo) + " " + std::to_string(a.hi) + " " +
                    std::to_string(a.members.size()) + "\n";
  for (auto m : a.members) out += std::to_string(m) + "\n";
  return out;
}

IntegerWindow parse_zset(std::string_view text) {
  LineReader in(text);
  auto head = in.next("zset header");
  if (head.empty() || head[0] != "zset") throw ParseError(in.line(), "expected `zset <lo> <hi> <count>`");
  expect_tokens(head, 4, in.line(), "zset header");
  IntegerWindow a;
  a.lo = parse_int(head[1], in.line());
  a.hi = parse_int(head[2], in.line());
  if (a.lo > a.hi) throw ParseError(in.line(), "lo exceeds hi");
  if (a.hi - a.lo > 1'000'000) throw ParseError(in.line(), "window too wide");
  const auto count = parse_uint(head[3], in.line());
  for (std::uint64_t i = 0; i < count; ++i) {
    auto tok = in.next("member");
    expect_tokens(tok, 1, in.line(), "member");
    const auto m = parse_int(tok[0], in.line());
    if (m < a.lo || m > a.hi) throw ParseError(in.line(), "member outside the window");
    if (!a.members.insert(m).second) throw ParseError(in.line(), "duplicate member");
  }
  in.expect_end();
  return a;
}

Vertex tz_vertex(std::int64_t lo, std::int64_t site, TzPart part) {
  return static_cast<Vertex>(static_cast<std::size_t>(site - lo) * kTzSiteSize + part);
}

UnrootedTree tz_build(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw InvalidArgument("window has lo > hi");
  std::vector<Edge> edges;
  for (std::int64_t i = lo; i <= hi; ++i) {
    auto v = [&](TzPart p) { return tz_vertex(lo, i, p); };
    if (i > lo) edges.emplace_back(tz_vertex(lo, i - 1, kTzTwoThirds), v(kTzSpine));
    edges.emplace_back(v(kTzSpine), v(kTzStem));
    edges.emplace_back(v(kTzStem), v(kTzLeafLeft));
    edges.emplace_back(v(kTzStem), v(kTzLeafRight));
    edges.emplace_back(v(kTzSpine), v(kTzThird));
    edges.emplace_back(v(kTzThird), v(kTzChain2Near));
    edges.emplace_back(v(kTzChain2Near), v(kTzChain2Far));
    edges.emplace_back(v(kTzThird), v(kTzTwoThirds));
    edges.emplace_back(v(kTzTwoThirds), v(kTzChain1));
  }
  return UnrootedTree::from_edges(static_cast<std::size_t>(hi - lo + 1) * kTzSiteSize, std::move(edges));
}

TreeAutomorphism tz_phi(const IntegerWindow& a) {
  validate(a);
  TreeRef tree = share(tz_build(a.lo, a.hi));
  std::vector<Vertex> perm(tree_size(*tree));
  for (Vertex v = 0; v < perm.size(); ++v) perm[v] = v;
  for (auto m : a.members) {
    const Vertex l = tz_vertex(a.lo, m, kTzLeafLeft);
    const Vertex r = tz_vertex(a.lo, m, kTzLeafRight);
    perm[l] = r;
    perm[r] = l;
  }
  return validate_aut(std::move(tree), std::move(perm));
}

IntegerWindow tz_decode(const TreeAutomorphism& phi, std::int64_t lo) {
  const auto* t = std::get_if<UnrootedTree>(&phi.tree());
  if (!t || t->size() % kTzSiteSize != 0) throw InvalidArgument("not a window of the Z-indexed tree");
  IntegerWindow a;
  a.lo = lo;
  a.hi = lo + static_cast<std::int64_t>(t->size() / kTzSiteSize) - 1;
  if (!(*t == tz_build(a.lo, a.hi))) throw InvalidArgument("not a window of the Z-indexed tree");
  for (std::int64_t i = a.lo; i <= a.hi; ++i) {
    for (TzPart p : {kTzSpine, kTzThird, kTzTwoThirds}) {
      if (phi(tz_vertex(lo, i, p)) != tz_vertex(lo, i, p)) {
        throw InvalidArgument("automorphism moves a spine vertex (not a fixed-spine automorphism)");
      }
    }
    // With the spine fixed only the two Y-leaves can move.
    if (phi(tz_vertex(lo, i, kTzLeafLeft)) == tz_vertex(lo, i, kTzLeafRight)) a.members.insert(i);
  }
  return a;
}

std::vector<Vertex> tz_shift(std::int64_t lo, std::int64_t hi, std::int64_t k) {
  const std::size_t n = static_cast<std::size_t>(hi - lo + 1) * kTzSiteSize;
  std::vector<Vertex> out(n, kNoVertex);
  for (std::int64_t i = lo; i <= hi; ++i) {
    if (i + k < lo || i + k > hi) continue;
    for (std::size_t p = 0; p < kTzSiteSize; ++p) {
      out[tz_vertex(lo, i, static_cast<TzPart>(p))] = tz_vertex(lo, i + k, static_cast<TzPart>(p));
    }
  }
  return out;
}

}  // namespace arbor
