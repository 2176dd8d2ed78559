#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "arbor/autom.hpp"

namespace arbor {

/// A subset of the integer window [lo, hi].
struct IntegerWindow {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::set<std::int64_t> members;

  friend bool operator==(const IntegerWindow&, const IntegerWindow&) = default;
};

/// Throws InvalidArgument if lo > hi or a member lies outside [lo, hi].
void validate(const IntegerWindow& a);
/// `zset <lo> <hi> <count>` then one integer per line, increasing.
std::string serialize(const IntegerWindow& a);
IntegerWindow parse_zset(std::string_view text);

/// Vertices per integer site of the window tree.
inline constexpr std::size_t kTzSiteSize = 9;

/// Offsets within a site, left to right: the spine vertex at i, the stem of its
/// Y-shape, the two Y-leaves, the spine vertex at i+1/3 with its 2-chain, and
/// the spine vertex at i+2/3 with its 1-chain.
enum TzPart : std::size_t {
  kTzSpine = 0,
  kTzStem = 1,
  kTzLeafLeft = 2,
  kTzLeafRight = 3,
  kTzThird = 4,
  kTzChain2Near = 5,
  kTzChain2Far = 6,
  kTzTwoThirds = 7,
  kTzChain1 = 8,
};

/// Vertex id of `part` at `site`.
Vertex tz_vertex(std::int64_t lo, std::int64_t site, TzPart part);

/// The sites lo..hi of the Z-indexed tree: a spine path through i, i+1/3, i+2/3
/// for every site, a Y-shape of height 2 above i, a 2-chain at i+1/3
/// and a single pendant at i+2/3. Throws InvalidArgument if lo > hi.
UnrootedTree tz_build(std::int64_t lo, std::int64_t hi);

/// Swaps the two Y-leaves at every site in A and fixes everything else.
TreeAutomorphism tz_phi(const IntegerWindow& a);

/// Reads A back from an automorphism of tz_build(lo, hi) (hi from the size).
/// Throws InvalidArgument if the tree is not a window tree or a spine vertex moves.
IntegerWindow tz_decode(const TreeAutomorphism& phi, std::int64_t lo);

/// Moves every vertex of the window [lo, hi] k sites to the right; vertices
/// leaving the window map to kNoVertex.
std::vector<Vertex> tz_shift(std::int64_t lo, std::int64_t hi, std::int64_t k);

}  // namespace arbor
