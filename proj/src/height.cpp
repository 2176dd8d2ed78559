#include <algorithm>

#include "arbor/error.hpp"
#include "arbor/reductions.hpp"

namespace arbor {

namespace {

// Invariant of `map` (a permutation of the whole tree that preserves the
// subtree of v) restricted to the subtree of v.
std::string invariant_at(const RootedTree& t, Vertex v, const std::vector<Vertex>& map) {
  const auto kids = t.children(v);
  if (t.children(kids[0]).empty()) {
    std::vector<Vertex> local(kids.size());
    for (std::size_t i = 0; i < kids.size(); ++i) {
      local[i] = static_cast<Vertex>(std::lower_bound(kids.begin(), kids.end(), map[kids[i]]) - kids.begin());
    }
    return to_string(cycle_type(local));
  }
  std::vector<std::string> pieces;
  std::vector<char> seen(t.size(), 0);
  std::vector<Vertex> power;
  for (Vertex c : kids) {
    if (seen[c]) continue;
    std::size_t len = 0;
    for (Vertex x = c; !seen[x]; x = map[x]) seen[x] = 1, ++len;
    power = map;
    for (std::size_t k = 1; k < len; ++k) {
      for (auto& y : power) y = map[y];
    }
    pieces.push_back("(" + std::to_string(len) + "," + invariant_at(t, c, power) + ")");
  }
  std::sort(pieces.begin(), pieces.end());
  std::string out = "[";
  for (const auto& p : pieces) out += p;
  return out + "]";
}

}  // namespace

std::string height_invariant(const TreeAutomorphism& phi) {
  const auto* t = std::get_if<RootedTree>(&phi.tree());
  if (!t) throw InvalidArgument("height invariant needs a rooted tree");
  if (t->height() < 1) throw InvalidArgument("height invariant needs height >= 1");
  for (Vertex v = 0; v < t->size(); ++v) {
    if (t->children(v).empty() && t->depth(v) != t->height()) {
      throw InvalidArgument("leaves of the tree are not all at the same depth");
    }
  }
  const auto perm = phi.perm();
  return invariant_at(*t, 0, std::vector<Vertex>(perm.begin(), perm.end()));
}

}  // namespace arbor
