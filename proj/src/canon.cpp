#include "arbor/canon.hpp"

#include <algorithm>
#include <numeric>

#include "arbor/error.hpp"

namespace arbor {

namespace {

void check_labels(const RootedTree& t, const std::optional<Labels>& labels) {
  if (labels && labels->size() != t.size()) {
    throw InvalidArgument("labels cover " + std::to_string(labels->size()) + " of " +
                          std::to_string(t.size()) + " vertices");
  }
}

// Codes for every vertex; when `keep` is false child codes are released once
// consumed and only the root's survives.
std::vector<std::string> compute_codes(const RootedTree& t, const std::optional<Labels>& labels, bool keep) {
  check_labels(t, labels);
  std::vector<std::string> code(t.size());
  std::vector<const std::string*> parts;
  for (std::size_t i = t.size(); i-- > 0;) {
    const auto v = static_cast<Vertex>(i);
    parts.clear();
    std::size_t total = 0;
    for (Vertex c : t.children(v)) {
      parts.push_back(&code[c]);
      total += code[c].size();
    }
    std::sort(parts.begin(), parts.end(), [](const std::string* a, const std::string* b) { return *a < *b; });
    std::string s = "(";
    s.reserve(total + 24);
    s += std::to_string(labels ? (*labels)[v] : 0);
    s += '|';
    for (const std::string* p : parts) s += *p;
    s += ')';
    if (!keep) {
      for (Vertex c : t.children(v)) std::string().swap(code[c]);
    }
    code[v] = std::move(s);
  }
  return code;
}

std::vector<Vertex> sorted_children(const RootedTree& t, Vertex v, const std::vector<std::string>& code) {
  auto ch = t.children(v);
  std::vector<Vertex> out(ch.begin(), ch.end());
  std::stable_sort(out.begin(), out.end(), [&](Vertex a, Vertex b) { return code[a] < code[b]; });
  return out;
}

std::optional<std::vector<Vertex>> match_rooted(const RootedTree& t1, const std::optional<Labels>& l1,
                                                const RootedTree& t2, const std::optional<Labels>& l2) {
  if (t1.size() != t2.size()) return std::nullopt;
  auto c1 = compute_codes(t1, l1, true);
  auto c2 = compute_codes(t2, l2, true);
  if (c1[0] != c2[0]) return std::nullopt;
  std::vector<Vertex> map(t1.size(), kNoVertex);
  std::vector<std::pair<Vertex, Vertex>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [u, v] = stack.back();
    stack.pop_back();
    map[u] = v;
    auto a = sorted_children(t1, u, c1);
    auto b = sorted_children(t2, v, c2);
    for (std::size_t i = 0; i < a.size(); ++i) stack.emplace_back(a[i], b[i]);
  }
  bool ok = is_isomorphism(t1, t2, map);
  if (ok && l1) {
    for (std::size_t i = 0; i < map.size(); ++i) ok = ok && (*l1)[i] == (*l2)[map[i]];
  }
  if (!ok) throw InternalError("rooted isomorphism witness failed verification");
  return map;
}

// Rooted views anchored on the center: one view for a central vertex, two for
// a central edge (each side with the other side removed).
std::vector<RootedView> center_sides(const UnrootedTree& t) {
  Center c = center(t);
  if (auto* cv = std::get_if<CenterVertex>(&c)) return {root_at(t, cv->v)};
  const auto& ce = std::get<CenterEdge>(c);
  return {root_at(t, ce.u, ce.v), root_at(t, ce.v, ce.u)};
}

}  // namespace

CanonicalCode code_rooted(const RootedTree& t, std::optional<Labels> labels) {
  return CanonicalCode(std::move(compute_codes(t, labels, false)[0]));
}

std::vector<std::string> subtree_codes(const RootedTree& t, std::optional<Labels> labels) {
  return compute_codes(t, labels, true);
}

CanonicalCode code_unrooted(const UnrootedTree& t) {
  auto sides = center_sides(t);
  if (sides.size() == 1) return CanonicalCode("V:" + code_rooted(sides[0].tree).str());
  std::string a = code_rooted(sides[0].tree).str();
  std::string b = code_rooted(sides[1].tree).str();
  if (b < a) std::swap(a, b);
  return CanonicalCode("E:" + a + b);
}

std::optional<std::vector<Vertex>> iso_witness(const RootedTree& t1, const RootedTree& t2) {
  return match_rooted(t1, std::nullopt, t2, std::nullopt);
}

std::optional<std::vector<Vertex>> iso_witness(const RootedTree& t1, Labels labels1, const RootedTree& t2,
                                               Labels labels2) {
  return match_rooted(t1, labels1, t2, labels2);
}

std::optional<std::vector<Vertex>> iso_witness(const UnrootedTree& t1, const UnrootedTree& t2) {
  if (t1.size() != t2.size()) return std::nullopt;
  auto s1 = center_sides(t1);
  auto s2 = center_sides(t2);
  if (s1.size() != s2.size()) return std::nullopt;
  if (s1.size() == 2) {
    // Pair the sides of t1 with equally coded sides of t2.
    if (code_rooted(s1[0].tree) != code_rooted(s2[0].tree)) std::swap(s2[0], s2[1]);
  }
  std::vector<Vertex> map(t1.size(), kNoVertex);
  for (std::size_t k = 0; k < s1.size(); ++k) {
    auto m = iso_witness(s1[k].tree, s2[k].tree);
    if (!m) return std::nullopt;
    for (std::size_t i = 0; i < m->size(); ++i) map[s1[k].to_source[i]] = s2[k].to_source[(*m)[i]];
  }
  if (!is_isomorphism(t1, t2, map)) throw InternalError("unrooted isomorphism witness failed verification");
  return map;
}

namespace {

bool is_bijection(std::span<const Vertex> mapping, std::size_t n) {
  if (mapping.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (Vertex v : mapping) {
    if (v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

}  // namespace

bool is_isomorphism(const RootedTree& t1, const RootedTree& t2, std::span<const Vertex> mapping) {
  if (t1.size() != t2.size() || !is_bijection(mapping, t1.size()) || mapping[0] != 0) return false;
  for (std::size_t i = 1; i < t1.size(); ++i) {
    if (t2.parent(mapping[i]) != mapping[t1.parent(static_cast<Vertex>(i))]) return false;
  }
  return true;
}

bool is_isomorphism(const UnrootedTree& t1, const UnrootedTree& t2, std::span<const Vertex> mapping) {
  if (t1.size() != t2.size() || !is_bijection(mapping, t1.size())) return false;
  for (const Edge& e : t1.edges()) {
    if (!t2.has_edge(mapping[e.u], mapping[e.v])) return false;
  }
  return true;
}

}  // namespace arbor
