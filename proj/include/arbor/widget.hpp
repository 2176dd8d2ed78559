#pragma once

#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "arbor/tree.hpp"

namespace arbor {

/// Elements of the free group on a, b written as reduced words over
/// "a", "b", "A" (= a^-1), "B" (= b^-1); the empty string is the identity.
bool is_reduced_word(std::string_view w);
std::string f2_inverse(std::string_view w);
/// Reduced product g * w.
std::string f2_multiply(std::string_view g, std::string_view w);
/// Every reduced word of length <= r, breadth-first with letters in the order a, A, b, B.
std::vector<std::string> f2_ball(unsigned r);

/// A subset of the radius-r ball of the free group.
struct GroupWordWindow {
  unsigned radius = 0;
  std::set<std::string> members;

  friend bool operator==(const GroupWordWindow&, const GroupWordWindow&) = default;
};

/// Throws InvalidArgument for unreduced or too long members.
void validate(const GroupWordWindow& s);
/// `f2set <r> <count>` then one word per line (`e` for the identity), ordered by
/// length and then bytewise.
std::string serialize(const GroupWordWindow& s);
GroupWordWindow parse_f2set(std::string_view text);

/// Which part of the coding a vertex belongs to.
struct WidgetProvenance {
  std::string word;      // the coded group element, or the source of the coded edge
  char edge = 0;         // 0 for a vertex widget, 'a' or 'b' for an edge widget
  bool rim_stub = false; // a port whose Cayley edge leaves the ball
};

struct WidgetCoding {
  UnrootedTree tree;
  std::vector<WidgetProvenance> provenance;  // per tree vertex
  unsigned radius = 0;
  unsigned degree = 3;
};

/// Codes the Cayley ball of radius r (r >= 1) and the set S as a tree. Each group
/// element becomes the path p0-p1-p2-p3 with a pendant leaf at p0 and p3; when it
/// lies in S the pendant at p0 grows two leaves. The edge w -> wa becomes a spine
/// of 4 vertices from p2(w) to p0(wa), the edge w -> wb a spine of 5 vertices
/// from p3(w) to p1(wb); every spine vertex carries a leaf and the leaf of spine
/// vertex 2 (a) or 3 (b) grows two leaves. Only edges inside the ball are coded.
/// For degree n > 3 every vertex of degree >= 2 additionally gets n-3 leaves.
/// Throws InvalidArgument if r < 1, n < 3, or S is invalid.
WidgetCoding widget_encode(const GroupWordWindow& s, unsigned n = 3);

struct CayleyEdge {
  std::string from;
  char label;  // 'a' or 'b'
  std::string to;
};

struct DecodedCoding {
  GroupWordWindow set;
  std::vector<CayleyEdge> edges;
};

struct NotACoding {
  std::string reason;
};

/// Recovers the Cayley ball and S from a coding produced by widget_encode,
/// locating element widgets by their adjacent leafless pairs and edge widgets by
/// their marked spine vertex. The result is checked by re-encoding.
std::variant<DecodedCoding, NotACoding> widget_decode(const UnrootedTree& t);

/// The part of a coding made of the widgets of elements within distance `radius`
/// of `center` and of the edges between them.
UnrootedTree widget_region(const WidgetCoding& coding, std::string_view center, unsigned radius);

}  // namespace arbor
