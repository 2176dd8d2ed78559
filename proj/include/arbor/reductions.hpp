#pragma once

#include <memory>
#include <string>
#include <vector>

#include "arbor/autom.hpp"
#include "arbor/regular.hpp"
#include "arbor/tits.hpp"

namespace arbor {

/// A source tree embedded in a truncated ambient tree together with an
/// automorphism of the ambient whose fixed-point set is exactly the image.
struct EmbeddedPair {
  std::shared_ptr<const RegularTruncation> truncation;
  std::vector<Vertex> embedding;  // source vertex -> ambient vertex
  TreeAutomorphism phi;           // on the rooted (phi_rooted) or unrooted ambient
};

/// The automorphism of the depth-d, width-w truncation of the rooted omega-tree
/// that swaps the first coordinate 2k <-> 2k+1 and keeps later coordinates.
/// Throws InvalidArgument unless d >= 1 and w >= 2 is even.
TreeAutomorphism sigma_aut(unsigned d, unsigned w);

/// Embeds T into the (d, w)-truncation of the rooted omega-tree: child i of an
/// embedded vertex sits in slot 2i+1, and the remaining slots root a copy of
/// the omega-tree on which phi acts by swapping sibling ranks in pairs (the last
/// three rotate when the count is odd) and preserving deeper coordinates.
/// Throws BoundExceeded unless d >= height(T)+2 and w >= 2*branching(T)+2, and
/// InvalidArgument for odd w.
EmbeddedPair phi_rooted(const RootedTree& t, unsigned d, unsigned w);

/// Embeds T into B(b, R) of R_n with b the center vertex of T or the smaller end
/// of its central edge. Finite n: every T-degree must be 1 or n and each leaf
/// carries the n-1 remaining branches. Omega: the ambient has width
/// maxdeg(T) + w and every T-vertex keeps at least w spare branches. Spare
/// branches are permuted as in phi_rooted. Throws InvalidArgument for a degree
/// violation or w < 2 (omega), BoundExceeded unless R >= ecc(b) + 1.
EmbeddedPair phi_unrooted(const UnrootedTree& t, Degree degree, unsigned radius, unsigned w = 0);

/// The whole ambient ball as a presentation (domain radius = ambient radius).
BallPresentation ball_presentation(const EmbeddedPair& pair);

/// Subdivides the edge inverted by phi, roots at the new midpoint and returns the
/// induced automorphism. Throws InvalidArgument if phi inverts no edge.
TreeAutomorphism invert_to_rooted(const TreeAutomorphism& phi);

/// Conjugacy of two edge-inverting automorphisms of the same tree, decided on
/// their invert_to_rooted images.
bool decide_type_a(const TreeAutomorphism& phi, const TreeAutomorphism& psi);

/// Conjugacy invariant of an automorphism of a rooted tree whose leaves all sit
/// at the same depth h >= 1. Height 1: the cycle type of the leaf permutation.
/// Height >= 2: "[" + the sorted pieces "(l,inner)" + "]", one per orbit of
/// depth-1 subtrees, where l is the orbit length and inner the invariant of
/// phi^l on one subtree of the orbit. Throws InvalidArgument for unrooted trees
/// or leaves at differing depths.
std::string height_invariant(const TreeAutomorphism& phi);

}  // namespace arbor
