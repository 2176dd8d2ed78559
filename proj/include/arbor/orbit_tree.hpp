#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arbor/autom.hpp"

namespace arbor {

/// Orbits of a rooted-tree automorphism arranged as a rooted tree. Vertex k is
/// the k-th orbit in order of minimum element, so parents precede children and
/// the root orbit {0} is vertex 0.
struct LabeledOrbitTree {
  RootedTree tree;
  std::vector<std::uint64_t> labels;        // orbit cardinalities
  std::vector<std::vector<Vertex>> orbits;  // members in iteration order x, phi(x), ...
  std::vector<Vertex> orbit_of;             // tree vertex -> orbit-tree vertex
};

/// Throws InvalidArgument for automorphisms of unrooted trees.
LabeledOrbitTree orbit_tree(const TreeAutomorphism& phi);

/// Rooted-format block followed by `labels l0 l1 ...`.
std::string serialize(const LabeledOrbitTree& ot);

/// Exact conjugacy decision. Rooted trees compare labeled orbit-tree codes;
/// unrooted trees are first rooted at their center (a central edge swapped by
/// exactly one of the two maps gives NO, otherwise it is subdivided).
/// Throws InvalidArgument when the automorphisms act on different trees.
bool conj_decide(const TreeAutomorphism& phi, const TreeAutomorphism& psi);

/// Builds a conjugator alpha (alpha o phi o alpha^-1 = psi) top-down from a
/// label-preserving isomorphism `orbit_iso` between the orbit trees of phi and
/// psi. Both must act on the same rooted tree. Throws InvalidArgument if
/// orbit_iso is not a label-preserving rooted isomorphism. The result is verified.
TreeAutomorphism lift_witness(const TreeAutomorphism& phi, const TreeAutomorphism& psi,
                              std::span<const Vertex> orbit_iso);

/// conj_decide plus lift_witness, for rooted or unrooted trees.
std::optional<TreeAutomorphism> conj_witness(const TreeAutomorphism& phi, const TreeAutomorphism& psi);

}  // namespace arbor
