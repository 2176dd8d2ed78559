#pragma once

#include <cstdint>
#include <vector>

#include "arbor/random.hpp"
#include "arbor/tree.hpp"

// Brute-force ground truth and tree generators. Nothing here uses canonical
// codes, centers or orbit trees, so it can check the modules that do.

namespace arbor::oracle {

/// Isomorphism by backtracking over vertex assignments (root to root for rooted trees).
bool isomorphic(const RootedTree& a, const RootedTree& b);
bool isomorphic(const UnrootedTree& a, const UnrootedTree& b);

/// All automorphisms as image arrays, by filtering every permutation of the
/// vertices. Only sensible for n <= 8.
std::vector<std::vector<Vertex>> automorphisms(const RootedTree& t);
std::vector<std::vector<Vertex>> automorphisms(const UnrootedTree& t);

/// Every rooted tree on n vertices up to isomorphism, from the canonical level
/// sequences of Beyer and Hedetniemi, numbered in preorder.
std::vector<RootedTree> rooted_trees(std::size_t n);
/// Every parent array on n vertices with parent[i] < i ((n-1)! labelled trees).
std::vector<RootedTree> recursive_trees(std::size_t n);
/// The tree with the given Pruefer sequence on seq.size() + 2 vertices.
UnrootedTree pruefer_tree(const std::vector<Vertex>& seq);
/// Every labelled tree on n vertices (n^(n-2) of them), via Pruefer sequences.
std::vector<UnrootedTree> labelled_trees(std::size_t n);
/// Every unrooted tree on n vertices up to isomorphism (deduplicated with isomorphic()).
std::vector<UnrootedTree> unrooted_trees(std::size_t n);

/// Uniform random recursive tree (parent of i uniform in 0..i-1).
RootedTree random_recursive_tree(std::size_t n, Rng& rng);
/// Uniform random labelled tree via a random Pruefer sequence.
UnrootedTree random_tree(std::size_t n, Rng& rng);
/// A random renumbering of t that keeps the root at 0 and parents before children.
RootedTree relabel(const RootedTree& t, Rng& rng);
/// Random renumbering; `perm` receives old -> new when non-null.
UnrootedTree relabel(const UnrootedTree& t, Rng& rng, std::vector<Vertex>* perm = nullptr);

/// Applies a vertex renumbering (old -> new) to the edges of a tree.
UnrootedTree renumber(const UnrootedTree& t, const std::vector<Vertex>& perm);

}  // namespace arbor::oracle
