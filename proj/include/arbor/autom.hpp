#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arbor/tree.hpp"

namespace arbor {

using TreeRef = std::shared_ptr<const AnyTree>;

TreeRef share(RootedTree t);
TreeRef share(UnrootedTree t);

/// Structural equality of the underlying trees (same kind, same edge set).
bool same_tree(const AnyTree& a, const AnyTree& b);

/// A permutation of the vertices of a tree preserving adjacency (and the root,
/// for rooted trees). Instances are only produced validated.
class TreeAutomorphism {
 public:
  const AnyTree& tree() const noexcept { return *tree_; }
  const TreeRef& tree_ref() const noexcept { return tree_; }
  std::size_t size() const noexcept { return perm_.size(); }
  std::span<const Vertex> perm() const noexcept { return perm_; }
  Vertex operator()(Vertex v) const { return perm_[v]; }
  bool is_identity() const;

  /// Same permutation on structurally equal trees.
  friend bool operator==(const TreeAutomorphism& a, const TreeAutomorphism& b);

 private:
  TreeAutomorphism(TreeRef tree, std::vector<Vertex> perm) : tree_(std::move(tree)), perm_(std::move(perm)) {}

  friend TreeAutomorphism validate_aut(TreeRef, std::vector<Vertex>);
  friend TreeAutomorphism identity_aut(TreeRef);
  friend TreeAutomorphism compose(const TreeAutomorphism&, const TreeAutomorphism&);
  friend TreeAutomorphism inverse(const TreeAutomorphism&);

  TreeRef tree_;
  std::vector<Vertex> perm_;
};

/// Checks bijectivity, edge preservation and (rooted) root fixing; throws
/// InvalidArgument naming the first violated constraint.
TreeAutomorphism validate_aut(TreeRef tree, std::vector<Vertex> perm);
TreeAutomorphism identity_aut(TreeRef tree);

/// (a o b)(i) = a(b(i)). Throws InvalidArgument for mismatched trees.
TreeAutomorphism compose(const TreeAutomorphism& a, const TreeAutomorphism& b);
TreeAutomorphism inverse(const TreeAutomorphism& a);
/// alpha o phi o alpha^-1
TreeAutomorphism conjugate(const TreeAutomorphism& alpha, const TreeAutomorphism& phi);
/// True iff alpha o phi o alpha^-1 == psi, checked pointwise.
bool conjugates(const TreeAutomorphism& alpha, const TreeAutomorphism& phi, const TreeAutomorphism& psi);

/// Orbits in iteration order v, a(v), a^2(v), ... starting at their minimum
/// vertex; orbits sorted by minimum vertex.
std::vector<std::vector<Vertex>> orbits(const TreeAutomorphism& a);
std::vector<std::vector<Vertex>> orbits(std::span<const Vertex> perm);

/// Cycle length -> number of cycles of that length.
using CycleType = std::map<std::size_t, std::size_t>;
CycleType cycle_type(const TreeAutomorphism& a);
CycleType cycle_type(std::span<const Vertex> perm);
/// "{1:2,3:1}"
std::string to_string(const CycleType& ct);

std::string serialize(const TreeAutomorphism& a);

inline constexpr std::size_t kDefaultOracleBound = 10;

/// Every automorphism, by backtracking over code-equal child matchings.
/// Throws BoundExceeded when the tree has more than `bound` vertices.
std::vector<TreeAutomorphism> enumerate_aut(const TreeRef& tree, std::size_t bound = kDefaultOracleBound);

/// Searches enumerate_aut for a conjugator alpha with alpha o phi o alpha^-1 = psi.
std::optional<TreeAutomorphism> conj_oracle(const TreeAutomorphism& phi, const TreeAutomorphism& psi,
                                            std::size_t bound = kDefaultOracleBound);

/// Conjugacy class index of each element of a finite group given as a list of
/// all its elements (brute force over all conjugations).
std::vector<std::size_t> conjugacy_classes(std::span<const TreeAutomorphism> group);

}  // namespace arbor
