#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arbor/tree.hpp"

namespace arbor {

/// Byte-string canonical form. Two trees are isomorphic iff their codes are equal.
///
/// Rooted: code(v) = "(" label(v) "|" sorted-children-codes ")", children codes
/// sorted ascending as byte strings, unlabeled vertices carry label 0.
/// Unrooted: "V:" + rooted code at a central vertex, or "E:" + the two rooted
/// side codes of a central edge in ascending order.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& str() const noexcept { return bytes_; }

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  std::string bytes_;
};

using Labels = std::span<const std::uint64_t>;

/// Throws InvalidArgument if `labels` is given and does not cover every vertex.
CanonicalCode code_rooted(const RootedTree& t, std::optional<Labels> labels = std::nullopt);
CanonicalCode code_unrooted(const UnrootedTree& t);

/// Per-vertex subtree codes (index = vertex).
std::vector<std::string> subtree_codes(const RootedTree& t, std::optional<Labels> labels = std::nullopt);

/// A root-preserving isomorphism t1 -> t2 (image of vertex i at index i), or
/// nullopt when the trees are not isomorphic. Returned mappings are verified.
std::optional<std::vector<Vertex>> iso_witness(const RootedTree& t1, const RootedTree& t2);
/// Label-preserving variant.
std::optional<std::vector<Vertex>> iso_witness(const RootedTree& t1, Labels labels1,
                                               const RootedTree& t2, Labels labels2);
std::optional<std::vector<Vertex>> iso_witness(const UnrootedTree& t1, const UnrootedTree& t2);

bool is_isomorphism(const RootedTree& t1, const RootedTree& t2, std::span<const Vertex> mapping);
bool is_isomorphism(const UnrootedTree& t1, const UnrootedTree& t2, std::span<const Vertex> mapping);

}  // namespace arbor
