#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <variant>
#include <vector>

namespace arbor {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite rooted tree on vertices 0..n-1 with root 0 and parent[i] < i.
class RootedTree {
 public:
  /// Validates and builds. `parent[0]` must be kNoVertex.
  static RootedTree from_parents(std::vector<Vertex> parent);
  /// The one-vertex tree.
  static RootedTree single();
  /// Also the one-vertex tree.
  RootedTree() = default;

  std::size_t size() const noexcept { return parent_.size(); }
  Vertex parent(Vertex v) const { return parent_[v]; }
  std::span<const Vertex> parents() const noexcept { return parent_; }
  /// Children in increasing order.
  std::span<const Vertex> children(Vertex v) const { return children_[v]; }
  std::size_t depth(Vertex v) const { return depth_[v]; }
  std::size_t height() const noexcept { return height_; }
  std::size_t max_branching() const noexcept;

  bool has_edge(Vertex a, Vertex b) const;
  std::vector<Edge> edges() const;

  friend bool operator==(const RootedTree& a, const RootedTree& b) {
    return a.parent_ == b.parent_;
  }

 private:
  std::vector<Vertex> parent_{kNoVertex};
  std::vector<std::vector<Vertex>> children_ = std::vector<std::vector<Vertex>>(1);
  std::vector<std::size_t> depth_{0};
  std::size_t height_ = 0;
};

/// Finite unrooted tree on vertices 0..n-1.
class UnrootedTree {
 public:
  /// Validates and builds: n >= 1, exactly n-1 distinct edges, no loops, connected.
  static UnrootedTree from_edges(std::size_t n, std::vector<Edge> edges);
  static UnrootedTree single();
  /// Also the one-vertex tree.
  UnrootedTree() = default;

  std::size_t size() const noexcept { return adjacency_.size(); }
  /// Neighbours in increasing order.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  /// Edges sorted lexicographically.
  std::span<const Edge> edges() const noexcept { return edges_; }
  bool has_edge(Vertex a, Vertex b) const;
  std::size_t max_degree() const noexcept;

  friend bool operator==(const UnrootedTree& a, const UnrootedTree& b) {
    return a.edges_ == b.edges_ && a.size() == b.size();
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_ = std::vector<std::vector<Vertex>>(1);
};

using AnyTree = std::variant<RootedTree, UnrootedTree>;

std::size_t tree_size(const AnyTree& t);
bool is_rooted(const AnyTree& t);
/// Forgets the root.
UnrootedTree to_unrooted(const RootedTree& t);

struct CenterVertex {
  Vertex v;
  friend bool operator==(const CenterVertex&, const CenterVertex&) = default;
};
struct CenterEdge {
  Vertex u;  // u < v
  Vertex v;
  friend bool operator==(const CenterEdge&, const CenterEdge&) = default;
};
using Center = std::variant<CenterVertex, CenterEdge>;

/// Center by iterated leaf removal.
Center center(const UnrootedTree& t);

/// Largest distance from `v` to any vertex.
std::size_t eccentricity(const UnrootedTree& t, Vertex v);
std::vector<std::size_t> distances_from(const UnrootedTree& t, Vertex v);

struct Subdivision {
  UnrootedTree tree;
  Vertex midpoint;  // always the old vertex count
};

/// Replaces edge {u,v} by u - n - v. Throws InvalidArgument if {u,v} is not an edge.
Subdivision subdivide_edge(const UnrootedTree& t, Edge e);

/// A rooted copy of (part of) an unrooted tree, renumbered breadth-first.
struct RootedView {
  RootedTree tree;
  std::vector<Vertex> to_source;    // view vertex -> source vertex
  std::vector<Vertex> from_source;  // source vertex -> view vertex, or kNoVertex
};

/// Roots `t` at `root`. If `excluded` names a neighbour of `root`, that
/// neighbour's branch is left out. Children are visited in increasing source id.
RootedView root_at(const UnrootedTree& t, Vertex root, Vertex excluded = kNoVertex);

/// Subtree induced on `vertices` (any order), renumbered by increasing source id.
/// Throws InvalidArgument if the set is empty or not connected.
UnrootedTree induced_subtree(const UnrootedTree& t, std::span<const Vertex> vertices);

}  // namespace arbor
