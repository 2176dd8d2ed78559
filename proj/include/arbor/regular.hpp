#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "arbor/tree.hpp"

namespace arbor {

/// Branching degree of a regular tree: a finite n >= 2, or omega.
class Degree {
 public:
  static Degree finite(unsigned n);
  static Degree omega() { return Degree(0); }

  bool is_omega() const noexcept { return n_ == 0; }
  /// The finite degree. Only meaningful when !is_omega().
  unsigned value() const noexcept { return n_; }
  std::string to_string() const;

  friend bool operator==(Degree, Degree) = default;

 private:
  explicit Degree(unsigned n) : n_(n) {}
  unsigned n_;
};

/// Parses "omega" or a decimal degree >= 2.
Degree parse_degree(std::string_view token, std::size_t line);

/// The ball B(basepoint, R) of R_n, or of the width-w shadow of R_omega.
///
/// Vertices are numbered breadth-first from the basepoint 0; children of a vertex
/// are consecutive and sorted by direction label. For finite n the basepoint has
/// labels 0..n-1 and a vertex entered along label c has labels {0..n-1} \ {c}.
/// For omega every vertex (basepoint included) has child labels 0..w-1.
class RegularTruncation {
 public:
  const UnrootedTree& base() const noexcept { return base_; }
  Vertex basepoint() const noexcept { return 0; }
  Degree degree() const noexcept { return degree_; }
  unsigned radius() const noexcept { return radius_; }
  /// Children per non-rim vertex away from the basepoint (n-1, or w for omega).
  unsigned width() const noexcept { return width_; }
  std::size_t size() const noexcept { return parent_.size(); }

  Vertex parent(Vertex v) const { return parent_[v]; }
  unsigned depth(Vertex v) const { return depth_[v]; }
  unsigned label(Vertex v) const { return label_[v]; }
  std::span<const Vertex> children(Vertex v) const;
  /// Child of v along direction `label`, or kNoVertex (rim, or label not available).
  Vertex child(Vertex v, unsigned label) const;
  /// Direction labels along the path from the basepoint.
  std::vector<unsigned> word(Vertex v) const;
  /// Vertex reached by following `word`, or kNoVertex if it leaves the ball or is not reduced.
  Vertex find(std::span<const unsigned> word) const;
  /// Number of vertices at distance <= r from the basepoint (a prefix of the numbering).
  std::size_t ball_size(unsigned r) const;
  std::size_t distance(Vertex a, Vertex b) const;
  /// Rooted at the basepoint; vertex ids are unchanged.
  RootedTree as_rooted() const;

  friend bool operator==(const RegularTruncation& a, const RegularTruncation& b) {
    return a.degree_ == b.degree_ && a.radius_ == b.radius_ && a.width_ == b.width_;
  }

 private:
  friend RegularTruncation truncate_regular(Degree, unsigned, unsigned);
  RegularTruncation(UnrootedTree base) : base_(std::move(base)) {}

  UnrootedTree base_;
  Degree degree_ = Degree::omega();
  unsigned radius_ = 0;
  unsigned width_ = 0;
  std::vector<Vertex> parent_;
  std::vector<unsigned> depth_;
  std::vector<unsigned> label_;
  std::vector<std::size_t> first_child_;  // size()+1 offsets; children are consecutive ids
  std::vector<Vertex> ids_;               // 0..size()-1, backs children()
  std::vector<std::size_t> level_end_;    // level_end_[r] = ball_size(r)
};

/// Builds B(basepoint, radius) in R_n (finite n >= 2) or in the width-w shadow of
/// R_omega (w >= 1). `width` is ignored for finite degrees.
RegularTruncation truncate_regular(Degree degree, unsigned radius, unsigned width = 0);

}  // namespace arbor
