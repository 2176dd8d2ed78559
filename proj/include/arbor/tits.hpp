#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "arbor/regular.hpp"

namespace arbor {

/// A regular-tree automorphism known only on the ball B(0, r) of an ambient
/// truncation of radius R >= r. map[v] is defined for v < ambient->ball_size(r).
class BallPresentation {
 public:
  /// Validates: injective, adjacency preserving on the domain ball, and every
  /// image of B(r-1) lies in B(R-1) so its neighbours are all present.
  BallPresentation(std::shared_ptr<const RegularTruncation> ambient, unsigned domain_radius,
                   std::vector<Vertex> map);

  const RegularTruncation& ambient() const noexcept { return *ambient_; }
  const std::shared_ptr<const RegularTruncation>& ambient_ref() const noexcept { return ambient_; }
  unsigned domain_radius() const noexcept { return r_; }
  std::size_t domain_size() const noexcept { return map_.size(); }
  const std::vector<Vertex>& map() const noexcept { return map_; }
  Vertex operator()(Vertex v) const { return map_.at(v); }

 private:
  std::shared_ptr<const RegularTruncation> ambient_;
  unsigned r_;
  std::vector<Vertex> map_;
};

/// `ballaut <degree> <r> <R>`, the ambient in unrooted format, `map <m>`, then
/// m lines `<v> <image>`. The ambient block must be the breadth-first truncation
/// itself (for omega the width is read off the basepoint degree).
std::string serialize(const BallPresentation& p);
BallPresentation parse_ball_presentation(std::string_view text);

struct Inversion {
  Edge edge;
};
struct Translation {
  std::size_t amplitude;
  std::vector<Vertex> axis;  // consecutive vertices; map(axis[i]) = axis[i + amplitude]
};
struct Elliptic {
  std::vector<Vertex> fixed;  // sorted, connected, nonempty
};
struct Undetermined {
  std::string reason;
};
using TypeVerdict = std::variant<Inversion, Translation, Elliptic, Undetermined>;

/// "Inversion", "Translation", "Elliptic" or "Undetermined".
std::string verdict_name(const TypeVerdict& v);
/// CLI rendering: a headline (`Inversion u v`, `Translation k`, `Elliptic <size>`,
/// `Undetermined <reason>`) and for translations/elliptics a second line listing
/// the axis or the fixed set.
std::string format_verdict(const TypeVerdict& v);

/// d(v, map(v)) in the ambient tree. Throws InvalidArgument outside the domain.
std::size_t displacement(const BallPresentation& p, Vertex v);

/// Inversion of a domain edge, else Elliptic on the fixed domain vertices, else
/// a translation detected at a vertex of B(r-1) of minimal displacement m via
/// d(x, map^2 x) = 2m, else Undetermined. Throws InvalidArgument if r < 1.
TypeVerdict classify(const BallPresentation& p);

/// Fixed domain vertices. Throws InvalidArgument unless classify() is Elliptic.
std::vector<Vertex> fixed_subtree(const BallPresentation& p);

}  // namespace arbor
