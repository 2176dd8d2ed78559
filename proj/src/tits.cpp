#include "arbor/tits.hpp"

#include <algorithm>

#include "arbor/error.hpp"
#include "arbor/text_format.hpp"

namespace arbor {

BallPresentation::BallPresentation(std::shared_ptr<const RegularTruncation> ambient, unsigned domain_radius,
                                   std::vector<Vertex> map)
    : ambient_(std::move(ambient)), r_(domain_radius), map_(std::move(map)) {
  if (!ambient_) throw InvalidArgument("ball presentation needs an ambient truncation");
  const auto& A = *ambient_;
  if (r_ > A.radius()) {
    throw InvalidArgument("domain radius " + std::to_string(r_) + " exceeds ambient radius " +
                          std::to_string(A.radius()));
  }
  if (map_.size() != A.ball_size(r_)) {
    throw InvalidArgument("map covers " + std::to_string(map_.size()) + " vertices, the domain ball has " +
                          std::to_string(A.ball_size(r_)));
  }
  std::vector<char> hit(A.size(), 0);
  for (std::size_t v = 0; v < map_.size(); ++v) {
    const Vertex img = map_[v];
    if (img >= A.size()) throw InvalidArgument("image of " + std::to_string(v) + " outside the ambient ball");
    if (hit[img]) throw InvalidArgument("map is not injective");
    hit[img] = 1;
    if (v > 0 && A.distance(img, map_[A.parent(static_cast<Vertex>(v))]) != 1) {
      throw InvalidArgument("edge {" + std::to_string(A.parent(static_cast<Vertex>(v))) + "," + std::to_string(v) +
                            "} not preserved");
    }
    if (A.depth(static_cast<Vertex>(v)) < r_ && A.depth(img) >= A.radius()) {
      throw InvalidArgument("image of interior vertex " + std::to_string(v) + " lies on the ambient rim");
    }
  }
}

std::string serialize(const BallPresentation& p) {
  const auto& A = p.ambient();
  std::string out = "ballaut " + A.degree().to_string() + " " + std::to_string(p.domain_radius()) + " " +
                    std::to_string(A.radius()) + "\n";
  out += serialize(A.base());
  out += "map " + std::to_string(p.domain_size()) + "\n";
  for (std::size_t v = 0; v < p.domain_size(); ++v) {
    out += std::to_string(v) + " " + std::to_string(p.map()[v]) + "\n";
  }
  return out;
}

BallPresentation parse_ball_presentation(std::string_view text) {
  LineReader in(text);
  auto head = in.next("ballaut header");
  const std::size_t head_line = in.line();
  if (head.empty() || head[0] != "ballaut") throw ParseError(head_line, "expected `ballaut <degree> <r> <R>`");
  expect_tokens(head, 4, head_line, "ballaut header");
  Degree degree = parse_degree(head[1], head_line);
  const auto r = parse_uint(head[2], head_line);
  const auto R = parse_uint(head[3], head_line);
  if (R > 64) throw ParseError(head_line, "ambient radius too large");
  if (r > R) throw ParseError(head_line, "domain radius exceeds ambient radius");

  AnyTree parsed = parse_tree(in);
  const std::size_t tree_line = in.line();
  const auto* base = std::get_if<UnrootedTree>(&parsed);
  if (!base) throw ParseError(tree_line, "ambient must be in unrooted format");
  unsigned width = 0;
  if (degree.is_omega()) width = std::max<unsigned>(1, static_cast<unsigned>(base->degree(0)));
  auto ambient = std::make_shared<const RegularTruncation>(truncate_regular(degree, static_cast<unsigned>(R), width));
  if (!(ambient->base() == *base)) throw ParseError(tree_line, "ambient tree is not the breadth-first regular ball");

  auto mh = in.next("map header");
  if (mh.empty() || mh[0] != "map") throw ParseError(in.line(), "expected `map <m>`");
  expect_tokens(mh, 2, in.line(), "map header");
  const auto m = parse_uint(mh[1], in.line());
  if (m != ambient->ball_size(static_cast<unsigned>(r))) {
    throw ParseError(in.line(), "map must cover exactly the domain ball (" +
                                    std::to_string(ambient->ball_size(static_cast<unsigned>(r))) + " vertices)");
  }
  std::vector<Vertex> map(m, kNoVertex);
  for (std::uint64_t i = 0; i < m; ++i) {
    auto tok = in.next("map entry");
    expect_tokens(tok, 2, in.line(), "map entry");
    const auto v = parse_uint(tok[0], in.line());
    const auto img = parse_uint(tok[1], in.line());
    if (v >= m) throw ParseError(in.line(), "vertex " + std::to_string(v) + " outside the domain ball");
    if (img >= ambient->size()) throw ParseError(in.line(), "image " + std::to_string(img) + " out of range");
    if (map[v] != kNoVertex) throw ParseError(in.line(), "vertex " + std::to_string(v) + " mapped twice");
    map[v] = static_cast<Vertex>(img);
  }
  in.expect_end();
  return BallPresentation(std::move(ambient), static_cast<unsigned>(r), std::move(map));
}

std::string verdict_name(const TypeVerdict& v) {
  static const char* const names[] = {"Inversion", "Translation", "Elliptic", "Undetermined"};
  return names[v.index()];
}

namespace {

std::string join(const std::vector<Vertex>& vs) {
  std::string out;
  for (Vertex v : vs) out += ' ' + std::to_string(v);
  return out;
}

// Vertices on the geodesic from a to b, inclusive.
std::vector<Vertex> geodesic(const RegularTruncation& A, Vertex a, Vertex b) {
  std::vector<Vertex> up, down;
  while (A.depth(a) > A.depth(b)) up.push_back(a), a = A.parent(a);
  while (A.depth(b) > A.depth(a)) down.push_back(b), b = A.parent(b);
  while (a != b) {
    up.push_back(a), a = A.parent(a);
    down.push_back(b), b = A.parent(b);
  }
  up.push_back(a);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

}  // namespace

std::string format_verdict(const TypeVerdict& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Inversion>) {
          return "Inversion " + std::to_string(x.edge.u) + " " + std::to_string(x.edge.v) + "\n";
        } else if constexpr (std::is_same_v<T, Translation>) {
          return "Translation " + std::to_string(x.amplitude) + "\naxis" + join(x.axis) + "\n";
        } else if constexpr (std::is_same_v<T, Elliptic>) {
          return "Elliptic " + std::to_string(x.fixed.size()) + "\nfixed" + join(x.fixed) + "\n";
        } else {
          return "Undetermined " + x.reason + "\n";
        }
      },
      v);
}

std::size_t displacement(const BallPresentation& p, Vertex v) {
  if (v >= p.domain_size()) throw InvalidArgument("vertex " + std::to_string(v) + " outside the domain ball");
  return p.ambient().distance(v, p(v));
}

TypeVerdict classify(const BallPresentation& p) {
  if (p.domain_radius() < 1) throw InvalidArgument("classification needs domain radius >= 1");
  const auto& A = p.ambient();
  const std::size_t n = p.domain_size();

  for (Vertex v = 1; v < n; ++v) {
    const Vertex u = A.parent(v);
    if (p(v) == u && p(u) == v) return Inversion{Edge(u, v)};
  }

  std::vector<Vertex> fixed;
  for (Vertex v = 0; v < n; ++v) {
    if (p(v) == v) fixed.push_back(v);
  }
  if (!fixed.empty()) {
    // Geodesics between fixed points are fixed, and the ball is convex.
    for (Vertex v : fixed) {
      if (v != fixed.front() && p(A.parent(v)) != A.parent(v)) {
        throw InternalError("fixed set of a ball presentation is disconnected");
      }
    }
    return Elliptic{std::move(fixed)};
  }

  const std::size_t inner = A.ball_size(p.domain_radius() - 1);
  Vertex x = 0;
  std::size_t m = displacement(p, 0);
  for (Vertex v = 1; v < inner; ++v) {
    const std::size_t d = displacement(p, v);
    if (d < m) m = d, x = v;
  }
  const Vertex y = p(x);
  if (y >= n) return Undetermined{"image of a least-displaced vertex leaves the domain ball"};
  const Vertex z = p(y);
  if (A.distance(x, z) != 2 * m) {
    return Undetermined{"least displacement " + std::to_string(m) + " in the window is not a translation length"};
  }
  // x lies on the axis: x .. y .. z is a geodesic shifted by m.
  std::vector<Vertex> axis = geodesic(A, x, y);
  std::vector<Vertex> rest = geodesic(A, y, z);
  axis.insert(axis.end(), rest.begin() + 1, rest.end());
  for (std::size_t i = 0; i <= m; ++i) {
    if (p(axis[i]) != axis[i + m]) throw InternalError("axis segment is not shifted by the amplitude");
  }
  return Translation{m, std::move(axis)};
}

std::vector<Vertex> fixed_subtree(const BallPresentation& p) {
  TypeVerdict v = classify(p);
  auto* e = std::get_if<Elliptic>(&v);
  if (!e) throw InvalidArgument("fixed subtree requested for a " + verdict_name(v) + " presentation");
  return std::move(e->fixed);
}

}  // namespace arbor
