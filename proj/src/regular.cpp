#include "arbor/regular.hpp"

#include <algorithm>
#include <numeric>

#include "arbor/error.hpp"
#include "arbor/text_format.hpp"

namespace arbor {

Degree Degree::finite(unsigned n) {
  if (n < 2) throw InvalidArgument("regular degree must be at least 2");
  return Degree(n);
}

std::string Degree::to_string() const { return is_omega() ? "omega" : std::to_string(n_); }

Degree parse_degree(std::string_view token, std::size_t line) {
  if (token == "omega") return Degree::omega();
  std::uint64_t n = parse_uint(token, line);
  if (n < 2 || n > 1'000'000) throw ParseError(line, "degree must be omega or an integer >= 2");
  return Degree::finite(static_cast<unsigned>(n));
}

std::span<const Vertex> RegularTruncation::children(Vertex v) const {
  return {ids_.data() + first_child_[v], first_child_[v + 1] - first_child_[v]};
}

Vertex RegularTruncation::child(Vertex v, unsigned lbl) const {
  for (Vertex c : children(v)) {
    if (label_[c] == lbl) return c;
    if (label_[c] > lbl) break;
  }
  return kNoVertex;
}

std::vector<unsigned> RegularTruncation::word(Vertex v) const {
  std::vector<unsigned> w(depth_[v]);
  for (std::size_t i = w.size(); i-- > 0;) {
    w[i] = label_[v];
    v = parent_[v];
  }
  return w;
}

Vertex RegularTruncation::find(std::span<const unsigned> w) const {
  Vertex v = 0;
  for (unsigned c : w) {
    v = child(v, c);
    if (v == kNoVertex) return kNoVertex;
  }
  return v;
}

std::size_t RegularTruncation::ball_size(unsigned r) const {
  return level_end_[std::min<std::size_t>(r, level_end_.size() - 1)];
}

std::size_t RegularTruncation::distance(Vertex a, Vertex b) const {
  std::size_t d = 0;
  while (depth_[a] > depth_[b]) a = parent_[a], ++d;
  while (depth_[b] > depth_[a]) b = parent_[b], ++d;
  while (a != b) a = parent_[a], b = parent_[b], d += 2;
  return d;
}

RootedTree RegularTruncation::as_rooted() const { return RootedTree::from_parents(parent_); }

RegularTruncation truncate_regular(Degree degree, unsigned radius, unsigned width) {
  if (degree.is_omega() && width < 1) throw InvalidArgument("omega truncation needs width >= 1");
  std::vector<Vertex> parent{kNoVertex};
  std::vector<unsigned> depth{0};
  std::vector<unsigned> label{0};
  std::vector<std::size_t> first_child;
  std::vector<std::size_t> level_end;
  std::vector<Edge> edges;
  for (std::size_t head = 0; head < parent.size(); ++head) {
    first_child.push_back(parent.size());
    const auto v = static_cast<Vertex>(head);
    if (head > 0 && depth[head] != depth[head - 1]) level_end.push_back(head);
    if (depth[head] == radius) continue;
    auto add = [&](unsigned lbl) {
      edges.emplace_back(v, static_cast<Vertex>(parent.size()));
      parent.push_back(v);
      depth.push_back(depth[head] + 1);
      label.push_back(lbl);
    };
    if (degree.is_omega()) {
      for (unsigned c = 0; c < width; ++c) add(c);
    } else {
      for (unsigned c = 0; c < degree.value(); ++c) {
        if (head == 0 || c != label[head]) add(c);
      }
    }
  }
  first_child.push_back(parent.size());
  level_end.push_back(parent.size());

  const std::size_t n = parent.size();
  RegularTruncation t(UnrootedTree::from_edges(n, std::move(edges)));
  t.degree_ = degree;
  t.radius_ = radius;
  t.width_ = degree.is_omega() ? width : degree.value() - 1;
  t.parent_ = std::move(parent);
  t.depth_ = std::move(depth);
  t.label_ = std::move(label);
  t.first_child_ = std::move(first_child);
  t.ids_.resize(n);
  std::iota(t.ids_.begin(), t.ids_.end(), Vertex{0});
  t.level_end_ = std::move(level_end);
  return t;
}

}  // namespace arbor
