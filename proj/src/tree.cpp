#include "arbor/tree.hpp"

#include <algorithm>
#include <string>

#include "arbor/error.hpp"

namespace arbor {

RootedTree RootedTree::from_parents(std::vector<Vertex> parent) {
  if (parent.empty()) throw InvalidArgument("rooted tree must have at least one vertex");
  if (parent[0] != kNoVertex) throw InvalidArgument("root must have no parent");
  RootedTree t;
  const std::size_t n = parent.size();
  t.children_.resize(n);
  t.depth_.assign(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    if (parent[i] >= i) {
      throw InvalidArgument("parent of vertex " + std::to_string(i) +
                            " is not less than the vertex");
    }
    t.children_[parent[i]].push_back(static_cast<Vertex>(i));
    t.depth_[i] = t.depth_[parent[i]] + 1;
    t.height_ = std::max(t.height_, t.depth_[i]);
  }
  t.parent_ = std::move(parent);
  return t;
}

RootedTree RootedTree::single() { return from_parents({kNoVertex}); }

std::size_t RootedTree::max_branching() const noexcept {
  std::size_t b = 0;
  for (const auto& c : children_) b = std::max(b, c.size());
  return b;
}

bool RootedTree::has_edge(Vertex a, Vertex b) const {
  if (a >= size() || b >= size() || a == b) return false;
  return parent_[a] == b || parent_[b] == a;
}

std::vector<Edge> RootedTree::edges() const {
  std::vector<Edge> out;
  out.reserve(size() > 0 ? size() - 1 : 0);
  for (std::size_t i = 1; i < size(); ++i) out.emplace_back(parent_[i], static_cast<Vertex>(i));
  std::sort(out.begin(), out.end());
  return out;
}

UnrootedTree UnrootedTree::from_edges(std::size_t n, std::vector<Edge> edges) {
  if (n == 0) throw InvalidArgument("tree must have at least one vertex");
  if (edges.size() != n - 1) {
    throw InvalidArgument("a tree on " + std::to_string(n) + " vertices needs " +
                          std::to_string(n - 1) + " edges, got " +
                          std::to_string(edges.size()));
  }
  std::sort(edges.begin(), edges.end());
  UnrootedTree t;
  t.adjacency_.resize(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u == e.v) throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
    if (e.v >= n) throw InvalidArgument("vertex " + std::to_string(e.v) + " out of range");
    if (i > 0 && edges[i - 1] == e) {
      throw InvalidArgument("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    t.adjacency_[e.u].push_back(e.v);
    t.adjacency_[e.v].push_back(e.u);
  }
  for (auto& a : t.adjacency_) std::sort(a.begin(), a.end());

  // n-1 edges plus connectivity implies acyclic.
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : t.adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) throw InvalidArgument("edge set is disconnected or contains a cycle");
  t.edges_ = std::move(edges);
  return t;
}

UnrootedTree UnrootedTree::single() { return from_edges(1, {}); }

bool UnrootedTree::has_edge(Vertex a, Vertex b) const {
  if (a >= size() || b >= size()) return false;
  const auto& adj = adjacency_[a];
  return std::binary_search(adj.begin(), adj.end(), b);
}

std::size_t UnrootedTree::max_degree() const noexcept {
  std::size_t d = 0;
  for (const auto& a : adjacency_) d = std::max(d, a.size());
  return d;
}

std::size_t tree_size(const AnyTree& t) {
  return std::visit([](const auto& x) { return x.size(); }, t);
}

bool is_rooted(const AnyTree& t) { return std::holds_alternative<RootedTree>(t); }

UnrootedTree to_unrooted(const RootedTree& t) { return UnrootedTree::from_edges(t.size(), t.edges()); }

Center center(const UnrootedTree& t) {
  const std::size_t n = t.size();
  if (n == 1) return CenterVertex{0};
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex w : t.neighbors(v)) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  if (layer.size() == 1) return CenterVertex{layer[0]};
  return CenterEdge{std::min(layer[0], layer[1]), std::max(layer[0], layer[1])};
}

std::vector<std::size_t> distances_from(const UnrootedTree& t, Vertex v) {
  std::vector<std::size_t> dist(t.size(), static_cast<std::size_t>(-1));
  std::vector<Vertex> queue{v};
  dist[v] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    for (Vertex y : t.neighbors(x)) {
      if (dist[y] == static_cast<std::size_t>(-1)) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::size_t eccentricity(const UnrootedTree& t, Vertex v) {
  auto d = distances_from(t, v);
  return *std::max_element(d.begin(), d.end());
}

Subdivision subdivide_edge(const UnrootedTree& t, Edge e) {
  if (!t.has_edge(e.u, e.v)) {
    throw InvalidArgument("{" + std::to_string(e.u) + "," + std::to_string(e.v) +
                          "} is not an edge");
  }
  const auto mid = static_cast<Vertex>(t.size());
  std::vector<Edge> edges;
  edges.reserve(t.size());
  for (const Edge& f : t.edges()) {
    if (f != e) edges.push_back(f);
  }
  edges.emplace_back(e.u, mid);
  edges.emplace_back(e.v, mid);
  return {UnrootedTree::from_edges(t.size() + 1, std::move(edges)), mid};
}

RootedView root_at(const UnrootedTree& t, Vertex root, Vertex excluded) {
  RootedView view;
  view.from_source.assign(t.size(), kNoVertex);
  std::vector<Vertex> parent{kNoVertex};
  view.to_source.push_back(root);
  view.from_source[root] = 0;
  for (std::size_t head = 0; head < view.to_source.size(); ++head) {
    Vertex src = view.to_source[head];
    for (Vertex w : t.neighbors(src)) {
      if (view.from_source[w] != kNoVertex) continue;
      if (head == 0 && w == excluded) continue;
      view.from_source[w] = static_cast<Vertex>(view.to_source.size());
      view.to_source.push_back(w);
      parent.push_back(static_cast<Vertex>(head));
    }
  }
  view.tree = RootedTree::from_parents(std::move(parent));
  return view;
}

UnrootedTree induced_subtree(const UnrootedTree& t, std::span<const Vertex> vertices) {
  if (vertices.empty()) throw InvalidArgument("induced subtree of an empty vertex set");
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Vertex> rank(t.size(), kNoVertex);
  for (std::size_t i = 0; i < sorted.size(); ++i) rank[sorted[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const Edge& e : t.edges()) {
    if (rank[e.u] != kNoVertex && rank[e.v] != kNoVertex) edges.emplace_back(rank[e.u], rank[e.v]);
  }
  if (edges.size() + 1 != sorted.size()) throw InvalidArgument("vertex set is not connected");
  return UnrootedTree::from_edges(sorted.size(), std::move(edges));
}

}  // namespace arbor
