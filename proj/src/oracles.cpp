#include "arbor/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace arbor::oracle {

namespace {

std::vector<std::size_t> subtree_sizes(const RootedTree& t) {
  std::vector<std::size_t> s(t.size(), 1);
  for (std::size_t i = t.size(); i-- > 1;) s[t.parent(static_cast<Vertex>(i))] += s[i];
  return s;
}

std::vector<std::size_t> degree_sequence(const UnrootedTree& t) {
  std::vector<std::size_t> d;
  for (Vertex v = 0; v < t.size(); ++v) d.push_back(t.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

bool isomorphic(const RootedTree& a, const RootedTree& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return false;
  const auto sa = subtree_sizes(a);
  const auto sb = subtree_sizes(b);
  std::vector<Vertex> map(n, kNoVertex);
  std::vector<char> used(n, 0);
  map[0] = 0;
  used[0] = 1;
  std::function<bool(Vertex)> extend = [&](Vertex x) -> bool {
    if (x == n) return true;
    for (Vertex y : b.children(map[a.parent(x)])) {
      if (used[y] || sb[y] != sa[x] || b.children(y).size() != a.children(x).size()) continue;
      map[x] = y;
      used[y] = 1;
      if (extend(x + 1)) return true;
      used[y] = 0;
    }
    return false;
  };
  return extend(1);
}

bool isomorphic(const UnrootedTree& a, const UnrootedTree& b) {
  const std::size_t n = a.size();
  if (n != b.size() || degree_sequence(a) != degree_sequence(b)) return false;
  // Breadth-first order of a from vertex 0 with the parent of each vertex.
  std::vector<Vertex> order{0}, parent(n, kNoVertex);
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (std::size_t h = 0; h < order.size(); ++h) {
    for (Vertex w : a.neighbors(order[h])) {
      if (!seen[w]) seen[w] = 1, parent[w] = order[h], order.push_back(w);
    }
  }
  std::vector<Vertex> map(n, kNoVertex);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
    if (k == n) return true;
    const Vertex x = order[k];
    auto try_image = [&](Vertex y) {
      if (used[y] || b.degree(y) != a.degree(x)) return false;
      map[x] = y;
      used[y] = 1;
      if (extend(k + 1)) return true;
      used[y] = 0;
      return false;
    };
    if (k == 0) {
      for (Vertex y = 0; y < n; ++y) {
        if (try_image(y)) return true;
      }
      return false;
    }
    for (Vertex y : b.neighbors(map[parent[x]])) {
      if (try_image(y)) return true;
    }
    return false;
  };
  return extend(0);
}

std::vector<std::vector<Vertex>> automorphisms(const RootedTree& t) {
  const std::size_t n = t.size();
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  std::vector<std::vector<Vertex>> out;
  do {
    bool ok = true;
    for (std::size_t i = 1; i < n && ok; ++i) ok = t.parent(p[i]) == p[t.parent(static_cast<Vertex>(i))];
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return out;
}

std::vector<std::vector<Vertex>> automorphisms(const UnrootedTree& t) {
  const std::size_t n = t.size();
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  std::vector<std::vector<Vertex>> out;
  do {
    bool ok = true;
    for (const Edge& e : t.edges()) {
      if (!t.has_edge(p[e.u], p[e.v])) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<RootedTree> rooted_trees(std::size_t n) {
  std::vector<RootedTree> out;
  if (n == 0) return out;
  // Level sequences (root at level 1) from the path down to the star.
  std::vector<std::size_t> level(n);
  std::iota(level.begin(), level.end(), std::size_t{1});
  while (true) {
    std::vector<Vertex> parent(n, kNoVertex);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t j = i - 1;
      while (level[j] != level[i] - 1) --j;
      parent[i] = static_cast<Vertex>(j);
    }
    out.push_back(RootedTree::from_parents(std::move(parent)));
    std::size_t p = n;
    for (std::size_t i = n; i-- > 0;) {
      if (level[i] > 2) {
        p = i;
        break;
      }
    }
    if (p == n) break;
    std::size_t q = p;
    while (level[q] != level[p] - 1) --q;
    for (std::size_t i = p; i < n; ++i) level[i] = level[i - (p - q)];
  }
  return out;
}

std::vector<RootedTree> recursive_trees(std::size_t n) {
  std::vector<RootedTree> out;
  if (n == 0) return out;
  std::vector<Vertex> parent(n, 0);
  parent[0] = kNoVertex;
  while (true) {
    out.push_back(RootedTree::from_parents(parent));
    std::size_t i = n;
    while (i-- > 1) {
      if (parent[i] + 1 < i) {
        ++parent[i];
        break;
      }
      parent[i] = 0;
    }
    if (i == 0) break;
  }
  return out;
}

UnrootedTree pruefer_tree(const std::vector<Vertex>& seq) {
  const std::size_t n = seq.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : seq) ++degree[v];
  std::vector<Edge> edges;
  for (Vertex v : seq) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, v);
    --degree[leaf];
    --degree[v];
  }
  Vertex u = 0;
  while (degree[u] != 1) ++u;
  Vertex w = u + 1;
  while (degree[w] != 1) ++w;
  edges.emplace_back(u, w);
  return UnrootedTree::from_edges(n, std::move(edges));
}

std::vector<UnrootedTree> labelled_trees(std::size_t n) {
  if (n == 0) return {};
  if (n == 1) return {UnrootedTree::single()};
  std::vector<UnrootedTree> out;
  std::vector<Vertex> seq(n - 2, 0);
  while (true) {
    out.push_back(pruefer_tree(seq));
    std::size_t i = seq.size();
    while (i-- > 0) {
      if (++seq[i] < n) break;
      seq[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

std::vector<UnrootedTree> unrooted_trees(std::size_t n) {
  std::vector<UnrootedTree> out;
  for (auto& t : labelled_trees(n)) {
    bool fresh = true;
    for (const auto& k : out) {
      if (isomorphic(k, t)) {
        fresh = false;
        break;
      }
    }
    if (fresh) out.push_back(std::move(t));
  }
  return out;
}

RootedTree random_recursive_tree(std::size_t n, Rng& rng) {
  std::vector<Vertex> parent(n, kNoVertex);
  for (std::size_t i = 1; i < n; ++i) parent[i] = static_cast<Vertex>(rng.below(i));
  return RootedTree::from_parents(std::move(parent));
}

UnrootedTree random_tree(std::size_t n, Rng& rng) {
  if (n == 1) return UnrootedTree::single();
  std::vector<Vertex> seq(n - 2);
  for (auto& v : seq) v = static_cast<Vertex>(rng.below(n));
  return pruefer_tree(seq);
}

RootedTree relabel(const RootedTree& t, Rng& rng) {
  // A random linear extension of the parent order.
  const std::size_t n = t.size();
  std::vector<Vertex> fresh(n, kNoVertex);
  std::vector<Vertex> frontier{0};
  std::vector<Vertex> parent(n, kNoVertex);
  for (Vertex next = 0; next < n; ++next) {
    const std::size_t k = rng.below(frontier.size());
    const Vertex v = frontier[k];
    frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(k));
    fresh[v] = next;
    if (v != 0) parent[next] = fresh[t.parent(v)];
    for (Vertex c : t.children(v)) frontier.push_back(c);
  }
  return RootedTree::from_parents(std::move(parent));
}

UnrootedTree renumber(const UnrootedTree& t, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : t.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return UnrootedTree::from_edges(t.size(), std::move(edges));
}

UnrootedTree relabel(const UnrootedTree& t, Rng& rng, std::vector<Vertex>* perm) {
  std::vector<Vertex> p(t.size());
  std::iota(p.begin(), p.end(), Vertex{0});
  rng.shuffle(p);
  UnrootedTree out = renumber(t, p);
  if (perm) *perm = std::move(p);
  return out;
}

}  // namespace arbor::oracle
