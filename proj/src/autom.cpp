#include "arbor/autom.hpp"

#include <algorithm>
#include <numeric>

#include "arbor/canon.hpp"
#include "arbor/error.hpp"
#include "arbor/text_format.hpp"

namespace arbor {

TreeRef share(RootedTree t) { return std::make_shared<const AnyTree>(std::move(t)); }
TreeRef share(UnrootedTree t) { return std::make_shared<const AnyTree>(std::move(t)); }

bool same_tree(const AnyTree& a, const AnyTree& b) {
  if (&a == &b) return true;
  return a == b;
}

bool TreeAutomorphism::is_identity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (perm_[i] != i) return false;
  }
  return true;
}

bool operator==(const TreeAutomorphism& a, const TreeAutomorphism& b) {
  return a.perm_ == b.perm_ && same_tree(*a.tree_, *b.tree_);
}

TreeAutomorphism validate_aut(TreeRef tree, std::vector<Vertex> perm) {
  if (!tree) throw InvalidArgument("automorphism needs a tree");
  const std::size_t n = tree_size(*tree);
  if (perm.size() != n) {
    throw InvalidArgument("permutation has " + std::to_string(perm.size()) + " entries for a tree on " +
                          std::to_string(n) + " vertices");
  }
  std::vector<char> hit(n, 0);
  for (Vertex v : perm) {
    if (v >= n || hit[v]) throw InvalidArgument("not a bijection");
    hit[v] = 1;
  }
  if (const auto* rt = std::get_if<RootedTree>(tree.get())) {
    if (perm[0] != 0) throw InvalidArgument("root moved");
    for (std::size_t i = 1; i < n; ++i) {
      if (rt->parent(perm[i]) != perm[rt->parent(static_cast<Vertex>(i))]) {
        throw InvalidArgument("edge {" + std::to_string(rt->parent(static_cast<Vertex>(i))) + "," +
                              std::to_string(i) + "} not preserved");
      }
    }
  } else {
    const auto& ut = std::get<UnrootedTree>(*tree);
    for (const Edge& e : ut.edges()) {
      if (!ut.has_edge(perm[e.u], perm[e.v])) {
        throw InvalidArgument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} not preserved");
      }
    }
  }
  return TreeAutomorphism(std::move(tree), std::move(perm));
}

TreeAutomorphism identity_aut(TreeRef tree) {
  std::vector<Vertex> perm(tree_size(*tree));
  std::iota(perm.begin(), perm.end(), Vertex{0});
  return TreeAutomorphism(std::move(tree), std::move(perm));
}

TreeAutomorphism compose(const TreeAutomorphism& a, const TreeAutomorphism& b) {
  if (!same_tree(a.tree(), b.tree())) throw InvalidArgument("automorphisms act on different trees");
  std::vector<Vertex> perm(a.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = a.perm_[b.perm_[i]];
  return TreeAutomorphism(a.tree_, std::move(perm));
}

TreeAutomorphism inverse(const TreeAutomorphism& a) {
  std::vector<Vertex> perm(a.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[a.perm_[i]] = static_cast<Vertex>(i);
  return TreeAutomorphism(a.tree_, std::move(perm));
}

TreeAutomorphism conjugate(const TreeAutomorphism& alpha, const TreeAutomorphism& phi) {
  return compose(compose(alpha, phi), inverse(alpha));
}

bool conjugates(const TreeAutomorphism& alpha, const TreeAutomorphism& phi, const TreeAutomorphism& psi) {
  if (!same_tree(alpha.tree(), phi.tree()) || !same_tree(phi.tree(), psi.tree())) return false;
  // alpha phi alpha^-1 = psi  <=>  alpha(phi(x)) = psi(alpha(x)) for all x
  for (std::size_t x = 0; x < phi.size(); ++x) {
    if (alpha(phi(static_cast<Vertex>(x))) != psi(alpha(static_cast<Vertex>(x)))) return false;
  }
  return true;
}

std::vector<std::vector<Vertex>> orbits(std::span<const Vertex> perm) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    auto& orbit = out.emplace_back();
    for (auto v = static_cast<Vertex>(s); !seen[v]; v = perm[v]) {
      seen[v] = 1;
      orbit.push_back(v);
    }
  }
  return out;
}

std::vector<std::vector<Vertex>> orbits(const TreeAutomorphism& a) { return orbits(a.perm()); }

CycleType cycle_type(std::span<const Vertex> perm) {
  CycleType ct;
  for (const auto& o : orbits(perm)) ++ct[o.size()];
  return ct;
}

CycleType cycle_type(const TreeAutomorphism& a) { return cycle_type(a.perm()); }

std::string to_string(const CycleType& ct) {
  std::string out = "{";
  bool first = true;
  for (auto [len, count] : ct) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(len) + ":" + std::to_string(count);
  }
  return out + "}";
}

std::string serialize(const TreeAutomorphism& a) { return serialize_perm(a.perm()); }

namespace {

// All automorphisms of a rooted tree: match the root to itself, then for every
// matched pair choose a code-preserving bijection between their children.
class RootedAutSearch {
 public:
  explicit RootedAutSearch(const RootedTree& t) : t_(t), code_(subtree_codes(t)), perm_(t.size(), kNoVertex) {}

  std::vector<std::vector<Vertex>> run() {
    pending_.emplace_back(0, 0);
    step();
    return std::move(out_);
  }

 private:
  void step() {
    if (pending_.empty()) {
      out_.push_back(perm_);
      return;
    }
    auto [u, v] = pending_.back();
    pending_.pop_back();
    perm_[u] = v;
    std::vector<Vertex> target(t_.children(u).size(), kNoVertex);
    std::vector<char> used(t_.children(v).size(), 0);
    assign(u, v, 0, target, used);
    pending_.emplace_back(u, v);
  }

  void assign(Vertex u, Vertex v, std::size_t i, std::vector<Vertex>& target, std::vector<char>& used) {
    auto cu = t_.children(u);
    auto cv = t_.children(v);
    if (i == cu.size()) {
      for (std::size_t k = 0; k < cu.size(); ++k) pending_.emplace_back(cu[k], target[k]);
      step();
      pending_.resize(pending_.size() - cu.size());
      return;
    }
    for (std::size_t j = 0; j < cv.size(); ++j) {
      if (used[j] || code_[cv[j]] != code_[cu[i]]) continue;
      used[j] = 1;
      target[i] = cv[j];
      assign(u, v, i + 1, target, used);
      used[j] = 0;
    }
  }

  const RootedTree& t_;
  std::vector<std::string> code_;
  std::vector<Vertex> perm_;
  std::vector<std::pair<Vertex, Vertex>> pending_;
  std::vector<std::vector<Vertex>> out_;
};

}  // namespace

std::vector<TreeAutomorphism> enumerate_aut(const TreeRef& tree, std::size_t bound) {
  const std::size_t n = tree_size(*tree);
  if (n > bound) {
    throw BoundExceeded("tree has " + std::to_string(n) + " vertices, oracle bound is " + std::to_string(bound));
  }
  std::vector<std::vector<Vertex>> perms;
  if (const auto* rt = std::get_if<RootedTree>(tree.get())) {
    perms = RootedAutSearch(*rt).run();
  } else {
    // Every automorphism fixes the center; root there (subdividing a central edge).
    const auto& ut = std::get<UnrootedTree>(*tree);
    Center c = center(ut);
    RootedView view;
    if (auto* cv = std::get_if<CenterVertex>(&c)) {
      view = root_at(ut, cv->v);
    } else {
      const auto& ce = std::get<CenterEdge>(c);
      Subdivision sub = subdivide_edge(ut, Edge(ce.u, ce.v));
      view = root_at(sub.tree, sub.midpoint);
    }
    for (const auto& q : RootedAutSearch(view.tree).run()) {
      std::vector<Vertex> p(n);
      for (Vertex x = 0; x < n; ++x) p[x] = view.to_source[q[view.from_source[x]]];
      perms.push_back(std::move(p));
    }
  }
  std::sort(perms.begin(), perms.end());
  std::vector<TreeAutomorphism> out;
  out.reserve(perms.size());
  for (auto& p : perms) out.push_back(validate_aut(tree, std::move(p)));
  return out;
}

std::optional<TreeAutomorphism> conj_oracle(const TreeAutomorphism& phi, const TreeAutomorphism& psi,
                                            std::size_t bound) {
  if (!same_tree(phi.tree(), psi.tree())) throw InvalidArgument("automorphisms act on different trees");
  for (auto& alpha : enumerate_aut(phi.tree_ref(), bound)) {
    if (conjugates(alpha, phi, psi)) return alpha;
  }
  return std::nullopt;
}

std::vector<std::size_t> conjugacy_classes(std::span<const TreeAutomorphism> group) {
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::map<std::vector<Vertex>, std::size_t> index;
  for (std::size_t i = 0; i < group.size(); ++i) {
    index.emplace(std::vector<Vertex>(group[i].perm().begin(), group[i].perm().end()), i);
  }
  std::vector<std::size_t> cls(group.size(), kUnset);
  std::size_t next = 0;
  std::vector<Vertex> c;
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (cls[i] != kUnset) continue;
    cls[i] = next;
    const auto phi = group[i].perm();
    for (const auto& alpha : group) {
      const auto a = alpha.perm();
      c.assign(phi.size(), 0);
      for (std::size_t x = 0; x < phi.size(); ++x) c[a[x]] = a[phi[x]];
      auto it = index.find(c);
      if (it == index.end()) throw InvalidArgument("element list is not closed under conjugation");
      cls[it->second] = next;
    }
    ++next;
  }
  return cls;
}

}  // namespace arbor
