#include "arbor/reductions.hpp"

#include <algorithm>

#include "arbor/canon.hpp"
#include "arbor/error.hpp"
#include "arbor/orbit_tree.hpp"

namespace arbor {

namespace {

// Fixed-point-free permutation of m >= 2 sibling ranks: pairs 2k <-> 2k+1, with
// the last three rotating when m is odd.
std::vector<std::size_t> spare_permutation(std::size_t m) {
  if (m < 2) throw InternalError("spare permutation needs at least two ranks");
  std::vector<std::size_t> p(m);
  const std::size_t paired = m % 2 == 0 ? m : m - 3;
  for (std::size_t j = 0; j < paired; ++j) p[j] = j ^ 1;
  if (m % 2 == 1) {
    p[m - 3] = m - 2;
    p[m - 2] = m - 1;
    p[m - 1] = m - 3;
  }
  return p;
}

// Fixes the marked vertices, permutes the unmarked children of every marked
// vertex by spare_permutation, and carries deeper vertices along by child index.
std::vector<Vertex> spare_action(const RegularTruncation& A, const std::vector<char>& marked) {
  std::vector<Vertex> phi(A.size(), kNoVertex);
  std::vector<Vertex> spare;
  for (Vertex v = 0; v < A.size(); ++v) {
    if (marked[v]) {
      phi[v] = v;
      const auto ch = A.children(v);
      spare.clear();
      for (Vertex c : ch) {
        if (!marked[c]) spare.push_back(c);
      }
      if (spare.empty()) continue;
      const auto p = spare_permutation(spare.size());
      for (std::size_t j = 0; j < spare.size(); ++j) phi[spare[j]] = spare[p[j]];
    } else if (phi[v] == kNoVertex) {
      throw InternalError("spare action reached an unassigned vertex");
    }
    if (!marked[v]) {
      const auto from = A.children(v);
      const auto to = A.children(phi[v]);
      for (std::size_t i = 0; i < from.size(); ++i) phi[from[i]] = to[i];
    }
  }
  return phi;
}

}  // namespace

TreeAutomorphism sigma_aut(unsigned d, unsigned w) {
  if (d < 1) throw InvalidArgument("sigma needs depth >= 1");
  if (w < 2 || w % 2 != 0) throw InvalidArgument("sigma needs an even width >= 2");
  const auto A = truncate_regular(Degree::omega(), d, w);
  std::vector<char> marked(A.size(), 0);
  marked[0] = 1;
  return validate_aut(share(A.as_rooted()), spare_action(A, marked));
}

EmbeddedPair phi_rooted(const RootedTree& t, unsigned d, unsigned w) {
  if (w % 2 != 0) throw InvalidArgument("width must be even");
  if (d < t.height() + 2) {
    throw BoundExceeded("insufficient depth buffer: need d >= " + std::to_string(t.height() + 2));
  }
  if (w < 2 * t.max_branching() + 2) {
    throw BoundExceeded("insufficient width buffer: need w >= " + std::to_string(2 * t.max_branching() + 2));
  }
  auto A = std::make_shared<const RegularTruncation>(truncate_regular(Degree::omega(), d, w));
  std::vector<Vertex> emb(t.size());
  std::vector<char> marked(A->size(), 0);
  emb[0] = 0;
  marked[0] = 1;
  for (Vertex x = 0; x < t.size(); ++x) {
    const auto ch = t.children(x);
    for (std::size_t i = 0; i < ch.size(); ++i) {
      emb[ch[i]] = A->child(emb[x], static_cast<unsigned>(2 * i + 1));
      marked[emb[ch[i]]] = 1;
    }
  }
  auto phi = validate_aut(share(A->as_rooted()), spare_action(*A, marked));
  return EmbeddedPair{std::move(A), std::move(emb), std::move(phi)};
}

EmbeddedPair phi_unrooted(const UnrootedTree& t, Degree degree, unsigned radius, unsigned w) {
  std::size_t width = 0;
  if (degree.is_omega()) {
    if (w < 2) throw InvalidArgument("omega embedding needs at least 2 spare branches per vertex");
    width = t.max_degree() + w;
  } else {
    if (degree.value() < 3) throw InvalidArgument("finite embedding needs degree >= 3");
    for (Vertex x = 0; x < t.size(); ++x) {
      if (t.degree(x) != 1 && t.degree(x) != degree.value()) {
        throw InvalidArgument("vertex " + std::to_string(x) + " has degree " + std::to_string(t.degree(x)) +
                              ", expected 1 or " + degree.to_string());
      }
    }
  }
  Center c = center(t);
  const Vertex base = std::holds_alternative<CenterVertex>(c) ? std::get<CenterVertex>(c).v : std::get<CenterEdge>(c).u;
  const std::size_t ecc = eccentricity(t, base);
  if (radius < ecc + 1) throw BoundExceeded("insufficient radius: need R >= " + std::to_string(ecc + 1));

  auto A = std::make_shared<const RegularTruncation>(
      truncate_regular(degree, radius, static_cast<unsigned>(width)));
  // Breadth-first from the basepoint; T-neighbours take the first free child
  // slots in increasing source id.
  RootedView view = root_at(t, base);
  std::vector<Vertex> emb(t.size(), kNoVertex);
  std::vector<char> marked(A->size(), 0);
  emb[base] = 0;
  marked[0] = 1;
  for (Vertex i = 0; i < view.tree.size(); ++i) {
    const Vertex x = view.to_source[i];
    const auto kids = view.tree.children(i);
    const auto slots = A->children(emb[x]);
    for (std::size_t k = 0; k < kids.size(); ++k) {
      const Vertex y = view.to_source[kids[k]];
      emb[y] = slots[k];
      marked[emb[y]] = 1;
    }
  }
  auto phi = validate_aut(share(A->base()), spare_action(*A, marked));
  return EmbeddedPair{std::move(A), std::move(emb), std::move(phi)};
}

BallPresentation ball_presentation(const EmbeddedPair& pair) {
  const auto perm = pair.phi.perm();
  return BallPresentation(pair.truncation, pair.truncation->radius(), std::vector<Vertex>(perm.begin(), perm.end()));
}

TreeAutomorphism invert_to_rooted(const TreeAutomorphism& phi) {
  const auto* t = std::get_if<UnrootedTree>(&phi.tree());
  if (!t) throw InvalidArgument("edge inversion needs an unrooted tree");
  for (const Edge& e : t->edges()) {
    if (phi(e.u) != e.v || phi(e.v) != e.u) continue;
    Subdivision sub = subdivide_edge(*t, e);
    RootedView view = root_at(sub.tree, sub.midpoint);
    const Vertex n = static_cast<Vertex>(t->size());
    std::vector<Vertex> q(view.to_source.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
      const Vertex x = view.to_source[i];
      q[i] = view.from_source[x < n ? phi(x) : x];
    }
    return validate_aut(share(std::move(view.tree)), std::move(q));
  }
  throw InvalidArgument("automorphism inverts no edge (not type (a))");
}

bool decide_type_a(const TreeAutomorphism& phi, const TreeAutomorphism& psi) {
  if (!same_tree(phi.tree(), psi.tree())) throw InvalidArgument("automorphisms act on different trees");
  TreeAutomorphism a = invert_to_rooted(phi);
  TreeAutomorphism b = invert_to_rooted(psi);
  const auto& ta = std::get<RootedTree>(a.tree());
  const auto& tb = std::get<RootedTree>(b.tree());
  auto m = iso_witness(ta, tb);
  if (!m) return false;
  // Transport psi's image onto phi's rooted tree: x -> m^-1(b(m(x))).
  std::vector<Vertex> inv(m->size());
  for (std::size_t i = 0; i < m->size(); ++i) inv[(*m)[i]] = static_cast<Vertex>(i);
  std::vector<Vertex> moved(m->size());
  for (std::size_t x = 0; x < moved.size(); ++x) moved[x] = inv[b((*m)[x])];
  return conj_decide(a, validate_aut(a.tree_ref(), std::move(moved)));
}

}  // namespace arbor
