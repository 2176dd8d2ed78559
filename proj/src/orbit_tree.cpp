#include "arbor/orbit_tree.hpp"

#include "arbor/canon.hpp"
#include "arbor/error.hpp"
#include "arbor/text_format.hpp"

namespace arbor {

LabeledOrbitTree orbit_tree(const TreeAutomorphism& phi) {
  const auto* t = std::get_if<RootedTree>(&phi.tree());
  if (!t) throw InvalidArgument("orbit trees are defined for rooted trees");
  LabeledOrbitTree ot;
  ot.orbits = orbits(phi);
  ot.orbit_of.assign(phi.size(), kNoVertex);
  for (std::size_t k = 0; k < ot.orbits.size(); ++k) {
    for (Vertex x : ot.orbits[k]) ot.orbit_of[x] = static_cast<Vertex>(k);
  }
  // Parents of an orbit form a single orbit; its minimum precedes ours.
  std::vector<Vertex> parent(ot.orbits.size(), kNoVertex);
  for (std::size_t k = 1; k < ot.orbits.size(); ++k) parent[k] = ot.orbit_of[t->parent(ot.orbits[k][0])];
  ot.tree = RootedTree::from_parents(std::move(parent));
  for (const auto& o : ot.orbits) ot.labels.push_back(o.size());
  return ot;
}

std::string serialize(const LabeledOrbitTree& ot) {
  std::string out = serialize(ot.tree) + "labels";
  for (auto l : ot.labels) out += ' ' + std::to_string(l);
  return out + "\n";
}

namespace {

void require_same_tree(const TreeAutomorphism& phi, const TreeAutomorphism& psi) {
  if (!same_tree(phi.tree(), psi.tree())) throw InvalidArgument("automorphisms act on different trees");
}

// An unrooted tree rooted at its center, subdividing a central edge.
struct Anchor {
  TreeRef rooted;
  RootedView view;
  std::size_t n = 0;  // vertices of the unrooted tree
  std::optional<Edge> central_edge;

  TreeAutomorphism lift(const TreeAutomorphism& phi) const {
    std::vector<Vertex> q(view.to_source.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
      const Vertex x = view.to_source[i];
      q[i] = view.from_source[x < n ? phi(x) : x];
    }
    return validate_aut(rooted, std::move(q));
  }

  TreeAutomorphism project(const TreeAutomorphism& alpha, const TreeRef& source) const {
    std::vector<Vertex> p(n);
    for (Vertex x = 0; x < n; ++x) p[x] = view.to_source[alpha(view.from_source[x])];
    return validate_aut(source, std::move(p));
  }
};

Anchor anchor(const UnrootedTree& t) {
  Anchor a;
  a.n = t.size();
  Center c = center(t);
  if (auto* cv = std::get_if<CenterVertex>(&c)) {
    a.view = root_at(t, cv->v);
  } else {
    const auto& ce = std::get<CenterEdge>(c);
    a.central_edge = Edge(ce.u, ce.v);
    Subdivision sub = subdivide_edge(t, *a.central_edge);
    a.view = root_at(sub.tree, sub.midpoint);
  }
  a.rooted = share(a.view.tree);
  return a;
}

bool swaps(const TreeAutomorphism& phi, const Edge& e) { return phi(e.u) == e.v; }

std::optional<std::vector<Vertex>> orbit_tree_iso(const LabeledOrbitTree& a, const LabeledOrbitTree& b) {
  return iso_witness(a.tree, a.labels, b.tree, b.labels);
}

std::optional<TreeAutomorphism> rooted_witness(const TreeAutomorphism& phi, const TreeAutomorphism& psi) {
  auto a = orbit_tree(phi);
  auto b = orbit_tree(psi);
  auto iso = orbit_tree_iso(a, b);
  if (!iso) return std::nullopt;
  return lift_witness(phi, psi, *iso);
}

}  // namespace

bool conj_decide(const TreeAutomorphism& phi, const TreeAutomorphism& psi) {
  require_same_tree(phi, psi);
  if (is_rooted(phi.tree())) {
    auto a = orbit_tree(phi);
    auto b = orbit_tree(psi);
    return code_rooted(a.tree, a.labels) == code_rooted(b.tree, b.labels);
  }
  Anchor an = anchor(std::get<UnrootedTree>(phi.tree()));
  if (an.central_edge && swaps(phi, *an.central_edge) != swaps(psi, *an.central_edge)) return false;
  return conj_decide(an.lift(phi), an.lift(psi));
}

TreeAutomorphism lift_witness(const TreeAutomorphism& phi, const TreeAutomorphism& psi,
                              std::span<const Vertex> orbit_iso) {
  require_same_tree(phi, psi);
  const auto* t = std::get_if<RootedTree>(&phi.tree());
  if (!t) throw InvalidArgument("lift_witness needs automorphisms of a rooted tree");
  auto a = orbit_tree(phi);
  auto b = orbit_tree(psi);
  if (orbit_iso.size() != a.orbits.size()) throw InvalidArgument("orbit tree isomorphism has the wrong size");
  // A label-preserving isomorphism of the orbit trees always lifts; anything
  // else is the caller's mistake.
  std::vector<char> hit(orbit_iso.size(), 0);
  for (std::size_t k = 0; k < orbit_iso.size(); ++k) {
    const Vertex m = orbit_iso[k];
    if (m >= hit.size() || hit[m]) throw InvalidArgument("orbit tree map is not a bijection");
    hit[m] = 1;
    if (a.labels[k] != b.labels[m]) throw InvalidArgument("orbit tree map does not preserve labels");
    const auto kv = static_cast<Vertex>(k);
    if (k == 0 ? m != 0 : b.tree.parent(m) != orbit_iso[a.tree.parent(kv)]) {
      throw InvalidArgument("orbit tree map is not a rooted isomorphism");
    }
  }

  std::vector<Vertex> alpha(phi.size(), kNoVertex);
  alpha[0] = 0;
  for (std::size_t k = 1; k < a.orbits.size(); ++k) {
    const auto& from = a.orbits[k];
    const auto& to = b.orbits.at(orbit_iso[k]);
    if (from.size() != to.size()) throw InternalError("orbit tree isomorphism does not preserve labels");
    const Vertex x = from[0];
    const Vertex want = alpha[t->parent(x)];
    std::size_t j = 0;
    while (j < to.size() && t->parent(to[j]) != want) ++j;
    if (j == to.size()) throw InternalError("no orbit element above the chosen parent image");
    // Both orbit lists follow the cycle, so alpha(phi^i x) = psi^i y.
    for (std::size_t i = 0; i < from.size(); ++i) alpha[from[i]] = to[(j + i) % to.size()];
  }
  TreeAutomorphism out = [&] {
    try {
      return validate_aut(phi.tree_ref(), std::move(alpha));
    } catch (const InvalidArgument& e) {
      throw InternalError(std::string("lifted conjugator is not an automorphism: ") + e.what());
    }
  }();
  if (!conjugates(out, phi, psi)) throw InternalError("lifted conjugator failed verification");
  return out;
}

std::optional<TreeAutomorphism> conj_witness(const TreeAutomorphism& phi, const TreeAutomorphism& psi) {
  require_same_tree(phi, psi);
  if (is_rooted(phi.tree())) return rooted_witness(phi, psi);
  Anchor an = anchor(std::get<UnrootedTree>(phi.tree()));
  if (an.central_edge && swaps(phi, *an.central_edge) != swaps(psi, *an.central_edge)) return std::nullopt;
  auto w = rooted_witness(an.lift(phi), an.lift(psi));
  if (!w) return std::nullopt;
  TreeAutomorphism alpha = an.project(*w, phi.tree_ref());
  if (!conjugates(alpha, phi, psi)) throw InternalError("projected conjugator failed verification");
  return alpha;
}

}  // namespace arbor
