#include "arbor/selftest.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "arbor/autom.hpp"
#include "arbor/canon.hpp"
#include "arbor/error.hpp"
#include "arbor/oracles.hpp"
#include "arbor/orbit_tree.hpp"
#include "arbor/reductions.hpp"
#include "arbor/synthetic.hpp"
#include "arbor/text_format.hpp"
#include "arbor/tits.hpp"
#include "arbor/tz.hpp"
#include "arbor/widget.hpp"

namespace arbor {

void validate(const RunConfig& cfg) {
  if (cfg.size_bound && (*cfg.size_bound < 1 || *cfg.size_bound > 10)) {
    throw InvalidArgument("size bound must be between 1 and 10");
  }
  if (cfg.sample_count && *cfg.sample_count < 1) throw InvalidArgument("sample count must be at least 1");
}

bool SelftestReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.failures.empty(); });
}

std::string reproducer(const RunConfig& cfg, const std::string& suite) {
  std::string out = "arbor selftest --seed " + std::to_string(cfg.seed);
  if (cfg.size_bound) out += " --size-bound " + std::to_string(*cfg.size_bound);
  if (cfg.sample_count) out += " --samples " + std::to_string(*cfg.sample_count);
  return out + " --suite " + suite;
}

std::string SelftestReport::render() const {
  constexpr std::size_t kShown = 10;
  std::string out = "selftest seed " + std::to_string(config.seed);
  if (config.size_bound) out += " size-bound " + std::to_string(*config.size_bound);
  if (config.sample_count) out += " samples " + std::to_string(*config.sample_count);
  out += "\n";
  std::size_t cases = 0, failures = 0;
  for (const auto& s : suites) {
    cases += s.cases;
    failures += s.failures.size();
    out += s.name + ": " + std::to_string(s.cases) + " cases, " + std::to_string(s.failures.size()) + " failures\n";
    for (std::size_t i = 0; i < s.failures.size() && i < kShown; ++i) out += "  FAIL " + s.failures[i] + "\n";
    if (s.failures.size() > kShown) out += "  ... " + std::to_string(s.failures.size() - kShown) + " more\n";
    if (!s.failures.empty()) out += "  reproduce: " + reproducer(config, s.name) + "\n";
  }
  out += "total: " + std::to_string(cases) + " cases, " + std::to_string(failures) + " failures\n";
  return out;
}

namespace {

std::size_t capped(const RunConfig& cfg, std::size_t size) {
  return cfg.size_bound ? std::min(size, *cfg.size_bound) : size;
}

std::size_t samples(const RunConfig& cfg, std::size_t dflt) { return cfg.sample_count.value_or(dflt); }

Rng case_rng(const RunConfig& cfg, std::uint64_t stream, std::uint64_t index) {
  return Rng(derive_seed(cfg.seed, stream, index));
}

// Runs body(i) for every case, turning library errors into failures.
void each_case(SuiteResult& r, std::size_t count, const std::function<void(std::size_t)>& body) {
  for (std::size_t i = 0; i < count; ++i) {
    ++r.cases;
    try {
      body(i);
    } catch (const std::exception& e) {
      r.failures.push_back("case " + std::to_string(i) + ": error: " + e.what());
    }
  }
}

void fail(SuiteResult& r, std::size_t i, const std::string& what) {
  r.failures.push_back("case " + std::to_string(i) + ": " + what);
}

std::vector<TreeAutomorphism> as_auts(const TreeRef& ref, const std::vector<std::vector<Vertex>>& perms) {
  std::vector<TreeAutomorphism> out;
  out.reserve(perms.size());
  for (const auto& p : perms) out.push_back(validate_aut(ref, p));
  return out;
}

std::vector<std::vector<Vertex>> as_perms(const std::vector<TreeAutomorphism>& g) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& a : g) out.emplace_back(a.perm().begin(), a.perm().end());
  std::sort(out.begin(), out.end());
  return out;
}

template <typename Tree>
std::string describe(const Tree& t) {
  std::string s = serialize(t);
  std::replace(s.begin(), s.end(), '\n', ';');
  return s;
}

std::vector<Vertex> fixed_points(const TreeAutomorphism& a) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < a.size(); ++v) {
    if (a(v) == v) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> sorted(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// --- criterion 1 -----------------------------------------------------------

SuiteResult suite_canon(const RunConfig& cfg) {
  SuiteResult r{"canon", "canonical codes agree with brute-force isomorphism", 0, {}};
  const std::size_t bound = capped(cfg, 8);
  std::size_t idx = 0;
  auto check_classes = [&](auto trees, auto code_of, const char* kind, std::size_t n, std::size_t expected) {
    using Tree = typename decltype(trees)::value_type;
    std::map<std::string, std::size_t> rep_of;
    std::vector<Tree> reps;
    each_case(r, trees.size(), [&](std::size_t i) {
      const Tree& t = trees[i];
      std::string code = code_of(t);
      auto [it, fresh] = rep_of.emplace(code, reps.size());
      if (fresh) {
        reps.push_back(t);
        return;
      }
      const Tree& rep = reps[it->second];
      if (!oracle::isomorphic(rep, t)) {
        fail(r, idx + i, std::string(kind) + " trees with equal codes are not isomorphic: " + describe(rep) +
                             " vs " + describe(t));
      } else if (!iso_witness(rep, t)) {
        fail(r, idx + i, std::string(kind) + " isomorphic trees got no witness: " + describe(t));
      }
    });
    idx += trees.size();
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        ++r.cases;
        if (oracle::isomorphic(reps[i], reps[j])) {
          fail(r, idx, std::string(kind) + " isomorphic trees with distinct codes: " + describe(reps[i]) + " vs " +
                           describe(reps[j]));
        }
        ++idx;
      }
    }
    if (expected && reps.size() != expected) {
      fail(r, idx, std::string(kind) + " n=" + std::to_string(n) + ": " + std::to_string(reps.size()) +
                       " classes, expected " + std::to_string(expected));
    }
  };
  for (std::size_t n = 1; n <= bound; ++n) {
    check_classes(oracle::recursive_trees(n), [](const RootedTree& t) { return code_rooted(t).str(); }, "rooted", n,
                  oracle::rooted_trees(n).size());
    check_classes(oracle::labelled_trees(n), [](const UnrootedTree& t) { return code_unrooted(t).str(); },
                  "unrooted", n, 0);
  }
  return r;
}

// --- criteria 2 and 3 ------------------------------------------------------

template <typename Tree>
void check_conjugacy(SuiteResult& r, const Tree& t, std::size_t& idx) {
  TreeRef ref = share(t);
  auto group = as_auts(ref, oracle::automorphisms(t));
  const auto listed = enumerate_aut(ref, kDefaultOracleBound);
  if (as_perms(listed) != as_perms(group)) {
    fail(r, idx, "enumerate_aut disagrees with permutation filtering on " + describe(*ref));
  }
  const auto cls = conjugacy_classes(group);
  for (std::size_t i = 0; i < group.size(); ++i) {
    for (std::size_t j = 0; j < group.size(); ++j, ++idx) {
      ++r.cases;
      try {
        const bool truth = cls[i] == cls[j];
        if (conj_decide(group[i], group[j]) != truth) {
          fail(r, idx, std::string("conj_decide says ") + (truth ? "NO" : "YES") + " on " + describe(*ref) + " " +
                           serialize(group[i]) + " / " + serialize(group[j]));
          continue;
        }
        if (truth) {
          auto w = conj_witness(group[i], group[j]);
          if (!w || !conjugates(*w, group[i], group[j])) fail(r, idx, "no verified witness on " + describe(*ref));
        }
      } catch (const std::exception& e) {
        fail(r, idx, std::string("error: ") + e.what());
      }
    }
  }
}

SuiteResult suite_conj_rooted(const RunConfig& cfg) {
  SuiteResult r{"conj-rooted", "orbit-tree conjugacy agrees with the oracle on rooted trees", 0, {}};
  std::size_t idx = 0;
  for (std::size_t n = 1; n <= capped(cfg, 7); ++n) {
    for (const auto& t : oracle::rooted_trees(n)) check_conjugacy(r, t, idx);
  }
  return r;
}

SuiteResult suite_conj_unrooted(const RunConfig& cfg) {
  SuiteResult r{"conj-unrooted", "center-reduced conjugacy agrees with the oracle on unrooted trees", 0, {}};
  std::size_t idx = 0;
  for (std::size_t n = 1; n <= capped(cfg, 7); ++n) {
    for (const auto& t : oracle::unrooted_trees(n)) check_conjugacy(r, t, idx);
  }
  return r;
}

// --- criterion 4 -----------------------------------------------------------

SuiteResult suite_rooted_embed(const RunConfig& cfg) {
  SuiteResult r{"rooted-embed", "isomorphism of T, T' matches conjugacy of their embedded automorphisms", 0, {}};
  const std::size_t max_n = capped(cfg, 6);
  each_case(r, samples(cfg, 200), [&](std::size_t i) {
    Rng rng = case_rng(cfg, 4, i);
    const RootedTree t = oracle::random_recursive_tree(1 + rng.below(max_n), rng);
    const RootedTree u =
        i % 2 == 0 ? oracle::relabel(t, rng) : oracle::random_recursive_tree(1 + rng.below(max_n), rng);
    const auto d = static_cast<unsigned>(std::max(t.height(), u.height()) + 2);
    const auto w = static_cast<unsigned>(2 * std::max(t.max_branching(), u.max_branching()) + 2);
    const EmbeddedPair p = phi_rooted(t, d, w);
    const EmbeddedPair q = phi_rooted(u, d, w);
    for (const EmbeddedPair* e : {&p, &q}) {
      if (fixed_points(e->phi) != sorted(e->embedding)) fail(r, i, "fixed set differs from the embedded tree");
    }
    const bool iso = code_rooted(t) == code_rooted(u);
    if (iso != oracle::isomorphic(t, u)) fail(r, i, "canonical code disagrees with the isomorphism oracle");
    // Both automorphisms act on equal ambient trees; compare on one of them.
    const TreeAutomorphism qq = validate_aut(p.phi.tree_ref(), {q.phi.perm().begin(), q.phi.perm().end()});
    const bool yes = conj_decide(p.phi, qq);
    if (yes != iso) {
      fail(r, i, std::string("T and T' ") + (iso ? "isomorphic" : "not isomorphic") + " but decider says " +
                     (yes ? "YES" : "NO") + ": " + describe(t) + " / " + describe(u));
    }
    if (yes) {
      auto wit = conj_witness(p.phi, qq);
      if (!wit || !conjugates(*wit, p.phi, qq)) fail(r, i, "no verified witness");
    }
  });
  return r;
}

// --- criterion 5 -----------------------------------------------------------

SuiteResult suite_type_a(const RunConfig& cfg) {
  SuiteResult r{"type-a", "edge-inverting conjugacy via midpoint rooting agrees with the oracle", 0, {}};
  const std::size_t half = std::min<std::size_t>(3, capped(cfg, 7) / 2);
  if (half == 0) return r;
  each_case(r, samples(cfg, 100), [&](std::size_t i) {
    Rng rng = case_rng(cfg, 5, i);
    const auto m = static_cast<Vertex>(1 + rng.below(half));
    const RootedTree base = oracle::random_recursive_tree(m, rng);
    // Two copies of `base` joined at their roots, then renumbered at random.
    std::vector<Edge> edges{{0, m}};
    for (const Edge& e : base.edges()) {
      edges.emplace_back(e.u, e.v);
      edges.emplace_back(e.u + m, e.v + m);
    }
    std::vector<Vertex> perm;
    const UnrootedTree doubled = oracle::relabel(UnrootedTree::from_edges(2 * m, edges), rng, &perm);
    TreeRef ref = share(doubled);
    const auto aut_base = oracle::automorphisms(base);
    auto inverting = [&]() {
      const auto& beta = aut_base[rng.below(aut_base.size())];
      const auto& gamma = aut_base[rng.below(aut_base.size())];
      std::vector<Vertex> img(2 * m);
      for (Vertex x = 0; x < m; ++x) {
        img[perm[x]] = perm[m + beta[x]];
        img[perm[m + x]] = perm[gamma[x]];
      }
      return validate_aut(ref, std::move(img));
    };
    const TreeAutomorphism phi = inverting();
    TreeAutomorphism psi = inverting();
    const auto group = as_auts(ref, oracle::automorphisms(doubled));
    if (rng.coin()) psi = conjugate(group[rng.below(group.size())], phi);
    const bool truth = std::any_of(group.begin(), group.end(), [&](const auto& a) { return conjugates(a, phi, psi); });
    if (decide_type_a(phi, psi) != truth) {
      fail(r, i, std::string("oracle says ") + (truth ? "conjugate" : "not conjugate") + " on " + describe(doubled) +
                     " " + serialize(phi) + " / " + serialize(psi));
    }
  });
  return r;
}

// --- criterion 6 -----------------------------------------------------------

SuiteResult suite_widget(const RunConfig& cfg) {
  SuiteResult r{"widget", "widget codings: degrees, decoding round trip, translation equivariance", 0, {}};
  constexpr unsigned kRadius = 2;
  const auto ball = f2_ball(kRadius);
  each_case(r, samples(cfg, 50), [&](std::size_t i) {
    Rng rng = case_rng(cfg, 6, i);
    GroupWordWindow s{kRadius, {}};
    for (const auto& w : ball) {
      if (rng.coin()) s.members.insert(w);
    }
    const WidgetCoding coding = widget_encode(s);
    for (Vertex v = 0; v < coding.tree.size(); ++v) {
      const auto deg = coding.tree.degree(v);
      if (!coding.provenance[v].rim_stub && deg != 1 && deg != 3) {
        fail(r, i, "vertex " + std::to_string(v) + " has degree " + std::to_string(deg));
        break;
      }
    }
    auto decoded = widget_decode(coding.tree);
    if (auto* bad = std::get_if<NotACoding>(&decoded)) {
      fail(r, i, "decoder rejected a coding: " + bad->reason);
    } else if (std::get<DecodedCoding>(decoded).set != s) {
      fail(r, i, "decoded set differs from " + serialize(s));
    }
    const CanonicalCode here = code_unrooted(widget_region(coding, "", kRadius - 1));
    for (const char* g : {"a", "A", "b", "B"}) {
      GroupWordWindow moved{kRadius, {}};
      for (const auto& w : s.members) {
        std::string gw = f2_multiply(g, w);
        if (gw.size() <= kRadius) moved.members.insert(gw);
      }
      const CanonicalCode there = code_unrooted(widget_region(widget_encode(moved), g, kRadius - 1));
      if (here != there) fail(r, i, std::string("translation by ") + g + " changes the interior coding");
    }
  });
  return r;
}

// --- criterion 7 -----------------------------------------------------------

Vertex embedding_base(const UnrootedTree& t) {
  Center c = center(t);
  return std::holds_alternative<CenterVertex>(c) ? std::get<CenterVertex>(c).v : std::get<CenterEdge>(c).u;
}

SuiteResult suite_unrooted_embed(const RunConfig& cfg) {
  SuiteResult r{"unrooted-embed", "fixed subtrees of the regular-tree embeddings recover T", 0, {}};
  struct Seen {
    CanonicalCode tree, fixed;
  };
  auto run = [&](const UnrootedTree& t, Degree degree, std::size_t i, std::vector<Seen>& seen) {
    const auto radius = static_cast<unsigned>(eccentricity(t, embedding_base(t)) + 1);
    const EmbeddedPair pair = phi_unrooted(t, degree, radius, degree.is_omega() ? 2 : 0);
    const auto fixed = fixed_subtree(ball_presentation(pair));
    if (fixed != sorted(pair.embedding)) fail(r, i, "fixed set differs from the embedded tree " + describe(t));
    const CanonicalCode fc = code_unrooted(induced_subtree(pair.truncation->base(), fixed));
    const CanonicalCode tc = code_unrooted(t);
    if (fc != tc) fail(r, i, "fixed subtree is not isomorphic to " + describe(t));
    for (const auto& s : seen) {
      if ((s.tree == tc) != (s.fixed == fc)) fail(r, i, "fixed subtrees do not separate isomorphism classes");
    }
    seen.push_back({tc, fc});
  };
  std::vector<Seen> finite, omega;
  const std::size_t max_n = capped(cfg, 8);
  if (max_n >= 2) {
    each_case(r, samples(cfg, 50), [&](std::size_t i) {
      Rng rng = case_rng(cfg, 7, i);
      // Grow a {1,3}-tree from an edge by giving a random leaf two children.
      const std::size_t target = 2 + 2 * rng.below(max_n / 2);
      std::vector<Edge> edges{{0, 1}};
      std::vector<std::size_t> deg{1, 1};
      while (deg.size() < target) {
        std::vector<Vertex> leaves;
        for (Vertex v = 0; v < deg.size(); ++v) {
          if (deg[v] == 1) leaves.push_back(v);
        }
        const Vertex l = leaves[rng.below(leaves.size())];
        for (int k = 0; k < 2; ++k) {
          edges.emplace_back(l, static_cast<Vertex>(deg.size()));
          deg.push_back(1);
        }
        deg[l] = 3;
      }
      const UnrootedTree t = oracle::relabel(UnrootedTree::from_edges(target, edges), rng);
      run(t, Degree::finite(3), i, finite);
    });
  }
  const std::size_t base_cases = r.cases;
  each_case(r, samples(cfg, 20), [&](std::size_t i) {
    Rng rng = case_rng(cfg, 70, i);
    run(oracle::random_tree(1 + rng.below(max_n), rng), Degree::omega(), base_cases + i, omega);
  });
  return r;
}

// --- criterion 8 -----------------------------------------------------------

struct Synthetic {
  WordMap phi;
  WordMap conj;        // conjugator applied when presenting
  unsigned reach = 0;  // how far conj moves the basepoint
  unsigned radius = 0;
};

Word random_cyclic_word(std::size_t k, Rng& rng) {
  while (true) {
    Word g;
    for (std::size_t j = 0; j < k; ++j) {
      unsigned c;
      do {
        c = static_cast<unsigned>(rng.below(3));
      } while (!g.empty() && g.back() == c);
      g.push_back(c);
    }
    if (k < 2 || g.front() != g.back()) return g;
  }
}

std::vector<unsigned> random_perm3(Rng& rng) {
  std::vector<unsigned> p{0, 1, 2};
  rng.shuffle(p);
  return p;
}

// A ball-compatible conjugator: a portrait, optionally followed by a step away
// from the basepoint.
std::pair<WordMap, unsigned> random_conjugator(Rng& rng) {
  WordMap a = portrait(3, rng.next());
  if (rng.coin()) return {a, 0};
  return {compose(left_multiply({static_cast<unsigned>(rng.below(3))}), a), 1};
}

SuiteResult suite_tits(const RunConfig& cfg) {
  SuiteResult r{"tits", "classification of synthetic inversions, translations and elliptics", 0, {}};
  const std::size_t count = samples(cfg, 100);
  each_case(r, 3 * count, [&](std::size_t i) {
    Rng rng = case_rng(cfg, 8, i);
    const std::size_t kind = i / count;
    Synthetic s;
    std::size_t k = 0;
    if (kind == 0) {
      s.phi = left_multiply({static_cast<unsigned>(rng.below(3))});
      s.radius = 3;
    } else if (kind == 1) {
      k = 1 + (i % count) % 3;
      if (k == 1) {
        const auto c = static_cast<unsigned>(rng.below(3));
        std::vector<unsigned> pi;
        do {
          pi = random_perm3(rng);
        } while (pi[c] == c);
        s.phi = compose(left_multiply({c}), relabel(pi));
      } else {
        s.phi = left_multiply(random_cyclic_word(k, rng));
      }
      s.radius = static_cast<unsigned>(2 * k + 2);
    } else {
      s.phi = compose(portrait(3, rng.next()), relabel(random_perm3(rng)));
      s.radius = 3;
    }
    std::tie(s.conj, s.reach) = random_conjugator(rng);
    const BallPresentation p = present_conjugate(3, s.radius, s.conj, s.phi, s.reach);
    const TypeVerdict v = classify(p);
    static const char* const expected[] = {"Inversion", "Translation", "Elliptic"};
    if (verdict_name(v) != expected[kind]) {
      fail(r, i, std::string("expected ") + expected[kind] + ", got " + format_verdict(v));
      return;
    }
    if (auto* t = std::get_if<Translation>(&v); t && t->amplitude != k) {
      fail(r, i, "expected amplitude " + std::to_string(k) + ", got " + std::to_string(t->amplitude));
    }
    if (kind == 0) {
      for (Vertex x = 0; x < p.domain_size(); ++x) {
        if (displacement(p, x) % 2 == 0) {
          fail(r, i, "inversion with even displacement at " + std::to_string(x));
          break;
        }
      }
    }
    auto [beta, reach] = random_conjugator(rng);
    const BallPresentation q = present_conjugate(3, s.radius, compose(beta, s.conj), s.phi, s.reach + reach);
    const TypeVerdict w = classify(q);
    const auto amp = [](const TypeVerdict& x) {
      auto* t = std::get_if<Translation>(&x);
      return t ? t->amplitude : 0;
    };
    if (verdict_name(w) != verdict_name(v) || amp(w) != amp(v)) {
      fail(r, i, "verdict changed under conjugation: " + format_verdict(v) + " -> " + format_verdict(w));
    }
  });
  return r;
}

// --- criterion 9 -----------------------------------------------------------

// Every automorphism of the (2, w)-truncation, written down directly: a
// permutation of the depth-1 vertices and one of each child list.
std::vector<std::vector<Vertex>> height_two_automorphisms(const RegularTruncation& t, unsigned w) {
  std::vector<std::vector<unsigned>> perms;
  std::vector<unsigned> p(w);
  std::iota(p.begin(), p.end(), 0u);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<Vertex>> out;
  std::vector<std::size_t> choice(w + 1, 0);
  while (true) {
    std::vector<Vertex> img(t.size());
    img[0] = 0;
    const auto& top = perms[choice[0]];
    for (unsigned i = 0; i < w; ++i) {
      const Vertex c = t.child(0, i);
      const Vertex c2 = t.child(0, top[i]);
      img[c] = c2;
      const auto& low = perms[choice[i + 1]];
      for (unsigned j = 0; j < w; ++j) img[t.child(c, j)] = t.child(c2, low[j]);
    }
    out.push_back(std::move(img));
    std::size_t k = 0;
    while (k <= w && ++choice[k] == perms.size()) choice[k++] = 0;
    if (k > w) break;
  }
  return out;
}

SuiteResult suite_permutation(const RunConfig& cfg) {
  SuiteResult r{"permutation", "cycle types and height invariants against the conjugacy oracle", 0, {}};
  std::size_t idx = 0;
  auto star = [](unsigned w) { return share(truncate_regular(Degree::omega(), 1, w).as_rooted()); };
  auto compare = [&](const TreeAutomorphism& a, const TreeAutomorphism& b) {
    ++r.cases;
    const bool conj = conj_oracle(a, b).has_value();
    if (conj != (cycle_type(a) == cycle_type(b))) {
      fail(r, idx, "cycle types " + to_string(cycle_type(a)) + " / " + to_string(cycle_type(b)) + " but oracle says " +
                       (conj ? "conjugate" : "not conjugate"));
    }
    ++idx;
  };
  for (unsigned w = 1; w <= 4 && w + 1 <= capped(cfg, 5); ++w) {
    const TreeRef t = star(w);
    const auto g = as_auts(t, oracle::automorphisms(std::get<RootedTree>(*t)));
    for (const auto& a : g) {
      for (const auto& b : g) compare(a, b);
    }
  }
  if (capped(cfg, 7) >= 7) {
    const TreeRef t = star(6);
    const auto g = as_auts(t, oracle::automorphisms(std::get<RootedTree>(*t)));
    for (std::size_t i = 0; i < samples(cfg, 200); ++i) {
      Rng rng = case_rng(cfg, 9, i);
      const auto& a = g[rng.below(g.size())];
      const TreeAutomorphism b = rng.coin() ? conjugate(g[rng.below(g.size())], a) : g[rng.below(g.size())];
      compare(a, b);
    }
  }
  // Height two: the largest width <= 3 whose truncation fits the size bound.
  unsigned w = 3;
  while (w > 0 && 1 + w + w * w > (cfg.size_bound ? *cfg.size_bound : 13)) --w;
  if (w == 0) return r;
  const RegularTruncation trunc = truncate_regular(Degree::omega(), 2, w);
  const TreeRef t = share(trunc.as_rooted());
  const auto g = enumerate_aut(t, trunc.size());
  auto direct = height_two_automorphisms(trunc, w);
  std::sort(direct.begin(), direct.end());
  if (as_perms(g) != direct) fail(r, idx, "enumerate_aut disagrees with the direct automorphism list");
  const auto cls = conjugacy_classes(g);
  std::vector<std::string> inv;
  for (const auto& a : g) inv.push_back(height_invariant(a));
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j, ++idx) {
      ++r.cases;
      if ((inv[i] == inv[j]) != (cls[i] == cls[j])) {
        fail(r, idx, "height invariants " + inv[i] + " / " + inv[j] + " disagree with the oracle");
      }
    }
  }
  return r;
}

// --- criterion 10 ----------------------------------------------------------

SuiteResult suite_tz(const RunConfig& cfg) {
  SuiteResult r{"tz", "Z-indexed tree: decoding round trip and the shift law", 0, {}};
  constexpr std::int64_t lo = -4, hi = 4;
  each_case(r, samples(cfg, 100), [&](std::size_t i) {
    Rng rng = case_rng(cfg, 10, i);
    IntegerWindow a{lo, hi, {}};
    for (std::int64_t s = lo; s <= hi; ++s) {
      if (rng.coin()) a.members.insert(s);
    }
    if (tz_decode(tz_phi(a), lo) != a) fail(r, i, "round trip changed " + serialize(a));
    IntegerWindow a0{lo, hi, {}}, a1{lo, hi, {}};
    for (auto s : a.members) {
      if (s < hi) a0.members.insert(s), a1.members.insert(s + 1);
    }
    const TreeAutomorphism p0 = tz_phi(a0);
    const TreeAutomorphism p1 = tz_phi(a1);
    const auto shift = tz_shift(lo, hi, 1);
    for (Vertex x = 0; x < shift.size(); ++x) {
      if (shift[x] == kNoVertex) continue;
      if (shift[p0(x)] != p1(shift[x])) {
        fail(r, i, "shift does not conjugate on the overlap for " + serialize(a0));
        break;
      }
    }
    if (tz_decode(p1, lo) != a1) fail(r, i, "round trip changed the shifted set");
  });
  return r;
}

struct SuiteEntry {
  const char* name;
  SuiteResult (*run)(const RunConfig&);
};

constexpr SuiteEntry kSuites[] = {
    {"canon", suite_canon},
    {"conj-rooted", suite_conj_rooted},
    {"conj-unrooted", suite_conj_unrooted},
    {"rooted-embed", suite_rooted_embed},
    {"type-a", suite_type_a},
    {"widget", suite_widget},
    {"unrooted-embed", suite_unrooted_embed},
    {"tits", suite_tits},
    {"permutation", suite_permutation},
    {"tz", suite_tz},
};

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : kSuites) out.emplace_back(s.name);
  return out;
}

SuiteResult run_suite(const std::string& name, const RunConfig& cfg) {
  validate(cfg);
  for (const auto& s : kSuites) {
    if (name == s.name) return s.run(cfg);
  }
  throw InvalidArgument("unknown suite `" + name + "`");
}

SelftestReport run_selftest(const RunConfig& cfg, const std::optional<std::string>& only) {
  validate(cfg);
  SelftestReport report{cfg, {}};
  for (const auto& s : kSuites) {
    if (!only || *only == s.name) report.suites.push_back(s.run(cfg));
  }
  if (only && report.suites.empty()) throw InvalidArgument("unknown suite `" + *only + "`");
  return report;
}

}  // namespace arbor
