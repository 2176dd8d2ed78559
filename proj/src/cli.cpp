#include "arbor/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "arbor/autom.hpp"
#include "arbor/canon.hpp"
#include "arbor/error.hpp"
#include "arbor/orbit_tree.hpp"
#include "arbor/reductions.hpp"
#include "arbor/selftest.hpp"
#include "arbor/text_format.hpp"
#include "arbor/tits.hpp"
#include "arbor/tz.hpp"
#include "arbor/widget.hpp"

namespace arbor {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read `" + path + "`");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Parse errors are reported against the file they came from.
template <typename F>
auto parse_file(const std::string& path, F parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

AnyTree read_tree(const std::string& path) {
  return parse_file(path, [](const std::string& s) { return parse_tree(s); });
}

template <typename Tree>
Tree read_as(const std::string& path, const char* kind) {
  AnyTree t = read_tree(path);
  if (!std::holds_alternative<Tree>(t)) throw InvalidArgument(path + ": expected a " + kind + " tree");
  return std::get<Tree>(std::move(t));
}

TreeAutomorphism read_aut(const TreeRef& tree, const std::string& path) {
  auto perm = parse_file(path, [](const std::string& s) { return parse_perm(s); });
  return validate_aut(tree, std::move(perm));
}

const char* yes_no(bool b) { return b ? "YES\n" : "NO\n"; }

std::uint64_t default_seed() {
  if (const char* env = std::getenv("ARBOR_SEED")) {
    try {
      return parse_uint(env, 0);
    } catch (const ParseError&) {
      throw InvalidArgument(std::string("ARBOR_SEED is not a decimal seed: `") + env + "`");
    }
  }
  return kDefaultSeed;
}

std::string embedding_block(const std::vector<Vertex>& embedding) {
  std::string out = "embedding " + std::to_string(embedding.size()) + "\n";
  for (std::size_t i = 0; i < embedding.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(embedding[i]);
  }
  return out + "\n";
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conjugacy, classification and reductions for tree automorphisms", "arbor"};
  app.require_subcommand(1);
  std::function<int()> action;

  // canon
  std::vector<std::string> canon_files;
  auto* canon = app.add_subcommand("canon", "Print the canonical code of each tree file");
  canon->add_option("files", canon_files, "Tree files")->required();
  canon->callback([&] {
    action = [&] {
      for (const auto& f : canon_files) {
        const AnyTree t = read_tree(f);
        out << std::visit(
                   [](const auto& tree) {
                     if constexpr (std::is_same_v<std::decay_t<decltype(tree)>, RootedTree>) {
                       return code_rooted(tree).str();
                     } else {
                       return code_unrooted(tree).str();
                     }
                   },
                   t)
            << "\n";
      }
      return 0;
    };
  });

  // iso
  std::string iso_a, iso_b;
  bool iso_witness_flag = false;
  auto* iso = app.add_subcommand("iso", "Decide whether two trees are isomorphic");
  iso->add_option("first", iso_a)->required();
  iso->add_option("second", iso_b)->required();
  iso->add_flag("--witness", iso_witness_flag, "Also print an isomorphism in aut format");
  iso->callback([&] {
    action = [&] {
      const AnyTree a = read_tree(iso_a);
      const AnyTree b = read_tree(iso_b);
      if (a.index() != b.index()) throw InvalidArgument("cannot compare a rooted tree with an unrooted one");
      auto w = std::holds_alternative<RootedTree>(a)
                   ? iso_witness(std::get<RootedTree>(a), std::get<RootedTree>(b))
                   : iso_witness(std::get<UnrootedTree>(a), std::get<UnrootedTree>(b));
      out << yes_no(w.has_value());
      if (w && iso_witness_flag) out << serialize_perm(*w);
      return 0;
    };
  });

  // conj
  std::string conj_tree, conj_phi, conj_psi;
  bool conj_witness_flag = false;
  auto* conj = app.add_subcommand("conj", "Decide whether two automorphisms of a tree are conjugate");
  conj->add_option("tree", conj_tree)->required();
  conj->add_option("phi", conj_phi)->required();
  conj->add_option("psi", conj_psi)->required();
  conj->add_flag("--witness", conj_witness_flag, "Also print a conjugator alpha with alpha phi alpha^-1 = psi");
  conj->callback([&] {
    action = [&] {
      const TreeRef tree = std::make_shared<const AnyTree>(read_tree(conj_tree));
      const TreeAutomorphism phi = read_aut(tree, conj_phi);
      const TreeAutomorphism psi = read_aut(tree, conj_psi);
      if (!conj_witness_flag) {
        out << yes_no(conj_decide(phi, psi));
        return 0;
      }
      auto w = conj_witness(phi, psi);
      out << yes_no(w.has_value());
      if (w) out << serialize(*w);
      return 0;
    };
  });

  // orbit-tree
  std::string ot_tree, ot_phi;
  auto* ot = app.add_subcommand("orbit-tree", "Print the labeled orbit tree of an automorphism of a rooted tree");
  ot->add_option("tree", ot_tree)->required();
  ot->add_option("phi", ot_phi)->required();
  ot->callback([&] {
    action = [&] {
      const TreeRef tree = share(read_as<RootedTree>(ot_tree, "rooted"));
      out << serialize(orbit_tree(read_aut(tree, ot_phi)));
      return 0;
    };
  });

  // classify
  std::string cl_file;
  auto* cl = app.add_subcommand("classify", "Classify a ball-presented automorphism of a regular tree");
  cl->add_option("ballaut", cl_file)->required();
  cl->callback([&] {
    action = [&] {
      out << format_verdict(classify(parse_file(cl_file, [](const std::string& s) {
        return parse_ball_presentation(s);
      })));
      return 0;
    };
  });

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Run one of the reduction constructions");
  reduce->require_subcommand(1);

  std::string re_tree;
  std::optional<unsigned> re_depth, re_width;
  auto* re = reduce->add_subcommand("rooted-embed", "Embed a rooted tree as the fixed set of an automorphism");
  re->add_option("tree", re_tree)->required();
  re->add_option("--depth", re_depth, "Truncation depth (default height + 2)");
  re->add_option("--width", re_width, "Truncation width, even (default 2 * branching + 2)");
  re->callback([&] {
    action = [&] {
      const RootedTree t = read_as<RootedTree>(re_tree, "rooted");
      const auto d = re_depth.value_or(static_cast<unsigned>(t.height() + 2));
      const auto w = re_width.value_or(static_cast<unsigned>(2 * t.max_branching() + 2));
      const EmbeddedPair p = phi_rooted(t, d, w);
      out << serialize(p.phi.tree()) << serialize(p.phi) << embedding_block(p.embedding);
      return 0;
    };
  });

  std::string ta_tree, ta_phi, ta_psi;
  auto* ta = reduce->add_subcommand(
      "type-a", "Root an edge-inverting automorphism at its edge midpoint, or decide conjugacy of two");
  ta->add_option("tree", ta_tree)->required();
  ta->add_option("phi", ta_phi)->required();
  ta->add_option("psi", ta_psi, "Second automorphism; prints YES/NO instead");
  ta->callback([&] {
    action = [&] {
      const TreeRef tree = share(read_as<UnrootedTree>(ta_tree, "unrooted"));
      const TreeAutomorphism phi = read_aut(tree, ta_phi);
      if (!ta_psi.empty()) {
        out << yes_no(decide_type_a(phi, read_aut(tree, ta_psi)));
        return 0;
      }
      const TreeAutomorphism rooted = invert_to_rooted(phi);
      out << serialize(rooted.tree()) << serialize(rooted);
      return 0;
    };
  });

  auto* widget = reduce->add_subcommand("widget", "Widget codings of free-group subsets");
  widget->require_subcommand(1);
  std::string we_file;
  unsigned we_degree = 3;
  auto* we = widget->add_subcommand("encode", "Encode an f2set file as a tree");
  we->add_option("f2set", we_file)->required();
  we->add_option("--degree", we_degree, "Leaf mark n >= 3 (default 3)");
  we->callback([&] {
    action = [&] {
      const auto s = parse_file(we_file, [](const std::string& x) { return parse_f2set(x); });
      out << serialize(widget_encode(s, we_degree).tree);
      return 0;
    };
  });
  std::string wd_file;
  auto* wd = widget->add_subcommand("decode", "Recover the f2set from a coding tree");
  wd->add_option("tree", wd_file)->required();
  wd->callback([&] {
    action = [&] {
      auto r = widget_decode(read_as<UnrootedTree>(wd_file, "unrooted"));
      if (auto* bad = std::get_if<NotACoding>(&r)) {
        out << "NotACoding " << bad->reason << "\n";
      } else {
        out << serialize(std::get<DecodedCoding>(r).set);
      }
      return 0;
    };
  });

  std::string ue_tree, ue_degree = "3";
  std::optional<unsigned> ue_radius;
  unsigned ue_width = 2;
  auto* ue = reduce->add_subcommand("unrooted-embed",
                                    "Embed an unrooted tree as the fixed set of a regular-tree automorphism");
  ue->add_option("tree", ue_tree)->required();
  ue->add_option("--degree", ue_degree, "Regular degree n >= 3 or omega (default 3)");
  ue->add_option("--radius", ue_radius, "Ball radius (default eccentricity of the basepoint + 1)");
  ue->add_option("--width", ue_width, "Spare branches per vertex for omega (default 2)");
  ue->callback([&] {
    action = [&] {
      const UnrootedTree t = read_as<UnrootedTree>(ue_tree, "unrooted");
      const Degree degree = parse_degree(ue_degree, 0);
      unsigned radius;
      if (ue_radius) {
        radius = *ue_radius;
      } else {
        const Center c = center(t);
        const Vertex b = std::holds_alternative<CenterVertex>(c) ? std::get<CenterVertex>(c).v
                                                                 : std::get<CenterEdge>(c).u;
        radius = static_cast<unsigned>(eccentricity(t, b) + 1);
      }
      out << serialize(ball_presentation(phi_unrooted(t, degree, radius, degree.is_omega() ? ue_width : 0)));
      return 0;
    };
  });

  auto* tz = reduce->add_subcommand("tz", "The Z-indexed decorated tree");
  tz->require_subcommand(1);
  std::int64_t tz_lo = -4, tz_hi = 4;
  auto* tzb = tz->add_subcommand("build", "Print the window lo..hi");
  tzb->add_option("--lo", tz_lo)->required();
  tzb->add_option("--hi", tz_hi)->required();
  tzb->callback([&] {
    action = [&] {
      out << serialize(tz_build(tz_lo, tz_hi));
      return 0;
    };
  });
  std::string tzp_file;
  auto* tzp = tz->add_subcommand("phi", "Print the window tree and the automorphism of a zset");
  tzp->add_option("zset", tzp_file)->required();
  tzp->callback([&] {
    action = [&] {
      const auto a = parse_file(tzp_file, [](const std::string& x) { return parse_zset(x); });
      const TreeAutomorphism phi = tz_phi(a);
      out << serialize(phi.tree()) << serialize(phi);
      return 0;
    };
  });
  std::string tzd_tree, tzd_phi;
  auto* tzd = tz->add_subcommand("decode", "Recover the zset from an automorphism of a window");
  tzd->add_option("tree", tzd_tree)->required();
  tzd->add_option("phi", tzd_phi)->required();
  tzd->add_option("--lo", tz_lo)->required();
  tzd->callback([&] {
    action = [&] {
      const TreeRef tree = share(read_as<UnrootedTree>(tzd_tree, "unrooted"));
      out << serialize(tz_decode(read_aut(tree, tzd_phi), tz_lo));
      return 0;
    };
  });

  std::string hi_tree, hi_phi;
  auto* hi = reduce->add_subcommand("height-inv", "Conjugacy invariant of an automorphism of a level tree");
  hi->add_option("tree", hi_tree)->required();
  hi->add_option("phi", hi_phi)->required();
  hi->callback([&] {
    action = [&] {
      const TreeRef tree = share(read_as<RootedTree>(hi_tree, "rooted"));
      out << height_invariant(read_aut(tree, hi_phi)) << "\n";
      return 0;
    };
  });

  // selftest
  std::optional<std::uint64_t> st_seed;
  std::optional<std::size_t> st_bound, st_samples;
  std::optional<std::string> st_suite;
  auto* st = app.add_subcommand("selftest", "Run the seeded oracle suites");
  st->add_option("--seed", st_seed, "Seed (default $ARBOR_SEED or " + std::to_string(kDefaultSeed) + ")");
  st->add_option("--size-bound", st_bound, "Vertex cap for oracle-backed suites (1..10)");
  st->add_option("--samples", st_samples, "Random cases per randomized suite");
  st->add_option("--suite", st_suite, "Run only this suite");
  st->callback([&] {
    action = [&] {
      RunConfig cfg;
      cfg.seed = st_seed ? *st_seed : default_seed();
      cfg.size_bound = st_bound;
      cfg.sample_count = st_samples;
      const SelftestReport report = run_selftest(cfg, st_suite);
      out << report.render();
      return report.passed() ? 0 : 1;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  try {
    return action ? action() : 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace arbor
