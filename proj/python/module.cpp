#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

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

namespace py = pybind11;
using namespace arbor;

namespace {

// Python-side handle on a shared immutable tree.
struct Tree {
  TreeRef ref;

  bool rooted() const { return is_rooted(*ref); }
  const RootedTree& as_rooted() const {
    if (!rooted()) throw InvalidArgument("expected a rooted tree");
    return std::get<RootedTree>(*ref);
  }
  const UnrootedTree& as_unrooted() const {
    if (rooted()) throw InvalidArgument("expected an unrooted tree");
    return std::get<UnrootedTree>(*ref);
  }
};

Tree wrap(AnyTree t) { return {std::make_shared<const AnyTree>(std::move(t))}; }

std::string code_of(const Tree& t) {
  return t.rooted() ? code_rooted(t.as_rooted()).str() : code_unrooted(t.as_unrooted()).str();
}

std::vector<std::pair<Vertex, Vertex>> edge_list(const Tree& t) {
  std::vector<std::pair<Vertex, Vertex>> out;
  if (t.rooted()) {
    for (const Edge& e : t.as_rooted().edges()) out.emplace_back(e.u, e.v);
  } else {
    for (const Edge& e : t.as_unrooted().edges()) out.emplace_back(e.u, e.v);
  }
  return out;
}

Degree to_degree(const py::object& d) {
  if (py::isinstance<py::str>(d)) return parse_degree(d.cast<std::string>(), 0);
  return Degree::finite(d.cast<unsigned>());
}

std::vector<Vertex> perm_of(const TreeAutomorphism& a) { return {a.perm().begin(), a.perm().end()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Conjugacy, classification and reductions for tree automorphisms";

  static py::exception<Error> base(m, "ArborError", PyExc_ValueError);
  static py::exception<ParseError> parse_error(m, "ParseError", base.ptr());
  static py::exception<BoundExceeded> bound_error(m, "BoundExceeded", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const BoundExceeded& e) {
      py::set_error(bound_error, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  py::class_<Tree>(m, "Tree")
      .def_static(
          "rooted",
          [](const std::vector<std::optional<Vertex>>& parents) {
            std::vector<Vertex> p;
            for (const auto& x : parents) p.push_back(x.value_or(kNoVertex));
            return wrap(RootedTree::from_parents(std::move(p)));
          },
          py::arg("parents"), "Rooted tree from a parent list; parents[0] is None.")
      .def_static(
          "unrooted",
          [](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
            std::vector<Edge> e;
            for (auto [u, v] : edges) e.emplace_back(u, v);
            return wrap(UnrootedTree::from_edges(n, std::move(e)));
          },
          py::arg("n"), py::arg("edges"))
      .def_static("parse", [](const std::string& text) { return wrap(parse_tree(text)); }, py::arg("text"))
      .def_property_readonly("is_rooted", &Tree::rooted)
      .def_property_readonly("size", [](const Tree& t) { return tree_size(*t.ref); })
      .def_property_readonly("edges", &edge_list)
      .def_property_readonly("parents",
                             [](const Tree& t) {
                               std::vector<std::optional<Vertex>> out;
                               for (Vertex p : t.as_rooted().parents()) {
                                 out.push_back(p == kNoVertex ? std::nullopt : std::optional<Vertex>(p));
                               }
                               return out;
                             })
      .def("serialize", [](const Tree& t) { return serialize(*t.ref); })
      .def("code", &code_of, "Canonical code; equal codes mean isomorphic trees.")
      .def("__len__", [](const Tree& t) { return tree_size(*t.ref); })
      .def("__eq__", [](const Tree& a, const Tree& b) { return same_tree(*a.ref, *b.ref); })
      .def("__repr__", [](const Tree& t) {
        return std::string("<Tree ") + (t.rooted() ? "rooted" : "unrooted") + " n=" +
               std::to_string(tree_size(*t.ref)) + ">";
      });

  py::class_<TreeAutomorphism>(m, "Automorphism")
      .def(py::init([](const Tree& t, std::vector<Vertex> perm) { return validate_aut(t.ref, std::move(perm)); }),
           py::arg("tree"), py::arg("perm"))
      .def_static("identity", [](const Tree& t) { return identity_aut(t.ref); })
      .def_property_readonly("perm", &perm_of)
      .def_property_readonly("tree", [](const TreeAutomorphism& a) { return Tree{a.tree_ref()}; })
      .def("__call__", [](const TreeAutomorphism& a, Vertex v) {
        if (v >= a.size()) throw py::index_error("vertex out of range");
        return a(v);
      })
      .def("__len__", &TreeAutomorphism::size)
      .def("__eq__", [](const TreeAutomorphism& a, const TreeAutomorphism& b) { return a == b; })
      .def("is_identity", &TreeAutomorphism::is_identity)
      .def("compose", [](const TreeAutomorphism& a, const TreeAutomorphism& b) { return compose(a, b); },
           "self o other")
      .def("inverse", [](const TreeAutomorphism& a) { return inverse(a); })
      .def("orbits", [](const TreeAutomorphism& a) { return orbits(a); })
      .def("cycle_type", [](const TreeAutomorphism& a) { return cycle_type(a); })
      .def("serialize", [](const TreeAutomorphism& a) { return serialize(a); })
      .def("__repr__", [](const TreeAutomorphism& a) { return "<Automorphism " + serialize_perm(a.perm()) + ">"; });

  m.def("parse_tree", [](const std::string& text) { return wrap(parse_tree(text)); }, py::arg("text"));
  m.def("parse_automorphism",
        [](const Tree& t, const std::string& text) { return validate_aut(t.ref, parse_perm(text)); },
        py::arg("tree"), py::arg("text"));

  m.def(
      "iso_witness",
      [](const Tree& a, const Tree& b) {
        if (a.rooted() != b.rooted()) throw InvalidArgument("cannot compare a rooted tree with an unrooted one");
        return a.rooted() ? iso_witness(a.as_rooted(), b.as_rooted()) : iso_witness(a.as_unrooted(), b.as_unrooted());
      },
      py::arg("a"), py::arg("b"), "An isomorphism a -> b as an image list, or None.");

  m.def(
      "enumerate_aut", [](const Tree& t, std::size_t bound) { return enumerate_aut(t.ref, bound); }, py::arg("tree"),
      py::arg("bound") = kDefaultOracleBound);
  m.def(
      "conj_oracle",
      [](const TreeAutomorphism& phi, const TreeAutomorphism& psi, std::size_t bound) {
        return conj_oracle(phi, psi, bound);
      },
      py::arg("phi"), py::arg("psi"), py::arg("bound") = kDefaultOracleBound);
  m.def("conj_decide", &conj_decide, py::arg("phi"), py::arg("psi"));
  m.def("conj_witness", &conj_witness, py::arg("phi"), py::arg("psi"),
        "A conjugator alpha with alpha o phi o alpha^-1 = psi, or None.");
  m.def(
      "orbit_tree",
      [](const TreeAutomorphism& phi) {
        auto ot = orbit_tree(phi);
        return py::make_tuple(wrap(std::move(ot.tree)), ot.labels);
      },
      py::arg("phi"), "(orbit tree, orbit sizes) for an automorphism of a rooted tree.");

  m.def(
      "classify",
      [](const std::string& ballaut) {
        const TypeVerdict v = classify(parse_ball_presentation(ballaut));
        py::dict out;
        out["type"] = verdict_name(v);
        if (auto* i = std::get_if<Inversion>(&v)) out["edge"] = py::make_tuple(i->edge.u, i->edge.v);
        if (auto* t = std::get_if<Translation>(&v)) out["amplitude"] = t->amplitude, out["axis"] = t->axis;
        if (auto* e = std::get_if<Elliptic>(&v)) out["fixed"] = e->fixed;
        if (auto* u = std::get_if<Undetermined>(&v)) out["reason"] = u->reason;
        return out;
      },
      py::arg("ballaut"), "Classify a ballaut text.");

  m.def(
      "phi_rooted",
      [](const Tree& t, unsigned d, unsigned w) {
        auto p = phi_rooted(t.as_rooted(), d, w);
        return py::make_tuple(p.phi, p.embedding);
      },
      py::arg("tree"), py::arg("depth"), py::arg("width"));
  m.def(
      "phi_unrooted",
      [](const Tree& t, const py::object& degree, unsigned radius, unsigned width) {
        auto p = phi_unrooted(t.as_unrooted(), to_degree(degree), radius, width);
        return py::make_tuple(serialize(ball_presentation(p)), p.embedding);
      },
      py::arg("tree"), py::arg("degree"), py::arg("radius"), py::arg("width") = 0,
      "(ballaut text, embedding); degree is an int >= 3 or 'omega'.");
  m.def("invert_to_rooted", &invert_to_rooted, py::arg("phi"));
  m.def("decide_type_a", &decide_type_a, py::arg("phi"), py::arg("psi"));
  m.def("height_invariant", &height_invariant, py::arg("phi"));

  m.def(
      "widget_encode",
      [](const std::set<std::string>& members, unsigned radius, unsigned degree) {
        return wrap(widget_encode({radius, members}, degree).tree);
      },
      py::arg("members"), py::arg("radius"), py::arg("degree") = 3);
  m.def(
      "widget_decode",
      [](const Tree& t) {
        py::dict out;
        auto r = widget_decode(t.as_unrooted());
        if (auto* bad = std::get_if<NotACoding>(&r)) {
          out["reason"] = bad->reason;
        } else {
          const auto& d = std::get<DecodedCoding>(r);
          out["radius"] = d.set.radius;
          out["members"] = d.set.members;
        }
        return out;
      },
      py::arg("tree"), "{'radius', 'members'} for a coding, {'reason'} otherwise.");

  m.def("tz_build", [](std::int64_t lo, std::int64_t hi) { return wrap(tz_build(lo, hi)); }, py::arg("lo"),
        py::arg("hi"));
  m.def(
      "tz_phi",
      [](std::int64_t lo, std::int64_t hi, const std::set<std::int64_t>& members) {
        return tz_phi({lo, hi, members});
      },
      py::arg("lo"), py::arg("hi"), py::arg("members"));
  m.def(
      "tz_decode",
      [](const TreeAutomorphism& phi, std::int64_t lo) {
        auto a = tz_decode(phi, lo);
        return py::make_tuple(a.lo, a.hi, a.members);
      },
      py::arg("phi"), py::arg("lo"));

  m.def(
      "run_selftest",
      [](std::optional<std::uint64_t> seed, std::optional<std::size_t> size_bound,
         std::optional<std::size_t> samples, std::optional<std::string> suite) {
        RunConfig cfg;
        if (seed) cfg.seed = *seed;
        cfg.size_bound = size_bound;
        cfg.sample_count = samples;
        SelftestReport report = [&] {
          py::gil_scoped_release release;
          return run_selftest(cfg, suite);
        }();
        return py::make_tuple(report.passed(), report.render());
      },
      py::arg("seed") = py::none(), py::arg("size_bound") = py::none(), py::arg("samples") = py::none(),
      py::arg("suite") = py::none(), "(passed, report text)");
  m.attr("suite_names") = suite_names();
  m.attr("DEFAULT_SEED") = kDefaultSeed;
}
