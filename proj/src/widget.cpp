#include "arbor/widget.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>

#include "arbor/canon.hpp"
#include "arbor/error.hpp"
#include "arbor/text_format.hpp"

namespace arbor {

namespace {

constexpr std::string_view kLetters = "aAbB";

char inverse_letter(char c) {
  switch (c) {
    case 'a': return 'A';
    case 'A': return 'a';
    case 'b': return 'B';
    case 'B': return 'b';
    default: throw InvalidArgument(std::string("not a free group letter: ") + c);
  }
}

bool is_letter(char c) { return kLetters.find(c) != std::string_view::npos; }

bool by_length(const std::string& x, const std::string& y) {
  return x.size() != y.size() ? x.size() < y.size() : x < y;
}

}  // namespace

bool is_reduced_word(std::string_view w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!is_letter(w[i])) return false;
    if (i > 0 && w[i - 1] == inverse_letter(w[i])) return false;
  }
  return true;
}

std::string f2_inverse(std::string_view w) {
  std::string out;
  for (std::size_t i = w.size(); i-- > 0;) out += inverse_letter(w[i]);
  return out;
}

std::string f2_multiply(std::string_view g, std::string_view w) {
  std::string out(g);
  for (char c : w) {
    if (!out.empty() && out.back() == inverse_letter(c)) {
      out.pop_back();
    } else {
      out += c;
    }
  }
  return out;
}

std::vector<std::string> f2_ball(unsigned r) {
  std::vector<std::string> out{""};
  for (std::size_t head = 0; head < out.size(); ++head) {
    if (out[head].size() == r) continue;
    for (char c : kLetters) {
      if (!out[head].empty() && out[head].back() == inverse_letter(c)) continue;
      out.push_back(out[head] + c);
    }
  }
  return out;
}

void validate(const GroupWordWindow& s) {
  for (const auto& w : s.members) {
    if (!is_reduced_word(w)) throw InvalidArgument("word `" + w + "` is not reduced");
    if (w.size() > s.radius) throw InvalidArgument("word `" + w + "` is longer than the radius");
  }
}

std::string serialize(const GroupWordWindow& s) {
  std::vector<std::string> words(s.members.begin(), s.members.end());
  std::sort(words.begin(), words.end(), by_length);
  std::string out = "f2set " + std::to_string(s.radius) + " " + std::to_string(words.size()) + "\n";
  for (const auto& w : words) out += (w.empty() ? "e" : w) + "\n";
  return out;
}

GroupWordWindow parse_f2set(std::string_view text) {
  LineReader in(text);
  auto head = in.next("f2set header");
  if (head.empty() || head[0] != "f2set") throw ParseError(in.line(), "expected `f2set <r> <count>`");
  expect_tokens(head, 3, in.line(), "f2set header");
  GroupWordWindow s;
  const auto r = parse_uint(head[1], in.line());
  if (r > 32) throw ParseError(in.line(), "radius too large");
  s.radius = static_cast<unsigned>(r);
  const auto count = parse_uint(head[2], in.line());
  for (std::uint64_t i = 0; i < count; ++i) {
    auto tok = in.next("word");
    expect_tokens(tok, 1, in.line(), "word");
    std::string w = tok[0] == "e" ? "" : std::string(tok[0]);
    if (!is_reduced_word(w)) throw ParseError(in.line(), "not a reduced word over a, b, A, B");
    if (w.size() > s.radius) throw ParseError(in.line(), "word longer than the radius");
    if (!s.members.insert(w).second) throw ParseError(in.line(), "duplicate word");
  }
  in.expect_end();
  return s;
}

namespace {

class CodingBuilder {
 public:
  Vertex add(WidgetProvenance p) {
    prov_.push_back(std::move(p));
    return static_cast<Vertex>(prov_.size() - 1);
  }
  void connect(Vertex u, Vertex v) { edges_.emplace_back(u, v); }
  Vertex leaf(Vertex at) {
    Vertex v = add(prov_[at]);
    prov_[v].rim_stub = false;
    connect(at, v);
    return v;
  }
  std::size_t size() const { return prov_.size(); }
  WidgetProvenance& prov(Vertex v) { return prov_[v]; }

  WidgetCoding finish(unsigned radius, unsigned n) {
    // Pad to degree n: every vertex of degree >= 2 gets n-3 more leaves.
    std::vector<std::size_t> deg(prov_.size(), 0);
    for (const Edge& e : edges_) ++deg[e.u], ++deg[e.v];
    const std::size_t base = prov_.size();
    for (Vertex v = 0; v < base; ++v) {
      if (deg[v] < 2) continue;
      for (unsigned k = 3; k < n; ++k) leaf(v);
    }
    WidgetCoding out{UnrootedTree::from_edges(prov_.size(), std::move(edges_)), std::move(prov_), radius, n};
    return out;
  }

 private:
  std::vector<WidgetProvenance> prov_;
  std::vector<Edge> edges_;
};

struct Ports {
  std::array<Vertex, 4> p{};  // in-a, in-b, out-a, out-b attach at p0, p1, p2, p3
  std::array<bool, 4> used{};
};

}  // namespace

WidgetCoding widget_encode(const GroupWordWindow& s, unsigned n) {
  if (s.radius < 1) throw InvalidArgument("widget coding needs radius >= 1");
  if (n < 3) throw InvalidArgument("widget coding needs degree >= 3");
  validate(s);
  const auto words = f2_ball(s.radius);
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);

  CodingBuilder b;
  std::vector<Ports> ports(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    auto& P = ports[i].p;
    for (auto& v : P) v = b.add({words[i], 0, false});
    b.connect(P[0], P[1]);
    b.connect(P[1], P[2]);
    b.connect(P[2], P[3]);
    const Vertex pendant = b.leaf(P[0]);
    b.leaf(P[3]);
    if (s.members.count(words[i])) {
      b.leaf(pendant);
      b.leaf(pendant);
    }
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (char x : {'a', 'b'}) {
      auto it = index.find(f2_multiply(words[i], std::string(1, x)));
      if (it == index.end()) continue;
      const std::size_t length = x == 'a' ? 4 : 5;
      const std::size_t mark = x == 'a' ? 2 : 3;
      Vertex prev = ports[i].p[x == 'a' ? 2 : 3];
      ports[i].used[x == 'a' ? 2 : 3] = true;
      for (std::size_t k = 0; k < length; ++k) {
        Vertex sv = b.add({words[i], x, false});
        b.connect(prev, sv);
        const Vertex pendant = b.leaf(sv);
        if (k == mark) {
          b.leaf(pendant);
          b.leaf(pendant);
        }
        prev = sv;
      }
      auto& target = ports[it->second];
      b.connect(prev, target.p[x == 'a' ? 0 : 1]);
      target.used[x == 'a' ? 0 : 1] = true;
    }
  }
  for (auto& pt : ports) {
    for (std::size_t k = 0; k < 4; ++k) b.prov(pt.p[k]).rim_stub = !pt.used[k];
  }
  return b.finish(s.radius, n);
}

namespace {

enum class Role { A, B, C };

struct Group {
  std::vector<Vertex> members;  // p0-p1-p2 for in-S elements, the leafless pair otherwise
  bool in_s = false;
};

class Decoder {
 public:
  explicit Decoder(const UnrootedTree& t) : t_(t) {}

  std::variant<DecodedCoding, NotACoding> run() {
    try {
      return decode();
    } catch (const NotACoding& e) {
      return e;
    }
  }

 private:
  [[noreturn]] static void reject(std::string why) { throw NotACoding{std::move(why)}; }

  bool is_leaf(Vertex v) const { return t_.degree(v) == 1; }
  bool is_cherry(Vertex v) const { return !is_leaf(v) && leaves_[v] == n_ - 1 && t_.degree(v) == n_; }
  bool is_pair(Vertex v) const { return group_of_[v] != kNone; }
  // Vertices a spine walk may step onto.
  bool is_body(Vertex v) const { return !is_leaf(v) && !is_cherry(v); }

  std::variant<DecodedCoding, NotACoding> decode() {
    n_ = t_.max_degree();
    if (n_ < 3) reject("maximum degree below 3");
    const std::size_t N = t_.size();
    leaves_.assign(N, 0);
    for (Vertex v = 0; v < N; ++v) {
      for (Vertex u : t_.neighbors(v)) leaves_[v] += is_leaf(u);
    }
    find_groups();
    find_edges();
    orient();
    return assemble();
  }

  // Adjacent non-leaves with exactly n-3 leaf neighbours only occur inside
  // element widgets; a 2-vertex group is an element outside S, a 3-vertex
  // group (whose end touches a grown pendant) an element in S.
  void find_groups() {
    const std::size_t N = t_.size();
    auto quiet = [&](Vertex v) { return !is_leaf(v) && leaves_[v] == n_ - 3; };
    std::vector<char> cand(N, 0);
    for (Vertex v = 0; v < N; ++v) {
      if (!quiet(v)) continue;
      for (Vertex u : t_.neighbors(v)) {
        if (quiet(u)) cand[v] = 1;
      }
    }
    group_of_.assign(N, kNone);
    for (Vertex s = 0; s < N; ++s) {
      if (!cand[s] || group_of_[s] != kNone) continue;
      Group g;
      std::vector<Vertex> stack{s};
      group_of_[s] = groups_.size();
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        g.members.push_back(v);
        for (Vertex u : t_.neighbors(v)) {
          if (cand[u] && group_of_[u] == kNone) {
            group_of_[u] = groups_.size();
            stack.push_back(u);
          }
        }
      }
      if (g.members.size() == 2) {
        std::sort(g.members.begin(), g.members.end());
      } else if (g.members.size() == 3) {
        // Order as the path p0-p1-p2 with p0 next to the grown pendant.
        Vertex mid = kNoVertex;
        for (Vertex v : g.members) {
          std::size_t inside = 0;
          for (Vertex u : t_.neighbors(v)) inside += group_of_[u] == group_of_[v];
          if (inside == 2) mid = v;
        }
        if (mid == kNoVertex) reject("leafless group is not a path");
        std::vector<Vertex> ends;
        for (Vertex v : g.members) {
          if (v != mid) ends.push_back(v);
        }
        auto touches_cherry = [&](Vertex v) {
          return std::any_of(t_.neighbors(v).begin(), t_.neighbors(v).end(), [&](Vertex u) { return is_cherry(u); });
        };
        if (touches_cherry(ends[0]) == touches_cherry(ends[1])) reject("cannot orient an element widget of S");
        if (touches_cherry(ends[1])) std::swap(ends[0], ends[1]);
        g.members = {ends[0], mid, ends[1]};
        g.in_s = true;
      } else {
        reject("leafless group of size " + std::to_string(g.members.size()));
      }
      groups_.push_back(std::move(g));
    }
    if (groups_.empty()) reject("no element widgets found");
  }

  struct Walk {
    std::size_t steps;
    Vertex reached;
  };

  Walk walk(Vertex from, Vertex start) const {
    Vertex prev = from;
    Vertex cur = start;
    std::size_t steps = 0;
    while (!is_pair(cur)) {
      if (++steps > 5) reject("edge spine too long");
      Vertex next = kNoVertex;
      for (Vertex u : t_.neighbors(cur)) {
        if (u == prev || !is_body(u)) continue;
        if (next != kNoVertex) reject("edge spine branches");
        next = u;
      }
      if (next == kNoVertex) reject("edge spine ends without reaching an element widget");
      prev = cur;
      cur = next;
    }
    return {steps, cur};
  }

  struct RawEdge {
    char label;
    Vertex x, y;        // reached element-widget vertices on the two sides
    std::size_t sx, sy; // spine steps on each side
  };

  // Every spine vertex whose pendant grew two leaves marks one edge widget.
  void find_edges() {
    for (Vertex m = 0; m < t_.size(); ++m) {
      if (is_leaf(m) || is_pair(m) || is_cherry(m)) continue;
      std::size_t cherries = 0;
      std::vector<Vertex> body;
      for (Vertex u : t_.neighbors(m)) {
        if (is_cherry(u)) ++cherries;
        else if (!is_leaf(u)) body.push_back(u);
      }
      if (cherries == 0) continue;
      if (cherries != 1 || body.size() != 2 || leaves_[m] != n_ - 3) reject("malformed edge mark");
      Walk w1 = walk(m, body[0]);
      Walk w2 = walk(m, body[1]);
      if (w1.steps < w2.steps) std::swap(w1, w2);
      if (w1.steps == 4 && w2.steps == 1) {
        raw_.push_back({'b', w1.reached, w2.reached, 4, 1});
      } else if (w1.steps == 2 && (w2.steps == 1 || w2.steps == 2)) {
        raw_.push_back({'a', w1.reached, w2.reached, 2, w2.steps});
      } else {
        reject("edge spine of unexpected shape");
      }
    }
  }

  // role(v) for element-widget vertices. 2-groups carry an orientation bit:
  // false means the smaller vertex is p1 (in-b port), true means it is p2.
  std::optional<Role> role(Vertex v) const {
    const Group& g = groups_[group_of_[v]];
    if (g.in_s) return v == g.members[0] ? Role::A : v == g.members[1] ? Role::B : Role::C;
    const auto& o = orient_[group_of_[v]];
    if (!o) return std::nullopt;
    return (v == g.members[1]) != *o ? Role::C : Role::B;
  }

  void require(Vertex v, Role want) {
    const std::size_t gi = group_of_[v];
    if (groups_[gi].in_s || orient_[gi]) {
      if (role(v) != want) reject("inconsistent element widget orientation");
      return;
    }
    if (want == Role::A) reject("edge reaches the wrong end of an element widget");
    orient_[gi] = (v == groups_[gi].members[1]) != (want == Role::C);
    queue_.push_back(gi);
  }

  // Fixes 2-group orientations: b-edges and a-edges into S give fixed roles,
  // the remaining a-edges force opposite roles at their two ends.
  void orient() {
    orient_.assign(groups_.size(), std::nullopt);
    std::vector<std::vector<std::size_t>> touching(groups_.size());
    for (std::size_t i = 0; i < raw_.size(); ++i) {
      const RawEdge& e = raw_[i];
      if (e.label == 'b') {
        require(e.x, Role::C);
        require(e.y, Role::B);
      } else if (e.sy == 1) {
        require(e.x, Role::C);
        require(e.y, Role::A);
      } else {
        touching[group_of_[e.x]].push_back(i);
        touching[group_of_[e.y]].push_back(i);
      }
    }
    for (std::size_t seed = 0;; ++seed) {
      while (!queue_.empty()) {
        const std::size_t gi = queue_.back();
        queue_.pop_back();
        for (std::size_t i : touching[gi]) {
          const RawEdge& e = raw_[i];
          for (auto [here, there] : {std::pair{e.x, e.y}, std::pair{e.y, e.x}}) {
            if (group_of_[here] != gi) continue;
            auto r = role(here);
            if (r == Role::A) reject("edge reaches the wrong end of an element widget");
            require(there, *r == Role::C ? Role::B : Role::C);
          }
        }
      }
      while (seed < groups_.size() && (groups_[seed].in_s || orient_[seed])) ++seed;
      if (seed >= groups_.size()) break;
      orient_[seed] = false;
      queue_.push_back(seed);
    }
  }

  DecodedCoding assemble() {
    const std::size_t G = groups_.size();
    struct Arc {
      std::size_t to;
      char letter;  // read along this direction
    };
    std::vector<std::vector<Arc>> adj(G);
    for (const RawEdge& e : raw_) {
      Vertex src = e.x, dst = e.y;
      if (role(src) != Role::C) std::swap(src, dst);
      if (role(src) != Role::C) reject("edge has no source end");
      const std::size_t gs = group_of_[src], gd = group_of_[dst];
      if (gs == gd) reject("edge widget loops back to its element");
      adj[gs].push_back({gd, e.label});
      adj[gd].push_back({gs, static_cast<char>(e.label == 'a' ? 'A' : 'B')});
    }
    if (raw_.size() + 1 != G) reject("element and edge widget counts do not form a tree");

    auto bfs = [&](std::size_t from) {
      std::vector<std::size_t> dist(G, kNone);
      std::vector<std::size_t> order{from};
      dist[from] = 0;
      for (std::size_t h = 0; h < order.size(); ++h) {
        for (const Arc& a : adj[order[h]]) {
          if (dist[a.to] == kNone) dist[a.to] = dist[order[h]] + 1, order.push_back(a.to);
        }
      }
      if (order.size() != G) reject("element widgets are not connected by edge widgets");
      return dist;
    };
    std::size_t best = kNone, center = 0, ties = 0;
    for (std::size_t g = 0; g < G; ++g) {
      auto d = bfs(g);
      const std::size_t ecc = *std::max_element(d.begin(), d.end());
      if (ecc < best) best = ecc, center = g, ties = 1;
      else if (ecc == best) ++ties;
    }
    if (ties != 1 || best < 1) reject("coded graph has no central element");

    std::vector<std::string> word(G);
    std::vector<char> seen(G, 0);
    std::vector<std::size_t> order{center};
    seen[center] = 1;
    for (std::size_t h = 0; h < order.size(); ++h) {
      const std::size_t g = order[h];
      for (const Arc& a : adj[g]) {
        if (seen[a.to]) continue;
        seen[a.to] = 1;
        word[a.to] = f2_multiply(word[g], std::string(1, a.letter));
        if (word[a.to].size() != word[g].size() + 1) reject("coded graph is not a free group ball");
        order.push_back(a.to);
      }
    }

    DecodedCoding out;
    out.set.radius = static_cast<unsigned>(best);
    for (std::size_t g = 0; g < G; ++g) {
      if (groups_[g].in_s) out.set.members.insert(word[g]);
    }
    for (const RawEdge& e : raw_) {
      Vertex src = e.x, dst = e.y;
      if (role(src) != Role::C) std::swap(src, dst);
      out.edges.push_back({word[group_of_[src]], e.label, word[group_of_[dst]]});
    }
    std::sort(out.edges.begin(), out.edges.end(), [](const CayleyEdge& p, const CayleyEdge& q) {
      return by_length(p.from, q.from) || (p.from == q.from && p.label < q.label);
    });

    const WidgetCoding again = widget_encode(out.set, static_cast<unsigned>(n_));
    if (code_unrooted(again.tree) != code_unrooted(t_)) reject("tree differs from the coding of the decoded set");
    return out;
  }

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  const UnrootedTree& t_;
  std::size_t n_ = 0;
  std::vector<std::size_t> leaves_;
  std::vector<std::size_t> group_of_;
  std::vector<Group> groups_;
  std::vector<RawEdge> raw_;
  std::vector<std::optional<bool>> orient_;
  std::vector<std::size_t> queue_;
};

}  // namespace

std::variant<DecodedCoding, NotACoding> widget_decode(const UnrootedTree& t) { return Decoder(t).run(); }

UnrootedTree widget_region(const WidgetCoding& coding, std::string_view center, unsigned radius) {
  auto near = [&](const std::string& w) { return f2_multiply(f2_inverse(center), w).size() <= radius; };
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < coding.provenance.size(); ++v) {
    const auto& p = coding.provenance[v];
    bool in = near(p.word);
    if (in && p.edge) in = near(f2_multiply(p.word, std::string(1, p.edge)));
    if (in) keep.push_back(v);
  }
  return induced_subtree(coding.tree, keep);
}

}  // namespace arbor
