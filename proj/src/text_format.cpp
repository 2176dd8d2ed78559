#include "arbor/text_format.hpp"

#include <charconv>
#include <limits>

#include "arbor/error.hpp"

namespace arbor {

LineReader::LineReader(std::string_view text) {
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines_.push_back(text.substr(start));
      break;
    }
    lines_.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  while (!lines_.empty() && lines_.back().empty()) lines_.pop_back();
}

bool LineReader::done() const { return pos_ >= lines_.size(); }

void LineReader::expect_end() const {
  if (!done()) throw ParseError(pos_ + 1, "unexpected trailing content");
}

std::vector<std::string_view> LineReader::next(std::string_view what) {
  if (done()) throw ParseError(lines_.size() + 1, "unexpected end of input, expected " + std::string(what));
  std::string_view l = lines_[pos_++];
  line_ = pos_;
  if (l.empty()) throw ParseError(line_, "empty line, expected " + std::string(what));
  if (l.find('\r') != std::string_view::npos) throw ParseError(line_, "carriage return in input");
  std::vector<std::string_view> tokens;
  std::size_t start = 0;
  while (true) {
    std::size_t end = l.find(' ', start);
    std::string_view tok = l.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    if (tok.empty()) throw ParseError(line_, "fields must be separated by single spaces");
    tokens.push_back(tok);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return tokens;
}

std::uint64_t parse_uint(std::string_view token, std::size_t line) {
  if (token.empty() || (token.size() > 1 && token[0] == '0')) {
    throw ParseError(line, "malformed number '" + std::string(token) + "'");
  }
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "malformed number '" + std::string(token) + "'");
  }
  return value;
}

std::int64_t parse_int(std::string_view token, std::size_t line) {
  bool negative = !token.empty() && token[0] == '-';
  std::string_view digits = negative ? token.substr(1) : token;
  std::uint64_t magnitude = parse_uint(digits, line);
  if (negative && magnitude == 0) throw ParseError(line, "malformed number '-0'");
  if (magnitude > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw ParseError(line, "number out of range");
  }
  auto v = static_cast<std::int64_t>(magnitude);
  return negative ? -v : v;
}

void expect_tokens(const std::vector<std::string_view>& tokens, std::size_t count,
                   std::size_t line, std::string_view what) {
  if (tokens.size() != count) {
    throw ParseError(line, "expected " + std::string(what));
  }
}

std::string serialize(const RootedTree& t) {
  std::string out = "rooted " + std::to_string(t.size()) + "\n";
  for (std::size_t i = 1; i < t.size(); ++i) {
    out += std::to_string(i);
    out += ' ';
    out += std::to_string(t.parent(static_cast<Vertex>(i)));
    out += '\n';
  }
  return out;
}

std::string serialize(const UnrootedTree& t) {
  std::string out = "unrooted " + std::to_string(t.size()) + "\n";
  for (const Edge& e : t.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

std::string serialize(const AnyTree& t) {
  return std::visit([](const auto& x) { return serialize(x); }, t);
}

namespace {

Vertex parse_vertex(std::string_view tok, std::size_t n, std::size_t line) {
  std::uint64_t v = parse_uint(tok, line);
  if (v >= n) throw ParseError(line, "vertex index " + std::to_string(v) + " out of range");
  return static_cast<Vertex>(v);
}

std::size_t parse_count(std::string_view tok, std::size_t line) {
  std::uint64_t n = parse_uint(tok, line);
  if (n == 0) throw ParseError(line, "vertex count must be at least 1");
  if (n > std::numeric_limits<Vertex>::max() / 2) throw ParseError(line, "vertex count too large");
  return static_cast<std::size_t>(n);
}

}  // namespace

AnyTree parse_tree(LineReader& reader) {
  auto header = reader.next("tree header");
  const std::size_t hline = reader.line();
  expect_tokens(header, 2, hline, "'rooted <n>' or 'unrooted <n>'");
  const std::size_t n = parse_count(header[1], hline);
  if (header[0] == "rooted") {
    std::vector<Vertex> parent(n, kNoVertex);
    std::vector<char> seen(n, 0);
    for (std::size_t k = 1; k < n; ++k) {
      auto tok = reader.next("'<child> <parent>'");
      expect_tokens(tok, 2, reader.line(), "'<child> <parent>'");
      Vertex child = parse_vertex(tok[0], n, reader.line());
      Vertex par = parse_vertex(tok[1], n, reader.line());
      if (child == 0) throw ParseError(reader.line(), "the root has no parent line");
      if (seen[child]) throw ParseError(reader.line(), "duplicate parent line for vertex " + std::to_string(child));
      if (par >= child) throw ParseError(reader.line(), "parent index not less than child");
      seen[child] = 1;
      parent[child] = par;
    }
    return RootedTree::from_parents(std::move(parent));
  }
  if (header[0] == "unrooted") {
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (std::size_t k = 1; k < n; ++k) {
      auto tok = reader.next("'<u> <v>'");
      expect_tokens(tok, 2, reader.line(), "'<u> <v>'");
      Vertex u = parse_vertex(tok[0], n, reader.line());
      Vertex v = parse_vertex(tok[1], n, reader.line());
      if (u == v) throw ParseError(reader.line(), "self-loop");
      edges.emplace_back(u, v);
    }
    try {
      return UnrootedTree::from_edges(n, std::move(edges));
    } catch (const InvalidArgument& e) {
      throw ParseError(reader.line(), e.what());
    }
  }
  throw ParseError(hline, "unknown tree kind '" + std::string(header[0]) + "'");
}

AnyTree parse_tree(std::string_view text) {
  LineReader reader(text);
  AnyTree t = parse_tree(reader);
  reader.expect_end();
  return t;
}

RootedTree parse_rooted(std::string_view text) {
  AnyTree t = parse_tree(text);
  if (!is_rooted(t)) throw ParseError(1, "expected a rooted tree");
  return std::get<RootedTree>(std::move(t));
}

UnrootedTree parse_unrooted(std::string_view text) {
  AnyTree t = parse_tree(text);
  if (is_rooted(t)) throw ParseError(1, "expected an unrooted tree");
  return std::get<UnrootedTree>(std::move(t));
}

std::string serialize_perm(std::span<const Vertex> perm) {
  std::string out = "aut " + std::to_string(perm.size()) + "\n";
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(perm[i]);
  }
  out += '\n';
  return out;
}

std::vector<Vertex> parse_perm(LineReader& reader) {
  auto header = reader.next("'aut <n>'");
  expect_tokens(header, 2, reader.line(), "'aut <n>'");
  if (header[0] != "aut") throw ParseError(reader.line(), "expected 'aut <n>'");
  const std::size_t n = parse_count(header[1], reader.line());
  auto images = reader.next("image line");
  if (images.size() != n) {
    throw ParseError(reader.line(), "expected " + std::to_string(n) + " images, got " + std::to_string(images.size()));
  }
  std::vector<Vertex> perm;
  perm.reserve(n);
  for (auto tok : images) perm.push_back(parse_vertex(tok, n, reader.line()));
  return perm;
}

std::vector<Vertex> parse_perm(std::string_view text) {
  LineReader reader(text);
  auto perm = parse_perm(reader);
  reader.expect_end();
  return perm;
}

}  // namespace arbor
