#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arbor/tree.hpp"

namespace arbor {

/// Reads LF-terminated lines whose fields are separated by exactly one space.
/// A final line without LF is accepted; trailing empty lines are ignored.
class LineReader {
 public:
  explicit LineReader(std::string_view text);

  /// True when only empty trailing lines remain.
  bool done() const;
  /// Tokens of the next line. Throws ParseError mentioning `what` at end of input.
  std::vector<std::string_view> next(std::string_view what);
  /// Line number of the most recently returned line (1-based).
  std::size_t line() const noexcept { return line_; }
  /// Throws ParseError unless done().
  void expect_end() const;

 private:
  std::vector<std::string_view> lines_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

/// Decimal without sign or leading zeros.
std::uint64_t parse_uint(std::string_view token, std::size_t line);
/// Decimal with optional leading '-', no leading zeros.
std::int64_t parse_int(std::string_view token, std::size_t line);
/// Throws ParseError if the token count differs.
void expect_tokens(const std::vector<std::string_view>& tokens, std::size_t count,
                   std::size_t line, std::string_view what);

/// `rooted <n>` followed by `<child> <parent>` lines in increasing child order.
std::string serialize(const RootedTree& t);
/// `unrooted <n>` followed by `<u> <v>` lines, u < v, sorted.
std::string serialize(const UnrootedTree& t);
std::string serialize(const AnyTree& t);

/// Parses either tree format. Errors are ParseError with the line number.
AnyTree parse_tree(std::string_view text);
/// Parses a tree block from an open reader (used by composite formats).
AnyTree parse_tree(LineReader& reader);
RootedTree parse_rooted(std::string_view text);
UnrootedTree parse_unrooted(std::string_view text);

/// `aut <n>` followed by one line of n images.
std::string serialize_perm(std::span<const Vertex> perm);
std::vector<Vertex> parse_perm(std::string_view text);
std::vector<Vertex> parse_perm(LineReader& reader);

}  // namespace arbor
