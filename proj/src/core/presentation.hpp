#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fillprobe {

// A letter is a signed, 1-based generator index: +k is generator k-1 and -k
// its inverse. Zero is never a valid letter.
using Letter = int;
using Word = std::vector<Letter>;

inline Letter inverse(Letter x) { return -x; }
Word inverse(const Word& w);
Word concat(const Word& u, const Word& v);

// Cancels adjacent inverse pairs until none remain.
Word free_reduce(const Word& w);
// Free reduction followed by stripping inverse pairs across the ends.
Word cyclic_reduce(const Word& w);

struct RewriteRule {
  Word lhs;
  Word rhs;
  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;  // freely and cyclically reduced, nonempty
  // Optional user- or catalog-supplied rewriting rules, unvalidated here.
  std::vector<RewriteRule> rules;
  // Diagnostics for relators dropped because they reduced to the identity.
  std::vector<std::string> warnings;

  std::size_t generator_count() const { return generators.size(); }
  std::size_t max_relator_length() const;
  // Stable text form used for hashing and JSON export.
  std::string canonical_text() const;
};

// Accepts three interchangeable forms:
//   * line format: "generators: a, b" then "relator: <word>" lines,
//     optionally "rule: <word> -> <word>"; '#' starts a comment
//   * compact one-liner: "a, b | a b a^-1 b^-1, ..."
//   * JSON object with "generators", "relators" and optional "rules"
// Throws SyntaxError with a line/column position.
GroupPresentation parse_presentation(std::string_view text);

// Parses a whitespace-separated word such as "a b^-1 a^3" against a
// generator list. "1" and the empty string denote the identity.
Word parse_word(std::string_view text, const std::vector<std::string>& generators);

// "a b^-1 a"; the identity prints as "1". Powers are spelled out letter by letter.
std::string format_word(const Word& w, const std::vector<std::string>& generators);

}  // namespace fillprobe
