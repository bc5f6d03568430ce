// Words over the letters a-z, identities between them, and the purely
// syntactic predicates used by the decision procedures: content,
// multiplicity, balancedness, affixes, covered-by-cycles, substitution.

#ifndef RSV_WORDS_HPP_
#define RSV_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rsv::words {

//! A single variable: one lowercase ASCII letter.
struct Variable {
  char symbol;
  friend auto operator<=>(Variable, Variable) = default;
};

inline bool is_variable_char(char c) { return c >= 'a' && c <= 'z'; }

//! A non-empty sequence of variables. There is no empty word: these are
//! semigroup words, not monoid words.
class Word {
 public:
  explicit Word(std::vector<Variable> letters);
  //! Build from plain letters, e.g. Word("xyx").
  explicit Word(std::string_view letters);

  std::size_t size() const noexcept { return letters_.size(); }
  Variable operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Variable>& letters() const noexcept { return letters_; }
  std::string str() const;

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) {
    lhs *= rhs;
    return lhs;
  }
  //! w repeated k times, k >= 1.
  static Word pow(const Word& w, int k);

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Variable> letters_;
};

//! An equation between two words. A tautology (lhs identical to rhs) is
//! representable and flagged; the decision procedures skip such identities
//! instead of rejecting them.
struct Identity {
  Word lhs;
  Word rhs;

  bool is_tautology() const { return lhs == rhs; }
  std::string str() const { return lhs.str() + " = " + rhs.str(); }
  friend auto operator<=>(const Identity&, const Identity&) = default;
};

//! Finite map Variable -> Word. Totality over the substituted word's content
//! is checked at application time.
class Substitution {
 public:
  Substitution() = default;
  explicit Substitution(std::map<Variable, Word> mapping)
      : mapping_(std::move(mapping)) {}

  void set(Variable v, Word w);
  const Word* find(Variable v) const;
  const std::map<Variable, Word>& mapping() const { return mapping_; }

 private:
  std::map<Variable, Word> mapping_;
};

//! Error raised by the identity/presentation parsers. Positions are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Grammar (ASCII only; '*' and whitespace are ignored separators):
//   identity := word "=" word
//   word     := factor+ ; factor := atom ("^" uint)?
//   atom     := var | "(" word ")" ; var := [a-z] ; uint := [1-9][0-9]*
Identity parse_identity(std::string_view text);

//! Parse a whole file: one identity per line, '#' lines are comments,
//! blank lines are skipped. Keeps the file order.
std::vector<Identity> parse_identity_file(std::string_view text);

//! Parse a bare word with the same factor/power syntax (used by the
//! presentation reader).
Word parse_word(std::string_view text);

std::set<Variable> content(const Word& w);
int multiplicity(const Word& w, Variable v);
bool is_balanced(const Identity& id);

//! Replace every letter of w by its image; throws std::invalid_argument when
//! a letter of w has no image.
Word substitute(const Word& w, const Substitution& s);

//! (l_s(w), r_s(w)) = (first s letters, last s letters); 1 <= s <= |w|.
std::pair<Word, Word> affixes(const Word& w, int s);

//! A word of length >= 2 is covered by cycles when every length-2 subword
//! lies inside some subword whose first and last letters coincide.
bool is_covered_by_cycles(const Word& w);

}  // namespace rsv::words

#endif  // RSV_WORDS_HPP_
