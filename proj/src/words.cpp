#include "rsv/words.hpp"

#include <algorithm>
#include <optional>

namespace rsv::words {

namespace {

constexpr std::size_t kMaxExpandedLength = 1 << 20;

void check_letters(const std::vector<Variable>& letters) {
  if (letters.empty()) {
    throw std::invalid_argument("a word must contain at least one letter");
  }
  for (Variable v : letters) {
    if (!is_variable_char(v.symbol)) {
      throw std::invalid_argument(std::string("invalid variable '") +
                                  v.symbol + "'");
    }
  }
}

}  // namespace

Word::Word(std::vector<Variable> letters) : letters_(std::move(letters)) {
  check_letters(letters_);
}

Word::Word(std::string_view letters) {
  letters_.reserve(letters.size());
  for (char c : letters) {
    letters_.push_back(Variable{c});
  }
  check_letters(letters_);
}

std::string Word::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (Variable v : letters_) {
    out.push_back(v.symbol);
  }
  return out;
}

Word& Word::operator*=(const Word& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

Word Word::pow(const Word& w, int k) {
  if (k < 1) {
    throw std::invalid_argument("word power must be >= 1");
  }
  if (w.size() * static_cast<std::size_t>(k) > kMaxExpandedLength) {
    throw std::invalid_argument("expanded word is too long");
  }
  std::vector<Variable> letters;
  letters.reserve(w.size() * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  }
  return Word(std::move(letters));
}

void Substitution::set(Variable v, Word w) {
  mapping_.insert_or_assign(v, std::move(w));
}

const Word* Substitution::find(Variable v) const {
  auto it = mapping_.find(v);
  return it == mapping_.end() ? nullptr : &it->second;
}

ParseError::ParseError(std::string message, std::size_t line,
                       std::size_t column)
    : std::runtime_error(message + " (line " + std::to_string(line) +
                         ", column " + std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

namespace {

// Recursive-descent parser for one line of the identity DSL.
class LineParser {
 public:
  LineParser(std::string_view text, std::size_t line_no)
      : text_(text), line_(line_no) {}

  Identity parse_identity_line() {
    auto lhs = parse_side("left");
    if (peek() != '=') {
      fail("expected '='");
    }
    ++pos_;
    auto rhs = parse_side("right");
    if (peek() != '\0') {
      fail("unexpected trailing input");
    }
    return Identity{std::move(*lhs), std::move(*rhs)};
  }

  Word parse_word_line() {
    auto w = parse_side("");
    if (peek() != '\0') {
      fail("unexpected trailing input");
    }
    return *w;
  }

 private:
  std::optional<Word> parse_side(const std::string& which) {
    skip_separators();
    std::vector<Variable> acc;
    while (true) {
      char c = peek();
      if (c == '\0' || c == '=' || c == ')') {
        break;
      }
      Word factor = parse_factor();
      acc.insert(acc.end(), factor.letters().begin(),
                 factor.letters().end());
      skip_separators();
    }
    if (acc.empty()) {
      fail(which.empty() ? "empty word" : "empty " + which + " side");
    }
    return Word(std::move(acc));
  }

  Word parse_factor() {
    Word atom = parse_atom();
    skip_separators();
    if (peek() == '^') {
      ++pos_;
      skip_separators();
      int k = parse_uint();
      return Word::pow(atom, k);
    }
    return atom;
  }

  Word parse_atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      auto w = parse_side("");
      if (peek() != ')') {
        fail("expected ')'");
      }
      ++pos_;
      return *w;
    }
    if (is_variable_char(c)) {
      ++pos_;
      return Word(std::vector<Variable>{Variable{c}});
    }
    fail(c == '\0' ? "unexpected end of input"
                   : std::string("unexpected character '") + c + "'");
  }

  int parse_uint() {
    char c = peek();
    if (c == '0') {
      fail("exponent must be a positive integer");
    }
    if (c < '1' || c > '9') {
      fail("expected exponent");
    }
    long value = 0;
    while (true) {
      c = peek();
      if (c < '0' || c > '9') {
        break;
      }
      value = value * 10 + (c - '0');
      if (value > 100000) {
        fail("exponent is too large");
      }
      ++pos_;
    }
    return static_cast<int>(value);
  }

  void skip_separators() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '*') {
        ++pos_;
      } else {
        break;
      }
    }
  }

  char peek() {
    skip_separators();
    if (pos_ >= text_.size()) {
      return '\0';
    }
    char c = text_[pos_];
    if (static_cast<unsigned char>(c) >= 128) {
      fail("non-ASCII input");
    }
    return c;
  }

  [[noreturn]] void fail(const std::string& message) {
    throw ParseError(message, line_, pos_ + 1);
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

bool is_blank_or_comment(std::string_view line) {
  for (char c : line) {
    if (c == '#') {
      return true;
    }
    if (c != ' ' && c != '\t' && c != '\r') {
      return false;
    }
  }
  return true;
}

}  // namespace

Identity parse_identity(std::string_view text) {
  return LineParser(text, 1).parse_identity_line();
}

Word parse_word(std::string_view text) {
  return LineParser(text, 1).parse_word_line();
}

std::vector<Identity> parse_identity_file(std::string_view text) {
  std::vector<Identity> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(
        start, end == std::string_view::npos ? text.size() - start
                                             : end - start);
    ++line_no;
    if (!is_blank_or_comment(line)) {
      out.push_back(LineParser(line, line_no).parse_identity_line());
    }
    if (end == std::string_view::npos) {
      break;
    }
    start = end + 1;
  }
  return out;
}

std::set<Variable> content(const Word& w) {
  return {w.letters().begin(), w.letters().end()};
}

int multiplicity(const Word& w, Variable v) {
  return static_cast<int>(
      std::count(w.letters().begin(), w.letters().end(), v));
}

bool is_balanced(const Identity& id) {
  std::set<Variable> vars = content(id.lhs);
  std::set<Variable> rhs_vars = content(id.rhs);
  vars.insert(rhs_vars.begin(), rhs_vars.end());
  for (Variable v : vars) {
    if (multiplicity(id.lhs, v) != multiplicity(id.rhs, v)) {
      return false;
    }
  }
  return true;
}

Word substitute(const Word& w, const Substitution& s) {
  std::vector<Variable> out;
  for (Variable v : w.letters()) {
    const Word* image = s.find(v);
    if (image == nullptr) {
      throw std::invalid_argument(std::string("no image for variable '") +
                                  v.symbol + "'");
    }
    if (out.size() + image->size() > kMaxExpandedLength) {
      throw std::invalid_argument("substituted word is too long");
    }
    out.insert(out.end(), image->letters().begin(), image->letters().end());
  }
  return Word(std::move(out));
}

std::pair<Word, Word> affixes(const Word& w, int s) {
  if (s < 1 || static_cast<std::size_t>(s) > w.size()) {
    throw std::invalid_argument("affix length out of range");
  }
  std::vector<Variable> prefix(w.letters().begin(), w.letters().begin() + s);
  std::vector<Variable> suffix(w.letters().end() - s, w.letters().end());
  return {Word(std::move(prefix)), Word(std::move(suffix))};
}

bool is_covered_by_cycles(const Word& w) {
  const std::size_t n = w.size();
  if (n < 2) {
    throw std::invalid_argument(
        "covered-by-cycles is defined for words of length >= 2");
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    bool covered = false;
    for (std::size_t a = 0; a <= i && !covered; ++a) {
      for (std::size_t b = i + 1; b < n; ++b) {
        if (w[a] == w[b]) {
          covered = true;
          break;
        }
      }
    }
    if (!covered) {
      return false;
    }
  }
  return true;
}

}  // namespace rsv::words
