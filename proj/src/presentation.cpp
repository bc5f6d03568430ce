// Bounded shortlex Knuth-Bendix completion over generator strings, followed
// by normal-form enumeration. Irreducible words form a subword-closed
// language, so enumerating by length and stopping at the first empty length
// is exhaustive; the completion must finish for the table to be emitted, so
// every table built here is backed by a confluent, terminating system.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rsv/catalog.hpp"

namespace rsv::catalog {

namespace {

using OptWord = std::optional<std::string>;  // nullopt = the adjoined zero

bool shortlex_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  return a < b;
}

struct Rule {
  std::string lhs;
  OptWord rhs;
  bool active = true;
};

class Completion {
 public:
  explicit Completion(const PresentationCaps& caps) : caps_(caps) {}

  OptWord reduce(std::string w) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Rule& r : rules_) {
        if (!r.active) {
          continue;
        }
        auto pos = w.find(r.lhs);
        if (pos == std::string::npos) {
          continue;
        }
        if (!r.rhs) {
          return std::nullopt;
        }
        w = w.substr(0, pos) + *r.rhs + w.substr(pos + r.lhs.size());
        changed = true;
        break;
      }
    }
    return w;
  }

  void add_equation(const OptWord& a, const OptWord& b) {
    equations_.emplace_back(a, b);
  }

  //! Process queued equations and critical pairs until the system is
  //! confluent or a cap is hit.
  void run() {
    while (!equations_.empty() || !pending_.empty()) {
      if (!equations_.empty()) {
        auto [a, b] = equations_.front();
        equations_.pop_front();
        orient(a, b);
        continue;
      }
      auto [i, j] = pending_.front();
      pending_.pop_front();
      if (rules_[i].active && rules_[j].active) {
        overlap(rules_[i], rules_[j]);
      }
    }
  }

  const std::vector<Rule>& rules() const { return rules_; }

 private:
  void orient(const OptWord& a, const OptWord& b) {
    OptWord u = a ? reduce(*a) : a;
    OptWord v = b ? reduce(*b) : b;
    if (u == v) {
      return;
    }
    Rule rule;
    if (!u || !v) {
      rule = {!u ? *v : *u, std::nullopt, true};
    } else if (shortlex_less(*u, *v)) {
      rule = {*v, u, true};
    } else {
      rule = {*u, v, true};
    }
    // Interreduce: rules whose left side the new rule rewrites are retired
    // and their equations requeued.
    for (Rule& r : rules_) {
      if (r.active && r.lhs.find(rule.lhs) != std::string::npos) {
        r.active = false;
        equations_.emplace_back(r.lhs, r.rhs);
      }
    }
    const int index = static_cast<int>(rules_.size());
    rules_.push_back(std::move(rule));
    if (++added_ > 20 * caps_.max_rules ||
        active_count() > caps_.max_rules) {
      throw algebra::CapError(
          "presentation completion exceeded the rule cap (" +
          std::to_string(caps_.max_rules) + ")");
    }
    for (int i = 0; i <= index; ++i) {
      pending_.emplace_back(i, index);
      if (i != index) {
        pending_.emplace_back(index, i);
      }
    }
  }

  int active_count() const {
    int n = 0;
    for (const Rule& r : rules_) {
      n += r.active ? 1 : 0;
    }
    return n;
  }

  // Critical pairs of r1 against r2: proper suffix/prefix overlaps and
  // occurrences of r2.lhs inside r1.lhs.
  void overlap(Rule r1, Rule r2) {
    const std::string& l1 = r1.lhs;
    const std::string& l2 = r2.lhs;
    const std::size_t max_k = std::min(l1.size(), l2.size()) - 1;
    for (std::size_t k = 1; k <= max_k; ++k) {
      if (l1.compare(l1.size() - k, k, l2, 0, k) != 0) {
        continue;
      }
      // The overlap word is l1 + l2[k:], rewritten two ways.
      std::string tail = l2.substr(k);
      OptWord left = r1.rhs ? OptWord(*r1.rhs + tail) : std::nullopt;
      std::string head = l1.substr(0, l1.size() - k);
      OptWord right = r2.rhs ? OptWord(head + *r2.rhs) : std::nullopt;
      equations_.emplace_back(left, right);
    }
    if (l2.size() < l1.size()) {
      for (std::size_t pos = l1.find(l2); pos != std::string::npos;
           pos = l1.find(l2, pos + 1)) {
        OptWord replaced =
            r2.rhs ? OptWord(l1.substr(0, pos) + *r2.rhs +
                             l1.substr(pos + l2.size()))
                   : std::nullopt;
        equations_.emplace_back(r1.rhs, replaced);
      }
    }
  }

  PresentationCaps caps_;
  std::vector<Rule> rules_;
  std::deque<std::pair<int, int>> pending_;
  std::deque<std::pair<OptWord, OptWord>> equations_;
  long long added_ = 0;
};

}  // namespace

FiniteSemigroup enumerate_presentation(const Presentation& p,
                                       const PresentationCaps& caps) {
  if (p.generators.empty()) {
    throw std::invalid_argument("a presentation needs at least one generator");
  }
  {
    std::set<Variable> gens(p.generators.begin(), p.generators.end());
    if (gens.size() != p.generators.size()) {
      throw std::invalid_argument("duplicate generator");
    }
    for (const auto& [lhs, rhs] : p.relations) {
      for (const Word* side : {&lhs, rhs ? &*rhs : &lhs}) {
        for (Variable v : side->letters()) {
          if (!gens.count(v)) {
            throw std::invalid_argument(
                std::string("relation uses undeclared generator '") +
                v.symbol + "'");
          }
        }
      }
    }
  }

  bool has_zero = false;
  Completion completion(caps);
  for (const auto& [lhs, rhs] : p.relations) {
    if (!rhs) {
      has_zero = true;
      completion.add_equation(lhs.str(), std::nullopt);
    } else {
      completion.add_equation(lhs.str(), rhs->str());
    }
  }
  completion.run();

  // Irreducible means no rule left-hand side occurs; extending on the right,
  // only suffixes need checking because every proper prefix is already
  // irreducible.
  auto extension_irreducible = [&](const std::string& w) {
    for (const Rule& r : completion.rules()) {
      if (r.active && r.lhs.size() <= w.size() &&
          w.compare(w.size() - r.lhs.size(), r.lhs.size(), r.lhs) == 0) {
        return false;
      }
    }
    return true;
  };

  std::vector<std::string> elements;
  std::vector<std::string> level;
  for (Variable g : p.generators) {
    std::string w(1, g.symbol);
    if (extension_irreducible(w)) {
      level.push_back(w);
    }
  }
  while (!level.empty()) {
    elements.insert(elements.end(), level.begin(), level.end());
    if (static_cast<int>(elements.size()) > caps.max_elements) {
      throw algebra::CapError("presentation exceeded the element cap (" +
                              std::to_string(caps.max_elements) + ")");
    }
    std::vector<std::string> next;
    for (const std::string& w : level) {
      for (Variable g : p.generators) {
        std::string candidate = w + g.symbol;
        if (extension_irreducible(candidate)) {
          if (static_cast<int>(candidate.size()) > caps.max_word_length) {
            throw algebra::CapError(
                "presentation exceeded the word length cap (" +
                std::to_string(caps.max_word_length) + ")");
          }
          next.push_back(candidate);
        }
      }
    }
    level = std::move(next);
  }

  std::map<std::string, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    index[elements[i]] = static_cast<int>(i);
  }
  std::optional<int> zero;
  std::vector<std::string> labels = elements;
  if (has_zero) {
    zero = static_cast<int>(labels.size());
    labels.push_back("0");
  }
  if (labels.empty()) {
    throw std::invalid_argument("presentation has no elements");
  }
  const int n = static_cast<int>(labels.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  if (zero) {
    for (int i = 0; i < n; ++i) {
      table[i][*zero] = *zero;
      table[*zero][i] = *zero;
    }
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t k = 0; k < elements.size(); ++k) {
      OptWord nf = completion.reduce(elements[i] + elements[k]);
      if (!nf) {
        table[i][k] = *zero;
      } else {
        auto it = index.find(*nf);
        if (it == index.end()) {
          throw std::logic_error("normal form missing from enumeration: " +
                                 *nf);
        }
        table[i][k] = it->second;
      }
    }
  }
  FiniteSemigroup result("presented", std::move(labels), std::move(table),
                         zero);
  if (result.size() <= 512) {
    algebra::ValidationReport report = algebra::validate(result);
    if (!report.ok()) {
      throw std::logic_error("enumerated table is invalid: " +
                             report.issues.front().describe(result));
    }
  }
  return result;
}

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool saw_gens = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string line(text.substr(start, end == std::string_view::npos
                                            ? text.size() - start
                                            : end - start));
    ++line_no;
    std::size_t content = line.find_first_not_of(" \t\r");
    if (content != std::string::npos && line[content] != '#') {
      if (line.compare(content, 5, "gens:") == 0) {
        if (saw_gens) {
          throw words::ParseError("duplicate gens: line", line_no, 1);
        }
        saw_gens = true;
        for (char c : line.substr(content + 5)) {
          if (c == ' ' || c == '\t' || c == '\r' || c == ',') {
            continue;
          }
          if (!words::is_variable_char(c)) {
            throw words::ParseError(
                std::string("invalid generator '") + c + "'", line_no, 1);
          }
          p.generators.push_back(Variable{c});
        }
      } else if (line.compare(content, 5, "rels:") == 0) {
        if (!saw_gens) {
          throw words::ParseError("rels: before gens:", line_no, 1);
        }
        std::string rels = line.substr(content + 5);
        std::size_t pos = 0;
        while (pos <= rels.size()) {
          std::size_t semi = rels.find(';', pos);
          std::string rel = rels.substr(
              pos, semi == std::string::npos ? rels.size() - pos : semi - pos);
          if (rel.find_first_not_of(" \t\r") != std::string::npos) {
            std::size_t eq = rel.find('=');
            if (eq == std::string::npos) {
              throw words::ParseError("relation needs '='", line_no, 1);
            }
            Word lhs = words::parse_word(rel.substr(0, eq));
            std::string rhs_text = rel.substr(eq + 1);
            std::size_t first = rhs_text.find_first_not_of(" \t\r");
            std::size_t last = rhs_text.find_last_not_of(" \t\r");
            if (first != std::string::npos &&
                rhs_text.substr(first, last - first + 1) == "0") {
              p.relations.emplace_back(std::move(lhs), std::nullopt);
            } else {
              p.relations.emplace_back(std::move(lhs),
                                       words::parse_word(rhs_text));
            }
          }
          if (semi == std::string::npos) {
            break;
          }
          pos = semi + 1;
        }
      } else {
        throw words::ParseError("expected gens:, rels:, or a comment",
                                line_no, content + 1);
      }
    }
    if (end == std::string_view::npos) {
      break;
    }
    start = end + 1;
  }
  if (!saw_gens) {
    throw words::ParseError("missing gens: line", 1, 1);
  }
  std::set<Variable> gens(p.generators.begin(), p.generators.end());
  for (const auto& [lhs, rhs] : p.relations) {
    for (const Word* side : {&lhs, rhs ? &*rhs : &lhs}) {
      for (Variable v : side->letters()) {
        if (!gens.count(v)) {
          throw std::invalid_argument(
              std::string("relation uses undeclared generator '") +
              v.symbol + "'");
        }
      }
    }
  }
  return p;
}

namespace {

Presentation make_presentation(std::string_view gens,
                               const std::vector<std::string>& rels) {
  std::string text = "gens: " + std::string(gens) + "\nrels: ";
  for (std::size_t i = 0; i < rels.size(); ++i) {
    text += rels[i];
    if (i + 1 < rels.size()) {
      text += " ; ";
    }
  }
  return parse_presentation(text);
}

std::string ypow(int k) { return "y^" + std::to_string(k); }

}  // namespace

Presentation indicator_presentation(int number, int k_parameter) {
  switch (number) {
    case 1:
      return make_presentation("x, y", {"x = x^2", "y^2 = 0", "xy = yx"});
    case 2:
      return make_presentation("x, y", {"x^2 = 0", "y^2 = 0", "xyx = yxy"});
    case 3:
      return make_presentation(
          "x, y", {"x^2 = x^3", "xy = y", "yx^2 = 0", "y^2 = 0"});
    case 4:
      return make_presentation(
          "x, y", {"x^2 = x^3", "yx = y", "x^2y = 0", "y^2 = 0"});
    case 5:
      return make_presentation("x", {"x^3 = 0"});
    case 6:
      return make_presentation("x, y", {"x^2 = 0", "y = y^2", "yxy = 0"});
    case 7: {
      const int n = k_parameter;
      if (n < 1) {
        throw std::invalid_argument("K series needs parameter >= 1");
      }
      std::vector<std::string> rels = {"x^2 = 0", "y^2 = " + ypow(n + 2),
                                       "yxy = 0"};
      for (int q = 2; q <= n; ++q) {
        rels.push_back("x" + ypow(q) + "x = 0");
      }
      rels.push_back("xyx = x" + ypow(n + 1) + "x");
      return make_presentation("x, y", rels);
    }
    case 8:
      return make_presentation(
          "x, y", {"xy = xyx", "xy = xy^2", "yx = yxy", "yx = yx^2",
                   "x^2 = x^2y", "x^2 = x^3", "y^2 = y^2x", "y^2 = y^3"});
    case 9:
      return make_presentation(
          "x, y", {"xy = yxy", "xy = x^2y", "yx = xyx", "yx = y^2x",
                   "x^2 = yx^2", "x^2 = x^3", "y^2 = xy^2", "y^2 = y^3"});
    case 10:
      return make_presentation(
          "a, x, y",
          {"a^2 = 0", "x^2 = 0", "y^2 = 0", "xy = 0", "yx = 0", "ax = axax",
           "ay = ayay", "xa = xaxa", "ya = yaya", "xay = xax", "yax = yay"});
    case 11:
      return make_presentation(
          "a, x, y",
          {"a^2 = 0", "x^2 = 0", "y^2 = 0", "xy = 0", "yx = 0", "xa = xaxa",
           "ya = yaya", "ax = axax", "ay = ayay", "xay = yay", "yax = xax"});
    case 12:
      return make_presentation(
          "a, x, y", {"x = x^2", "y = y^2", "a = a^2", "xy = x", "yx = y",
                      "ax = x", "xa = x", "ay = y", "ya = y"});
    case 13:
      return make_presentation(
          "a, x, y", {"x = x^2", "y = y^2", "a = a^2", "xy = y", "yx = x",
                      "ax = x", "xa = x", "ay = y", "ya = y"});
    default:
      throw std::invalid_argument("presentation number must be 1..13");
  }
}

}  // namespace rsv::catalog
