// Finite semigroups as validated Cayley tables, plus the structural
// machinery: evaluation, generation, Green's relations, ideals and principal
// factors, regularity, homomorphism/isomorphism/divisor search and the small
// constructors (direct product, adjoined identity/zero).

#ifndef RSV_SEMIGROUP_HPP_
#define RSV_SEMIGROUP_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsv/words.hpp"

#include "json.hpp"

namespace rsv::algebra {

using words::Variable;
using words::Word;

//! Three-valued outcome for searches that may exhaust their caps.
enum class Tri { False, True, Inconclusive };

//! Raised when a bounded computation exceeds one of its caps. The message
//! names the cap that was hit.
class CapError : public std::runtime_error {
 public:
  explicit CapError(const std::string& message)
      : std::runtime_error(message) {}
};

//! A finite semigroup given by its multiplication table. Rows index the left
//! factor. The zero, when declared, must be absorbing; associativity is
//! checked by validate(), which every constructor in this library runs on
//! its own output (for tables of tractable size).
class FiniteSemigroup {
 public:
  FiniteSemigroup(std::string label, std::vector<std::string> elements,
                  std::vector<std::vector<int>> table,
                  std::optional<int> zero);

  int size() const noexcept { return n_; }
  int product(int a, int b) const { return table_[a * n_ + b]; }
  //! a^k for k >= 1.
  int power(int a, int k) const;

  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }
  const std::string& element(int i) const { return elements_[i]; }
  const std::vector<std::string>& elements() const noexcept {
    return elements_;
  }
  std::optional<int> zero() const noexcept { return zero_; }
  //! Index of a label, or -1.
  int index_of(const std::string& element_label) const;

  nlohmann::json to_json() const;
  static FiniteSemigroup from_json(const nlohmann::json& j);

 private:
  std::string label_;
  std::vector<std::string> elements_;
  std::vector<int> table_;
  std::optional<int> zero_;
  int n_;
};

struct ValidationIssue {
  enum class Kind { Associativity, Zero };
  Kind kind;
  int a, b, c;  // c unused for Kind::Zero
  std::string describe(const FiniteSemigroup& s) const;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

//! Lists every associativity violation (a,b,c) and every zero violation.
//! Violations are data, not exceptions.
ValidationReport validate(const FiniteSemigroup& s);

using Assignment = std::map<Variable, int>;

//! Left-to-right fold of the table over the letter images.
int eval_word(const FiniteSemigroup& s, const Word& w, const Assignment& asg);

//! Smallest product-closed subset containing gens, in ascending index order.
std::vector<int> subsemigroup_closure(const FiniteSemigroup& s,
                                      const std::vector<int>& gens);

//! The restriction of s to a product-closed element set. Detects an
//! absorbing element of the subsemigroup and flags it as the zero.
FiniteSemigroup subsemigroup(const FiniteSemigroup& s,
                             const std::vector<int>& closed_elements);

std::vector<int> idempotents(const FiniteSemigroup& s);

//! e is primitive when e is a nonzero idempotent and no idempotent f other
//! than e and the zero satisfies ef = fe = f. Throws when e is not
//! idempotent.
bool is_primitive_idempotent(const FiniteSemigroup& s, int e);

struct Partition {
  std::vector<int> class_of;               // element -> class id
  std::vector<std::vector<int>> classes;   // class id -> sorted members
};

struct GreenStructure {
  Partition r, l, j, h;
  //! j_order[i][j] is true when the principal ideal of class i is contained
  //! in the principal ideal of class j. In a finite semigroup D = J, so no
  //! separate D partition is reported.
  std::vector<std::vector<bool>> j_order;
};

GreenStructure green(const FiniteSemigroup& s);

//! Principal two-sided ideal S^1 x S^1 as a sorted element list.
std::vector<int> principal_ideal(const FiniteSemigroup& s, int x);

struct IndexPeriod {
  int index;
  int period;
  friend bool operator==(const IndexPeriod&, const IndexPeriod&) = default;
};

//! Minimal (m, n) with s^m = s^{m+n}, m minimized first.
IndexPeriod element_index_period(const FiniteSemigroup& s, int a);
//! index = max of element indices, period = lcm of element periods.
IndexPeriod index_period(const FiniteSemigroup& s);

// The Rees quotient J(x)/(I_x cap J(x)). The result always carries a zero:
// when the quotient set lacks one (x lies in the kernel, so nothing
// collapses) the simple top class is returned with an outer zero adjoined.
FiniteSemigroup principal_factor(const FiniteSemigroup& s, int x);

//! S has a zero, S*S != {0}, and the only ideals are {0} and S.
bool is_0_simple(const FiniteSemigroup& s);
//! 0-simple with a primitive idempotent.
bool is_completely_0_simple(const FiniteSemigroup& s);
//! No proper ideals and no zero requirement, with a primitive idempotent.
bool is_completely_simple(const FiniteSemigroup& s);

//! s is regular when s = s*t*s for some t.
bool is_regular_element(const FiniteSemigroup& s, int a);

//! Exhaustive minimal generating set: lexicographically first subset of the
//! smallest size up to 4, falling back to greedy removal for semigroups
//! needing more generators.
std::vector<int> minimal_generating_set(const FiniteSemigroup& s);

struct Homomorphism {
  std::vector<int> map;  // source element index -> target element index
};

bool is_homomorphism(const FiniteSemigroup& source,
                     const FiniteSemigroup& target,
                     const std::vector<int>& map);

struct SearchCaps {
  int subset_size = 4;
  long long hom_checks = 10'000'000;
};

struct HomSearchResult {
  std::vector<Homomorphism> homs;
  //! False when the hom_checks cap interrupted the search, in which case the
  //! list may be incomplete.
  bool complete = true;
};

//! All homomorphisms source -> target found by backtracking over images of a
//! minimal generating set, in lexicographic image order. At most `limit` are
//! returned (limit < 0 means all).
HomSearchResult find_homomorphisms(const FiniteSemigroup& source,
                                   const FiniteSemigroup& target,
                                   bool surjective, int limit,
                                   const SearchCaps& caps = {});

//! Witness bijection when the semigroups are isomorphic.
std::optional<std::vector<int>> isomorphism(const FiniteSemigroup& s,
                                            const FiniteSemigroup& t);
bool are_isomorphic(const FiniteSemigroup& s, const FiniteSemigroup& t);

//! T divides S when some subsemigroup of S maps onto T. Candidate
//! subsemigroups are closures of generator subsets whose size is bounded by
//! the number of generators T needs, so the search is exhaustive whenever
//! that bound fits under caps.subset_size.
Tri divides(const FiniteSemigroup& t, const FiniteSemigroup& s,
            const SearchCaps& caps = {});

FiniteSemigroup direct_product(const FiniteSemigroup& s,
                               const FiniteSemigroup& t);
//! Always adjoins a new outer identity (S^1).
FiniteSemigroup adjoin_identity(const FiniteSemigroup& s);
FiniteSemigroup adjoin_zero(const FiniteSemigroup& s);

//! Transposed table (the antiisomorphic semigroup), labels kept.
FiniteSemigroup transpose(const FiniteSemigroup& s);

struct SeparationVerdict {
  bool separated;
  //! J-class ids whose canonical map s -> principal factor is not a
  //! homomorphism (those maps take no part in the separation).
  std::vector<int> non_hom_classes;
  std::optional<std::pair<int, int>> unseparated_pair;
};

//! For each J-class J the canonical map sends s to s when s lies in J and to
//! the factor's zero otherwise. The verdict reports whether the maps that
//! are homomorphisms jointly separate all pairs.
SeparationVerdict canonical_principal_factor_separation(
    const FiniteSemigroup& s);

struct TargetSeparationVerdict {
  Tri separated;
  std::optional<std::pair<int, int>> failing_pair;
};

//! Whether homomorphisms into the targets separate the given pair (or all
//! pairs when none is given). Inconclusive when a hom search cap is hit
//! before a separating map is found.
TargetSeparationVerdict separates_by_targets(
    const FiniteSemigroup& s, const std::vector<FiniteSemigroup>& targets,
    std::optional<std::pair<int, int>> pair = std::nullopt,
    const SearchCaps& caps = {});

}  // namespace rsv::algebra

#endif  // RSV_SEMIGROUP_HPP_
