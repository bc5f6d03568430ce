// Identity satisfaction by exhaustive evaluation, derivation of a power
// identity from an unbalanced system, relatively free objects realized as
// subsemigroups of direct powers, and membership of a finite semigroup in
// the variety generated by another finite semigroup.

#ifndef RSV_VARIETIES_HPP_
#define RSV_VARIETIES_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsv/semigroup.hpp"
#include "rsv/words.hpp"

namespace rsv::varieties {

using algebra::FiniteSemigroup;
using algebra::Tri;
using words::Identity;
using words::Variable;
using words::Word;

//! A deduplicated list of identities. Duplicates are detected after
//! canonically ordering the two sides, so u = v and v = u collide.
struct IdentitySystem {
  std::vector<Identity> identities;
  std::string label;

  static IdentitySystem from_identities(std::vector<Identity> ids,
                                        std::string label);
};

struct Counterexample {
  int identity_index = 0;
  algebra::Assignment assignment;
  int lhs_value = 0;
  int rhs_value = 0;
};

struct SatisfactionVerdict {
  bool holds = true;
  std::optional<Counterexample> counterexample;
};

struct EvalOptions {
  bool parallel = false;
};

//! Exhaustive check over all assignments, enumerated lexicographically in
//! (sorted variable, element index) order; the first counterexample is
//! reported. The parallel path splits on the leading variable and reduces
//! to the minimal counterexample, so the witness does not depend on
//! scheduling.
SatisfactionVerdict satisfies(const FiniteSemigroup& s, const Identity& id,
                              const EvalOptions& opts = {});

//! First failing identity's counterexample; tautologies are skipped.
SatisfactionVerdict satisfies_all(const FiniteSemigroup& s,
                                  const IdentitySystem& sigma,
                                  const EvalOptions& opts = {});

//! x^m = x^{m+n}.
struct PowerIdentity {
  int index;   // m >= 1
  int period;  // n >= 1
};

//! nullopt when every identity in the system is balanced. Otherwise the
//! first unbalanced identity yields a power identity: substituting x for
//! every variable gives x^|lhs| = x^|rhs| when the lengths differ; when the
//! lengths agree, the first variable with unequal multiplicities is sent to
//! x^2 and the rest to x.
std::optional<PowerIdentity> derive_power_identity(
    const IdentitySystem& sigma);

struct FreeObjectCaps {
  int max_elements = 20000;
  long long max_coordinates = 50000;
};

//! The relatively free semigroup F_k(Var(S)) realized concretely: the
//! subsemigroup of the |S|^k-fold direct power of S generated by the k
//! projection tuples. Generator i corresponds to the variable 'a' + i in
//! the representative words.
class FreeObject {
 public:
  static FreeObject build(const FiniteSemigroup& base, int k,
                          const FreeObjectCaps& caps = {});

  int arity() const { return arity_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const FiniteSemigroup& base() const { return base_; }
  const std::vector<int>& vec(int i) const { return elements_[i]; }
  const Word& rep_word(int i) const { return rep_words_[i]; }
  const std::vector<int>& generators() const { return generators_; }
  Variable generator_variable(int i) const {
    return Variable{static_cast<char>('a' + i)};
  }

  int product(int u, int v) const;
  int right_multiply_by_generator(int u, int gi) const {
    return right_by_gen_[u][gi];
  }
  //! Evaluate a word over the generator variables.
  int eval(const Word& w) const;

  //! The free object as an explicit table, labeled by representative words.
  FiniteSemigroup to_semigroup() const;

 private:
  FreeObject(FiniteSemigroup base, int k) : base_(std::move(base)), arity_(k) {}

  FiniteSemigroup base_;
  int arity_;
  std::vector<std::vector<int>> elements_;
  std::vector<Word> rep_words_;
  std::vector<int> generators_;
  std::vector<std::vector<int>> right_by_gen_;
  std::map<std::vector<int>, int> index_;
};

enum class Membership { In, NotIn, Inconclusive };

struct MembershipVerdict {
  Membership outcome = Membership::Inconclusive;
  //! For NotIn: two words over the generating variables that evaluate
  //! equally in the free object but differently in the candidate.
  std::optional<std::pair<Word, Word>> witness;
  std::string note;
};

//! Is X in Var(S)? Divisors short-circuit to In; otherwise X is In exactly
//! when evaluating representative words at a minimal generating set of X
//! defines a homomorphism from F_k(Var(S)) onto X. Inconclusive only when a
//! free-object cap is hit.
MembershipVerdict member_of_var(const FiniteSemigroup& x,
                                const FiniteSemigroup& s,
                                const FreeObjectCaps& caps = {},
                                const algebra::SearchCaps& search_caps = {});

}  // namespace rsv::varieties

#endif  // RSV_VARIETIES_HPP_
