// Constructors for every concrete semigroup used by the decision
// procedures: the thirteen indicator Burnside semigroups, the auxiliary
// semigroups (N2, A0, A2, B2, S0, S1l..S3l and right duals, Tl/Tr, Ml/Mr),
// Rees matrix and Brandt semigroups, cyclic groups, coset extensions, and a
// bounded enumerator for finite presentations.

#ifndef RSV_CATALOG_HPP_
#define RSV_CATALOG_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rsv/semigroup.hpp"
#include "rsv/words.hpp"

namespace rsv::catalog {

using algebra::FiniteSemigroup;
using words::Variable;
using words::Word;

enum class Name {
  A,
  B,
  C_lambda,
  C_rho,
  N3,
  D,
  K,
  F_lambda,
  F_rho,
  W_lambda,
  W_rho,
  L2_1,
  R2_1,
  N2,
  A0,
  A2,
  B2,
  S0,
  S1l,
  S1r,
  S2l,
  S2r,
  S3l,
  S3r,
  Tl,
  Tr,
  Ml,
  Mr,
};

struct CatalogKey {
  Name name;
  std::optional<int> parameter;  // present iff name == K
};

//! All key names in catalog order ("K" listed once, parameter supplied
//! separately).
const std::vector<std::string>& list_names();

std::string key_to_string(const CatalogKey& key);
//! Accepts "A", "C_lambda", ..., and "K1", "K2", ... for the parametric
//! series. Throws std::invalid_argument for unknown names.
CatalogKey parse_key(std::string_view text);

FiniteSemigroup get(const CatalogKey& key);
inline FiniteSemigroup get(Name name) { return get(CatalogKey{name, {}}); }

//! A caveat attached to a catalog entry, when one exists (currently the
//! reconstructed S2l/S2r tables).
std::optional<std::string> entry_note(const CatalogKey& key);

//! Sandwich matrix data for M^0(G; L, R, P): P is r_size x l_size, each
//! entry either absent (the zero) or a group element index. Every row and
//! every column must contain a nonzero entry and `group` must actually be a
//! group.
struct ReesMatrixSpec {
  FiniteSemigroup group;
  int l_size;
  int r_size;
  std::vector<std::vector<std::optional<int>>> p;
};

//! Throws std::invalid_argument when the spec invariants fail.
void check_spec(const ReesMatrixSpec& spec);

//! Elements L x G x R plus an outer zero; (l1,g1,r1)(l2,g2,r2) is
//! (l1, g1 p[r1][l2] g2, r2) when the sandwich entry is nonzero and 0
//! otherwise.
FiniteSemigroup rees_matrix(const ReesMatrixSpec& spec);

//! Rees matrix semigroup with k x k identity sandwich matrix.
FiniteSemigroup brandt(const FiniteSemigroup& group, int k);

FiniteSemigroup cyclic_group(int k);

enum class Side { Left, Right };

//! The (G:H) coset extension. The left version has elements
//! G + left cosets gH + 0 with g1*(g2 H) = (g1 g2)H and all products that
//! start from a coset equal to 0; the right version uses right cosets and
//! the mirrored formulas.
FiniteSemigroup coset_extension(const FiniteSemigroup& group,
                                const std::vector<int>& subgroup, Side side);

//! True iff the zero pattern of P is, up to row/column permutation,
//! block-diagonal with all-nonzero blocks; equivalently, every connected
//! component of the bipartite nonzero-pattern graph on R + L is complete.
bool is_b2_sandwich(const ReesMatrixSpec& spec);

struct Presentation {
  std::vector<Variable> generators;
  //! rhs std::nullopt denotes the adjoined absorbing zero.
  std::vector<std::pair<Word, std::optional<Word>>> relations;
};

struct PresentationCaps {
  int max_rules = 500;
  int max_elements = 10000;
  int max_word_length = 24;
};

//! Quotient of the free semigroup (plus absorbing zero when a relation has
//! zero right-hand side) by the congruence the relations generate, computed
//! by shortlex Knuth-Bendix completion followed by normal form enumeration.
//! Elements are labeled by their normal form words. Throws CapError when a
//! cap is hit before the result is known to be correct.
FiniteSemigroup enumerate_presentation(const Presentation& p,
                                       const PresentationCaps& caps = {});

//! Text format:
//!   gens: x, y
//!   rels: x*x = x ; y^2 = 0 ; x*y = y*x
Presentation parse_presentation(std::string_view text);

//! The defining presentations of the indicator semigroups, indexed
//! 1..13 (index 7 is the K series and uses the parameter).
Presentation indicator_presentation(int number, int k_parameter = 1);

}  // namespace rsv::catalog

#endif  // RSV_CATALOG_HPP_
