// The decision procedures: parametric identity system generation, the
// forbidden-member test for identity systems, the finite-semigroup test,
// exactness, and the classification report (subdirect/embedding/residual
// criteria) in both input modes.

#ifndef RSV_DECIDE_HPP_
#define RSV_DECIDE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "rsv/catalog.hpp"
#include "rsv/semigroup.hpp"
#include "rsv/varieties.hpp"

namespace rsv::decide {

using algebra::FiniteSemigroup;
using algebra::Tri;
using catalog::CatalogKey;
using varieties::Counterexample;
using varieties::IdentitySystem;
using varieties::PowerIdentity;

//! The parametric identity systems the classifications test, one per
//! criterion; Embed/ResB2/ResBrandt come in the three variants a, b, c.
enum class SystemKind {
  Hall,              // x^2 = x^{n+2}; xyx = (xy)^{n+1}x; (xhz)^n xyz = xyz (xhz)^n
  SubdirectCs0,      // x = x^{n+1}; (axyb)^n = (ayxb)^n
  SubdirectFactors,  // xy = x^{n+1}y^{n+1}; (axyb)^n = (ayxb)^n
  EmbedA,            // same system as SubdirectFactors
  EmbedB,            // xy = xy^{n+1}; axay = ayax; abxy = abyx
  EmbedC,            // xy = x^{n+1}y; xaya = yaxa; xyab = yxab
  ResB2A,            // xy = x^{n+1}y^{n+1}; (axyb)^n = (ayxb)^n
  ResB2B,            // xy = xy^{n+1}; axy = ayx
  ResB2C,            // xy = x^{n+1}y; xya = yxa
  ResBrandtA,        // xy = x^{n+1}y^{n+1}; axy^nb = ay^nxb
  ResBrandtB,        // xy = xy^{n+1}; axy = ayx
  ResBrandtC,        // xy = x^{n+1}y; xya = yxa
};

IdentitySystem identity_systems(SystemKind kind, int n);

//! The fixed twelve forbidden semigroups followed by K(1)..K(n).
std::vector<CatalogKey> forbidden_list(int n);

struct Options {
  bool parallel = false;
  algebra::SearchCaps search;
  varieties::FreeObjectCaps free_caps;
};

struct RsVerdict {
  enum class Reason {
    Balanced,
    ForbiddenMember,
    AllForbiddenExcluded,
    IdentitySuccess,
    IdentityFailure,
  };
  bool is_rs = false;
  Reason reason = Reason::Balanced;
  std::optional<int> period_bound;
  std::optional<PowerIdentity> derived_power;     // sigma mode
  std::optional<CatalogKey> forbidden_member;     // reason ForbiddenMember
  std::vector<CatalogKey> tested;                 // reason AllForbiddenExcluded
  std::optional<Counterexample> counterexample;   // reason IdentityFailure
};

//! Balanced systems admit every commutative semigroup, so they are never
//! Rees-Sushkevich; otherwise the derived power identity bounds the K
//! series and the fixed forbidden list is scanned in order.
RsVerdict is_rs_sigma(const IdentitySystem& sigma, const Options& opts = {});

//! Tests the Hall system at n = period(S), the canonical test point: the
//! first Hall identity forces period(S) to divide any witnessing n, and the
//! systems pass to multiples.
RsVerdict is_rs_semigroup(const FiniteSemigroup& s, const Options& opts = {});

struct ExactVerdict {
  Tri exact = Tri::False;
  bool rs = false;
  std::optional<int> branch;  // 1: B2 in, A0 out; 2: A2 in; 3: N2 out
  bool members_computed = false;
  Tri b2_in = Tri::Inconclusive;
  Tri a0_in = Tri::Inconclusive;
  Tri a2_in = Tri::Inconclusive;
  Tri n2_in = Tri::Inconclusive;
};

ExactVerdict is_exact_sigma(const IdentitySystem& sigma,
                            const Options& opts = {});
ExactVerdict is_exact_semigroup(const FiniteSemigroup& s,
                                const Options& opts = {});

struct CriterionVerdict {
  Tri holds = Tri::False;
  //! Sigma mode negative: the first listed forbidden semigroup inside the
  //! variety.
  std::optional<CatalogKey> member_witness;
  //! Semigroup mode positive for the three-variant criteria: which system
  //! matched.
  std::optional<char> matched_system;
  //! Semigroup mode negatives: one counterexample per failed system.
  std::vector<Counterexample> counterexamples;
  //! The identity systems that were tested, rendered.
  std::vector<std::string> systems;
};

struct ClassificationReport {
  enum class Mode { Sigma, Semigroup };
  Mode mode = Mode::Sigma;
  RsVerdict rs;
  ExactVerdict exact;
  CriterionVerdict subdirect_cs0;
  CriterionVerdict subdirect_principal_factors;
  std::optional<CriterionVerdict> embeds_in_cs0_products;   // semigroup mode
  std::optional<CriterionVerdict> residually_b2;            // semigroup mode
  std::optional<CriterionVerdict> residually_brandt;        // semigroup mode
  std::optional<int> period;                                // semigroup mode
  std::vector<std::string> footnotes;
};

ClassificationReport classify_sigma(const IdentitySystem& sigma,
                                    const Options& opts = {});
ClassificationReport classify_semigroup(const FiniteSemigroup& s,
                                        const Options& opts = {});

}  // namespace rsv::decide

#endif  // RSV_DECIDE_HPP_
