#include "rsv/decide.hpp"

#include <algorithm>

namespace rsv::decide {

namespace {

using varieties::EvalOptions;
using varieties::Membership;
using words::Identity;
using words::parse_word;

Identity make_identity(const std::string& lhs, const std::string& rhs) {
  return Identity{parse_word(lhs), parse_word(rhs)};
}

std::string num(int n) { return std::to_string(n); }

}  // namespace

IdentitySystem identity_systems(SystemKind kind, int n) {
  if (n < 1) {
    throw std::invalid_argument("system parameter n must be >= 1");
  }
  std::vector<Identity> ids;
  std::string label;
  switch (kind) {
    case SystemKind::Hall:
      label = "hall(" + num(n) + ")";
      ids.push_back(make_identity("x^2", "x^" + num(n + 2)));
      ids.push_back(make_identity("xyx", "(xy)^" + num(n + 1) + "x"));
      ids.push_back(
          make_identity("(xhz)^" + num(n) + "xyz", "xyz(xhz)^" + num(n)));
      break;
    case SystemKind::SubdirectCs0:
      label = "subdirect-cs0(" + num(n) + ")";
      ids.push_back(make_identity("x", "x^" + num(n + 1)));
      ids.push_back(
          make_identity("(axyb)^" + num(n), "(ayxb)^" + num(n)));
      break;
    case SystemKind::SubdirectFactors:
    case SystemKind::EmbedA:
    case SystemKind::ResB2A:
      label = "subdirect-factors(" + num(n) + ")";
      ids.push_back(
          make_identity("xy", "x^" + num(n + 1) + "y^" + num(n + 1)));
      ids.push_back(
          make_identity("(axyb)^" + num(n), "(ayxb)^" + num(n)));
      break;
    case SystemKind::EmbedB:
      label = "embed-b(" + num(n) + ")";
      ids.push_back(make_identity("xy", "xy^" + num(n + 1)));
      ids.push_back(make_identity("axay", "ayax"));
      ids.push_back(make_identity("abxy", "abyx"));
      break;
    case SystemKind::EmbedC:
      label = "embed-c(" + num(n) + ")";
      ids.push_back(make_identity("xy", "x^" + num(n + 1) + "y"));
      ids.push_back(make_identity("xaya", "yaxa"));
      ids.push_back(make_identity("xyab", "yxab"));
      break;
    case SystemKind::ResB2B:
    case SystemKind::ResBrandtB:
      label = "residual-b(" + num(n) + ")";
      ids.push_back(make_identity("xy", "xy^" + num(n + 1)));
      ids.push_back(make_identity("axy", "ayx"));
      break;
    case SystemKind::ResB2C:
    case SystemKind::ResBrandtC:
      label = "residual-c(" + num(n) + ")";
      ids.push_back(make_identity("xy", "x^" + num(n + 1) + "y"));
      ids.push_back(make_identity("xya", "yxa"));
      break;
    case SystemKind::ResBrandtA:
      label = "residual-brandt-a(" + num(n) + ")";
      ids.push_back(
          make_identity("xy", "x^" + num(n + 1) + "y^" + num(n + 1)));
      ids.push_back(
          make_identity("axy^" + num(n) + "b", "ay^" + num(n) + "xb"));
      break;
  }
  return IdentitySystem::from_identities(std::move(ids), label);
}

std::vector<CatalogKey> forbidden_list(int n) {
  if (n < 1) {
    throw std::invalid_argument("forbidden list needs n >= 1");
  }
  using catalog::Name;
  std::vector<CatalogKey> keys;
  for (Name name :
       {Name::A, Name::B, Name::C_lambda, Name::C_rho, Name::N3, Name::D,
        Name::F_lambda, Name::F_rho, Name::W_lambda, Name::W_rho, Name::L2_1,
        Name::R2_1}) {
    keys.push_back(CatalogKey{name, std::nullopt});
  }
  for (int r = 1; r <= n; ++r) {
    keys.push_back(CatalogKey{Name::K, r});
  }
  return keys;
}

RsVerdict is_rs_sigma(const IdentitySystem& sigma, const Options& opts) {
  if (sigma.identities.empty()) {
    throw std::invalid_argument("the identity system is empty");
  }
  RsVerdict verdict;
  std::optional<PowerIdentity> power =
      varieties::derive_power_identity(sigma);
  if (!power) {
    verdict.is_rs = false;
    verdict.reason = RsVerdict::Reason::Balanced;
    return verdict;
  }
  verdict.derived_power = power;
  const EvalOptions eval{opts.parallel};
  std::vector<CatalogKey> keys = forbidden_list(power->period);
  for (const CatalogKey& key : keys) {
    FiniteSemigroup member = catalog::get(key);
    if (varieties::satisfies_all(member, sigma, eval).holds) {
      verdict.is_rs = false;
      verdict.reason = RsVerdict::Reason::ForbiddenMember;
      verdict.forbidden_member = key;
      return verdict;
    }
  }
  verdict.is_rs = true;
  verdict.reason = RsVerdict::Reason::AllForbiddenExcluded;
  verdict.period_bound = power->period;
  verdict.tested = std::move(keys);
  return verdict;
}

RsVerdict is_rs_semigroup(const FiniteSemigroup& s, const Options& opts) {
  RsVerdict verdict;
  const int n = algebra::index_period(s).period;
  IdentitySystem hall = identity_systems(SystemKind::Hall, n);
  varieties::SatisfactionVerdict v =
      varieties::satisfies_all(s, hall, EvalOptions{opts.parallel});
  if (v.holds) {
    verdict.is_rs = true;
    verdict.reason = RsVerdict::Reason::IdentitySuccess;
    verdict.period_bound = n;
  } else {
    verdict.is_rs = false;
    verdict.reason = RsVerdict::Reason::IdentityFailure;
    verdict.period_bound = n;
    verdict.counterexample = v.counterexample;
  }
  return verdict;
}

namespace {

Tri tri_not(Tri t) {
  switch (t) {
    case Tri::True:
      return Tri::False;
    case Tri::False:
      return Tri::True;
    default:
      return Tri::Inconclusive;
  }
}

Tri tri_and(Tri a, Tri b) {
  if (a == Tri::False || b == Tri::False) {
    return Tri::False;
  }
  if (a == Tri::True && b == Tri::True) {
    return Tri::True;
  }
  return Tri::Inconclusive;
}

Tri tri_or(Tri a, Tri b) {
  if (a == Tri::True || b == Tri::True) {
    return Tri::True;
  }
  if (a == Tri::False && b == Tri::False) {
    return Tri::False;
  }
  return Tri::Inconclusive;
}

ExactVerdict exact_from_members(bool rs, Tri b2, Tri a0, Tri a2, Tri n2) {
  ExactVerdict verdict;
  verdict.rs = rs;
  verdict.members_computed = true;
  verdict.b2_in = b2;
  verdict.a0_in = a0;
  verdict.a2_in = a2;
  verdict.n2_in = n2;
  if (!rs) {
    verdict.exact = Tri::False;
    return verdict;
  }
  const Tri branch1 = tri_and(b2, tri_not(a0));
  const Tri branch2 = a2;
  const Tri branch3 = tri_not(n2);
  verdict.exact = tri_or(branch1, tri_or(branch2, branch3));
  if (branch1 == Tri::True) {
    verdict.branch = 1;
  } else if (branch2 == Tri::True) {
    verdict.branch = 2;
  } else if (branch3 == Tri::True) {
    verdict.branch = 3;
  }
  return verdict;
}

Tri tri_of_bool(bool b) { return b ? Tri::True : Tri::False; }

}  // namespace

ExactVerdict is_exact_sigma(const IdentitySystem& sigma, const Options& opts) {
  using catalog::Name;
  const EvalOptions eval{opts.parallel};
  RsVerdict rs = is_rs_sigma(sigma, opts);
  auto in_variety = [&](Name name) {
    return tri_of_bool(
        varieties::satisfies_all(catalog::get(name), sigma, eval).holds);
  };
  return exact_from_members(rs.is_rs, in_variety(Name::B2),
                            in_variety(Name::A0), in_variety(Name::A2),
                            in_variety(Name::N2));
}

ExactVerdict is_exact_semigroup(const FiniteSemigroup& s,
                                const Options& opts) {
  using catalog::Name;
  RsVerdict rs = is_rs_semigroup(s, opts);
  if (!rs.is_rs) {
    ExactVerdict verdict;
    verdict.rs = false;
    verdict.exact = Tri::False;
    return verdict;
  }
  auto member = [&](Name name) {
    varieties::MembershipVerdict v = varieties::member_of_var(
        catalog::get(name), s, opts.free_caps, opts.search);
    switch (v.outcome) {
      case Membership::In:
        return Tri::True;
      case Membership::NotIn:
        return Tri::False;
      default:
        return Tri::Inconclusive;
    }
  };
  return exact_from_members(true, member(Name::B2), member(Name::A0),
                            member(Name::A2), member(Name::N2));
}

namespace {

std::vector<std::string> render_systems(
    const std::vector<IdentitySystem>& systems) {
  std::vector<std::string> out;
  for (const IdentitySystem& sys : systems) {
    std::string text;
    for (std::size_t i = 0; i < sys.identities.size(); ++i) {
      if (i > 0) {
        text += " ; ";
      }
      text += sys.identities[i].str();
    }
    out.push_back(std::move(text));
  }
  return out;
}

// Sigma mode: the criterion holds iff none of the listed semigroups
// satisfies sigma (i.e. none lies in the defined variety).
CriterionVerdict sigma_criterion(const IdentitySystem& sigma,
                                 const std::vector<catalog::Name>& names,
                                 const EvalOptions& eval) {
  CriterionVerdict verdict;
  for (catalog::Name name : names) {
    if (varieties::satisfies_all(catalog::get(name), sigma, eval).holds) {
      verdict.holds = Tri::False;
      verdict.member_witness = CatalogKey{name, std::nullopt};
      return verdict;
    }
  }
  verdict.holds = Tri::True;
  return verdict;
}

// Semigroup mode: the first listed system that s satisfies settles the
// criterion; otherwise every system contributes its counterexample.
CriterionVerdict semigroup_criterion(const FiniteSemigroup& s,
                                     const std::vector<SystemKind>& kinds,
                                     int n, const EvalOptions& eval) {
  CriterionVerdict verdict;
  std::vector<IdentitySystem> systems;
  for (SystemKind kind : kinds) {
    systems.push_back(identity_systems(kind, n));
  }
  verdict.systems = render_systems(systems);
  for (std::size_t i = 0; i < systems.size(); ++i) {
    varieties::SatisfactionVerdict v =
        varieties::satisfies_all(s, systems[i], eval);
    if (v.holds) {
      verdict.holds = Tri::True;
      if (kinds.size() > 1) {
        verdict.matched_system = static_cast<char>('a' + i);
      }
      verdict.counterexamples.clear();
      return verdict;
    }
    verdict.counterexamples.push_back(*v.counterexample);
  }
  verdict.holds = Tri::False;
  return verdict;
}

}  // namespace

ClassificationReport classify_sigma(const IdentitySystem& sigma,
                                    const Options& opts) {
  using catalog::Name;
  const EvalOptions eval{opts.parallel};
  ClassificationReport report;
  report.mode = ClassificationReport::Mode::Sigma;
  report.rs = is_rs_sigma(sigma, opts);
  auto in_variety = [&](Name name) {
    return tri_of_bool(
        varieties::satisfies_all(catalog::get(name), sigma, eval).holds);
  };
  report.exact = exact_from_members(report.rs.is_rs, in_variety(Name::B2),
                                    in_variety(Name::A0),
                                    in_variety(Name::A2),
                                    in_variety(Name::N2));
  report.subdirect_cs0 = sigma_criterion(
      sigma,
      {Name::N2, Name::S0, Name::S1l, Name::S1r, Name::S2l, Name::S2r,
       Name::S3l, Name::S3r, Name::L2_1, Name::R2_1},
      eval);
  report.subdirect_principal_factors = sigma_criterion(
      sigma, {Name::S0, Name::S1l, Name::S1r, Name::S3l, Name::S3r}, eval);
  if (report.subdirect_cs0.holds == Tri::True &&
      report.subdirect_principal_factors.holds != Tri::True) {
    throw std::logic_error(
        "internal coherence violation: the subdirect-cs0 criterion holds "
        "but the principal-factors criterion does not");
  }
  if (report.rs.reason == RsVerdict::Reason::Balanced) {
    report.footnotes.push_back(
        "balanced systems admit every commutative semigroup; the variety is "
        "not periodic and is reported as not exact");
  }
  report.footnotes.push_back(
      "the embedding and residual criteria need a finite semigroup input "
      "and are omitted in identity-system mode");
  return report;
}

ClassificationReport classify_semigroup(const FiniteSemigroup& s,
                                        const Options& opts) {
  const EvalOptions eval{opts.parallel};
  ClassificationReport report;
  report.mode = ClassificationReport::Mode::Semigroup;
  const int n = algebra::index_period(s).period;
  report.period = n;
  report.rs = is_rs_semigroup(s, opts);
  report.exact = is_exact_semigroup(s, opts);
  report.subdirect_cs0 =
      semigroup_criterion(s, {SystemKind::SubdirectCs0}, n, eval);
  report.subdirect_principal_factors =
      semigroup_criterion(s, {SystemKind::SubdirectFactors}, n, eval);
  if (report.subdirect_cs0.holds == Tri::True &&
      report.subdirect_principal_factors.holds != Tri::True) {
    throw std::logic_error(
        "internal coherence violation: the subdirect-cs0 criterion holds "
        "but the principal-factors criterion does not");
  }
  report.embeds_in_cs0_products = semigroup_criterion(
      s, {SystemKind::EmbedA, SystemKind::EmbedB, SystemKind::EmbedC}, n,
      eval);
  report.residually_b2 = semigroup_criterion(
      s, {SystemKind::ResB2A, SystemKind::ResB2B, SystemKind::ResB2C}, n,
      eval);
  report.residually_brandt = semigroup_criterion(
      s,
      {SystemKind::ResBrandtA, SystemKind::ResBrandtB, SystemKind::ResBrandtC},
      n, eval);
  report.footnotes.push_back(
      "the residually-brandt conditions are evaluated with the same "
      "equivalence reading as the residually-b2 ones");
  return report;
}

}  // namespace rsv::decide
