#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "rsv/decide.hpp"

using namespace rsv::decide;
using rsv::algebra::Assignment;
using rsv::algebra::eval_word;
using rsv::algebra::FiniteSemigroup;
using rsv::algebra::Tri;
using rsv::catalog::cyclic_group;
using rsv::catalog::get;
using rsv::catalog::Name;
using rsv::varieties::satisfies;
using rsv::varieties::satisfies_all;
using rsv::words::Identity;
using rsv::words::parse_identity;
using rsv::words::Variable;
using rsv::words::Word;

namespace {

IdentitySystem system_of(const std::vector<std::string>& texts,
                         const std::string& label = "test") {
  std::vector<Identity> ids;
  for (const std::string& t : texts) {
    ids.push_back(parse_identity(t));
  }
  return IdentitySystem::from_identities(std::move(ids), label);
}

int idx(const FiniteSemigroup& s, const std::string& label) {
  int i = s.index_of(label);
  REQUIRE(i >= 0);
  return i;
}

}  // namespace

TEST_CASE("identity system generation") {
  IdentitySystem hall1 = identity_systems(SystemKind::Hall, 1);
  REQUIRE(hall1.identities.size() == 3);
  CHECK(hall1.identities[0].str() == "xx = xxx");
  CHECK(hall1.identities[1].str() == "xyx = xyxyx");
  CHECK(hall1.identities[2].str() == "xhzxyz = xyzxhz");

  IdentitySystem factors1 = identity_systems(SystemKind::SubdirectFactors, 1);
  REQUIRE(factors1.identities.size() == 2);
  CHECK(factors1.identities[0].str() == "xy = xxyy");
  CHECK(factors1.identities[1].str() == "axyb = ayxb");

  IdentitySystem embed_b2 = identity_systems(SystemKind::EmbedB, 2);
  REQUIRE(embed_b2.identities.size() == 3);
  CHECK(embed_b2.identities[0].str() == "xy = xyyy");
  CHECK(embed_b2.identities[1].str() == "axay = ayax");
  CHECK(embed_b2.identities[2].str() == "abxy = abyx");

  IdentitySystem brandt2 = identity_systems(SystemKind::ResBrandtA, 2);
  CHECK(brandt2.identities[1].str() == "axyyb = ayyxb");

  CHECK_THROWS_AS(identity_systems(SystemKind::Hall, 0),
                  std::invalid_argument);
}

TEST_CASE("forbidden list") {
  CHECK(forbidden_list(1).size() == 13);
  CHECK(forbidden_list(3).size() == 15);
  CHECK(rsv::catalog::key_to_string(forbidden_list(1).front()) == "A");
  CHECK(rsv::catalog::key_to_string(forbidden_list(2).back()) == "K2");
  CHECK_THROWS_AS(forbidden_list(0), std::invalid_argument);
}

TEST_CASE("is_rs_sigma end to end") {
  RsVerdict rs = is_rs_sigma(system_of({"x = x^2", "xy = yx"}));
  CHECK(rs.is_rs);
  CHECK(rs.reason == RsVerdict::Reason::AllForbiddenExcluded);
  CHECK(rs.period_bound == 1);
  CHECK(rs.tested.size() == 13);

  RsVerdict member = is_rs_sigma(system_of({"x^2 = x^3"}));
  CHECK(!member.is_rs);
  CHECK(member.reason == RsVerdict::Reason::ForbiddenMember);
  REQUIRE(member.forbidden_member.has_value());
  CHECK(rsv::catalog::key_to_string(*member.forbidden_member) == "A");
  // the witness re-verifies
  CHECK(satisfies_all(get(*member.forbidden_member),
                      system_of({"x^2 = x^3"}))
            .holds);

  RsVerdict balanced = is_rs_sigma(system_of({"xy = yx"}));
  CHECK(!balanced.is_rs);
  CHECK(balanced.reason == RsVerdict::Reason::Balanced);

  CHECK_THROWS_AS(is_rs_sigma(IdentitySystem{}), std::invalid_argument);
}

TEST_CASE("is_rs_semigroup") {
  RsVerdict b2 = is_rs_semigroup(get(Name::B2));
  CHECK(b2.is_rs);
  CHECK(b2.period_bound == 1);

  RsVerdict l21 = is_rs_semigroup(get(Name::L2_1));
  CHECK(!l21.is_rs);
  REQUIRE(l21.counterexample.has_value());
  CHECK(l21.counterexample->identity_index == 2);  // the third identity
  FiniteSemigroup s = get(Name::L2_1);
  CHECK(l21.counterexample->assignment.at(Variable{'x'}) == idx(s, "e"));
  CHECK(l21.counterexample->assignment.at(Variable{'h'}) == idx(s, "a"));
  CHECK(l21.counterexample->assignment.at(Variable{'z'}) == idx(s, "a"));
  CHECK(l21.counterexample->assignment.at(Variable{'y'}) == idx(s, "b"));

  RsVerdict n3 = is_rs_semigroup(get(Name::N3));
  CHECK(!n3.is_rs);
  CHECK(n3.counterexample->identity_index == 0);  // x^2 = x^{n+2}

  CHECK(is_rs_semigroup(get(Name::N2)).is_rs);
  CHECK(is_rs_semigroup(cyclic_group(2)).is_rs);
}

TEST_CASE("counterexamples replay") {
  for (Name name : {Name::L2_1, Name::N3, Name::A, Name::Tl}) {
    FiniteSemigroup s = get(name);
    RsVerdict v = is_rs_semigroup(s);
    if (v.is_rs) {
      continue;
    }
    IdentitySystem hall =
        identity_systems(SystemKind::Hall, *v.period_bound);
    const auto& ce = *v.counterexample;
    const Identity& id = hall.identities[ce.identity_index];
    CHECK(eval_word(s, id.lhs, ce.assignment) == ce.lhs_value);
    CHECK(eval_word(s, id.rhs, ce.assignment) == ce.rhs_value);
    CHECK(ce.lhs_value != ce.rhs_value);
  }
}

TEST_CASE("exactness from identity systems") {
  ExactVerdict semilattice = is_exact_sigma(system_of({"x = x^2", "xy = yx"}));
  CHECK(semilattice.exact == Tri::True);
  CHECK(semilattice.branch == 3);
  CHECK(semilattice.n2_in == Tri::False);

  ExactVerdict commutative = is_exact_sigma(system_of({"xy = yx"}));
  CHECK(commutative.exact == Tri::False);
  CHECK(!commutative.rs);

  // the Hall identities themselves: N2 satisfies them, B2 and A2 are in
  IdentitySystem hall1 = identity_systems(SystemKind::Hall, 1);
  ExactVerdict hall = is_exact_sigma(hall1);
  CHECK(hall.rs);
  CHECK(hall.b2_in == Tri::True);
  CHECK(hall.a2_in == Tri::True);
  CHECK(hall.n2_in == Tri::True);
  CHECK(hall.exact == Tri::True);
  CHECK(hall.branch == 2);  // A2 in the variety
}

TEST_CASE("exactness from a finite semigroup") {
  ExactVerdict z2 = is_exact_semigroup(cyclic_group(2));
  CHECK(z2.exact == Tri::True);
  CHECK(z2.branch == 3);
  CHECK(z2.n2_in == Tri::False);

  ExactVerdict b2 = is_exact_semigroup(get(Name::B2));
  CHECK(b2.exact == Tri::True);
  CHECK(b2.branch == 1);
  CHECK(b2.b2_in == Tri::True);
  CHECK(b2.a0_in == Tri::False);
  CHECK(b2.a2_in == Tri::False);

  ExactVerdict a2 = is_exact_semigroup(get(Name::A2));
  CHECK(a2.exact == Tri::True);

  // Var(N2) is the zero-multiplication variety: RS but not exact
  ExactVerdict n2 = is_exact_semigroup(get(Name::N2));
  CHECK(n2.rs);
  CHECK(n2.exact == Tri::False);
  CHECK(n2.b2_in == Tri::False);
  CHECK(n2.a2_in == Tri::False);
  CHECK(n2.n2_in == Tri::True);

  // not RS at all
  ExactVerdict l21 = is_exact_semigroup(get(Name::L2_1));
  CHECK(!l21.rs);
  CHECK(l21.exact == Tri::False);
}

TEST_CASE("classification in sigma mode") {
  ClassificationReport thm4 =
      classify_sigma(system_of({"xy = x^2y^2", "axyb = ayxb"}));
  CHECK(thm4.subdirect_principal_factors.holds == Tri::True);

  ClassificationReport semilattice =
      classify_sigma(system_of({"x = x^2", "xy = yx"}));
  CHECK(semilattice.subdirect_cs0.holds == Tri::True);
  CHECK(semilattice.subdirect_principal_factors.holds == Tri::True);
  CHECK(!semilattice.embeds_in_cs0_products.has_value());

  ClassificationReport commutative = classify_sigma(system_of({"xy = yx"}));
  CHECK(commutative.subdirect_cs0.holds == Tri::False);
  REQUIRE(commutative.subdirect_cs0.member_witness.has_value());
  CHECK(rsv::catalog::key_to_string(*commutative.subdirect_cs0.member_witness)
        == "N2");
}

TEST_CASE("classification in semigroup mode") {
  ClassificationReport z2 = classify_semigroup(cyclic_group(2));
  CHECK(z2.period == 2);
  CHECK(z2.rs.is_rs);
  REQUIRE(z2.embeds_in_cs0_products.has_value());
  CHECK(z2.embeds_in_cs0_products->holds == Tri::True);
  CHECK(z2.embeds_in_cs0_products->matched_system == 'a');

  ClassificationReport l21 = classify_semigroup(get(Name::L2_1));
  CHECK(l21.subdirect_cs0.holds == Tri::False);
  // x = x^{n+1} holds in L2^1 (a band), so the failure must come from the
  // permutation identity
  FiniteSemigroup s = get(Name::L2_1);
  CHECK(satisfies(s, parse_identity("x = x^2")).holds);
  REQUIRE(!l21.subdirect_cs0.counterexamples.empty());
  CHECK(l21.subdirect_cs0.counterexamples[0].identity_index == 1);

  ClassificationReport n2 = classify_semigroup(get(Name::N2));
  CHECK(n2.subdirect_principal_factors.holds == Tri::True);
  CHECK(n2.subdirect_cs0.holds == Tri::False);  // x != x^2 in N2

  ClassificationReport b2 = classify_semigroup(get(Name::B2));
  CHECK(b2.subdirect_cs0.holds == Tri::False);
  CHECK(b2.subdirect_principal_factors.holds == Tri::False);
  CHECK(b2.residually_b2->holds == Tri::False);
}

TEST_CASE("printed witnesses for the forbidden members") {
  auto check_fails_hall2 = [](Name name, const std::string& lhs_label,
                              const std::string& x_label,
                              const std::string& y_label) {
    FiniteSemigroup s = get(name);
    Assignment asg{{Variable{'x'}, idx(s, x_label)},
                   {Variable{'y'}, idx(s, y_label)}};
    CHECK(eval_word(s, Word("xyx"), asg) == idx(s, lhs_label));
    CHECK(eval_word(s, Word("xyxyx"), asg) == idx(s, "0"));
  };
  check_fails_hall2(Name::A, "z", "e", "y");
  check_fails_hall2(Name::B, "c", "x", "y");
  check_fails_hall2(Name::C_lambda, "z", "x", "y");

  FiniteSemigroup n3 = get(Name::N3);
  CHECK(n3.power(idx(n3, "a"), 2) == idx(n3, "b"));
  CHECK(n3.power(idx(n3, "a"), 3) == idx(n3, "0"));

  FiniteSemigroup d = get(Name::D);
  Assignment asg{{Variable{'x'}, idx(d, "x")}, {Variable{'y'}, idx(d, "e")}};
  CHECK(eval_word(d, Word("xyx"), asg) != idx(d, "0"));
  CHECK(eval_word(d, Word("xyxyx"), asg) == idx(d, "0"));
}

TEST_CASE("hall systems hold in wider rees matrix semigroups") {
  // spot samples with three rows or columns, beyond the acceptance sweep
  using rsv::catalog::rees_matrix;
  using rsv::catalog::ReesMatrixSpec;
  const std::optional<int> Z = std::nullopt;
  for (int order : {2, 3}) {
    FiniteSemigroup g = cyclic_group(order);
    IdentitySystem hall = identity_systems(SystemKind::Hall, order);
    std::vector<ReesMatrixSpec> specs;
    specs.push_back(ReesMatrixSpec{g, 3, 2, {{0, Z, 0}, {Z, 0, 0}}});
    specs.push_back(ReesMatrixSpec{
        g, 3, 3,
        {{0, Z, Z}, {Z, 0, Z}, {Z, Z, 0}}});
    specs.push_back(ReesMatrixSpec{
        g, 3, 3,
        {{0, 0, 0}, {Z, 0, 0}, {Z, Z, 0}}});
    for (const auto& spec : specs) {
      FiniteSemigroup m = rees_matrix(spec);
      CAPTURE(m.label());
      CHECK(satisfies_all(m, hall).holds);
    }
  }
}

TEST_CASE("hall systems pass to multiples") {
  std::vector<FiniteSemigroup> sample = {get(Name::B2), get(Name::A2),
                                         get(Name::N2), cyclic_group(2),
                                         cyclic_group(3)};
  sample.push_back(rsv::catalog::brandt(cyclic_group(2), 2));
  for (const FiniteSemigroup& s : sample) {
    int n = rsv::algebra::index_period(s).period;
    if (!satisfies_all(s, identity_systems(SystemKind::Hall, n)).holds) {
      continue;
    }
    for (int k : {2, 3}) {
      CAPTURE(s.label());
      CHECK(satisfies_all(s, identity_systems(SystemKind::Hall, k * n))
                .holds);
    }
  }
}

TEST_CASE("monotonicity of is_rs_sigma under system extension") {
  std::mt19937 rng(2718);
  std::uniform_int_distribution<int> len(1, 4);
  std::uniform_int_distribution<int> letter(0, 1);
  auto random_identity = [&]() {
    auto word = [&]() {
      std::string s;
      int n = len(rng);
      for (int i = 0; i < n; ++i) {
        s += static_cast<char>('x' + letter(rng));
      }
      return Word(s);
    };
    return Identity{word(), word()};
  };
  int rs_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Identity> base = {random_identity(), random_identity()};
    IdentitySystem sigma = IdentitySystem::from_identities(base, "sigma");
    std::vector<Identity> extended = base;
    extended.push_back(random_identity());
    IdentitySystem sigma2 =
        IdentitySystem::from_identities(extended, "sigma2");
    if (is_rs_sigma(sigma).is_rs) {
      ++rs_seen;
      CHECK(is_rs_sigma(sigma2).is_rs);
    }
  }
  CHECK(rs_seen > 0);  // the sample actually exercises the implication
}

TEST_CASE("words covered by cycles evaluate to regular elements") {
  using rsv::words::is_covered_by_cycles;
  std::vector<FiniteSemigroup> rs_members;
  for (Name name : {Name::B2, Name::A2, Name::N2, Name::S0, Name::A0}) {
    FiniteSemigroup s = get(name);
    if (is_rs_semigroup(s).is_rs) {
      rs_members.push_back(std::move(s));
    }
  }
  REQUIRE(!rs_members.empty());
  const char letters[] = {'x', 'y', 'z'};
  for (int length = 2; length <= 6; ++length) {
    int total = 1;
    for (int i = 0; i < length; ++i) {
      total *= 3;
    }
    for (int code = 0; code < total; ++code) {
      std::string text;
      int c = code;
      for (int i = 0; i < length; ++i) {
        text += letters[c % 3];
        c /= 3;
      }
      Word w(text);
      if (!is_covered_by_cycles(w)) {
        continue;
      }
      for (const FiniteSemigroup& s : rs_members) {
        const int n = s.size();
        for (int xv = 0; xv < n; ++xv) {
          for (int yv = 0; yv < n; ++yv) {
            for (int zv = 0; zv < n; ++zv) {
              Assignment asg{{Variable{'x'}, xv},
                             {Variable{'y'}, yv},
                             {Variable{'z'}, zv}};
              CAPTURE(s.label());
              CAPTURE(text);
              REQUIRE(rsv::algebra::is_regular_element(
                  s, eval_word(s, w, asg)));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("classification reports stay internally coherent") {
  // subdirect_cs0 implies subdirect_principal_factors in both modes; a
  // violation throws, so classifying the whole catalog must not throw.
  for (Name name :
       {Name::A, Name::B2, Name::A2, Name::N2, Name::N3, Name::S0,
        Name::L2_1, Name::R2_1, Name::Tl, Name::Ml, Name::S3l}) {
    ClassificationReport report = classify_semigroup(get(name));
    if (report.subdirect_cs0.holds == Tri::True) {
      CHECK(report.subdirect_principal_factors.holds == Tri::True);
    }
  }
}
