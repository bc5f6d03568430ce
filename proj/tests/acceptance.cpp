// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Every expected value is pinned here; the process exits nonzero when any
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "rsv/cli.hpp"
#include "rsv/decide.hpp"

using namespace rsv;
using algebra::Assignment;
using algebra::eval_word;
using algebra::FiniteSemigroup;
using algebra::Tri;
using catalog::CatalogKey;
using catalog::get;
using catalog::Name;
using varieties::IdentitySystem;
using varieties::Membership;
using words::Identity;
using words::parse_identity;
using words::Variable;
using words::Word;

namespace {

struct Check {
  std::vector<std::string> failures;
  void require(bool condition, const std::string& message) {
    if (!condition) {
      failures.push_back(message);
    }
  }
};

int idx(const FiniteSemigroup& s, const std::string& label) {
  return s.index_of(label);
}

IdentitySystem system_of(const std::vector<std::string>& texts) {
  std::vector<Identity> ids;
  for (const std::string& t : texts) {
    ids.push_back(parse_identity(t));
  }
  return IdentitySystem::from_identities(std::move(ids), "acceptance");
}

std::vector<std::pair<std::string, CatalogKey>> catalog_keys() {
  std::vector<std::pair<std::string, CatalogKey>> keys;
  for (const std::string& name : catalog::list_names()) {
    if (name == "K") {
      for (int n = 1; n <= 3; ++n) {
        keys.emplace_back("K" + std::to_string(n),
                          CatalogKey{Name::K, n});
      }
    } else {
      keys.emplace_back(name, catalog::parse_key(name));
    }
  }
  return keys;
}

// ---------------------------------------------------------------------------

void criterion_1_catalog_validity(Check& c) {
  const std::map<std::string, int> pinned_sizes = {
      {"A", 4},  {"B", 6},  {"C_lambda", 5}, {"C_rho", 5}, {"N3", 3},
      {"L2_1", 3}, {"R2_1", 3}, {"K1", 9},  {"K2", 12},   {"K3", 15},
      {"B2", 5}, {"A2", 5}, {"Tl", 9},       {"Ml", 6}};
  int validated = 0;
  for (const auto& [name, key] : catalog_keys()) {
    FiniteSemigroup s = get(key);
    c.require(algebra::validate(s).ok(), name + " fails validation");
    ++validated;
    auto it = pinned_sizes.find(name);
    if (it != pinned_sizes.end()) {
      c.require(s.size() == it->second,
                name + " has " + std::to_string(s.size()) +
                    " elements, expected " + std::to_string(it->second));
    }
  }
  c.require(validated == 30, "expected 30 catalog tables");
}

void criterion_2_presentations(Check& c) {
  const std::vector<std::pair<int, CatalogKey>> pairs = {
      {1, {Name::A, {}}},        {2, {Name::B, {}}},
      {3, {Name::C_lambda, {}}}, {4, {Name::C_rho, {}}},
      {5, {Name::N3, {}}},       {6, {Name::D, {}}},
      {7, {Name::K, 1}},         {8, {Name::F_lambda, {}}},
      {9, {Name::F_rho, {}}},    {10, {Name::W_lambda, {}}},
      {11, {Name::W_rho, {}}},   {12, {Name::L2_1, {}}},
      {13, {Name::R2_1, {}}}};
  for (const auto& [number, key] : pairs) {
    FiniteSemigroup presented = catalog::enumerate_presentation(
        catalog::indicator_presentation(number, key.parameter.value_or(1)));
    c.require(algebra::are_isomorphic(presented, get(key)),
              "presentation " + std::to_string(number) +
                  " is not isomorphic to " + catalog::key_to_string(key));
  }
  for (int n = 2; n <= 3; ++n) {
    FiniteSemigroup kn = catalog::enumerate_presentation(
        catalog::indicator_presentation(7, n));
    c.require(algebra::are_isomorphic(kn, get(CatalogKey{Name::K, n})),
              "K series presentation at n=" + std::to_string(n));
  }
}

void criterion_3_necessity_vectors(Check& c) {
  {
    FiniteSemigroup a = get(Name::A);
    Assignment asg{{Variable{'x'}, idx(a, "e")},
                   {Variable{'y'}, idx(a, "y")}};
    c.require(eval_word(a, Word("xyx"), asg) == idx(a, "z"),
              "A: eye != z");
    c.require(eval_word(a, Word("xyxyx"), asg) == idx(a, "0"),
              "A: (ey)^2 e != 0");
  }
  {
    FiniteSemigroup b = get(Name::B);
    Assignment asg{{Variable{'x'}, idx(b, "x")},
                   {Variable{'y'}, idx(b, "y")}};
    c.require(eval_word(b, Word("xyx"), asg) == idx(b, "c"),
              "B: xyx != c");
    for (int n : {1, 2}) {
      Word rhs = Word::pow(Word("xy"), n + 1) * Word("x");
      c.require(eval_word(b, rhs, asg) == idx(b, "0"),
                "B: (xy)^" + std::to_string(n + 1) + "x != 0");
    }
  }
  {
    FiniteSemigroup cl = get(Name::C_lambda);
    Assignment asg{{Variable{'x'}, idx(cl, "x")},
                   {Variable{'y'}, idx(cl, "y")}};
    c.require(eval_word(cl, Word("xyx"), asg) == idx(cl, "z"),
              "C_lambda: xyx != z");
    c.require(eval_word(cl, Word("xyxyx"), asg) == idx(cl, "0"),
              "C_lambda: (xy)^2 x != 0");
  }
  {
    FiniteSemigroup n3 = get(Name::N3);
    c.require(n3.power(idx(n3, "a"), 2) == idx(n3, "b"), "N3: a^2 != b");
    c.require(n3.power(idx(n3, "a"), 3) == idx(n3, "0"), "N3: a^3 != 0");
  }
  {
    FiniteSemigroup d = get(Name::D);
    Assignment asg{{Variable{'x'}, idx(d, "x")},
                   {Variable{'e'}, idx(d, "e")}};
    c.require(eval_word(d, Word("xex"), asg) != idx(d, "0"),
              "D: xex == 0");
    for (int n : {1, 2}) {
      Word lhs = Word::pow(Word("xe"), n + 1) * Word("x");
      c.require(eval_word(d, lhs, asg) == idx(d, "0"),
                "D: (xe)^" + std::to_string(n + 1) + "x != 0");
    }
  }
  for (int m : {1, 2}) {
    FiniteSemigroup km = get(CatalogKey{Name::K, m});
    Assignment asg{{Variable{'x'}, idx(km, "x")},
                   {Variable{'y'}, idx(km, "y")}};
    c.require(eval_word(km, Word("xyx"), asg) != idx(km, "0"),
              "K" + std::to_string(m) + ": xyx == 0");
    for (int n : {1, 2}) {
      Word rhs = Word::pow(Word("xy"), n + 1) * Word("x");
      c.require(eval_word(km, rhs, asg) == idx(km, "0"),
                "K" + std::to_string(m) + ": (xy)^" +
                    std::to_string(n + 1) + "x != 0");
    }
  }
}

void criterion_4_identity_system_decision(Check& c) {
  decide::RsVerdict rs = decide::is_rs_sigma(
      system_of({"x = x^2", "xy = yx"}));
  c.require(rs.is_rs, "semilattice system not recognized as RS");
  c.require(rs.period_bound == 1, "semilattice system bound is not 1");
  c.require(rs.reason == decide::RsVerdict::Reason::AllForbiddenExcluded,
            "semilattice reason mismatch");

  decide::RsVerdict member = decide::is_rs_sigma(system_of({"x^2 = x^3"}));
  c.require(!member.is_rs, "x^2 = x^3 wrongly recognized as RS");
  c.require(member.reason == decide::RsVerdict::Reason::ForbiddenMember,
            "x^2 = x^3 reason mismatch");
  c.require(member.forbidden_member &&
                catalog::key_to_string(*member.forbidden_member) == "A",
            "x^2 = x^3 witness is not A");
  c.require(varieties::satisfies_all(get(Name::A),
                                     system_of({"x^2 = x^3"}))
                .holds,
            "witness A does not re-verify");

  decide::RsVerdict balanced = decide::is_rs_sigma(system_of({"xy = yx"}));
  c.require(!balanced.is_rs && balanced.reason ==
                                   decide::RsVerdict::Reason::Balanced,
            "commutativity not classified as balanced");
}

void criterion_5_hall_soundness(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  for (int order : {1, 2, 3}) {
    FiniteSemigroup group = catalog::cyclic_group(order);
    const int exponent = order;
    IdentitySystem hall =
        decide::identity_systems(decide::SystemKind::Hall, exponent);
    int tested = 0;
    for (int l = 1; l <= 2; ++l) {
      for (int r = 1; r <= 2; ++r) {
        const int cells = l * r;
        long long total = 1;
        for (int i = 0; i < cells; ++i) {
          total *= order + 1;
        }
        for (long long code = 0; code < total; ++code) {
          std::vector<std::vector<std::optional<int>>> p(
              r, std::vector<std::optional<int>>(l));
          long long acc = code;
          for (int i = 0; i < cells; ++i) {
            int digit = static_cast<int>(acc % (order + 1));
            acc /= order + 1;
            p[i / l][i % l] =
                digit == 0 ? std::nullopt : std::optional<int>(digit - 1);
          }
          catalog::ReesMatrixSpec spec{group, l, r, p};
          bool valid = true;
          try {
            catalog::check_spec(spec);
          } catch (const std::invalid_argument&) {
            valid = false;
          }
          if (!valid) {
            continue;
          }
          ++tested;
          FiniteSemigroup m = catalog::rees_matrix(spec);
          varieties::SatisfactionVerdict v =
              varieties::satisfies_all(m, hall);
          if (!v.holds) {
            c.require(false, m.label() + " fails a Hall identity at n = " +
                                 std::to_string(exponent));
            return;
          }
        }
      }
    }
    c.require(tested > 0, "no valid sandwich matrices for order " +
                              std::to_string(order));
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  const double seconds =
      std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() /
      1000.0;
  c.require(seconds <= 10.0, "sweep took " + std::to_string(seconds) + "s");
}

void criterion_6_forbidden_necessity(Check& c) {
  for (const CatalogKey& key : decide::forbidden_list(3)) {
    FiniteSemigroup s = get(key);
    for (int n : {1, 2, 3}) {
      IdentitySystem hall =
          decide::identity_systems(decide::SystemKind::Hall, n);
      varieties::SatisfactionVerdict v = varieties::satisfies_all(s, hall);
      c.require(!v.holds, catalog::key_to_string(key) +
                              " satisfies the Hall system at n = " +
                              std::to_string(n));
    }
    // the K series must fail the second identity specifically
    if (key.name == Name::K) {
      for (int n : {1, 2, 3}) {
        Identity second{Word("xyx"), Word::pow(Word("xy"), n + 1) * Word("x")};
        c.require(!varieties::satisfies(s, second).holds,
                  catalog::key_to_string(key) +
                      " satisfies identity (2) at n = " + std::to_string(n));
      }
    }
  }
}

void criterion_7_exactness(Check& c) {
  decide::ExactVerdict sigma =
      decide::is_exact_sigma(system_of({"x = x^2", "xy = yx"}));
  c.require(sigma.exact == Tri::True, "semilattice system not exact");
  c.require(sigma.branch == 3, "semilattice system branch is not 3");
  c.require(sigma.n2_in == Tri::False, "N2 reported inside the variety");

  decide::ExactVerdict z2 =
      decide::is_exact_semigroup(catalog::cyclic_group(2));
  c.require(z2.exact == Tri::True, "Var(Z2) not exact");
  c.require(z2.branch == 3, "Var(Z2) branch is not 3");
  c.require(z2.n2_in == Tri::False, "N2 reported inside Var(Z2)");
}

void criterion_8_separation_consistency(Check& c) {
  for (const auto& [name, key] : catalog_keys()) {
    FiniteSemigroup s = get(key);
    const int n = algebra::index_period(s).period;
    IdentitySystem system =
        decide::identity_systems(decide::SystemKind::SubdirectFactors, n);
    if (varieties::satisfies_all(s, system).holds) {
      c.require(algebra::canonical_principal_factor_separation(s).separated,
                name + " satisfies the system but does not separate");
    }
  }
  FiniteSemigroup s0 = get(Name::S0);
  algebra::SeparationVerdict v =
      algebra::canonical_principal_factor_separation(s0);
  c.require(!v.separated, "S0 unexpectedly separates");
  c.require(v.unseparated_pair.has_value() &&
                v.unseparated_pair->first == idx(s0, "c") &&
                v.unseparated_pair->second == idx(s0, "0"),
            "S0 unseparated pair is not (c, 0)");
}

void criterion_9_membership_oracle(Check& c) {
  // words over x, y, z of length 1..6, bucketed by evaluation vector
  std::vector<std::string> all_words;
  {
    const char letters[] = {'x', 'y', 'z'};
    std::vector<std::string> level = {"x", "y", "z"};
    for (int len = 1; len <= 6; ++len) {
      all_words.insert(all_words.end(), level.begin(), level.end());
      std::vector<std::string> next;
      for (const std::string& w : level) {
        for (char l : letters) {
          next.push_back(w + l);
        }
      }
      level = std::move(next);
    }
  }
  auto eval_vector = [&](const FiniteSemigroup& s, const std::string& w) {
    const int n = s.size();
    std::vector<int> vec;
    vec.reserve(n * n * n);
    for (int xv = 0; xv < n; ++xv) {
      for (int yv = 0; yv < n; ++yv) {
        for (int zv = 0; zv < n; ++zv) {
          int acc = -1;
          for (char l : w) {
            int value = l == 'x' ? xv : l == 'y' ? yv : zv;
            acc = acc < 0 ? value : s.product(acc, value);
          }
          vec.push_back(acc);
        }
      }
    }
    return vec;
  };
  // oracle: membership refuted iff two words agree in s but differ in x
  auto oracle_refutes = [&](const FiniteSemigroup& x,
                            const FiniteSemigroup& s) {
    std::map<std::vector<int>, std::vector<int>> buckets;
    for (std::size_t i = 0; i < all_words.size(); ++i) {
      buckets[eval_vector(s, all_words[i])].push_back(static_cast<int>(i));
    }
    for (const auto& [vec, members] : buckets) {
      if (members.size() < 2) {
        continue;
      }
      std::vector<int> first = eval_vector(x, all_words[members[0]]);
      for (std::size_t i = 1; i < members.size(); ++i) {
        if (eval_vector(x, all_words[members[i]]) != first) {
          return true;
        }
      }
    }
    return false;
  };

  std::vector<std::pair<std::string, FiniteSemigroup>> small;
  for (const auto& [name, key] : catalog_keys()) {
    FiniteSemigroup s = get(key);
    if (s.size() <= 4) {
      small.emplace_back(name, std::move(s));
    }
  }
  c.require(small.size() >= 10, "expected at least 10 small catalog tables");
  for (const auto& [xname, x] : small) {
    for (const auto& [sname, s] : small) {
      varieties::MembershipVerdict v = varieties::member_of_var(x, s);
      bool refuted = oracle_refutes(x, s);
      if (v.outcome == Membership::In) {
        c.require(!refuted, xname + " in Var(" + sname +
                                ") but the oracle refutes it");
      } else if (v.outcome == Membership::NotIn) {
        c.require(refuted, xname + " not in Var(" + sname +
                               ") but the oracle finds no refutation");
      } else {
        c.require(false, xname + " / " + sname + " inconclusive");
      }
    }
  }
}

void criterion_10_b2_criterion(Check& c) {
  FiniteSemigroup trivial = catalog::cyclic_group(1);
  FiniteSemigroup a2 = get(Name::A2);
  for (int l = 1; l <= 3; ++l) {
    for (int r = 1; r <= 3; ++r) {
      const int cells = l * r;
      for (int mask = 0; mask < (1 << cells); ++mask) {
        std::vector<std::vector<std::optional<int>>> p(
            r, std::vector<std::optional<int>>(l));
        for (int i = 0; i < cells; ++i) {
          p[i / l][i % l] = (mask >> i) & 1
                                ? std::optional<int>(0)
                                : std::nullopt;
        }
        catalog::ReesMatrixSpec spec{trivial, l, r, p};
        bool valid = true;
        try {
          catalog::check_spec(spec);
        } catch (const std::invalid_argument&) {
          valid = false;
        }
        if (!valid) {
          continue;
        }
        FiniteSemigroup m = catalog::rees_matrix(spec);
        Tri divided = algebra::divides(a2, m);
        if (divided == Tri::Inconclusive) {
          c.require(false, m.label() + ": divisor search inconclusive");
          continue;
        }
        bool b2_pattern = catalog::is_b2_sandwich(spec);
        c.require(b2_pattern == (divided == Tri::False),
                  m.label() + " pattern " + std::to_string(mask) +
                      ": criterion disagrees with the divisor test");
      }
    }
  }
}

void criterion_11_green_spot_checks(Check& c) {
  FiniteSemigroup b2 = get(Name::B2);
  algebra::GreenStructure g = algebra::green(b2);
  c.require(g.j.classes.size() == 2, "B2 does not have 2 J-classes");
  int top = g.j.class_of[idx(b2, "a")];
  for (int e : g.j.classes[top]) {
    c.require(g.h.classes[g.h.class_of[e]].size() == 1,
              "B2 top-class H-classes are not singletons");
  }
  c.require(algebra::is_completely_0_simple(b2),
            "B2 is not completely 0-simple");
  c.require(!algebra::is_0_simple(get(Name::N2)), "N2 claims 0-simplicity");
  for (const auto& [name, key] : catalog_keys()) {
    FiniteSemigroup s = get(key);
    if (algebra::is_0_simple(s)) {
      c.require(algebra::is_completely_0_simple(s),
                name + " breaks Mann consistency");
    }
  }
}

void criterion_12_determinism(Check& c) {
  const std::string data = std::string(RSV_SOURCE_DIR) + "/data/";
  std::vector<std::vector<std::string>> inputs = {
      {"classify", data + "semilattice.ids"},
      {"classify", data + "x2x3.ids"},
      {"classify", data + "commutative.ids"},
      {"classify", data + "hall1.ids"},
      {"classify", "--semigroup", "catalog:B2"},
      {"classify", "--semigroup", "catalog:Z2"},
      {"classify", "--semigroup", "catalog:N2"},
      {"classify", "--semigroup", "catalog:L2_1"},
  };
  for (const auto& input : inputs) {
    std::vector<std::string> plain = {"--format", "json"};
    plain.insert(plain.end(), input.begin(), input.end());
    std::vector<std::string> parallel = {"--format", "json", "--parallel"};
    parallel.insert(parallel.end(), input.begin(), input.end());
    std::string outputs[3];
    int exit_codes[3];
    int i = 0;
    for (const auto& args : {plain, plain, parallel}) {
      std::ostringstream out, err;
      exit_codes[i] = cli::run(args, out, err);
      outputs[i] = out.str();
      ++i;
    }
    c.require(exit_codes[0] == 0, input.back() + ": nonzero exit");
    c.require(outputs[0] == outputs[1],
              input.back() + ": repeated run differs");
    c.require(outputs[0] == outputs[2],
              input.back() + ": parallel run differs");
    c.require(!outputs[0].empty() &&
                  nlohmann::json::parse(outputs[0])["schema"] == 1,
              input.back() + ": bad report envelope");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>>
      criteria = {
          {"catalog validity and pinned sizes", criterion_1_catalog_validity},
          {"defining presentations match the catalog",
           criterion_2_presentations},
          {"necessity witness vectors", criterion_3_necessity_vectors},
          {"identity-system decision end to end",
           criterion_4_identity_system_decision},
          {"Hall soundness sweep over Rees matrix semigroups",
           criterion_5_hall_soundness},
          {"forbidden members fail a Hall identity at n = 1..3",
           criterion_6_forbidden_necessity},
          {"exactness in both input modes", criterion_7_exactness},
          {"principal-factor separation consistency",
           criterion_8_separation_consistency},
          {"membership agrees with the identity-sampling oracle",
           criterion_9_membership_oracle},
          {"block-diagonal criterion agrees with the divisor test",
           criterion_10_b2_criterion},
          {"Green structure spot checks", criterion_11_green_spot_checks},
          {"byte-identical reports across runs and parallelism",
           criterion_12_determinism},
      };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    std::ostringstream line;
    line << "[" << (i + 1 < 10 ? " " : "") << i + 1 << "] ";
    if (check.failures.empty()) {
      line << "PASS " << criteria[i].first;
    } else {
      ++failed;
      line << "FAIL " << criteria[i].first << " -- "
           << check.failures.front();
      if (check.failures.size() > 1) {
        line << " (+" << check.failures.size() - 1 << " more)";
      }
    }
    std::cout << line.str() << std::endl;
  }
  if (failed == 0) {
    std::cout << "all " << criteria.size() << " acceptance criteria passed"
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
