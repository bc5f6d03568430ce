#include "rsv/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace rsv::catalog {

namespace {

using algebra::validate;

FiniteSemigroup checked(FiniteSemigroup s) {
  if (s.size() <= 512) {
    algebra::ValidationReport report = validate(s);
    if (!report.ok()) {
      throw std::logic_error("catalog table '" + s.label() + "' is invalid: " +
                             report.issues.front().describe(s));
    }
  }
  return s;
}

// Builds a table from the named products, completing every unmentioned
// product to the adjoined zero.
FiniteSemigroup zero_completed(
    const std::string& label, const std::vector<std::string>& nonzero,
    const std::vector<std::tuple<std::string, std::string, std::string>>&
        products) {
  std::vector<std::string> labels = nonzero;
  labels.push_back("0");
  const int n = static_cast<int>(labels.size());
  const int zero = n - 1;
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    index[labels[i]] = i;
  }
  std::vector<std::vector<int>> table(n, std::vector<int>(n, zero));
  for (const auto& [a, b, c] : products) {
    table.at(index.at(a)).at(index.at(b)) = index.at(c);
  }
  return checked(FiniteSemigroup(label, labels, table, zero));
}

FiniteSemigroup presented(const std::string& label, int number,
                          int parameter = 1) {
  FiniteSemigroup s = enumerate_presentation(
      indicator_presentation(number, parameter), PresentationCaps{});
  s.set_label(label);
  return s;
}

FiniteSemigroup dual(FiniteSemigroup s, const std::string& label) {
  FiniteSemigroup t = algebra::transpose(s);
  t.set_label(label);
  return t;
}

FiniteSemigroup make_A() {
  return zero_completed("A", {"e", "y", "z"},
                        {{"e", "e", "e"},
                         {"e", "y", "z"},
                         {"y", "e", "z"},
                         {"e", "z", "z"},
                         {"z", "e", "z"}});
}

FiniteSemigroup make_B() {
  return zero_completed("B", {"x", "y", "a", "b", "c"},
                        {{"x", "y", "a"},
                         {"y", "x", "b"},
                         {"a", "x", "c"},
                         {"x", "b", "c"},
                         {"y", "a", "c"},
                         {"b", "y", "c"}});
}

FiniteSemigroup make_C_lambda() {
  return zero_completed("C_lambda", {"x", "e", "y", "z"},
                        {{"x", "x", "e"},
                         {"x", "e", "e"},
                         {"e", "x", "e"},
                         {"e", "e", "e"},
                         {"x", "y", "y"},
                         {"e", "y", "y"},
                         {"y", "x", "z"},
                         {"x", "z", "z"},
                         {"e", "z", "z"}});
}

FiniteSemigroup make_N3() {
  return zero_completed("N3", {"a", "b"}, {{"a", "a", "b"}});
}

FiniteSemigroup make_S0() {
  return zero_completed("S0", {"a", "b", "c"},
                        {{"a", "b", "c"}, {"b", "a", "c"}});
}

FiniteSemigroup make_S1l() {
  return zero_completed("S1l", {"e", "a"},
                        {{"e", "e", "e"}, {"a", "e", "a"}});
}

// S2l is known only through its displayed equations; this is the
// zero-completed reconstruction, validated for associativity.
FiniteSemigroup make_S2l() {
  return zero_completed("S2l", {"a", "u", "v", "e", "f"},
                        {{"u", "e", "a"},
                         {"v", "f", "a"},
                         {"a", "e", "a"},
                         {"a", "f", "a"},
                         {"e", "e", "e"},
                         {"e", "f", "e"},
                         {"f", "f", "f"},
                         {"f", "e", "f"}});
}

FiniteSemigroup make_S3l() {
  // yz = z for all y and z != x; ex = fx = x^2 = e; gx = f. No zero.
  const std::vector<std::string> labels = {"x", "e", "f", "g"};
  auto idx = [&](const std::string& l) {
    return static_cast<int>(std::find(labels.begin(), labels.end(), l) -
                            labels.begin());
  };
  const int x = idx("x"), e = idx("e"), f = idx("f"), g = idx("g");
  std::vector<std::vector<int>> table(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      table[a][b] = b;  // right-zero part
    }
  }
  table[x][x] = e;
  table[e][x] = e;
  table[f][x] = e;
  table[g][x] = f;
  return checked(FiniteSemigroup("S3l", labels, table, std::nullopt));
}

FiniteSemigroup make_Ml() {
  return zero_completed("Ml", {"c", "a", "b", "e", "f"},
                        {{"a", "e", "c"},
                         {"a", "f", "c"},
                         {"b", "e", "c"},
                         {"c", "e", "c"},
                         {"c", "f", "c"},
                         {"e", "e", "e"},
                         {"e", "f", "e"},
                         {"f", "f", "f"},
                         {"f", "e", "f"}});
}

FiniteSemigroup make_Tl() {
  // Elements (m,x) in {1,2} x {a,b}, then 1, 2, a, b, 0.
  std::vector<std::string> labels = {"(1,a)", "(1,b)", "(2,a)", "(2,b)",
                                     "1",     "2",     "a",     "b",
                                     "0"};
  auto pair_index = [](int m, int x) { return (m - 1) * 2 + x; };  // x: 0=a,1=b
  const int one = 4, two = 5, ea = 6, eb = 7, zero = 8;
  auto lambda_index = [&](int m) { return m == 1 ? one : two; };
  auto x_index = [&](int x) { return x == 0 ? ea : eb; };
  std::vector<std::vector<int>> table(9, std::vector<int>(9, zero));
  for (int m = 1; m <= 2; ++m) {
    for (int x = 0; x <= 1; ++x) {
      for (int n = 1; n <= 2; ++n) {
        for (int y = 0; y <= 1; ++y) {
          // (m,x)(n,y) = (min(m,n), y)
          table[pair_index(m, x)][pair_index(n, y)] =
              pair_index(std::min(m, n), y);
        }
      }
    }
  }
  for (int n = 1; n <= 2; ++n) {
    for (int y = 0; y <= 1; ++y) {
      for (int x = 0; x <= 1; ++x) {
        table[x_index(x)][pair_index(n, y)] = x_index(y);  // x(n,y) = y
      }
      for (int m = 1; m <= 2; ++m) {
        // m(n,y) = m if m <= n, else y
        table[lambda_index(m)][pair_index(n, y)] =
            m <= n ? lambda_index(m) : x_index(y);
      }
    }
  }
  return checked(FiniteSemigroup("Tl", labels, table, zero));
}

FiniteSemigroup make_L2_1() {
  // Left zeros a, b with outer unity e.
  std::vector<std::vector<int>> table = {{0, 0, 0}, {1, 1, 1}, {0, 1, 2}};
  return checked(
      FiniteSemigroup("L2_1", {"a", "b", "e"}, table, std::nullopt));
}

FiniteSemigroup make_R2_1() {
  // Built from the displayed relations: right zeros with outer unity.
  std::vector<std::vector<int>> table = {{0, 1, 0}, {0, 1, 1}, {0, 1, 2}};
  return checked(
      FiniteSemigroup("R2_1", {"a", "b", "e"}, table, std::nullopt));
}

FiniteSemigroup make_N2() {
  return zero_completed("N2", {"a"}, {});
}

FiniteSemigroup make_A0() {
  return zero_completed("A0", {"x", "y", "xy"},
                        {{"x", "x", "x"},
                         {"y", "y", "y"},
                         {"x", "y", "xy"},
                         {"x", "xy", "xy"},
                         {"xy", "y", "xy"}});
}

FiniteSemigroup make_A2() {
  return zero_completed("A2", {"a", "b", "ab", "ba"},
                        {{"a", "a", "a"},
                         {"a", "b", "ab"},
                         {"a", "ab", "ab"},
                         {"a", "ba", "a"},
                         {"b", "a", "ba"},
                         {"b", "ab", "b"},
                         {"ab", "a", "a"},
                         {"ab", "ab", "ab"},
                         {"ba", "a", "ba"},
                         {"ba", "b", "b"},
                         {"ba", "ab", "b"},
                         {"ba", "ba", "ba"}});
}

FiniteSemigroup make_B2() {
  return zero_completed("B2", {"a", "b", "ab", "ba"},
                        {{"a", "b", "ab"},
                         {"b", "a", "ba"},
                         {"a", "ba", "a"},
                         {"ab", "a", "a"},
                         {"b", "ab", "b"},
                         {"ba", "b", "b"},
                         {"ab", "ab", "ab"},
                         {"ba", "ba", "ba"}});
}

}  // namespace

const std::vector<std::string>& list_names() {
  static const std::vector<std::string> names = {
      "A",    "B",    "C_lambda", "C_rho", "N3",  "D",   "K",   "F_lambda",
      "F_rho", "W_lambda", "W_rho", "L2_1", "R2_1", "N2",  "A0",  "A2",
      "B2",   "S0",   "S1l",      "S1r",   "S2l", "S2r", "S3l", "S3r",
      "Tl",   "Tr",   "Ml",       "Mr"};
  return names;
}

namespace {

const std::map<std::string, Name>& name_table() {
  static const std::map<std::string, Name> table = {
      {"A", Name::A},
      {"B", Name::B},
      {"C_lambda", Name::C_lambda},
      {"C_rho", Name::C_rho},
      {"N3", Name::N3},
      {"D", Name::D},
      {"K", Name::K},
      {"F_lambda", Name::F_lambda},
      {"F_rho", Name::F_rho},
      {"W_lambda", Name::W_lambda},
      {"W_rho", Name::W_rho},
      {"L2_1", Name::L2_1},
      {"R2_1", Name::R2_1},
      {"N2", Name::N2},
      {"A0", Name::A0},
      {"A2", Name::A2},
      {"B2", Name::B2},
      {"S0", Name::S0},
      {"S1l", Name::S1l},
      {"S1r", Name::S1r},
      {"S2l", Name::S2l},
      {"S2r", Name::S2r},
      {"S3l", Name::S3l},
      {"S3r", Name::S3r},
      {"Tl", Name::Tl},
      {"Tr", Name::Tr},
      {"Ml", Name::Ml},
      {"Mr", Name::Mr}};
  return table;
}

}  // namespace

std::string key_to_string(const CatalogKey& key) {
  for (const auto& [text, name] : name_table()) {
    if (name == key.name) {
      return key.parameter ? text + std::to_string(*key.parameter) : text;
    }
  }
  return "?";
}

CatalogKey parse_key(std::string_view text) {
  std::string s(text);
  auto it = name_table().find(s);
  if (it != name_table().end()) {
    if (it->second == Name::K) {
      throw std::invalid_argument("catalog entry K needs a parameter (K1, K2, ...)");
    }
    return CatalogKey{it->second, std::nullopt};
  }
  if (s.size() > 1 && s[0] == 'K' &&
      s.find_first_not_of("0123456789", 1) == std::string::npos) {
    int param = std::stoi(s.substr(1));
    if (param < 1) {
      throw std::invalid_argument("K parameter must be >= 1");
    }
    return CatalogKey{Name::K, param};
  }
  throw std::invalid_argument("unknown catalog entry '" + s + "'");
}

FiniteSemigroup get(const CatalogKey& key) {
  if (key.name == Name::K) {
    if (!key.parameter || *key.parameter < 1) {
      throw std::invalid_argument("K series needs a parameter >= 1");
    }
  } else if (key.parameter) {
    throw std::invalid_argument("only the K series takes a parameter");
  }
  switch (key.name) {
    case Name::A:
      return make_A();
    case Name::B:
      return make_B();
    case Name::C_lambda:
      return make_C_lambda();
    case Name::C_rho:
      return dual(make_C_lambda(), "C_rho");
    case Name::N3:
      return make_N3();
    case Name::D: {
      Presentation p = parse_presentation(
          "gens: x, e\nrels: e*e = e ; x^2 = 0 ; e*x*e = 0");
      FiniteSemigroup s = enumerate_presentation(p);
      s.set_label("D");
      return s;
    }
    case Name::K: {
      FiniteSemigroup s = presented("K" + std::to_string(*key.parameter), 7,
                                    *key.parameter);
      return s;
    }
    case Name::F_lambda: {
      Presentation p = parse_presentation(
          "gens: x, y\n"
          "rels: xy = xyx ; yx = yxy ; xy = xy^2 ; yx = yx^2\n"
          "rels: x^3 = x^2 ; x^2y = x^2 ; y^3 = y^2 ; y^2x = y^2");
      FiniteSemigroup s = enumerate_presentation(p);
      s.set_label("F_lambda");
      return s;
    }
    case Name::F_rho:
      return dual(get(Name::F_lambda), "F_rho");
    case Name::W_lambda: {
      Presentation p = parse_presentation(
          "gens: a, x, y\n"
          "rels: a^2 = 0 ; x^2 = 0 ; y^2 = 0 ; xy = 0 ; yx = 0\n"
          "rels: axay = ax ; ayax = ay ; xay = xax ; yax = yay\n"
          "rels: xaxa = xa ; yaya = ya");
      FiniteSemigroup s = enumerate_presentation(p);
      s.set_label("W_lambda");
      return s;
    }
    case Name::W_rho:
      return dual(get(Name::W_lambda), "W_rho");
    case Name::L2_1:
      return make_L2_1();
    case Name::R2_1:
      return make_R2_1();
    case Name::N2:
      return make_N2();
    case Name::A0:
      return make_A0();
    case Name::A2:
      return make_A2();
    case Name::B2:
      return make_B2();
    case Name::S0:
      return make_S0();
    case Name::S1l:
      return make_S1l();
    case Name::S1r:
      return dual(make_S1l(), "S1r");
    case Name::S2l:
      return make_S2l();
    case Name::S2r:
      return dual(make_S2l(), "S2r");
    case Name::S3l:
      return make_S3l();
    case Name::S3r:
      return dual(make_S3l(), "S3r");
    case Name::Tl:
      return make_Tl();
    case Name::Tr:
      return dual(make_Tl(), "Tr");
    case Name::Ml:
      return make_Ml();
    case Name::Mr:
      return dual(make_Ml(), "Mr");
  }
  throw std::invalid_argument("unknown catalog key");
}

std::optional<std::string> entry_note(const CatalogKey& key) {
  if (key.name == Name::S2l || key.name == Name::S2r) {
    return "reconstructed: the source table is defined elsewhere; this entry "
           "zero-completes the displayed equations and is validated for "
           "associativity";
  }
  return std::nullopt;
}

void check_spec(const ReesMatrixSpec& spec) {
  if (spec.l_size < 1 || spec.r_size < 1) {
    throw std::invalid_argument("L and R must be non-empty");
  }
  if (static_cast<int>(spec.p.size()) != spec.r_size) {
    throw std::invalid_argument("P must have r_size rows");
  }
  for (const auto& row : spec.p) {
    if (static_cast<int>(row.size()) != spec.l_size) {
      throw std::invalid_argument("P rows must have l_size entries");
    }
    for (const auto& entry : row) {
      if (entry && (*entry < 0 || *entry >= spec.group.size())) {
        throw std::invalid_argument("P entry is not a group element");
      }
    }
  }
  for (int r = 0; r < spec.r_size; ++r) {
    bool nonzero = false;
    for (int l = 0; l < spec.l_size; ++l) {
      nonzero = nonzero || spec.p[r][l].has_value();
    }
    if (!nonzero) {
      throw std::invalid_argument("sandwich matrix has an all-zero row");
    }
  }
  for (int l = 0; l < spec.l_size; ++l) {
    bool nonzero = false;
    for (int r = 0; r < spec.r_size; ++r) {
      nonzero = nonzero || spec.p[r][l].has_value();
    }
    if (!nonzero) {
      throw std::invalid_argument("sandwich matrix has an all-zero column");
    }
  }
  // Group check: two-sided identity and inverses.
  const FiniteSemigroup& g = spec.group;
  int identity = -1;
  for (int e = 0; e < g.size(); ++e) {
    bool is_identity = true;
    for (int a = 0; a < g.size(); ++a) {
      if (g.product(e, a) != a || g.product(a, e) != a) {
        is_identity = false;
        break;
      }
    }
    if (is_identity) {
      identity = e;
      break;
    }
  }
  if (identity < 0) {
    throw std::invalid_argument("the coordinate semigroup has no identity");
  }
  for (int a = 0; a < g.size(); ++a) {
    bool invertible = false;
    for (int b = 0; b < g.size(); ++b) {
      if (g.product(a, b) == identity && g.product(b, a) == identity) {
        invertible = true;
        break;
      }
    }
    if (!invertible) {
      throw std::invalid_argument("the coordinate semigroup is not a group");
    }
  }
}

FiniteSemigroup rees_matrix(const ReesMatrixSpec& spec) {
  check_spec(spec);
  const FiniteSemigroup& g = spec.group;
  const int gl = g.size();
  std::vector<std::string> labels;
  for (int l = 0; l < spec.l_size; ++l) {
    for (int k = 0; k < gl; ++k) {
      for (int r = 0; r < spec.r_size; ++r) {
        labels.push_back("(" + std::to_string(l + 1) + "," + g.element(k) +
                         "," + std::to_string(r + 1) + ")");
      }
    }
  }
  labels.push_back("0");
  const int n = static_cast<int>(labels.size());
  const int zero = n - 1;
  auto index = [&](int l, int k, int r) {
    return (l * gl + k) * spec.r_size + r;
  };
  std::vector<std::vector<int>> table(n, std::vector<int>(n, zero));
  for (int l1 = 0; l1 < spec.l_size; ++l1) {
    for (int k1 = 0; k1 < gl; ++k1) {
      for (int r1 = 0; r1 < spec.r_size; ++r1) {
        for (int l2 = 0; l2 < spec.l_size; ++l2) {
          for (int k2 = 0; k2 < gl; ++k2) {
            for (int r2 = 0; r2 < spec.r_size; ++r2) {
              const auto& sandwich = spec.p[r1][l2];
              if (sandwich) {
                table[index(l1, k1, r1)][index(l2, k2, r2)] = index(
                    l1, g.product(g.product(k1, *sandwich), k2), r2);
              }
            }
          }
        }
      }
    }
  }
  std::string label = "M0(" + g.label() + ";" + std::to_string(spec.l_size) +
                      "x" + std::to_string(spec.r_size) + ")";
  return checked(FiniteSemigroup(label, labels, table, zero));
}

FiniteSemigroup brandt(const FiniteSemigroup& group, int k) {
  if (k < 1) {
    throw std::invalid_argument("Brandt size must be >= 1");
  }
  // Identity sandwich matrix over the group's identity element.
  int identity = -1;
  for (int e = 0; e < group.size(); ++e) {
    bool ok = true;
    for (int a = 0; a < group.size(); ++a) {
      if (group.product(e, a) != a || group.product(a, e) != a) {
        ok = false;
        break;
      }
    }
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) {
    throw std::invalid_argument("Brandt construction needs a group");
  }
  std::vector<std::vector<std::optional<int>>> p(
      k, std::vector<std::optional<int>>(k, std::nullopt));
  for (int i = 0; i < k; ++i) {
    p[i][i] = identity;
  }
  ReesMatrixSpec spec{group, k, k, std::move(p)};
  FiniteSemigroup s = rees_matrix(spec);
  s.set_label("B(" + group.label() + "," + std::to_string(k) + ")");
  return s;
}

FiniteSemigroup cyclic_group(int k) {
  if (k < 1) {
    throw std::invalid_argument("cyclic group order must be >= 1");
  }
  std::vector<std::string> labels;
  labels.push_back("e");
  for (int i = 1; i < k; ++i) {
    labels.push_back(i == 1 ? "a" : "a" + std::to_string(i));
  }
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      table[i][j] = (i + j) % k;
    }
  }
  return checked(FiniteSemigroup("Z" + std::to_string(k), labels, table,
                                 std::nullopt));
}

FiniteSemigroup coset_extension(const FiniteSemigroup& group,
                                const std::vector<int>& subgroup, Side side) {
  const int n = group.size();
  std::vector<char> in_h(n, 0);
  for (int h : subgroup) {
    if (h < 0 || h >= n) {
      throw std::invalid_argument("subgroup element out of range");
    }
    in_h[h] = 1;
  }
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n; ++a) {
      if (group.product(e, a) != a || group.product(a, e) != a) {
        ok = false;
        break;
      }
    }
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) {
    throw std::invalid_argument("coset extension needs a group");
  }
  if (!in_h[identity]) {
    throw std::invalid_argument("subgroup must contain the identity");
  }
  for (int a : subgroup) {
    bool has_inverse = false;
    for (int b : subgroup) {
      if (group.product(a, b) == identity) {
        has_inverse = true;
      }
      if (!in_h[group.product(a, b)]) {
        throw std::invalid_argument("subgroup is not closed");
      }
    }
    if (!has_inverse) {
      throw std::invalid_argument("subgroup is not inverse-closed");
    }
  }

  // Cosets: gH for the left version, Hg for the right one. Each coset is
  // canonicalized by its least member.
  auto coset_rep = [&](int g) {
    int rep = n;
    for (int h = 0; h < n; ++h) {
      if (!in_h[h]) {
        continue;
      }
      int member = side == Side::Left ? group.product(g, h)
                                      : group.product(h, g);
      rep = std::min(rep, member);
    }
    return rep;
  };
  std::vector<int> reps;  // sorted distinct coset representatives
  for (int g = 0; g < n; ++g) {
    int r = coset_rep(g);
    if (std::find(reps.begin(), reps.end(), r) == reps.end()) {
      reps.push_back(r);
    }
  }
  std::sort(reps.begin(), reps.end());
  std::vector<int> coset_of(n);  // group element -> coset position
  for (int g = 0; g < n; ++g) {
    coset_of[g] = static_cast<int>(
        std::find(reps.begin(), reps.end(), coset_rep(g)) - reps.begin());
  }

  const int cosets = static_cast<int>(reps.size());
  const int total = n + cosets + 1;
  const int zero = total - 1;
  std::vector<std::string> labels = group.elements();
  for (int c = 0; c < cosets; ++c) {
    labels.push_back(side == Side::Left ? group.element(reps[c]) + "H"
                                        : "H" + group.element(reps[c]));
  }
  labels.push_back("0");
  std::vector<std::vector<int>> table(total, std::vector<int>(total, zero));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[a][b] = group.product(a, b);
    }
  }
  if (side == Side::Left) {
    // g1 * (g2 H) = (g1 g2) H; products starting from a coset are 0.
    for (int a = 0; a < n; ++a) {
      for (int c = 0; c < cosets; ++c) {
        table[a][n + c] = n + coset_of[group.product(a, reps[c])];
      }
    }
  } else {
    // (H g1) * g2 = H (g1 g2); products ending at a coset are 0.
    for (int c = 0; c < cosets; ++c) {
      for (int b = 0; b < n; ++b) {
        table[n + c][b] = n + coset_of[group.product(reps[c], b)];
      }
    }
  }
  std::string label = "(" + group.label() + ":H)" +
                      (side == Side::Left ? "_l" : "_r");
  return checked(FiniteSemigroup(label, labels, table, zero));
}

bool is_b2_sandwich(const ReesMatrixSpec& spec) {
  check_spec(spec);
  // Union-find over R + L nodes joined at nonzero entries.
  std::vector<int> parent(spec.r_size + spec.l_size);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (int r = 0; r < spec.r_size; ++r) {
    for (int l = 0; l < spec.l_size; ++l) {
      if (spec.p[r][l]) {
        parent[find(r)] = find(spec.r_size + l);
      }
    }
  }
  for (int r = 0; r < spec.r_size; ++r) {
    for (int l = 0; l < spec.l_size; ++l) {
      if (!spec.p[r][l] && find(r) == find(spec.r_size + l)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace rsv::catalog
