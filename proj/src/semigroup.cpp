#include "rsv/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace rsv::algebra {

namespace {

// Constructors validate their own output up to this size; beyond it the
// cubic associativity sweep is left to an explicit validate() call.
constexpr int kAutoValidateBound = 512;

void require(bool condition, const std::string& message) {
  if (!condition) {
    throw std::invalid_argument(message);
  }
}

}  // namespace

FiniteSemigroup::FiniteSemigroup(std::string label,
                                 std::vector<std::string> elements,
                                 std::vector<std::vector<int>> table,
                                 std::optional<int> zero)
    : label_(std::move(label)),
      elements_(std::move(elements)),
      zero_(zero),
      n_(static_cast<int>(elements_.size())) {
  require(n_ >= 1, "a semigroup needs at least one element");
  require(static_cast<int>(table.size()) == n_,
          "table must have one row per element");
  std::set<std::string> seen(elements_.begin(), elements_.end());
  require(static_cast<int>(seen.size()) == n_,
          "element labels must be distinct");
  table_.reserve(static_cast<std::size_t>(n_) * n_);
  for (const auto& row : table) {
    require(static_cast<int>(row.size()) == n_,
            "table rows must have one entry per element");
    for (int v : row) {
      require(v >= 0 && v < n_, "table entry out of range");
      table_.push_back(v);
    }
  }
  if (zero_) {
    require(*zero_ >= 0 && *zero_ < n_, "zero index out of range");
  }
}

int FiniteSemigroup::power(int a, int k) const {
  if (k < 1) {
    throw std::invalid_argument("power exponent must be >= 1");
  }
  int acc = a;
  for (int i = 1; i < k; ++i) {
    acc = product(acc, a);
  }
  return acc;
}

int FiniteSemigroup::index_of(const std::string& element_label) const {
  for (int i = 0; i < n_; ++i) {
    if (elements_[i] == element_label) {
      return i;
    }
  }
  return -1;
}

nlohmann::json FiniteSemigroup::to_json() const {
  nlohmann::json j;
  j["label"] = label_;
  j["elements"] = elements_;
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < n_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < n_; ++k) {
      row.push_back(product(i, k));
    }
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  j["zero"] = zero_ ? nlohmann::json(*zero_) : nlohmann::json(nullptr);
  return j;
}

FiniteSemigroup FiniteSemigroup::from_json(const nlohmann::json& j) {
  require(j.is_object(), "table file must be a JSON object");
  for (const char* field : {"label", "elements", "table", "zero"}) {
    require(j.contains(field),
            std::string("table file is missing the \"") + field +
                "\" field");
  }
  require(j["label"].is_string(), "\"label\" must be a string");
  require(j["elements"].is_array(), "\"elements\" must be an array");
  std::vector<std::string> elements;
  for (const auto& e : j["elements"]) {
    require(e.is_string(), "\"elements\" entries must be strings");
    elements.push_back(e.get<std::string>());
  }
  require(j["table"].is_array(), "\"table\" must be an array of rows");
  std::vector<std::vector<int>> table;
  for (const auto& row : j["table"]) {
    require(row.is_array(), "\"table\" rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      require(v.is_number_integer(), "\"table\" entries must be integers");
      r.push_back(v.get<int>());
    }
    table.push_back(std::move(r));
  }
  std::optional<int> zero;
  if (!j["zero"].is_null()) {
    require(j["zero"].is_number_integer(), "\"zero\" must be an index or null");
    zero = j["zero"].get<int>();
  }
  return FiniteSemigroup(j["label"].get<std::string>(), std::move(elements),
                         std::move(table), zero);
}

std::string ValidationIssue::describe(const FiniteSemigroup& s) const {
  if (kind == Kind::Associativity) {
    return "(" + s.element(a) + "*" + s.element(b) + ")*" + s.element(c) +
           " != " + s.element(a) + "*(" + s.element(b) + "*" + s.element(c) +
           ")";
  }
  return "zero is not absorbing at " + s.element(a) + ", " + s.element(b);
}

ValidationReport validate(const FiniteSemigroup& s) {
  ValidationReport report;
  const int n = s.size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = s.product(a, b);
      for (int c = 0; c < n; ++c) {
        if (s.product(ab, c) != s.product(a, s.product(b, c))) {
          report.issues.push_back(
              {ValidationIssue::Kind::Associativity, a, b, c});
        }
      }
    }
  }
  if (s.zero()) {
    const int z = *s.zero();
    for (int a = 0; a < n; ++a) {
      if (s.product(z, a) != z || s.product(a, z) != z) {
        report.issues.push_back({ValidationIssue::Kind::Zero, z, a, 0});
      }
    }
  }
  return report;
}

namespace {

FiniteSemigroup checked(FiniteSemigroup s) {
  if (s.size() <= kAutoValidateBound) {
    ValidationReport report = validate(s);
    if (!report.ok()) {
      throw std::logic_error("constructed table for '" + s.label() +
                             "' is invalid: " +
                             report.issues.front().describe(s));
    }
  }
  return s;
}

}  // namespace

int eval_word(const FiniteSemigroup& s, const Word& w, const Assignment& asg) {
  int acc = -1;
  for (Variable v : w.letters()) {
    auto it = asg.find(v);
    if (it == asg.end()) {
      throw std::invalid_argument(std::string("no value assigned to '") +
                                  v.symbol + "'");
    }
    if (it->second < 0 || it->second >= s.size()) {
      throw std::invalid_argument("assignment value out of range");
    }
    acc = acc < 0 ? it->second : s.product(acc, it->second);
  }
  return acc;
}

std::vector<int> subsemigroup_closure(const FiniteSemigroup& s,
                                      const std::vector<int>& gens) {
  if (gens.empty()) {
    throw std::invalid_argument("closure needs at least one generator");
  }
  std::vector<char> in(s.size(), 0);
  std::vector<int> members;
  for (int g : gens) {
    if (!in[g]) {
      in[g] = 1;
      members.push_back(g);
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (int p : {s.product(members[i], members[k]),
                    s.product(members[k], members[i])}) {
        if (!in[p]) {
          in[p] = 1;
          members.push_back(p);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

FiniteSemigroup subsemigroup(const FiniteSemigroup& s,
                             const std::vector<int>& closed_elements) {
  std::vector<int> index(s.size(), -1);
  for (std::size_t i = 0; i < closed_elements.size(); ++i) {
    index[closed_elements[i]] = static_cast<int>(i);
  }
  const int m = static_cast<int>(closed_elements.size());
  std::vector<std::string> labels;
  labels.reserve(m);
  for (int e : closed_elements) {
    labels.push_back(s.element(e));
  }
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m; ++k) {
      int p = s.product(closed_elements[i], closed_elements[k]);
      if (index[p] < 0) {
        throw std::invalid_argument("element set is not product-closed");
      }
      table[i][k] = index[p];
    }
  }
  std::optional<int> zero;
  for (int z = 0; z < m && !zero; ++z) {
    bool absorbing = true;
    for (int a = 0; a < m; ++a) {
      if (table[z][a] != z || table[a][z] != z) {
        absorbing = false;
        break;
      }
    }
    if (absorbing && m > 1) {
      zero = z;
    }
  }
  return FiniteSemigroup("sub(" + s.label() + ")", std::move(labels),
                         std::move(table), zero);
}

std::vector<int> idempotents(const FiniteSemigroup& s) {
  std::vector<int> out;
  for (int e = 0; e < s.size(); ++e) {
    if (s.product(e, e) == e) {
      out.push_back(e);
    }
  }
  return out;
}

bool is_primitive_idempotent(const FiniteSemigroup& s, int e) {
  if (s.product(e, e) != e) {
    throw std::invalid_argument("element is not idempotent");
  }
  if (s.zero() && e == *s.zero()) {
    return false;
  }
  for (int f : idempotents(s)) {
    if (f == e || (s.zero() && f == *s.zero())) {
      continue;
    }
    if (s.product(e, f) == f && s.product(f, e) == f) {
      return false;
    }
  }
  return true;
}

namespace {

std::vector<char> right_ideal(const FiniteSemigroup& s, int a) {
  std::vector<char> in(s.size(), 0);
  in[a] = 1;
  for (int t = 0; t < s.size(); ++t) {
    in[s.product(a, t)] = 1;
  }
  return in;
}

std::vector<char> left_ideal(const FiniteSemigroup& s, int a) {
  std::vector<char> in(s.size(), 0);
  in[a] = 1;
  for (int t = 0; t < s.size(); ++t) {
    in[s.product(t, a)] = 1;
  }
  return in;
}

std::vector<char> two_sided_ideal(const FiniteSemigroup& s, int a) {
  // S^1 a S^1 = {a} + aS + Sa + S(aS)
  std::vector<char> in = right_ideal(s, a);
  std::vector<int> base;
  for (int e = 0; e < s.size(); ++e) {
    if (in[e]) {
      base.push_back(e);
    }
  }
  for (int u = 0; u < s.size(); ++u) {
    for (int r : base) {
      in[s.product(u, r)] = 1;
    }
  }
  return in;
}

template <typename Key>
Partition partition_by_keys(const std::vector<Key>& keys) {
  Partition p;
  p.class_of.assign(keys.size(), -1);
  std::map<Key, int> ids;
  for (std::size_t e = 0; e < keys.size(); ++e) {
    auto [it, inserted] =
        ids.emplace(keys[e], static_cast<int>(p.classes.size()));
    if (inserted) {
      p.classes.emplace_back();
    }
    p.class_of[e] = it->second;
    p.classes[it->second].push_back(static_cast<int>(e));
  }
  return p;
}

}  // namespace

std::vector<int> principal_ideal(const FiniteSemigroup& s, int x) {
  std::vector<char> in = two_sided_ideal(s, x);
  std::vector<int> out;
  for (int e = 0; e < s.size(); ++e) {
    if (in[e]) {
      out.push_back(e);
    }
  }
  return out;
}

GreenStructure green(const FiniteSemigroup& s) {
  const int n = s.size();
  std::vector<std::vector<char>> rkeys(n), lkeys(n), jkeys(n);
  for (int a = 0; a < n; ++a) {
    rkeys[a] = right_ideal(s, a);
    lkeys[a] = left_ideal(s, a);
    jkeys[a] = two_sided_ideal(s, a);
  }
  GreenStructure g;
  g.r = partition_by_keys(rkeys);
  g.l = partition_by_keys(lkeys);
  g.j = partition_by_keys(jkeys);

  std::vector<std::pair<int, int>> hkeys(n);
  for (int a = 0; a < n; ++a) {
    hkeys[a] = {g.r.class_of[a], g.l.class_of[a]};
  }
  g.h = partition_by_keys(hkeys);

  const int jc = static_cast<int>(g.j.classes.size());
  g.j_order.assign(jc, std::vector<bool>(jc, false));
  for (int i = 0; i < jc; ++i) {
    for (int k = 0; k < jc; ++k) {
      const auto& small = jkeys[g.j.classes[i].front()];
      const auto& big = jkeys[g.j.classes[k].front()];
      bool contained = true;
      for (int e = 0; e < n; ++e) {
        if (small[e] && !big[e]) {
          contained = false;
          break;
        }
      }
      g.j_order[i][k] = contained;
    }
  }
  return g;
}

IndexPeriod element_index_period(const FiniteSemigroup& s, int a) {
  std::map<int, int> first_seen;  // power value -> exponent
  int value = a;
  int exponent = 1;
  while (true) {
    auto [it, inserted] = first_seen.emplace(value, exponent);
    if (!inserted) {
      return IndexPeriod{it->second, exponent - it->second};
    }
    value = s.product(value, a);
    ++exponent;
  }
}

IndexPeriod index_period(const FiniteSemigroup& s) {
  int index = 1;
  long long period = 1;
  for (int a = 0; a < s.size(); ++a) {
    IndexPeriod ip = element_index_period(s, a);
    index = std::max(index, ip.index);
    period = std::lcm(period, static_cast<long long>(ip.period));
  }
  return IndexPeriod{index, static_cast<int>(period)};
}

FiniteSemigroup principal_factor(const FiniteSemigroup& s, int x) {
  const std::vector<char> jx = two_sided_ideal(s, x);
  // The J-class of x: members y of J(x) whose principal ideal is J(x).
  std::vector<int> jclass;
  bool collapsed_something = false;
  for (int y = 0; y < s.size(); ++y) {
    if (!jx[y]) {
      continue;
    }
    if (two_sided_ideal(s, y) == jx) {
      jclass.push_back(y);
    } else {
      collapsed_something = true;
    }
  }
  const int m = static_cast<int>(jclass.size());
  std::vector<int> position(s.size(), -1);
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) {
    position[jclass[i]] = i;
    labels.push_back(s.element(jclass[i]));
  }
  std::string zero_label = "0";
  while (std::find(labels.begin(), labels.end(), zero_label) != labels.end()) {
    zero_label += "'";
  }
  labels.push_back(zero_label);
  const int zero_index = m;
  std::vector<std::vector<int>> table(m + 1, std::vector<int>(m + 1,
                                                              zero_index));
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m; ++k) {
      int p = s.product(jclass[i], jclass[k]);
      table[i][k] = position[p] >= 0 ? position[p] : zero_index;
    }
  }
  (void)collapsed_something;  // the factor carries a zero either way
  return checked(FiniteSemigroup(s.label() + ":K(" + s.element(x) + ")",
                                 std::move(labels), std::move(table),
                                 zero_index));
}

bool is_0_simple(const FiniteSemigroup& s) {
  if (!s.zero()) {
    return false;
  }
  const int z = *s.zero();
  bool nonzero_product = false;
  for (int a = 0; a < s.size() && !nonzero_product; ++a) {
    for (int b = 0; b < s.size(); ++b) {
      if (s.product(a, b) != z) {
        nonzero_product = true;
        break;
      }
    }
  }
  if (!nonzero_product) {
    return false;
  }
  for (int a = 0; a < s.size(); ++a) {
    if (a == z) {
      continue;
    }
    if (static_cast<int>(principal_ideal(s, a).size()) != s.size()) {
      return false;
    }
  }
  return true;
}

bool is_completely_0_simple(const FiniteSemigroup& s) {
  if (!is_0_simple(s)) {
    return false;
  }
  for (int e : idempotents(s)) {
    if (e != *s.zero() && is_primitive_idempotent(s, e)) {
      return true;
    }
  }
  return false;
}

bool is_completely_simple(const FiniteSemigroup& s) {
  for (int a = 0; a < s.size(); ++a) {
    if (static_cast<int>(principal_ideal(s, a).size()) != s.size()) {
      return false;
    }
  }
  for (int e : idempotents(s)) {
    if (is_primitive_idempotent(s, e)) {
      return true;
    }
  }
  return false;
}

bool is_regular_element(const FiniteSemigroup& s, int a) {
  for (int t = 0; t < s.size(); ++t) {
    if (s.product(s.product(a, t), a) == a) {
      return true;
    }
  }
  return false;
}

namespace {

bool generates(const FiniteSemigroup& s, const std::vector<int>& gens) {
  return static_cast<int>(subsemigroup_closure(s, gens).size()) == s.size();
}

// Lexicographically first generating k-subset, or nullopt.
std::optional<std::vector<int>> first_generating_subset(
    const FiniteSemigroup& s, int k) {
  const int n = s.size();
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    if (generates(s, pick)) {
      return pick;
    }
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) {
      --i;
    }
    if (i < 0) {
      return std::nullopt;
    }
    ++pick[i];
    for (int j = i + 1; j < k; ++j) {
      pick[j] = pick[j - 1] + 1;
    }
  }
}

}  // namespace

std::vector<int> minimal_generating_set(const FiniteSemigroup& s) {
  const int n = s.size();
  if (n <= 64) {
    for (int k = 1; k <= std::min(4, n); ++k) {
      if (auto found = first_generating_subset(s, k)) {
        return *found;
      }
    }
  }
  // Greedy removal in ascending index order.
  std::vector<int> gens(n);
  std::iota(gens.begin(), gens.end(), 0);
  for (int e = 0; e < n; ++e) {
    if (gens.size() == 1) {
      break;
    }
    std::vector<int> trial;
    for (int g : gens) {
      if (g != e) {
        trial.push_back(g);
      }
    }
    if (trial.size() < gens.size() && generates(s, trial)) {
      gens = std::move(trial);
    }
  }
  return gens;
}

bool is_homomorphism(const FiniteSemigroup& source,
                     const FiniteSemigroup& target,
                     const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != source.size()) {
    return false;
  }
  for (int a = 0; a < source.size(); ++a) {
    for (int b = 0; b < source.size(); ++b) {
      if (map[source.product(a, b)] != target.product(map[a], map[b])) {
        return false;
      }
    }
  }
  return true;
}

HomSearchResult find_homomorphisms(const FiniteSemigroup& source,
                                   const FiniteSemigroup& target,
                                   bool surjective, int limit,
                                   const SearchCaps& caps) {
  HomSearchResult result;
  const int n = source.size();
  const int tn = target.size();
  const std::vector<int> gens = minimal_generating_set(source);
  const int m = static_cast<int>(gens.size());

  // Expression tree: every element is either a generator or parent*gen.
  std::vector<int> order;          // discovery order
  std::vector<int> parent(n, -1);  // index into `order`
  std::vector<int> via_gen(n, -1); // index into `gens`
  std::vector<char> seen(n, 0);
  for (int g : gens) {
    if (!seen[g]) {
      seen[g] = 1;
      order.push_back(g);
    }
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int gi = 0; gi < m; ++gi) {
      int v = source.product(order[i], gens[gi]);
      if (!seen[v]) {
        seen[v] = 1;
        parent[v] = static_cast<int>(i);
        via_gen[v] = gi;
        order.push_back(v);
      }
    }
  }

  long long checks = 0;
  std::vector<int> gen_image(m, 0);
  std::vector<int> image(n, -1);
  while (true) {
    // Extend the generator images along the expression tree.
    for (std::size_t i = 0; i < order.size(); ++i) {
      int e = order[i];
      image[e] = via_gen[e] < 0
                     ? gen_image[std::find(gens.begin(), gens.end(), e) -
                                 gens.begin()]
                     : target.product(image[order[parent[e]]],
                                      gen_image[via_gen[e]]);
    }
    checks += static_cast<long long>(n) * n;
    if (checks > caps.hom_checks) {
      result.complete = false;
      return result;
    }
    bool good = is_homomorphism(source, target, image);
    if (good && surjective) {
      std::vector<char> hit(tn, 0);
      int count = 0;
      for (int e = 0; e < n; ++e) {
        if (!hit[image[e]]) {
          hit[image[e]] = 1;
          ++count;
        }
      }
      good = count == tn;
    }
    if (good) {
      result.homs.push_back(Homomorphism{image});
      if (limit >= 0 && static_cast<int>(result.homs.size()) >= limit) {
        return result;
      }
    }
    // Next image tuple in lexicographic order.
    int i = m - 1;
    while (i >= 0 && gen_image[i] == tn - 1) {
      gen_image[i] = 0;
      --i;
    }
    if (i < 0) {
      return result;
    }
    ++gen_image[i];
  }
}

namespace {

struct ElementProfile {
  IndexPeriod ip;
  bool idempotent;
  int row_distinct;
  int col_distinct;
  friend bool operator==(const ElementProfile&, const ElementProfile&) =
      default;
};

std::vector<ElementProfile> profiles(const FiniteSemigroup& s) {
  std::vector<ElementProfile> out;
  for (int a = 0; a < s.size(); ++a) {
    std::set<int> row, col;
    for (int b = 0; b < s.size(); ++b) {
      row.insert(s.product(a, b));
      col.insert(s.product(b, a));
    }
    out.push_back({element_index_period(s, a), s.product(a, a) == a,
                   static_cast<int>(row.size()),
                   static_cast<int>(col.size())});
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const FiniteSemigroup& s, const FiniteSemigroup& t)
      : s_(s), t_(t), n_(s.size()) {
    sp_ = profiles(s);
    tp_ = profiles(t);
    map_.assign(n_, -1);
    used_.assign(n_, 0);
    forced_.assign(n_, -1);
  }

  std::optional<std::vector<int>> run() {
    std::multiset<std::pair<std::pair<int, int>, std::pair<bool, int>>> a, b;
    for (int i = 0; i < n_; ++i) {
      a.insert({{sp_[i].ip.index, sp_[i].ip.period},
                {sp_[i].idempotent, sp_[i].row_distinct}});
      b.insert({{tp_[i].ip.index, tp_[i].ip.period},
                {tp_[i].idempotent, tp_[i].row_distinct}});
    }
    if (a != b) {
      return std::nullopt;
    }
    if (extend(0)) {
      return map_;
    }
    return std::nullopt;
  }

 private:
  bool extend(int k) {
    if (k == n_) {
      return is_homomorphism(s_, t_, map_);
    }
    for (int cand = 0; cand < n_; ++cand) {
      if (used_[cand] || !(sp_[k] == tp_[cand])) {
        continue;
      }
      if (forced_[k] >= 0 && forced_[k] != cand) {
        continue;
      }
      map_[k] = cand;
      used_[cand] = 1;
      std::vector<std::pair<int, int>> trail;
      if (propagate(k, trail)) {
        if (extend(k + 1)) {
          return true;
        }
      }
      for (auto [e, old] : trail) {
        forced_[e] = old;
      }
      used_[cand] = 0;
      map_[k] = -1;
    }
    return false;
  }

  // Check products among mapped elements; record forced images of
  // still-unmapped products.
  bool propagate(int k, std::vector<std::pair<int, int>>& trail) {
    for (int i = 0; i <= k; ++i) {
      if (map_[i] < 0) {
        continue;
      }
      for (auto [p, tp] : {std::pair{s_.product(i, k), t_.product(map_[i],
                                                                  map_[k])},
                           std::pair{s_.product(k, i), t_.product(map_[k],
                                                                  map_[i])}}) {
        if (p <= k) {
          if (map_[p] != tp) {
            return false;
          }
        } else {
          if (forced_[p] >= 0 && forced_[p] != tp) {
            return false;
          }
          if (forced_[p] < 0) {
            trail.emplace_back(p, forced_[p]);
            forced_[p] = tp;
          }
        }
      }
    }
    return true;
  }

  const FiniteSemigroup& s_;
  const FiniteSemigroup& t_;
  int n_;
  std::vector<ElementProfile> sp_, tp_;
  std::vector<int> map_, forced_;
  std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<int>> isomorphism(const FiniteSemigroup& s,
                                            const FiniteSemigroup& t) {
  if (s.size() != t.size()) {
    return std::nullopt;
  }
  return IsoSearch(s, t).run();
}

bool are_isomorphic(const FiniteSemigroup& s, const FiniteSemigroup& t) {
  return isomorphism(s, t).has_value();
}

Tri divides(const FiniteSemigroup& t, const FiniteSemigroup& s,
            const SearchCaps& caps) {
  if (t.size() == 1) {
    return Tri::True;
  }
  // If T = phi(U) then the closure of preimages of a generating set of T
  // also maps onto T, so generator subsets up to |gens(T)| are exhaustive.
  const int needed = static_cast<int>(minimal_generating_set(t).size());
  const int bound = std::min({needed, s.size(), caps.subset_size});
  const bool truncated = bound < std::min(needed, s.size());
  bool cap_hit = false;
  const int n = s.size();
  for (int k = 1; k <= bound; ++k) {
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::vector<int> closed = subsemigroup_closure(s, pick);
      if (static_cast<int>(closed.size()) >= t.size()) {
        FiniteSemigroup sub = subsemigroup(s, closed);
        HomSearchResult r = find_homomorphisms(sub, t, true, 1, caps);
        if (!r.homs.empty()) {
          return Tri::True;
        }
        if (!r.complete) {
          cap_hit = true;
        }
      }
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) {
        --i;
      }
      if (i < 0) {
        break;
      }
      ++pick[i];
      for (int j = i + 1; j < k; ++j) {
        pick[j] = pick[j - 1] + 1;
      }
    }
  }
  return (truncated || cap_hit) ? Tri::Inconclusive : Tri::False;
}

FiniteSemigroup direct_product(const FiniteSemigroup& s,
                               const FiniteSemigroup& t) {
  const int ns = s.size(), nt = t.size();
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(ns) * nt);
  for (int a = 0; a < ns; ++a) {
    for (int b = 0; b < nt; ++b) {
      labels.push_back("(" + s.element(a) + "," + t.element(b) + ")");
    }
  }
  const int n = ns * nt;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < ns; ++a) {
    for (int b = 0; b < nt; ++b) {
      for (int c = 0; c < ns; ++c) {
        for (int d = 0; d < nt; ++d) {
          table[a * nt + b][c * nt + d] =
              s.product(a, c) * nt + t.product(b, d);
        }
      }
    }
  }
  std::optional<int> zero;
  if (s.zero() && t.zero()) {
    zero = *s.zero() * nt + *t.zero();
  }
  return checked(FiniteSemigroup("(" + s.label() + "x" + t.label() + ")",
                                 std::move(labels), std::move(table), zero));
}

namespace {

std::string fresh_label(const std::vector<std::string>& taken,
                        std::string base) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end()) {
    base += "'";
  }
  return base;
}

}  // namespace

FiniteSemigroup adjoin_identity(const FiniteSemigroup& s) {
  const int n = s.size();
  std::vector<std::string> labels = s.elements();
  labels.push_back(fresh_label(labels, "1"));
  std::vector<std::vector<int>> table(n + 1, std::vector<int>(n + 1));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[a][b] = s.product(a, b);
    }
    table[a][n] = a;
    table[n][a] = a;
  }
  table[n][n] = n;
  return checked(FiniteSemigroup(s.label() + "^1", std::move(labels),
                                 std::move(table), s.zero()));
}

FiniteSemigroup adjoin_zero(const FiniteSemigroup& s) {
  const int n = s.size();
  std::vector<std::string> labels = s.elements();
  labels.push_back(fresh_label(labels, "0"));
  std::vector<std::vector<int>> table(n + 1, std::vector<int>(n + 1, n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[a][b] = s.product(a, b);
    }
  }
  return checked(FiniteSemigroup(s.label() + "^0", std::move(labels),
                                 std::move(table), n));
}

FiniteSemigroup transpose(const FiniteSemigroup& s) {
  const int n = s.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[a][b] = s.product(b, a);
    }
  }
  return checked(FiniteSemigroup(s.label() + "^op", s.elements(),
                                 std::move(table), s.zero()));
}

SeparationVerdict canonical_principal_factor_separation(
    const FiniteSemigroup& s) {
  const GreenStructure g = green(s);
  const int n = s.size();
  std::vector<std::vector<int>> hom_maps;
  SeparationVerdict verdict{true, {}, std::nullopt};
  for (std::size_t c = 0; c < g.j.classes.size(); ++c) {
    const int rep = g.j.classes[c].front();
    FiniteSemigroup factor = principal_factor(s, rep);
    std::vector<int> phi(n, *factor.zero());
    for (int e : g.j.classes[c]) {
      phi[e] = factor.index_of(s.element(e));
    }
    if (is_homomorphism(s, factor, phi)) {
      hom_maps.push_back(std::move(phi));
    } else {
      verdict.non_hom_classes.push_back(static_cast<int>(c));
    }
  }
  for (int a = 0; a < n && verdict.separated; ++a) {
    for (int b = a + 1; b < n; ++b) {
      bool separated = false;
      for (const auto& phi : hom_maps) {
        if (phi[a] != phi[b]) {
          separated = true;
          break;
        }
      }
      if (!separated) {
        verdict.separated = false;
        verdict.unseparated_pair = {a, b};
        break;
      }
    }
  }
  return verdict;
}

TargetSeparationVerdict separates_by_targets(
    const FiniteSemigroup& s, const std::vector<FiniteSemigroup>& targets,
    std::optional<std::pair<int, int>> pair, const SearchCaps& caps) {
  std::vector<std::vector<int>> maps;
  bool complete = true;
  for (const FiniteSemigroup& t : targets) {
    HomSearchResult r = find_homomorphisms(s, t, false, -1, caps);
    complete = complete && r.complete;
    for (auto& h : r.homs) {
      maps.push_back(std::move(h.map));
    }
  }
  std::vector<std::pair<int, int>> pairs;
  if (pair) {
    pairs.push_back(*pair);
  } else {
    for (int a = 0; a < s.size(); ++a) {
      for (int b = a + 1; b < s.size(); ++b) {
        pairs.emplace_back(a, b);
      }
    }
  }
  for (auto [a, b] : pairs) {
    bool separated = false;
    for (const auto& f : maps) {
      if (f[a] != f[b]) {
        separated = true;
        break;
      }
    }
    if (!separated) {
      return {complete ? Tri::False : Tri::Inconclusive,
              std::make_pair(a, b)};
    }
  }
  return {Tri::True, std::nullopt};
}

}  // namespace rsv::algebra
