#include "rsv/varieties.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <future>
#include <set>

namespace rsv::varieties {

IdentitySystem IdentitySystem::from_identities(std::vector<Identity> ids,
                                               std::string label) {
  IdentitySystem sys;
  sys.label = std::move(label);
  std::set<std::pair<Word, Word>> seen;
  for (Identity& id : ids) {
    std::pair<Word, Word> key =
        id.lhs <= id.rhs ? std::make_pair(id.lhs, id.rhs)
                         : std::make_pair(id.rhs, id.lhs);
    if (seen.insert(std::move(key)).second) {
      sys.identities.push_back(std::move(id));
    }
  }
  return sys;
}

namespace {

// An identity compiled to variable slots for fast table evaluation.
struct CompiledIdentity {
  std::vector<Variable> vars;  // sorted
  std::vector<int> lhs, rhs;   // slot indices
};

CompiledIdentity compile(const Identity& id) {
  CompiledIdentity c;
  std::set<Variable> vars = words::content(id.lhs);
  std::set<Variable> rhs_vars = words::content(id.rhs);
  vars.insert(rhs_vars.begin(), rhs_vars.end());
  c.vars.assign(vars.begin(), vars.end());
  auto slot = [&](Variable v) {
    return static_cast<int>(
        std::lower_bound(c.vars.begin(), c.vars.end(), v) - c.vars.begin());
  };
  for (Variable v : id.lhs.letters()) {
    c.lhs.push_back(slot(v));
  }
  for (Variable v : id.rhs.letters()) {
    c.rhs.push_back(slot(v));
  }
  return c;
}

int eval_slots(const FiniteSemigroup& s, const std::vector<int>& slots,
               const std::vector<int>& values) {
  int acc = values[slots[0]];
  for (std::size_t i = 1; i < slots.size(); ++i) {
    acc = s.product(acc, values[slots[i]]);
  }
  return acc;
}

// Scans assignments whose leading value lies in [lo, hi); returns the first
// counterexample in lexicographic order, if any.
std::optional<Counterexample> scan_assignments(const FiniteSemigroup& s,
                                               const CompiledIdentity& c,
                                               int lo, int hi) {
  const int n = s.size();
  const int k = static_cast<int>(c.vars.size());
  for (int leading = lo; leading < hi; ++leading) {
    std::vector<int> values(k, 0);
    values[0] = leading;
    while (true) {
      int lhs = eval_slots(s, c.lhs, values);
      int rhs = eval_slots(s, c.rhs, values);
      if (lhs != rhs) {
        Counterexample ce;
        for (int i = 0; i < k; ++i) {
          ce.assignment[c.vars[i]] = values[i];
        }
        ce.lhs_value = lhs;
        ce.rhs_value = rhs;
        return ce;
      }
      int i = k - 1;
      while (i >= 1 && values[i] == n - 1) {
        values[i] = 0;
        --i;
      }
      if (i < 1) {
        break;
      }
      ++values[i];
    }
  }
  return std::nullopt;
}

}  // namespace

SatisfactionVerdict satisfies(const FiniteSemigroup& s, const Identity& id,
                              const EvalOptions& opts) {
  if (id.is_tautology()) {
    return {true, std::nullopt};
  }
  CompiledIdentity c = compile(id);
  const int n = s.size();
  if (opts.parallel && n > 1 && c.vars.size() > 1) {
    // Split on the leading variable; joining in range order keeps the
    // reported counterexample the lexicographically first one.
    const int chunks =
        std::min(n, std::max(2, static_cast<int>(
                                    std::thread::hardware_concurrency())));
    std::vector<std::future<std::optional<Counterexample>>> futures;
    futures.reserve(chunks);
    for (int chunk = 0; chunk < chunks; ++chunk) {
      int lo = static_cast<int>(static_cast<long long>(n) * chunk / chunks);
      int hi =
          static_cast<int>(static_cast<long long>(n) * (chunk + 1) / chunks);
      futures.push_back(std::async(std::launch::async, scan_assignments,
                                   std::cref(s), std::cref(c), lo, hi));
    }
    SatisfactionVerdict verdict{true, std::nullopt};
    for (auto& future : futures) {
      auto ce = future.get();
      if (verdict.holds && ce) {
        verdict = {false, ce};
      }
    }
    return verdict;
  }
  if (auto ce = scan_assignments(s, c, 0, n)) {
    return {false, ce};
  }
  return {true, std::nullopt};
}

SatisfactionVerdict satisfies_all(const FiniteSemigroup& s,
                                  const IdentitySystem& sigma,
                                  const EvalOptions& opts) {
  for (std::size_t i = 0; i < sigma.identities.size(); ++i) {
    if (sigma.identities[i].is_tautology()) {
      continue;
    }
    SatisfactionVerdict v = satisfies(s, sigma.identities[i], opts);
    if (!v.holds) {
      v.counterexample->identity_index = static_cast<int>(i);
      return v;
    }
  }
  return {true, std::nullopt};
}

std::optional<PowerIdentity> derive_power_identity(
    const IdentitySystem& sigma) {
  for (const Identity& id : sigma.identities) {
    if (id.is_tautology() || words::is_balanced(id)) {
      continue;
    }
    const int llen = static_cast<int>(id.lhs.size());
    const int rlen = static_cast<int>(id.rhs.size());
    int a = llen;
    int b = rlen;
    if (a == b) {
      // Same lengths: send the first unbalanced variable to x^2 and every
      // other variable to x.
      std::set<Variable> vars = words::content(id.lhs);
      std::set<Variable> rhs_vars = words::content(id.rhs);
      vars.insert(rhs_vars.begin(), rhs_vars.end());
      for (Variable v : vars) {
        int ml = words::multiplicity(id.lhs, v);
        int mr = words::multiplicity(id.rhs, v);
        if (ml != mr) {
          a = llen + ml;
          b = rlen + mr;
          break;
        }
      }
    }
    return PowerIdentity{std::min(a, b), std::abs(a - b)};
  }
  return std::nullopt;
}

FreeObject FreeObject::build(const FiniteSemigroup& base, int k,
                             const FreeObjectCaps& caps) {
  if (k < 1) {
    throw std::invalid_argument("free object arity must be >= 1");
  }
  if (k > 26) {
    throw std::invalid_argument("free object arity exceeds the alphabet");
  }
  const int n = base.size();
  long long coords = 1;
  for (int i = 0; i < k; ++i) {
    coords *= n;
    if (coords > caps.max_coordinates) {
      throw algebra::CapError("free object exceeded the coordinate cap (" +
                              std::to_string(caps.max_coordinates) + ")");
    }
  }

  FreeObject f(base, k);
  // Coordinate c encodes the assignment tuple in mixed radix, generator 0
  // most significant; the generator vectors are the projections.
  auto add = [&](std::vector<int> vec, Word rep) {
    auto [it, inserted] =
        f.index_.emplace(std::move(vec), static_cast<int>(f.elements_.size()));
    if (inserted) {
      f.elements_.push_back(it->first);
      f.rep_words_.push_back(std::move(rep));
      if (static_cast<int>(f.elements_.size()) > caps.max_elements) {
        throw algebra::CapError("free object exceeded the element cap (" +
                                std::to_string(caps.max_elements) + ")");
      }
    }
    return it->second;
  };

  for (int g = 0; g < k; ++g) {
    std::vector<int> vec(coords);
    long long stride = 1;
    for (int i = k - 1; i > g; --i) {
      stride *= n;
    }
    for (long long c = 0; c < coords; ++c) {
      vec[c] = static_cast<int>((c / stride) % n);
    }
    f.generators_.push_back(
        add(std::move(vec),
            Word(std::vector<Variable>{f.generator_variable(g)})));
  }

  for (std::size_t u = 0; u < f.elements_.size(); ++u) {
    f.right_by_gen_.emplace_back(k, -1);
    for (int g = 0; g < k; ++g) {
      std::vector<int> vec(coords);
      const std::vector<int>& uv = f.elements_[u];
      const std::vector<int>& gv = f.elements_[f.generators_[g]];
      for (long long c = 0; c < coords; ++c) {
        vec[c] = base.product(uv[c], gv[c]);
      }
      Word rep = f.rep_words_[u] *
                 Word(std::vector<Variable>{f.generator_variable(g)});
      f.right_by_gen_[u][g] = add(std::move(vec), std::move(rep));
    }
  }
  return f;
}

int FreeObject::product(int u, int v) const {
  const std::vector<int>& uv = elements_[u];
  const std::vector<int>& vv = elements_[v];
  std::vector<int> out(uv.size());
  for (std::size_t c = 0; c < uv.size(); ++c) {
    out[c] = base_.product(uv[c], vv[c]);
  }
  auto it = index_.find(out);
  if (it == index_.end()) {
    throw std::logic_error("free object is not closed");
  }
  return it->second;
}

int FreeObject::eval(const Word& w) const {
  int acc = -1;
  for (Variable v : w.letters()) {
    int g = v.symbol - 'a';
    if (g < 0 || g >= arity_) {
      throw std::invalid_argument("word uses a variable outside the arity");
    }
    acc = acc < 0 ? generators_[g] : product(acc, generators_[g]);
  }
  return acc;
}

FiniteSemigroup FreeObject::to_semigroup() const {
  const int m = size();
  std::vector<std::string> labels;
  labels.reserve(m);
  for (int i = 0; i < m; ++i) {
    labels.push_back(rep_words_[i].str());
  }
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < m; ++v) {
      table[u][v] = product(u, v);
    }
  }
  std::optional<int> zero;
  for (int z = 0; z < m && !zero; ++z) {
    bool absorbing = m > 1;
    for (int a = 0; a < m && absorbing; ++a) {
      absorbing = table[z][a] == z && table[a][z] == z;
    }
    if (absorbing) {
      zero = z;
    }
  }
  return FiniteSemigroup("F_" + std::to_string(arity_) + "(Var(" +
                             base_.label() + "))",
                         std::move(labels), std::move(table), zero);
}

MembershipVerdict member_of_var(const FiniteSemigroup& x,
                                const FiniteSemigroup& s,
                                const FreeObjectCaps& caps,
                                const algebra::SearchCaps& search_caps) {
  if (algebra::divides(x, s, search_caps) == Tri::True) {
    return {Membership::In, std::nullopt, "divisor"};
  }
  const std::vector<int> gens = algebra::minimal_generating_set(x);
  const int k = static_cast<int>(gens.size());
  if (k > 26) {
    return {Membership::Inconclusive, std::nullopt,
            "candidate needs more than 26 generators"};
  }
  std::optional<FreeObject> f;
  try {
    f.emplace(FreeObject::build(s, k, caps));
  } catch (const algebra::CapError& e) {
    return {Membership::Inconclusive, std::nullopt, e.what()};
  }

  // phi maps each free-object element to the evaluation of its
  // representative word at the generators of x. Multiplicativity on the
  // (element, generator) pairs extends to all pairs by induction on the
  // representative words, so checking those pairs decides membership.
  std::vector<int> phi(f->size(), -1);
  for (int g = 0; g < k; ++g) {
    int e = f->generators()[g];
    if (phi[e] < 0) {
      phi[e] = gens[g];
    } else if (phi[e] != gens[g]) {
      // Two generators collapse in the free object but not in x.
      return {Membership::NotIn,
              std::make_pair(Word(std::vector<Variable>{
                                 f->generator_variable(g)}),
                             f->rep_word(e)),
              "generator collapse"};
    }
  }
  for (int u = 0; u < f->size(); ++u) {
    for (int g = 0; g < k; ++g) {
      int w = f->right_multiply_by_generator(u, g);
      int expected = x.product(phi[u], gens[g]);
      if (phi[w] < 0) {
        phi[w] = expected;
      } else if (phi[w] != expected) {
        Word lhs = f->rep_word(u) *
                   Word(std::vector<Variable>{f->generator_variable(g)});
        return {Membership::NotIn,
                std::make_pair(std::move(lhs), f->rep_word(w)),
                "evaluation conflict"};
      }
    }
  }
  return {Membership::In, std::nullopt, "free object quotient"};
}

}  // namespace rsv::varieties
