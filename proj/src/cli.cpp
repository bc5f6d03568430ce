#include "rsv/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "rsv/catalog.hpp"
#include "rsv/decide.hpp"
#include "rsv/semigroup.hpp"
#include "rsv/varieties.hpp"
#include "rsv/words.hpp"

namespace rsv::cli {

namespace {

using algebra::FiniteSemigroup;
using algebra::Tri;
using nlohmann::json;
using varieties::Counterexample;
using varieties::IdentitySystem;
using words::Identity;

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot read file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct Config {
  std::string format = "text";
  bool parallel = false;
  decide::Options options;
  catalog::PresentationCaps pres_caps;
};

struct Context {
  const Config& config;
  std::ostream& out;
  std::string command;
};

struct TableInput {
  FiniteSemigroup semigroup;
  std::string digest;
  std::string display;
};

FiniteSemigroup catalog_or_cyclic(const std::string& name) {
  if (name.size() > 1 && name[0] == 'Z' &&
      name.find_first_not_of("0123456789", 1) == std::string::npos) {
    return catalog::cyclic_group(std::stoi(name.substr(1)));
  }
  return catalog::get(catalog::parse_key(name));
}

TableInput load_table_arg(const std::string& arg) {
  if (arg.rfind("catalog:", 0) == 0) {
    std::string name = arg.substr(8);
    return {catalog_or_cyclic(name), fnv1a_hex(arg), arg};
  }
  std::string data = read_file(arg);
  json j = json::parse(data, nullptr, true, false);
  if (j.is_discarded()) {
    throw std::invalid_argument("'" + arg + "' is not valid JSON");
  }
  FiniteSemigroup s = FiniteSemigroup::from_json(j);
  algebra::ValidationReport report = algebra::validate(s);
  if (!report.ok()) {
    throw std::invalid_argument("table '" + arg + "' is invalid: " +
                                report.issues.front().describe(s));
  }
  return {std::move(s), fnv1a_hex(data), arg};
}

struct IdentityInput {
  std::vector<Identity> raw;  // file order, duplicates kept
  IdentitySystem system;      // deduplicated
  std::string digest;
  std::string display;
};

IdentityInput load_identity_file(const std::string& path) {
  std::string data = read_file(path);
  IdentityInput input;
  input.raw = words::parse_identity_file(data);
  if (input.raw.empty()) {
    throw std::invalid_argument("'" + path + "' contains no identities");
  }
  input.system = IdentitySystem::from_identities(input.raw, path);
  input.digest = fnv1a_hex(data);
  input.display = path;
  return input;
}

// --- JSON rendering -------------------------------------------------------

std::string tri_str(Tri t) {
  switch (t) {
    case Tri::True:
      return "true";
    case Tri::False:
      return "false";
    default:
      return "inconclusive";
  }
}

std::string membership_str(Tri t, bool computed) {
  if (!computed) {
    return "not-computed";
  }
  switch (t) {
    case Tri::True:
      return "in";
    case Tri::False:
      return "not-in";
    default:
      return "inconclusive";
  }
}

json assignment_json(const FiniteSemigroup& s,
                     const algebra::Assignment& asg) {
  json j = json::object();
  for (const auto& [var, value] : asg) {
    j[std::string(1, var.symbol)] = s.element(value);
  }
  return j;
}

json counterexample_json(const FiniteSemigroup& s, const Counterexample& ce,
                         const std::string& identity_text) {
  json j;
  j["identity_index"] = ce.identity_index + 1;
  if (!identity_text.empty()) {
    j["identity"] = identity_text;
  }
  j["assignment"] = assignment_json(s, ce.assignment);
  j["lhs_value"] = s.element(ce.lhs_value);
  j["rhs_value"] = s.element(ce.rhs_value);
  return j;
}

std::string counterexample_text(const FiniteSemigroup& s,
                                const Counterexample& ce) {
  std::string text;
  for (const auto& [var, value] : ce.assignment) {
    if (!text.empty()) {
      text += ", ";
    }
    text += std::string(1, var.symbol) + "=" + s.element(value);
  }
  text += " -> lhs " + s.element(ce.lhs_value) + ", rhs " +
          s.element(ce.rhs_value);
  return text;
}

std::string reason_str(decide::RsVerdict::Reason reason) {
  using Reason = decide::RsVerdict::Reason;
  switch (reason) {
    case Reason::Balanced:
      return "balanced";
    case Reason::ForbiddenMember:
      return "forbidden-member";
    case Reason::AllForbiddenExcluded:
      return "all-forbidden-excluded";
    case Reason::IdentitySuccess:
      return "identity-success";
    case Reason::IdentityFailure:
      return "identity-failure";
  }
  return "?";
}

json rs_json(const decide::RsVerdict& rs, const FiniteSemigroup* s) {
  json j;
  j["is_rs"] = rs.is_rs;
  j["reason"] = reason_str(rs.reason);
  if (rs.period_bound) {
    j["period_bound"] = *rs.period_bound;
  }
  if (rs.derived_power) {
    j["derived_power"] = {{"m", rs.derived_power->index},
                          {"n", rs.derived_power->period}};
  }
  if (rs.forbidden_member) {
    j["forbidden_member"] = catalog::key_to_string(*rs.forbidden_member);
  }
  if (!rs.tested.empty()) {
    json tested = json::array();
    for (const auto& key : rs.tested) {
      tested.push_back(catalog::key_to_string(key));
    }
    j["tested"] = std::move(tested);
  }
  if (rs.counterexample && s != nullptr) {
    IdentitySystem hall =
        decide::identity_systems(decide::SystemKind::Hall, *rs.period_bound);
    j["counterexample"] = counterexample_json(
        *s, *rs.counterexample,
        hall.identities[rs.counterexample->identity_index].str());
  }
  return j;
}

json exact_json(const decide::ExactVerdict& v) {
  json j;
  j["exact"] = tri_str(v.exact);
  j["rs"] = v.rs;
  if (v.branch) {
    j["branch"] = *v.branch;
  }
  j["members"] = {{"B2", membership_str(v.b2_in, v.members_computed)},
                  {"A0", membership_str(v.a0_in, v.members_computed)},
                  {"A2", membership_str(v.a2_in, v.members_computed)},
                  {"N2", membership_str(v.n2_in, v.members_computed)}};
  return j;
}

json criterion_json(const decide::CriterionVerdict& v,
                    const FiniteSemigroup* s) {
  json j;
  j["holds"] = tri_str(v.holds);
  if (v.member_witness) {
    j["member_witness"] = catalog::key_to_string(*v.member_witness);
  }
  if (v.matched_system) {
    j["matched_system"] = std::string(1, *v.matched_system);
  }
  if (!v.systems.empty()) {
    j["systems"] = v.systems;
  }
  if (!v.counterexamples.empty() && s != nullptr) {
    json ces = json::array();
    for (std::size_t i = 0; i < v.counterexamples.size(); ++i) {
      json ce = counterexample_json(*s, v.counterexamples[i], "");
      if (i < v.systems.size()) {
        ce["system"] = v.systems[i];
      }
      ces.push_back(std::move(ce));
    }
    j["counterexamples"] = std::move(ces);
  }
  return j;
}

json classification_json(const decide::ClassificationReport& report,
                         const FiniteSemigroup* s) {
  json j;
  j["mode"] = report.mode == decide::ClassificationReport::Mode::Sigma
                  ? "sigma"
                  : "semigroup";
  if (report.period) {
    j["period"] = *report.period;
  }
  j["rs"] = rs_json(report.rs, s);
  j["exact"] = exact_json(report.exact);
  j["subdirect_cs0"] = criterion_json(report.subdirect_cs0, s);
  j["subdirect_principal_factors"] =
      criterion_json(report.subdirect_principal_factors, s);
  if (report.embeds_in_cs0_products) {
    j["embeds_in_cs0_products"] =
        criterion_json(*report.embeds_in_cs0_products, s);
  }
  if (report.residually_b2) {
    j["residually_b2"] = criterion_json(*report.residually_b2, s);
  }
  if (report.residually_brandt) {
    j["residually_brandt"] = criterion_json(*report.residually_brandt, s);
  }
  j["footnotes"] = report.footnotes;
  return j;
}

// --- emission --------------------------------------------------------------

int emit_report(const Context& ctx, const std::string& digest,
                const json& verdict, const std::string& text, int code) {
  if (ctx.config.format == "json") {
    json envelope;
    envelope["schema"] = 1;
    envelope["tool"] = "rsv";
    envelope["version"] = kVersion;
    envelope["command"] = ctx.command;
    envelope["input_digest"] = digest;
    envelope["verdict"] = verdict;
    ctx.out << envelope.dump(2) << "\n";
  } else {
    ctx.out << text;
  }
  return code;
}

std::string render_table_text(const FiniteSemigroup& s) {
  std::ostringstream os;
  os << s.label() << " (" << s.size() << " elements";
  if (s.zero()) {
    os << ", zero: " << s.element(*s.zero());
  }
  os << ")\n";
  std::size_t width = 1;
  for (const std::string& e : s.elements()) {
    width = std::max(width, e.size());
  }
  auto pad = [&](const std::string& text) {
    return std::string(width - std::min(width, text.size()), ' ') + text;
  };
  os << pad("*");
  for (const std::string& e : s.elements()) {
    os << " " << pad(e);
  }
  os << "\n";
  for (int a = 0; a < s.size(); ++a) {
    os << pad(s.element(a));
    for (int b = 0; b < s.size(); ++b) {
      os << " " << pad(s.element(s.product(a, b)));
    }
    os << "\n";
  }
  return os.str();
}

int emit_table(const Context& ctx, const FiniteSemigroup& s,
               const std::string& note = "") {
  if (ctx.config.format == "json") {
    ctx.out << s.to_json().dump(2) << "\n";
  } else {
    ctx.out << render_table_text(s);
    if (!note.empty()) {
      ctx.out << "note: " << note << "\n";
    }
  }
  return 0;
}

// --- text rendering for the decision commands ------------------------------

std::string rs_text(const decide::RsVerdict& rs, const FiniteSemigroup* s) {
  using Reason = decide::RsVerdict::Reason;
  std::ostringstream os;
  switch (rs.reason) {
    case Reason::Balanced:
      os << "verdict: NOT RS: balanced system\n"
         << "every identity is balanced, so every commutative semigroup "
            "belongs to the variety\n";
      break;
    case Reason::ForbiddenMember:
      os << "verdict: NOT RS: forbidden member "
         << catalog::key_to_string(*rs.forbidden_member) << "\n";
      if (rs.derived_power) {
        os << "derived power identity: x^" << rs.derived_power->index
           << " = x^" << rs.derived_power->index + rs.derived_power->period
           << "\n";
      }
      os << catalog::key_to_string(*rs.forbidden_member)
         << " satisfies every identity of the system\n";
      break;
    case Reason::AllForbiddenExcluded: {
      os << "verdict: REES-SUSHKEVICH (n <= " << *rs.period_bound << ")\n";
      if (rs.derived_power) {
        os << "derived power identity: x^" << rs.derived_power->index
           << " = x^" << rs.derived_power->index + rs.derived_power->period
           << "\n";
      }
      os << "tested forbidden members:";
      for (const auto& key : rs.tested) {
        os << " " << catalog::key_to_string(key);
      }
      os << " -- none satisfies the system\n";
      break;
    }
    case Reason::IdentitySuccess:
      os << "verdict: REES-SUSHKEVICH (n = " << *rs.period_bound << ")\n";
      break;
    case Reason::IdentityFailure: {
      IdentitySystem hall = decide::identity_systems(
          decide::SystemKind::Hall, *rs.period_bound);
      const Counterexample& ce = *rs.counterexample;
      os << "verdict: NOT RS: identity " << ce.identity_index + 1 << " ("
         << hall.identities[ce.identity_index].str() << ") fails at n = "
         << *rs.period_bound << "\n"
         << "counterexample: " << counterexample_text(*s, ce) << "\n";
      break;
    }
  }
  return os.str();
}

std::string exact_text(const decide::ExactVerdict& v) {
  std::ostringstream os;
  if (v.exact == Tri::True) {
    os << "verdict: EXACT via branch " << *v.branch;
    if (*v.branch == 1) {
      os << " (B2 in the variety, A0 not)";
    } else if (*v.branch == 2) {
      os << " (A2 in the variety)";
    } else {
      os << " (N2 not in the variety)";
    }
    os << "\n";
  } else if (v.exact == Tri::False) {
    os << "verdict: NOT EXACT" << (v.rs ? "" : " (not Rees-Sushkevich)")
       << "\n";
  } else {
    os << "verdict: INCONCLUSIVE (a membership test hit its caps)\n";
  }
  if (v.members_computed) {
    os << "members: B2 " << membership_str(v.b2_in, true) << ", A0 "
       << membership_str(v.a0_in, true) << ", A2 "
       << membership_str(v.a2_in, true) << ", N2 "
       << membership_str(v.n2_in, true) << "\n";
  }
  return os.str();
}

std::string criterion_text(const std::string& name,
                           const decide::CriterionVerdict& v,
                           const FiniteSemigroup* s) {
  std::ostringstream os;
  os << name << ": " << (v.holds == Tri::True ? "yes" : "no");
  if (v.member_witness) {
    os << " (contains " << catalog::key_to_string(*v.member_witness) << ")";
  }
  if (v.matched_system) {
    os << " (system " << *v.matched_system << ")";
  }
  os << "\n";
  if (v.holds != Tri::True && s != nullptr) {
    for (std::size_t i = 0; i < v.counterexamples.size(); ++i) {
      os << "  system " << static_cast<char>('a' + i) << " fails: "
         << counterexample_text(*s, v.counterexamples[i]) << "\n";
    }
  }
  return os.str();
}

std::string classification_text(const decide::ClassificationReport& report,
                                const FiniteSemigroup* s) {
  std::ostringstream os;
  os << rs_text(report.rs, s);
  os << exact_text(report.exact);
  os << criterion_text("subdirect product of completely 0-simple semigroups",
                       report.subdirect_cs0, s);
  os << criterion_text("subdirect product of principal factors",
                       report.subdirect_principal_factors, s);
  if (report.embeds_in_cs0_products) {
    os << criterion_text("embeds into products of completely 0-simple "
                         "semigroups",
                         *report.embeds_in_cs0_products, s);
  }
  if (report.residually_b2) {
    os << criterion_text("residually B2-semigroup", *report.residually_b2,
                         s);
  }
  if (report.residually_brandt) {
    os << criterion_text("residually Brandt semigroup",
                         *report.residually_brandt, s);
  }
  for (const std::string& note : report.footnotes) {
    os << "note: " << note << "\n";
  }
  return os.str();
}

// --- subcommands ------------------------------------------------------------

int cmd_is_rs(const Context& ctx, const std::string& ids_path,
              const std::string& table_arg) {
  if (!table_arg.empty()) {
    TableInput input = load_table_arg(table_arg);
    decide::RsVerdict rs =
        decide::is_rs_semigroup(input.semigroup, ctx.config.options);
    return emit_report(ctx, input.digest, rs_json(rs, &input.semigroup),
                       rs_text(rs, &input.semigroup), 0);
  }
  IdentityInput input = load_identity_file(ids_path);
  decide::RsVerdict rs = decide::is_rs_sigma(input.system,
                                             ctx.config.options);
  return emit_report(ctx, input.digest, rs_json(rs, nullptr),
                     rs_text(rs, nullptr), 0);
}

int cmd_is_exact(const Context& ctx, const std::string& ids_path,
                 const std::string& table_arg) {
  decide::ExactVerdict v;
  std::string digest;
  if (!table_arg.empty()) {
    TableInput input = load_table_arg(table_arg);
    v = decide::is_exact_semigroup(input.semigroup, ctx.config.options);
    digest = input.digest;
  } else {
    IdentityInput input = load_identity_file(ids_path);
    v = decide::is_exact_sigma(input.system, ctx.config.options);
    digest = input.digest;
  }
  return emit_report(ctx, digest, exact_json(v), exact_text(v),
                     v.exact == Tri::Inconclusive ? 2 : 0);
}

int cmd_classify(const Context& ctx, const std::string& ids_path,
                 const std::string& table_arg) {
  if (!table_arg.empty()) {
    TableInput input = load_table_arg(table_arg);
    decide::ClassificationReport report =
        decide::classify_semigroup(input.semigroup, ctx.config.options);
    return emit_report(ctx, input.digest,
                       classification_json(report, &input.semigroup),
                       classification_text(report, &input.semigroup),
                       report.exact.exact == Tri::Inconclusive ? 2 : 0);
  }
  IdentityInput input = load_identity_file(ids_path);
  decide::ClassificationReport report =
      decide::classify_sigma(input.system, ctx.config.options);
  return emit_report(ctx, input.digest, classification_json(report, nullptr),
                     classification_text(report, nullptr),
                     report.exact.exact == Tri::Inconclusive ? 2 : 0);
}

int cmd_satisfies(const Context& ctx, const std::string& table_arg,
                  const std::string& ids_path) {
  TableInput table = load_table_arg(table_arg);
  IdentityInput ids = load_identity_file(ids_path);
  varieties::EvalOptions eval{ctx.config.parallel};
  json items = json::array();
  std::ostringstream text;
  text << "semigroup: " << table.semigroup.label() << "\n";
  for (std::size_t i = 0; i < ids.raw.size(); ++i) {
    varieties::SatisfactionVerdict v =
        varieties::satisfies(table.semigroup, ids.raw[i], eval);
    json item;
    item["index"] = i + 1;
    item["identity"] = ids.raw[i].str();
    item["tautology"] = ids.raw[i].is_tautology();
    item["holds"] = v.holds;
    text << "[" << i + 1 << "] " << ids.raw[i].str() << ": ";
    if (v.holds) {
      text << "holds";
      if (ids.raw[i].is_tautology()) {
        text << " (tautology)";
      }
      text << "\n";
    } else {
      item["counterexample"] =
          counterexample_json(table.semigroup, *v.counterexample, "");
      text << "fails at "
           << counterexample_text(table.semigroup, *v.counterexample)
           << "\n";
    }
    items.push_back(std::move(item));
  }
  json verdict;
  verdict["semigroup"] = table.semigroup.label();
  verdict["identities"] = std::move(items);
  return emit_report(ctx, fnv1a_hex(table.digest + ":" + ids.digest), verdict,
                     text.str(), 0);
}

json partition_json(const FiniteSemigroup& s,
                    const algebra::Partition& partition) {
  json out = json::array();
  for (const auto& cls : partition.classes) {
    json labels = json::array();
    for (int e : cls) {
      labels.push_back(s.element(e));
    }
    out.push_back(std::move(labels));
  }
  return out;
}

std::string partition_text(const FiniteSemigroup& s,
                           const algebra::Partition& partition) {
  std::string text;
  for (const auto& cls : partition.classes) {
    text += "{";
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (i > 0) {
        text += ",";
      }
      text += s.element(cls[i]);
    }
    text += "} ";
  }
  if (!text.empty()) {
    text.pop_back();
  }
  return text;
}

int cmd_green(const Context& ctx, const std::string& table_arg) {
  TableInput input = load_table_arg(table_arg);
  const FiniteSemigroup& s = input.semigroup;
  algebra::GreenStructure g = algebra::green(s);
  algebra::IndexPeriod ip = algebra::index_period(s);

  json verdict;
  verdict["semigroup"] = s.label();
  verdict["size"] = s.size();
  verdict["index"] = ip.index;
  verdict["period"] = ip.period;
  verdict["r_classes"] = partition_json(s, g.r);
  verdict["l_classes"] = partition_json(s, g.l);
  verdict["j_classes"] = partition_json(s, g.j);
  verdict["h_classes"] = partition_json(s, g.h);
  json order = json::array();
  for (const auto& row : g.j_order) {
    json r = json::array();
    for (bool b : row) {
      r.push_back(b);
    }
    order.push_back(std::move(r));
  }
  verdict["j_order"] = std::move(order);
  verdict["flags"] = {
      {"is_0_simple", algebra::is_0_simple(s)},
      {"is_completely_0_simple", algebra::is_completely_0_simple(s)},
      {"is_completely_simple", algebra::is_completely_simple(s)}};
  json factors = json::array();
  for (std::size_t c = 0; c < g.j.classes.size(); ++c) {
    FiniteSemigroup factor = algebra::principal_factor(s, g.j.classes[c][0]);
    json f;
    f["class"] = c;
    f["representative"] = s.element(g.j.classes[c][0]);
    f["size"] = factor.size();
    f["is_completely_0_simple"] = algebra::is_completely_0_simple(factor);
    bool null_factor = true;
    for (int a = 0; a < factor.size() && null_factor; ++a) {
      for (int b = 0; b < factor.size(); ++b) {
        if (factor.product(a, b) != *factor.zero()) {
          null_factor = false;
          break;
        }
      }
    }
    f["zero_multiplication"] = null_factor;
    factors.push_back(std::move(f));
  }
  verdict["principal_factors"] = std::move(factors);

  std::ostringstream text;
  text << "semigroup: " << s.label() << " (" << s.size() << " elements)\n";
  text << "index: " << ip.index << ", period: " << ip.period << "\n";
  text << "J-classes: " << partition_text(s, g.j) << "\n";
  text << "R-classes: " << partition_text(s, g.r) << "\n";
  text << "L-classes: " << partition_text(s, g.l) << "\n";
  text << "H-classes: " << partition_text(s, g.h) << "\n";
  text << "0-simple: " << (algebra::is_0_simple(s) ? "yes" : "no")
       << ", completely 0-simple: "
       << (algebra::is_completely_0_simple(s) ? "yes" : "no")
       << ", completely simple: "
       << (algebra::is_completely_simple(s) ? "yes" : "no") << "\n";
  for (const auto& f : verdict["principal_factors"]) {
    text << "principal factor at " << f["representative"].get<std::string>()
         << ": " << f["size"].get<int>() << " elements"
         << (f["zero_multiplication"].get<bool>() ? ", zero multiplication"
                                                  : "")
         << (f["is_completely_0_simple"].get<bool>()
                 ? ", completely 0-simple"
                 : "")
         << "\n";
  }
  return emit_report(ctx, input.digest, verdict, text.str(), 0);
}

int cmd_member(const Context& ctx, const std::string& x_arg,
               const std::string& s_arg) {
  TableInput x = load_table_arg(x_arg);
  TableInput s = load_table_arg(s_arg);
  varieties::MembershipVerdict v =
      varieties::member_of_var(x.semigroup, s.semigroup,
                               ctx.config.options.free_caps,
                               ctx.config.options.search);
  json verdict;
  std::string outcome = v.outcome == varieties::Membership::In ? "in"
                        : v.outcome == varieties::Membership::NotIn
                            ? "not-in"
                            : "inconclusive";
  verdict["outcome"] = outcome;
  verdict["candidate"] = x.semigroup.label();
  verdict["variety_of"] = s.semigroup.label();
  if (!v.note.empty()) {
    verdict["note"] = v.note;
  }
  std::ostringstream text;
  text << x.semigroup.label() << " in Var(" << s.semigroup.label()
       << "): " << (outcome == "in" ? "IN"
                    : outcome == "not-in" ? "NOT IN" : "INCONCLUSIVE")
       << "\n";
  if (v.witness) {
    verdict["witness"] = {{"lhs", v.witness->first.str()},
                          {"rhs", v.witness->second.str()}};
    text << "witness: " << v.witness->first.str() << " = "
         << v.witness->second.str()
         << " holds in the variety but fails in the candidate\n";
  }
  if (!v.note.empty()) {
    text << "note: " << v.note << "\n";
  }
  return emit_report(
      ctx, fnv1a_hex(x.digest + ":" + s.digest), verdict, text.str(),
      v.outcome == varieties::Membership::Inconclusive ? 2 : 0);
}

catalog::ReesMatrixSpec rees_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("P")) {
    throw std::invalid_argument(
        "a Rees spec needs \"group\" and \"P\" fields");
  }
  if (!j["group"].is_string()) {
    throw std::invalid_argument(
        "\"group\" must be \"Z<k>\" or a table file path");
  }
  std::string g = j["group"].get<std::string>();
  FiniteSemigroup group =
      (g.size() > 1 && g[0] == 'Z' &&
       g.find_first_not_of("0123456789", 1) == std::string::npos)
          ? catalog::cyclic_group(std::stoi(g.substr(1)))
          : load_table_arg(g).semigroup;
  if (!j["P"].is_array() || j["P"].empty()) {
    throw std::invalid_argument("\"P\" must be a non-empty matrix");
  }
  const int r_size = static_cast<int>(j["P"].size());
  int l_size = -1;
  std::vector<std::vector<std::optional<int>>> p;
  for (const auto& row : j["P"]) {
    if (!row.is_array()) {
      throw std::invalid_argument("\"P\" rows must be arrays");
    }
    if (l_size < 0) {
      l_size = static_cast<int>(row.size());
    } else if (l_size != static_cast<int>(row.size())) {
      throw std::invalid_argument("\"P\" rows must have equal length");
    }
    std::vector<std::optional<int>> entries;
    for (const auto& cell : row) {
      if (!cell.is_string()) {
        throw std::invalid_argument("\"P\" entries must be strings");
      }
      std::string label = cell.get<std::string>();
      if (label == "0") {
        entries.push_back(std::nullopt);
      } else {
        int index = group.index_of(label);
        if (index < 0) {
          throw std::invalid_argument("unknown group element '" + label +
                                      "' in the sandwich matrix");
        }
        entries.push_back(index);
      }
    }
    p.push_back(std::move(entries));
  }
  return catalog::ReesMatrixSpec{std::move(group), l_size, r_size,
                                 std::move(p)};
}

int cmd_rees(const Context& ctx, const std::string& path) {
  json j = json::parse(read_file(path), nullptr, true, false);
  if (j.is_discarded()) {
    throw std::invalid_argument("'" + path + "' is not valid JSON");
  }
  catalog::ReesMatrixSpec spec = rees_spec_from_json(j);
  FiniteSemigroup s = catalog::rees_matrix(spec);
  std::string note =
      std::string("B2-sandwich (block-diagonal pattern): ") +
      (catalog::is_b2_sandwich(spec) ? "yes" : "no");
  return emit_table(ctx, s, note);
}

int cmd_brandt(const Context& ctx, const std::string& group_arg, int size) {
  FiniteSemigroup group = catalog_or_cyclic(group_arg);
  return emit_table(ctx, catalog::brandt(group, size));
}

int cmd_present(const Context& ctx, const std::string& path) {
  catalog::Presentation p = catalog::parse_presentation(read_file(path));
  FiniteSemigroup s =
      catalog::enumerate_presentation(p, ctx.config.pres_caps);
  s.set_label(path);
  return emit_table(ctx, s);
}

int cmd_catalog_list(const Context& ctx) {
  if (ctx.config.format == "json") {
    json j = json::array();
    for (const std::string& name : catalog::list_names()) {
      j.push_back(name);
    }
    ctx.out << j.dump(2) << "\n";
  } else {
    for (const std::string& name : catalog::list_names()) {
      ctx.out << name << "\n";
    }
  }
  return 0;
}

int cmd_catalog_show(const Context& ctx, const std::string& name,
                     int parameter) {
  catalog::CatalogKey key;
  if (name == "K" && parameter > 0) {
    key = catalog::CatalogKey{catalog::Name::K, parameter};
  } else {
    key = catalog::parse_key(name);
  }
  FiniteSemigroup s = catalog::get(key);
  auto note = catalog::entry_note(key);
  return emit_table(ctx, s, note.value_or(""));
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  Config config;
  CLI::App app{"decision procedures for finite-semigroup varieties"};
  app.name("rsv");
  app.fallthrough();

  app.add_option("--format", config.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--parallel", config.parallel,
               "evaluate assignment spaces in parallel");
  app.add_option("--cap-free-elements", config.options.free_caps.max_elements)
      ->envname("RSV_CAPS_FREE_ELEMENTS");
  app.add_option("--cap-free-coords",
                 config.options.free_caps.max_coordinates)
      ->envname("RSV_CAPS_FREE_COORDS");
  app.add_option("--cap-hom-checks", config.options.search.hom_checks)
      ->envname("RSV_CAPS_HOM_CHECKS");
  app.add_option("--cap-subset-size", config.options.search.subset_size)
      ->envname("RSV_CAPS_SUBSET_SIZE");
  app.add_option("--cap-pres-rules", config.pres_caps.max_rules)
      ->envname("RSV_CAPS_PRES_RULES");
  app.add_option("--cap-pres-elements", config.pres_caps.max_elements)
      ->envname("RSV_CAPS_PRES_ELEMENTS");
  app.add_option("--cap-pres-wordlen", config.pres_caps.max_word_length)
      ->envname("RSV_CAPS_PRES_WORDLEN");

  std::string ids_path, table_arg, x_arg, s_arg, group_arg, path_arg, name_arg;
  int size_arg = 0;
  int n_arg = 0;

  CLI::App* is_rs = app.add_subcommand("is-rs", "Rees-Sushkevich test");
  is_rs->add_option("ids", ids_path, "identity file");
  is_rs->add_option("--semigroup", table_arg, "table file or catalog:NAME");
  is_rs->fallthrough();

  CLI::App* is_exact = app.add_subcommand("is-exact", "exactness test");
  is_exact->add_option("ids", ids_path, "identity file");
  is_exact->add_option("--semigroup", table_arg, "table file or catalog:NAME");
  is_exact->fallthrough();

  CLI::App* classify = app.add_subcommand("classify", "full classification");
  classify->add_option("ids", ids_path, "identity file");
  classify->add_option("--semigroup", table_arg,
                       "table file or catalog:NAME");
  classify->fallthrough();

  CLI::App* satisfies = app.add_subcommand("satisfies",
                                           "check identities in a table");
  satisfies->add_option("table", x_arg, "table file or catalog:NAME")
      ->required();
  satisfies->add_option("ids", s_arg, "identity file")->required();
  satisfies->fallthrough();

  CLI::App* green_cmd =
      app.add_subcommand("green", "Green relations and structure");
  green_cmd->add_option("table", table_arg, "table file or catalog:NAME")
      ->required();
  green_cmd->fallthrough();

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "built-in tables");
  catalog_cmd->fallthrough();
  CLI::App* catalog_list = catalog_cmd->add_subcommand("list", "list names");
  catalog_list->fallthrough();
  CLI::App* catalog_show = catalog_cmd->add_subcommand("show", "print one");
  catalog_show->add_option("name", name_arg, "catalog name")->required();
  catalog_show->add_option("--n", n_arg, "parameter for the K series");
  catalog_show->fallthrough();

  CLI::App* present =
      app.add_subcommand("present", "enumerate a finite presentation");
  present->add_option("file", path_arg, "presentation file")->required();
  present->fallthrough();

  CLI::App* rees = app.add_subcommand("rees", "build a Rees matrix semigroup");
  rees->add_option("spec", path_arg, "spec JSON file")->required();
  rees->fallthrough();

  CLI::App* brandt_cmd = app.add_subcommand("brandt", "Brandt semigroup");
  brandt_cmd->add_option("--group", group_arg, "Z<k> or table file")
      ->required();
  brandt_cmd->add_option("--size", size_arg, "number of rows/columns")
      ->required();
  brandt_cmd->fallthrough();

  CLI::App* member = app.add_subcommand("member", "variety membership");
  member->add_option("candidate", x_arg, "table file or catalog:NAME")
      ->required();
  member->add_option("--in-var-of", s_arg, "table file or catalog:NAME")
      ->required();
  member->fallthrough();

  app.require_subcommand(1);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return 3;
  }

  // The report echoes the decision input, not the execution flags, so that
  // identical inputs produce byte-identical reports.
  std::string command;
  if (is_rs->parsed() || is_exact->parsed() || classify->parsed()) {
    command = is_rs->parsed() ? "is-rs" : is_exact->parsed() ? "is-exact"
                                                             : "classify";
    command += table_arg.empty() ? " " + ids_path
                                 : " --semigroup " + table_arg;
  } else if (satisfies->parsed()) {
    command = "satisfies " + x_arg + " " + s_arg;
  } else if (green_cmd->parsed()) {
    command = "green " + table_arg;
  } else if (catalog_cmd->parsed()) {
    command = catalog_show->parsed()
                  ? "catalog show " + name_arg +
                        (n_arg > 0 ? " --n " + std::to_string(n_arg) : "")
                  : "catalog list";
  } else if (present->parsed()) {
    command = "present " + path_arg;
  } else if (rees->parsed()) {
    command = "rees " + path_arg;
  } else if (brandt_cmd->parsed()) {
    command = "brandt --group " + group_arg + " --size " +
              std::to_string(size_arg);
  } else if (member->parsed()) {
    command = "member " + x_arg + " --in-var-of " + s_arg;
  }

  config.options.parallel = config.parallel;
  Context ctx{config, out, command};
  try {
    if (is_rs->parsed() || is_exact->parsed() || classify->parsed()) {
      if (ids_path.empty() == table_arg.empty()) {
        err << "input error: give exactly one of <ids-file> or --semigroup\n";
        return 3;
      }
      if (is_rs->parsed()) {
        return cmd_is_rs(ctx, ids_path, table_arg);
      }
      if (is_exact->parsed()) {
        return cmd_is_exact(ctx, ids_path, table_arg);
      }
      return cmd_classify(ctx, ids_path, table_arg);
    }
    if (satisfies->parsed()) {
      return cmd_satisfies(ctx, x_arg, s_arg);
    }
    if (green_cmd->parsed()) {
      return cmd_green(ctx, table_arg);
    }
    if (catalog_cmd->parsed()) {
      if (catalog_list->parsed()) {
        return cmd_catalog_list(ctx);
      }
      if (catalog_show->parsed()) {
        return cmd_catalog_show(ctx, name_arg, n_arg);
      }
      err << "input error: catalog needs 'list' or 'show'\n";
      return 3;
    }
    if (present->parsed()) {
      return cmd_present(ctx, path_arg);
    }
    if (rees->parsed()) {
      return cmd_rees(ctx, path_arg);
    }
    if (brandt_cmd->parsed()) {
      return cmd_brandt(ctx, group_arg, size_arg);
    }
    if (member->parsed()) {
      return cmd_member(ctx, x_arg, s_arg);
    }
    err << "input error: unknown subcommand\n";
    return 3;
  } catch (const words::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const algebra::CapError& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return 3;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace rsv::cli
