#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "rsv/cli.hpp"

namespace {

const std::string kData = std::string(RSV_SOURCE_DIR) + "/data/";

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = rsv::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("is-rs over the bundled inputs") {
  Run rs = run({"is-rs", kData + "semilattice.ids"});
  CHECK(rs.code == 0);
  CHECK(rs.out.find("REES-SUSHKEVICH (n <= 1)") != std::string::npos);

  Run member = run({"is-rs", kData + "x2x3.ids"});
  CHECK(member.code == 0);
  CHECK(member.out.find("NOT RS: forbidden member A") != std::string::npos);

  Run balanced = run({"is-rs", kData + "commutative.ids"});
  CHECK(balanced.code == 0);
  CHECK(balanced.out.find("balanced") != std::string::npos);

  Run semigroup = run({"is-rs", "--semigroup", "catalog:B2"});
  CHECK(semigroup.code == 0);
  CHECK(semigroup.out.find("REES-SUSHKEVICH (n = 1)") != std::string::npos);
}

TEST_CASE("exit codes follow the contract") {
  CHECK(run({"is-rs", kData + "missing.ids"}).code == 3);
  CHECK(run({"frobnicate"}).code == 3);
  CHECK(run({"is-rs"}).code == 3);
  CHECK(run({"catalog", "show", "QQ"}).code == 3);

  // malformed identity file: never exit 0
  std::string bad = kData + "tmp_bad.ids";
  {
    std::ofstream f(bad);
    f << "xy =\n";
  }
  Run r = run({"is-rs", bad});
  CHECK(r.code == 3);
  CHECK(r.err.find("right side") != std::string::npos);
  std::remove(bad.c_str());

  // malformed table: refused
  std::string bad_table = kData + "tmp_bad.json";
  {
    std::ofstream f(bad_table);
    f << "{\"label\":\"x\",\"elements\":[\"a\",\"b\"],"
         "\"table\":[[1,0],[1,1]],\"zero\":null}";
  }
  Run t = run({"green", bad_table});
  CHECK(t.code == 3);
  CHECK(t.err.find("invalid") != std::string::npos);
  std::remove(bad_table.c_str());

  // caps produce the dedicated exit code
  Run capped = run({"--cap-free-coords", "2", "member", "catalog:A",
                    "--in-var-of", "catalog:B2"});
  CHECK(capped.code == 2);
}

TEST_CASE("json reports round-trip their verdict") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"--format", "json", "classify",
                                 kData + "semilattice.ids"},
        std::vector<std::string>{"--format", "json", "classify",
                                 "--semigroup", "catalog:B2"},
        std::vector<std::string>{"--format", "json", "is-exact",
                                 kData + "x2x3.ids"},
        std::vector<std::string>{"--format", "json", "member", "catalog:N2",
                                 "--in-var-of", "catalog:Z2"}}) {
    Run r = run(args);
    CHECK(r.code == 0);
    nlohmann::json parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["schema"] == 1);
    CHECK(parsed.contains("input_digest"));
    nlohmann::json verdict = parsed["verdict"];
    CHECK(nlohmann::json::parse(verdict.dump()) == verdict);
  }
}

TEST_CASE("reports are deterministic and parallelism-independent") {
  const std::vector<std::string> inputs = {kData + "semilattice.ids",
                                           kData + "x2x3.ids",
                                           kData + "commutative.ids",
                                           kData + "hall1.ids"};
  for (const std::string& input : inputs) {
    Run a = run({"--format", "json", "classify", input});
    Run b = run({"--format", "json", "classify", input});
    Run c = run({"--format", "json", "--parallel", "classify", input});
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
  }
  Run a = run({"--format", "json", "classify", "--semigroup", "catalog:Tl"});
  Run b =
      run({"--format", "json", "--parallel", "classify", "--semigroup",
           "catalog:Tl"});
  CHECK(a.out == b.out);
}

TEST_CASE("satisfies echoes replayable counterexamples") {
  Run r = run({"--format", "json", "satisfies", "catalog:A",
               kData + "hall1.ids"});
  CHECK(r.code == 0);
  nlohmann::json parsed = nlohmann::json::parse(r.out);
  const auto& items = parsed["verdict"]["identities"];
  REQUIRE(items.size() == 3);
  CHECK(items[0]["holds"] == true);
  CHECK(items[1]["holds"] == false);
  CHECK(items[2]["holds"] == true);
  CHECK(items[1]["counterexample"]["assignment"]["x"] == "e");
  CHECK(items[1]["counterexample"]["assignment"]["y"] == "y");
  CHECK(items[1]["counterexample"]["lhs_value"] == "z");
  CHECK(items[1]["counterexample"]["rhs_value"] == "0");
}

TEST_CASE("green subcommand") {
  Run r = run({"--format", "json", "green", "catalog:B2"});
  CHECK(r.code == 0);
  nlohmann::json v = nlohmann::json::parse(r.out)["verdict"];
  CHECK(v["j_classes"].size() == 2);
  CHECK(v["flags"]["is_completely_0_simple"] == true);
  CHECK(v["period"] == 1);

  Run n2 = run({"green", "catalog:N2"});
  CHECK(n2.out.find("0-simple: no") != std::string::npos);
}

TEST_CASE("tables are emitted in the interchange format") {
  Run r = run({"--format", "json", "catalog", "show", "K", "--n", "1"});
  CHECK(r.code == 0);
  nlohmann::json table = nlohmann::json::parse(r.out);
  CHECK(table["elements"].size() == 9);
  CHECK(table["table"].size() == 9);
  CHECK(table.contains("zero"));

  Run rees = run({"--format", "json", "rees", kData + "rees_b2.json"});
  CHECK(rees.code == 0);
  CHECK(nlohmann::json::parse(rees.out)["elements"].size() == 5);

  Run brandt = run({"--format", "json", "brandt", "--group", "Z2", "--size",
                    "2"});
  CHECK(nlohmann::json::parse(brandt.out)["elements"].size() == 9);

  Run present = run({"--format", "json", "present", kData + "b2.pres"});
  CHECK(nlohmann::json::parse(present.out)["elements"].size() == 5);

  // emitted tables load back
  std::string path = kData + "tmp_roundtrip.json";
  {
    std::ofstream f(path);
    f << r.out;
  }
  Run again = run({"green", path});
  CHECK(again.code == 0);
  std::remove(path.c_str());
}

TEST_CASE("member subcommand") {
  Run notin = run({"member", "catalog:N2", "--in-var-of", "catalog:Z2"});
  CHECK(notin.code == 0);
  CHECK(notin.out.find("NOT IN") != std::string::npos);

  Run in = run({"member", "catalog:N2", "--in-var-of", "catalog:B2"});
  CHECK(in.code == 0);
  CHECK(in.out.find(": IN") != std::string::npos);
}

TEST_CASE("caps can come from the environment") {
  // env overrides are read when the flag is absent
  setenv("RSV_CAPS_FREE_COORDS", "2", 1);
  Run capped = run({"member", "catalog:A", "--in-var-of", "catalog:B2"});
  unsetenv("RSV_CAPS_FREE_COORDS");
  CHECK(capped.code == 2);
  CHECK(capped.out.find("INCONCLUSIVE") != std::string::npos);

  Run normal = run({"member", "catalog:A", "--in-var-of", "catalog:B2"});
  CHECK(normal.code == 0);
}
