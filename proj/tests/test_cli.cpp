#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "weylcoh/cli.hpp"
#include "weylcoh/errors.hpp"
#include "weylcoh/lattice_io.hpp"

using namespace weylcoh;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& f) { return std::string(WEYLCOH_TEST_DATA) + "/" + f; }

}  // namespace

TEST(Cli, VerifyClaimJson) {
  auto r = run({"verify", "claim72_c3", "--json"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["name"], "claim72_c3");
  EXPECT_EQ(j[0]["status"], "pass");
  EXPECT_TRUE(j[0]["runtime_ms"].is_number());
  for (const auto& c : j[0]["claims"]) {
    for (const char* k : {"description", "expected", "computed", "provenance"}) EXPECT_TRUE(c.contains(k)) << k;
    EXPECT_TRUE(c["provenance"] == "literature" || c["provenance"] == "derived" || c["provenance"] == "trivial");
  }
}

TEST(Cli, VerifyAllSchemaAndDeterminism) {
  auto a = run({"verify", "all", "--json", "--no-timings"});
  auto b = run({"verify", "all", "--json", "--no-timings"});
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  std::vector<std::string> names;
  for (const auto& r : j) {
    for (const char* k : {"name", "status", "claims", "runtime_ms"}) EXPECT_TRUE(r.contains(k)) << k;
    names.push_back(r["name"]);
  }
  EXPECT_TRUE(std::is_sorted(names.begin(), names.end()));
  EXPECT_EQ(names.size(), 20u);
}

TEST(Cli, VerifyErrors) {
  EXPECT_EQ(run({"verify", "no_such_scenario"}).code, 2);
  EXPECT_EQ(run({"verify", "claim72_c3", "--param", "x=1"}).code, 2);
  EXPECT_EQ(run({"verify", "an_sequence", "--param", "novalue"}).code, 2);
  EXPECT_EQ(run({"verify", "all", "--param", "n=2"}).code, 2);
  EXPECT_EQ(run({"verify", "prop71", "--param", "type=C3"}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({"verify", "claim72_c3", "--bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cli, VerifyWithParams) {
  auto r = run({"verify", "prop71", "--param", "type=E7"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS  prop71_E7"), std::string::npos);
}

TEST(Cli, RootSystemG2) {
  auto r = run({"rootsystem", "--type", "G", "--rank", "2", "--emit", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["roots"].size(), 12u);
  EXPECT_EQ(j["positive_roots"], 6);
  EXPECT_EQ(j["connection_index"], 1);
  EXPECT_EQ(j["cartan_matrix"], nlohmann::json::parse("[[2, -1], [-3, 2]]"));
  EXPECT_EQ(j["weyl_generators"].size(), 2u);
}

TEST(Cli, RootSystemC3) {
  auto r = run({"rootsystem", "--type", "C", "--rank", "3", "--emit", "json"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["simple_roots"][2], nlohmann::json::parse(R"(["0", "0", "2"])"));
  EXPECT_EQ(j["connection_index"], 2);
  auto t = run({"rootsystem", "--type", "c", "--rank", "3", "--emit", "text"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("18 roots, 9 positive"), std::string::npos);
}

TEST(Cli, RootSystemErrors) {
  EXPECT_EQ(run({"rootsystem", "--type", "B", "--rank", "1"}).code, 2);
  EXPECT_EQ(run({"rootsystem", "--type", "Q", "--rank", "2"}).code, 2);
  EXPECT_EQ(run({"rootsystem", "--type", "A", "--rank", "2", "--emit", "xml"}).code, 2);
}

TEST(Cli, CohomologyAugmentation) {
  auto r = run({"cohomology", "--input", data("klein_augmentation.json"), "--degree", "1", "--sha-omega", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["invariants"]["text"], "Z/2");
  EXPECT_EQ(j["exponent"], 2);
  EXPECT_EQ(j["witness_order"], 2);
  EXPECT_TRUE(j.contains("timings"));
}

TEST(Cli, CohomologyDegreesAndFlags) {
  auto reg = run({"cohomology", "--input", data("klein_regular.json"), "--degree", "0", "--json"});
  ASSERT_EQ(reg.code, 0);
  auto j = nlohmann::json::parse(reg.out);
  EXPECT_EQ(j["invariants"]["free_rank"], 1);
  EXPECT_TRUE(j["exponent"].is_null());
  auto sign1 = run({"cohomology", "--input", data("sign.json"), "--degree", "1"});
  EXPECT_EQ(sign1.code, 0);
  EXPECT_NE(sign1.out.find("H^1 = Z/2"), std::string::npos);
  auto tate = run({"cohomology", "--input", data("sign.json"), "--degree", "0", "--tate"});
  EXPECT_NE(tate.out.find("= 0"), std::string::npos);
  EXPECT_EQ(run({"cohomology", "--input", data("sign.json"), "--degree", "0", "--sha-omega"}).code, 2);
  EXPECT_EQ(run({"cohomology", "--input", data("sign.json"), "--degree", "3"}).code, 2);
  EXPECT_EQ(run({"cohomology", "--degree", "1"}).code, 2);
}

TEST(Cli, CohomologyBadSpecs) {
  auto bad = run({"cohomology", "--input", data("not_homomorphism.json"), "--degree", "1"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("homomorphism"), std::string::npos);
  auto mal = run({"cohomology", "--input", data("malformed.json"), "--degree", "1"});
  EXPECT_EQ(mal.code, 2);
  EXPECT_NE(mal.err.find("line 5, column 1"), std::string::npos) << mal.err;
  EXPECT_EQ(run({"cohomology", "--input", data("not_unimodular.json"), "--degree", "1"}).code, 2);
  EXPECT_EQ(run({"cohomology", "--input", data("missing.json"), "--degree", "1"}).code, 2);
}

TEST(Cli, GuardExitCode) {
  auto r = run({"cohomology", "--input", data("wc4_tautological.json"), "--degree", "2"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("guard"), std::string::npos);
  // the certified route overflows first in degree 1; the fallback still finishes
  auto d1 = run({"cohomology", "--input", data("wc4_tautological.json"), "--degree", "1", "--no-timings"});
  EXPECT_EQ(d1.code, 0) << d1.err;
}

TEST(Cli, CohomologyDeterministic) {
  std::vector<std::string> args{"cohomology", "--input", data("klein_augmentation.json"), "--degree", "2",
                                "--sha-omega", "--json", "--no-timings"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(LatticeSpec, RegularAndSign) {
  auto reg = load_lattice_spec(data("klein_regular.json"));
  EXPECT_EQ(reg.rank(), 4u);
  EXPECT_EQ(reg.group()->order(), 4u);
  for (std::size_t e = 0; e < 4; ++e) EXPECT_TRUE(reg.action(e).is_permutation());
  auto sign = load_lattice_spec(data("sign.json"));
  EXPECT_EQ(sign.rank(), 1u);
  ASSERT_EQ(sign.group()->order(), 2u);
  for (std::size_t e = 0; e < 2; ++e)
    EXPECT_EQ(sign.action(e), e == sign.group()->identity_index() ? IntMatrix{{1}} : IntMatrix{{-1}});
}

TEST(LatticeSpec, Validation) {
  EXPECT_THROW(load_lattice_spec(data("not_homomorphism.json")), InvalidInput);
  EXPECT_THROW(parse_lattice_spec("[1, 2]"), InvalidInput);
  EXPECT_THROW(parse_lattice_spec(R"({"group": {"generators": [[[1]]]}, "rank": 1})"), InvalidInput);
  EXPECT_THROW(parse_lattice_spec(R"({"group": {"generators": [[[1]]]}, "rank": 1, "action_generators": [[[1.5]]]})"),
               InvalidInput);
  EXPECT_THROW(parse_lattice_spec(R"({"group": {"generators": [[[1]]]}, "rank": 1, "action_generators": [[["x"]]]})"),
               InvalidInput);
  EXPECT_THROW(parse_lattice_spec(R"({"group": {"generators": [[[1]]]}, "rank": 2, "action_generators": [[[1]]]})"),
               InvalidInput);
  EXPECT_THROW(parse_lattice_spec(R"({"group": {"generators": [[[1, 1], [0, 1]]]}, "rank": 1, "action_generators": [[[1]]]})"),
               InvalidInput);
  EXPECT_THROW(parse_lattice_spec(R"({"group": {"generators": [[[1]]]}, "rank": 1, "action_generators": [[[1]]], "x": 0})"),
               InvalidInput);
  try {
    parse_lattice_spec("{\n  \"rank\": 1,\n  \"group\" ]\n}");
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(LatticeSpec, BigIntegersAsStrings) {
  EXPECT_EQ(integer_json(Integer(42)), "42");
  EXPECT_EQ(integer_json(Integer::from_string("-9007199254740991")), "-9007199254740991");
  EXPECT_EQ(integer_json(Integer::from_string("9007199254740992")), "\"9007199254740992\"");
  EXPECT_EQ(integer_json(Integer::from_string("123456789012345678901234567890")), "\"123456789012345678901234567890\"");
  auto m = parse_lattice_spec(R"({"group": {"generators": [[["-1"]]]}, "rank": 1, "action_generators": [[["+1"]]]})");
  EXPECT_EQ(m.group()->order(), 2u);
}
