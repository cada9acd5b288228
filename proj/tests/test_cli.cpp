#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "commands.hpp"

namespace hochschild::cli {
namespace {

using nlohmann::json;

struct Run {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hochschild");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(HOCHSCHILD_TEST_DATA_DIR) + "/" + name; }

std::vector<std::size_t> dims(const Run& r) { return r.report()["cohomology"]["dims"].get<std::vector<std::size_t>>(); }

TEST(CliValidate, FixtureOnDiskPair) {
  auto r = run({"validate", "--fixture", "dual_numbers:dual_numbers", "--pair", "disk-pair", "--no-timing"});
  EXPECT_EQ(r.code, kOk) << r.err;
  auto report = r.report();
  EXPECT_EQ(report["schema_version"], "1");
  EXPECT_TRUE(report["validation"]["ok"].get<bool>());
  EXPECT_EQ(report["job"]["pair"], "disk-pair");
}

TEST(CliValidate, NonAssociativeConstantsGiveWitnesses) {
  auto r = run({"validate", "--config", data("nonassociative.json"), "--no-timing"});
  EXPECT_EQ(r.code, kDomainFailure);
  auto report = r.report();
  EXPECT_EQ(report["status"], "validation_failed");
  const auto& v = report["validation"]["violations"];
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0]["axiom"], "A.associativity");
  EXPECT_EQ(v[0]["witness"].size(), 4u);
}

TEST(CliValidate, MalformedScalarIsAParseError) {
  auto r = run({"validate", "--config", data("bad_scalar.json")});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("/A/constants/0/0/0"), std::string::npos) << r.err;
}

TEST(CliValidate, SyntaxErrorReportsLineAndColumn) {
  auto r = run({"validate", "--config", data("malformed.json")});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("at 5:"), std::string::npos) << r.err;
}

TEST(CliUsage, Errors) {
  EXPECT_EQ(run({}).code, kUsageError);
  EXPECT_EQ(run({"cohomology"}).code, kUsageError);
  EXPECT_EQ(run({"cohomology", "--fixture", "dual_numbers", "--config", data("nonassociative.json")}).code,
            kUsageError);
  EXPECT_EQ(run({"cohomology", "--fixture", "no_such_algebra"}).code, kUsageError);
  EXPECT_EQ(run({"cohomology", "--fixture", "dual_numbers", "--field", "12"}).code, kUsageError);
  EXPECT_EQ(run({"cohomology", "--fixture", "dual_numbers", "--pair", "torus"}).code, kUsageError);
  EXPECT_EQ(run({"cohomology", "--fixture", "dual_numbers", "--qmax", "x"}).code, kUsageError);
  EXPECT_EQ(run({"cohomology", "--config", data("missing.json")}).code, kUsageError);
  EXPECT_EQ(run({"--help"}).code, kOk);
}

TEST(CliCohomology, GroundFieldEverywhere) {
  auto r = run({"cohomology", "--fixture", "ground_field", "--qmax", "3", "--no-timing"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(dims(r), (std::vector<std::size_t>{1, 0, 0, 0}));
}

TEST(CliCohomology, DualNumbersOnTheCircleFromConfig) {
  auto r = run({"cohomology", "--config", data("dual_numbers_circle.json"), "--no-timing"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(dims(r), (std::vector<std::size_t>{2, 1, 1, 1}));
  auto degrees = r.report()["cohomology"]["degrees"];
  EXPECT_EQ(degrees[1]["rank_out"], 3);
  EXPECT_EQ(degrees[3]["cochain_dim"], 16);
}

TEST(CliCohomology, GroundFieldBOnDiskMatchesCircle) {
  auto disk = run({"cohomology", "--fixture", "dual_numbers:ground_field", "--pair", "disk-pair", "--no-timing"});
  auto circle = run({"cohomology", "--fixture", "dual_numbers:ground_field", "--pair", "circle", "--no-timing"});
  EXPECT_EQ(dims(disk), dims(circle));
}

TEST(CliCohomology, ExplicitConfigAndFixtureAgree) {
  auto config = run({"cohomology", "--config", data("secondary_explicit.json"), "--no-timing"});
  auto fixture = run({"cohomology", "--fixture", "truncated_poly_3:dual_numbers", "--field", "101", "--no-timing"});
  EXPECT_EQ(config.code, kOk) << config.err;
  EXPECT_EQ(dims(config), dims(fixture));
  EXPECT_NE(config.report()["config_digest"], fixture.report()["config_digest"]);
}

TEST(CliCohomology, DegreeBeyondExplicitPairIsADomainFailure) {
  auto r = run({"cohomology", "--config", data("short_pair.json"), "--no-timing"});
  EXPECT_EQ(r.code, kDomainFailure);
  EXPECT_EQ(r.report()["status"], "degree_out_of_range");
  EXPECT_EQ(run({"cohomology", "--config", data("short_pair.json"), "--qmax", "0"}).code, kOk);
}

TEST(CliCohomology, EmitMatrices) {
  auto r = run({"cohomology", "--fixture", "dual_numbers", "--pair", "circle", "--qmax", "1", "--emit-matrices",
                "--no-timing"});
  auto ms = r.report()["matrices"]["differentials"];
  ASSERT_EQ(ms.size(), 2u);
  EXPECT_EQ(ms[1]["rows"], 8);
  EXPECT_EQ(ms[1]["cols"], 4);
  EXPECT_EQ(ms[0]["entries"].size(), 0u);
}

TEST(CliReport, DeterministicWithoutTiming) {
  std::vector<std::string> args{"verify-theorem", "--fixture", "product_kk:dual_numbers", "--no-timing"};
  auto a = run(args), b = run(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.report().contains("timing"));
  auto timed = run({"verify-theorem", "--fixture", "product_kk:dual_numbers"});
  EXPECT_TRUE(timed.report().contains("timing"));
  EXPECT_EQ(timed.report()["config_digest"], a.report()["config_digest"]);
  auto other_field = run({"verify-theorem", "--fixture", "product_kk:dual_numbers", "--field", "101", "--no-timing"});
  EXPECT_NE(other_field.report()["config_digest"], a.report()["config_digest"]);
}

TEST(CliVerifyTheorem, AllFixturesThroughDegreeFour) {
  for (std::string a : {"ground_field", "dual_numbers", "truncated_poly_3", "product_kk"}) {
    for (std::string b : {"ground_field", "dual_numbers"}) {
      for (std::string field : {"Q", "101"}) {
        auto r = run({"verify-theorem", "--fixture", a + ":" + b, "--field", field, "--qmax", "3", "--no-timing"});
        ASSERT_EQ(r.code, kOk) << a << ":" << b << " " << field;
        auto degrees = r.report()["theorem"]["degrees"];
        ASSERT_EQ(degrees.size(), 4u);
        EXPECT_EQ(degrees[3]["n"], 4);
        if (b == "ground_field") EXPECT_TRUE(degrees[3]["classical_equal"].get<bool>());
      }
    }
  }
}

TEST(CliVerifyTheorem, ReversedBOrderIsLocated) {
  auto r = run({"verify-theorem", "--fixture", "dual_numbers:dual_numbers", "--reverse-b-order", "--no-timing"});
  EXPECT_EQ(r.code, kDomainFailure);
  auto report = r.report();
  EXPECT_EQ(report["status"], "mismatch");
  const auto& degrees = report["theorem"]["degrees"];
  EXPECT_TRUE(degrees[1]["equal"].get<bool>());
  ASSERT_FALSE(degrees[2]["equal"].get<bool>());
  const auto& d = degrees[2]["first_difference"];
  EXPECT_TRUE(d.contains("row") && d.contains("col"));
  EXPECT_NE(d["lhs"], d["rhs"]);
}

TEST(CliPhi, DegreeZeroIsTheIdentityAndGroundBIsBijective) {
  auto r = run({"phi", "--fixture", "truncated_poly_3", "--emit-matrices", "--no-timing"});
  EXPECT_EQ(r.code, kOk);
  auto report = r.report();
  auto phi0 = report["matrices"]["phi"][0];
  EXPECT_EQ(phi0["rows"], 3);
  EXPECT_EQ(phi0["entries"], json::parse(R"([[0,0,"1"],[1,1,"1"],[2,2,"1"]])"));
  for (const auto& d : report["phi"]["degrees"]) {
    EXPECT_TRUE(d["cochain_map"].get<bool>());
    EXPECT_TRUE(d["bijective"].get<bool>());
  }
}

TEST(CliPhi, DualNumbersBSelectsColumns) {
  auto r = run({"phi", "--fixture", "dual_numbers:dual_numbers", "--no-timing"});
  EXPECT_EQ(r.code, kOk);
  auto degrees = r.report()["phi"]["degrees"];
  ASSERT_EQ(degrees.size(), 4u);
  for (const auto& d : degrees) {
    EXPECT_TRUE(d["cochain_map"].get<bool>());
    EXPECT_TRUE(d["column_selection"].get<bool>());
  }
  EXPECT_FALSE(degrees[2]["bijective"].get<bool>());
}

}  // namespace
}  // namespace hochschild::cli
