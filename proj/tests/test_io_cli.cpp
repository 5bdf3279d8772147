#include "zeta/cli.hpp"
#include "zeta/io.hpp"

#include "corpus.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace zeta;

namespace {

std::string fixture(const std::string& name) { return std::string(ZETA_DATA_DIR) + "/" + name; }

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const cli::JobConfig& cfg) {
  std::ostringstream out, err;
  const int code = cli::run(cfg, out, err);
  return {code, out.str(), err.str()};
}

cli::JobConfig job(std::string command, std::string sub, std::string input, std::int64_t p, int cap) {
  cli::JobConfig cfg;
  cfg.command = std::move(command);
  cfg.subcommand = std::move(sub);
  cfg.input = input.empty() ? "" : fixture(input);
  cfg.p = p;
  cfg.caps = {cap};
  return cfg;
}

}  // namespace

TEST(Io, LoadsFixtures) {
  EXPECT_EQ(std::get<NilpotentAlgebra>(load_document(fixture("heisenberg.json"))), heisenberg_algebra());
  EXPECT_EQ(std::get<NilpotentAlgebra>(load_document(fixture("nonlie.json"))), corpus::non_lie());
  EXPECT_EQ(std::get<AdmissibleRep>(load_document(fixture("two_vertex.json"))), corpus::two_vertex());
  EXPECT_EQ(std::get<AdmissibleRep>(load_document(fixture("rank_two_centre.json"))), corpus::rank_two_centre());
  EXPECT_EQ(as_rep(load_document(fixture("abelian2.json"))), algebra_to_rep(NilpotentAlgebra(2, 0)));
}

TEST(Io, RoundTrip) {
  for (const auto& entry : corpus::standard()) {
    const ModelDocument doc = entry.rep;
    EXPECT_EQ(std::get<AdmissibleRep>(parse_document(to_json(doc))), entry.rep) << entry.name;
  }
  const auto alg = amalgamate_algebra(heisenberg_algebra(), 2);
  EXPECT_EQ(std::get<NilpotentAlgebra>(parse_document(to_json(alg))), alg);
}

TEST(Io, ShapeErrorNamesEdge) {
  try {
    load_document(fixture("bad_shape.json"));
    FAIL() << "expected SchemaError";
  } catch (const SchemaError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("/edges/0/matrix"), std::string::npos) << msg;
    EXPECT_NE(msg.find("'a'"), std::string::npos) << msg;
    EXPECT_NE(msg.find("1x1"), std::string::npos) << msg;
  }
}

TEST(Io, SchemaErrors) {
  EXPECT_THROW(parse_document(std::string("{")), SchemaError);
  EXPECT_THROW(parse_document(std::string(R"({"type":"group"})")), SchemaError);
  EXPECT_THROW(parse_document(std::string(R"({"type":"algebra","n":2})")), SchemaError);
  EXPECT_THROW(parse_document(std::string(R"({"type":"algebra","n":2,"d":1,"brackets":[{"i":3,"j":1,"coeffs":[1]}]})")),
               SchemaError);
  EXPECT_THROW(parse_document(std::string(R"({"type":"algebra","n":1,"d":1,"lie":true,
                                             "brackets":[{"i":1,"j":1,"coeffs":[1]}]})")),
               SchemaError);
  EXPECT_THROW(parse_document(std::string(R"({"type":"rep","vertices":[{"id":"v","n1":1,"n2":1}],
                                             "edges":[{"tail":"v","head":"x","matrix":[[1]]}]})")),
               SchemaError);
  EXPECT_THROW(parse_document(std::string(R"({"type":"rep","vertices":[{"id":"v","n1":-1,"n2":1}]})")), SchemaError);
}

TEST(Cli, CoeffsTsv) {
  auto cfg = job("coeffs", "", "heisenberg.json", 2, 3);
  cfg.format = cli::OutputFormat::tsv;
  const auto r = run(cfg);
  EXPECT_EQ(r.code, cli::kSuccess) << r.err;
  EXPECT_EQ(r.out, "k_v0\tcoefficient\n0\t1\n1\t3\n2\t7\n3\t19\n");
}

TEST(Cli, CoeffsDirectOracleAgrees) {
  auto a = job("coeffs", "", "two_vertex.json", 2, 2);
  a.format = cli::OutputFormat::tsv;
  auto b = a;
  b.oracle = "direct";
  EXPECT_EQ(run(a).out, run(b).out);
}

TEST(Cli, CoeffsJson) {
  auto cfg = job("coeffs", "", "heisenberg.json", 2, 2);
  cfg.format = cli::OutputFormat::json;
  const auto r = run(cfg);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["status"], "OK");
  EXPECT_EQ(j["p"], 2);
  EXPECT_EQ(j["coefficients"][2]["value"], "7");
  EXPECT_TRUE(j.contains("elapsed_ms"));
}

TEST(Cli, NamedCaps) {
  auto cfg = job("coeffs", "", "two_vertex.json", 3, 0);
  cfg.caps.clear();
  cfg.named_caps = {{"v", 1}, {"w", 2}};
  cfg.format = cli::OutputFormat::tsv;
  const auto r = run(cfg);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("k_v k_w\tcoefficient"), std::string::npos);
  cfg.named_caps = {{"v", 1}};
  EXPECT_EQ(run(cfg).code, cli::kUsage);
}

TEST(Cli, VerifyPassAndJson) {
  auto cfg = job("verify", "amalgam", "heisenberg.json", 2, 3);
  cfg.m = 2;
  auto r = run(cfg);
  EXPECT_EQ(r.code, cli::kSuccess);
  EXPECT_NE(r.out.find("verify amalgam: PASS"), std::string::npos);
  cfg.format = cli::OutputFormat::json;
  r = run(cfg);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["status"], "PASS");
  EXPECT_EQ(j["m"], 2);
}

TEST(Cli, VerifyOtherChecks) {
  auto sum = job("verify", "sum-lattice", "", 2, 3);
  sum.m = 2;
  sum.n = 1;
  EXPECT_EQ(run(sum).code, cli::kSuccess);
  auto pairs = job("verify", "pairsum", "rank_two_centre.json", 3, 2);
  EXPECT_EQ(run(pairs).code, cli::kSuccess);
  auto measure = job("verify", "measure", "", 2, 0);
  measure.max_rank = 2;
  measure.max_nu = 1;
  EXPECT_EQ(run(measure).code, cli::kSuccess);
}

TEST(Cli, FailReportsMismatch) {
  VerificationReport rep;
  rep.check = "amalgam";
  rep.passed = false;
  rep.mismatch = Mismatch{"", {3}, 5, 7};
  cli::JobConfig cfg;
  std::ostringstream out;
  EXPECT_EQ(cli::detail::emit_report(cfg, rep, out), cli::kFailed);
  EXPECT_NE(out.str().find("FAIL"), std::string::npos);
  EXPECT_NE(out.str().find("at (3): lhs 5, rhs 7"), std::string::npos);
}

TEST(Cli, ErrorsExitTwo) {
  EXPECT_EQ(run(job("coeffs", "", "bad_shape.json", 2, 2)).code, cli::kUsage);
  EXPECT_EQ(run(job("coeffs", "", "missing.json", 2, 2)).code, cli::kUsage);
  EXPECT_EQ(run(job("coeffs", "", "heisenberg.json", 4, 2)).code, cli::kUsage);
  EXPECT_EQ(run(job("verify", "bogus", "", 2, 2)).code, cli::kUsage);
  auto guarded = job("coeffs", "", "heisenberg.json", 3, 6);
  guarded.limit = 100;
  const auto r = run(guarded);
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_NE(r.err.find("predicted size"), std::string::npos) << r.err;
}

TEST(Cli, ClosedForms) {
  auto cfg = job("closed-form", "heisenberg", "", 2, 3);
  cfg.format = cli::OutputFormat::tsv;
  EXPECT_EQ(run(cfg).out, "k_v0\tcoefficient\n0\t1\n1\t3\n2\t7\n3\t19\n");
  cfg.subcommand = "abelian";
  cfg.n = 2;
  EXPECT_EQ(run(cfg).out, "k_v0\tcoefficient\n0\t1\n1\t3\n2\t7\n3\t15\n");
}
