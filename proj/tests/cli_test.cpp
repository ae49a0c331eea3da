#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "qres/cli.hpp"
#include "qres/io.hpp"
#include "qres/solver.hpp"
#include "test_support.hpp"

namespace qres {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "qres");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string reference() { return testing::data("reference_instance.json").string(); }

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("qres_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

TEST(Cli, SolveReference) {
  const Result r = run({"solve", reference()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out), 8u);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
            "circuit_id,provider_id,machine_id,reserved,first_stage,second_stage,penalty,total");
  EXPECT_NE(r.out.find("qft,p2,m1,19,31.920000,"), std::string::npos);
  EXPECT_NE(r.out.find("TOTAL,,,114,191.520000,28.707692,0.172222,220.399915"), std::string::npos);
  EXPECT_EQ(format_fixed(solve_instance(reference_instance()).expected_total), "220.399915");
}

TEST(Cli, SolveWithOracleAndFuzz) {
  const Result plain = run({"solve", reference()});
  const Result r = run({"solve", reference(), "--oracle", "--fuzz", "50", "--seed", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, plain.out);
}

TEST(Cli, HumanTable) {
  const Result r = run({"solve", reference(), "--human"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find(','), std::string::npos);
  EXPECT_NE(r.out.find("220.399915"), std::string::npos);
}

TEST(Cli, ValidateExitCodes) {
  const Result good = run({"validate", reference()});
  EXPECT_EQ(good.code, 0) << good.err;
  const Result bad = run({"validate", testing::golden("bad_probs.json").string()});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE((bad.out + bad.err).find("sum"), std::string::npos);
  const Result solve_bad = run({"solve", testing::golden("bad_probs.json").string()});
  EXPECT_EQ(solve_bad.code, 1);
}

TEST(Cli, SweepRowCount) {
  const Result r = run({"sweep", reference(), "--grid", "0:30"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out), 32u);
  EXPECT_EQ(r.out, read_file(testing::golden("reference_curve.csv")));
  const Result stepped = run({"sweep", reference(), "--grid", "0:30:10"});
  EXPECT_EQ(lines(stepped.out), 5u);
}

TEST(Cli, SurfaceDefaultsWaitStepToSmallestGap) {
  const Result r = run({"surface", reference(), "--grid", "18:20", "--waits", "0.001:0.012"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out), 1u + 3 * 12);
  const Result explicit_step = run({"surface", reference(), "--grid", "18:20", "--waits", "0.001:0.012:0.001"});
  EXPECT_EQ(r.out, explicit_step.out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"solve"}).code, 2);
  EXPECT_EQ(run({"solve", "/nonexistent/instance.json"}).code, 2);
  EXPECT_EQ(run({"sweep", reference()}).code, 2);
  EXPECT_EQ(run({"sweep", reference(), "--grid", "5:2"}).code, 2);
  EXPECT_EQ(run({"sweep", reference(), "--grid", "a:b"}).code, 2);
  EXPECT_EQ(run({"solve", reference(), "--frobnicate"}).code, 2);
  // A well-formed grid beyond capacity is a model error.
  EXPECT_EQ(run({"sweep", reference(), "--grid", "0:31"}).code, 1);
}

TEST(Cli, HelpForEverySubcommand) {
  const Result top = run({"--help"});
  EXPECT_EQ(top.code, 0);
  for (const char* sub : {"validate", "solve", "sweep", "surface", "export-lp", "eval"}) {
    EXPECT_NE(top.out.find(sub), std::string::npos) << sub;
    const Result r = run({sub, "--help"});
    EXPECT_EQ(r.code, 0) << sub;
    EXPECT_NE(r.out.find("--output"), std::string::npos) << sub;
  }
  EXPECT_NE(run({"solve", "--help"}).out.find("--oracle"), std::string::npos);
  EXPECT_NE(run({"surface", "--help"}).out.find("--waits"), std::string::npos);
  EXPECT_NE(run({"eval", "--help"}).out.find("--reservations"), std::string::npos);
}

TEST(Cli, ExportLpToFile) {
  const fs::path path = scratch("single.lp");
  const Result r = run({"export-lp", testing::golden("single_triple.json").string(), "-o", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(read_file(path), read_file(testing::golden("single_triple.lp")));
}

TEST(Cli, EvalReservationFile) {
  const fs::path plan = scratch("plan.csv");
  std::string csv = "circuit_id,provider_id,machine_id,reserved\n";
  for (const char* p : {"p1", "p2", "p3"}) {
    for (const char* m : {"m1", "m2"}) csv += std::string("qft,") + p + "," + m + ",19\n";
  }
  write_file_atomic(plan, csv);
  const Result r = run({"eval", reference(), "--reservations", plan.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, run({"solve", reference()}).out);

  write_file_atomic(plan, "circuit_id,provider_id,machine_id,reserved\nqft,p1,m1,31\n");
  EXPECT_EQ(run({"eval", reference(), "--reservations", plan.string()}).code, 1);
}

TEST(Cli, RerunsAreByteIdentical) {
  const fs::path a = scratch("a.csv");
  const fs::path b = scratch("b.csv");
  ASSERT_EQ(run({"surface", reference(), "--grid", "0:30", "--waits", "0.001:0.012", "-o", a.string()}).code, 0);
  ASSERT_EQ(run({"surface", reference(), "--grid", "0:30", "--waits", "0.001:0.012", "-o", b.string()}).code, 0);
  EXPECT_EQ(read_file(a), read_file(b));
  EXPECT_EQ(run({"export-lp", reference()}).out, run({"export-lp", reference()}).out);
}

}  // namespace
}  // namespace qres
