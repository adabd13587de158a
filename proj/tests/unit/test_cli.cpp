#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace knots;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "knotenum_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

int run(std::vector<std::string> args, std::string* out = nullptr, std::string* err = nullptr) {
  args.insert(args.begin(), "knotenum");
  std::vector<char*> argv;
  for (std::string& a : args) argv.push_back(a.data());
  std::ostringstream o, e;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), o, e);
  if (out) *out = o.str();
  if (err) *err = e.str();
  return code;
}

}  // namespace

TEST(Cli, EnumerateWritesCatalogAndSummary) {
  const fs::path path = scratch("c6.tsv");
  std::string out;
  ASSERT_EQ(run({"enumerate", "--max-crossings", "6", "--out", path.string()}, &out), cli::kOk);
  EXPECT_NE(out.find("Program's Knots"), std::string::npos);
  const std::string text = slurp(path);
  EXPECT_EQ(text.rfind("# knotenum catalog", 0), 0u);
  const Catalog c = cli::parse_catalog(text);
  ASSERT_EQ(c.records.size(), 8u);
  EXPECT_TRUE(c.records[0].code.empty());
  EXPECT_EQ(to_string(c.records[1].code), "1:4 3:6 5:2");
}

TEST(Cli, ZeroCrossingsGivesTheUnknot) {
  std::string out;
  ASSERT_EQ(run({"enumerate", "--max-crossings", "0"}, &out), cli::kOk);
  const Catalog c = cli::parse_catalog(out);
  ASSERT_EQ(c.records.size(), 1u);
  EXPECT_TRUE(c.records[0].code.empty());
}

TEST(Cli, WorkerCountDoesNotChangeBytes) {
  const fs::path a = scratch("w1.tsv");
  const fs::path b = scratch("w3.tsv");
  ASSERT_EQ(run({"enumerate", "--max-crossings", "7", "--workers", "1", "--out", a.string()}), cli::kOk);
  ASSERT_EQ(run({"enumerate", "--max-crossings", "7", "--workers", "3", "--out", b.string()}), cli::kOk);
  EXPECT_EQ(slurp(a), slurp(b));
}

TEST(Cli, JsonRoundTrip) {
  const fs::path path = scratch("c5.json");
  ASSERT_EQ(run({"enumerate", "--max-crossings", "5", "--format", "json", "--m-max", "3", "--out", path.string()}),
            cli::kOk);
  const Catalog c = cli::parse_catalog(slurp(path));
  ASSERT_EQ(c.records.size(), 5u);
  EXPECT_NE(c.records[1].invariants.find("partition=2+1;answer=Y"), std::string::npos);
  EXPECT_NE(c.records[0].invariants.find("partition=2+1;answer=N"), std::string::npos);
}

TEST(Cli, ConfigErrors) {
  std::string err;
  EXPECT_EQ(run({"enumerate", "--max-crossings", "10"}, nullptr, &err), cli::kConfig);
  EXPECT_NE(err.find("--i-know-this-is-slow"), std::string::npos);
  EXPECT_EQ(run({"enumerate", "--up-budget", "2"}), cli::kConfig);
  EXPECT_EQ(run({"enumerate", "--format", "xml"}), cli::kConfig);
  EXPECT_EQ(run({"enumerate", "--bogus"}), cli::kConfig);
  EXPECT_EQ(run({}), cli::kConfig);
}

TEST(Cli, BudgetExhaustionExitCode) {
  std::string err;
  EXPECT_EQ(run({"enumerate", "--max-crossings", "7", "--orbit-budget", "1"}, nullptr, &err), cli::kBudget);
  EXPECT_NE(err.find("shadow"), std::string::npos);
}

TEST(Cli, UnwritableOutput) {
  EXPECT_EQ(run({"enumerate", "--max-crossings", "3", "--out", "/nonexistent/dir/c.tsv"}), cli::kIo);
  EXPECT_EQ(run({"invariants", "/nonexistent/file.tsv"}), cli::kIo);
}

TEST(Cli, InvariantsAnnotateAndReport) {
  const fs::path in = scratch("c4.tsv");
  const fs::path out_path = scratch("c4i.tsv");
  ASSERT_EQ(run({"enumerate", "--max-crossings", "4", "--out", in.string()}), cli::kOk);
  std::string out;
  ASSERT_EQ(run({"invariants", in.string(), "--m-max", "3", "--out", out_path.string()}, &out), cli::kOk);
  EXPECT_NE(out.find("3 records"), std::string::npos);
  const Catalog c = cli::parse_catalog(slurp(out_path));
  EXPECT_NE(c.records[1].invariants.find("partition=2+1;answer=Y"), std::string::npos);
  EXPECT_NE(c.records[0].invariants.find("partition=2+1;answer=N"), std::string::npos);
}

TEST(Cli, CatalogParseErrorsNameTheLine) {
  const fs::path bad = scratch("bad.tsv");
  {
    std::ofstream f(bad);
    f << "# header\nn\tcode\tshadow_id\tassignment_bits\tinvariants\tstatus\n3\t1:4 3:6 5:2\t0\t000\t-\tok\n4\t1:4 3\t0\t0000\t-\tok\n";
  }
  std::string err;
  EXPECT_EQ(run({"invariants", bad.string()}, nullptr, &err), cli::kConfig);
  EXPECT_NE(err.find("line 4"), std::string::npos);
  EXPECT_THROW(cli::parse_catalog("3\t1:4 3:6 5:2\t0\n"), cli::CatalogError);
  EXPECT_THROW(cli::parse_catalog("{\"records\": [\n{\"n\": 3,}\n]}"), cli::CatalogError);
}

TEST(Cli, LatticeCommands) {
  std::string out;
  EXPECT_EQ(run({"lattice", "reduce", "1,2,6,5"}, &out), cli::kOk);
  EXPECT_EQ(out, "1,2,6,5\n");
  EXPECT_EQ(run({"lattice", "validate", "1,6"}, &out), cli::kConfig);
  EXPECT_NE(out.find("letters 1..2"), std::string::npos);
  EXPECT_EQ(run({"lattice", "validate", "1,2,6,5"}, &out), cli::kOk);
  EXPECT_EQ(run({"lattice", "project", "1,1,1,2,2,3,6,6,5,5,5,4,4,1,2,2,3,3,3,6,6,5,4,4", "--axis", "x"}, &out),
            cli::kOk);
  EXPECT_NE(out.find("reduced: 1:4 3:6 5:2"), std::string::npos);
  EXPECT_EQ(run({"lattice", "reduce", "1,1,1,2,2,3,6,6,5,5,5,4,4,1,2,2,3,3,3,6,6,5,4,4", "--step-budget", "5"}),
            cli::kBudget);
  EXPECT_EQ(run({"lattice", "frobnicate", "1,2,6,5"}), cli::kConfig);
  EXPECT_EQ(run({"lattice", "validate", "1,9"}), cli::kConfig);
}
