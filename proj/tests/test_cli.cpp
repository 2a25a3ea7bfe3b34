#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "hypernet/io.hpp"

namespace fs = std::filesystem;
using namespace hypernet;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
  void SetUp() override {
    const char* base = std::getenv("HYPERNET_TEST_TMP");
    dir_ = fs::path(base ? base : fs::temp_directory_path().string()) /
           ::testing::UnitTest::GetInstance()->current_test_info()->name();
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string sample_cnf() { return write("sample.cnf", "p cnf 4 2\n1 2 -4 0\n1 -2 -3 0\n"); }

  fs::path dir_;
};

} // namespace

TEST_F(CliTest, ReduceThenFhepByLabel) {
  const auto cnf = sample_cnf();
  const auto r = run({"reduce", cnf, "--out", path("gadget")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("vertices 13\nedges 16\nforced 8\n"), std::string::npos) << r.out;
  ASSERT_TRUE(fs::exists(path("gadget.hg")));
  ASSERT_TRUE(fs::exists(path("gadget.map")));

  const auto yes = run({"fhep", path("gadget.hg"), "--s", "p0", "--d", "f", "--edge", "8"});
  ASSERT_EQ(yes.code, 0) << yes.err;
  ASSERT_EQ(yes.out.rfind("YES\nhyperpath s=0 d=12 edges=", 0), 0u) << yes.out;

  // The certificate printed by fhep is accepted by check-hyperpath.
  const auto cert = write("cert.txt", yes.out.substr(4));
  const auto ok = run({"check-hyperpath", path("gadget.hg"), cert});
  EXPECT_EQ(ok.code, 0) << ok.out << ok.err;
  EXPECT_EQ(ok.out, "VALID\n");
}

TEST_F(CliTest, ReduceDefaultPrefixAndMapRoundTrip) {
  const auto cnf = sample_cnf();
  ASSERT_EQ(run({"reduce", cnf}).code, 0);
  std::ifstream map(path("sample.map"));
  ASSERT_TRUE(map);
  const auto parsed = read_reduction_map(map);
  EXPECT_EQ(parsed.forced_edge, 8u);
  EXPECT_EQ(parsed.f, 12u);
}

TEST_F(CliTest, CheckHyperpathRejections) {
  const auto hg = write("g.hg", "hypergraph 3 3\nedge 0: 0 -> 1\nedge 1: 1 -> 2\nedge 2: 0 -> 2\n");
  const auto bad_order = write("a.txt", "hyperpath s=0 d=2 edges=0,1 order=1,0\n");
  const auto not_minimal = write("b.txt", "hyperpath s=0 d=2 edges=0,1,2 order=0,1,2\n");
  const auto mismatch = write("c.txt", "hyperpath s=0 d=2 edges=0,1 order=0\n");
  auto r = run({"check-hyperpath", hg, bad_order});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("INVALID", 0), 0u);
  r = run({"check-hyperpath", hg, not_minimal});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("minimal"), std::string::npos);
  EXPECT_EQ(run({"check-hyperpath", hg, mismatch}).code, 1);
}

TEST_F(CliTest, ClassifyAndAcyclic) {
  const auto hg = write("g.hg", "hypergraph 3 2\nedge 0: 0 -> 1,2\nedge 1: 2 -> 0\n");
  auto r = run({"classify", hg});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "F\n");
  r = run({"acyclic", hg});
  EXPECT_EQ(r.out, "cyclic\n");
  r = run({"--format", "json", "acyclic", hg});
  EXPECT_EQ(nlohmann::json::parse(r.out)["acyclic"], false);
}

TEST_F(CliTest, EnumerateAndLimits) {
  const auto hg = write("g.hg", "hypergraph 2 3\nedge 0: 0 -> 1\nedge 1: 0 -> 1\nedge 2: 0 -> 1\n");
  auto r = run({"enumerate", hg, "--s", "0", "--d", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "hyperpath s=0 d=1 edges=0 order=0\n"
            "hyperpath s=0 d=1 edges=1 order=1\n"
            "hyperpath s=0 d=1 edges=2 order=2\n");
  EXPECT_EQ(run({"enumerate", hg, "--s", "0", "--d", "1", "--limit", "2"}).code, 2);

  r = run({"--format", "json", "enumerate", hg, "--s", "0", "--d", "1"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["count"], 3);
}

TEST_F(CliTest, SdhpExitCodes) {
  const auto hg = write("g.hg", "hypergraph 3 2\nedge 0: 0 -> 1\nedge 1: 2 -> 1\n");
  auto r = run({"sdhp", hg, "--s", "0", "--d", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "hypernetwork s=0 d=1\nvertices: 0,1\nedges: 0\n");
  r = run({"sdhp", hg, "--s", "1", "--d", "0"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.out, "hypernetwork s=1 d=0\nvertices: -\nedges: -\n");
  EXPECT_EQ(run({"sdhp", hg, "--s", "0", "--d", "0"}).code, 1);
  EXPECT_EQ(run({"sdhp", hg, "--s", "0", "--d", "nope"}).code, 1);

  r = run({"s-hypernetwork", hg, "--s", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "hypernetwork s=2 d=-\nvertices: 1,2\nedges: 1\n");
}

TEST_F(CliTest, BudgetExceeded) {
  const auto cnf = write("unsat.cnf",
                         "p cnf 3 8\n1 2 3 0\n1 2 -3 0\n1 -2 3 0\n1 -2 -3 0\n"
                         "-1 2 3 0\n-1 2 -3 0\n-1 -2 3 0\n-1 -2 -3 0\n");
  ASSERT_EQ(run({"reduce", cnf, "--out", path("u")}).code, 0);
  const auto r = run({"--budget", "100", "fhep", path("u.hg"), "--s", "p0", "--d", "f", "--edge", "6"});
  EXPECT_EQ(r.code, 2) << r.out << r.err;
  const auto no = run({"fhep", path("u.hg"), "--s", "p0", "--d", "f", "--edge", "6"});
  EXPECT_EQ(no.code, 0);
  EXPECT_EQ(no.out, "NO\n");
}

TEST_F(CliTest, Verify) {
  auto r = run({"verify", sample_cnf()});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS sat-iff-forcible fhep=YES sat=SAT"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);

  r = run({"--format", "json", "--seed", "5", "verify", "--random", "4", "--max-vars", "4",
           "--max-clauses", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["instances"].size(), 4u);
  EXPECT_EQ(j["instances"][0]["instance"], "seed 5");

  EXPECT_EQ(run({"verify"}).code, 1);
  EXPECT_EQ(run({"verify", write("bad.cnf", "p cnf 3 1\n1 2 0\n")}).code, 1);
}

TEST_F(CliTest, Dot) {
  const auto hg = write("g.hg", "hypergraph 2 1\nedge 0: 0 -> 1\nlabel 1 end\n");
  auto r = run({"dot", hg, "--highlight", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("label=\"end\", color=red"), std::string::npos) << r.out;
  r = run({"dot", hg, "--out", path("g.dot")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(fs::exists(path("g.dot")));
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"bogus"}).code, 1);
  EXPECT_EQ(run({"classify", path("missing.hg")}).code, 1);
  EXPECT_EQ(run({"--format", "xml", "classify", path("missing.hg")}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}
