#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mwcarp/io.hpp"

namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mwcarp-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name), std::ios::binary) << text;
    return path(name);
  }

  std::string read(const std::string& name) const { return mwcarp::read_text_file(path(name)); }

  // Runs the CLI; stdout lands in out.txt.
  int run(const std::string& args) const {
    const std::string cmd = std::string(MWCARP_CLI) + " " + args + " > " + path("out.txt") + " 2> " + path("err.txt");
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string out() const { return read("out.txt"); }

  fs::path dir_;
};

// Depot 1, a triangle of arcs with two demand arcs plus a windy edge.
constexpr const char* kInstance =
    "NAME tri\n"
    "VERTICES 3\n"
    "DEPOT 1\n"
    "CAPACITY 4\n"
    "EDGES 1\n"
    "1 3 2 6 1\n"
    "ARCS 3\n"
    "1 2 3 2\n"
    "2 3 4 3\n"
    "3 1 5 0\n"
    "END\n";

}  // namespace

TEST_F(Cli, SolveThenValidate) {
  const std::string inst = write("tri.txt", kInstance);
  ASSERT_EQ(run("solve --instance " + inst + " --runs 3 --output " + path("sol.json")), 0);
  const std::string report = out();
  EXPECT_EQ(report.rfind("instance\theuristic\tbest\tLB\tratio\truns\tseconds\n", 0), 0u) << report;
  EXPECT_NE(report.find("tri\tall\t"), std::string::npos) << report;
  EXPECT_EQ(run("validate --instance " + inst + " --solution " + path("sol.json")), 0);
  EXPECT_EQ(out(), "ok\n");
}

TEST_F(Cli, ValidateRejectsTamperedSolutions) {
  const std::string inst = write("tri.txt", kInstance);
  ASSERT_EQ(run("solve --instance " + inst + " --runs 2 --output " + path("sol.json")), 0);
  std::string sol = read("sol.json");
  const auto at = sol.find("\"total_cost\": ");
  ASSERT_NE(at, std::string::npos);
  sol.insert(at + 14, "1");
  write("tampered.json", sol);
  EXPECT_EQ(run("validate --instance " + inst + " --solution " + path("tampered.json")), 3);
  EXPECT_EQ(out().rfind("invalid: ", 0), 0u);

  // 2 -> 3 -> 2 never reaches the depot (vertex 1).
  write("no_depot.json",
        R"({"total_cost": 0, "routes": [{"cost": 0, "vertices": [2, 3, 2], "arcs": ["a2", "a2"], "served": []}]})");
  EXPECT_EQ(run("validate --instance " + inst + " --solution " + path("no_depot.json")), 3);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("solve --instance " + path("missing.txt")), 1);
  EXPECT_EQ(run("solve --instance " + write("bad.txt", "NAME x\nVERTICES two\n")), 1);
  EXPECT_EQ(run("solve"), 1);
  EXPECT_EQ(run("frobnicate"), 1);
  const std::string over = write("over.txt", "NAME o\nVERTICES 2\nDEPOT 1\nCAPACITY 1\nEDGES 1\n1 2 1 1 5\nARCS 0\nEND\n");
  EXPECT_EQ(run("solve --instance " + over), 2);
  const std::string cut = write("cut.txt", "NAME c\nVERTICES 2\nDEPOT 1\nCAPACITY 9\nEDGES 0\nARCS 1\n1 2 1 1\nEND\n");
  EXPECT_EQ(run("solve --instance " + cut), 2);
  EXPECT_EQ(run("gen-ob --instance " + cut + " --output " + path("ob.txt")), 2);
}

TEST_F(Cli, Info) {
  const std::string inst = write("tri.txt", kInstance);
  ASSERT_EQ(run("info --instance " + inst), 0);
  EXPECT_EQ(out(), "name tri\nvertices 3\nedges 1\narcs 3\ndemand_members 3\nC 1\ntotal_demand 6\ncapacity 4\n");
  const std::string none = write("none.txt", "NAME z\nVERTICES 2\nDEPOT 1\nCAPACITY 1\nEDGES 1\n1 2 1 1 0\nARCS 0\nEND\n");
  ASSERT_EQ(run("info --instance " + none), 0);
  EXPECT_NE(out().find("\nC 0\n"), std::string::npos);
}

TEST_F(Cli, GenObThenInfo) {
  // Two directed 3-cycles with demand, joined both ways by a single edge 3-4.
  const std::string inst = write("two.txt",
                                 "NAME two\nVERTICES 6\nDEPOT 1\nCAPACITY 9\n"
                                 "EDGES 1\n3 4 1 1 1\n"
                                 "ARCS 6\n1 2 1 1\n2 3 1 1\n3 1 1 1\n4 5 1 1\n5 6 1 1\n6 4 1 1\nEND\n");
  int separated = 0;
  for (int seed = 0; seed < 40; ++seed) {
    const std::string args = "gen-ob --instance " + inst + " --output " + path("ob.txt") + " --seed " + std::to_string(seed);
    ASSERT_EQ(run(args), 0);
    ASSERT_EQ(run("info --instance " + path("ob.txt")), 0);
    const std::string info = out();
    EXPECT_EQ(info.rfind("name ob-two\n", 0), 0u);
    separated += info.find("\nC 2\n") != std::string::npos;
  }
  EXPECT_GT(separated, 0);
}

TEST_F(Cli, OracleMatchesSolveOnSingleDemandArc) {
  const std::string inst = write("one.txt", "NAME one\nVERTICES 3\nDEPOT 1\nCAPACITY 5\nEDGES 0\n"
                                            "ARCS 3\n1 2 3 0\n2 3 4 2\n3 1 5 0\nEND\n");
  ASSERT_EQ(run("oracle --instance " + inst), 0);
  EXPECT_EQ(out(), "cost 12\n");
  ASSERT_EQ(run("solve --runs 1 --heuristic eo-r --instance " + inst), 0);
  EXPECT_NE(out().find("one\teo-r\t12\t-\t-\t1\t"), std::string::npos) << out();
}

TEST_F(Cli, SolveIsByteDeterministic) {
  const std::string inst = write("tri.txt", kInstance);
  ASSERT_EQ(run("solve --runs 1 --heuristic eo-r --seed 1 --instance " + inst + " --output " + path("a.json")), 0);
  ASSERT_EQ(run("solve --runs 1 --heuristic eo-r --seed 1 --instance " + inst + " --output " + path("b.json")), 0);
  EXPECT_EQ(read("a.json"), read("b.json"));
}

TEST_F(Cli, BenchManifest) {
  write("tri.txt", kInstance);
  write("lpr-a-01.txt", std::string(kInstance).replace(5, 3, "lpr-a-01"));
  write("manifest.txt", "# instances\ntri.txt canonical\nlpr-a-01.txt\n");
  ASSERT_EQ(run("bench --runs 2 --manifest " + path("manifest.txt")), 0);
  std::istringstream lines(out());
  std::string header, first, second;
  std::getline(lines, header);
  std::getline(lines, first);
  std::getline(lines, second);
  EXPECT_EQ(first.rfind("tri\tall\t", 0), 0u);
  EXPECT_NE(first.find("\t-\t-\t2\t"), std::string::npos) << first;
  EXPECT_EQ(second.rfind("lpr-a-01\tall\t", 0), 0u);
  EXPECT_NE(second.find("\t13484\t0."), std::string::npos) << second;
}
