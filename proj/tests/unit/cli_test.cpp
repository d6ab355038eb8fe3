#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(DTLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
protected:
  void SetUp() override {
    dir = fs::temp_directory_path() / ("dtlab_cli_" + std::to_string(::getpid()) + "_" +
                                       ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }

  std::string write(const std::string& name, const std::string& text) {
    const auto p = dir / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir;
};

}  // namespace

TEST_F(Cli, GenIsDeterministic) {
  auto a = run("gen tree-depth --n 12 --depth 3 --seed 9");
  auto b = run("gen tree-depth --n 12 --depth 3 --seed 9");
  auto c = run("gen tree-depth --n 12 --depth 3 --seed 10");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["repr"], "tree");
  EXPECT_EQ(j["n"], 12);
}

TEST_F(Cli, ParityTwoIsXor) {
  auto g = run("gen parity --n 2 --k 2 --out " + (dir / "p.json").string());
  ASSERT_EQ(g.code, 0);
  const auto xor_table = write("x.json", R"({"repr":"truthtable","n":2,"bits":"6"})");
  auto d = run("distance --fn " + (dir / "p.json").string() + " --g " + xor_table);
  ASSERT_EQ(d.code, 0);
  EXPECT_EQ(nlohmann::json::parse(d.out)["distance"], 0.0);
}

TEST_F(Cli, DistanceBetweenVariables) {
  const auto x1 = write("a.json", R"({"repr":"poly","n":3,"monomials":[[1]]})");
  const auto x2 = write("b.json", R"({"repr":"poly","n":3,"monomials":[[2]]})");
  auto d = run("distance --fn " + x1 + " --g " + x2);
  ASSERT_EQ(d.code, 0);
  EXPECT_EQ(nlohmann::json::parse(d.out)["distance"], 0.5);
  auto s = run("distance --mode sampled --m 4000 --seed 3 --fn " + x1 + " --g " + x2);
  ASSERT_EQ(s.code, 0);
  EXPECT_NEAR(nlohmann::json::parse(s.out)["distance"].get<double>(), 0.5, 0.05);
}

TEST_F(Cli, TestExitCodes) {
  const auto leaf = write("leaf.json", R"({"repr":"poly","n":8,"monomials":[[]]})");
  auto acc = run("test depth-df --d 2 --fn " + leaf);
  EXPECT_EQ(acc.code, 0);
  auto rep = nlohmann::json::parse(acc.out);
  EXPECT_EQ(rep["decision"], "accept");
  EXPECT_FALSE(rep.contains("elapsed_ms"));

  const auto par = write("par.json", R"({"repr":"poly","n":8,"monomials":[[1],[2],[3],[4],[5],[6]]})");
  EXPECT_EQ(run("test depth-df --d 2 --fn " + par).code, 1);
  EXPECT_EQ(run("test depth-df --d 2 --budget 3 --fn " + par).code, 2);
  EXPECT_EQ(run("test depth-df --d 2").code, 3);
  EXPECT_EQ(run("test nonsense --fn " + leaf).code, 3);
  EXPECT_EQ(run("test depth-df --eps 2 --fn " + leaf).code, 3);
  EXPECT_TRUE(nlohmann::json::parse(run("test depth-df --timing --fn " + leaf).out).contains("elapsed_ms"));
}

TEST_F(Cli, MalformedFunctionIsUsageError) {
  const auto bad = write("bad.json", R"({"repr":"tree","n":2,"nodes":[{"var":1,"lo":0,"hi":0}],"root":0})");
  EXPECT_EQ(run("test depth-df --fn " + bad).code, 3);
  const auto junk = write("junk.json", "not json");
  EXPECT_EQ(run("test depth-df --fn " + junk).code, 3);
}

TEST_F(Cli, TestReportsAreByteIdentical) {
  const auto f = (dir / "f.json").string();
  ASSERT_EQ(run("gen tree-size --n 12 --size 4 --seed 4 --out " + f).code, 0);
  for (const char* t : {"depth-df --d 2", "size-u --s 4 --reduced-constants", "depth-appendix --d 2", "by-learning --d 2"}) {
    auto a = run(std::string("test ") + t + " --seed 5 --fn " + f);
    auto b = run(std::string("test ") + t + " --seed 5 --fn " + f);
    EXPECT_EQ(a.out, b.out) << t;
    EXPECT_FALSE(a.out.empty()) << t;
  }
}

TEST_F(Cli, LearnWritesHypothesis) {
  const auto f = write("f.json", R"({"repr":"poly","n":6,"monomials":[[2]]})");
  const auto h = (dir / "h.json").string();
  auto r = run("learn --algo occam --s 2 --d 1 --fn " + f + " --out " + h);
  ASSERT_EQ(r.code, 0);
  auto d = run("distance --fn " + f + " --g " + h);
  EXPECT_EQ(nlohmann::json::parse(d.out)["distance"], 0.0);
}

TEST_F(Cli, SuiteAggregates) {
  auto r = run("suite depth-df --gen tree-depth --n 16 --depth 2 --trials 5 --d 2 --seed 7");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["decisions"].size(), 5u);
  EXPECT_DOUBLE_EQ(j["accept_rate"].get<double>() + j["reject_rate"].get<double>() +
                       j["inconclusive"].get<double>() / 5.0,
                   1.0);
  EXPECT_EQ(run("suite depth-df --gen tree-depth --n 16 --depth 2 --trials 5 --d 2 --seed 7").out, r.out);
  EXPECT_EQ(run("suite depth-df --trials 5").code, 3);
}
