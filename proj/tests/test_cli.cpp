#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <unistd.h>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "stardisc/serialize.hpp"

namespace {

namespace fs = std::filesystem;
using stardisc::Json;

struct Run {
  int exit_code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(STARDISC_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() / ("stardisc_cli_" + std::to_string(getpid()));
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }

  std::string write(const std::string& name, const std::string& body) {
    const auto p = dir / name;
    std::ofstream(p) << body;
    return p.string();
  }

  fs::path dir;
};

TEST_F(Cli, GenHaltonEmitsCsv) {
  const auto r = run("gen --kind halton --n 64 --d 2");
  EXPECT_EQ(r.exit_code, 0);
  std::size_t rows = 0, comments = 0;
  std::size_t pos = 0;
  while (pos < r.out.size()) {
    const auto nl = r.out.find('\n', pos);
    (r.out[pos] == '#' ? comments : rows) += 1;
    pos = nl + 1;
  }
  EXPECT_EQ(rows, 64u);
  EXPECT_EQ(comments, 1u);
}

TEST_F(Cli, CertifyRefutesSinglePoint) {
  const auto pts = write("one.csv", "0.5,0.5\n");
  const auto r = run("certify --input " + pts + " --epsilon 0.01");
  EXPECT_EQ(r.exit_code, 3);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["side"], "overfull-inner");
  EXPECT_NEAR(j["excess"].get<double>(), 0.19, 1e-15);
}

TEST_F(Cli, DiscExact) {
  const auto pts = write("one.csv", "# single\n0.5,0.5\n");
  const auto r = run("disc --input " + pts + " --method exact");
  EXPECT_EQ(r.exit_code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["value"], 0.75);
  EXPECT_EQ(j["method"], "exact");
}

TEST_F(Cli, DiscSampled) {
  const auto pts = write("one.csv", "0.5,0.5\n");
  const auto r = run("disc --input " + pts + " --method sample --samples 100 --seed 7");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(Json::parse(r.out)["method"], "sampled");
}

TEST_F(Cli, PipelinesComposeWithoutTransformation) {
  const auto disc = run("gen --kind halton --n 256 --d 2 | " + std::string(STARDISC_CLI) +
                        " disc --input -");
  EXPECT_EQ(disc.exit_code, 0);
  EXPECT_NEAR(Json::parse(disc.out)["value"].get<double>(), 0.018759645061728447, 1e-12);

  const auto pts = (dir / "h.csv").string();
  const auto cert = (dir / "cert.json").string();
  EXPECT_EQ(run("gen --kind halton --n 256 --d 2 --output " + pts).exit_code, 0);
  EXPECT_EQ(run("gen --kind halton --n 256 --d 2 | " + std::string(STARDISC_CLI) +
                " certify --input - --epsilon 0.02 > " + cert)
                .exit_code,
            0);
  const auto v = run("verify --input " + pts + " --certificate " + cert);
  EXPECT_EQ(v.exit_code, 0);
  EXPECT_EQ(Json::parse(v.out)["valid"], true);

  auto j = Json::parse(std::ifstream(cert));
  j["steps"][0]["captured_point"] = 255;
  j["steps"][1]["captured_point"] = 255;
  const auto bad = write("bad.json", j.dump());
  const auto rejected = run("verify --input " + pts + " --certificate " + bad);
  EXPECT_EQ(rejected.exit_code, 1);
  EXPECT_EQ(Json::parse(rejected.out)["valid"], false);
}

TEST_F(Cli, ValidationErrorsExitTwo) {
  const auto pts = write("one.csv", "0.5,0.5\n");
  EXPECT_EQ(run("certify --input " + pts + " --epsilon 0.01 --beta 16").exit_code, 2);
  EXPECT_EQ(run("certify --input " + pts + " --epsilon 0").exit_code, 2);
  const auto line = write("line.csv", "0.5\n");
  EXPECT_EQ(run("certify --input " + line + " --epsilon 0.01").exit_code, 2);
  EXPECT_EQ(run("gen --kind sobol --n 4 --d 2").exit_code, 2);
  EXPECT_EQ(run("gen --kind grid --n 10 --d 2").exit_code, 2);
  EXPECT_EQ(run("disc --input " + (dir / "missing.csv").string()).exit_code, 2);
  EXPECT_EQ(run("").exit_code, 2);
}

TEST_F(Cli, BenchCsvAndJson) {
  const auto csv = run("bench --d 2 --epsilon 0.25 --generators grid --n-grid 1,4,16");
  EXPECT_EQ(csv.exit_code, 0);
  EXPECT_EQ(csv.out.rfind("d,epsilon,", 0), 0u);

  const auto js = run("bench --d 2 --epsilon 0.25 --generators grid,halton --n-grid 1,4,16 --json");
  EXPECT_EQ(js.exit_code, 0);
  const auto rows = Json::parse(js.out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0]["certified"], true);
}

TEST_F(Cli, ThreadsDoNotChangeResults) {
  const auto pts = (dir / "r.csv").string();
  run("gen --kind random --n 40 --d 2 --seed 3 --output " + pts);
  const auto one = run("--threads 1 disc --input " + pts);
  const auto four = run("--threads 4 disc --input " + pts);
  EXPECT_EQ(one.out, four.out);
}

}  // namespace
