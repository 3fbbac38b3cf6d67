// Copyright 2026 The dp4 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "json.hpp"

#include "dp4/errors.hpp"
#include "dp4cli/commands.hpp"
#include "dp4cli/config.hpp"

namespace dp4::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "dp4");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class TempFile {
 public:
  explicit TempFile(const std::string& text) {
    static int counter = 0;
    path_ = fs::temp_directory_path() / ("dp4_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::ofstream(path_) << text;
  }
  ~TempFile() { fs::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  fs::path path_;
};

const json* find_check(const json& report, const std::string& name) {
  for (const auto& c : report["checks"]) {
    if (c["name"] == name) return &c;
  }
  return nullptr;
}

TEST(Config, ParsesEachKind) {
  const RunConfig t = parse_config_text(R"({"theta": [0, "1/2", -3, "7/3", 4]})");
  EXPECT_EQ(t.kind, InputKind::theta);
  EXPECT_EQ(t.theta[1], make_rat(1, 2));
  const RunConfig ab = parse_config_text(R"({"ab": ["2", 3]})");
  EXPECT_EQ(ab.kind, InputKind::ab);
  EXPECT_EQ(ab.b, Rat(3));
  const RunConfig p = parse_config_text(R"({"points": [[1,0,0],[0,1,0],[0,0,1],[1,1,1],[1,2,3]]})");
  EXPECT_EQ(p.kind, InputKind::points);
  EXPECT_NO_THROW(to_point_config(p));
}

TEST(Config, Rejections) {
  EXPECT_THROW(parse_config_text(R"({"theta": [0, 1, 2, 3, 4], "ab": [1, 2]})"), InputError);
  EXPECT_THROW(parse_config_text(R"({"thetas": [0, 1, 2, 3, 4]})"), InputError);
  EXPECT_THROW(parse_config_text(R"({"theta": [0, "1/0", 2, 3, 4]})"), InputError);
  EXPECT_THROW(parse_config_text(R"({"theta": [0, "x", 2, 3, 4]})"), InputError);
  EXPECT_THROW(parse_config_text(R"({"theta": [0, 1, 2]})"), InputError);
  EXPECT_THROW(parse_config_text(R"({})"), InputError);
  EXPECT_THROW(parse_config_text("{"), InputError);
  EXPECT_THROW(to_point_config(parse_config_text(R"({"theta": [0, 1, 1, 3, 4]})")), InputError);
  EXPECT_THROW(to_point_config(parse_config_text(R"({"points": [[1,0,0],[0,1,0],[0,0,1],[1,1,1],[1,1,0]]})")),
               InputError);
}

TEST(Cli, SectionsReport) {
  const CliRun r = run({"sections"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json rep = r.report();
  EXPECT_EQ(rep["schema_version"], "1.0");
  EXPECT_EQ(rep["command"], "sections");
  EXPECT_EQ(rep["result"]["kernel_dimension"], 2);
  EXPECT_EQ(rep["result"]["prefix_dimensions"], json({27, 20, 14, 9, 5, 2}));
  EXPECT_TRUE(rep["overall_pass"]);
  EXPECT_FALSE(rep.contains("error"));
}

TEST(Cli, PlaneOnly) {
  const CliRun r = run({"--plane-only", "sections"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.report()["result"]["kernel_dimension"], 27);
}

TEST(Cli, CorruptBasisFailsNamedChecks) {
  const CliRun r = run({"--corrupt-basis", "verify"});
  EXPECT_EQ(r.code, 1);
  const json rep = r.report();
  EXPECT_FALSE(rep["overall_pass"]);
  const json* zero = find_check(rep, "involutivity.R_is_zero");
  ASSERT_NE(zero, nullptr);
  EXPECT_FALSE((*zero)["pass"]);
  const CliRun clean = run({"verify"});
  EXPECT_EQ(clean.code, 0);
  EXPECT_TRUE(clean.report()["overall_pass"]);
}

TEST(Cli, PipelineIsDeterministic) {
  const CliRun a = run({"--seed", "5", "pipeline"});
  const CliRun b = run({"--seed", "5", "pipeline"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const json rep = a.report();
  EXPECT_TRUE(rep["overall_pass"]);
  EXPECT_GE(rep["checks"].size(), 30u);
  for (const auto& c : rep["checks"]) EXPECT_TRUE(c["pass"]) << c["name"];
  EXPECT_EQ(a.out.find("timing"), std::string::npos);
}

TEST(Cli, RepeatedThetaIsInputError) {
  const TempFile cfg(R"({"theta": [0, 1, 1, 2, -2]})");
  const CliRun r = run({"--config", cfg.path(), "pipeline"});
  EXPECT_EQ(r.code, 2);
  const json rep = r.report();
  EXPECT_EQ(rep["error"]["kind"], "input");
  EXPECT_NE(rep["error"]["message"].get<std::string>().find("repeated parameter"), std::string::npos);
  EXPECT_FALSE(rep["overall_pass"]);
}

TEST(Cli, PencilNeedsTheta) {
  const TempFile cfg(R"({"points": [[1,0,0],[0,1,0],[0,0,1],[1,1,1],[1,2,3]]})");
  EXPECT_EQ(run({"--config", cfg.path(), "pencil"}).code, 2);
  EXPECT_EQ(run({"--config", cfg.path(), "sections"}).code, 0);
}

TEST(Cli, ParseErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"--config", "/nonexistent/dp4.json", "sections"}).code, 2);
  const TempFile bad("{ not json");
  const CliRun r = run({"--config", bad.path(), "sections"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.report()["error"]["kind"], "input");
}

TEST(Cli, DictionaryIsIdentityUnderShuffles) {
  for (const char* text : {R"({"theta": [2, 0, -2, 1, -1]})", R"({"theta": [-1, 2, 1, 0, -2]})",
                           R"({"theta": [3, "1/2", -4, 7, 5]})"}) {
    const TempFile cfg(text);
    const CliRun r = run({"--config", cfg.path(), "dictionary"});
    ASSERT_EQ(r.code, 0) << text;
    const json match = r.report()["result"]["match"];
    EXPECT_TRUE(match["found"]);
    EXPECT_EQ(match["permutation"], json({1, 2, 3, 4, 5})) << text;
  }
}

TEST(Cli, OutWritesFile) {
  const TempFile target("");
  const CliRun r = run({"--out", target.path(), "special-directions"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(target.path());
  const json rep = json::parse(in);
  EXPECT_EQ(rep["command"], "special-directions");
  EXPECT_EQ(rep["result"]["directions"].size(), 5u);
}

TEST(Cli, AbConfigWithSymbolicTier) {
  const TempFile cfg(R"({"ab": [2, 3]})");
  const CliRun r = run({"--config", cfg.path(), "--symbolic", "verify"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(r.report()["result"].contains("symbolic"));
}

TEST(Cli, TimingOnlyOnRequest) {
  const CliRun r = run({"--timing", "sections"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.report()["result"].contains("timing_ms"));
}

}  // namespace
}  // namespace dp4::cli
