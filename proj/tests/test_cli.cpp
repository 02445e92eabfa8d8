// Copyright 2026 The nml Authors.
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "nml/io.hpp"
#include "nml/nm_core.hpp"

namespace nml {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("nml_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

constexpr const char* kExample = R"({"q":2,"n":3,"winning":[[0,0,0],[1,1,1]],"labels":["7","B"]})"
                                 "\n";

TEST(FrameJson, ParsesExample) {
  const auto doc = parse_frame(kExample);
  EXPECT_EQ(doc.frame.q(), 2u);
  EXPECT_EQ(doc.frame.winning_count(), 2u);
  ASSERT_TRUE(doc.labels);
  EXPECT_EQ((*doc.labels)[1], "B");
  EXPECT_TRUE(doc.warnings.empty());
}

TEST(FrameJson, CanonicalRoundTripIsByteIdentical) {
  const auto doc = parse_frame(kExample);
  EXPECT_EQ(write_frame(doc.frame, doc.labels), kExample);
  const std::string sorted = write_frame(LotteryFrame(3, 2, {8, 0, 4}));
  EXPECT_EQ(sorted, "{\"q\":3,\"n\":2,\"winning\":[[0,0],[1,1],[2,2]]}\n");
  EXPECT_EQ(write_frame(parse_frame(sorted).frame), sorted);
}

TEST(FrameJson, LabelsInWinningVectors) {
  const auto doc = parse_frame(R"({"q":2,"n":3,"winning":[["7","7","7"],["B","B","7"]],"labels":["7","B"]})");
  EXPECT_EQ(doc.frame.winning_digits(), (std::vector<Digits>{{0, 0, 0}, {1, 1, 0}}));
}

TEST(FrameJson, Diagnostics) {
  auto message = [](const std::string& text) {
    try {
      parse_frame(text);
    } catch (const InvalidInput& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message(R"({"q":2,"n":2,"winning":[[0,2]]})").find("digit out of range"), std::string::npos);
  EXPECT_NE(message(R"({"q":2,"n":2,"winning":[[0,1,1]]})").find("n mismatch"), std::string::npos);
  EXPECT_NE(message(R"({"q":2,"n":2,"winning":[]})").find("winning set must be nonempty"), std::string::npos);
  EXPECT_NE(message(R"({"q":2,"n":2,"winning":[[0,0]])").find("malformed JSON"), std::string::npos);
  EXPECT_NE(message(R"({"q":1,"n":2,"winning":[[0,0]]})").find("\"q\""), std::string::npos);
  EXPECT_NE(message(R"({"q":2,"n":2,"winning":[["x",0]],"labels":["a","b"]})").find("digit out of range"),
            std::string::npos);
}

TEST(FrameJson, DuplicatesAreMergedWithWarning) {
  const auto doc = parse_frame(R"({"q":2,"n":2,"winning":[[0,1],[0,1],[1,1]]})");
  EXPECT_EQ(doc.frame.winning_count(), 2u);
  ASSERT_EQ(doc.warnings.size(), 1u);
  EXPECT_NE(doc.warnings[0].find("duplicate"), std::string::npos);
}

TEST(FrameJson, EnforcesCap) { EXPECT_THROW(parse_frame(R"({"q":2,"n":3,"winning":[[0,0,0]]})", 4), LimitExceeded); }

TEST(Cli, NmReportGolden) {
  TempDir dir;
  const auto path = dir.write("example1a.json", kExample);
  const auto r = run({"nm", "--in", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "{\n"
            "  \"schema\": \"nml/1\",\n"
            "  \"command\": \"nm\",\n"
            "  \"inputs\": {\n"
            "    \"q\": 2,\n"
            "    \"n\": 3,\n"
            "    \"winners\": 2\n"
            "  },\n"
            "  \"index\": \"3/4\",\n"
            "  \"index_decimal\": \"0.7500\",\n"
            "  \"p\": \"1/4\",\n"
            "  \"p_decimal\": \"0.2500\",\n"
            "  \"seller_value\": \"1/2\",\n"
            "  \"seller_value_decimal\": \"0.5000\",\n"
            "  \"profile\": [\n"
            "    2,\n"
            "    6,\n"
            "    0,\n"
            "    0\n"
            "  ],\n"
            "  \"covering_radius\": 1,\n"
            "  \"perfect_radius1\": true\n"
            "}\n");
}

TEST(Cli, NmSecondExampleAndCsv) {
  TempDir dir;
  const auto path = dir.write("b.json", R"({"q":2,"n":3,"winning":[[0,0,0],[1,1,0]]})");
  const auto r = run({"nm", "--in", path, "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "q,n,winners,index,p,seller_value,covering_radius\n2,3,2,2/3,1/4,5/12,2\n");
}

TEST(Cli, ExitCodes) {
  TempDir dir;
  const auto empty = dir.write("empty-W.json", R"({"q":2,"n":3,"winning":[]})");
  auto r = run({"nm", "--in", empty});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("winning set must be nonempty"), std::string::npos);

  r = run({"nm", "--in", dir.file("missing.json")});
  EXPECT_EQ(r.code, 2);

  const auto ok = dir.write("a.json", kExample);
  r = run({"nm", "--in", ok, "--max-space", "4"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("enumeration cap"), std::string::npos);

  r = run({"search", "kqnr", "--q", "2", "--n", "8", "--r", "1"});
  EXPECT_EQ(r.code, 1);

  r = run({"bound", "m", "--q", "2"});
  EXPECT_EQ(r.code, 2);
  r = run({"frobnicate"});
  EXPECT_EQ(r.code, 2);
  r = run({"build", "hamming", "--q", "6", "--m", "2"});
  EXPECT_EQ(r.code, 2);
  r = run({"--help"});
  EXPECT_EQ(r.code, 0);
}

TEST(Cli, MaxSpaceFromEnvironment) {
  TempDir dir;
  const auto ok = dir.write("a.json", kExample);
  ::setenv("NML_MAX_SPACE", "4", 1);
  const auto r = run({"nm", "--in", ok});
  ::unsetenv("NML_MAX_SPACE");
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, DuplicateWarningOnStderr) {
  TempDir dir;
  const auto path = dir.write("d.json", R"({"q":2,"n":2,"winning":[[0,1],[0,1]]})");
  const auto r = run({"nm", "--in", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("warning: duplicate"), std::string::npos);
}

TEST(Cli, BuildPipelines) {
  TempDir dir;
  auto r = run({"build", "hamming", "--q", "2", "--m", "3", "--out", dir.file("h.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  r = run({"nm", "--in", dir.file("h.json")});
  EXPECT_NE(r.out.find("\"seller_value\": \"3/4\""), std::string::npos);
  EXPECT_NE(r.out.find("\"perfect_radius1\": true"), std::string::npos);

  const auto a = dir.write("a.json", kExample);
  r = run({"build", "extend", "--in", a});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"q\":2,\"n\":4,\"winning\":[[0,0,0,0],[1,1,1,0],[0,0,0,1],[1,1,1,1]],\"labels\":[\"7\",\"B\"]}\n");

  r = run({"build", "split", "--t", "2", "--in", a});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse_frame(r.out).frame.winning_count(), 16u);

  const auto pairs = dir.write("p.json", R"({"q":4,"n":2,"winning":[[2,0]]})");
  r = run({"build", "fold", "--base", "2", "--t", "2", "--in", pairs});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"q\":2,\"n\":4,\"winning\":[[0,1,0,0]]}\n");
  r = run({"build", "fold", "--base", "3", "--t", "2", "--in", pairs});
  EXPECT_EQ(r.code, 2);

  r = run({"build", "r1n3", "--q", "4", "--seed", "5"});
  ASSERT_EQ(r.code, 0);
  const auto code = parse_frame(r.out).frame;
  EXPECT_EQ(code.winning_count(), 8u);
  EXPECT_EQ(covering_radius(code), 1u);
}

TEST(Cli, BoundCommands) {
  auto r = run({"bound", "table", "--grid", "paper"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "q,n,p,M\n2,2,0.3125,2.10\n2,10,0.3125,2.98\n5,2,0.1040,5.31\n5,10,0.1040,8.75\n"
            "8,2,0.0635,8.38\n8,10,0.0635,14.28\n11,2,0.0458,11.41\n11,10,0.0458,19.74\n"
            "14,2,0.0359,14.43\n14,10,0.0359,25.17\n");
  r = run({"bound", "m", "--q", "2", "--n", "10"});
  EXPECT_NE(r.out.find("\"M\": \"149/50\""), std::string::npos);
  r = run({"bound", "sphere", "--q", "2", "--n", "7", "--r", "1"});
  EXPECT_NE(r.out.find("\"bound\": \"16\""), std::string::npos);
  r = run({"bound", "ratio", "--q", "2", "--n", "3", "--p", "1/8"});
  EXPECT_NE(r.out.find("\"upper\": \"4/1\""), std::string::npos);
  r = run({"bound", "ratio", "--q", "2", "--n", "3", "--p", "1/3"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, Table1) {
  const auto r = run({"tables", "--which", "table1", "--max-n", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "R,n,K,method\n1,1,1,exact\n1,2,2,exact\n1,3,2,exact\n1,4,4,exact\n1,5,7,exact\n"
            "2,2,1,exact\n2,3,2,exact\n2,4,2,exact\n2,5,2,exact\n");
}

TEST(Cli, SearchAndSeller) {
  auto r = run({"search", "frame", "--q", "2", "--n", "3", "--w", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"index\": \"3/4\""), std::string::npos);
  r = run({"search", "curve", "--q", "2", "--n", "2", "--format", "csv"});
  EXPECT_EQ(r.out, "m,distance_sum,index\n1,4,1/2\n2,2,3/4\n3,1,7/8\n4,0,1/1\n");
  r = run({"search", "kqnr", "--q", "2", "--n", "5", "--r", "1", "--mode", "exact"});
  EXPECT_NE(r.out.find("\"kind\": \"exact-minimal\""), std::string::npos);
  EXPECT_NE(r.out.find("\"size\": 7"), std::string::npos);
  r = run({"seller", "design", "--q", "2", "--m", "3"});
  EXPECT_NE(r.out.find("\"value\": \"3/4\""), std::string::npos);
  EXPECT_NE(r.out.find("\"optimal\": true"), std::string::npos);
  r = run({"seller", "schedule", "--q", "2", "--mmax", "6", "--format", "csv"});
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "m,n,p,value,verified");
  EXPECT_NE(r.out.find("3,7,1/8,3/4,true"), std::string::npos);
  EXPECT_NE(r.out.find("5,31,1/32,15/16,false"), std::string::npos);
  r = run({"seller", "minlen", "--q", "2", "--m", "2"});
  EXPECT_NE(r.out.find("\"minimal\": true"), std::string::npos);
}

TEST(Cli, DeterministicReports) {
  const std::vector<std::string> args{"search", "kqnr", "--q", "2", "--n", "6", "--r", "1", "--mode",
                                      "heuristic", "--seed", "7", "--budget", "20000"};
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto timed = args;
  timed.push_back("--timing");
  EXPECT_NE(run(timed).out.find("timing_ms"), std::string::npos);
}

}  // namespace
}  // namespace nml
