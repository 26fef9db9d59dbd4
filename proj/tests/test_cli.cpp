#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli_app.hpp"

using nlohmann::json;

namespace {

const std::string fx = VPART_FIXTURES;

struct Run {
  int code;
  json doc;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "vpart");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = vpart::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  Run r{code, {}, out.str(), err.str()};
  r.doc = json::parse(r.out, nullptr, false);
  return r;
}

std::filesystem::path tmp(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("vpart_cli_" + name);
}

}  // namespace

TEST(Cli, DecomposeBipartite) {
  auto r = run({"decompose", "-i", fx + "/k55.g6", "--p", "2", "--q", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto& parts = r.doc["decomposition"]["parts"];
  EXPECT_EQ(parts[0].size(), 5u);
  EXPECT_EQ(parts[1].size(), 5u);
  EXPECT_EQ(r.doc["exit_code"], 0);
  EXPECT_EQ(r.doc["config"]["command"], "decompose");
}

TEST(Cli, FormatsAgree) {
  auto a = run({"stats", "-i", fx + "/icosahedron.edgelist"});
  auto b = run({"stats", "-i", fx + "/icosahedron.dimacs"});
  ASSERT_EQ(a.code, 0) << a.err;
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(a.doc["stats"]["graph_hash"], b.doc["stats"]["graph_hash"]);
  EXPECT_EQ(a.doc["stats"]["m"], 30);
  EXPECT_EQ(a.doc["stats"]["clique_number"], 3);
}

TEST(Cli, IcosahedronForestSplit) {
  auto r = run({"decompose", "-i", fx + "/icosahedron.dimacs", "--family", "core:2", "--p", "3", "--q", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc["decomposition"]["parts"][0].size(), 6u);
}

TEST(Cli, PreconditionWitness) {
  auto r = run({"decompose", "-i", fx + "/k6.g6", "--p", "2", "--q", "4"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.doc["error"]["kind"], "PreconditionViolated");
  EXPECT_EQ(r.doc["error"]["witness"]["vertices"].size(), 5u);
}

TEST(Cli, VerifyRejectsBadDecomposition) {
  auto r = run({"verify", "-i", fx + "/k55.g6", "--p", "2", "--q", "4", "-d", fx + "/bad_k55.json"});
  EXPECT_EQ(r.code, 2);
  bool c3_failed = false;
  for (auto& c : r.doc["report"]["checks"])
    if (c["id"] == "C3") c3_failed = !c["passed"].get<bool>();
  EXPECT_TRUE(c3_failed);
}

TEST(Cli, VerifyAcceptsOwnOutput) {
  const auto path = tmp("k55.json");
  ASSERT_EQ(run({"decompose", "-i", fx + "/k55.g6", "--p", "2", "--q", "4", "-o", path.string()}).code, 0);
  auto r = run({"verify", "-i", fx + "/k55.g6", "--p", "2", "--q", "4", "-d", path.string()});
  EXPECT_EQ(r.code, 0) << r.out;
  std::filesystem::remove(path);
}

TEST(Cli, ConfigErrors) {
  EXPECT_EQ(run({"decompose", "-i", fx + "/missing.g6"}).code, 1);
  EXPECT_EQ(run({"decompose", "-i", fx + "/k55.g6", "--mode", "bogus"}).code, 1);
  EXPECT_EQ(run({"decompose", "-i", fx + "/malformed.g6"}).code, 1);
  EXPECT_EQ(run({"decompose", "-i", fx + "/k55.g6", "--node-budget", "0"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"decompose", "-i", fx + "/k55.g6", "--family", "star:3"}).code, 1);
}

TEST(Cli, RangeExceeded) {
  auto r = run({"hunt", "--n", "17", "--p", "2", "--q", "4"});
  EXPECT_EQ(r.code, 4);
  EXPECT_EQ(r.doc["error"]["kind"], "RangeExceeded");
}

TEST(Cli, HuntSmallExhaustive) {
  const auto rec = tmp("records.jsonl");
  auto r = run({"hunt", "--claim", "theorem1", "--n", "6", "--delta", "5", "--exhaustive", "--records", rec.string(),
                "--no-timings"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_GT(r.doc["summary"]["hosts"].get<std::size_t>(), 0u);
  EXPECT_TRUE(r.doc["summary"]["counterexample_candidates"].empty());
  std::ifstream in(rec);
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  EXPECT_EQ(lines, r.doc["summary"]["cells"].get<std::size_t>());
  std::filesystem::remove(rec);
}

TEST(Cli, EnumerateCount) {
  auto r = run({"enumerate", "--n", "4", "--no-connected", "--count"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("64"), std::string::npos);
}

TEST(Cli, KPartAndFamilyFile) {
  auto k = run({"decompose", "-i", fx + "/k99.g6", "--mode", "k", "--ps", "4,4,3"});
  ASSERT_EQ(k.code, 0) << k.err;
  EXPECT_EQ(k.doc["decomposition"]["parts"][0].size(), 18u);
  EXPECT_EQ(k.doc["decomposition"]["trace"]["levels"].size(), 2u);
  auto f = run({"decompose", "-i", fx + "/k55.g6", "--family", "file:" + fx + "/c4_family.g6s", "--p", "3", "--q", "3"});
  EXPECT_EQ(f.code, 0) << f.err;
}

TEST(Cli, CliqueSplitAndDegenerateModes) {
  EXPECT_EQ(run({"decompose", "-i", fx + "/k55.g6", "--mode", "lemma2", "--p", "4", "--q", "2"}).code, 3);
  EXPECT_EQ(run({"decompose", "-i", fx + "/k5_two_pendants.g6", "--mode", "lemma2", "--p", "5", "--q", "2"}).code, 0);
  EXPECT_EQ(run({"decompose", "-i", fx + "/petersen.g6", "--mode", "degenerateA", "--p", "1", "--q", "2"}).code, 0);
  auto c = run({"decompose", "-i", fx + "/petersen.g6", "--mode", "degenerateC", "--p", "1", "--q", "2"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.doc["decomposition"]["parts"][0].size(), 4u);
}

TEST(Cli, ReplayIsByteIdentical) {
  std::vector<std::string> args{"decompose", "-i", fx + "/icosahedron.edgelist", "--family", "core:2", "--p", "3", "--q", "3"};
  EXPECT_EQ(run(args).out, run(args).out);
  std::vector<std::string> deg{"decompose", "-i", fx + "/petersen.g6", "--mode", "degenerateA", "--p", "1", "--q", "2",
                               "--seed", "9"};
  EXPECT_EQ(run(deg).out, run(deg).out);
}
