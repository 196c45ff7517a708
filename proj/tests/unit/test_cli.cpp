#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "splitnull");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = splitnull::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return fixtures::data_path(name); }

}  // namespace

TEST(Cli, NullityOnCliqueSupported) {
  const Result r = run({"nullity", "--input", data("clique_supported.edges"), "--format", "edges"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["nullity"], 1);
  EXPECT_EQ(j["nul_R"], 0);
  EXPECT_EQ(j["cliqueker_dim"], 1);
  EXPECT_EQ(j["generator"], json({"1", "1", "-2", "-1", "-1", "-1"}));
}

TEST(Cli, RecognizeC4) {
  const Result r = run({"recognize", "--input", data("c4.edges"), "--format", "edges"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "not split\n");
  const Result p4 = run({"recognize", "--input", data("p4.edges")});
  EXPECT_EQ(p4.code, 0);
  EXPECT_EQ(p4.out, "({1,2},{0,3})\n");
  const Result js = run({"--json", "recognize", "--input", data("p4.edges")});
  EXPECT_EQ(json::parse(js.out)["partition"]["clique"], json({1, 2}));
  const Result quiet = run({"recognize", "--quiet", "--input", data("c4.edges")});
  EXPECT_EQ(quiet.code, 1);
  EXPECT_TRUE(quiet.out.empty());
}

TEST(Cli, DetOnK3) {
  const Result r = run({"det", "--input", data("k3.edges")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out), json::parse(R"({"formula":2,"oracle":2,"agree":true})"));
}

TEST(Cli, KernelUsesFractionStrings) {
  const Result r = run({"kernel", "--input", data("support_in_s.edges")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  ASSERT_EQ(j["vectors"].size(), 2u);
  for (const auto& v : j["vectors"])
    for (const auto& x : v) EXPECT_TRUE(x.is_string());
  EXPECT_EQ(j["ordering"], json({0, 1, 2, 3, 4, 5, 6, 7, 8}));
}

TEST(Cli, PartitionsAndSupport) {
  const Result p = run({"partitions", "--input", data("p3.edges")});
  ASSERT_EQ(p.code, 0) << p.err;
  const json pj = json::parse(p.out);
  EXPECT_EQ(pj["partitions"].size(), 3u);
  EXPECT_EQ(pj["swing"]["class"], "independent_set");
  EXPECT_EQ(pj["balance"], "unbalanced");

  const Result s = run({"support", "--input", data("support_in_s.edges")});
  ASSERT_EQ(s.code, 0) << s.err;
  const json sj = json::parse(s.out);
  EXPECT_EQ(sj["support"], json({4, 5, 6, 7, 8}));
  EXPECT_EQ(sj["ones_in_image_R"], false);
  EXPECT_EQ(sj["support_in_S"], true);
}

TEST(Cli, ChosenPartition) {
  const Result r = run({"nullity", "--input", data("p3.edges"), "--clique", "0,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["generator"], json({"1", "0"}));
  EXPECT_EQ(run({"nullity", "--input", data("p3.edges"), "--clique", "0,2"}).code, 3);
  EXPECT_EQ(run({"nullity", "--input", data("p3.edges"), "--clique", "0,x"}).code, 2);
}

TEST(Cli, Compose) {
  const Result r = run({"compose", "--left", data("p4.edges"), "--right", data("c4.edges")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["order"], 8);
  EXPECT_EQ(j["edges"], 15);
  EXPECT_TRUE(j["partition"].is_null());
  const Result f2 = run({"compose", "--left", data("support_in_s.edges"), "--right", data("k3.edges")});
  EXPECT_EQ(json::parse(f2.out)["embedded_kernel_vectors"].size(), 2u);
  EXPECT_FALSE(json::parse(f2.out)["partition"].is_null());
}

TEST(Cli, CensusAndVerify) {
  const Result c = run({"census", "--n-max", "3", "--random", "5", "--seed", "3"});
  ASSERT_EQ(c.code, 0) << c.err;
  const json j = json::parse(c.out);
  EXPECT_EQ(j["ok"], true);
  EXPECT_EQ(j["graphs_examined"], 16);  // 11 exhaustive + 5 random
  EXPECT_EQ(j["random_graphs"], 5);
  EXPECT_EQ(run({"census", "--n-max", "8"}).code, 3);

  const Result v = run({"verify", "--input", data("clique_supported.edges")});
  ASSERT_EQ(v.code, 0) << v.err;
  EXPECT_EQ(json::parse(v.out)["counterexample_total"], 0);
}

TEST(Cli, Errors) {
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"nullity", "--input", "/nonexistent/graph"}).code, 2);
  EXPECT_EQ(run({"nullity", "--input", data("p3.edges"), "--format", "dot"}).code, 2);
  const Result not_split = run({"nullity", "--input", data("c4.edges")});
  EXPECT_EQ(not_split.code, 3);
  EXPECT_NE(not_split.err.find("not split"), std::string::npos);
  EXPECT_EQ(run({"det", "--input", data("c4.edges")}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
}
