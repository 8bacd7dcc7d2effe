#include "support.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace gcs;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

json parse_out(const Outcome& r) { return json::parse(r.out); }

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() / ("gcs_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                                    "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  std::filesystem::path dir_;
};

}  // namespace

TEST(Cli, AnalyzeFromStdin) {
  const Outcome tri = run({"analyze", "-"}, serialize(fixture("triangle")));
  EXPECT_EQ(tri.code, 0);
  EXPECT_EQ(parse_out(tri), json::parse(R"({"diagnosis":"well"})"));
  const Outcome k4 = run({"analyze", "-"}, serialize(fixture("k4")));
  EXPECT_EQ(k4.code, 2);
  EXPECT_EQ(parse_out(k4)["diagnosis"], "over");
  EXPECT_EQ(parse_out(k4)["witness"], json::parse(R"(["A","B","C","D"])"));
  const Outcome path = run({"analyze", "-"}, serialize(fixture("path3")));
  EXPECT_EQ(path.code, 2);
  EXPECT_EQ(parse_out(path)["deficit"], 1);
  const Outcome bad = run({"analyze", "-"}, "{oops");
  EXPECT_EQ(bad.code, 1);
  EXPECT_TRUE(bad.out.empty());
  EXPECT_FALSE(bad.err.empty());
}

TEST_F(CliFiles, AnalyzeFileAndMissingFile) {
  EXPECT_EQ(run({"analyze", write("t.json", serialize(fixture("triangle")))}).code, 0);
  EXPECT_EQ(run({"analyze", (dir_ / "missing.json").string()}).code, 1);
}

TEST(Cli, Classify) {
  const Outcome prism = run({"classify", "-"}, serialize(fixture("three-prism")));
  EXPECT_EQ(prism.code, 2);
  EXPECT_EQ(parse_out(prism)["class"], "partially_reducible");
  EXPECT_EQ(parse_out(prism)["nontrivial_cluster_count"], 2);
  EXPECT_EQ(parse_out(run({"classify", "-"}, serialize(fixture("k33"))))["class"], "irreducible");
  const Outcome tri = run({"classify", "-"}, serialize(fixture("triangle")));
  EXPECT_EQ(tri.code, 0);
  EXPECT_EQ(parse_out(tri)["class"], "fully_reducible");
  EXPECT_FALSE(parse_out(tri)["merge_log"].empty());
}

TEST(Cli, Solve) {
  const std::string t345 = serialize(triangle_graph(3, 4, 5));
  const Outcome all = run({"solve", "-", "--all"}, t345);
  EXPECT_EQ(all.code, 0);
  EXPECT_EQ(parse_out(all)["solutions"].size(), 2u);
  const Outcome one = run({"solve", "-", "--branch", "1"}, t345);
  ASSERT_EQ(one.code, 0);
  const Solution s = solution_from_json(parse_out(one)["solutions"][0]);
  EXPECT_NEAR(std::get<geom::Point2>(s.placements.at("C")).y, -4, 1e-12);
  const Outcome limited = run({"solve", "-", "--all", "--limit", "1"}, t345);
  EXPECT_EQ(parse_out(limited)["solutions"].size(), 1u);
  const Outcome plan = run({"solve", "-", "--emit-plan"}, t345);
  EXPECT_TRUE(parse_out(plan).contains("plan"));
  EXPECT_EQ(parse_out(plan)["plan"]["steps"].size(), 2u);
}

TEST(Cli, SolveFailures) {
  auto reason = [](const std::string& graph) {
    const Outcome r = run({"solve", "-"}, graph);
    EXPECT_EQ(r.code, 2);
    return parse_out(r)["reason"].get<std::string>();
  };
  EXPECT_EQ(reason(serialize(fixture("three-angle-triangle"))), "under_determined");
  EXPECT_EQ(reason(serialize(fixture("three-prism"))), "not_reducible");
  EXPECT_EQ(reason(serialize(triangle_graph(1, 1, 3))), "empty_intersection");
  EXPECT_EQ(reason(serialize(fixture("path3"))), "under_constrained");
  EXPECT_EQ(reason(serialize(fixture("k4"))), "over_constrained");
  EXPECT_EQ(run({"solve", "-", "--branch", "7"}, serialize(triangle_graph(3, 4, 5))).code, 1);
  EXPECT_EQ(run({"solve", "-", "--branch", "x"}, serialize(triangle_graph(3, 4, 5))).code, 1);
}

TEST(Cli, Generate) {
  const Outcome two = run({"generate", "--n", "2"});
  EXPECT_EQ(two.code, 0);
  EXPECT_EQ(parse(two.out).m(), 1u);
  const Outcome seven = run({"generate", "--n", "7", "--seed", "1"});
  ASSERT_EQ(seven.code, 0);
  const ConstraintGraph g = parse(seven.out);
  EXPECT_EQ(g.m(), 11u);
  EXPECT_TRUE(is_laman(g));
  EXPECT_EQ(g, random_laman(7, 1, 0.5));
  EXPECT_EQ(run({"generate", "--n", "1"}).code, 1);
  EXPECT_EQ(run({"generate", "--n", "5", "--p-h2", "2"}).code, 1);
}

TEST(Cli, Fixture) {
  const Outcome moser = run({"fixture", "moser-spindle"});
  EXPECT_EQ(moser.code, 0);
  EXPECT_EQ(parse(moser.out).n(), 7u);
  EXPECT_EQ(parse(moser.out).m(), 11u);
  const Outcome quad = run({"fixture", "quad-angle"});
  EXPECT_EQ(parse(quad.out).n(), 6u);
  EXPECT_EQ(parse(quad.out).m(), 9u);
  EXPECT_EQ(run({"fixture", "nope"}).code, 1);
}

TEST(Cli, Usage) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliFiles, Render) {
  const ConstraintGraph g = triangle_graph(3, 4, 5);
  const std::string graph = write("g.json", serialize(g));
  const Outcome dot = run({"render", graph});
  EXPECT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out.rfind("graph constraints {", 0), 0u);

  const Outcome solved = run({"solve", graph});
  const std::string sol = write("s.json", solved.out);
  const Outcome svg = run({"render", graph, "--format", "svg", "--solution", sol});
  EXPECT_EQ(svg.code, 0);
  EXPECT_EQ(svg.out.rfind("<svg", 0), 0u);

  Solution bad = execute(extract_plan(decompose(g), g), g);
  bad.placements["C"] = geom::Point2{0.1, 4};
  const std::string bad_path = write("bad.json", to_json(bad).dump());
  const Outcome rejected = run({"render", graph, "--format", "svg", "--solution", bad_path});
  EXPECT_EQ(rejected.code, 2);
  EXPECT_NO_THROW(json::parse(rejected.out));
  EXPECT_EQ(run({"render", graph, "--format", "svg", "--solution", bad_path, "--tol", "1"}).code, 0);
  EXPECT_EQ(run({"render", graph, "--format", "svg"}).code, 1);
  EXPECT_EQ(run({"render", graph, "--format", "png"}).code, 1);
}

TEST(Cli, ToleranceFromEnvironment) {
  ::setenv("GCS_TOL", "0.5", 1);
  EXPECT_DOUBLE_EQ(cli::default_tolerance(), 0.5);
  ::unsetenv("GCS_TOL");
  EXPECT_DOUBLE_EQ(cli::default_tolerance(), 1e-9);
}
