#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Invocation {
  int code;
  std::string out;
};

Invocation run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + std::string(PERMGRAPH_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(CliGroupInfo, Q8) {
  const Invocation r = run("group-info \"Q 8\" --json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["order"], 8);
  EXPECT_EQ(j["proper_cyclic_subgroups"], 4);
  EXPECT_EQ(j["abelian"], false);
}

TEST(CliGroupInfo, PrimeOrderIsUndefined) {
  const Invocation r = run("group-info \"Z 7\"");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("gamma_c_defined: false"), std::string::npos);
}

TEST(CliGroupInfo, AbelianProduct) {
  const Invocation r = run("group-info \"Z 4 x Z 2\"");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("order: 8\n"), std::string::npos);
  EXPECT_NE(r.out.find("abelian: true\n"), std::string::npos);
}

TEST(CliGraph, DotForS3) {
  const Invocation r = run("graph \"S 3\" --dot");
  ASSERT_EQ(r.code, 0);
  std::size_t nodes = 0, edges = 0;
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);) {
    nodes += line.find("[label=") != std::string::npos;
    edges += line.find(" -- ") != std::string::npos;
  }
  EXPECT_EQ(nodes, 4u);
  EXPECT_EQ(edges, 3u);
}

TEST(CliGraph, JsonCounts) {
  struct Case {
    const char* spec;
    std::size_t vertices, edges;
  };
  for (const Case c : {Case{"A 4", 7, 3}, Case{"Z 16", 3, 3}}) {
    const Invocation r = run(std::string("graph \"") + c.spec + "\" --json");
    ASSERT_EQ(r.code, 0) << c.spec;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["vertices"].size(), c.vertices) << c.spec;
    EXPECT_EQ(j["edges"].size(), c.edges) << c.spec;
  }
}

TEST(CliGraph, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "permgraph_cli_graph.dot";
  ASSERT_EQ(run("graph \"S 3\" -o " + path.string()).code, 0);
  EXPECT_EQ(slurp(path), run("graph \"S 3\"").out);
  std::filesystem::remove(path);
}

TEST(CliAnalyze, Examples) {
  const Invocation q8 = run("analyze \"Q 8\"");
  ASSERT_EQ(q8.code, 0);
  EXPECT_NE(q8.out.find("complete: true\n"), std::string::npos);
  EXPECT_NE(q8.out.find("diameter: 1\n"), std::string::npos);

  const auto z12 = nlohmann::json::parse(run("analyze \"Z 12\" --json").out);
  EXPECT_EQ(z12["recognized_name"], "K4");

  const auto sd = nlohmann::json::parse(run("analyze \"SD 5 2 1 1\" --json").out);
  EXPECT_EQ(sd["recognized_name"], "K1,5");
  EXPECT_EQ(sd["girth"], "inf");
}

TEST(CliErrors, ExitCodes) {
  EXPECT_EQ(run("analyze \"Z\"").code, 2);
  EXPECT_EQ(run("analyze \"D 5\"").code, 2);
  EXPECT_EQ(run("graph \"Z 13\"").code, 3);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("verify --families nope --max-order 8").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(CliVerify, SmallCorpusPassesAndIsDeterministic) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = dir / "permgraph_verify_a.json";
  const auto b = dir / "permgraph_verify_b.json";
  const Invocation first = run("verify --max-order 16 --threads 2 --report " + a.string());
  EXPECT_EQ(first.code, 0);
  const Invocation second = run("verify --max-order 16 --threads 1 --report " + b.string());
  EXPECT_EQ(second.code, 0);
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(slurp(a), slurp(b));
  const auto j = nlohmann::json::parse(slurp(a));
  ASSERT_EQ(j.size(), 8u);
  for (const auto& r : j) EXPECT_TRUE(r["passed"].get<bool>()) << r["id"];
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(CliVerify, FullCorpus) {
  const Invocation r = run("verify --max-order 200");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(CliVerify, ScopeNoteWhenClamped) {
  const Invocation r = run("verify --max-order 4096 --families dihedral,quaternion");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("scope: ", 0), 0u);
  EXPECT_NE(r.out.substr(0, r.out.find('\n')).find("clamped to harness ceiling 256"), std::string::npos);
}

TEST(CliVerify, ThreadsFromEnvironment) {
  EXPECT_EQ(run("verify --max-order 12").out, run("verify --max-order 12", "PERMGRAPH_THREADS=3 ").out);
  EXPECT_EQ(run("verify --max-order 8", "PERMGRAPH_THREADS=zero ").code, 2);
}
