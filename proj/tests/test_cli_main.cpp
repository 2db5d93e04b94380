// Black-box tests of the command-line tool, run against the binary whose
// path arrives as argv[1].
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

namespace {

std::string g_cli;

struct RunResult {
  int exit_code;
  std::string out;  // stdout only; stderr is left on the test log
};

RunResult run(const std::string& args) {
  std::string cmd = g_cli + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("chigen-cli-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  static inline int counter = 0;
};

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("no subcommand is a usage error") {
  CHECK(run("2>/dev/null").exit_code == 1);
  CHECK(run("frobnicate 2>/dev/null").exit_code == 1);
  CHECK(run("chi --format yaml 2>/dev/null").exit_code == 1);
  CHECK(run("chi -n 0 --cap-d 1 --cap-di 1 2>/dev/null").exit_code == 1);
}

TEST_CASE("help exits cleanly") {
  RunResult r = run("--help");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "chi"));
  CHECK(contains(r.out, "verify"));
}

TEST_CASE("one-point table in csv") {
  RunResult r = run("chi -n 1 --cap-d 6 --cap-di 6");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "d,d1,chi\n"));
  CHECK(contains(r.out, "\n0,0,1\n"));   // chi(O) = 1
  CHECK(contains(r.out, "\n0,6,1\n"));   // one modular form of weight 6
  CHECK(contains(r.out, "\n0,4,1\n"));
  CHECK(contains(r.out, "\n0,5,0\n"));
  CHECK(r.out == run("x1 --cap-d 6 --cap-di 6").out);
}

TEST_CASE("json output carries the engine version") {
  RunResult r = run("chi -n 2 --cap-d 2 --cap-di 2 --format json");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"engine_version\""));
  CHECK(contains(r.out, "\"entries\""));
  CHECK(contains(r.out, "{\"d\":0,\"di\":[0,0],\"chi\":\"1\"}"));
}

TEST_CASE("output is byte-identical across thread counts") {
  RunResult a = run("chi -n 3 --cap-d 3 --cap-di 3 --threads 1");
  RunResult b = run("chi -n 3 --cap-d 3 --cap-di 3 --threads 8");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("cold and warm cache runs agree byte for byte") {
  TempDir tmp;
  std::string args =
      "chi -n 2 --cap-d 3 --cap-di 3 --cache-dir " + tmp.path.string();
  RunResult cold = run(args);
  CHECK(cold.exit_code == 0);
  CHECK(std::filesystem::exists(tmp.path / "X_g1_n2_q3_qi3.json"));
  RunResult warm = run(args);
  CHECK(warm.exit_code == 0);
  CHECK(warm.out == cold.out);
}

TEST_CASE("CHI_CACHE_DIR is honored when --cache-dir is absent") {
  TempDir tmp;
  // popen runs through sh, so an env-var prefix works
  std::string cmd = "CHI_CACHE_DIR=" + tmp.path.string() + " " + g_cli +
                    " chi -n 2 --cap-d 2 --cap-di 2";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (fread(buf.data(), 1, buf.size(), pipe) > 0) {
  }
  CHECK(WEXITSTATUS(pclose(pipe)) == 0);
  CHECK(std::filesystem::exists(tmp.path / "X_g1_n2_q2_qi2.json"));
}

TEST_CASE("phi subcommand") {
  RunResult r = run("phi -n 2 --cap-d 1 --cap-di 1");
  CHECK(r.exit_code == 0);
  // rational sector contributions summing to integers:
  // 1/24 + 3*11/24 + 1/4 + 1/3 = 2
  CHECK(r.out == "d,d1,d2,phi\n0,1,1,2\n1,1,1,-2\n");
  CHECK(run("phi -n 1 --cap-d 1 --cap-di 1 2>/dev/null").exit_code == 1);
}

TEST_CASE("genus0 subcommand") {
  RunResult r = run("genus0 -n 4 --cap-di 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "d1,d2,d3,d4,chi\n"));
  CHECK(contains(r.out, "\n3,0,0,0,4\n"));  // chi(P^1, O(3)) = 4
  CHECK(run("genus0 -n 2 --cap-di 3 2>/dev/null").exit_code == 1);
  CHECK(run("chi --genus 0 -n 4 --cap-di 3").out == r.out);
}

TEST_CASE("verify runs all suites and a filtered subset") {
  RunResult all = run("verify");
  CHECK(all.exit_code == 0);
  CHECK(contains(all.out, "PASS x1"));
  CHECK(contains(all.out, "PASS string"));
  CHECK_FALSE(contains(all.out, "FAIL"));

  RunResult one = run("verify --suite x1");
  CHECK(one.exit_code == 0);
  CHECK(contains(one.out, "PASS x1"));
  CHECK_FALSE(contains(one.out, "string"));

  CHECK(run("verify --suite no-such-suite 2>/dev/null").exit_code != 0);
}

int main(int argc, char** argv) {
  doctest::Context ctx;
  // last non-option argument is the path to the CLI under test
  if (argc > 1 && argv[argc - 1][0] != '-') {
    g_cli = argv[argc - 1];
    --argc;
  }
  if (g_cli.empty()) {
    std::fprintf(stderr, "usage: %s [doctest options] <chigen binary>\n",
                 argv[0]);
    return 2;
  }
  ctx.applyCommandLine(argc, argv);
  return ctx.run();
}
