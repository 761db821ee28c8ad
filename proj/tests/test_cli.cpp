#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fusioncat/cli.hpp"

using namespace fusioncat;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "fusioncat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("fusioncat_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("count") {
    Run r = run({"count", "--builtin", "h3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("unknowns=1431") != std::string::npos);
    CHECK(r.out.find("rule=none total=41391 trivial=0 nontrivial=41391") != std::string::npos);
    CHECK(r.out.find("rule=unit") != std::string::npos);
    CHECK(run({"count", "--builtin", "z3"}).out.find("unknowns=27") != std::string::npos);
  }

  TEST_CASE("skein report") {
    Run r = run({"skein"});
    CHECK(r.code == 0);
    CHECK(r.out.find("c1=(7/18)+(1/18)*r13") != std::string::npos);
    CHECK(r.out.find("c2^2=(-2/9)+(1/9)*r13") != std::string::npos);
    CHECK(r.out.find("d=(3/2)+(1/2)*r13 ") != std::string::npos);
  }

  TEST_CASE("export, verify, mutate") {
    std::string path = temp_path("h3.txt");
    REQUIRE(run({"export", "--builtin", "h3", "--out", path}).code == 0);
    Run ok = run({"verify", "--dataset", path, "--jobs", "0"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("failures=0") != std::string::npos);

    std::string text = slurp(path);
    // negate (F_rho^{rho rho rho})_{rho rho}
    std::string line = "F r r r r r r = ";
    auto pos = text.find(line);
    REQUIRE(pos != std::string::npos);
    text.insert(pos + line.size(), "-(");
    text.insert(text.find('\n', pos), ")");
    std::string bad = temp_path("h3_bad.txt");
    std::ofstream(bad) << text;
    Run fail = run({"verify", "--dataset", bad, "--params", "+1,-1", "--jobs", "0"});
    CHECK(fail.code == 1);
    CHECK(fail.out.find("\nFAIL ") != std::string::npos);

    std::ofstream(bad) << "h3fsym v1\nF r r r r r r\n";
    Run broken = run({"verify", "--dataset", bad});
    CHECK(broken.code == 2);
    CHECK(broken.err.find(":2:") != std::string::npos);
    std::filesystem::remove(path);
    std::filesystem::remove(bad);
  }

  TEST_CASE("verify builtin with a sign assignment") {
    Run r = run({"verify", "--builtin", "h3", "--params", "+1,-1", "--jobs", "0", "--triviality", "unit"});
    CHECK(r.code == 0);
    CHECK(r.out.find("nontrivial=36022 failures=0") != std::string::npos);
  }

  TEST_CASE("input errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify", "--params", "2,1"}).code == 2);
    CHECK(run({"verify", "--builtin", "e8"}).code == 2);
    CHECK(run({"verify", "--dataset", "/nonexistent"}).code == 2);
    CHECK(run({"render", "--builtin", "h3"}).code == 2);  // no --out
    CHECK(run({"render", "--builtin", "h3", "--order", "shuffled", "--out", temp_path("x.ppm")}).code == 2);
  }

  TEST_CASE("render is deterministic") {
    std::string a = temp_path("a.ppm"), b = temp_path("b.ppm");
    REQUIRE(run({"render", "--builtin", "h3", "--params", "+1,+1", "--order", "seeded:7", "--out", a}).code == 0);
    REQUIRE(run({"render", "--builtin", "h3", "--params", "+1,+1", "--order", "seeded:7", "--out", b}).code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a).rfind("P6\n38 38\n255\n", 0) == 0);
    std::filesystem::remove(a);
    std::filesystem::remove(b);
  }

  TEST_CASE("solve") {
    Run fib = run({"solve", "--builtin", "fib"});
    CHECK(fib.code == 0);
    CHECK(fib.out.find("verified tables=1") != std::string::npos);
    CHECK(fib.out.find("ring fibonacci") != std::string::npos);
    Run h3 = run({"solve", "--builtin", "h3"});
    CHECK(h3.code == 0);
    CHECK(h3.out.find("dataset agreement:") != std::string::npos);
  }
}
