#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chroma/scripts.hpp"
#include "cli.hpp"

using namespace chroma;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "chroma");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("chroma-cli-" + std::to_string(std::random_device{}()))) { fs::create_directories(dir_); }
  ~Scratch() { fs::remove_all(dir_); }
  std::string write(const std::string& name, const std::string& text) {
    fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  fs::path dir_;
};

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("equal and search on the supplementarity pair") {
    Scratch s;
    auto lhs = s.write("supp_lhs.rgd", *shipped_diagram("supp_lhs"));
    auto rhs = s.write("supp_rhs.rgd", *shipped_diagram("supp_rhs"));
    CHECK(cli({"equal", lhs, rhs}).code == kOk);
    CHECK(cli({"equal", lhs, rhs, "--float"}).code == kOk);
    auto r = cli({"search", lhs, rhs, "--depth", "5", "--flavour", "rg"});
    CHECK(r.code == kNegative);
    CHECK(r.out.find("not found") != std::string::npos);
    auto h = s.write("h.rgd", "diagram rg { inputs a; outputs b; wire a -> b [h]; }");
    CHECK(cli({"equal", lhs, h}).code == kNegative);
  }

  TEST_CASE("rewrite and translate") {
    Scratch s;
    auto lhs = s.write("lhs.rgd", *shipped_diagram("supp_lhs"));
    auto t = cli({"translate", lhs, "--to", "rgb"});
    REQUIRE(t.code == kOk);
    CHECK(t.out.find("diagram rgb") == 0);
    auto tl = s.write("tlhs.rgd", t.out);
    auto script = s.write("supp.rgs", *shipped_script("supplementarity"));
    auto r = cli({"rewrite", tl, "--script", script});
    CHECK(r.code == kOk);
    CHECK(r.out.find("diagram rgb") == 0);
    CHECK(cli({"translate", tl, "--to", "rgb"}).code == kUsage);
    auto bad = s.write("bad.rgs", "apply hopf\n");
    CHECK(cli({"rewrite", tl, "--script", bad}).code == kVerifyFailed);
  }

  TEST_CASE("eval prints a matrix") {
    Scratch s;
    auto f = s.write("g.rgd", "diagram rg { inputs a; outputs b; node n: green 2; wire a -> n; wire n -> b; }");
    auto r = cli({"eval", f});
    CHECK(r.code == kOk);
    CHECK_FALSE(r.out.empty());
    CHECK(cli({"eval", f, "--float"}).code == kOk);
  }

  TEST_CASE("verify") {
    auto r = cli({"verify", "--suite", "euler"});
    CHECK(r.code == kOk);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("euler: 3/3 passed") != std::string::npos);
    CHECK(cli({"verify", "--suite", "group"}).code == kOk);
    CHECK(cli({"verify", "--suite", "nonsense"}).code == kUsage);
  }

  TEST_CASE("error exit codes") {
    Scratch s;
    CHECK(cli({}).code == kUsage);
    CHECK(cli({"frobnicate"}).code == kUsage);
    CHECK(cli({"eval", "/nonexistent/x.rgd"}).code == kUsage);
    auto blue = s.write("blue.rgd", "diagram rg { outputs b; node n: blue 1; wire n -> b; }");
    auto r = cli({"eval", blue});
    CHECK(r.code == kBadInput);
    CHECK(r.err.find("colour/flavour") != std::string::npos);
    auto junk = s.write("junk.rgd", "diagram rg { wire }");
    CHECK(cli({"eval", junk}).code == kBadInput);
    CHECK(cli({"--help"}).code == kOk);
  }
}
