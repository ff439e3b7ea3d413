#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "raddeg/cli.hpp"

using namespace raddeg;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(RADDEG_FIXTURE_DIR) + "/" + name + ".ws"; }

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("cli usage errors exit 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"verify", "--theorem", "Z", fixture("kx2")}).code == 1);
  CHECK(run({"verify", "--theorem", "B"}).code == 1);
  auto missing = run({"radical-table", "/nonexistent.ws"});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("error:") == 0);
  CHECK(run({"degree", fixture("kx2"), "--morphism", "nope"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli radical table and AR quiver") {
  auto r = run({"radical-table", fixture("kx2")});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("N 3\n") != std::string::npos);
  CHECK(r.out.find("rad M2 -> M2: 2 1 1 0\n") != std::string::npos);

  auto dot = run({"ar-quiver", fixture("a2"), "--dot"});
  REQUIRE(dot.code == 0);
  CHECK(dot.out.rfind("digraph AR {", 0) == 0);
  CHECK(count(dot.out, "[label=\"(") == 2);
  CHECK(count(dot.out, "style=dashed") == 1);
  CHECK(count(dot.out, "\\n(") == 3);

  auto sp = run({"ar-quiver", fixture("species")});
  CHECK(sp.out.find("arrow S2 -> P1 dim 2 valuation (2,1)") != std::string::npos);
  CHECK(sp.out.find("vertex S1 (2,0) tau P1") != std::string::npos);
}

TEST_CASE("cli degree and path composition") {
  auto d = run({"degree", fixture("kx3"), "--morphism", "pi"});
  CHECK(d.out.rfind("d_l(pi) = 1 ", 0) == 0);
  auto r = run({"degree", fixture("kx3"), "--morphism", "pi", "--side", "right"});
  CHECK(r.out.rfind("d_r(pi) = inf", 0) == 0);
  auto fleet = run({"degree", fixture("kx3"), "--morphism", "M3->M2", "--side", "left"});
  CHECK(fleet.out.rfind("d_l(M3->M2) = 2 ", 0) == 0);

  auto c = run({"compose-path", fixture("kx2"), "--path", "iota,pi"});
  REQUIRE(c.code == 0);
  CHECK(c.out.find("C | kx2 | iota,pi: (i) composite in rad^(n+1) | skipped | yes") != std::string::npos);
  CHECK(c.out.find("C | kx2 | iota,pi: verdict | verified") != std::string::npos);

  auto s = run({"compose-path", fixture("species"), "--path", "f,g", "--format", "jsonl"});
  REQUIRE(s.code == 0);
  CHECK(s.out.find(R"("data":"no composite depth=2 n=2")") != std::string::npos);
  CHECK(s.out.find("zero path S2->P1->P1/S2 exists") != std::string::npos);
}

TEST_CASE("cli verify writes identical output files") {
  auto path = std::filesystem::temp_directory_path() / "raddeg_cli_test.txt";
  auto a = run({"verify", "--theorem", "B", "--all-fixtures", "--out", path.string()});
  REQUIRE(a.code == 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == a.out);
  auto b = run({"verify", "--theorem", "B", "--all-fixtures"});
  CHECK(a.out == b.out);
  CHECK(a.out.find("VIOLATION") == std::string::npos);
  CHECK(count(a.out, "| species |") > 0);
  std::filesystem::remove(path);
}
