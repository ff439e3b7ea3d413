#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "raddeg/workspace.hpp"

using namespace raddeg;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> fixture_files() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(RADDEG_FIXTURE_DIR))
    if (e.path().extension() == ".ws") out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

std::string error_of(const std::string& text) {
  try {
    auto ws = parse_workspace_text(text, "t");
    if (ws.field.kind == FieldSpec::Kind::rationals)
      build_workspace(ws, Rationals(ws.field));
    else
      build_workspace(ws, FiniteField(ws.field));
  } catch (const WorkspaceError& e) {
    return e.what();
  }
  return "";
}

const char* kLoop = R"([field]
kind = prime
p = 3

[quiver]
vertices = 1
arrow x = 1 -> 1
relation = x.x.x
cap = 3

[catalogue]
builder = nakayama
)";

}  // namespace

TEST_CASE("bundled fixtures parse, build and round-trip") {
  auto files = fixture_files();
  REQUIRE(files.size() >= 8);
  for (const auto& path : files) {
    CAPTURE(path);
    auto ws = parse_workspace(path);
    CHECK(emit_workspace(ws) == slurp(path));
    CHECK(parse_workspace_text(emit_workspace(ws), ws.name) == ws);
    if (ws.field.kind == FieldSpec::Kind::rationals) {
      auto w = build_workspace(ws, Rationals(ws.field));
      REQUIRE(w.catalogue);
      CHECK(w.catalogue->size() > 0);
    } else {
      auto w = build_workspace(ws, FiniteField(ws.field));
      REQUIRE(w.catalogue);
      for (const auto& m : ws.morphisms) CHECK(w.morphism(m.name).has_value());
    }
  }
}

TEST_CASE("workspace text with comments and module maps") {
  std::string text = std::string(kLoop) + R"(
# a uniserial of length two, given by its arrow map
[module U]
dims = 2
map x =
  [0 1]
  [0 0]

[morphism inc]
source = M1
target = U
matrix =
  [0 1]
)";
  auto ws = parse_workspace_text(text, "loop");
  CHECK(ws.field == FieldSpec::prime_field(3));
  REQUIRE(ws.quiver);
  CHECK(ws.quiver->nilpotency_cap == 3u);
  CHECK(ws.builder == "nakayama");
  auto w = build_workspace(ws, FiniteField(ws.field));
  CHECK(w.catalogue->size() == 3u);
  auto u = w.module("U");
  REQUIRE(u);
  CHECK(u->dim() == 2u);
  CHECK(w.module("M2")->dim() == 2u);
  auto inc = w.morphism("inc");
  REQUIRE(inc);
  CHECK(inc->matrix.rows() == 1u);
  CHECK_FALSE(w.morphism("nothing").has_value());
  CHECK(parse_workspace_text(emit_workspace(ws), "loop") == ws);
}

TEST_CASE("rational entries round-trip") {
  std::string text = R"([field]
kind = rationals

[quiver]
vertices = 1 2
arrow a = 1 -> 2
cap = 2

[module V]
dims = 1 1
map a =
  [-3/6]
)";
  auto ws = parse_workspace_text(text, "q");
  REQUIRE(ws.modules.size() == 1u);
  CHECK(ws.modules[0].maps[0].second.entries[0] == "-1/2");
  auto w = build_workspace(ws, Rationals(ws.field));
  CHECK_FALSE(w.catalogue);
  CHECK(w.module("V")->dim() == 2u);
}

TEST_CASE("workspace errors carry positions") {
  CHECK(error_of("") == "missing field block");
  CHECK(error_of("[field]\nkind = prime\np = 4\n").find("3:") == 0);
  CHECK(error_of("[field]\nkind = prime\np = 2\n[nonsense]\n").find("4:") == 0);
  CHECK(error_of("[field]\nkind = prime\np = 2\ncolour = red\n").find("4:") == 0);

  // x is not in the square of the arrow ideal
  std::string bad = kLoop;
  bad.replace(bad.find("relation = x.x.x"), 16, "relation = x");
  auto e = error_of(bad);
  CHECK(e.find("8:") == 0);
  CHECK(e.find("NotAdmissible") != std::string::npos);

  // wrong map shape
  std::string shape = std::string(kLoop) + "\n[module U]\ndims = 2\nmap x =\n  [0 1]\n";
  CHECK(error_of(shape).find("14:") == 0);

  // a morphism that does not commute with the action
  std::string nonhom = std::string(kLoop) + "\n[morphism h]\nsource = M2\ntarget = M2\nmatrix =\n  [1 0]\n  [0 0]\n";
  CHECK_FALSE(error_of(nonhom).empty());
  std::string unknown = std::string(kLoop) + "\n[morphism h]\nsource = M9\ntarget = M2\nmatrix =\n  [0 1]\n";
  CHECK(error_of(unknown).find("M9") != std::string::npos);
}
