#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// stdout only; stderr is discarded
Run run(const std::string& args) {
  std::string cmd = std::string(RILEY_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string limit_alpha2() {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", std::acos(std::sqrt(3.0 / 8.0)));
  return buf;
}

std::size_t count(const std::string& text, const std::string& what) {
  std::size_t c = 0;
  for (std::size_t at = text.find(what); at != std::string::npos; at = text.find(what, at + 1)) ++c;
  return c;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "riley_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("classify at the origin, the limit and an elliptic point") {
  Run o = run("classify --alpha1 0 --alpha2 0");
  REQUIRE(o.code == 0);
  auto j = nlohmann::json::parse(o.out);
  CHECK(j["region"] == "Z_interior");
  CHECK(j["D"] == 1225.0);
  CHECK(j["exact"] == true);
  CHECK(j["commutator_type"] == "Loxodromic");

  Run l = run("classify --alpha1 0 --alpha2 " + limit_alpha2());
  REQUIRE(l.code == 0);
  auto k = nlohmann::json::parse(l.out);
  CHECK(k["region"] == "Z_boundary");
  CHECK(k["commutator_type"] == "Parabolic");

  Run e = run("classify --alpha1 0 --alpha2 1.4");
  REQUIRE(e.code == 0);
  CHECK(nlohmann::json::parse(e.out)["commutator_type"] == "Elliptic");
}

TEST_CASE("usage and domain errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("classify --alpha1 0").code == 2);
  CHECK(run("classify --alpha1 2 --alpha2 0").code == 2);
  CHECK(run("classify --alpha1 0 --alpha2 0 --epsilon -1").code == 2);
  CHECK(run("scan --grid 10 --bounds 1,2,3").code == 2);
  CHECK(run("scan --grid 10 --bounds 0.5,-0.5,0,1").code == 2);
  CHECK(run("scan --grid 10 --format png").code == 2);
  CHECK(run("verify --suite nope").code == 2);
}

TEST_CASE("unwritable output exits with 3") {
  CHECK(run("scan --grid 5 --out /nonexistent-dir/x.csv").code == 3);
  CHECK(run("octahedron --out /nonexistent-dir/o.json").code == 3);
}

TEST_CASE("failed verification exits with 1") {
  Run r = run("verify --suite core --epsilon 1e-300");
  CHECK(r.code == 1);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == false);
}

TEST_CASE("verify emits one record per check") {
  Run r = run("verify --suite core");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["suite"] == "core");
  CHECK(j["pass"] == true);
  REQUIRE(j["checks"].is_array());
  for (auto& c : j["checks"]) {
    CHECK(c["verdict"] == "pass");
    CHECK(c.contains("residual"));
    CHECK(c.contains("witnesses"));
  }
}

TEST_CASE("scan output is deterministic and matches --out") {
  Run a = run("scan --grid 40"), b = run("scan --grid 40");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("alpha1,alpha2,D,G,region\n", 0) == 0);
  CHECK(count(a.out, "\n") == 1 + 40 * 40);
  auto path = scratch("scan.csv");
  REQUIRE(run("scan --grid 40 --out " + path.string()).code == 0);
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == a.out);
  Run svg = run("scan --grid 30 --format svg");
  CHECK(svg.code == 0);
  CHECK(svg.out.find("<svg") != std::string::npos);
  Run js = run("scan --grid 8 --format json --bounds -0.5,0.5,-0.5,0.5");
  CHECK(js.code == 0);
  CHECK(nlohmann::json::parse(js.out).is_object());
}

TEST_CASE("spheres draws ten discs for k-range 2") {
  Run r = run("spheres --alpha1 0 --alpha2 " + limit_alpha2() + " --k-range 2");
  REQUIRE(r.code == 0);
  CHECK(count(r.out, "<circle class=\"disc\"") == 10);
  CHECK(count(r.out, "class=\"tangency\"") > 0);
}

TEST_CASE("octahedron export") {
  Run r = run("octahedron");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
}

TEST_CASE("trace output") {
  Run r = run("trace --grid 20");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("curve,alpha1,alpha2\n", 0) == 0);
  Run j = run("trace --grid 20 --format json");
  auto t = nlohmann::json::parse(j.out);
  CHECK(t.contains("Z"));
  CHECK(t.contains("P"));
}
