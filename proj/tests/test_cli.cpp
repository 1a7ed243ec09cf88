#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include "arrfree/catalog.hpp"
#include "arrfree/cli.hpp"
#include "arrfree/io.hpp"
#include "arrfree/render.hpp"

using namespace arrfree;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = std::string(P_tmpdir) + "/arrfree_test_" + name;
  std::ofstream(path) << content;
  return path;
}

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::size_t p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("freeness report") {
  const Run r = run({"freeness", "catalog:family13?lambda=3"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["verdict"] == "free");
  CHECK(j["route"] == "yoshinaga");
  CHECK(j["exponents"] == Json::array({1, 6, 6}));
}

TEST_CASE("profile classification report") {
  const Run r = run({"classify-profiles", "--max", "12"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["triples"].size() == 6);
}

TEST_CASE("recursive report on the dual Hesse arrangement") {
  const Run r = run({"recursive", "catalog:dual_hesse", "--max-size", "10"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["verdict"] == "yes");
  CHECK(j["verified"] == true);
  CHECK(j["chain"]["additions"] == 1);
}

TEST_CASE("reports are deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"analyze", "catalog:pentagonal"},
           {"additions", "catalog:dual_hesse"},
           {"scan-family", "family13", "--samples", "2,3,0"},
           {"render", "catalog:family13?lambda=2/3"},
           {"aut", "catalog:g443", "--md"}}) {
    const Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("file input, affine input and markdown") {
  const std::string path = temp_file("a.json", R"({"field":{"sqrt":null},"lines":[[1,0,0],[0,1,0],["1/2",0,-1]],"affine":true})");
  const Run r = run({"charpoly", path, "--md"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("# charpoly", 0) == 0);
  const Run j = run({"analyze", path});
  CHECK(Json::parse(j.out)["size"] == 4);
  std::remove(path.c_str());
}

TEST_CASE("exit codes") {
  CHECK(run({"analyze", "/nonexistent.json"}).code == kExitParse);
  CHECK(run({"analyze", "catalog:nope"}).code == kExitParse);
  CHECK(run({"analyze", "catalog:family13?lambda=1/"}).code == kExitParse);
  CHECK(run({"frobnicate"}).code == kExitParse);
  CHECK(run({"--help"}).code == kExitOk);

  const std::string bad = temp_file("bad.json", "{\"lines\": [[1, 0]]}");
  CHECK(run({"analyze", bad}).code == kExitParse);
  const std::string broken = temp_file("broken.json", "{\"lines\": ");
  CHECK(run({"analyze", broken}).code == kExitParse);
  const std::string mismatch = temp_file("mm.json", R"J({"field":{"sqrt":2},"lines":[[1,"sqrt(3)",0],[0,1,0],[0,0,1]]})J");
  CHECK(run({"analyze", mismatch}).code == kExitFieldMismatch);
  for (const auto& p : {bad, broken, mismatch}) std::remove(p.c_str());

  CHECK(run({"render", "catalog:dual_hesse"}).code == kExitNotDrawable);
  CHECK(run({"render", "catalog:family13?t=t"}).code == kExitNotDrawable);
  CHECK(run({"catalog", "check", "g443"}).code == kExitOk);
  CHECK(exit_code_for(ErrorKind::SelfCheck) == kExitSelfCheck);
}

TEST_CASE("svg drawings") {
  const Run tri = run({"render", "catalog:triangle"});
  REQUIRE(tri.code == 0);
  CHECK(count(tri.out, "<line ") == 2);  // z = 0 is at infinity
  CHECK(count(tri.out, "<circle") == 1);
  const Run tri2 = run({"render", "catalog:triangle", "--generic-chart"});
  REQUIRE(tri2.code == 0);
  CHECK(count(tri2.out, "<line ") == 3);
  CHECK(count(tri2.out, "<circle") == 3);

  const Run f13 = run({"render", "catalog:family13?lambda=2/3"});
  REQUIRE(f13.code == 0);
  CHECK(count(f13.out, "<line ") == 12);
  CHECK(count(f13.out, "H13 at infinity,") == 1);

  const Run f15 = run({"render", "catalog:family15?lambda=1/5", "--infinity-line", "6"});
  REQUIRE(f15.code == 0);
  CHECK(count(f15.out, "<line ") == 14);
  CHECK(count(f15.out, "H6 at infinity") == 1);

  const Run get = run({"catalog", "get", "pentagonal", "--svg"});
  CHECK(get.code == 0);
  CHECK(get.out.find("<svg") != std::string::npos);
}

TEST_CASE("svg markers are the lattice points inside the viewport") {
  for (const auto& [name, param] : std::vector<std::pair<std::string, std::string>>{
           {"family13", "2/3"}, {"family13", "5"}, {"family15", "1/5"}, {"pentagonal", ""}, {"eleven_if", ""}, {"triangle", ""}}) {
    const Arrangement a = param.empty() ? catalog_get(name) : catalog_get(name, parse_scalar(param));
    const LatticeData l = compute_lattice(a);
    for (bool generic : {false, true}) {
      RenderOptions opts;
      opts.viewport = Viewport{-3, 3, -3, 3};
      opts.generic_chart = generic;
      const SvgScene s = build_scene(a, l, opts);
      // Expected markers: points off the line at infinity whose affine
      // coordinates, computed exactly, lie in the viewport.
      const Triple& c = s.infinity.coeffs();
      std::set<int> expected;
      for (std::size_t p = 0; p < l.points.size(); ++p) {
        const Triple& x = l.points[p].point.coords();
        if (dot(c, x).is_zero()) continue;
        if (!generic && s.infinity == Line(Scalar(0), Scalar(0), Scalar(1))) {
          const Scalar u = x[0] / x[2], v = x[1] / x[2];
          auto in = [](const Scalar& t) { return (t - Scalar(3)).as_quad().to_double() <= 0 && (t + Scalar(3)).as_quad().to_double() >= 0; };
          if (in(u) && in(v)) expected.insert(static_cast<int>(p));
        } else {
          expected.insert(static_cast<int>(p));
        }
      }
      std::set<int> drawn;
      for (const auto& m : s.markers) {
        drawn.insert(m.point);
        CHECK(m.mu == l.points[m.point].mu());
      }
      if (!generic && s.infinity == Line(Scalar(0), Scalar(0), Scalar(1))) {
        CHECK_MESSAGE(drawn == expected, name);
      } else {
        for (int p : drawn) CHECK(expected.count(p) == 1);
      }
      if (generic) CHECK(s.points_at_infinity.empty());
      const std::string svg = scene_to_svg(s, 400);
      CHECK(count(svg, "<circle") == static_cast<int>(s.markers.size()));
    }
  }
}
