#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arrfree/catalog.hpp"
#include "arrfree/io.hpp"
#include "oracles.hpp"

using namespace arrfree;

TEST_CASE("fixed entries pass their self-check") {
  for (const auto& e : catalog_list()) {
    if (e.takes_parameter) continue;
    const SelfCheckReport r = catalog_selfcheck(e.name);
    CHECK_MESSAGE(r.ok(), e.name);
  }
}

TEST_CASE("family entries pass their self-check across regimes") {
  const std::vector<std::string> f13{"-1", "2", "1/2", "3", "-2", "5/7", "0", "1", "sqrt(-1)", "omega", "t"};
  for (const auto& v : f13) {
    CHECK_MESSAGE(catalog_selfcheck("family13", parse_scalar(v)).ok(), "family13 at " << v);
  }
  for (const auto& v : {"3", "-2", "t"}) {
    CHECK_MESSAGE(catalog_selfcheck("family13_sqrt3", parse_scalar(v)).ok(), "family13_sqrt3 at " << v);
  }
  const std::vector<std::string> f15{"5", "2", "-1", "1/3", "0", "1/2", "(-1+sqrt(5))/2", "(3-sqrt(5))/2", "t"};
  for (const auto& v : f15) {
    CHECK_MESSAGE(catalog_selfcheck("family15", parse_scalar(v)).ok(), "family15 at " << v);
  }
}

TEST_CASE("two realizations of the same lattice") {
  auto lat = [](const char* n) { return compute_lattice(catalog_get(n)); };
  CHECK(lattice_isomorphic(lat("dual_hesse"), lat("dual_hesse_fermat")));
  CHECK(lattice_isomorphic(lat("g443"), lat("g443_fermat")));
  const Family a = family13(), b = family13_sqrt3();
  CHECK(lattice_isomorphic(compute_lattice(specialize(a, Quad(3)).arrangement),
                           compute_lattice(specialize(b, Quad(3)).arrangement)));
}

TEST_CASE("catalog profiles against brute force") {
  const std::vector<std::pair<std::string, Profile>> expected{
      {"triangle", {3}},           {"dual_hesse", {0, 12}},    {"pentagonal", {10, 5, 5}},
      {"eleven_if", {10, 5, 5}},   {"g443", {0, 16, 3}},
  };
  for (const auto& [name, f] : expected) {
    CHECK_MESSAGE(oracle::brute_profile(catalog_get(name)) == f, name);
  }
}

TEST_CASE("named constants") {
  CHECK(omega() * omega() + omega() + Quad(1) == Quad());
  CHECK(zeta() * zeta() == zeta() + Quad(1));
}

TEST_CASE("lookup errors") {
  CHECK_THROWS_AS(catalog_get("nope"), Error);
  CHECK_THROWS_AS(catalog_get("dual_hesse", Scalar(2)), Error);
  CHECK_THROWS_AS(catalog_get("family13"), Error);
  CHECK_THROWS_AS(catalog_family("triangle"), Error);
  CHECK(catalog_family("family15").lines.size() == 15);
}

TEST_CASE("expectations by regime") {
  CHECK(catalog_expected("family15", parse_scalar("5")).exponents == Exponents{1, 7, 7});
  CHECK(catalog_expected("family15", parse_scalar("(3+sqrt(5))/2")).exponents == Exponents{1, 5, 9});
  CHECK(catalog_expected("family15", parse_scalar("1/2")).degenerate);
  CHECK(catalog_expected("family13", parse_scalar("2")).tag == ClassTag::IF);
  CHECK(catalog_expected("family13", parse_scalar("3")).tag == ClassTag::SExceptional);
  CHECK(catalog_expected("family13", Scalar::t()).tag == ClassTag::Family);
}
