#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "arrfree/io.hpp"
#include "arrfree/scalar.hpp"

using namespace arrfree;

namespace {

Quad rand_quad(std::mt19937& rng, std::int64_t d) {
  std::uniform_int_distribution<int> n(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  return Quad(Rat(n(rng), den(rng)), Rat(n(rng), den(rng)), d);
}

Poly poly(std::initializer_list<Quad> ascending) { return Poly(std::vector<Quad>(ascending)); }

}  // namespace

TEST_CASE("rationals are canonical") {
  CHECK(parse_rat("6/4") == Rat(3, 2));
  CHECK(rat_to_string(parse_rat("-10/4")) == "-5/2");
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat("x"), Error);
}

TEST_CASE("squarefree decomposition") {
  Int k;
  CHECK(squarefree_decompose(Int(12), &k) == 3);
  CHECK(k == 2);
  CHECK(squarefree_decompose(Int(-8), &k) == -2);
  CHECK(k == 2);
  CHECK(Quad::sqrt(Int(12)) == Quad(0, 2, 3));
  CHECK(Quad::sqrt(Int(9)) == Quad(3));
}

TEST_CASE("quadratic field axioms against floating point") {
  std::mt19937 rng(7);
  for (std::int64_t d : {2, 3, 5, -1, -3}) {
    for (int it = 0; it < 200; ++it) {
      const Quad x = rand_quad(rng, d);
      const Quad y = rand_quad(rng, d);
      const Quad z = rand_quad(rng, d);
      CHECK((x + y) * z == x * z + y * z);
      CHECK(x * y == y * x);
      CHECK(x - x == Quad());
      if (!y.is_zero()) {
        CHECK((x / y) * y == x);
        CHECK(y * y.inverse() == Quad(1));
      }
      CHECK(x * x.conjugate() == Quad(x.norm()));
      if (d > 0) {
        const double s = std::sqrt(static_cast<double>(d));
        const double xv = x.a().get_d() + x.b().get_d() * s;
        const double yv = y.a().get_d() + y.b().get_d() * s;
        CHECK((x * y).to_double() == doctest::Approx(xv * yv));
        CHECK((x.compare(y) == 0) == (x == y));
        CHECK((x.compare(y) < 0) == (y.compare(x) > 0));
      }
    }
  }
}

TEST_CASE("rationals embed into every extension") {
  const Quad r(Rat(1, 2));
  CHECK((r + Quad(0, 1, 5)).disc() == 5);
  CHECK((Quad(0, 1, 5) * Quad(0, 1, 5)) == Quad(5));
  CHECK((Quad(0, 1, 5) * Quad(0, 1, 5)).disc() == 0);
}

TEST_CASE("mixing two extensions is a field mismatch") {
  try {
    (void)(Quad(0, 1, 2) + Quad(0, 1, 3));
    FAIL("expected a mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FieldMismatch);
  }
}

TEST_CASE("division by zero") {
  try {
    (void)(Quad(1) / Quad());
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
}

TEST_CASE("quad printing") {
  CHECK(Quad(Rat(1, 2), Rat(1, 2), -3).to_string() == "1/2+1/2*sqrt(-3)");
  CHECK(Quad(Rat(-1)).to_string() == "-1");
}

TEST_CASE("polynomial division and gcd") {
  std::mt19937 rng(11);
  for (int it = 0; it < 100; ++it) {
    std::vector<Quad> a, b, c;
    for (int i = 0; i < 4; ++i) a.push_back(rand_quad(rng, 0));
    for (int i = 0; i < 3; ++i) b.push_back(rand_quad(rng, 0));
    for (int i = 0; i < 2; ++i) c.push_back(rand_quad(rng, 0));
    Poly pa(a), pb(b), pc(c);
    if (pb.is_zero() || pc.degree() < 1) continue;
    auto [q, r] = Poly::divmod(pa, pb);
    CHECK(q * pb + r == pa);
    CHECK(r.degree() < pb.degree());
    const Poly g = Poly::gcd(pa * pc, pb * pc);
    CHECK(Poly::divmod(g, pc.monic()).second.is_zero());
  }
}

TEST_CASE("low degree root finding reconstructs the polynomial") {
  const Poly t = Poly::t();
  const Poly one(Quad(1));
  // (t - 1/2)^2 (t^2 - t + 1)(t^2 - 3t + 1/4) * 3
  const Poly p = (t - Poly(Quad(Rat(1, 2)))) * (t - Poly(Quad(Rat(1, 2)))) * poly({1, -1, 1}) *
                 poly({Quad(Rat(1, 4)), -3, 1}) * Poly(Quad(3));
  const LowDegreeRoots r = roots_low_degree(p);
  CHECK(r.product() == p);
  REQUIRE(r.rational.size() == 1);
  CHECK(r.rational[0].first == Rat(1, 2));
  CHECK(r.rational[0].second == 2);
  REQUIRE(r.quadratic.size() == 2);
  for (const auto& q : r.quadratic) {
    CHECK(q.factor.eval(q.root(true)).is_zero());
    CHECK(q.factor.eval(q.root(false)).is_zero());
  }
  CHECK(r.residual.empty());

  // An irreducible cubic stays residual.
  const LowDegreeRoots s = roots_low_degree(poly({-2, 0, 0, 1}));
  CHECK(s.rational.empty());
  CHECK(s.residual.size() == 1);
}

TEST_CASE("rational functions normalize") {
  const Scalar t = Scalar::t();
  const Scalar x = (t * t - Scalar(1)) / (t - Scalar(1));
  CHECK(x == t + Scalar(1));
  CHECK(x.is_parametric());
  CHECK((t / t).is_one());
  CHECK(!(t / t).is_parametric());
  CHECK(x.specialize(Quad(3)) == Quad(4));
  CHECK_THROWS_AS((Scalar(1) / (t - Scalar(2))).specialize(Quad(2)), Error);
}

TEST_CASE("rational functions over a quadratic field") {
  const Scalar t = Scalar::t();
  const Scalar s(Quad(0, 1, 5));
  const Scalar x = (t + s) / (t - s);
  CHECK(x * (t - s) == t + s);
  const FieldCtx ctx = FieldCtx::quadratic(5).with_param();
  CHECK(conjugate(x, ctx) == (t - s) / (t + s));
  CHECK(field_hosts(ctx, x));
  CHECK(!field_hosts(FieldCtx::quadratic(5), x));
}

TEST_CASE("expression parser") {
  CHECK(parse_scalar("3/2 + 1/2*sqrt(5)") == Scalar(Quad(Rat(3, 2), Rat(1, 2), 5)));
  CHECK(parse_scalar("(1+i)/2") == Scalar(Quad(Rat(1, 2), Rat(1, 2), -1)));
  CHECK(parse_scalar("2^-2") == Scalar(Rat(1, 4)));
  CHECK(parse_scalar("-(1-sqrt(8))") == Scalar(Quad(-1, 2, 2)));
  CHECK(parse_scalar("t^2-1").is_parametric());
  CHECK(parse_scalar("omega^2 + omega + 1").is_zero());
  CHECK((parse_scalar("zeta^2") - parse_scalar("zeta") - Scalar(1)).is_zero());
  CHECK_THROWS_AS(parse_scalar("1/"), Error);
  CHECK_THROWS_AS(parse_scalar("sqrt(2)+sqrt(3)"), Error);
  CHECK_THROWS_AS(parse_scalar("1/(2-2)"), Error);
}
