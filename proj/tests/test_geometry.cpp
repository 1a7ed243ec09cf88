#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arrfree/geometry.hpp"
#include "oracles.hpp"

using namespace arrfree;

namespace {

Triple tri(long a, long b, long c) { return {Scalar(a), Scalar(b), Scalar(c)}; }

}  // namespace

TEST_CASE("projective normalization makes the first nonzero entry one") {
  const Line l(tri(0, 4, -6));
  CHECK(l[0].is_zero());
  CHECK(l[1].is_one());
  CHECK(l[2] == Scalar(Rat(-3, 2)));
  CHECK(Line(tri(2, 2, 2)) == Line(tri(-1, -1, -1)));
  CHECK_THROWS_AS(Line(tri(0, 0, 0)), Error);
}

TEST_CASE("meet and join agree with incidence") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int it = 0; it < 300; ++it) {
    const Triple u = tri(c(rng), c(rng), c(rng));
    const Triple v = tri(c(rng), c(rng), c(rng));
    if (oracle::proportional(u, v) || (u[0].is_zero() && u[1].is_zero() && u[2].is_zero()) ||
        (v[0].is_zero() && v[1].is_zero() && v[2].is_zero())) {
      continue;
    }
    const Line l1(u), l2(v);
    const Point p = meet(l1, l2);
    CHECK(incident(p, l1));
    CHECK(incident(p, l2));
    const Point q1(u), q2(v);
    const Line j = join(q1, q2);
    CHECK(incident(q1, j));
    CHECK(incident(q2, j));
  }
}

TEST_CASE("cross, dot and determinant") {
  const Triple u = tri(1, 2, 3), v = tri(-2, 0, 5);
  const Triple w = cross(u, v);
  CHECK(dot(w, u).is_zero());
  CHECK(dot(w, v).is_zero());
  CHECK(det3(u, v, w) == dot(w, w));
  CHECK(det3(u, v, w) == oracle::naive_det(u, v, w));
}

TEST_CASE("arrangement editing keeps order") {
  Arrangement a(FieldCtx::rational(), {Line(tri(1, 0, 0)), Line(tri(0, 1, 0)), Line(tri(0, 0, 1))});
  const Arrangement b = a.with(Line(tri(1, 1, 1)));
  CHECK(b.size() == 4);
  CHECK(b.find(Line(tri(2, 2, 2))) == 3);
  const Arrangement c = b.without(1);
  CHECK(c.size() == 3);
  CHECK(c[1] == Line(tri(0, 0, 1)));
  CHECK(!c.contains(Line(tri(0, 1, 0))));
  CHECK(b.subset({3, 0})[0] == Line(tri(1, 1, 1)));
  CHECK_THROWS_AS(a.with(Line(tri(0, 3, 0))), Error);
}

TEST_CASE("canonical key ignores order") {
  const Arrangement a(FieldCtx::rational(), {Line(tri(1, 0, 0)), Line(tri(1, 2, 0)), Line(tri(0, 0, 1))});
  const Arrangement b(FieldCtx::rational(), {Line(tri(0, 0, 3)), Line(tri(1, 0, 0)), Line(tri(2, 4, 0))});
  CHECK(a.canonical_key() == b.canonical_key());
  CHECK(a.canonical_key() != a.without(0).canonical_key());
}

TEST_CASE("field contexts") {
  const Line l(Triple{Scalar(1), Scalar(Quad(0, 1, 5)), Scalar(0)});
  CHECK(infer_ctx({l}) == FieldCtx::quadratic(5));
  CHECK_THROWS_AS(Arrangement(FieldCtx::rational(), {l}), Error);
  try {
    Arrangement(FieldCtx::quadratic(2), {l});
    FAIL("expected a mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FieldMismatch);
  }
  const Arrangement a(FieldCtx::quadratic(5), {l, Line(tri(0, 0, 1))});
  CHECK(a.conjugate()[0] == Line(Triple{Scalar(1), Scalar(Quad(0, -1, 5)), Scalar(0)}));
}

TEST_CASE("cone appends the line at infinity") {
  const Arrangement a = cone({tri(1, 0, 0), tri(0, 1, -1)}, FieldCtx::rational());
  CHECK(a.size() == 3);
  CHECK(a[1] == Line(tri(0, 1, -1)));
  CHECK(a[2] == Line(tri(0, 0, 1)));
}
