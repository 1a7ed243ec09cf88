#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arrfree/catalog.hpp"
#include "arrfree/freeness.hpp"
#include "oracles.hpp"

using namespace arrfree;

namespace {

BinaryPoly bp(std::initializer_list<long> c) {
  BinaryPoly p{static_cast<int>(c.size()) - 1, {}};
  for (long v : c) p.coeffs.emplace_back(v);
  return p;
}

MultiArr2 multi(std::vector<std::pair<BinaryForm, int>> parts) {
  MultiArr2 m;
  for (auto& [f, k] : parts) {
    m.forms.push_back(f);
    m.mult.push_back(k);
  }
  return m;
}

BinaryForm form(long a, long b) { return BinaryForm::make(Scalar(a), Scalar(b)); }

// dim D(M)_d by dividing theta(alpha) by alpha^m, one column per unknown.
int module_dimension(const MultiArr2& m, int d) {
  const int cols = 2 * (d + 1);
  Matrix rows;
  for (std::size_t i = 0; i < m.forms.size(); ++i) {
    const Quad a = m.forms[i].a.as_quad(), b = m.forms[i].b.as_quad();
    const int k = m.mult[i];
    std::vector<std::vector<Scalar>> remainders;
    for (int c = 0; c < cols; ++c) {
      // column c: coefficient c % (d+1) of f_u (c <= d) or f_v, times a or b
      const int idx = c % (d + 1);
      const Quad w = c <= d ? a : b;
      std::vector<Scalar> rem;
      if (a.is_zero()) {
        // alpha = v: the coefficients of u^(d-j) v^j for j < k must vanish
        for (int j = 0; j < k; ++j) rem.emplace_back(j == idx ? Scalar(w) : Scalar(0));
      } else {
        // dehomogenize at v = 1: u^(d-idx), divided by (a u + b)^k
        std::vector<Quad> g(d + 1);
        g[d - idx] = w;
        Poly lin(std::vector<Quad>{b, a});
        Poly pk(Quad(1));
        for (int j = 0; j < k; ++j) pk *= lin;
        const Poly r = Poly::divmod(Poly(g), pk).second;
        for (int j = 0; j < k; ++j) rem.emplace_back(r.coeff(j));
      }
      remainders.push_back(rem);
    }
    for (std::size_t j = 0; j < remainders[0].size(); ++j) {
      std::vector<Scalar> row;
      for (int c = 0; c < cols; ++c) row.push_back(remainders[c][j]);
      rows.push_back(row);
    }
  }
  return cols - rank(rows, cols);
}

}  // namespace

TEST_CASE("explicit basis of u^3 v^3 (u+v)^3") {
  const MultiArr2 m = multi({{form(1, 0), 3}, {form(0, 1), 3}, {form(1, 1), 3}});
  CHECK(m.total() == 9);
  const ExponentPair e = multi_exponents(m);
  CHECK(e == ExponentPair{4, 5});

  const Derivation2 d1{bp({1, 2, 0, 0, 0}), bp({0, 0, 0, -2, -1})};
  const Derivation2 d2{bp({0, 1, 3, 0, 0, 0}), bp({0, 0, 0, 3, 1, 0})};
  CHECK(in_derivation_module(m, d1));
  CHECK(in_derivation_module(m, d2));
  CHECK(saito_verify_rank2(m, d1, d2));
  CHECK(saito_verify_rank2(m, d2, d1));

  // u * d1 has degree five but is dependent on d1.
  const Derivation2 ud1{bp({1, 2, 0, 0, 0, 0}), bp({0, 0, 0, -2, -1, 0})};
  CHECK(!saito_verify_rank2(m, d1, ud1));
  // Not in the module: the Euler derivation.
  const Derivation2 euler{bp({1, 0}), bp({0, 1})};
  CHECK(!in_derivation_module(m, euler));
}

TEST_CASE("multi-exponents of random multiarrangements") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> c(-4, 4);
  std::uniform_int_distribution<int> mult(1, 4);
  std::uniform_int_distribution<int> count(1, 5);
  for (int it = 0; it < 150; ++it) {
    MultiArr2 m;
    const int k = count(rng);
    while (static_cast<int>(m.forms.size()) < k) {
      const long a = c(rng), b = c(rng);
      if (a == 0 && b == 0) continue;
      const BinaryForm f = form(a, b);
      if (std::find(m.forms.begin(), m.forms.end(), f) != m.forms.end()) continue;
      m.forms.push_back(f);
      m.mult.push_back(mult(rng));
    }
    int e1 = 0;
    while (module_dimension(m, e1) == 0) ++e1;
    const MultiExponents me = multi_exponents_with_witness(m);
    CHECK(me.exponents.e1 == e1);
    CHECK(me.exponents.e2 == m.total() - e1);
    CHECK(me.witness.degree() == e1);
    CHECK(!me.witness.is_zero());
    CHECK(in_derivation_module(m, me.witness));
  }
}

TEST_CASE("freeness of random arrangements against the derivation module") {
  std::mt19937 rng(4242);
  std::mt19937 oracle_rng(1);
  int free_count = 0, nonfree_count = 0;
  for (int it = 0; it < 220; ++it) {
    const int n = 1 + it % 10;
    const Arrangement a = oracle::random_arrangement(rng, n);
    const LatticeData l = compute_lattice(a);
    const FreenessResult r = is_free(a, l);
    const oracle::FreenessOracle o = oracle::derivation_module_freeness(a, oracle_rng);
    CHECK_MESSAGE(r.is_free() == o.free, a.canonical_key());
    if (r.is_free()) {
      ++free_count;
      REQUIRE(r.exponents);
      CHECK(r.exponents->a == o.a);
      CHECK(r.exponents->b == o.b);
    } else {
      ++nonfree_count;
    }
  }
  CHECK(free_count > 20);
  CHECK(nonfree_count > 20);
}

TEST_CASE("restriction line does not change the verdict") {
  std::mt19937 rng(77);
  for (int it = 0; it < 200; ++it) {
    const Arrangement a = oracle::random_arrangement(rng, 3 + it % 8);
    const LatticeData l = compute_lattice(a);
    const CharPoly c = char_poly(l);
    std::optional<Verdict> first;
    for (int h = 0; h < a.size(); ++h) {
      const MultiArr2 z = ziegler_restriction(a, l, h);
      CHECK(z.total() == a.size() - 1);
      CHECK(static_cast<int>(z.forms.size()) == l.lines[h].n);
      const FreenessResult y = yoshinaga_test(a, l, c, h);
      if (!first) first = y.verdict;
      CHECK(y.verdict == *first);
    }
    if (auto abt = abt_test(a, l, c)) CHECK(abt->verdict == *first);
  }
}

TEST_CASE("catalog freeness") {
  const FreenessResult hesse = is_free(catalog_get("dual_hesse"));
  CHECK(hesse.is_free());
  CHECK(*hesse.exponents == Exponents{1, 4, 4});
  CHECK(s_membership(compute_lattice(catalog_get("dual_hesse")), hesse));

  const Arrangement f13 = catalog_get("family13", Scalar(3));
  const LatticeData l13 = compute_lattice(f13);
  const CharPoly c13 = char_poly(l13);
  CHECK(!abt_test(f13, l13, c13));
  const FreenessResult y = yoshinaga_test(f13, l13, c13, default_restriction_line(f13, l13));
  CHECK(y.is_free());
  REQUIRE(y.restriction_exponents);
  CHECK(y.restriction_exponents->e1 * y.restriction_exponents->e2 == 36);
  CHECK(y.route == Route::Yoshinaga);
}

TEST_CASE("non-split characteristic polynomial is rejected by the gate") {
  auto L = [](long a, long b, long c) { return Line(Scalar(a), Scalar(b), Scalar(c)); };
  const Arrangement general(FieldCtx::rational(), {L(1, 0, 0), L(0, 1, 0), L(0, 0, 1), L(1, 1, 1)});
  const FreenessResult r = is_free(general);
  CHECK(!r.is_free());
  CHECK(r.route == Route::ChiGate);
  CHECK_THROWS_AS(s_membership(compute_lattice(general), r), Error);
}

TEST_CASE("empty and tiny arrangements") {
  const FreenessResult e = is_free(Arrangement(FieldCtx::rational(), {}));
  CHECK(e.is_free());
  CHECK(*e.exponents == Exponents{0, 0, 0});
  const Arrangement one(FieldCtx::rational(), {Line(Scalar(1), Scalar(0), Scalar(0))});
  CHECK(is_free(one).is_free());
}
