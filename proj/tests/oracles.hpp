#pragma once

// Reference computations for the test suites. They are deliberately naive
// and share nothing with the library beyond Scalar arithmetic and nullspace.

#include <map>
#include <random>
#include <set>
#include <vector>

#include "arrfree/geometry.hpp"
#include "arrfree/lattice.hpp"
#include "arrfree/linalg.hpp"

namespace oracle {

using arrfree::Arrangement;
using arrfree::FieldCtx;
using arrfree::Line;
using arrfree::Profile;
using arrfree::Scalar;
using arrfree::Triple;

inline Scalar naive_det(const Triple& a, const Triple& b, const Triple& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

inline bool proportional(const Triple& a, const Triple& b) {
  return (a[0] * b[1] - a[1] * b[0]).is_zero() && (a[0] * b[2] - a[2] * b[0]).is_zero() &&
         (a[1] * b[2] - a[2] * b[1]).is_zero();
}

/// Random arrangement of distinct lines with small integer coefficients.
inline Arrangement random_arrangement(std::mt19937& rng, int lines, int range = 2) {
  std::uniform_int_distribution<int> coef(-range, range);
  std::vector<Line> out;
  while (static_cast<int>(out.size()) < lines) {
    Triple c{Scalar(long{coef(rng)}), Scalar(long{coef(rng)}), Scalar(long{coef(rng)})};
    if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) continue;
    bool dup = false;
    for (const auto& l : out) dup = dup || proportional(l.coeffs(), c);
    if (!dup) out.emplace_back(c);
  }
  return Arrangement(FieldCtx::rational(), out);
}

/// Maximal sets of at least two concurrent lines, found from 3x3 determinants.
inline std::set<std::vector<int>> concurrency_classes(const Arrangement& a) {
  const int n = a.size();
  std::set<std::vector<int>> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> cls{i, j};
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (naive_det(a[i].coeffs(), a[j].coeffs(), a[k].coeffs()).is_zero()) cls.push_back(k);
      }
      std::sort(cls.begin(), cls.end());
      out.insert(cls);
    }
  }
  return out;
}

/// F_i = number of points where exactly i + 1 lines meet; index 0 holds F_1.
inline Profile brute_profile(const Arrangement& a) {
  Profile f;
  for (const auto& cls : concurrency_classes(a)) {
    const std::size_t mu = cls.size() - 1;
    if (f.size() < mu) f.resize(mu, 0);
    ++f[mu - 1];
  }
  return f;
}

inline int rank_of(const std::vector<Triple>& rows) {
  arrfree::Matrix m;
  for (const auto& r : rows) m.push_back({r[0], r[1], r[2]});
  return m.empty() ? 0 : arrfree::rank(m, 3);
}

/// Whitney's formula: chi(t) = sum over subsets B of (-1)^|B| t^(3 - rank B).
/// Ascending coefficients.
inline std::array<long, 4> whitney_chi(const Arrangement& a) {
  std::array<long, 4> c{};
  const int n = a.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<Triple> rows;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) rows.push_back(a[i].coeffs());
    }
    const int r = rank_of(rows);
    c[3 - r] += (rows.size() % 2 == 0) ? 1 : -1;
  }
  return c;
}

/// Monomials x^i y^j z^k of total degree d.
inline std::vector<std::array<int, 3>> monomials(int d) {
  std::vector<std::array<int, 3>> out;
  for (int i = d; i >= 0; --i) {
    for (int j = d - i; j >= 0; --j) out.push_back({i, j, d - i - j});
  }
  return out;
}

inline Scalar monomial_value(const std::array<int, 3>& e, const Triple& p) {
  Scalar v(1);
  for (int k = 0; k < 3; ++k) {
    for (int r = 0; r < e[k]; ++r) v *= p[k];
  }
  return v;
}

/// Two distinct points on a line.
inline std::pair<Triple, Triple> points_on(const Line& l) {
  const Triple& c = l.coeffs();
  std::vector<Triple> cand{{-c[1], c[0], Scalar(0)}, {-c[2], Scalar(0), c[0]}, {Scalar(0), -c[2], c[1]}};
  std::vector<Triple> pts;
  for (const auto& p : cand) {
    if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero()) continue;
    bool dup = false;
    for (const auto& q : pts) dup = dup || proportional(p, q);
    if (!dup) pts.push_back(p);
  }
  return {pts.at(0), pts.at(1)};
}

/// Basis of the degree-d part of D(A): vectors of coefficients of
/// (f_x, f_y, f_z) over monomials(d), with alpha_H | theta(alpha_H).
inline std::vector<std::vector<Scalar>> derivations(const Arrangement& a, int d) {
  const auto mons = monomials(d);
  const int m = static_cast<int>(mons.size());
  arrfree::Matrix rows;
  for (const auto& h : a.lines()) {
    auto [p, q] = points_on(h);
    for (int s = 0; s <= d; ++s) {
      Triple pt{p[0] + Scalar(long{s}) * q[0], p[1] + Scalar(long{s}) * q[1], p[2] + Scalar(long{s}) * q[2]};
      std::vector<Scalar> row(3 * m);
      for (int k = 0; k < m; ++k) {
        const Scalar mv = monomial_value(mons[k], pt);
        for (int i = 0; i < 3; ++i) row[i * m + k] = h[i] * mv;
      }
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) {
    std::vector<std::vector<Scalar>> all;
    for (int i = 0; i < 3 * m; ++i) {
      std::vector<Scalar> e(3 * m);
      e[i] = Scalar(1);
      all.push_back(e);
    }
    return all;
  }
  return arrfree::nullspace(rows, 3 * m);
}

inline std::vector<Scalar> random_combination(const std::vector<std::vector<Scalar>>& basis, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-50, 50);
  std::vector<Scalar> v(basis.at(0).size());
  for (const auto& b : basis) {
    const Scalar c(long{coef(rng)});
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * b[i];
  }
  return v;
}

inline Triple evaluate_derivation(const std::vector<Scalar>& theta, int d, const Triple& x) {
  const auto mons = monomials(d);
  const int m = static_cast<int>(mons.size());
  Triple out{Scalar(0), Scalar(0), Scalar(0)};
  for (int k = 0; k < m; ++k) {
    const Scalar mv = monomial_value(mons[k], x);
    for (int i = 0; i < 3; ++i) out[i] += theta[i * m + k] * mv;
  }
  return out;
}

struct FreenessOracle {
  bool free = false;
  int a = -1;  // smallest degree of a derivation that is not a multiple of the Euler one
  int b = -1;
};

/// Saito's criterion with generic elements of D(A)_a and D(A)_b, where a is the
/// smallest degree with dim D(A)_d > dim S_(d-1) and b = |A| - 1 - a.
/// A nonzero determinant at a random point proves freeness; a zero
/// determinant for several random choices is taken as non-freeness.
inline FreenessOracle derivation_module_freeness(const Arrangement& a, std::mt19937& rng) {
  const int n = a.size();
  FreenessOracle r;
  for (int d = 0; d <= n; ++d) {
    const int dim = static_cast<int>(derivations(a, d).size());
    const int euler_part = d * (d + 1) / 2;
    if (dim > euler_part) {
      r.a = d;
      break;
    }
  }
  if (r.a < 0) return r;
  r.b = n - 1 - r.a;
  if (r.b < r.a) return r;
  const auto ba = derivations(a, r.a);
  const auto bb = derivations(a, r.b);
  std::uniform_int_distribution<int> coord(-97, 97);
  for (int attempt = 0; attempt < 4 && !r.free; ++attempt) {
    const auto t2 = random_combination(ba, rng);
    const auto t3 = random_combination(bb, rng);
    Triple x{Scalar(long{coord(rng)}), Scalar(long{coord(rng)}), Scalar(long{coord(rng)})};
    bool on_line = false;
    for (const auto& h : a.lines()) {
      on_line = on_line || (h[0] * x[0] + h[1] * x[1] + h[2] * x[2]).is_zero();
    }
    if (on_line) continue;
    const Triple row2 = evaluate_derivation(t2, r.a, x);
    const Triple row3 = evaluate_derivation(t3, r.b, x);
    r.free = !naive_det(x, row2, row3).is_zero();
  }
  return r;
}

}  // namespace oracle
