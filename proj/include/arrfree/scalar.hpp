#pragma once

// Exact arithmetic tower: Q, a single quadratic extension Q(sqrt d), and the
// rational function field Q(sqrt d)(t) over it.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "arrfree/error.hpp"

namespace arrfree {

using Int = mpz_class;
using Rat = mpq_class;

/// Parses "p" or "p/q" into a canonical rational.
Rat parse_rat(const std::string& text);
std::string rat_to_string(const Rat& r);

/// Writes n = k^2 * d with d squarefree; returns d and stores k.
/// Throws InvalidArgument when n is too large to factor by trial division.
std::int64_t squarefree_decompose(const Int& n, Int* k);

/// The working field: Q, or Q(sqrt disc), optionally with an indeterminate t.
struct FieldCtx {
  std::int64_t disc = 0;  // 0 means no quadratic extension
  bool parametric = false;

  static FieldCtx rational() { return {}; }
  static FieldCtx quadratic(std::int64_t d);
  FieldCtx with_param(bool p = true) const { return {disc, p}; }

  /// Smallest context holding both, or FieldMismatch.
  static FieldCtx join(const FieldCtx& x, const FieldCtx& y);

  bool operator==(const FieldCtx&) const = default;
  std::string to_string() const;
};

/// a + b sqrt(d). The discriminant is stored with the value; it is reset to
/// zero whenever b vanishes, so rationals embed into every extension.
class Quad {
 public:
  Quad() = default;
  Quad(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Quad(const Rat& a) : a_(a) { a_.canonicalize(); }  // NOLINT(google-explicit-constructor)
  /// Normalizes d to its squarefree part (sqrt 12 -> 2 sqrt 3).
  Quad(const Rat& a, const Rat& b, std::int64_t d);

  /// sqrt(n) for an integer n, reduced.
  static Quad sqrt(const Int& n);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  std::int64_t disc() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const { return sgn(b_) == 0 && a_ == 1; }
  bool is_rational() const { return sgn(b_) == 0; }

  Quad operator-() const;
  Quad& operator+=(const Quad& o);
  Quad& operator-=(const Quad& o);
  Quad& operator*=(const Quad& o);
  Quad& operator/=(const Quad& o);
  friend Quad operator+(Quad x, const Quad& y) { return x += y; }
  friend Quad operator-(Quad x, const Quad& y) { return x -= y; }
  friend Quad operator*(Quad x, const Quad& y) { return x *= y; }
  friend Quad operator/(Quad x, const Quad& y) { return x /= y; }

  Quad inverse() const;
  Quad conjugate() const { return Quad(a_, -b_, d_); }
  /// Norm a^2 - d b^2 (rational).
  Rat norm() const { return a_ * a_ - Rat(d_) * b_ * b_; }

  bool operator==(const Quad& o) const {
    return a_ == o.a_ && b_ == o.b_ && d_ == o.d_;
  }
  /// Total order on encodings, used for canonical sorting only.
  std::strong_ordering compare(const Quad& o) const;

  /// Real embedding with the positive square root; requires d >= 0.
  double to_double() const;

  std::string to_string() const;

 private:
  static std::int64_t common_disc(const Quad& x, const Quad& y);

  Rat a_{0};
  Rat b_{0};
  std::int64_t d_ = 0;
};

/// Univariate polynomial in t over Q(sqrt d), ascending coefficients,
/// no trailing zeros.
class Poly {
 public:
  Poly() = default;
  Poly(const Quad& c);  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Quad> coeffs);

  static Poly t() { return Poly(std::vector<Quad>{Quad(0), Quad(1)}); }
  static Poly monomial(const Quad& c, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Quad>& coeffs() const { return c_; }
  Quad coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Quad();
  }
  const Quad& leading() const;
  std::int64_t disc() const;
  bool is_rational() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly x, const Poly& y) { return x += y; }
  friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
  friend Poly operator*(const Poly& x, const Poly& y);
  Poly scaled(const Quad& c) const;

  /// Euclidean division; divisor must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
  Poly monic() const;
  static Poly gcd(Poly x, Poly y);
  Poly derivative() const;
  Poly squarefree_part() const;
  Quad eval(const Quad& x) const;
  Poly conjugate() const;

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  std::strong_ordering compare(const Poly& o) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Quad> c_;
};

/// Element of Q(sqrt d) or of Q(sqrt d)(t). Constants are always held in the
/// Quad alternative, so equal values have equal representations.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : v_(Quad(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rat& r) : v_(Quad(r)) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Quad& q) : v_(q) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Poly& p) : Scalar(p, Poly(Quad(1))) {}  // NOLINT(google-explicit-constructor)
  /// num / den reduced to lowest terms with a monic denominator.
  Scalar(const Poly& num, const Poly& den);

  static Scalar t() { return Scalar(Poly::t()); }

  bool is_parametric() const { return v_.index() == 1; }
  bool is_zero() const;
  bool is_one() const;
  /// Throws InvalidArgument for a non-constant rational function.
  const Quad& as_quad() const;
  Poly num() const;
  Poly den() const;
  std::int64_t disc() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  Scalar inverse() const;

  /// Substitutes t = value. Throws DivisionByZero if the denominator vanishes.
  Quad specialize(const Quad& value) const;

  bool operator==(const Scalar& o) const { return v_ == o.v_; }
  std::strong_ordering compare(const Scalar& o) const;

  std::string to_string() const;

 private:
  struct RatFn {
    Poly num;
    Poly den;
    bool operator==(const RatFn&) const = default;
  };
  std::variant<Quad, RatFn> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// a + b sqrt(d) -> a - b sqrt(d), coefficient-wise through rational
/// functions. The context must carry a quadratic discriminant.
Scalar conjugate(const Scalar& x, const FieldCtx& ctx);

/// True if every coefficient of x lives in ctx.
bool field_hosts(const FieldCtx& ctx, const Scalar& x);

/// A monic quadratic factor t^2 + p t + q of a rational polynomial, irreducible
/// over Q, with roots re +- coef * sqrt(disc).
struct QuadraticFactor {
  Poly factor;
  std::int64_t disc = 0;
  Rat re;
  Rat coef;
  int multiplicity = 1;

  Quad root(bool plus) const { return Quad(re, plus ? coef : Rat(-coef), disc); }
};

/// Factorization p = unit * prod (t - r)^m * prod quadratic^m * prod residual^m.
struct LowDegreeRoots {
  Rat unit;
  std::vector<std::pair<Rat, int>> rational;
  std::vector<QuadraticFactor> quadratic;
  std::vector<std::pair<Poly, int>> residual;

  Poly product() const;
};

/// Splits a nonzero rational polynomial into rational linear factors,
/// irreducible rational quadratics and an undecided residual.
LowDegreeRoots roots_low_degree(const Poly& p);

}  // namespace arrfree
