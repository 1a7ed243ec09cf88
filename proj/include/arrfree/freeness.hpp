#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arrfree/lattice.hpp"

namespace arrfree {

/// Binary linear form a u + b v, normalized so the first nonzero entry is 1.
struct BinaryForm {
  Scalar a;
  Scalar b;

  static BinaryForm make(const Scalar& a, const Scalar& b);
  bool operator==(const BinaryForm&) const = default;
  std::string to_string() const;
};

/// Rank-2 multiarrangement: pairwise non-proportional forms with multiplicities.
struct MultiArr2 {
  FieldCtx ctx;
  std::vector<BinaryForm> forms;
  std::vector<int> mult;

  int total() const;
};

/// Homogeneous binary polynomial; coeffs[k] multiplies u^(degree-k) v^k.
struct BinaryPoly {
  int degree = 0;
  std::vector<Scalar> coeffs;

  static BinaryPoly zero(int degree) { return {degree, std::vector<Scalar>(degree + 1)}; }
  bool is_zero() const;
  BinaryPoly operator*(const BinaryPoly& o) const;
  BinaryPoly operator-(const BinaryPoly& o) const;
};

/// theta = f_u d/du + f_v d/dv with homogeneous components of one degree.
struct Derivation2 {
  BinaryPoly fu;
  BinaryPoly fv;

  int degree() const { return fu.degree; }
  bool is_zero() const { return fu.is_zero() && fv.is_zero(); }
};

struct ExponentPair {
  int e1 = 0;
  int e2 = 0;
  bool operator==(const ExponentPair&) const = default;
};

struct MultiExponents {
  ExponentPair exponents;
  /// Nonzero derivation of degree e1 in D(M).
  Derivation2 witness;
};

/// Ziegler restriction onto line h, in the chart (u, v) fixed by the line's
/// normalized coefficients.
MultiArr2 ziegler_restriction(const Arrangement& a, const LatticeData& l, int h);
MultiArr2 ziegler_restriction(const Arrangement& a, int h);

MultiExponents multi_exponents_with_witness(const MultiArr2& m);
ExponentPair multi_exponents(const MultiArr2& m);

/// True if theta(alpha) is divisible by alpha^m for every form of m.
bool in_derivation_module(const MultiArr2& m, const Derivation2& theta);

/// Saito's criterion in rank two.
bool saito_verify_rank2(const MultiArr2& m, const Derivation2& t1, const Derivation2& t2);

enum class Verdict { Free, NonFree };
enum class Route { ChiGate, ABT, Yoshinaga };

std::string to_string(Verdict v);
std::string to_string(Route r);

struct FreenessResult {
  Verdict verdict = Verdict::NonFree;
  Route route = Route::ChiGate;
  CharPoly chi;
  std::optional<Exponents> exponents;
  // ABT witness
  int pivot = -1;
  int pivot_n = 0;
  // Yoshinaga witness
  int restriction_line = -1;
  std::optional<ExponentPair> restriction_exponents;
  std::optional<Derivation2> witness;
  /// d1 d2 = ab although chi has no integral split.
  bool anomaly = false;

  bool is_free() const { return verdict == Verdict::Free; }
};

/// Addition-deletion dichotomy; nullopt when no line has n_H > min(a, b)
/// or chi has no integral split.
std::optional<FreenessResult> abt_test(const Arrangement& a, const LatticeData& l, const CharPoly& c);

FreenessResult yoshinaga_test(const Arrangement& a, const LatticeData& l, const CharPoly& c, int h);
FreenessResult yoshinaga_test(const Arrangement& a, const CharPoly& c, int h);

/// Line with maximal n_H, ties broken by canonical line order.
int default_restriction_line(const Arrangement& a, const LatticeData& l);

/// chi gate, then ABT if applicable, then Yoshinaga on the default line.
FreenessResult is_free(const Arrangement& a, const LatticeData& l);
FreenessResult is_free(const Arrangement& a);

/// max_H n_H <= min(a, b). Throws InvalidArgument for a non-free result.
bool s_membership(const LatticeData& l, const FreenessResult& r);

}  // namespace arrfree
