#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "arrfree/scalar.hpp"

namespace arrfree {

using Triple = std::array<Scalar, 3>;

Triple cross(const Triple& u, const Triple& v);
Scalar dot(const Triple& u, const Triple& v);
Scalar det3(const Triple& r0, const Triple& r1, const Triple& r2);

/// Projective triple scaled so that its first nonzero entry is 1.
/// Throws InvalidArgument for the zero triple.
Triple normalize_projective(const Triple& v);

std::strong_ordering compare_triples(const Triple& x, const Triple& y);

/// The linear form c0 x + c1 y + c2 z, normalized.
class Line {
 public:
  Line() = default;
  explicit Line(const Triple& coeffs) : c_(normalize_projective(coeffs)) {}
  Line(const Scalar& a, const Scalar& b, const Scalar& c) : Line(Triple{a, b, c}) {}

  const Triple& coeffs() const { return c_; }
  const Scalar& operator[](int i) const { return c_[i]; }

  bool operator==(const Line& o) const { return c_ == o.c_; }
  std::strong_ordering operator<=>(const Line& o) const { return compare_triples(c_, o.c_); }

  std::string to_string() const;

 private:
  Triple c_;
};

/// Homogeneous point, normalized like Line.
class Point {
 public:
  Point() = default;
  explicit Point(const Triple& coords) : p_(normalize_projective(coords)) {}
  Point(const Scalar& x, const Scalar& y, const Scalar& z) : Point(Triple{x, y, z}) {}

  const Triple& coords() const { return p_; }
  const Scalar& operator[](int i) const { return p_[i]; }

  bool operator==(const Point& o) const { return p_ == o.p_; }
  std::strong_ordering operator<=>(const Point& o) const { return compare_triples(p_, o.p_); }

  std::string to_string() const;

 private:
  Triple p_;
};

/// Intersection of two distinct lines.
Point meet(const Line& l1, const Line& l2);
/// Line through two distinct points.
Line join(const Point& p1, const Point& p2);
bool incident(const Point& p, const Line& l);
/// Value of the line's form at the point's normalized coordinates.
Scalar evaluate(const Line& l, const Point& p);

/// Ordered, duplicate-free list of lines over one field.
class Arrangement {
 public:
  Arrangement() = default;
  /// Throws InvalidArgument on duplicate lines, FieldMismatch when a
  /// coefficient lies outside ctx.
  Arrangement(FieldCtx ctx, std::vector<Line> lines);

  const FieldCtx& ctx() const { return ctx_; }
  const std::vector<Line>& lines() const { return lines_; }
  const Line& operator[](int i) const { return lines_[i]; }
  int size() const { return static_cast<int>(lines_.size()); }
  bool empty() const { return lines_.empty(); }

  /// Index of the line, or -1.
  int find(const Line& l) const;
  bool contains(const Line& l) const { return find(l) >= 0; }

  Arrangement without(int index) const;
  Arrangement with(const Line& l) const;
  /// Keeps the lines whose indices are listed, in that order.
  Arrangement subset(const std::vector<int>& indices) const;

  /// Sorted normalized lines; equal iff the arrangements are equal as sets.
  std::string canonical_key() const;

  /// Applies the Galois conjugation of ctx to every coefficient.
  Arrangement conjugate() const;

 private:
  FieldCtx ctx_;
  std::vector<Line> lines_;
};

/// Homogenizes affine forms a x + b y + c with z and appends z = 0.
Arrangement cone(const std::vector<Triple>& affine, const FieldCtx& ctx);

/// Context inferred from the coefficients (smallest field holding them).
FieldCtx infer_ctx(const std::vector<Line>& lines);

}  // namespace arrfree
