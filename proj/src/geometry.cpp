#include "arrfree/geometry.hpp"

#include <algorithm>
#include <set>

namespace arrfree {

Triple cross(const Triple& u, const Triple& v) {
  return Triple{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

Scalar dot(const Triple& u, const Triple& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

Scalar det3(const Triple& r0, const Triple& r1, const Triple& r2) { return dot(r0, cross(r1, r2)); }

Triple normalize_projective(const Triple& v) {
  for (int i = 0; i < 3; ++i) {
    if (v[i].is_zero()) continue;
    if (v[i].is_one()) return v;
    Scalar inv = v[i].inverse();
    Triple r;
    for (int j = 0; j < 3; ++j) r[j] = j < i ? Scalar() : (j == i ? Scalar(1) : v[j] * inv);
    return r;
  }
  fail(ErrorKind::InvalidArgument, "zero projective triple");
}

std::strong_ordering compare_triples(const Triple& x, const Triple& y) {
  for (int i = 0; i < 3; ++i) {
    if (auto c = x[i].compare(y[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

std::string triple_string(const Triple& t, const char* open, const char* close) {
  return open + t[0].to_string() + ", " + t[1].to_string() + ", " + t[2].to_string() + close;
}

}  // namespace

std::string Line::to_string() const { return triple_string(c_, "[", "]"); }
std::string Point::to_string() const { return triple_string(p_, "(", ")"); }

Point meet(const Line& l1, const Line& l2) {
  if (l1 == l2) fail(ErrorKind::InvalidArgument, "meet of equal lines " + l1.to_string());
  return Point(cross(l1.coeffs(), l2.coeffs()));
}

Line join(const Point& p1, const Point& p2) {
  if (p1 == p2) fail(ErrorKind::InvalidArgument, "join of equal points " + p1.to_string());
  return Line(cross(p1.coords(), p2.coords()));
}

Scalar evaluate(const Line& l, const Point& p) { return dot(l.coeffs(), p.coords()); }

bool incident(const Point& p, const Line& l) { return evaluate(l, p).is_zero(); }

Arrangement::Arrangement(FieldCtx ctx, std::vector<Line> lines) : ctx_(ctx), lines_(std::move(lines)) {
  std::set<Line> seen;
  for (const auto& l : lines_) {
    for (const auto& c : l.coeffs()) {
      if (!field_hosts(ctx_, c)) {
        fail(ErrorKind::FieldMismatch, "coefficient " + c.to_string() + " is not in " + ctx_.to_string());
      }
    }
    if (!seen.insert(l).second) fail(ErrorKind::InvalidArgument, "duplicate line " + l.to_string());
  }
}

int Arrangement::find(const Line& l) const {
  auto it = std::find(lines_.begin(), lines_.end(), l);
  return it == lines_.end() ? -1 : static_cast<int>(it - lines_.begin());
}

Arrangement Arrangement::without(int index) const {
  if (index < 0 || index >= size()) fail(ErrorKind::InvalidArgument, "line index out of range");
  Arrangement r = *this;
  r.lines_.erase(r.lines_.begin() + index);
  return r;
}

Arrangement Arrangement::with(const Line& l) const {
  if (contains(l)) fail(ErrorKind::InvalidArgument, "line already present: " + l.to_string());
  std::vector<Line> ls = lines_;
  ls.push_back(l);
  return Arrangement(FieldCtx::join(ctx_, infer_ctx({l})), std::move(ls));
}

Arrangement Arrangement::subset(const std::vector<int>& indices) const {
  Arrangement r;
  r.ctx_ = ctx_;
  r.lines_.reserve(indices.size());
  for (int i : indices) {
    if (i < 0 || i >= size()) fail(ErrorKind::InvalidArgument, "line index out of range");
    r.lines_.push_back(lines_[i]);
  }
  return r;
}

std::string Arrangement::canonical_key() const {
  std::vector<Line> sorted = lines_;
  std::sort(sorted.begin(), sorted.end());
  std::string key;
  for (const auto& l : sorted) key += l.to_string() + ";";
  return key;
}

Arrangement Arrangement::conjugate() const {
  std::vector<Line> ls;
  ls.reserve(lines_.size());
  for (const auto& l : lines_) {
    ls.emplace_back(arrfree::conjugate(l[0], ctx_), arrfree::conjugate(l[1], ctx_),
                    arrfree::conjugate(l[2], ctx_));
  }
  return Arrangement(ctx_, std::move(ls));
}

Arrangement cone(const std::vector<Triple>& affine, const FieldCtx& ctx) {
  std::vector<Line> ls;
  ls.reserve(affine.size() + 1);
  for (const auto& f : affine) {
    if (f[0].is_zero() && f[1].is_zero()) {
      fail(ErrorKind::InvalidArgument, "affine form without a linear part: " + f[2].to_string());
    }
    ls.emplace_back(f);
  }
  ls.emplace_back(Scalar(0), Scalar(0), Scalar(1));
  return Arrangement(ctx, std::move(ls));
}

FieldCtx infer_ctx(const std::vector<Line>& lines) {
  FieldCtx ctx;
  for (const auto& l : lines) {
    for (const auto& c : l.coeffs()) ctx = FieldCtx::join(ctx, FieldCtx{c.disc(), c.is_parametric()});
  }
  return ctx;
}

}  // namespace arrfree
