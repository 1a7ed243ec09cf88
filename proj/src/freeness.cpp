#include "arrfree/freeness.hpp"

#include <algorithm>

#include "arrfree/linalg.hpp"

namespace arrfree {

BinaryForm BinaryForm::make(const Scalar& a, const Scalar& b) {
  if (a.is_zero() && b.is_zero()) fail(ErrorKind::InvalidArgument, "zero binary form");
  if (a.is_zero()) return {Scalar(0), Scalar(1)};
  return {Scalar(1), b / a};
}

std::string BinaryForm::to_string() const {
  if (a.is_zero()) return "v";
  if (b.is_zero()) return "u";
  return "u+(" + b.to_string() + ")v";
}

int MultiArr2::total() const {
  int s = 0;
  for (int m : mult) s += m;
  return s;
}

bool BinaryPoly::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Scalar& s) { return s.is_zero(); });
}

BinaryPoly BinaryPoly::operator*(const BinaryPoly& o) const {
  BinaryPoly r = zero(degree + o.degree);
  for (int i = 0; i <= degree; ++i) {
    if (coeffs[i].is_zero()) continue;
    for (int j = 0; j <= o.degree; ++j) {
      if (!o.coeffs[j].is_zero()) r.coeffs[i + j] += coeffs[i] * o.coeffs[j];
    }
  }
  return r;
}

BinaryPoly BinaryPoly::operator-(const BinaryPoly& o) const {
  if (degree != o.degree) fail(ErrorKind::InvalidArgument, "degree mismatch in binary polynomial");
  BinaryPoly r = *this;
  for (int i = 0; i <= degree; ++i) r.coeffs[i] -= o.coeffs[i];
  return r;
}

namespace {

Scalar binomial(int n, int k) {
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return Scalar(Rat(r));
}

// Linear functionals w (over the coefficients h_k of a degree-d binary
// polynomial h) whose joint vanishing is equivalent to alpha^m | h.
std::vector<std::vector<Scalar>> divisibility_weights(const BinaryForm& f, int m, int d) {
  std::vector<std::vector<Scalar>> out;
  if (f.b.is_zero()) {
    // alpha = u: the monomials u^(d-k) v^k with d - k < m must vanish.
    for (int k = std::max(0, d - m + 1); k <= d; ++k) {
      std::vector<Scalar> w(d + 1);
      w[k] = Scalar(1);
      out.push_back(std::move(w));
    }
    return out;
  }
  // Dehomogenize at u = 1: h(1, v) must vanish to order m at v0 = -a/b.
  Scalar v0 = -f.a / f.b;
  std::vector<Scalar> pw(d + 1);
  pw[0] = Scalar(1);
  for (int i = 1; i <= d; ++i) pw[i] = pw[i - 1] * v0;
  for (int j = 0; j <= std::min(m - 1, d); ++j) {
    std::vector<Scalar> w(d + 1);
    for (int k = j; k <= d; ++k) w[k] = binomial(k, j) * pw[k - j];
    out.push_back(std::move(w));
  }
  return out;
}

// theta(alpha) = a f_u + b f_v
BinaryPoly apply_to_form(const Derivation2& t, const BinaryForm& f) {
  BinaryPoly h = BinaryPoly::zero(t.degree());
  for (int k = 0; k <= t.degree(); ++k) h.coeffs[k] = f.a * t.fu.coeffs[k] + f.b * t.fv.coeffs[k];
  return h;
}

BinaryPoly form_poly(const BinaryForm& f) { return BinaryPoly{1, {f.a, f.b}}; }

}  // namespace

MultiArr2 ziegler_restriction(const Arrangement& a, const LatticeData& l, int h) {
  if (h < 0 || h >= a.size()) fail(ErrorKind::InvalidArgument, "restriction line index out of range");
  const Triple& c = a[h].coeffs();
  // Coordinates (u, v) on the line: the two entries of the normalized point
  // that remain free once the line equation is imposed.
  int iu = 1;
  int iv = 2;
  if (c[0].is_zero()) {
    iu = 0;
    iv = c[1].is_zero() ? 1 : 2;
  }
  MultiArr2 m;
  m.ctx = a.ctx();
  for (const auto& p : l.points) {
    if (!p.contains(h)) continue;
    const Scalar& u0 = p.point[iu];
    const Scalar& v0 = p.point[iv];
    m.forms.push_back(BinaryForm::make(v0, -u0));
    m.mult.push_back(p.mu());
  }
  return m;
}

MultiArr2 ziegler_restriction(const Arrangement& a, int h) {
  return ziegler_restriction(a, compute_lattice(a), h);
}

MultiExponents multi_exponents_with_witness(const MultiArr2& m) {
  const int total = m.total();
  for (int d = 0; d <= total / 2; ++d) {
    const int cols = 2 * (d + 1);
    Matrix rows;
    for (std::size_t i = 0; i < m.forms.size(); ++i) {
      const auto& f = m.forms[i];
      for (const auto& w : divisibility_weights(f, m.mult[i], d)) {
        std::vector<Scalar> row(cols);
        for (int k = 0; k <= d; ++k) {
          if (w[k].is_zero()) continue;
          row[k] = f.a * w[k];
          row[d + 1 + k] = f.b * w[k];
        }
        rows.push_back(std::move(row));
      }
    }
    auto ns = nullspace(std::move(rows), cols);
    if (ns.empty()) continue;
    Derivation2 theta{BinaryPoly::zero(d), BinaryPoly::zero(d)};
    for (int k = 0; k <= d; ++k) {
      theta.fu.coeffs[k] = ns[0][k];
      theta.fv.coeffs[k] = ns[0][d + 1 + k];
    }
    return {{d, total - d}, std::move(theta)};
  }
  fail(ErrorKind::InvalidArgument, "no derivation found up to half the total multiplicity");
}

ExponentPair multi_exponents(const MultiArr2& m) { return multi_exponents_with_witness(m).exponents; }

bool in_derivation_module(const MultiArr2& m, const Derivation2& theta) {
  if (theta.fu.degree != theta.fv.degree) return false;
  const int d = theta.degree();
  for (std::size_t i = 0; i < m.forms.size(); ++i) {
    BinaryPoly h = apply_to_form(theta, m.forms[i]);
    for (const auto& w : divisibility_weights(m.forms[i], m.mult[i], d)) {
      Scalar s;
      for (int k = 0; k <= d; ++k) {
        if (!w[k].is_zero()) s += w[k] * h.coeffs[k];
      }
      if (!s.is_zero()) return false;
    }
  }
  return true;
}

bool saito_verify_rank2(const MultiArr2& m, const Derivation2& t1, const Derivation2& t2) {
  if (t1.degree() + t2.degree() != m.total()) return false;
  if (!in_derivation_module(m, t1) || !in_derivation_module(m, t2)) return false;
  BinaryPoly det = t1.fu * t2.fv - t1.fv * t2.fu;
  BinaryPoly prod{0, {Scalar(1)}};
  for (std::size_t i = 0; i < m.forms.size(); ++i) {
    for (int j = 0; j < m.mult[i]; ++j) prod = prod * form_poly(m.forms[i]);
  }
  if (det.degree != prod.degree) return false;
  int k = 0;
  while (k <= prod.degree && prod.coeffs[k].is_zero()) ++k;
  if (k > prod.degree || det.coeffs[k].is_zero()) return false;
  Scalar c = det.coeffs[k] / prod.coeffs[k];
  for (int i = 0; i <= prod.degree; ++i) {
    if (!(det.coeffs[i] == c * prod.coeffs[i])) return false;
  }
  return true;
}

std::string to_string(Verdict v) { return v == Verdict::Free ? "free" : "non-free"; }

std::string to_string(Route r) {
  switch (r) {
    case Route::ChiGate:
      return "chi-gate";
    case Route::ABT:
      return "abt";
    case Route::Yoshinaga:
      return "yoshinaga";
  }
  return "?";
}

std::optional<FreenessResult> abt_test(const Arrangement& a, const LatticeData& l, const CharPoly& c) {
  if (!c.factored || c.factored->e0 == 0) return std::nullopt;
  const int lo = c.factored->a;
  const int hi = c.factored->b;
  int pivot = -1;
  for (int h = 0; h < a.size(); ++h) {
    if (l.lines[h].n > lo && (pivot < 0 || l.lines[h].n > l.lines[pivot].n)) pivot = h;
  }
  if (pivot < 0) return std::nullopt;
  FreenessResult r;
  r.route = Route::ABT;
  r.chi = c;
  r.pivot = pivot;
  r.pivot_n = l.lines[pivot].n;
  if (r.pivot_n == lo + 1 || r.pivot_n == hi + 1) {
    r.verdict = Verdict::Free;
    r.exponents = c.factored;
  }
  return r;
}

FreenessResult yoshinaga_test(const Arrangement& a, const LatticeData& l, const CharPoly& c, int h) {
  if (h < 0 || h >= a.size()) fail(ErrorKind::InvalidArgument, "restriction line index out of range");
  MultiExponents me = multi_exponents_with_witness(ziegler_restriction(a, l, h));
  FreenessResult r;
  r.route = Route::Yoshinaga;
  r.chi = c;
  r.restriction_line = h;
  r.restriction_exponents = me.exponents;
  r.witness = std::move(me.witness);
  const std::int64_t prod = static_cast<std::int64_t>(me.exponents.e1) * me.exponents.e2;
  if (prod == c.root_product) {
    if (c.factored) {
      r.verdict = Verdict::Free;
      r.exponents = c.factored;
    } else {
      r.anomaly = true;
    }
  }
  return r;
}

FreenessResult yoshinaga_test(const Arrangement& a, const CharPoly& c, int h) {
  return yoshinaga_test(a, compute_lattice(a), c, h);
}

int default_restriction_line(const Arrangement& a, const LatticeData& l) {
  int best = -1;
  for (int h = 0; h < a.size(); ++h) {
    if (best < 0 || l.lines[h].n > l.lines[best].n ||
        (l.lines[h].n == l.lines[best].n && a[h] < a[best])) {
      best = h;
    }
  }
  return best;
}

FreenessResult is_free(const Arrangement& a, const LatticeData& l) {
  CharPoly c = char_poly(l);
  if (!c.factored) {
    FreenessResult r;
    r.chi = c;
    return r;
  }
  if (a.empty()) {
    FreenessResult r;
    r.verdict = Verdict::Free;
    r.chi = c;
    r.exponents = c.factored;
    return r;
  }
  if (auto r = abt_test(a, l, c)) return *r;
  return yoshinaga_test(a, l, c, default_restriction_line(a, l));
}

FreenessResult is_free(const Arrangement& a) { return is_free(a, compute_lattice(a)); }

bool s_membership(const LatticeData& l, const FreenessResult& r) {
  if (!r.is_free() || !r.exponents) fail(ErrorKind::InvalidArgument, "S membership needs a free arrangement");
  return l.max_n() <= std::min(r.exponents->a, r.exponents->b);
}

}  // namespace arrfree
