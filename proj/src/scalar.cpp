#include "arrfree/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <sstream>

namespace arrfree {

Rat parse_rat(const std::string& text) {
  Rat r;
  if (text.empty() || r.set_str(text, 10) != 0) {
    fail(ErrorKind::Parse, "not a rational number: '" + text + "'");
  }
  if (r.get_den() == 0) fail(ErrorKind::DivisionByZero, "zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) { return r.get_str(10); }

std::int64_t squarefree_decompose(const Int& n, Int* k) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "squarefree part of zero");
  Int m = abs(n);
  if (m > Int("1000000000000000000")) {
    fail(ErrorKind::InvalidArgument, "integer too large to factor: " + n.get_str());
  }
  std::uint64_t rest = m.get_ui();
  if (!m.fits_ulong_p()) fail(ErrorKind::InvalidArgument, "integer too large to factor");
  std::uint64_t square_root = 1;
  std::uint64_t free = 1;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) square_root *= p;
    if (e % 2 == 1) free *= p;
  }
  free *= rest;
  if (k != nullptr) *k = Int(static_cast<unsigned long>(square_root));
  auto d = static_cast<std::int64_t>(free);
  return n < 0 ? -d : d;
}

FieldCtx FieldCtx::quadratic(std::int64_t d) {
  Int k;
  std::int64_t sf = squarefree_decompose(Int(static_cast<long>(d)), &k);
  if (sf == 1) fail(ErrorKind::InvalidArgument, "sqrt(" + std::to_string(d) + ") is rational");
  return FieldCtx{sf, false};
}

FieldCtx FieldCtx::join(const FieldCtx& x, const FieldCtx& y) {
  if (x.disc != 0 && y.disc != 0 && x.disc != y.disc) {
    fail(ErrorKind::FieldMismatch, "cannot combine Q(sqrt " + std::to_string(x.disc) +
                                       ") with Q(sqrt " + std::to_string(y.disc) + ")");
  }
  return FieldCtx{x.disc != 0 ? x.disc : y.disc, x.parametric || y.parametric};
}

std::string FieldCtx::to_string() const {
  std::string s = disc == 0 ? "Q" : "Q(sqrt(" + std::to_string(disc) + "))";
  return parametric ? s + "(t)" : s;
}

// ---------------------------------------------------------------- Quad

Quad::Quad(const Rat& a, const Rat& b, std::int64_t d) : a_(a), b_(b), d_(d) {
  a_.canonicalize();
  b_.canonicalize();
  if (sgn(b_) == 0 || d_ == 0) {
    b_ = 0;
    d_ = 0;
    return;
  }
  Int k;
  d_ = squarefree_decompose(Int(static_cast<long>(d)), &k);
  b_ *= k;
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
    d_ = 0;
  }
}

Quad Quad::sqrt(const Int& n) {
  if (n == 0) return Quad();
  Int k;
  std::int64_t d = squarefree_decompose(n, &k);
  return Quad(Rat(0), Rat(k), d);
}

std::int64_t Quad::common_disc(const Quad& x, const Quad& y) {
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
  fail(ErrorKind::FieldMismatch, "mixing sqrt(" + std::to_string(x.d_) + ") and sqrt(" +
                                     std::to_string(y.d_) + ")");
}

Quad Quad::operator-() const {
  Quad r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Quad& Quad::operator+=(const Quad& o) {
  std::int64_t d = common_disc(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  d_ = sgn(b_) == 0 ? 0 : d;
  return *this;
}

Quad& Quad::operator-=(const Quad& o) {
  std::int64_t d = common_disc(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  d_ = sgn(b_) == 0 ? 0 : d;
  return *this;
}

Quad& Quad::operator*=(const Quad& o) {
  std::int64_t d = common_disc(*this, o);
  if (d == 0) {
    a_ *= o.a_;
    return *this;
  }
  Rat a = a_ * o.a_ + Rat(d) * b_ * o.b_;
  Rat b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = sgn(b_) == 0 ? 0 : d;
  return *this;
}

Quad Quad::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "division by zero");
  if (d_ == 0) return Quad(Rat(1) / a_);
  Rat n = norm();
  return Quad(a_ / n, -b_ / n, d_);
}

Quad& Quad::operator/=(const Quad& o) {
  if (o.d_ == 0) {
    if (sgn(o.a_) == 0) fail(ErrorKind::DivisionByZero, "division by zero");
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

std::strong_ordering Quad::compare(const Quad& o) const {
  if (int c = cmp(a_, o.a_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (int c = cmp(b_, o.b_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return d_ <=> o.d_;
}

double Quad::to_double() const {
  if (d_ < 0) fail(ErrorKind::NotDrawable, "no real embedding for sqrt(" + std::to_string(d_) + ")");
  return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

std::string Quad::to_string() const {
  if (sgn(b_) == 0) return rat_to_string(a_);
  std::string root = "sqrt(" + std::to_string(d_) + ")";
  std::string irr;
  if (b_ == 1) {
    irr = root;
  } else if (b_ == -1) {
    irr = "-" + root;
  } else {
    irr = rat_to_string(b_) + "*" + root;
  }
  if (sgn(a_) == 0) return irr;
  return rat_to_string(a_) + (irr[0] == '-' ? "" : "+") + irr;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(const Quad& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<Quad> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Quad& c, int degree) {
  if (c.is_zero()) return Poly();
  std::vector<Quad> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Quad& Poly::leading() const {
  if (c_.empty()) fail(ErrorKind::InvalidArgument, "leading coefficient of zero polynomial");
  return c_.back();
}

std::int64_t Poly::disc() const {
  std::int64_t d = 0;
  for (const auto& c : c_) {
    if (c.disc() == 0) continue;
    if (d != 0 && d != c.disc()) fail(ErrorKind::FieldMismatch, "polynomial mixes quadratic fields");
    d = c.disc();
  }
  return d;
}

bool Poly::is_rational() const {
  return std::all_of(c_.begin(), c_.end(), [](const Quad& q) { return q.is_rational(); });
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& x, const Poly& y) {
  if (x.is_zero() || y.is_zero()) return Poly();
  std::vector<Quad> r(x.c_.size() + y.c_.size() - 1);
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j) r[i + j] += x.c_[i] * y.c_[j];
  }
  return Poly(std::move(r));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::scaled(const Quad& c) const {
  if (c.is_zero()) return Poly();
  Poly r = *this;
  for (auto& x : r.c_) x *= c;
  r.trim();
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (num.degree() < den.degree()) return {Poly(), num};
  Quad inv = den.leading().inverse();
  std::vector<Quad> rem = num.c_;
  std::vector<Quad> quo(num.c_.size() - den.c_.size() + 1);
  const int dd = den.degree();
  for (int i = num.degree(); i >= dd; --i) {
    if (rem[i].is_zero()) continue;
    Quad q = rem[i] * inv;
    quo[i - dd] = q;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * den.c_[j];
  }
  rem.resize(dd);
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

Poly Poly::gcd(Poly x, Poly y) {
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Quad> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Quad(static_cast<long>(i));
  return Poly(std::move(r));
}

Poly Poly::squarefree_part() const {
  if (degree() <= 0) return *this;
  Poly g = gcd(*this, derivative());
  return divmod(*this, g).first;
}

Quad Poly::eval(const Quad& x) const {
  Quad acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::conjugate() const {
  Poly r = *this;
  for (auto& c : r.c_) c = c.conjugate();
  return r;
}

std::strong_ordering Poly::compare(const Poly& o) const {
  if (auto c = degree() <=> o.degree(); c != 0) return c;
  for (int i = degree(); i >= 0; --i) {
    if (auto c = c_[i].compare(o.c_[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Poly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Quad& c = c_[i];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool compound = !c.is_rational() && sgn(c.a()) != 0;
    if (compound) cs = "(" + cs + ")";
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    std::string term;
    if (i == 0) {
      term = cs;
    } else if (c.is_one()) {
      term = mono;
    } else if (c == Quad(-1)) {
      term = "-" + mono;
    } else {
      term = cs + "*" + mono;
    }
    if (!first && term[0] != '-') os << "+";
    os << term;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(const Poly& num, const Poly& den) {
  if (den.is_zero()) fail(ErrorKind::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    v_ = Quad();
    return;
  }
  Poly n = num;
  Poly d = den;
  if (d.degree() > 0) {
    Poly g = Poly::gcd(n, d);
    if (g.degree() > 0) {
      n = Poly::divmod(n, g).first;
      d = Poly::divmod(d, g).first;
    }
  }
  Quad lc_inv = d.leading().inverse();
  n = n.scaled(lc_inv);
  d = d.scaled(lc_inv);
  if (d.degree() == 0 && n.degree() == 0) {
    v_ = n.leading();
  } else {
    v_ = RatFn{std::move(n), std::move(d)};
  }
}

bool Scalar::is_zero() const {
  const Quad* q = std::get_if<Quad>(&v_);
  return q != nullptr && q->is_zero();
}

bool Scalar::is_one() const {
  const Quad* q = std::get_if<Quad>(&v_);
  return q != nullptr && q->is_one();
}

const Quad& Scalar::as_quad() const {
  const Quad* q = std::get_if<Quad>(&v_);
  if (q == nullptr) fail(ErrorKind::InvalidArgument, "expected a constant, got " + to_string());
  return *q;
}

Poly Scalar::num() const {
  if (const Quad* q = std::get_if<Quad>(&v_)) return Poly(*q);
  return std::get<RatFn>(v_).num;
}

Poly Scalar::den() const {
  if (std::holds_alternative<Quad>(v_)) return Poly(Quad(1));
  return std::get<RatFn>(v_).den;
}

std::int64_t Scalar::disc() const {
  if (const Quad* q = std::get_if<Quad>(&v_)) return q->disc();
  const auto& f = std::get<RatFn>(v_);
  std::int64_t a = f.num.disc();
  std::int64_t b = f.den.disc();
  return FieldCtx::join({a, false}, {b, false}).disc;
}

Scalar Scalar::operator-() const {
  if (const Quad* q = std::get_if<Quad>(&v_)) return Scalar(-*q);
  Scalar r = *this;
  auto& f = std::get<RatFn>(r.v_);
  f.num = -f.num;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (!is_parametric() && !o.is_parametric()) {
    std::get<Quad>(v_) += std::get<Quad>(o.v_);
    return *this;
  }
  Poly d1 = den();
  Poly d2 = o.den();
  if (d1 == d2) return *this = Scalar(num() + o.num(), d1);
  return *this = Scalar(num() * d2 + o.num() * d1, d1 * d2);
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (!is_parametric() && !o.is_parametric()) {
    std::get<Quad>(v_) *= std::get<Quad>(o.v_);
    return *this;
  }
  return *this = Scalar(num() * o.num(), den() * o.den());
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "division by zero");
  if (const Quad* q = std::get_if<Quad>(&v_)) return Scalar(q->inverse());
  return Scalar(den(), num());
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (!is_parametric() && !o.is_parametric()) {
    std::get<Quad>(v_) /= std::get<Quad>(o.v_);
    return *this;
  }
  return *this *= o.inverse();
}

Quad Scalar::specialize(const Quad& value) const {
  if (const Quad* q = std::get_if<Quad>(&v_)) return *q;
  const auto& f = std::get<RatFn>(v_);
  Quad d = f.den.eval(value);
  if (d.is_zero()) {
    fail(ErrorKind::DivisionByZero, "denominator " + f.den.to_string() + " vanishes at t=" + value.to_string());
  }
  return f.num.eval(value) / d;
}

std::strong_ordering Scalar::compare(const Scalar& o) const {
  if (auto c = v_.index() <=> o.v_.index(); c != 0) return c;
  if (const Quad* q = std::get_if<Quad>(&v_)) return q->compare(std::get<Quad>(o.v_));
  const auto& f = std::get<RatFn>(v_);
  const auto& g = std::get<RatFn>(o.v_);
  if (auto c = f.num.compare(g.num); c != 0) return c;
  return f.den.compare(g.den);
}

std::string Scalar::to_string() const {
  if (const Quad* q = std::get_if<Quad>(&v_)) return q->to_string();
  const auto& f = std::get<RatFn>(v_);
  if (f.den.degree() == 0) return f.num.to_string();
  return "(" + f.num.to_string() + ")/(" + f.den.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar conjugate(const Scalar& x, const FieldCtx& ctx) {
  if (ctx.disc == 0) fail(ErrorKind::InvalidArgument, "conjugation needs a quadratic field, got " + ctx.to_string());
  if (!field_hosts(ctx, x)) fail(ErrorKind::FieldMismatch, x.to_string() + " is not in " + ctx.to_string());
  if (!x.is_parametric()) return Scalar(x.as_quad().conjugate());
  return Scalar(x.num().conjugate(), x.den().conjugate());
}

bool field_hosts(const FieldCtx& ctx, const Scalar& x) {
  std::int64_t d = x.disc();
  if (d != 0 && d != ctx.disc) return false;
  return ctx.parametric || !x.is_parametric();
}

// ---------------------------------------------------------------- roots

namespace {

using Complex = std::complex<long double>;

Rat rat_coeff(const Poly& p, int i) {
  Quad c = p.coeff(i);
  return c.a();
}

// Multiplies by the lcm of denominators and divides by the content.
std::vector<Int> primitive_integer(const Poly& p) {
  Int l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, c.a().get_den());
  std::vector<Int> r;
  Int g = 0;
  for (const auto& c : p.coeffs()) {
    Rat v = c.a() * Rat(l);
    r.push_back(v.get_num());
    g = gcd(g, v.get_num());
  }
  if (g != 0) {
    for (auto& x : r) x /= g;
  }
  return r;
}

std::vector<Int> divisors(const Int& n) {
  std::vector<Int> small;
  std::vector<Int> large;
  Int m = abs(n);
  for (Int d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      small.push_back(d);
      if (d * d != m) large.push_back(m / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Continued-fraction reconstruction with bounded denominator.
std::optional<Rat> rational_near(long double x, long double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  long double v = x;
  Int h0 = 1, h1 = 0, k0 = 0, k1 = 1;
  for (int iter = 0; iter < 40; ++iter) {
    long double a = std::floor(v);
    if (std::fabs(a) > 1e15L) return std::nullopt;
    Int ai(static_cast<double>(a));
    Int h = ai * h0 + h1;
    Int k = ai * k0 + k1;
    h1 = h0;
    h0 = h;
    k1 = k0;
    k0 = k;
    if (k0 > Int(100000000)) return std::nullopt;
    Rat r(h0, k0);
    r.canonicalize();
    if (std::fabs(static_cast<long double>(r.get_d()) - x) <= tol) return r;
    long double frac = v - a;
    if (frac == 0) return r;
    v = 1 / frac;
  }
  return std::nullopt;
}

std::vector<Complex> numeric_roots(const Poly& monic_poly) {
  const int n = monic_poly.degree();
  std::vector<Complex> coeff(n + 1);
  for (int i = 0; i <= n; ++i) coeff[i] = static_cast<long double>(rat_coeff(monic_poly, i).get_d());
  auto eval = [&](Complex z) {
    Complex acc = 0;
    for (int i = n; i >= 0; --i) acc = acc * z + coeff[i];
    return acc;
  };
  std::vector<Complex> z(n);
  Complex seed(0.4L, 0.9L);
  for (int i = 0; i < n; ++i) z[i] = std::pow(seed, i);
  for (int iter = 0; iter < 2000; ++iter) {
    long double delta = 0;
    for (int i = 0; i < n; ++i) {
      Complex den = 1;
      for (int j = 0; j < n; ++j) {
        if (j != i) den *= z[i] - z[j];
      }
      Complex step = eval(z[i]) / den;
      z[i] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-17L) break;
  }
  return z;
}

QuadraticFactor make_quadratic(const Poly& monic_quadratic, int multiplicity) {
  Rat p = rat_coeff(monic_quadratic, 1);
  Rat q = rat_coeff(monic_quadratic, 0);
  Rat re = -p / 2;
  Rat disc = p * p / 4 - q;
  Int nd = disc.get_num() * disc.get_den();
  Int k;
  std::int64_t d = squarefree_decompose(nd, &k);
  QuadraticFactor f;
  f.factor = monic_quadratic;
  f.disc = d;
  f.re = re;
  f.coef = Rat(k, disc.get_den());
  f.coef.canonicalize();
  f.multiplicity = multiplicity;
  return f;
}

void split_squarefree(Poly f, int multiplicity, LowDegreeRoots& out) {
  if (f.degree() <= 0) return;
  // zero root
  while (f.coeff(0).is_zero()) {
    out.rational.emplace_back(Rat(0), multiplicity);
    f = Poly::divmod(f, Poly::t()).first;
  }
  if (f.degree() <= 0) return;

  std::vector<Int> z = primitive_integer(f);
  const Int& lead = z.back();
  const Int& cst = z.front();
  const Int limit("1000000000000");
  if (abs(lead) <= limit && abs(cst) <= limit) {
    for (const Int& num : divisors(cst)) {
      for (const Int& den : divisors(lead)) {
        for (int s : {1, -1}) {
          Rat r(num * s, den);
          r.canonicalize();
          if (f.degree() == 0) break;
          if (f.eval(Quad(r)).is_zero()) {
            out.rational.emplace_back(r, multiplicity);
            f = Poly::divmod(f, Poly(std::vector<Quad>{Quad(-r), Quad(1)})).first;
          }
        }
      }
    }
  } else {
    // Coefficients too large to enumerate divisors: numeric candidates,
    // exactly verified.
    for (const Complex& root : numeric_roots(f.monic())) {
      if (std::fabs(root.imag()) > 1e-9L) continue;
      auto r = rational_near(root.real(), 1e-9L * std::max<long double>(1, std::fabs(root.real())));
      if (r && f.degree() > 0 && f.eval(Quad(*r)).is_zero()) {
        out.rational.emplace_back(*r, multiplicity);
        f = Poly::divmod(f, Poly(std::vector<Quad>{Quad(-*r), Quad(1)})).first;
      }
    }
  }

  f = f.monic();
  if (f.degree() <= 0) return;
  if (f.degree() == 2) {
    out.quadratic.push_back(make_quadratic(f, multiplicity));
    return;
  }
  if (f.degree() >= 4) {
    bool found = true;
    while (found && f.degree() >= 4) {
      found = false;
      std::vector<Complex> roots = numeric_roots(f);
      for (std::size_t i = 0; i < roots.size() && !found; ++i) {
        for (std::size_t j = i + 1; j < roots.size() && !found; ++j) {
          Complex s = roots[i] + roots[j];
          Complex p = roots[i] * roots[j];
          if (std::fabs(s.imag()) > 1e-8L || std::fabs(p.imag()) > 1e-8L) continue;
          auto sr = rational_near(s.real(), 1e-9L * std::max<long double>(1, std::fabs(s.real())));
          auto pr = rational_near(p.real(), 1e-9L * std::max<long double>(1, std::fabs(p.real())));
          if (!sr || !pr) continue;
          Poly q(std::vector<Quad>{Quad(*pr), Quad(-*sr), Quad(1)});
          auto [quo, rem] = Poly::divmod(f, q);
          if (!rem.is_zero()) continue;
          out.quadratic.push_back(make_quadratic(q, multiplicity));
          f = quo.monic();
          found = true;
        }
      }
    }
    if (f.degree() == 2) {
      out.quadratic.push_back(make_quadratic(f, multiplicity));
      return;
    }
  }
  if (f.degree() > 0) out.residual.emplace_back(f, multiplicity);
}

}  // namespace

Poly LowDegreeRoots::product() const {
  Poly p{Quad(unit)};
  for (const auto& [r, m] : rational) {
    for (int i = 0; i < m; ++i) p *= Poly(std::vector<Quad>{Quad(-r), Quad(1)});
  }
  for (const auto& q : quadratic) {
    for (int i = 0; i < q.multiplicity; ++i) p *= q.factor;
  }
  for (const auto& [f, m] : residual) {
    for (int i = 0; i < m; ++i) p *= f;
  }
  return p;
}

LowDegreeRoots roots_low_degree(const Poly& p) {
  if (p.is_zero()) fail(ErrorKind::InvalidArgument, "roots of the zero polynomial");
  if (!p.is_rational()) fail(ErrorKind::InvalidArgument, "roots_low_degree needs rational coefficients");
  LowDegreeRoots out;
  out.unit = p.leading().a();
  Poly f = p.monic();
  if (f.degree() <= 0) return out;

  // Yun's squarefree decomposition.
  Poly fp = f.derivative();
  Poly g = Poly::gcd(f, fp);
  Poly c = Poly::divmod(f, g).first;
  Poly d = Poly::divmod(fp, g).first - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    Poly a = Poly::gcd(c, d);
    if (a.degree() > 0) split_squarefree(a, i, out);
    c = Poly::divmod(c, a).first;
    d = Poly::divmod(d, a).first - c.derivative();
    ++i;
  }
  std::sort(out.rational.begin(), out.rational.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

}  // namespace arrfree
