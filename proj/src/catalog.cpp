#include "arrfree/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace arrfree {

Quad omega() { return Quad(Rat(-1, 2), Rat(1, 2), -3); }
Quad zeta() { return Quad(Rat(1, 2), Rat(1, 2), 5); }

namespace {

using PolyTriple = std::array<Poly, 3>;

Quad sqrt_m1() { return Quad(0, 1, -1); }

Line line(const Quad& a, const Quad& b, const Quad& c) { return Line(Scalar(a), Scalar(b), Scalar(c)); }

// Affine form a x + b y + c, homogenized.
Line aff(const Quad& a, const Quad& b, const Quad& c) { return line(a, b, c); }

Arrangement triangle() {
  return Arrangement(FieldCtx::rational(), {line(1, 0, 0), line(0, 1, 0), line(0, 0, 1)});
}

Arrangement dual_hesse() {
  const Quad w = omega();
  const Quad w2 = w * w;
  return Arrangement(FieldCtx::quadratic(-3), {
                                                  aff(1, 0, 0),     // x
                                                  aff(1, 0, -1),    // x - 1
                                                  aff(0, 1, 0),     // y
                                                  aff(0, 1, -1),    // y - 1
                                                  aff(w, 1, 0),     // y + w x
                                                  aff(w, 1, w2),    // y + w x + w^2
                                                  aff(-w2, 1, -1),  // y - w^2 x - 1
                                                  aff(-w2, 1, w2),  // y - w^2 x + w^2
                                                  line(0, 0, 1),
                                              });
}

// (x^n - y^n)(y^n - z^n)(z^n - x^n) for the n-th roots of unity listed.
Arrangement fermat(const FieldCtx& ctx, const std::vector<Quad>& roots) {
  std::vector<Line> ls;
  for (const auto& r : roots) ls.push_back(line(1, -r, 0));
  for (const auto& r : roots) ls.push_back(line(0, 1, -r));
  for (const auto& r : roots) ls.push_back(line(-r, 0, 1));
  return Arrangement(ctx, std::move(ls));
}

Arrangement pentagonal() {
  const Quad z = zeta();
  return Arrangement(FieldCtx::quadratic(5), {
                                                 aff(1, 0, 0),       // x
                                                 aff(1, 1, -1),      // x + y - 1
                                                 aff(0, 1, -1),      // y - 1
                                                 aff(1, -z, z),      // x - z y + z
                                                 aff(0, 1, 0),       // y
                                                 aff(1, -z, 0),      // x - z y
                                                 aff(z, -1, 0),      // z x - y
                                                 aff(z, -1, -z),     // z x - y - z
                                                 aff(1, 0, -1),      // x - 1
                                                 aff(1, 1, -z - 1),  // x + y - z - 1
                                                 line(0, 0, 1),
                                             });
}

Arrangement eleven_if() {
  return Arrangement(FieldCtx::rational(), {
                                               line(1, 0, 0), line(0, 1, 0), line(0, 0, 1),
                                               line(1, 0, 1), line(1, 0, -1), line(0, 1, 1),
                                               line(0, 1, -1), line(1, 1, 0), line(1, -1, 0),
                                               line(1, -1, 1), line(1, -1, 2),
                                           });
}

Arrangement g443() {
  const Quad i = sqrt_m1();
  return Arrangement(FieldCtx::quadratic(-1), {
                                                  aff(1, 0, 0),           // x
                                                  aff(1, 0, -1),          // x - 1
                                                  aff(1, 0, -i),          // x - i
                                                  aff(1, 0, -1 - i),      // x - 1 - i
                                                  aff(0, 1, 0),           // y
                                                  aff(0, 1, -1),          // y - 1
                                                  aff(0, 1, -i),          // y - i
                                                  aff(0, 1, -1 - i),      // y - 1 - i
                                                  aff(1, -1, 0),          // x - y
                                                  aff(1, -i, -1),         // x - i y - 1
                                                  aff(1, 1, -1 - i),      // x + y - 1 - i
                                                  aff(1, i, -i),          // x + i y - i
                                              });
}

bool is_parametric(const std::optional<Scalar>& p) { return p && p->is_parametric(); }

Quad param_value(const std::string& name, const std::optional<Scalar>& p) {
  if (!p) fail(ErrorKind::InvalidArgument, name + " needs a parameter value");
  return p->as_quad();
}

struct Fixed {
  std::string description;
  std::function<Arrangement()> build;
  Expected expected;
};

const std::map<std::string, Fixed>& fixed_entries() {
  static const std::map<std::string, Fixed> entries = [] {
    std::map<std::string, Fixed> m;
    m["triangle"] = {"three lines in general position", triangle,
                     Expected{3, false, Profile{3}, Exponents{1, 1, 1}, std::nullopt, ClassTag::IF}};
    m["dual_hesse"] = {"dual Hesse arrangement over Q(sqrt -3), affine realization", dual_hesse,
                       Expected{9, false, Profile{0, 12}, Exponents{1, 4, 4}, std::nullopt, ClassTag::SExceptional}};
    m["dual_hesse_fermat"] = {"(x^3-y^3)(y^3-z^3)(z^3-x^3) over Q(sqrt -3)",
                              [] {
                                const Quad w = omega();
                                return fermat(FieldCtx::quadratic(-3), {Quad(1), w, w * w});
                              },
                              Expected{9, false, Profile{0, 12}, Exponents{1, 4, 4}, std::nullopt,
                                       ClassTag::SExceptional}};
    m["pentagonal"] = {"sides and diagonals of a regular pentagon plus the line at infinity, over Q(sqrt 5)",
                       pentagonal,
                       Expected{11, false, Profile{10, 5, 5}, Exponents{1, 5, 5}, std::nullopt,
                                ClassTag::SExceptional}};
    m["eleven_if"] = {"xyz(x^2-z^2)(y^2-z^2)(x^2-y^2)(x-y+z)(x-y+2z)", eleven_if,
                      Expected{11, false, Profile{10, 5, 5}, Exponents{1, 5, 5}, std::nullopt, ClassTag::IF}};
    m["g443"] = {"reflection arrangement G(4,4,3) over Q(sqrt -1), affine realization", g443,
                 Expected{12, false, Profile{0, 16, 3}, Exponents{1, 5, 6}, std::nullopt, ClassTag::SExceptional}};
    m["g443_fermat"] = {"(x^4-y^4)(y^4-z^4)(z^4-x^4) over Q(sqrt -1)",
                        [] {
                          const Quad i = sqrt_m1();
                          return fermat(FieldCtx::quadratic(-1), {Quad(1), i, Quad(-1), -i});
                        },
                        Expected{12, false, Profile{0, 16, 3}, Exponents{1, 5, 6}, std::nullopt,
                                 ClassTag::SExceptional}};
    return m;
  }();
  return entries;
}

const std::map<std::string, std::pair<std::string, Family (*)()>>& family_entries() {
  static const std::map<std::string, std::pair<std::string, Family (*)()>> entries = {
      {"family13", {"13-line family A_lambda, rational form", family13}},
      {"family13_sqrt3", {"13-line family A_lambda over Q(sqrt 3)", family13_sqrt3}},
      {"family15", {"15-line family A_t", family15}},
  };
  return entries;
}

bool is_zero_at(const Quad& v, const std::vector<Rat>& ascending) {
  Quad acc;
  for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) acc = acc * v + Quad(*it);
  return acc.is_zero();
}

bool one_of(const Quad& v, std::initializer_list<Rat> values) {
  for (const auto& r : values) {
    if (v == Quad(r)) return true;
  }
  return false;
}

Expected family13_expected(const std::optional<Scalar>& p) {
  const Expected generic{13, false, Profile{21, 3, 3, 3}, Exponents{1, 6, 6}, true, ClassTag::SExceptional};
  if (is_parametric(p)) {
    Expected e = generic;
    e.tag = ClassTag::Family;
    return e;
  }
  const Quad v = param_value("family13", p);
  if (one_of(v, {0, 1}) || is_zero_at(v, {1, -1, 1})) {
    return Expected{13, true, std::nullopt, std::nullopt, std::nullopt, ClassTag::Family};
  }
  if (one_of(v, {-1, 2, Rat(1, 2)})) {
    return Expected{13, false, Profile{18, 4, 3, 3}, Exponents{1, 5, 7}, false, ClassTag::IF};
  }
  return generic;
}

Expected family15_expected(const std::optional<Scalar>& p) {
  const Expected generic{15, false, std::nullopt, Exponents{1, 7, 7}, true, ClassTag::Family};
  if (is_parametric(p)) return generic;
  const Quad v = param_value("family15", p);
  if (one_of(v, {0, 1, Rat(1, 2)})) {
    return Expected{15, true, std::nullopt, std::nullopt, std::nullopt, ClassTag::Family};
  }
  if (is_zero_at(v, {1, -3, 1}) || is_zero_at(v, {-1, 1, 1})) {
    return Expected{15, false, std::nullopt, Exponents{1, 5, 9}, false, ClassTag::Family};
  }
  return generic;
}

}  // namespace

Family family13() {
  const Poly t = Poly::t();
  const Poly one(Quad(1));
  const Poly c = -(t * t) + t - one;  // -t^2 + t - 1
  Family f;
  f.name = "family13";
  f.ctx = FieldCtx::rational();
  f.lines = {
      PolyTriple{Poly(Quad(-1)), Poly(Quad(-1)), t + one},
      PolyTriple{Poly(), Poly(Quad(2)), t + one},
      PolyTriple{one, Poly(Quad(-1)), t + one},
      PolyTriple{one, Poly(Quad(-1)), t - Poly(Quad(2))},
      PolyTriple{Poly(Quad(-1)), Poly(Quad(-1)), t - Poly(Quad(2))},
      PolyTriple{Poly(), Poly(Quad(2)), t - Poly(Quad(2))},
      PolyTriple{Poly(), Poly(Quad(2)), one - t.scaled(Quad(2))},
      PolyTriple{one, Poly(Quad(-1)), one - t.scaled(Quad(2))},
      PolyTriple{Poly(Quad(-1)), Poly(Quad(-1)), one - t.scaled(Quad(2))},
      PolyTriple{one - t, t + one, c},
      PolyTriple{t, t - Poly(Quad(2)), c},
      PolyTriple{Poly(Quad(-1)), one - t.scaled(Quad(2)), c},
      PolyTriple{Poly(), Poly(), one},
  };
  return f;
}

Family family13_sqrt3() {
  Family f = family13();
  f.name = "family13_sqrt3";
  f.ctx = FieldCtx::quadratic(3);
  const Quad s = Quad::sqrt(3);
  for (auto& l : f.lines) l[0] = l[0].scaled(s);
  return f;
}

Family family15() {
  const Poly t = Poly::t();
  auto c = [](long v) { return Poly(Quad(v)); };
  const Poly t2 = t * t;
  Family f;
  f.name = "family15";
  f.ctx = FieldCtx::rational();
  f.lines = {
      PolyTriple{c(1), c(0), c(0)},
      PolyTriple{c(1), c(1), c(0)},
      PolyTriple{c(1), c(0), c(1)},
      PolyTriple{c(1), c(1), c(1)},
      PolyTriple{c(1), t, c(1)},
      PolyTriple{c(0), c(1), c(0)},
      PolyTriple{c(2), c(1), c(1)},
      PolyTriple{t + c(1), t, c(1)},
      PolyTriple{t + c(1), c(1), c(1)},
      PolyTriple{t.scaled(2), t, c(1)},
      PolyTriple{c(1), c(1) - t, c(1)},
      PolyTriple{c(1) - t.scaled(3), t2 - t.scaled(3) + c(1), -t},
      PolyTriple{t.scaled(3) - c(1), t, t},
      PolyTriple{c(1) - t.scaled(3), -t2, -t},
      PolyTriple{t.scaled(3) - c(1), t.scaled(2) - c(1), t},
  };
  return f;
}

std::string to_string(ClassTag t) {
  switch (t) {
    case ClassTag::IF:
      return "IF";
    case ClassTag::SExceptional:
      return "S-exceptional";
    case ClassTag::Family:
      return "family";
  }
  return "?";
}

std::vector<CatalogInfo> catalog_list() {
  std::vector<CatalogInfo> out;
  for (const auto& [name, e] : fixed_entries()) out.push_back({name, e.description, false});
  for (const auto& [name, e] : family_entries()) out.push_back({name, e.first, true});
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.name < y.name; });
  return out;
}

Family catalog_family(const std::string& name) {
  auto it = family_entries().find(name);
  if (it == family_entries().end()) fail(ErrorKind::InvalidArgument, "not a parametric catalog entry: " + name);
  return it->second.second();
}

Arrangement catalog_get(const std::string& name, const std::optional<Scalar>& param) {
  if (auto it = fixed_entries().find(name); it != fixed_entries().end()) {
    if (param) fail(ErrorKind::InvalidArgument, name + " takes no parameter");
    return it->second.build();
  }
  if (!family_entries().count(name)) fail(ErrorKind::InvalidArgument, "unknown catalog entry: " + name);
  Family f = catalog_family(name);
  if (is_parametric(param)) {
    if (!(*param == Scalar::t())) fail(ErrorKind::InvalidArgument, "symbolic parameter must be t");
    return symbolic_arrangement(f);
  }
  return specialize(f, param_value(name, param)).arrangement;
}

Expected catalog_expected(const std::string& name, const std::optional<Scalar>& param) {
  if (auto it = fixed_entries().find(name); it != fixed_entries().end()) return it->second.expected;
  if (name == "family13" || name == "family13_sqrt3") return family13_expected(param);
  if (name == "family15") return family15_expected(param);
  fail(ErrorKind::InvalidArgument, "unknown catalog entry: " + name);
}

SelfCheckReport catalog_selfcheck(const std::string& name, const std::optional<Scalar>& param) {
  SelfCheckReport rep;
  rep.name = name;
  rep.param = param ? param->to_string() : "";
  rep.expected = catalog_expected(name, param);
  const Expected& ex = rep.expected;

  Arrangement a = catalog_get(name, param);
  const bool family = family_entries().count(name) > 0;
  if (family && !is_parametric(param)) {
    rep.degenerate = specialize(catalog_family(name), param->as_quad()).degenerate();
  }
  LatticeData l = compute_lattice(a);
  FreenessResult r = is_free(a, l);
  rep.size = a.size();
  rep.profile = l.profile;
  rep.free = r.is_free();
  rep.exponents = r.exponents;

  auto failure = [&](const std::string& what) { rep.failures.push_back(what); };
  if (ex.degenerate) {
    if (!rep.degenerate || rep.size >= ex.size) failure("expected a degenerate member with fewer than " +
                                                        std::to_string(ex.size) + " lines");
  } else {
    if (rep.degenerate) failure("unexpected degeneration");
    if (rep.size != ex.size) failure("size " + std::to_string(rep.size) + " != " + std::to_string(ex.size));
  }
  if (ex.profile && rep.profile != *ex.profile) {
    failure("profile " + profile_to_string(rep.profile) + " != " + profile_to_string(*ex.profile));
  }
  if (ex.exponents) {
    if (!rep.free) {
      failure("not free");
    } else if (!(*rep.exponents == *ex.exponents)) {
      failure("exponents " + rep.exponents->to_string() + " != " + ex.exponents->to_string());
    }
  }
  if (ex.generic_lattice) {
    LatticeData g = compute_lattice(symbolic_arrangement(catalog_family(name)));
    rep.generic_lattice = !rep.degenerate && flat_system(l) == flat_system(g);
    if (*rep.generic_lattice != *ex.generic_lattice) {
      failure(*ex.generic_lattice ? "lattice differs from the generic lattice" : "lattice equals the generic lattice");
    }
  }
  if (ex.tag != ClassTag::Family) {
    ClassTag t = ClassTag::Family;
    if (is_inductively_free(a)) {
      t = ClassTag::IF;
    } else if (rep.free && s_membership(l, r)) {
      t = ClassTag::SExceptional;
    }
    rep.tag = t;
    if (t != ex.tag) failure("class " + to_string(t) + " != " + to_string(ex.tag));
  }
  return rep;
}

}  // namespace arrfree
