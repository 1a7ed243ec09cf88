#include "arrfree/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace arrfree {

namespace {

class ExprParser {
 public:
  explicit ExprParser(const std::string& s) : s_(s) {}

  Scalar parse() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::Parse, "cannot parse \"" + s_ + "\" at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        Scalar d = unary();
        if (d.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero in \"" + s_ + "\"");
        v /= d;
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = atom();
    if (!accept('^')) return base;
    bool negative = accept('-');
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected an integer exponent");
    const int e = std::stoi(s_.substr(start, pos_ - start));
    Scalar r(1L);
    for (int k = 0; k < e; ++k) r *= base;
    if (negative) {
      if (r.is_zero()) fail(ErrorKind::DivisionByZero, "zero to a negative power");
      r = r.inverse();
    }
    return r;
  }

  Scalar atom() {
    skip_ws();
    if (pos_ >= s_.size()) error("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Scalar(Rat(Int(s_.substr(start, pos_ - start))));
    }
    if (accept('(')) {
      Scalar v = expr();
      expect(')');
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string word = s_.substr(start, pos_ - start);
      if (word == "t") return Scalar::t();
      if (word == "i") return Scalar(Quad(0, 1, -1));
      if (word == "omega") return Scalar(omega());
      if (word == "zeta") return Scalar(zeta());
      if (word == "sqrt") {
        expect('(');
        Scalar arg = expr();
        expect(')');
        if (arg.is_parametric() || !arg.as_quad().is_rational() || arg.as_quad().a().get_den() != 1) {
          error("sqrt takes an integer");
        }
        return Scalar(Quad::sqrt(arg.as_quad().a().get_num()));
      }
      pos_ = start;
      error("unknown name '" + word + "'");
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

Json rat_json(const Rat& r) { return rat_to_string(r); }

Json quad_json(const Quad& q) {
  if (q.is_rational()) return rat_json(q.a());
  return Json{{"a", rat_to_string(q.a())}, {"b", rat_to_string(q.b())}};
}

Json poly_json(const Poly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(quad_json(c));
  return arr;
}

Quad quad_from_json(const Json& j, const FieldCtx& ctx) {
  if (j.is_number_integer()) return Quad(Rat(Int(j.dump())));
  if (j.is_string()) {
    Scalar s = parse_scalar(j.get<std::string>());
    if (s.is_parametric()) fail(ErrorKind::Parse, "expected a constant, got " + s.to_string());
    return s.as_quad();
  }
  if (j.is_object() && j.contains("a") && j.contains("b")) {
    Rat a = parse_rat(j.at("a").is_string() ? j.at("a").get<std::string>() : j.at("a").dump());
    Rat b = parse_rat(j.at("b").is_string() ? j.at("b").get<std::string>() : j.at("b").dump());
    if (sgn(b) != 0 && ctx.disc == 0) {
      fail(ErrorKind::FieldMismatch, "quadratic coefficient in a field without sqrt: " + j.dump());
    }
    return Quad(a, b, ctx.disc);
  }
  fail(ErrorKind::Parse, "malformed scalar: " + j.dump());
}

Poly poly_from_json(const Json& j, const FieldCtx& ctx) {
  if (!j.is_array()) fail(ErrorKind::Parse, "expected a coefficient list: " + j.dump());
  std::vector<Quad> cs;
  for (const auto& c : j) cs.push_back(quad_from_json(c, ctx));
  return Poly(std::move(cs));
}

Json ints(const std::vector<int>& v, int offset = 0) {
  Json arr = Json::array();
  for (int x : v) arr.push_back(x + offset);
  return arr;
}

std::string md_value(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + md_value(j[i]);
    return s + "]";
  }
  if (j.is_object()) {
    std::string s = "{";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      s += (first ? "" : ", ") + k + ": " + md_value(v);
      first = false;
    }
    return s + "}";
  }
  return j.dump();
}

bool is_flat(const Json& j) {
  if (!j.is_object()) return false;
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) return false;
    if (v.is_array()) {
      for (const auto& e : v) {
        if (e.is_object() || (e.is_array() && !e.empty() && e[0].is_array())) return false;
      }
    }
  }
  return true;
}

bool is_table(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& e : j) {
    if (!is_flat(e) || e.size() != j[0].size()) return false;
    for (const auto& [k, v] : j[0].items()) {
      if (!e.contains(k)) return false;
    }
  }
  return true;
}

void md_emit(std::ostringstream& os, const Json& j, int level) {
  std::vector<std::pair<std::string, const Json*>> nested;
  for (const auto& [k, v] : j.items()) {
    if (v.is_object() || is_table(v) || (v.is_array() && !v.empty() && v[0].is_object())) {
      nested.emplace_back(k, &v);
    } else {
      os << "- **" << k << "**: " << md_value(v) << "\n";
    }
  }
  for (const auto& [k, v] : nested) {
    os << "\n" << std::string(level, '#') << " " << k << "\n\n";
    if (v->is_object()) {
      md_emit(os, *v, level + 1);
    } else if (is_table(*v)) {
      std::vector<std::string> cols;
      for (const auto& [c, unused] : (*v)[0].items()) cols.push_back(c);
      os << "|";
      for (const auto& c : cols) os << " " << c << " |";
      os << "\n|";
      for (std::size_t i = 0; i < cols.size(); ++i) os << "---|";
      os << "\n";
      for (const auto& row : *v) {
        os << "|";
        for (const auto& c : cols) os << " " << md_value(row.at(c)) << " |";
        os << "\n";
      }
    } else {
      for (const auto& e : *v) {
        if (e.is_object()) {
          md_emit(os, e, level + 1);
          os << "\n";
        } else {
          os << "- " << md_value(e) << "\n";
        }
      }
    }
  }
}

}  // namespace

Scalar parse_scalar(const std::string& text) { return ExprParser(text).parse(); }

Json scalar_to_json(const Scalar& s) {
  if (!s.is_parametric()) return quad_json(s.as_quad());
  return Json{{"num", poly_json(s.num())}, {"den", poly_json(s.den())}};
}

Scalar scalar_from_json(const Json& j, const FieldCtx& ctx) {
  if (j.is_object() && j.contains("num")) {
    if (!ctx.parametric) fail(ErrorKind::FieldMismatch, "rational function in a non-parametric field");
    Poly den = j.contains("den") ? poly_from_json(j.at("den"), ctx) : Poly(Quad(1));
    if (den.is_zero()) fail(ErrorKind::DivisionByZero, "zero denominator: " + j.dump());
    return Scalar(poly_from_json(j.at("num"), ctx), den);
  }
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  return Scalar(quad_from_json(j, ctx));
}

Json field_to_json(const FieldCtx& ctx) {
  Json j;
  if (ctx.disc != 0) j["sqrt"] = ctx.disc;
  j["param"] = ctx.parametric;
  return j;
}

FieldCtx field_from_json(const Json& j) {
  FieldCtx ctx;
  if (j.is_null()) return ctx;
  if (!j.is_object()) fail(ErrorKind::Parse, "field must be an object");
  if (j.contains("sqrt") && !j.at("sqrt").is_null()) {
    if (!j.at("sqrt").is_number_integer()) fail(ErrorKind::Parse, "field sqrt must be an integer");
    ctx = FieldCtx::quadratic(j.at("sqrt").get<std::int64_t>());
  }
  if (j.contains("param")) ctx.parametric = j.at("param").get<bool>();
  return ctx;
}

Json arrangement_to_json(const Arrangement& a) {
  Json lines = Json::array();
  for (const auto& l : a.lines()) lines.push_back(triple_to_json(l.coeffs()));
  return Json{{"field", field_to_json(a.ctx())}, {"lines", lines}};
}

Arrangement arrangement_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("lines")) fail(ErrorKind::Parse, "arrangement needs a \"lines\" array");
    const FieldCtx ctx = field_from_json(j.contains("field") ? j.at("field") : Json());
    const bool affine = j.value("affine", false);
    std::vector<Triple> triples;
    for (const auto& row : j.at("lines")) {
      if (!row.is_array() || row.size() != 3) fail(ErrorKind::Parse, "each line needs three coefficients");
      Triple t;
      for (int k = 0; k < 3; ++k) {
        t[k] = scalar_from_json(row[k], ctx);
        if (!field_hosts(ctx, t[k])) {
          fail(ErrorKind::FieldMismatch, t[k].to_string() + " is not in " + ctx.to_string());
        }
      }
      triples.push_back(t);
    }
    if (affine) return cone(triples, ctx);
    std::vector<Line> lines;
    for (const auto& t : triples) lines.emplace_back(t);
    return Arrangement(ctx, std::move(lines));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, e.what());
  }
}

Arrangement load_arrangement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::Parse, path + ": " + e.what());
  }
  return arrangement_from_json(j);
}

Arrangement load_input(const std::string& source) {
  const std::string prefix = "catalog:";
  if (source.rfind(prefix, 0) != 0) return load_arrangement_file(source);
  std::string rest = source.substr(prefix.size());
  std::optional<Scalar> param;
  if (auto q = rest.find('?'); q != std::string::npos) {
    std::string query = rest.substr(q + 1);
    rest = rest.substr(0, q);
    auto eq = query.find('=');
    if (eq == std::string::npos) fail(ErrorKind::Parse, "expected key=value after '?'");
    const std::string key = query.substr(0, eq);
    if (key != "lambda" && key != "param" && key != "t") fail(ErrorKind::Parse, "unknown catalog parameter " + key);
    param = parse_scalar(query.substr(eq + 1));
  }
  return catalog_get(rest, param);
}

Json triple_to_json(const Triple& t) { return Json::array({scalar_to_json(t[0]), scalar_to_json(t[1]), scalar_to_json(t[2])}); }

Json exponents_to_json(const Exponents& e) { return Json::array({e.e0, e.a, e.b}); }

Json lattice_to_json(const LatticeData& l) {
  Json pts = Json::array();
  for (const auto& p : l.points) {
    pts.push_back(Json{{"point", triple_to_json(p.point.coords())}, {"lines", ints(p.incident, 1)}, {"mu", p.mu()}});
  }
  Json stats = Json::array();
  for (int h = 0; h < l.num_lines; ++h) {
    stats.push_back(Json{{"line", h + 1}, {"n", l.lines[h].n}, {"mu", l.lines[h].mu}, {"profile", ints(l.lines[h].profile)}});
  }
  return Json{{"size", l.num_lines}, {"mu_total", l.mu_total}, {"profile", ints(l.profile)},
              {"line_stats", stats}, {"points", pts}};
}

Json charpoly_to_json(const CharPoly& c) {
  Json j{{"chi", c.to_string()}, {"coefficients", Json::array({c.coeffs[0], c.coeffs[1], c.coeffs[2], c.coeffs[3]})}};
  j["exponents"] = c.factored ? exponents_to_json(*c.factored) : Json();
  j["root_product"] = c.root_product;
  return j;
}

Json derivation_to_json(const Derivation2& d) {
  Json fu = Json::array();
  Json fv = Json::array();
  for (const auto& c : d.fu.coeffs) fu.push_back(scalar_to_json(c));
  for (const auto& c : d.fv.coeffs) fv.push_back(scalar_to_json(c));
  return Json{{"degree", d.degree()}, {"fu", fu}, {"fv", fv}};
}

Json freeness_to_json(const Arrangement& a, const FreenessResult& r) {
  Json j{{"verdict", to_string(r.verdict)}, {"route", to_string(r.route)}};
  j["exponents"] = r.exponents ? exponents_to_json(*r.exponents) : Json();
  Json cert{{"chi", r.chi.to_string()}};
  if (r.route == Route::ABT) {
    cert["pivot_line"] = r.pivot + 1;
    cert["pivot_coefficients"] = triple_to_json(a[r.pivot].coeffs());
    cert["pivot_n"] = r.pivot_n;
  }
  if (r.route == Route::Yoshinaga) {
    cert["restriction_line"] = r.restriction_line + 1;
    cert["restriction_coefficients"] = triple_to_json(a[r.restriction_line].coeffs());
    if (r.restriction_exponents) {
      cert["restriction_exponents"] = Json::array({r.restriction_exponents->e1, r.restriction_exponents->e2});
    }
    if (r.witness) cert["witness"] = derivation_to_json(*r.witness);
    cert["anomaly"] = r.anomaly;
  }
  j["certificate"] = cert;
  return j;
}

Json chain_to_json(const Chain& c) {
  Json moves = Json::array();
  for (std::size_t i = 0; i < c.moves.size(); ++i) {
    const Move& m = c.moves[i];
    moves.push_back(Json{{"move", m.kind == Move::Kind::Add ? "add" : "delete"},
                         {"line", triple_to_json(m.line.coeffs())},
                         {"exponents", exponents_to_json(c.exponents[i + 1])}});
  }
  return Json{{"direction", "downward"},
              {"start_exponents", exponents_to_json(c.exponents.front())},
              {"additions", c.additions()},
              {"deletions", c.deletions()},
              {"moves", moves}};
}

Json deletion_to_json(const DeletionCandidate& d) {
  Json j{{"line", d.index + 1}, {"coefficients", triple_to_json(d.line.coeffs())}, {"n", d.n},
         {"free", d.result.is_free()}, {"chi", d.result.chi.to_string()}};
  j["exponents"] = d.result.exponents ? exponents_to_json(*d.result.exponents) : Json();
  return j;
}

Json addition_to_json(const AdditionCandidate& c) {
  Json j{{"coefficients", triple_to_json(c.line.coeffs())}, {"stratum", to_string(c.stratum)},
         {"points", ints(c.points, 1)}, {"n", c.n}, {"free", c.result.is_free()}, {"chi", c.result.chi.to_string()}};
  j["exponents"] = c.result.exponents ? exponents_to_json(*c.result.exponents) : Json();
  return j;
}

Json recursive_to_json(const RecursiveVerdict& v) {
  Json j{{"verdict", to_string(v.status)}, {"size_bound", v.size_bound}, {"states", v.states}};
  if (v.chain) j["chain"] = chain_to_json(*v.chain);
  if (v.status == RecursiveStatus::No) {
    Json adds = Json::array();
    Json dels = Json::array();
    for (const auto& c : v.refuted_additions) adds.push_back(addition_to_json(c));
    for (const auto& d : v.refuted_deletions) dels.push_back(deletion_to_json(d));
    j["neighborhood"] = Json{{"additions", adds}, {"deletions", dels}};
  }
  return j;
}

Json automorphisms_to_json(const AutomorphismGroup& g) {
  Json gens = Json::array();
  for (const auto& p : g.generators) gens.push_back(ints(p, 1));
  return Json{{"order", g.order}, {"generators", gens}};
}

Json exceptional_to_json(const ExceptionalReport& r) {
  Json conds = Json::array();
  for (const auto& c : r.conditions) {
    conds.push_back(Json{{"kind", to_string(c.kind)}, {"poly", c.poly.to_string()}, {"description", c.description}});
  }
  Json vals = Json::array();
  for (const auto& v : r.values) {
    Json causes = Json::array();
    if (v.size_drop) causes.push_back("size-drop");
    if (v.lattice_change) causes.push_back("lattice-change");
    vals.push_back(Json{{"value", v.value.to_string()},
                        {"minimal_poly", v.minimal_poly ? v.minimal_poly->to_string() : v.value.to_string()},
                        {"effects", causes}});
  }
  Json unresolved = Json::array();
  for (const auto& p : r.unresolved) unresolved.push_back(p.to_string());
  return Json{{"values", vals}, {"unresolved", unresolved}, {"conditions", conds}};
}

Json scan_to_json(const ScanTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json j{{"lambda", r.label}, {"size", r.size}, {"degenerate", r.degenerate}, {"exceptional", r.exceptional},
           {"generic_lattice", r.generic_lattice}, {"profile", ints(r.profile)}, {"chi", r.chi.to_string()},
           {"verdict", to_string(r.freeness.verdict)}, {"route", to_string(r.freeness.route)}};
    j["exponents"] = r.freeness.exponents ? exponents_to_json(*r.freeness.exponents) : Json();
    j["inductively_free"] = r.inductively_free ? Json(*r.inductively_free) : Json();
    j["recursive"] = r.recursive ? Json(to_string(*r.recursive)) : Json();
    if (!r.note.empty()) j["note"] = r.note;
    rows.push_back(j);
  }
  return Json{{"family", t.family}, {"rows", rows}, {"exceptional", exceptional_to_json(t.report)}};
}

Json profile_triple_to_json(const ProfileTriple& p) {
  return Json{{"size", p.size}, {"a", p.a}, {"profile", ints(p.profile)}};
}

Json selfcheck_to_json(const SelfCheckReport& r) {
  Json j{{"name", r.name}, {"param", r.param}, {"ok", r.ok()}, {"size", r.size}, {"degenerate", r.degenerate},
         {"profile", ints(r.profile)}, {"free", r.free}};
  j["exponents"] = r.exponents ? exponents_to_json(*r.exponents) : Json();
  if (r.generic_lattice) j["generic_lattice"] = *r.generic_lattice;
  if (r.tag) j["class"] = to_string(*r.tag);
  j["expected_class"] = to_string(r.expected.tag);
  j["failures"] = r.failures;
  return j;
}

std::string json_to_markdown(const Json& j, const std::string& title) {
  std::ostringstream os;
  os << "# " << title << "\n\n";
  if (j.is_object()) {
    md_emit(os, j, 2);
  } else if (is_table(j)) {
    md_emit(os, Json{{"rows", j}}, 2);
  } else if (j.is_array()) {
    for (const auto& e : j) os << "- " << md_value(e) << "\n";
  } else {
    os << md_value(j) << "\n";
  }
  return os.str();
}

}  // namespace arrfree
