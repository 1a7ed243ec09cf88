#include "arrfree/moduli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace arrfree {

namespace {

FieldCtx ctx_of(const Quad& q) {
  return q.disc() == 0 ? FieldCtx::rational() : FieldCtx::quadratic(q.disc());
}

std::string hname(int i) { return "H" + std::to_string(i + 1); }

Poly det_poly(const std::array<Poly, 3>& r0, const std::array<Poly, 3>& r1, const std::array<Poly, 3>& r2) {
  return r0[0] * (r1[1] * r2[2] - r1[2] * r2[1]) - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0]) +
         r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]);
}

Poly gcd_all(const std::vector<Poly>& ps) {
  Poly g;
  for (const auto& p : ps) {
    if (!p.is_zero()) g = g.is_zero() ? p.monic() : Poly::gcd(g, p);
  }
  return g;
}

struct PolyLess {
  bool operator()(const Poly& x, const Poly& y) const { return x.compare(y) < 0; }
};

// Rational polynomial whose roots include those of p.
Poly rational_shadow(const Poly& p) {
  if (p.is_rational()) return p;
  return p * p.conjugate();
}

bool is_root(const Poly& p, const Quad& v) {
  try {
    return p.eval(v).is_zero();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::FieldMismatch) return false;
    throw;
  }
}

}  // namespace

Specialization specialize(const Family& f, const Quad& value) {
  const FieldCtx ctx = FieldCtx::join(f.ctx, ctx_of(value));
  std::vector<Line> lines;
  std::set<Line> seen;
  Specialization s;
  for (int i = 0; i < static_cast<int>(f.lines.size()); ++i) {
    Triple c;
    for (int k = 0; k < 3; ++k) c[k] = Scalar(f.lines[i][k].eval(value));
    if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) {
      s.dropped.push_back(i);
      continue;
    }
    Line l(c);
    if (!seen.insert(l).second) {
      s.dropped.push_back(i);
      continue;
    }
    lines.push_back(l);
  }
  s.arrangement = Arrangement(ctx, std::move(lines));
  return s;
}

Arrangement symbolic_arrangement(const Family& f) {
  std::vector<Line> lines;
  for (const auto& t : f.lines) lines.emplace_back(Scalar(t[0]), Scalar(t[1]), Scalar(t[2]));
  return Arrangement(f.ctx.with_param(), std::move(lines));
}

std::string to_string(Degeneration d) { return d == Degeneration::SizeDrop ? "size-drop" : "lattice-change"; }

GenericLattice generic_lattice(const Family& f) {
  const int m = static_cast<int>(f.lines.size());
  // (kind, squarefree poly) -> sources
  std::map<std::pair<int, Poly>, std::vector<std::string>,
           std::function<bool(const std::pair<int, Poly>&, const std::pair<int, Poly>&)>>
      grouped([](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second.compare(y.second) < 0;
      });
  auto record = [&](Degeneration kind, const Poly& p, const std::string& what) {
    if (p.is_zero() || p.degree() < 1) return;
    grouped[{static_cast<int>(kind), p.squarefree_part().monic()}].push_back(what);
  };

  for (int i = 0; i < m; ++i) {
    const auto& c = f.lines[i];
    record(Degeneration::SizeDrop, gcd_all({c[0], c[1], c[2]}), hname(i) + " vanishes");
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const auto& a = f.lines[i];
      const auto& b = f.lines[j];
      std::vector<Poly> minors{a[0] * b[1] - a[1] * b[0], a[0] * b[2] - a[2] * b[0], a[1] * b[2] - a[2] * b[1]};
      Poly g = gcd_all(minors);
      if (g.is_zero()) fail(ErrorKind::InvalidArgument, hname(i) + " and " + hname(j) + " coincide identically");
      record(Degeneration::SizeDrop, g, hname(i) + "=" + hname(j));
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      for (int k = j + 1; k < m; ++k) {
        record(Degeneration::LatticeChange, det_poly(f.lines[i], f.lines[j], f.lines[k]),
               hname(i) + "," + hname(j) + "," + hname(k) + " concurrent");
      }
    }
  }

  GenericLattice g;
  g.arrangement = symbolic_arrangement(f);
  g.lattice = compute_lattice(g.arrangement);
  for (auto& [key, sources] : grouped) {
    Condition c;
    c.kind = static_cast<Degeneration>(key.first);
    c.poly = key.second;
    std::ostringstream os;
    for (std::size_t s = 0; s < sources.size(); ++s) {
      if (s == 3) {
        os << "; +" << sources.size() - 3 << " more";
        break;
      }
      os << (s ? "; " : "") << sources[s];
    }
    c.description = os.str();
    g.conditions.push_back(std::move(c));
  }
  return g;
}

bool ExceptionalReport::contains(const Quad& v) const {
  return std::any_of(values.begin(), values.end(), [&](const ExceptionalValue& e) { return e.value == v; });
}

ExceptionalReport exceptional_values(const GenericLattice& g) {
  ExceptionalReport rep;
  rep.conditions = g.conditions;
  std::vector<ExceptionalValue> vals;
  std::set<Poly, PolyLess> unresolved;
  auto add_value = [&](const Quad& v, const std::optional<Poly>& minimal, const Condition& c) {
    auto it = std::find_if(vals.begin(), vals.end(), [&](const ExceptionalValue& e) { return e.value == v; });
    if (it == vals.end()) {
      vals.push_back({v, minimal, false, false, {}});
      it = vals.end() - 1;
    }
    (c.kind == Degeneration::SizeDrop ? it->size_drop : it->lattice_change) = true;
    it->causes.push_back(c.description);
  };
  for (const auto& c : g.conditions) {
    LowDegreeRoots r = roots_low_degree(rational_shadow(c.poly));
    for (const auto& [root, mult] : r.rational) {
      if (is_root(c.poly, Quad(root))) add_value(Quad(root), std::nullopt, c);
    }
    for (const auto& q : r.quadratic) {
      for (bool plus : {true, false}) {
        if (is_root(c.poly, q.root(plus))) add_value(q.root(plus), q.factor, c);
      }
    }
    for (const auto& [res, mult] : r.residual) unresolved.insert(res);
  }
  std::sort(vals.begin(), vals.end(),
            [](const ExceptionalValue& x, const ExceptionalValue& y) { return x.value.compare(y.value) < 0; });
  rep.values = std::move(vals);
  rep.unresolved.assign(unresolved.begin(), unresolved.end());
  return rep;
}

ExceptionalReport exceptional_values(const Family& f) { return exceptional_values(generic_lattice(f)); }

ScanTable scan_family(const Family& f, const std::vector<Quad>& samples, const ScanOptions& opts) {
  ScanTable table;
  table.family = f.name;
  GenericLattice g = generic_lattice(f);
  table.report = exceptional_values(g);
  const auto generic_flats = flat_system(g.lattice);

  for (const auto& v : samples) {
    ScanRow row;
    row.label = v.to_string();
    row.exceptional = table.report.contains(v);
    Specialization s;
    try {
      s = specialize(f, v);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::FieldMismatch) throw;
      row.note = "value outside working field";
      table.rows.push_back(std::move(row));
      continue;
    }
    const Arrangement& a = s.arrangement;
    row.size = a.size();
    row.degenerate = s.degenerate();
    LatticeData l = compute_lattice(a);
    row.profile = l.profile;
    row.generic_lattice = !row.degenerate && flat_system(l) == generic_flats;
    row.freeness = is_free(a, l);
    row.chi = row.freeness.chi;
    if (row.freeness.is_free()) {
      std::optional<Chain> chain;
      if (opts.inductive || opts.recursive) {
        chain = is_inductively_free(a);
        row.inductively_free = chain.has_value();
      }
      if (opts.recursive) {
        row.recursive = chain ? RecursiveStatus::Yes : recursive_freeness_bounded(a, opts.recursive_options).status;
      }
    }
    table.rows.push_back(std::move(row));
  }

  if (opts.symbolic) {
    ScanRow row;
    row.label = "t";
    row.symbolic = true;
    row.size = g.arrangement.size();
    row.generic_lattice = true;
    row.profile = g.lattice.profile;
    row.freeness = is_free(g.arrangement, g.lattice);
    row.chi = row.freeness.chi;
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string ProfileTriple::to_string() const {
  return "(" + std::to_string(size) + ", " + std::to_string(a) + ", " + profile_to_string(profile) + ")";
}

bool satisfies_profile_constraints(const ProfileTriple& p) {
  const long l = p.size;
  const long a = p.a;
  long s1 = 0;
  long s2 = 0;
  long s3 = 0;
  for (std::size_t k = 0; k < p.profile.size(); ++k) {
    const long i = static_cast<long>(k) + 1;
    const long fi = p.profile[k];
    if (fi < 0) return false;
    if (fi > 0 && i >= a - 1) return false;
    s1 += i * fi;
    s2 += (i + 1) * fi;
    s3 += (i + 1) * i / 2 * fi;
  }
  return s1 == (l - 1) * (a + 1) - a * a && s2 <= a * l && s3 == l * (l - 1) / 2;
}

std::vector<ProfileTriple> classify_profiles(int l_max) {
  std::vector<ProfileTriple> out;
  for (int l = 7; l <= l_max; ++l) {
    for (int a = 0; 2 * a <= l - 1; ++a) {
      const int top = a - 2;  // F_i may be nonzero only for 1 <= i <= a - 2
      if (top < 1) continue;
      const long target1 = static_cast<long>(l - 1) * (a + 1) - static_cast<long>(a) * a;
      const long target3 = static_cast<long>(l) * (l - 1) / 2;
      const long bound2 = static_cast<long>(a) * l;
      Profile f(top, 0);
      // Assign F_top, ..., F_1 from the top down; F_1 is then forced by the first identity.
      std::function<void(int, long, long, long)> rec = [&](int i, long s1, long s2, long s3) {
        if (s1 > target1 || s2 > bound2 || s3 > target3) return;
        if (i == 1) {
          const long f1 = target1 - s1;
          if (s2 + 2 * f1 > bound2 || s3 + f1 != target3) return;
          f[0] = static_cast<int>(f1);
          ProfileTriple t{l, a, f};
          trim_profile(t.profile);
          out.push_back(std::move(t));
          return;
        }
        for (long fi = 0; s1 + i * fi <= target1; ++fi) {
          f[i - 1] = static_cast<int>(fi);
          rec(i - 1, s1 + i * fi, s2 + (i + 1) * fi, s3 + static_cast<long>(i + 1) * i / 2 * fi);
        }
        f[i - 1] = 0;
      };
      rec(top, 0, 0, 0);
    }
  }
  return out;
}

}  // namespace arrfree
