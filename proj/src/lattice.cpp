#include "arrfree/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace arrfree {

void trim_profile(Profile& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::string profile_to_string(const Profile& f) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
  os << "]";
  return os.str();
}

bool FlatPoint::contains(int line) const {
  return std::binary_search(incident.begin(), incident.end(), line);
}

int LatticeData::max_n() const {
  int m = 0;
  for (const auto& s : lines) m = std::max(m, s.n);
  return m;
}

namespace {

// Sorts flats and fills every derived field from `points`.
void finalize(LatticeData& l) {
  std::sort(l.points.begin(), l.points.end(),
            [](const FlatPoint& x, const FlatPoint& y) { return x.incident < y.incident; });
  const int n = l.num_lines;
  l.pair_point.assign(n, std::vector<int>(n, -1));
  l.lines.assign(n, LineStats{});
  l.profile.clear();
  l.mu_total = 0;
  for (int p = 0; p < static_cast<int>(l.points.size()); ++p) {
    const auto& inc = l.points[p].incident;
    const int mu = static_cast<int>(inc.size()) - 1;
    l.mu_total += mu;
    if (static_cast<int>(l.profile.size()) < mu) l.profile.resize(mu, 0);
    ++l.profile[mu - 1];
    for (int h : inc) {
      auto& s = l.lines[h];
      ++s.n;
      s.mu += mu;
      if (static_cast<int>(s.profile.size()) < mu) s.profile.resize(mu, 0);
      ++s.profile[mu - 1];
      for (int k : inc) {
        if (k != h) l.pair_point[h][k] = p;
      }
    }
  }
  trim_profile(l.profile);
}

}  // namespace

LatticeData compute_lattice(const Arrangement& a) {
  LatticeData l;
  const int n = a.size();
  l.num_lines = n;
  std::vector<std::vector<char>> done(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (done[i][j]) continue;
      FlatPoint fp;
      fp.point = meet(a[i], a[j]);
      fp.incident = {i, j};
      // Any other line through this point has index > j; smaller ones would
      // have produced the point already.
      for (int k = j + 1; k < n; ++k) {
        if (incident(fp.point, a[k])) fp.incident.push_back(k);
      }
      for (int x : fp.incident) {
        for (int y : fp.incident) done[x][y] = 1;
      }
      l.points.push_back(std::move(fp));
    }
  }
  finalize(l);
  return l;
}

LatticeData restrict_lattice(const LatticeData& l, const std::vector<int>& keep) {
  std::vector<int> renumber(l.num_lines, -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) renumber[keep[i]] = i;
  LatticeData r;
  r.num_lines = static_cast<int>(keep.size());
  for (const auto& p : l.points) {
    FlatPoint q;
    for (int h : p.incident) {
      if (renumber[h] >= 0) q.incident.push_back(renumber[h]);
    }
    if (q.incident.size() < 2) continue;
    std::sort(q.incident.begin(), q.incident.end());
    q.point = p.point;
    r.points.push_back(std::move(q));
  }
  finalize(r);
  return r;
}

LatticeData extend_lattice(const Arrangement& a, const LatticeData& l, const Line& line) {
  if (a.contains(line)) fail(ErrorKind::InvalidArgument, "line already present: " + line.to_string());
  const int m = a.size();
  LatticeData r;
  r.num_lines = m + 1;
  r.points = l.points;
  std::vector<char> covered(m, 0);
  for (auto& p : r.points) {
    if (incident(p.point, line)) {
      p.incident.push_back(m);
      for (int h : p.incident) {
        if (h < m) covered[h] = 1;
      }
    }
  }
  for (int h = 0; h < m; ++h) {
    if (covered[h]) continue;
    r.points.push_back(FlatPoint{meet(a[h], line), {h, m}});
  }
  finalize(r);
  return r;
}

std::string Exponents::to_string() const {
  return "(" + std::to_string(e0) + "," + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::int64_t CharPoly::eval(std::int64_t t) const {
  std::int64_t acc = 0;
  for (int i = 3; i >= 0; --i) acc = acc * t + coeffs[i];
  return acc;
}

std::string CharPoly::to_string() const {
  if (factored) {
    auto term = [](int r) { return r == 0 ? std::string("t") : "(t-" + std::to_string(r) + ")"; };
    if (factored->e0 == 0) return "t^3";
    if (factored->a == factored->b) return "(t-1)" + term(factored->a) + "^2";
    return "(t-1)" + term(factored->a) + term(factored->b);
  }
  std::ostringstream os;
  os << "(t-1)(t^2";
  std::int64_t s = -(coeffs[2] + 1);
  if (s != 0) os << (s > 0 ? "-" : "+") << std::llabs(s) << "t";
  if (root_product != 0) os << (root_product > 0 ? "+" : "-") << std::llabs(root_product);
  os << ")";
  return os.str();
}

std::optional<Exponents> exponents_from_charpoly(const CharPoly& c) {
  if (c.coeffs[3] != 1) return std::nullopt;
  if (c.coeffs[0] == 0 && c.coeffs[1] == 0 && c.coeffs[2] == 0) return Exponents{0, 0, 0};
  if (c.eval(1) != 0) return std::nullopt;
  // chi = (t - 1)(t^2 - s t + p)
  const std::int64_t s = -(c.coeffs[2] + 1);
  const std::int64_t p = -c.coeffs[0];
  const std::int64_t disc = s * s - 4 * p;
  if (disc < 0) return std::nullopt;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<long double>(disc))));
  while (r * r > disc) --r;
  while ((r + 1) * (r + 1) <= disc) ++r;
  if (r * r != disc || (s + r) % 2 != 0) return std::nullopt;
  const std::int64_t a = (s - r) / 2;
  const std::int64_t b = (s + r) / 2;
  if (a < 0) return std::nullopt;
  return Exponents{1, static_cast<int>(a), static_cast<int>(b)};
}

CharPoly char_poly(const LatticeData& l) {
  CharPoly c;
  const std::int64_t n = l.num_lines;
  if (n == 0) {
    c.coeffs = {0, 0, 0, 1};
    c.factored = Exponents{0, 0, 0};
    return c;
  }
  const std::int64_t mu = l.mu_total;
  c.root_product = mu - n + 1;
  c.coeffs = {-c.root_product, mu, -n, 1};
  c.factored = exponents_from_charpoly(c);
  return c;
}

CharPoly char_poly(const Arrangement& a) { return char_poly(compute_lattice(a)); }

// ---------------------------------------------------------------- automorphisms

namespace {

// Backtracking search for flat-preserving line bijections between two
// lattices with the same number of lines.
class IsoSearch {
 public:
  IsoSearch(const LatticeData& from, const LatticeData& to) : from_(from), to_(to) {
    const int n = from.num_lines;
    on_from_ = membership(from);
    on_to_ = membership(to);
    std::vector<std::vector<int>> key_from(n), key_to(n);
    for (int h = 0; h < n; ++h) {
      key_from[h] = line_key(from, h);
      key_to[h] = line_key(to, h);
    }
    compatible_.assign(n, std::vector<char>(n, 0));
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) compatible_[x][y] = key_from[x] == key_to[y];
    }
    map_.assign(n, -1);
    used_.assign(n, 0);
  }

  /// Finds a full bijection extending the given partial assignment.
  std::optional<Permutation> extend(const std::vector<std::pair<int, int>>& fixed) {
    std::fill(map_.begin(), map_.end(), -1);
    std::fill(used_.begin(), used_.end(), 0);
    assigned_.clear();
    for (auto [x, y] : fixed) {
      if (!compatible_[x][y] || used_[y] || !consistent(x, y)) return std::nullopt;
      assign(x, y);
    }
    if (search()) return map_;
    return std::nullopt;
  }

 private:
  static std::vector<std::vector<char>> membership(const LatticeData& l) {
    std::vector<std::vector<char>> on(l.points.size(), std::vector<char>(l.num_lines, 0));
    for (std::size_t p = 0; p < l.points.size(); ++p) {
      for (int h : l.points[p].incident) on[p][h] = 1;
    }
    return on;
  }

  static std::vector<int> line_key(const LatticeData& l, int h) {
    std::vector<int> k{l.lines[h].n};
    k.insert(k.end(), l.lines[h].profile.begin(), l.lines[h].profile.end());
    return k;
  }

  bool consistent(int x, int y) const {
    for (int x2 : assigned_) {
      const int y2 = map_[x2];
      const int p = from_.pair_point[x][x2];
      const int q = to_.pair_point[y][y2];
      if (from_.points[p].incident.size() != to_.points[q].incident.size()) return false;
      for (int x3 : assigned_) {
        if (on_from_[p][x3] != on_to_[q][map_[x3]]) return false;
      }
    }
    return true;
  }

  void assign(int x, int y) {
    map_[x] = y;
    used_[y] = 1;
    assigned_.push_back(x);
  }

  void unassign(int x) {
    used_[map_[x]] = 0;
    map_[x] = -1;
    assigned_.pop_back();
  }

  bool search() {
    int x = -1;
    for (int i = 0; i < from_.num_lines; ++i) {
      if (map_[i] < 0) {
        x = i;
        break;
      }
    }
    if (x < 0) return true;
    for (int y = 0; y < to_.num_lines; ++y) {
      if (used_[y] || !compatible_[x][y] || !consistent(x, y)) continue;
      assign(x, y);
      if (search()) return true;
      unassign(x);
    }
    return false;
  }

  const LatticeData& from_;
  const LatticeData& to_;
  std::vector<std::vector<char>> on_from_;
  std::vector<std::vector<char>> on_to_;
  std::vector<std::vector<char>> compatible_;
  std::vector<int> map_;
  std::vector<char> used_;
  std::vector<int> assigned_;
};

}  // namespace

AutomorphismGroup lattice_automorphisms(const LatticeData& l) {
  AutomorphismGroup g;
  IsoSearch search(l, l);
  const int n = l.num_lines;
  std::vector<std::pair<int, int>> prefix;
  for (int k = 0; k < n; ++k) {
    // Orbit of k under the pointwise stabilizer of 0..k-1.
    std::int64_t orbit = 1;
    for (int j = k + 1; j < n; ++j) {
      auto fixed = prefix;
      fixed.emplace_back(k, j);
      if (auto perm = search.extend(fixed)) {
        ++orbit;
        g.generators.push_back(*perm);
      }
    }
    g.order *= orbit;
    prefix.emplace_back(k, k);
  }
  return g;
}

std::optional<Permutation> lattice_isomorphism(const LatticeData& from, const LatticeData& to) {
  if (from.num_lines != to.num_lines || from.points.size() != to.points.size()) return std::nullopt;
  if (from.profile != to.profile) return std::nullopt;
  IsoSearch search(from, to);
  return search.extend({});
}

bool lattice_isomorphic(const LatticeData& x, const LatticeData& y) {
  return lattice_isomorphism(x, y).has_value();
}

std::vector<std::vector<int>> flat_system(const LatticeData& l) {
  std::vector<std::vector<int>> s;
  s.reserve(l.points.size());
  for (const auto& p : l.points) s.push_back(p.incident);
  std::sort(s.begin(), s.end());
  return s;
}

bool preserves_flats(const LatticeData& l, const Permutation& perm) {
  if (static_cast<int>(perm.size()) != l.num_lines) return false;
  std::set<std::vector<int>> flats;
  for (const auto& p : l.points) flats.insert(p.incident);
  for (const auto& p : l.points) {
    std::vector<int> img;
    for (int h : p.incident) img.push_back(perm[h]);
    std::sort(img.begin(), img.end());
    if (!flats.count(img)) return false;
  }
  return true;
}

}  // namespace arrfree
