#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arrfree/geometry.hpp"

namespace arrfree {

/// F = [F_1, F_2, ...], trimmed after the last nonzero entry.
using Profile = std::vector<int>;

void trim_profile(Profile& f);
std::string profile_to_string(const Profile& f);

/// A rank-2 flat: a point with the sorted indices of all lines through it.
struct FlatPoint {
  Point point;
  std::vector<int> incident;

  int mu() const { return static_cast<int>(incident.size()) - 1; }
  bool contains(int line) const;
};

struct LineStats {
  int n = 0;   // number of flats on the line
  int mu = 0;  // sum of mu_P over flats on the line
  Profile profile;
};

struct LatticeData {
  int num_lines = 0;
  std::vector<FlatPoint> points;
  int mu_total = 0;
  Profile profile;
  std::vector<LineStats> lines;
  /// pair_point[i][j] = index of the flat containing lines i and j (i != j).
  std::vector<std::vector<int>> pair_point;

  int max_n() const;
};

LatticeData compute_lattice(const Arrangement& a);

/// Lattice of the sub-arrangement formed by `keep` (indices into the parent
/// arrangement, renumbered in the given order). Points keep their coordinates.
LatticeData restrict_lattice(const LatticeData& l, const std::vector<int>& keep);

/// Lattice of a ∪ {line}; the new line gets index a.size().
LatticeData extend_lattice(const Arrangement& a, const LatticeData& l, const Line& line);

/// Exponents (e0, a, b) with a <= b; e0 = 1 except for the empty arrangement.
struct Exponents {
  int e0 = 1;
  int a = 0;
  int b = 0;

  bool operator==(const Exponents&) const = default;
  std::string to_string() const;
};

struct CharPoly {
  /// Ascending coefficients of the cubic.
  std::array<std::int64_t, 4> coeffs{};
  std::optional<Exponents> factored;

  /// Constant term of chi / (t - 1): the product ab of the two other roots.
  std::int64_t root_product = 0;

  std::int64_t eval(std::int64_t t) const;
  std::string to_string() const;
};

CharPoly char_poly(const LatticeData& l);
CharPoly char_poly(const Arrangement& a);

std::optional<Exponents> exponents_from_charpoly(const CharPoly& c);

using Permutation = std::vector<int>;

struct AutomorphismGroup {
  std::int64_t order = 1;
  std::vector<Permutation> generators;
};

/// Full group of line permutations preserving the flat system.
AutomorphismGroup lattice_automorphisms(const LatticeData& l);

/// A line bijection mapping the flats of `from` onto those of `to`, if any.
std::optional<Permutation> lattice_isomorphism(const LatticeData& from, const LatticeData& to);
bool lattice_isomorphic(const LatticeData& x, const LatticeData& y);

/// True if perm maps every flat of l onto a flat of l.
bool preserves_flats(const LatticeData& l, const Permutation& perm);

/// Sorted incident lists; equal iff the lattices coincide under the identity labeling.
std::vector<std::vector<int>> flat_system(const LatticeData& l);

}  // namespace arrfree
