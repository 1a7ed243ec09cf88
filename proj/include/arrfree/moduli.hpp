#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "arrfree/search.hpp"

namespace arrfree {

/// One-parameter family: coefficient triples in Q(sqrt d)[t].
struct Family {
  std::string name;
  FieldCtx ctx;  // base field, without the parameter
  std::vector<std::array<Poly, 3>> lines;
};

struct Specialization {
  Arrangement arrangement;
  /// Lines that vanished or coincided with an earlier line.
  std::vector<int> dropped;

  bool degenerate() const { return !dropped.empty(); }
};

/// Substitutes t = value. Zero triples and repeated lines are dropped.
Specialization specialize(const Family& f, const Quad& value);

/// The family over Q(sqrt d)(t).
Arrangement symbolic_arrangement(const Family& f);

enum class Degeneration { SizeDrop, LatticeChange };
std::string to_string(Degeneration d);

struct Condition {
  std::string description;  // e.g. "H3=H7" or "H1,H4,H9 concurrent"
  Degeneration kind = Degeneration::LatticeChange;
  Poly poly;                // squarefree, monic
};

struct GenericLattice {
  Arrangement arrangement;  // over Q(sqrt d)(t)
  LatticeData lattice;
  std::vector<Condition> conditions;
};

/// Lattice over the function field; every incidence test whose outcome is
/// not constant in t contributes its numerator as a condition.
/// Throws InvalidArgument when two lines coincide identically in t.
GenericLattice generic_lattice(const Family& f);

struct ExceptionalValue {
  Quad value;
  /// Quadratic factor it came from, if irrational.
  std::optional<Poly> minimal_poly;
  bool size_drop = false;
  bool lattice_change = false;
  std::vector<std::string> causes;
};

struct ExceptionalReport {
  std::vector<Condition> conditions;
  std::vector<ExceptionalValue> values;  // sorted by value encoding
  std::vector<Poly> unresolved;

  bool contains(const Quad& v) const;
};

ExceptionalReport exceptional_values(const Family& f);
ExceptionalReport exceptional_values(const GenericLattice& g);

struct ScanOptions {
  bool symbolic = false;
  bool inductive = true;
  bool recursive = false;
  RecursiveOptions recursive_options;
};

struct ScanRow {
  std::string label;  // sample value, or "t" for the symbolic row
  bool symbolic = false;
  int size = 0;
  bool degenerate = false;
  bool exceptional = false;
  bool generic_lattice = false;  // lattice isomorphic to the generic one
  Profile profile;
  CharPoly chi;
  FreenessResult freeness;
  std::optional<bool> inductively_free;
  std::optional<RecursiveStatus> recursive;
  std::string note;
};

struct ScanTable {
  std::string family;
  ExceptionalReport report;
  std::vector<ScanRow> rows;
};

ScanTable scan_family(const Family& f, const std::vector<Quad>& samples, const ScanOptions& opts = {});

struct ProfileTriple {
  int size = 0;  // l
  int a = 0;     // smaller exponent
  Profile profile;

  bool operator==(const ProfileTriple&) const = default;
  std::string to_string() const;
};

/// Integer solutions (l, a, F) with 7 <= l <= l_max, 0 <= a <= (l - 1) / 2,
/// F_i = 0 for i >= a - 1, and
///   sum i F_i = (l - 1)(a + 1) - a^2,
///   sum (i + 1) F_i <= a l,
///   sum C(i + 1, 2) F_i = C(l, 2).
std::vector<ProfileTriple> classify_profiles(int l_max);

/// True if the triple satisfies the three constraints above.
bool satisfies_profile_constraints(const ProfileTriple& p);

}  // namespace arrfree
