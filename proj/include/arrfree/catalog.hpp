#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arrfree/moduli.hpp"

namespace arrfree {

/// omega = (-1 + sqrt(-3)) / 2 and zeta = (1 + sqrt 5) / 2.
Quad omega();
Quad zeta();

/// The 13-line family, rational form (x scaled by 1/sqrt 3).
Family family13();
/// The 13-line family with its original coefficients over Q(sqrt 3).
Family family13_sqrt3();
Family family15();

enum class ClassTag { IF, SExceptional, Family };
std::string to_string(ClassTag t);

struct Expected {
  /// Exact size, or for degenerate members an upper bound (size < bound).
  int size = 0;
  bool degenerate = false;
  std::optional<Profile> profile;
  std::optional<Exponents> exponents;
  /// Family members only: lattice equal to the generic lattice.
  std::optional<bool> generic_lattice;
  ClassTag tag = ClassTag::Family;
};

struct CatalogInfo {
  std::string name;
  std::string description;
  bool takes_parameter = false;
};

std::vector<CatalogInfo> catalog_list();

/// The family behind a parametric entry; throws for fixed entries.
Family catalog_family(const std::string& name);

/// Builds the entry. Parametric entries need a value; Scalar::t() selects
/// the symbolic arrangement over the function field.
Arrangement catalog_get(const std::string& name, const std::optional<Scalar>& param = std::nullopt);

Expected catalog_expected(const std::string& name, const std::optional<Scalar>& param = std::nullopt);

struct SelfCheckReport {
  std::string name;
  std::string param;
  Expected expected;
  int size = 0;
  bool degenerate = false;
  Profile profile;
  std::optional<Exponents> exponents;
  bool free = false;
  std::optional<bool> generic_lattice;
  std::optional<ClassTag> tag;  // computed only when the expectation pins one
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

SelfCheckReport catalog_selfcheck(const std::string& name, const std::optional<Scalar>& param = std::nullopt);

}  // namespace arrfree
