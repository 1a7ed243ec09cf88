#pragma once

#include <vector>

#include "arrfree/scalar.hpp"

namespace arrfree {

using Matrix = std::vector<std::vector<Scalar>>;

/// Basis of {x : M x = 0} by exact Gauss-Jordan elimination. Works over any
/// field in the tower, including Q(sqrt d)(t).
std::vector<std::vector<Scalar>> nullspace(Matrix m, int cols);

int rank(Matrix m, int cols);

}  // namespace arrfree
