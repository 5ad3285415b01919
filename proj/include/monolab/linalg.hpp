#pragma once

#include "monolab/rat.hpp"

#include <optional>
#include <vector>

namespace monolab {

using Matrix = std::vector<Vec>;  // row-major

// Reduced row echelon form, in place. Returns pivot column indices.
std::vector<size_t> rref(Matrix& m);

size_t rank(Matrix m);

// General solution of A x = b: a particular solution plus a nullspace basis.
// Empty optional when the system is inconsistent.
struct LinearSolution {
  Vec particular;
  std::vector<Vec> nullspace;
};
std::optional<LinearSolution> solve(const Matrix& a, const Vec& b);

std::vector<Vec> nullspace(const Matrix& a, size_t ncols);

}  // namespace monolab
