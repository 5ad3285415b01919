#include "monolab/linalg.hpp"

namespace monolab {

std::vector<size_t> rref(Matrix& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    Rat inv = m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] /= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

size_t rank(Matrix m) { return rref(m).size(); }

std::optional<LinearSolution> solve(const Matrix& a, const Vec& b) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  if (rows == 0) {
    LinearSolution s;
    s.particular.assign(cols, Rat(0));
    return s;  // no constraints; caller supplies cols via a, so cols==0 here
  }
  Matrix aug(rows, Vec(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  auto pivots = rref(aug);
  // inconsistent iff a pivot lands in the augmented column
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;

  LinearSolution s;
  s.particular.assign(cols, Rat(0));
  std::vector<bool> is_pivot(cols, false);
  for (size_t k = 0; k < pivots.size(); ++k) {
    is_pivot[pivots[k]] = true;
    s.particular[pivots[k]] = aug[k][cols];
  }
  for (size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    Vec v(cols, Rat(0));
    v[c] = 1;
    for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -aug[k][c];
    s.nullspace.push_back(std::move(v));
  }
  return s;
}

std::vector<Vec> nullspace(const Matrix& a, size_t ncols) {
  if (a.empty()) {
    std::vector<Vec> basis;
    for (size_t c = 0; c < ncols; ++c) {
      Vec v(ncols, Rat(0));
      v[c] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  auto sol = solve(a, Vec(a.size(), Rat(0)));
  return sol->nullspace;
}

}  // namespace monolab
