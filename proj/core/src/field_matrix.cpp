#include "milnorforge/field_matrix.hpp"

#include <utility>

#include "milnorforge/error.hpp"

namespace milnorforge {

FieldMatrix::FieldMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)),
      rows_(rows),
      cols_(cols),
      entries_(rows * cols, field_.zero()) {}

FieldMatrix FieldMatrix::from_rows(
    const FieldSpec& field, const std::vector<std::vector<FieldElement>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  FieldMatrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) {
      if (rows[i][j].field() != field)
        throw DomainError("mixed fields in matrix: " + rows[i][j].field().name() +
                          " in a matrix over " + field.name());
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

std::vector<FieldElement> FieldMatrix::apply(const std::vector<FieldElement>& v) const {
  if (v.size() != cols_) throw InputError("vector length does not match columns");
  std::vector<FieldElement> out(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

RankAndKernel rank_and_kernel(const FieldMatrix& input) {
  FieldMatrix a = input;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a(p, c).is_zero()) ++p;
    if (p == m) continue;
    if (p != r)
      for (std::size_t j = c; j < n; ++j) std::swap(a(p, j), a(r, j));
    const FieldElement inv = a(r, c).inverse();
    for (std::size_t j = c; j < n; ++j)
      if (!a(r, j).is_zero()) a(r, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const FieldElement factor = a(i, c);
      for (std::size_t j = c; j < n; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= factor * a(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }

  RankAndKernel out;
  out.rank = r;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(n, a.field().zero());
    v[free] = a.field().one();
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a(i, free);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const FieldMatrix& m) {
  // Same elimination without the back-substitution bookkeeping.
  FieldMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a(p, j), a(r, j));
    const FieldElement inv = a(r, c).inverse();
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a(i, c).is_zero()) continue;
      const FieldElement factor = a(i, c) * inv;
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= factor * a(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace milnorforge
