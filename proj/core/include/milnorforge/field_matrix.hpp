#pragma once

#include <cstddef>
#include <vector>

#include "milnorforge/field.hpp"

namespace milnorforge {

// Dense matrix over a single FieldSpec.
class FieldMatrix {
 public:
  FieldMatrix(FieldSpec field, std::size_t rows, std::size_t cols);
  // Throws DomainError if the entries do not share one field, InputError if
  // the rows are ragged.
  static FieldMatrix from_rows(const FieldSpec& field,
                               const std::vector<std::vector<FieldElement>>& rows);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const FieldElement& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> entries_;
};

struct RankAndKernel {
  std::size_t rank = 0;
  // Basis of {v : M v = 0}; rank + kernel.size() == cols.
  std::vector<std::vector<FieldElement>> kernel;
};

RankAndKernel rank_and_kernel(const FieldMatrix& m);
std::size_t rank(const FieldMatrix& m);

}  // namespace milnorforge
