#include "milnorforge/integer_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace milnorforge {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged IntegerMatrix");
    for (long v : row) entries_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch");
  IntegerMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Integer& v) { return v == 0; });
}

std::vector<Integer> SNFResult::torsion() const {
  std::vector<Integer> out;
  for (const auto& d : invariant_factors)
    if (d > 1) out.push_back(d);
  return out;
}

namespace {

// Working state of the elimination: only the trailing submatrix starting at
// (t, t) is ever touched.
class Eliminator {
 public:
  explicit Eliminator(IntegerMatrix m) : a_(std::move(m)) {}

  std::vector<Integer> diagonalize() {
    std::vector<Integer> diag;
    const std::size_t m = a_.rows();
    const std::size_t n = a_.cols();
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
      if (!place_min_pivot(t, t, m, t, n)) break;
      while (true) {
        bool clean = true;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (a_(i, t) == 0) continue;
          Integer q;
          mpz_tdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
          if (q != 0) add_row_multiple(i, t, -q, t);
          if (a_(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a_(t, j) == 0) continue;
          Integer q;
          mpz_tdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
          if (q != 0) add_col_multiple(j, t, -q, t);
          if (a_(t, j) != 0) clean = false;
        }
        if (clean) break;
        // Remainders are strictly smaller than the pivot; bring the smallest
        // one in row t or column t to the pivot position.
        place_min_in_cross(t);
      }
      diag.push_back(abs(a_(t, t)));
    }
    return diag;
  }

 private:
  bool place_min_pivot(std::size_t t, std::size_t r0, std::size_t r1,
                       std::size_t c0, std::size_t c1) {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    Integer best;
    for (std::size_t i = r0; i < r1 && !(found && best == 1); ++i) {
      for (std::size_t j = c0; j < c1; ++j) {
        const Integer& v = a_(i, j);
        if (v == 0) continue;
        if (!found || mpz_cmpabs(v.get_mpz_t(), best.get_mpz_t()) < 0) {
          best = abs(v);
          bi = i;
          bj = j;
          found = true;
          if (best == 1) break;
        }
      }
    }
    if (!found) return false;
    swap_rows(t, bi, t);
    swap_cols(t, bj, t);
    return true;
  }

  void place_min_in_cross(std::size_t t) {
    std::size_t bi = t, bj = t;
    Integer best = abs(a_(t, t));
    for (std::size_t i = t + 1; i < a_.rows(); ++i) {
      if (a_(i, t) != 0 && mpz_cmpabs(a_(i, t).get_mpz_t(), best.get_mpz_t()) < 0) {
        best = abs(a_(i, t));
        bi = i;
        bj = t;
      }
    }
    for (std::size_t j = t + 1; j < a_.cols(); ++j) {
      if (a_(t, j) != 0 && mpz_cmpabs(a_(t, j).get_mpz_t(), best.get_mpz_t()) < 0) {
        best = abs(a_(t, j));
        bi = t;
        bj = j;
      }
    }
    swap_rows(t, bi, t);
    swap_cols(t, bj, t);
  }

  void swap_rows(std::size_t i, std::size_t k, std::size_t from_col) {
    if (i == k) return;
    for (std::size_t j = from_col; j < a_.cols(); ++j) a_(i, j).swap(a_(k, j));
  }
  void swap_cols(std::size_t j, std::size_t k, std::size_t from_row) {
    if (j == k) return;
    for (std::size_t i = from_row; i < a_.rows(); ++i) a_(i, j).swap(a_(i, k));
  }
  // row_i += q * row_k
  void add_row_multiple(std::size_t i, std::size_t k, const Integer& q,
                        std::size_t from_col) {
    for (std::size_t j = from_col; j < a_.cols(); ++j) {
      if (a_(k, j) != 0) a_(i, j) += q * a_(k, j);
    }
  }
  // col_j += q * col_k
  void add_col_multiple(std::size_t j, std::size_t k, const Integer& q,
                        std::size_t from_row) {
    for (std::size_t i = from_row; i < a_.rows(); ++i) {
      if (a_(i, k) != 0) a_(i, j) += q * a_(i, k);
    }
  }

  IntegerMatrix a_;
};

}  // namespace

SNFResult smith_normal_form(IntegerMatrix m) {
  Eliminator elim(std::move(m));
  std::vector<Integer> d = elim.diagonalize();
  // diag(a, b) is equivalent to diag(gcd, lcm); one sweep per position
  // produces the divisibility chain.
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[j] % d[i] == 0) continue;
      Integer g = gcd(d[i], d[j]);
      Integer l = (d[i] / g) * d[j];
      d[i] = g;
      d[j] = l;
    }
  }
  SNFResult out;
  out.rank = d.size();
  out.invariant_factors = std::move(d);
  return out;
}

}  // namespace milnorforge
