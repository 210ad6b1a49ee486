#include "curv/matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace curv {

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c)
      throw std::invalid_argument("from_rows: ragged row lengths");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols, std::size_t dim) {
  Matrix m(dim, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != dim)
      throw std::invalid_argument("from_cols: column length mismatch");
    for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::size_t Matrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;

  // Clear denominators row by row; rank is unchanged.
  std::vector<Integer> a(rows_ * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Integer lcm = 1;
    for (std::size_t j = 0; j < cols_; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              at(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < cols_; ++j) {
      Rational scaled = at(i, j) * Rational(lcm);
      scaled.canonicalize();
      assert(scaled.get_den() == 1);
      a[i * cols_ + j] = scaled.get_num();
    }
  }

  auto e = [&](std::size_t i, std::size_t j) -> Integer& {
    return a[i * cols_ + j];
  };

  // Bareiss: after step k every entry is divisible by the previous pivot.
  std::size_t rank = 0;
  Integer prev_pivot = 1;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot_row = rank;
    while (pivot_row < rows_ && e(pivot_row, col) == 0) ++pivot_row;
    if (pivot_row == rows_) continue;
    if (pivot_row != rank)
      for (std::size_t j = col; j < cols_; ++j)
        std::swap(e(pivot_row, j), e(rank, j));
    const Integer pivot = e(rank, col);
    for (std::size_t i = rank + 1; i < rows_; ++i) {
      for (std::size_t j = col + 1; j < cols_; ++j) {
        Integer num = pivot * e(i, j) - e(i, col) * e(rank, j);
        mpz_divexact(e(i, j).get_mpz_t(), num.get_mpz_t(),
                     prev_pivot.get_mpz_t());
      }
      e(i, col) = 0;
    }
    prev_pivot = pivot;
    ++rank;
  }
  return rank;
}

std::vector<Vec> Matrix::kernel_basis() const {
  // Gauss-Jordan over Q; the matrices reaching here are desk-scale.
  std::vector<Vec> rows(rows_, Vec(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) rows[i][j] = at(i, j);

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
    std::size_t pr = r;
    while (pr < rows_ && rows[pr][col] == 0) ++pr;
    if (pr == rows_) continue;
    std::swap(rows[pr], rows[r]);
    Rational inv = rows[r][col];
    for (std::size_t j = col; j < cols_; ++j) rows[r][j] /= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || rows[i][col] == 0) continue;
      Rational f = rows[i][col];
      for (std::size_t j = col; j < cols_; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_col.push_back(col);
    ++r;
  }

  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivot_col) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols_, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = -rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_span(const Vec& v, const std::vector<Vec>& basis) {
  for (const auto& b : basis)
    if (b.size() != v.size())
      throw std::invalid_argument("in_span: vector length mismatch");
  if (is_zero(v)) return true;
  Matrix without = Matrix::from_rows(basis);
  std::vector<Vec> with_rows = basis;
  with_rows.push_back(v);
  return without.rank() == Matrix::from_rows(with_rows).rank();
}

bool EchelonState::push(const Vec& v) {
  assert(v.size() == dim_);
  Vec w = v;
  std::vector<Rational> hist(rows_.size() + 1, Rational(0));
  hist.back() = 1;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Row& row = rows_[k];
    if (w[row.pivot] == 0) continue;
    Rational f = w[row.pivot];  // row.reduced has pivot entry 1
    for (std::size_t j = 0; j < dim_; ++j) w[j] -= f * row.reduced[j];
    for (std::size_t h = 0; h < row.history.size(); ++h)
      hist[h] -= f * row.history[h];
  }
  std::size_t pivot = 0;
  while (pivot < dim_ && w[pivot] == 0) ++pivot;
  if (pivot == dim_) return false;
  Rational inv = w[pivot];
  for (auto& x : w) x /= inv;
  for (auto& x : hist) x /= inv;
  rows_.push_back(Row{std::move(w), pivot, std::move(hist)});
  return true;
}

void EchelonState::pop() {
  assert(!rows_.empty());
  rows_.pop_back();
}

bool EchelonState::express(const Vec& v, std::vector<Rational>& coeffs) const {
  assert(v.size() == dim_);
  Vec w = v;
  std::vector<Rational> acc(rows_.size(), Rational(0));
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Row& row = rows_[k];
    if (w[row.pivot] == 0) continue;
    Rational f = w[row.pivot];
    for (std::size_t j = 0; j < dim_; ++j) w[j] -= f * row.reduced[j];
    for (std::size_t h = 0; h < row.history.size(); ++h)
      acc[h] += f * row.history[h];
  }
  if (!is_zero(w)) return false;
  coeffs = std::move(acc);
  return true;
}

}  // namespace curv
