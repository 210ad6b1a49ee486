#ifndef CURV_MATRIX_HPP
#define CURV_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "curv/rational.hpp"

namespace curv {

/// Dense matrix of rationals. Immutable after construction apart from the
/// entry accessors used while filling; all rank/kernel queries are const and
/// exact.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

  static Matrix from_rows(const std::vector<Vec>& rows);
  static Matrix from_cols(const std::vector<Vec>& cols, std::size_t dim);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  Matrix transposed() const;

  /// Exact rank over the rationals, fraction-free Bareiss elimination on the
  /// denominator-cleared integer matrix.
  std::size_t rank() const;

  /// Basis of the right null space; rank() + result.size() == cols().
  std::vector<Vec> kernel_basis() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> entries_;
};

/// True iff v is a rational linear combination of the given vectors.
bool in_span(const Vec& v, const std::vector<Vec>& basis);

/// Incremental row-echelon accumulator: feed vectors one at a time, each
/// either extends the rank or is reported dependent together with its
/// expansion in the previously inserted independent vectors. Shared down the
/// search tree by the matroid enumerator.
class EchelonState {
 public:
  explicit EchelonState(std::size_t dim) : dim_(dim) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

  /// Returns true and absorbs v if v is independent of the current rows.
  bool push(const Vec& v);

  /// Undo the most recent successful push.
  void pop();

  /// If v lies in the current span, fills coeffs with the coefficients of v
  /// on the pushed vectors (in push order) and returns true.
  bool express(const Vec& v, std::vector<Rational>& coeffs) const;

 private:
  struct Row {
    Vec reduced;                     // echelon form
    std::size_t pivot;               // pivot column
    std::vector<Rational> history;   // expansion of `reduced` in pushed vectors
  };
  std::size_t dim_;
  std::vector<Row> rows_;
};

}  // namespace curv

#endif
