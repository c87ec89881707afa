#ifndef ELLWEYL_TYPES_HPP
#define ELLWEYL_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <gmpxx.h>

namespace ellweyl {

using Int = std::int64_t;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

using Rational = mpq_class;

/// Dense row-major matrix over Q. Only what exact elimination needs.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}

  static RationalMatrix identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static RationalMatrix from(const IntMatrix& m) {
    RationalMatrix r(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
    for (int i = 0; i < r.rows_; ++i)
      for (int j = 0; j < r.cols_; ++j) r(i, j) = mpz_class(std::to_string(m(i, j)));
    return r;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  const Rational& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

  void swap_rows(int i, int j) {
    for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void swap_cols(int i, int j) {
    for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }
  /// row(dst) += f * row(src)
  void add_row(int dst, int src, const Rational& f) {
    for (int c = 0; c < cols_; ++c) (*this)(dst, c) += f * (*this)(src, c);
  }
  void add_col(int dst, int src, const Rational& f) {
    for (int r = 0; r < rows_; ++r) (*this)(r, dst) += f * (*this)(r, src);
  }
  void scale_row(int i, const Rational& f) {
    for (int c = 0; c < cols_; ++c) (*this)(i, c) *= f;
  }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  RationalMatrix block(int row0, int col0, int nrows, int ncols) const {
    RationalMatrix b(nrows, ncols);
    for (int i = 0; i < nrows; ++i)
      for (int j = 0; j < ncols; ++j) b(i, j) = (*this)(row0 + i, col0 + j);
    return b;
  }
  RationalMatrix top_rows(int r) const { return block(0, 0, r, cols_); }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  friend RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("RationalMatrix: shape mismatch in product");
    RationalMatrix p(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        if (x(i, k) == 0) continue;
        for (int j = 0; j < y.cols_; ++j) p(i, j) += x(i, k) * y(k, j);
      }
    return p;
  }

  friend bool operator==(const RationalMatrix& x, const RationalMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

/// Thrown when a matrix fails the isometry certificate M^T G M = G.
class IsometryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when an input vector is not a root of the elliptic system.
class NotARootError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact conversion of an integral rational; throws std::domain_error if the
/// value is not an integer or does not fit.
inline Int to_int(const Rational& q) {
  if (q.get_den() != 1) throw std::domain_error("rational value is not an integer");
  if (!q.get_num().fits_slong_p()) throw std::domain_error("integer value out of range");
  return static_cast<Int>(q.get_num().get_si());
}

}  // namespace ellweyl

#endif  // ELLWEYL_TYPES_HPP
